//! JSON documents for block families and direct-sum elements.
//!
//! ```text
//! {"blocks":[{"n":2,"m":3,"entries":[[row,col,[re_num,re_den,im_num,im_den]],...]}]}
//! ```
//!
//! Indices are 1-based, blocks appear in lexicographic `(n, m)` order and
//! entries in row-major order. A direct-sum component `x ∈ M_n` is written as
//! the block `(n, 1)`, i.e. `x ⊗ I_1`. Rational parts are JSON integers when
//! they fit in an `i64` and decimal strings otherwise.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::bialgebra::{BlockFamily, DirectSumElement};
use crate::error::{domain, Result};
use crate::matrix::SparseSquareMatrix;
use crate::scalar::ExactScalar;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BlockDoc {
    pub n: usize,
    pub m: usize,
    pub entries: Vec<(usize, usize, [Value; 4])>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BlocksDoc {
    pub blocks: Vec<BlockDoc>,
}

fn int_value(v: &BigInt) -> Value {
    match v.to_i64() {
        Some(small) => Value::from(small),
        None => Value::from(v.to_string()),
    }
}

fn parse_int(v: &Value) -> Result<BigInt> {
    match v {
        Value::Number(n) => n
            .as_i64()
            .map(BigInt::from)
            .ok_or_else(|| domain(format!("non-integer rational part {n}"))),
        Value::String(s) => s
            .parse()
            .map_err(|_| domain(format!("bad integer string {s:?}"))),
        other => Err(domain(format!("expected integer, got {other}"))),
    }
}

fn scalar_value(s: &ExactScalar) -> [Value; 4] {
    let [a, b, c, d] = s.to_parts();
    [int_value(&a), int_value(&b), int_value(&c), int_value(&d)]
}

fn parse_scalar(v: &[Value; 4]) -> Result<ExactScalar> {
    let [a, b, c, d] = [parse_int(&v[0])?, parse_int(&v[1])?, parse_int(&v[2])?, parse_int(&v[3])?];
    if b == BigInt::from(0) || d == BigInt::from(0) {
        return Err(domain("zero denominator"));
    }
    Ok(ExactScalar::new(BigRational::new(a, b), BigRational::new(c, d)))
}

pub fn block_doc(n: usize, m: usize, x: &SparseSquareMatrix) -> BlockDoc {
    BlockDoc {
        n,
        m,
        entries: x.entries().map(|(r, c, v)| (r, c, scalar_value(v))).collect(),
    }
}

fn block_matrix(doc: &BlockDoc) -> Result<SparseSquareMatrix> {
    let entries = doc
        .entries
        .iter()
        .map(|(r, c, v)| Ok((*r, *c, parse_scalar(v)?)))
        .collect::<Result<Vec<_>>>()?;
    SparseSquareMatrix::from_entries(doc.n * doc.m, entries)
}

pub fn block_family_doc(f: &BlockFamily) -> BlocksDoc {
    BlocksDoc {
        blocks: f.blocks().map(|((n, m), x)| block_doc(n, m, x)).collect(),
    }
}

pub fn direct_sum_doc(x: &DirectSumElement) -> BlocksDoc {
    BlocksDoc {
        blocks: x.components().map(|(n, c)| block_doc(n, 1, c)).collect(),
    }
}

pub fn block_family_to_json(f: &BlockFamily) -> String {
    serde_json::to_string(&block_family_doc(f)).expect("serializable")
}

pub fn direct_sum_to_json(x: &DirectSumElement) -> String {
    serde_json::to_string(&direct_sum_doc(x)).expect("serializable")
}

/// Parses a block-family document. The window is the largest index present.
pub fn block_family_from_json(s: &str) -> Result<BlockFamily> {
    let doc: BlocksDoc = serde_json::from_str(s).map_err(|e| domain(e.to_string()))?;
    let window = doc.blocks.iter().map(|b| b.n.max(b.m)).max().unwrap_or(1);
    let mut out = BlockFamily::new(window);
    for b in &doc.blocks {
        out.accumulate(b.n, b.m, block_matrix(b)?)?;
    }
    Ok(out)
}

/// Parses a direct-sum document; every block must have `m = 1`.
pub fn direct_sum_from_json(s: &str) -> Result<DirectSumElement> {
    let doc: BlocksDoc = serde_json::from_str(s).map_err(|e| domain(e.to_string()))?;
    let mut out = DirectSumElement::new();
    for b in &doc.blocks {
        if b.m != 1 {
            return Err(domain(format!("direct-sum component ({},{}) must have m = 1", b.n, b.m)));
        }
        out.add_component(block_matrix(b)?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bialgebra::delta;
    use proptest::prelude::*;

    #[test]
    fn delta_document_shape() {
        let x = DirectSumElement::unit(6, 2, 2).unwrap();
        let json = block_family_to_json(&delta(&x).unwrap());
        assert_eq!(
            json,
            concat!(
                r#"{"blocks":["#,
                r#"{"n":1,"m":6,"entries":[[2,2,[1,1,0,1]]]},"#,
                r#"{"n":2,"m":3,"entries":[[2,2,[1,1,0,1]]]},"#,
                r#"{"n":3,"m":2,"entries":[[2,2,[1,1,0,1]]]},"#,
                r#"{"n":6,"m":1,"entries":[[2,2,[1,1,0,1]]]}]}"#
            )
        );
    }

    #[test]
    fn big_parts_become_strings() {
        let big = BigInt::from(i64::MAX) * BigInt::from(4);
        let s = ExactScalar::new(BigRational::from_integer(big.clone()), BigRational::from_integer(0.into()));
        let x = DirectSumElement::single(SparseSquareMatrix::from_entries(1, [(1, 1, s.clone())]).unwrap());
        let json = direct_sum_to_json(&x);
        assert!(json.contains(&format!("\"{big}\"")));
        assert_eq!(direct_sum_from_json(&json).unwrap(), x);
    }

    #[test]
    fn rejects_malformed() {
        assert!(direct_sum_from_json(r#"{"blocks":[{"n":2,"m":2,"entries":[]}]}"#).is_err());
        assert!(block_family_from_json(r#"{"blocks":[{"n":2,"m":1,"entries":[[3,1,[1,1,0,1]]]}]}"#).is_err());
        assert!(block_family_from_json(r#"{"blocks":[{"n":1,"m":1,"entries":[[1,1,[1,0,0,1]]]}]}"#).is_err());
    }

    proptest! {
        #[test]
        fn block_family_round_trip(
            entries in proptest::collection::vec(
                (1usize..=3, 1usize..=3, 1usize..=9, 1usize..=9, -20i64..20, 1i64..7, -20i64..20, 1i64..7),
                0..12,
            )
        ) {
            let mut f = BlockFamily::new(3);
            for (n, m, r, c, a, b, x, y) in entries {
                let dim = n * m;
                let (r, c) = ((r - 1) % dim + 1, (c - 1) % dim + 1);
                let v = ExactScalar::from_parts(a, b, x, y);
                f.accumulate(n, m, SparseSquareMatrix::from_entries(dim, [(r, c, v)]).unwrap()).unwrap();
            }
            let back = block_family_from_json(&block_family_to_json(&f)).unwrap();
            prop_assert_eq!(back.blocks().collect::<Vec<_>>(), f.blocks().collect::<Vec<_>>());
        }
    }
}
