//! The multiplicative monoid `(ℕ, ×)` and the weakly coassociative system of
//! matrix algebras `{M_a, φ_{a,b}}` over it.

use std::fmt;
use std::time::Instant;

use num_traits::One;

use crate::bialgebra::phi;
use crate::error::{domain, Result};
use crate::limits::Limits;
use crate::matrix::{unit_positions, SparseSquareMatrix};
use crate::report::{params, Counterexample, Outcome, VerificationReport};
use crate::tensor::{kron, split_leg};

/// A positive integer under multiplication; the unit is 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MonoidElement(u64);

impl MonoidElement {
    pub const UNIT: MonoidElement = MonoidElement(1);

    pub fn new(value: u64) -> Result<Self> {
        if value == 0 {
            return Err(domain("monoid elements are positive integers"));
        }
        Ok(Self(value))
    }

    pub fn value(self) -> u64 {
        self.0
    }
}

impl fmt::Display for MonoidElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// All ordered pairs `(b, c)` with `bc = a`, sorted by `b`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactorizationSet {
    owner: MonoidElement,
    pairs: Vec<(MonoidElement, MonoidElement)>,
}

impl FactorizationSet {
    pub fn owner(&self) -> MonoidElement {
        self.owner
    }

    pub fn pairs(&self) -> &[(MonoidElement, MonoidElement)] {
        &self.pairs
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn contains(&self, b: u64, c: u64) -> bool {
        self.pairs.iter().any(|&(x, y)| x.0 == b && y.0 == c)
    }

    /// The pairs as plain `usize` dimensions.
    pub fn dims(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.pairs.iter().map(|&(b, c)| (b.0 as usize, c.0 as usize))
    }
}

/// Enumerates `{(b, c) : bc = a}` by pairing each divisor `b ≤ √a` with `a/b`.
pub fn factorizations(a: u64) -> Result<FactorizationSet> {
    let owner = MonoidElement::new(a)?;
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut b = 1u64;
    while b * b <= a {
        if a.is_multiple_of(b) {
            small.push(b);
            if b * b != a {
                large.push(a / b);
            }
        }
        b += 1;
    }
    let pairs = small
        .into_iter()
        .chain(large.into_iter().rev())
        .map(|b| (MonoidElement(b), MonoidElement(a / b)))
        .collect();
    Ok(FactorizationSet { owner, pairs })
}

fn positive(vals: &[u64]) -> Result<()> {
    if vals.contains(&0) {
        return Err(domain("monoid elements are positive integers"));
    }
    Ok(())
}

fn unit(n: usize, i: usize, j: usize) -> SparseSquareMatrix {
    SparseSquareMatrix::unit(n, i, j).expect("position from unit_positions")
}

/// `(id_a ⊗ φ_{b,c}) ∘ φ_{a,bc} = (φ_{a,b} ⊗ id_c) ∘ φ_{ab,c}` on every matrix
/// unit of `M_{abc}`.
pub fn check_wcs_coassoc(a: u64, b: u64, c: u64, limits: &Limits) -> Result<VerificationReport> {
    let started = Instant::now();
    positive(&[a, b, c])?;
    let product = a.saturating_mul(b).saturating_mul(c);
    limits.check_coassoc_product(product)?;
    let (a, b, c) = (a as usize, b as usize, c as usize);
    let n = a * b * c;
    limits.check_dim("M_abc", n)?;
    let outcome = coassoc_outcome(a, b, c)?;
    Ok(VerificationReport::single(
        "wcs_coassoc",
        params([("a", a), ("b", b), ("c", c)]),
        outcome,
        started,
    ))
}

pub(crate) fn coassoc_outcome(a: usize, b: usize, c: usize) -> Result<Outcome> {
    let n = a * b * c;
    for (i, j) in unit_positions(n) {
        let x = unit(n, i, j);
        let left = split_leg(&[a, b * c], 1, (b, c), &phi(a, b * c, &x)?)?;
        let right = split_leg(&[a * b, c], 0, (a, b), &phi(a * b, c, &x)?)?;
        if left != right {
            return Ok(Err(Counterexample::new(
                format!("coassociativity fails on E^({n})_{{{i},{j}}}"),
                vec![i, j],
                left,
                right,
            )));
        }
    }
    Ok(Ok(()))
}

/// `φ_{1,a}(x) = I_1 ⊗ x` and `φ_{a,1}(x) = x ⊗ I_1` on every matrix unit of `M_a`.
pub fn check_wcs_unit(a: u64, limits: &Limits) -> Result<VerificationReport> {
    let started = Instant::now();
    positive(&[a])?;
    let n = a as usize;
    limits.check_dim("M_a", n)?;
    let one = SparseSquareMatrix::identity(1)?;
    let mut outcome = Ok(());
    for (i, j) in unit_positions(n) {
        let x = unit(n, i, j);
        let checks = [
            ("φ_{1,a}(x) ≠ I_1⊗x", phi(1, n, &x)?, kron(1, n, &one, &x)?),
            ("φ_{a,1}(x) ≠ x⊗I_1", phi(n, 1, &x)?, kron(n, 1, &x, &one)?),
        ];
        if let Some((what, l, r)) = checks.into_iter().find(|(_, l, r)| l != r) {
            outcome = Err(Counterexample::new(format!("{what} at E^({n})_{{{i},{j}}}"), vec![i, j], l, r));
            break;
        }
    }
    Ok(VerificationReport::single("wcs_unit", params([("a", n)]), outcome, started))
}

/// `(M_1, φ_{1,1}, ε_1)` is a counital bialgebra: `φ_{1,1}` is the identity
/// of `ℂ ≅ ℂ⊗ℂ` and `ε_1` is the identity scalar map, so both counit laws
/// reduce to `ε_1(1)·1 = 1`.
pub fn check_unit_bialgebra() -> Result<VerificationReport> {
    let started = Instant::now();
    let one = SparseSquareMatrix::identity(1)?;
    let image = phi(1, 1, &one)?;
    let eps = image.get(1, 1);
    let outcome = if image.is_identity() && eps.is_one() {
        Ok(())
    } else {
        Err(Counterexample::new("M_1 counit law", vec![1, 1], image, one))
    };
    Ok(VerificationReport::single("wcs_unit_bialgebra", params([]), outcome, started))
}
