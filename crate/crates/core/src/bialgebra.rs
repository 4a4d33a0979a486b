//! The bialgebra `(M_*(ℂ), Δ_φ, ε)` on truncated direct sums of matrix
//! algebras.
//!
//! `Δ_φ` takes values in the multiplier algebra `∏_{n,m} M_n ⊗ M_m`; a
//! [`BlockFamily`] holds the blocks of such an element inside a finite window.
//! Every identity checked here is blockwise, so the truncation is exact.

use std::collections::BTreeMap;
use std::time::Instant;

use num_traits::Zero;

use crate::error::{domain, Result};
use crate::limits::Limits;
use crate::matrix::{unit_positions, SparseSquareMatrix};
use crate::monoid::{coassoc_outcome, factorizations};
use crate::report::{params, Counterexample, VerificationReport};
use crate::scalar::ExactScalar;
use crate::tensor::{flip, split_index, split_leg};

/// `φ_{n,m}: M_{nm} → M_n ⊗ M_m`,
/// `E^{(nm)}_{m(i−1)+j, m(i′−1)+j′} ↦ E^{(n)}_{i,i′} ⊗ E^{(m)}_{j,j′}`.
pub fn phi(n: usize, m: usize, x: &SparseSquareMatrix) -> Result<SparseSquareMatrix> {
    split_leg(&[n * m], 0, (n, m), x)
}

/// `φ^{op}_{a,b} = τ_{a,b} ∘ φ_{a,b}: M_{ab} → M_b ⊗ M_a`.
pub fn phi_op(a: usize, b: usize, x: &SparseSquareMatrix) -> Result<SparseSquareMatrix> {
    flip(a, b, &phi(a, b, x)?)
}

/// A finitely supported element of `M_1 ⊕ M_2 ⊕ M_3 ⊕ ⋯`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct DirectSumElement {
    components: BTreeMap<usize, SparseSquareMatrix>,
}

impl DirectSumElement {
    pub fn new() -> Self {
        Self::default()
    }

    /// The element with the single component `x ∈ M_{dim x}`.
    pub fn single(x: SparseSquareMatrix) -> Self {
        let mut out = Self::new();
        out.add_component(x);
        out
    }

    /// `E^{(n)}_{i,j}` as an element of the direct sum.
    pub fn unit(n: usize, i: usize, j: usize) -> Result<Self> {
        Ok(Self::single(SparseSquareMatrix::unit(n, i, j)?))
    }

    /// `λ ∈ M_1(ℂ) = ℂ`.
    pub fn scalar(lambda: ExactScalar) -> Self {
        Self::single(
            SparseSquareMatrix::from_entries(1, [(1, 1, lambda)]).expect("1×1 entry"),
        )
    }

    /// Adds `x` to the component of matching dimension.
    pub fn add_component(&mut self, x: SparseSquareMatrix) {
        let n = x.dim();
        let sum = match self.components.remove(&n) {
            Some(old) => old.add(&x).expect("same dimension"),
            None => x,
        };
        if !sum.is_zero() {
            self.components.insert(n, sum);
        }
    }

    pub fn component(&self, n: usize) -> Option<&SparseSquareMatrix> {
        self.components.get(&n)
    }

    pub fn components(&self) -> impl Iterator<Item = (usize, &SparseSquareMatrix)> + '_ {
        self.components.iter().map(|(&n, x)| (n, x))
    }

    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.components.keys().copied()
    }

    pub fn is_zero(&self) -> bool {
        self.components.is_empty()
    }

    /// Componentwise product; components in different summands annihilate.
    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::new();
        for (n, x) in &self.components {
            if let Some(y) = other.components.get(n) {
                out.add_component(x.mul(y).expect("same dimension"));
            }
        }
        out
    }

    pub fn adjoint(&self) -> Self {
        Self {
            components: self.components.iter().map(|(&n, x)| (n, x.adjoint())).collect(),
        }
    }
}

/// Blocks `(n, m) ↦ X_{n,m} ∈ M_n ⊗ M_m` of an element of
/// `∏_{n,m} M_n ⊗ M_m`, restricted to `n, m ≤ window`. Absent blocks are zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockFamily {
    window: usize,
    blocks: BTreeMap<(usize, usize), SparseSquareMatrix>,
}

impl BlockFamily {
    pub fn new(window: usize) -> Self {
        Self {
            window,
            blocks: BTreeMap::new(),
        }
    }

    /// Materializes every block `(n, m)` with `n, m ≤ window` from `generator`.
    pub fn from_generator<F>(window: usize, generator: F) -> Result<Self>
    where
        F: Fn(usize, usize) -> Result<SparseSquareMatrix>,
    {
        let mut out = Self::new(window);
        for n in 1..=window {
            for m in 1..=window {
                out.accumulate(n, m, generator(n, m)?)?;
            }
        }
        Ok(out)
    }

    pub fn window(&self) -> usize {
        self.window
    }

    /// Adds `x` into block `(n, m)`.
    pub fn accumulate(&mut self, n: usize, m: usize, x: SparseSquareMatrix) -> Result<()> {
        if n == 0 || m == 0 || x.dim() != n * m {
            return Err(domain(format!(
                "block ({n},{m}) needs dimension {}, got {}",
                n * m,
                x.dim()
            )));
        }
        if n > self.window || m > self.window {
            return Err(domain(format!(
                "block ({n},{m}) lies outside window {}",
                self.window
            )));
        }
        let sum = match self.blocks.remove(&(n, m)) {
            Some(old) => old.add(&x)?,
            None => x,
        };
        if !sum.is_zero() {
            self.blocks.insert((n, m), sum);
        }
        Ok(())
    }

    pub fn block(&self, n: usize, m: usize) -> Option<&SparseSquareMatrix> {
        self.blocks.get(&(n, m))
    }

    /// Nonzero blocks in lexicographic order of `(n, m)`.
    pub fn blocks(&self) -> impl Iterator<Item = ((usize, usize), &SparseSquareMatrix)> + '_ {
        self.blocks.iter().map(|(&k, x)| (k, x))
    }

    /// The extended flip, blockwise: block `(m, n)` of the result is
    /// `τ_{n,m}` of block `(n, m)`.
    pub fn flipped(&self) -> Result<Self> {
        let mut out = Self::new(self.window);
        for (&(n, m), x) in &self.blocks {
            out.accumulate(m, n, flip(n, m, x)?)?;
        }
        Ok(out)
    }

    /// `(ε ⊗ id)`: only blocks `(1, c)` survive, landing in `M_c`.
    pub fn counit_left(&self) -> DirectSumElement {
        self.collapse(0)
    }

    /// `(id ⊗ ε)`: only blocks `(b, 1)` survive, landing in `M_b`.
    pub fn counit_right(&self) -> DirectSumElement {
        self.collapse(1)
    }

    fn collapse(&self, leg: usize) -> DirectSumElement {
        let mut out = DirectSumElement::new();
        for (&(n, m), x) in &self.blocks {
            let dims = [n, m];
            let (killed, kept) = (dims[leg], dims[1 - leg]);
            let mut entries = Vec::with_capacity(x.nnz());
            for (r, c, v) in x.entries() {
                let (ri, ci) = (split_index(&dims, r), split_index(&dims, c));
                let eps = counit_of_unit(killed, ri[leg], ci[leg]);
                if !eps.is_zero() {
                    entries.push((ri[1 - leg], ci[1 - leg], &eps * v));
                }
            }
            out.add_component(
                SparseSquareMatrix::from_entries(kept, entries).expect("indices from block"),
            );
        }
        out
    }
}

/// `ε(E^{(n)}_{i,j})`: the identity on `M_1`, zero on every `M_n`, `n ≥ 2`.
fn counit_of_unit(n: usize, i: usize, j: usize) -> ExactScalar {
    if n == 1 && i == 1 && j == 1 {
        ExactScalar::from_int(1)
    } else {
        ExactScalar::zero()
    }
}

/// `Δ_φ(x) = Σ_{ml = n} φ_{m,l}(x_n)` summed over the support of `x`.
pub fn delta(x: &DirectSumElement) -> Result<BlockFamily> {
    let window = x.support().max().unwrap_or(1);
    let mut out = BlockFamily::new(window);
    for (n, xn) in x.components() {
        for (b, c) in factorizations(n as u64)?.dims() {
            out.accumulate(b, c, phi(b, c, xn)?)?;
        }
    }
    Ok(out)
}

/// `Δ^{op}_φ(x)`: block `(b, c)` collects `φ^{op}_{c,b}(x_n)` for `cb = n`.
pub fn delta_op(x: &DirectSumElement) -> Result<BlockFamily> {
    let window = x.support().max().unwrap_or(1);
    let mut out = BlockFamily::new(window);
    for (n, xn) in x.components() {
        for (c, b) in factorizations(n as u64)?.dims() {
            out.accumulate(b, c, phi_op(c, b, xn)?)?;
        }
    }
    Ok(out)
}

/// `ε(x)`: the `M_1` component, zero when absent.
pub fn counit(x: &DirectSumElement) -> ExactScalar {
    x.component(1).map(|c| c.get(1, 1)).unwrap_or_default()
}

/// `(ε ⊗ id)Δ(x) = x = (id ⊗ ε)Δ(x)` for every matrix unit of every `M_n`,
/// `n ≤ n_max`.
pub fn verify_counit_law(n_max: usize, limits: &Limits) -> Result<VerificationReport> {
    let started = Instant::now();
    if n_max == 0 {
        return Err(domain("n_max must be at least 1"));
    }
    limits.check_dim("M_n", n_max)?;
    let mut outcome = Ok(());
    'outer: for n in 1..=n_max {
        for (i, j) in unit_positions(n) {
            let x = DirectSumElement::unit(n, i, j)?;
            let d = delta(&x)?;
            for (side, collapsed) in [("(ε⊗id)Δ", d.counit_left()), ("(id⊗ε)Δ", d.counit_right())] {
                if collapsed != x {
                    outcome = Err(Counterexample::new(
                        format!("{side}(x) ≠ x for x = E^({n})_{{{i},{j}}}"),
                        vec![n, i, j],
                        format!("{collapsed:?}"),
                        format!("{x:?}"),
                    ));
                    break 'outer;
                }
            }
        }
    }
    Ok(VerificationReport::single("counit_law", params([("n_max", n_max)]), outcome, started))
}

/// Coassociativity of `Δ_φ`, via the blockwise weak coassociativity of
/// `φ` for every `(a, b, c)` with `abc ≤ n_max`.
pub fn verify_coassociativity(n_max: usize, limits: &Limits) -> Result<VerificationReport> {
    let started = Instant::now();
    if n_max == 0 {
        return Err(domain("n_max must be at least 1"));
    }
    limits.check_coassoc_product(n_max as u64)?;
    limits.check_dim("M_abc", n_max)?;
    let mut outcome = Ok(());
    'outer: for a in 1..=n_max {
        for b in 1..=n_max / a {
            for c in 1..=n_max / (a * b) {
                if let Err(mut cex) = coassoc_outcome(a, b, c)? {
                    cex.description = format!("(a,b,c)=({a},{b},{c}): {}", cex.description);
                    outcome = Err(cex);
                    break 'outer;
                }
            }
        }
    }
    Ok(VerificationReport::single(
        "coassociativity",
        params([("n_max", n_max)]),
        outcome,
        started,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::mat_unit;
    use crate::tensor::kron;

    fn e(n: usize, i: usize, j: usize) -> SparseSquareMatrix {
        mat_unit(n, i, j).unwrap()
    }

    fn ee(n: usize, a: (usize, usize), m: usize, b: (usize, usize)) -> SparseSquareMatrix {
        kron(n, m, &e(n, a.0, a.1), &e(m, b.0, b.1)).unwrap()
    }

    fn id(n: usize) -> SparseSquareMatrix {
        SparseSquareMatrix::identity(n).unwrap()
    }

    #[test]
    fn phi_examples() {
        assert_eq!(phi(2, 3, &e(6, 2, 2)).unwrap(), ee(2, (1, 1), 3, (2, 2)));
        // 3(i−1)+j = 2 → (1,2); = 5 → (2,2)
        assert_eq!(phi(2, 3, &e(6, 2, 5)).unwrap(), ee(2, (1, 2), 3, (2, 2)));
        let x = e(4, 3, 1);
        assert_eq!(phi(4, 1, &x).unwrap(), x);
        assert!(phi(2, 3, &e(5, 1, 1)).is_err());
    }

    #[test]
    fn phi_op_examples() {
        // φ(3,2,E_{2,2}) = E^{(3)}_{1,1}⊗E^{(2)}_{2,2}, flipped
        assert_eq!(phi_op(3, 2, &e(6, 2, 2)).unwrap(), ee(2, (2, 2), 3, (1, 1)));
        let x = e(3, 1, 3);
        assert_eq!(phi_op(1, 3, &x).unwrap(), x);
    }

    #[test]
    fn phi_is_unital_star_homomorphism() {
        for nm in 1..=36usize {
            for (n, m) in factorizations(nm as u64).unwrap().dims() {
                let units: Vec<_> = unit_positions(nm).map(|(i, j)| e(nm, i, j)).collect();
                for x in &units {
                    let px = phi(n, m, x).unwrap();
                    assert_eq!(phi(n, m, &x.adjoint()).unwrap(), px.adjoint());
                    assert_eq!(
                        phi_op(n, m, &x.adjoint()).unwrap(),
                        phi_op(n, m, x).unwrap().adjoint()
                    );
                }
                let images: Vec<_> = units.iter().map(|x| phi(n, m, x).unwrap()).collect();
                for (x, px) in units.iter().zip(&images) {
                    for (y, py) in units.iter().zip(&images) {
                        assert_eq!(phi(n, m, &x.mul(y).unwrap()).unwrap(), px.mul(py).unwrap());
                    }
                }
            }
        }
        for nm in 1..=64usize {
            for (n, m) in factorizations(nm as u64).unwrap().dims() {
                assert_eq!(phi(n, m, &id(nm)).unwrap(), kron(n, m, &id(n), &id(m)).unwrap());
            }
        }
    }

    #[test]
    fn delta_of_e22_in_m6() {
        let x = DirectSumElement::unit(6, 2, 2).unwrap();
        let d = delta(&x).unwrap();
        let expect: Vec<((usize, usize), SparseSquareMatrix)> = vec![
            ((1, 6), kron(1, 6, &id(1), &e(6, 2, 2)).unwrap()),
            ((2, 3), ee(2, (1, 1), 3, (2, 2))),
            ((3, 2), ee(3, (1, 1), 2, (2, 2))),
            ((6, 1), kron(6, 1, &e(6, 2, 2), &id(1)).unwrap()),
        ];
        let got: Vec<_> = d.blocks().map(|(k, v)| (k, v.clone())).collect();
        assert_eq!(got, expect);
        let op = delta_op(&x).unwrap();
        assert_eq!(op.block(2, 3).unwrap(), &ee(2, (2, 2), 3, (1, 1)));
        assert_ne!(d, op);
    }

    #[test]
    fn delta_of_scalar_and_prime() {
        let lambda = ExactScalar::from_parts(3, 4, -1, 2);
        let x = DirectSumElement::scalar(lambda.clone());
        let d = delta(&x).unwrap();
        assert_eq!(d.blocks().count(), 1);
        assert_eq!(d.block(1, 1).unwrap().get(1, 1), lambda);
        assert_eq!(delta_op(&x).unwrap(), d);

        let d5 = delta(&DirectSumElement::unit(5, 1, 2).unwrap()).unwrap();
        let keys: Vec<_> = d5.blocks().map(|(k, _)| k).collect();
        assert_eq!(keys, vec![(1, 5), (5, 1)]);
        assert_eq!(d5.block(1, 5).unwrap(), &e(5, 1, 2));
        assert_eq!(d5.block(5, 1).unwrap(), &e(5, 1, 2));
    }

    #[test]
    fn counit_examples() {
        assert!(counit(&DirectSumElement::unit(6, 2, 2).unwrap()).is_zero());
        let lambda = ExactScalar::from_parts(-2, 3, 1, 1);
        let mut x = DirectSumElement::scalar(lambda.clone());
        assert_eq!(counit(&x), lambda);
        x.add_component(e(2, 1, 1));
        assert_eq!(counit(&x), lambda);
    }

    #[test]
    fn delta_is_blockwise_multiplicative() {
        for n in 1..=12usize {
            let units: Vec<_> = unit_positions(n).map(|(i, j)| DirectSumElement::unit(n, i, j).unwrap()).collect();
            for x in &units {
                for y in &units {
                    let dxy = delta(&x.mul(y)).unwrap();
                    let (dx, dy) = (delta(x).unwrap(), delta(y).unwrap());
                    for (b, c) in factorizations(n as u64).unwrap().dims() {
                        let lhs = dxy.block(b, c).cloned().unwrap_or_else(|| SparseSquareMatrix::zero(n).unwrap());
                        let rhs = dx.block(b, c).unwrap().mul(dy.block(b, c).unwrap()).unwrap();
                        assert_eq!(lhs, rhs);
                    }
                }
            }
        }
    }

    #[test]
    fn delta_op_is_extended_flip_of_delta() {
        for n in 1..=12usize {
            for (i, j) in unit_positions(n) {
                let x = DirectSumElement::unit(n, i, j).unwrap();
                assert_eq!(delta_op(&x).unwrap(), delta(&x).unwrap().flipped().unwrap());
            }
        }
    }

    #[test]
    fn counit_and_coassociativity_small() {
        let limits = Limits::default();
        assert!(verify_counit_law(1, &limits).unwrap().pass);
        assert!(verify_counit_law(6, &limits).unwrap().pass);
        assert!(verify_coassociativity(1, &limits).unwrap().pass);
        assert!(verify_coassociativity(12, &limits).unwrap().pass);
        assert!(verify_counit_law(0, &limits).is_err());
    }

    #[test]
    fn block_family_rejects_bad_blocks() {
        let mut f = BlockFamily::new(3);
        assert!(f.accumulate(2, 3, e(5, 1, 1)).is_err());
        assert!(f.accumulate(4, 1, e(4, 1, 1)).is_err());
        assert!(f.accumulate(2, 3, e(6, 1, 1)).is_ok());
    }
}
