//! Tensor products of matrix algebras realized on a single flat index.
//!
//! `M_{d_1} ⊗ … ⊗ M_{d_k}` is stored as `M_{d_1⋯d_k}` through the mixed-radix
//! pairing `(i_1, …, i_k) ↦ ((i_1−1)d_2 + (i_2−1))d_3 + … + i_k`. For two
//! factors this is `(i, k) ↦ m(i−1) + k`, the same bijection that defines
//! `φ_{n,m}`, so `φ_{n,m}` leaves stored data untouched.

use crate::error::{domain, Result};
use crate::matrix::SparseSquareMatrix;

/// Flat 1-based index of a 1-based multi-index.
pub fn pair_index(dims: &[usize], idx: &[usize]) -> usize {
    debug_assert_eq!(dims.len(), idx.len());
    let mut flat = 0;
    for (&d, &i) in dims.iter().zip(idx) {
        debug_assert!(i >= 1 && i <= d);
        flat = flat * d + (i - 1);
    }
    flat + 1
}

/// Inverse of [`pair_index`].
pub fn split_index(dims: &[usize], flat: usize) -> Vec<usize> {
    let mut rest = flat - 1;
    let mut idx = vec![0; dims.len()];
    for (slot, &d) in idx.iter_mut().zip(dims).rev() {
        *slot = rest % d + 1;
        rest /= d;
    }
    idx
}

pub fn total_dim(dims: &[usize]) -> usize {
    dims.iter().product()
}

fn expect_dim(x: &SparseSquareMatrix, dim: usize, op: &str) -> Result<()> {
    if x.dim() != dim {
        return Err(domain(format!(
            "{op}: expected dimension {dim}, got {}",
            x.dim()
        )));
    }
    Ok(())
}

fn check_dims(dims: &[usize], op: &str) -> Result<()> {
    if dims.contains(&0) {
        return Err(domain(format!("{op}: tensor factor dimensions must be positive")));
    }
    Ok(())
}

/// Relabels every row and column index of `x` (a matrix over `from` legs)
/// through `map` into a matrix over `to` legs.
fn relabel<F>(from: &[usize], to: &[usize], x: &SparseSquareMatrix, map: F) -> Result<SparseSquareMatrix>
where
    F: Fn(&[usize]) -> Vec<usize>,
{
    let dst = |flat: usize| pair_index(to, &map(&split_index(from, flat)));
    SparseSquareMatrix::from_entries(
        total_dim(to),
        x.entries().map(|(r, c, v)| (dst(r), dst(c), v.clone())),
    )
}

/// `A ⊗ B` for `A ∈ M_n`, `B ∈ M_m`.
pub fn kron(n: usize, m: usize, a: &SparseSquareMatrix, b: &SparseSquareMatrix) -> Result<SparseSquareMatrix> {
    check_dims(&[n, m], "kron")?;
    expect_dim(a, n, "kron (left factor)")?;
    expect_dim(b, m, "kron (right factor)")?;
    let dims = [n, m];
    let mut out = Vec::with_capacity(a.nnz() * b.nnz());
    for (i, j, x) in a.entries() {
        for (k, l, y) in b.entries() {
            out.push((pair_index(&dims, &[i, k]), pair_index(&dims, &[j, l]), x * y));
        }
    }
    SparseSquareMatrix::from_entries(n * m, out)
}

/// The flip `τ_{n,m}: M_n ⊗ M_m → M_m ⊗ M_n`.
pub fn flip(n: usize, m: usize, x: &SparseSquareMatrix) -> Result<SparseSquareMatrix> {
    check_dims(&[n, m], "flip")?;
    expect_dim(x, n * m, "flip")?;
    relabel(&[n, m], &[m, n], x, |ik| vec![ik[1], ik[0]])
}

/// Which two legs of a triple tensor product an operator acts on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Legs {
    L12,
    L13,
    L23,
}

impl Legs {
    pub fn positions(self) -> (usize, usize) {
        match self {
            Legs::L12 => (0, 1),
            Legs::L13 => (0, 2),
            Legs::L23 => (1, 2),
        }
    }
}

/// Leg-numbered embedding of a two-leg operator into `M_n ⊗ M_m ⊗ M_l`,
/// acting as the identity on the remaining leg.
pub fn embed_legs(dims: (usize, usize, usize), legs: Legs, x: &SparseSquareMatrix) -> Result<SparseSquareMatrix> {
    let full = [dims.0, dims.1, dims.2];
    check_dims(&full, "embed_legs")?;
    let (p, q) = legs.positions();
    let spare = 3 - p - q;
    let pair = [full[p], full[q]];
    expect_dim(x, pair[0] * pair[1], "embed_legs")?;
    let mut out = Vec::with_capacity(x.nnz() * full[spare]);
    for (r, c, v) in x.entries() {
        let (rs, cs) = (split_index(&pair, r), split_index(&pair, c));
        for s in 1..=full[spare] {
            let mut row = [0; 3];
            let mut col = [0; 3];
            row[p] = rs[0];
            row[q] = rs[1];
            row[spare] = s;
            col[p] = cs[0];
            col[q] = cs[1];
            col[spare] = s;
            out.push((pair_index(&full, &row), pair_index(&full, &col), v.clone()));
        }
    }
    SparseSquareMatrix::from_entries(total_dim(&full), out)
}

/// Applies `φ_{b,c}` on leg `leg` of an operator over `dims`, the identity on
/// all other legs. `dims[leg]` must equal `b·c`; the result lives over `dims`
/// with that leg replaced by the pair `(b, c)`.
pub fn split_leg(dims: &[usize], leg: usize, split: (usize, usize), x: &SparseSquareMatrix) -> Result<SparseSquareMatrix> {
    check_dims(dims, "split_leg")?;
    let (b, c) = split;
    if leg >= dims.len() {
        return Err(domain(format!("split_leg: leg {leg} out of range")));
    }
    if b == 0 || c == 0 || dims[leg] != b * c {
        return Err(domain(format!(
            "split_leg: leg dimension {} is not {b}·{c}",
            dims[leg]
        )));
    }
    expect_dim(x, total_dim(dims), "split_leg")?;
    let mut to = Vec::with_capacity(dims.len() + 1);
    to.extend_from_slice(&dims[..leg]);
    to.extend([b, c]);
    to.extend_from_slice(&dims[leg + 1..]);
    relabel(dims, &to, x, |idx| {
        let t = idx[leg];
        let mut out = Vec::with_capacity(idx.len() + 1);
        out.extend_from_slice(&idx[..leg]);
        out.push((t - 1) / c + 1);
        out.push((t - 1) % c + 1);
        out.extend_from_slice(&idx[leg + 1..]);
        out
    })
}
