//! The braid operator `C = T Π(R)` on a truncated block representation.
//!
//! `H = ⊕_{n ∈ dims} ℂ^n` with `M_n` acting on its own summand. Basis vectors
//! of `H` are pairs `(n, i)`, ordered by summand then inner index; `H^{⊗k}`
//! uses the lexicographic order on `k`-tuples of those pairs.
//!
//! The far-commutation relation checked here is `C_i C_j = C_j C_i` for
//! `|i − j| ≥ 2`.

use std::time::Instant;

use crate::bialgebra::BlockFamily;
use crate::error::{domain, Result};
use crate::limits::Limits;
use crate::matrix::SparseSquareMatrix;
use crate::perm::GridPermutation;
use crate::report::{params, Counterexample, Outcome, VerificationReport};
use crate::rmatrix::{chi, r_family_window};
use crate::tensor::{kron, split_index};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RepSpace {
    dims: Vec<usize>,
    total_dim: usize,
}

impl RepSpace {
    pub fn new(dims: Vec<usize>) -> Result<Self> {
        if dims.is_empty() {
            return Err(domain("representation space needs at least one summand"));
        }
        if dims[0] == 0 || dims.windows(2).any(|w| w[0] >= w[1]) {
            return Err(domain(format!("summand dims must be positive and strictly increasing, got {dims:?}")));
        }
        let total_dim = dims.iter().sum();
        Ok(Self { dims, total_dim })
    }

    /// `{1, …, n}`.
    pub fn upto(n: usize) -> Result<Self> {
        Self::new((1..=n).collect())
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn total_dim(&self) -> usize {
        self.total_dim
    }

    /// Position of the basis vector `(n, i)` in `1..=total_dim`.
    pub fn basis_index(&self, n: usize, i: usize) -> Result<usize> {
        let mut offset = 0;
        for &d in &self.dims {
            if d == n {
                if i == 0 || i > n {
                    return Err(domain(format!("inner index {i} out of range for summand {n}")));
                }
                return Ok(offset + i);
            }
            offset += d;
        }
        Err(domain(format!("{n} is not a summand of {:?}", self.dims)))
    }

    /// Inverse of [`RepSpace::basis_index`].
    pub fn basis_label(&self, index: usize) -> Result<(usize, usize)> {
        let mut offset = 0;
        for &d in &self.dims {
            if index > offset && index <= offset + d {
                return Ok((d, index - offset));
            }
            offset += d;
        }
        Err(domain(format!("basis index {index} out of range 1..={}", self.total_dim)))
    }
}

/// `Π(x)` on `H ⊗ H` for a block family `x` whose window covers the space.
pub fn represent(space: &RepSpace, family: &BlockFamily) -> Result<SparseSquareMatrix> {
    let d = space.total_dim;
    let mut entries = Vec::new();
    for &n in space.dims() {
        for &m in space.dims() {
            let Some(block) = family.block(n, m) else { continue };
            for (r, c, v) in block.entries() {
                let (ri, rj) = (split_index(&[n, m], r), split_index(&[n, m], c));
                let row = (space.basis_index(n, ri[0])? - 1) * d + space.basis_index(m, ri[1])?;
                let col = (space.basis_index(n, rj[0])? - 1) * d + space.basis_index(m, rj[1])?;
                entries.push((row, col, v.clone()));
            }
        }
    }
    SparseSquareMatrix::from_entries(d * d, entries)
}

/// The flip `T` on `H ⊗ H`.
pub fn flip_operator(space: &RepSpace) -> Result<SparseSquareMatrix> {
    let d = space.total_dim;
    Ok(GridPermutation::from_fn(&[d, d], |x| vec![x[1], x[0]])?.to_matrix())
}

#[derive(Debug, Clone)]
pub struct BraidOperator {
    space: RepSpace,
    matrix: SparseSquareMatrix,
}

impl BraidOperator {
    pub fn space(&self) -> &RepSpace {
        &self.space
    }

    pub fn matrix(&self) -> &SparseSquareMatrix {
        &self.matrix
    }
}

/// `C = T Π(R)`, assembled from the R-matrix blocks and the flip.
pub fn build_c(space: &RepSpace, limits: &Limits) -> Result<BraidOperator> {
    let d = space.total_dim;
    limits.check_dim("H⊗H", d * d)?;
    let window = *space.dims().last().expect("nonempty");
    let pi_r = represent(space, &r_family_window(window)?)?;
    Ok(BraidOperator {
        space: space.clone(),
        matrix: flip_operator(space)?.mul(&pi_r)?,
    })
}

/// `C` as a permutation of basis pairs, straight from
/// `(n,i) ⊗ (m,j) ↦ (m,j̲) ⊗ (n,i̲)` with `(i̲,j̲) = χ_{n,m}(i,j)`.
pub fn c_permutation(space: &RepSpace) -> Result<GridPermutation> {
    let d = space.total_dim;
    GridPermutation::from_fn(&[d, d], |x| {
        let (n, i) = space.basis_label(x[0]).expect("in range");
        let (m, j) = space.basis_label(x[1]).expect("in range");
        let (i2, j2) = chi(n, m, i, j).expect("in range");
        vec![
            space.basis_index(m, j2).expect("in range"),
            space.basis_index(n, i2).expect("in range"),
        ]
    })
}

fn check_position(k: usize, i: usize) -> Result<()> {
    if k < 2 || i == 0 || i >= k {
        return Err(domain(format!("C_{i} needs 1 ≤ i ≤ k−1 with k = {k}")));
    }
    Ok(())
}

fn power_dim(space: &RepSpace, k: usize, limits: &Limits) -> Result<usize> {
    let dim = (space.total_dim as u128).checked_pow(k as u32).unwrap_or(u128::MAX);
    let dim = usize::try_from(dim).unwrap_or(usize::MAX);
    limits.check_dim("H^⊗k", dim)?;
    Ok(dim)
}

/// `C_i = I^{⊗(i−1)} ⊗ C ⊗ I^{⊗(k−i−1)}` on `H^{⊗k}`.
pub fn c_i(space: &RepSpace, k: usize, i: usize, limits: &Limits) -> Result<SparseSquareMatrix> {
    check_position(k, i)?;
    power_dim(space, k, limits)?;
    let c = build_c(space, limits)?;
    c_i_from(space, k, i, c.matrix())
}

fn c_i_from(space: &RepSpace, k: usize, i: usize, c: &SparseSquareMatrix) -> Result<SparseSquareMatrix> {
    let d = space.total_dim;
    let before = d.pow(i as u32 - 1);
    let after = d.pow((k - i - 1) as u32);
    let right = kron(d * d, after, c, &SparseSquareMatrix::identity(after)?)?;
    kron(before, d * d * after, &SparseSquareMatrix::identity(before)?, &right)
}

/// `C` acting on slots `i, i+1` of `k`-tuples.
fn c_i_permutation(space: &RepSpace, k: usize, i: usize, c: &GridPermutation) -> Result<GridPermutation> {
    check_position(k, i)?;
    let d = space.total_dim;
    GridPermutation::from_fn(&vec![d; k], |x| {
        let mut y = x.to_vec();
        let img = c.apply(&[x[i - 1], x[i]]).expect("in range");
        y[i - 1] = img[0];
        y[i] = img[1];
        y
    })
}

struct Generators {
    dims: Vec<usize>,
    perms: Vec<GridPermutation>,
    matrices: Vec<SparseSquareMatrix>,
}

impl Generators {
    fn new(space: &RepSpace, k: usize, limits: &Limits) -> Result<Self> {
        if k < 2 {
            return Err(domain("tensor power must be at least 2"));
        }
        power_dim(space, k, limits)?;
        let c = build_c(space, limits)?;
        let cp = c_permutation(space)?;
        let mut perms = Vec::new();
        let mut matrices = Vec::new();
        for i in 1..k {
            perms.push(c_i_permutation(space, k, i, &cp)?);
            matrices.push(c_i_from(space, k, i, c.matrix())?);
        }
        Ok(Self {
            dims: vec![space.total_dim; k],
            perms,
            matrices,
        })
    }

    /// Product `C_{w_1} C_{w_2} ⋯` along a word, both routes.
    fn word(&self, w: &[usize]) -> Result<(GridPermutation, SparseSquareMatrix)> {
        let mut p = GridPermutation::identity(&self.dims)?;
        let mut m = SparseSquareMatrix::identity(p.len())?;
        for &i in w {
            p = p.compose(&self.perms[i - 1])?;
            m = m.mul(&self.matrices[i - 1])?;
        }
        Ok((p, m))
    }

    fn compare(&self, what: String, u: &[usize], v: &[usize]) -> Result<(Outcome, Outcome)> {
        let (pu, mu) = self.word(u)?;
        let (pv, mv) = self.word(v)?;
        let perm = match pu.first_difference(&pv) {
            None => Ok(()),
            Some((at, l, r)) => Err(Counterexample::new(
                format!("{what}: images of basis tuple differ"),
                at,
                format!("{l:?}"),
                format!("{r:?}"),
            )),
        };
        let matrix = if mu == mv {
            Ok(())
        } else {
            let (r, c) = mu
                .entries()
                .chain(mv.entries())
                .map(|(r, c, _)| (c, r))
                .filter(|&(c, r)| mu.get(r, c) != mv.get(r, c))
                .min()
                .map(|(c, r)| (r, c))
                .expect("unequal matrices differ somewhere");
            let mut idx = split_index(&self.dims, r);
            idx.extend(split_index(&self.dims, c));
            Err(Counterexample::new(
                format!("{what}: entry differs"),
                idx,
                mu.get(r, c),
                mv.get(r, c),
            ))
        };
        Ok((perm, matrix))
    }
}

fn first_failure(slot: &mut Outcome, next: Outcome) {
    if slot.is_ok() {
        *slot = next;
    }
}

fn space_params(space: &RepSpace) -> String {
    space
        .dims()
        .iter()
        .map(|d| d.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

fn braid_report(name: &str, space: &RepSpace, k: usize, perm: Outcome, matrix: Outcome, started: Instant) -> VerificationReport {
    let mut report = VerificationReport::dual(
        name,
        params([("k", k), ("total_dim", space.total_dim)]),
        perm,
        matrix,
        started,
    );
    if let Some(c) = &mut report.counterexample {
        c.description = format!("space {{{}}}: {}", space_params(space), c.description);
    }
    report
}

/// `C_i C_{i+1} C_i = C_{i+1} C_i C_{i+1}` for `1 ≤ i ≤ k−2` and
/// `C_i C_j = C_j C_i` for `|i − j| ≥ 2`, on `H^{⊗k}`.
pub fn verify_braid_relations(space: &RepSpace, k: usize, limits: &Limits) -> Result<VerificationReport> {
    let started = Instant::now();
    let gens = Generators::new(space, k, limits)?;
    let (mut perm, mut matrix) = (Ok(()), Ok(()));
    for i in 1..k.saturating_sub(1) {
        let (p, m) = gens.compare(
            format!("C_{i} C_{} C_{i} ≠ C_{} C_{i} C_{}", i + 1, i + 1, i + 1),
            &[i, i + 1, i],
            &[i + 1, i, i + 1],
        )?;
        first_failure(&mut perm, p);
        first_failure(&mut matrix, m);
    }
    for i in 1..k {
        for j in i + 2..k {
            let (p, m) = gens.compare(format!("C_{i} C_{j} ≠ C_{j} C_{i}"), &[i, j], &[j, i])?;
            first_failure(&mut perm, p);
            first_failure(&mut matrix, m);
        }
    }
    Ok(braid_report("braid_relations", space, k, perm, matrix, started))
}

/// `C² = I` on `H ⊗ H`.
pub fn verify_involution(space: &RepSpace, limits: &Limits) -> Result<VerificationReport> {
    let started = Instant::now();
    let gens = Generators::new(space, 2, limits)?;
    let (perm, matrix) = gens.compare("C² ≠ I".into(), &[1, 1], &[])?;
    Ok(braid_report("involution", space, 2, perm, matrix, started))
}

/// Reduced words of `w ∈ 𝔖_k` (one-line notation, 1-based) in the adjacent
/// transpositions `s_i = (i i+1)`, acting on positions.
fn reduced_words(w: &[usize]) -> Vec<Vec<usize>> {
    let descents: Vec<usize> = (1..w.len()).filter(|&i| w[i - 1] > w[i]).collect();
    if descents.is_empty() {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for i in descents {
        let mut shorter = w.to_vec();
        shorter.swap(i - 1, i);
        for mut word in reduced_words(&shorter) {
            word.push(i);
            out.push(word);
        }
    }
    out
}

fn permutations(k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(k - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, k);
            out.push(q);
        }
    }
    out.sort();
    out
}

/// For every `w ∈ 𝔖_k`, the products of the `C_i` along all reduced words of
/// `w` coincide.
pub fn verify_reduced_words(space: &RepSpace, k: usize, limits: &Limits) -> Result<VerificationReport> {
    let started = Instant::now();
    let gens = Generators::new(space, k, limits)?;
    let (mut perm, mut matrix) = (Ok(()), Ok(()));
    for w in permutations(k) {
        let words = reduced_words(&w);
        for other in &words[1..] {
            let (p, m) = gens.compare(format!("words {:?} and {other:?} of {w:?}", words[0]), &words[0], other)?;
            first_failure(&mut perm, p);
            first_failure(&mut matrix, m);
        }
    }
    Ok(braid_report("reduced_words", space, k, perm, matrix, started))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn limits() -> Limits {
        Limits::default()
    }

    #[test]
    fn rep_space_validation_and_labels() {
        assert!(RepSpace::new(vec![]).is_err());
        assert!(RepSpace::new(vec![2, 2]).is_err());
        assert!(RepSpace::new(vec![3, 2]).is_err());
        assert!(RepSpace::new(vec![0, 2]).is_err());
        let s = RepSpace::new(vec![2, 3]).unwrap();
        assert_eq!(s.total_dim(), 5);
        assert_eq!(s.basis_index(3, 1).unwrap(), 3);
        assert_eq!(s.basis_label(5).unwrap(), (3, 3));
        assert!(s.basis_index(4, 1).is_err());
    }

    #[test]
    fn c_on_trivial_space() {
        let s = RepSpace::new(vec![1]).unwrap();
        assert!(build_c(&s, &limits()).unwrap().matrix().is_identity());
    }

    #[test]
    fn c_on_space_two_is_identity() {
        // χ_{2,2} is the flip, so T composed with it fixes every e_i ⊗ e_j
        let s = RepSpace::new(vec![2]).unwrap();
        let c = build_c(&s, &limits()).unwrap();
        for i in 1..=2 {
            for j in 1..=2 {
                let col = (i - 1) * 2 + j;
                let rows: Vec<_> = c.matrix().entries().filter(|e| e.1 == col).map(|e| e.0).collect();
                assert_eq!(rows, vec![col]);
            }
        }
    }

    #[test]
    fn c_example_on_two_three() {
        let s = RepSpace::new(vec![2, 3]).unwrap();
        let d = s.total_dim();
        let src = (s.basis_index(2, 1).unwrap() - 1) * d + s.basis_index(3, 2).unwrap();
        let dst = (s.basis_index(3, 1).unwrap() - 1) * d + s.basis_index(2, 2).unwrap();
        let c = build_c(&s, &limits()).unwrap();
        assert_eq!(c.matrix().get(dst, src), crate::scalar::ExactScalar::from_int(1));
        assert_eq!(c_permutation(&s).unwrap().apply_flat(src), dst);
        assert!(c.matrix().is_unitary());
    }

    #[test]
    fn both_constructions_of_c_agree() {
        for n in 1..=4 {
            let s = RepSpace::upto(n).unwrap();
            assert_eq!(&c_permutation(&s).unwrap().to_matrix(), build_c(&s, &limits()).unwrap().matrix());
        }
    }

    #[test]
    fn flip_conjugation_matches_flipped_family() {
        for n in 1..=4 {
            let s = RepSpace::upto(n).unwrap();
            let r = r_family_window(n).unwrap();
            let t = flip_operator(&s).unwrap();
            let left = represent(&s, &r).unwrap().conjugate_by(&t).unwrap();
            assert_eq!(left, represent(&s, &r.flipped().unwrap()).unwrap());
        }
    }

    #[test]
    fn c_i_shapes() {
        let s = RepSpace::new(vec![1, 2]).unwrap();
        let c1 = c_i(&s, 3, 1, &limits()).unwrap();
        assert_eq!(c1.dim(), 27);
        assert!(c1.is_unitary());
        let c = build_c(&s, &limits()).unwrap();
        assert_eq!(c1, kron(9, 3, c.matrix(), &SparseSquareMatrix::identity(3).unwrap()).unwrap());
        assert_eq!(&c_i(&s, 2, 1, &limits()).unwrap(), c.matrix());
        assert!(c_i(&s, 3, 3, &limits()).is_err());
        assert!(c_i(&s, 3, 0, &limits()).is_err());
    }

    #[test]
    fn relations_hold_small() {
        let l = limits();
        let r = verify_braid_relations(&RepSpace::new(vec![1, 2]).unwrap(), 3, &l).unwrap();
        assert!(r.pass, "{r}");
        assert!(verify_braid_relations(&RepSpace::new(vec![1]).unwrap(), 4, &l).unwrap().pass);
        assert!(verify_braid_relations(&RepSpace::new(vec![2, 3]).unwrap(), 3, &l).unwrap().pass);
        assert!(verify_involution(&RepSpace::new(vec![2, 3]).unwrap(), &l).unwrap().pass);
        assert!(verify_involution(&RepSpace::new(vec![1]).unwrap(), &l).unwrap().pass);
    }

    #[test]
    fn reduced_word_enumeration() {
        assert_eq!(permutations(3).len(), 6);
        assert_eq!(reduced_words(&[3, 2, 1]), vec![vec![1, 2, 1], vec![2, 1, 2]]);
        assert_eq!(reduced_words(&[4, 3, 2, 1]).len(), 16);
        assert_eq!(reduced_words(&[1, 2, 3]), vec![Vec::<usize>::new()]);
    }

    #[test]
    fn reduced_words_agree() {
        let s = RepSpace::new(vec![1, 2]).unwrap();
        for k in 2..=4 {
            let r = verify_reduced_words(&s, k, &limits()).unwrap();
            assert!(r.pass, "{r}");
        }
    }

    #[test]
    fn cap_rejects_large_powers() {
        let l = Limits {
            max_cells: 1000,
            ..Limits::default()
        };
        assert!(verify_braid_relations(&RepSpace::upto(3).unwrap(), 3, &l).is_err());
    }
}
