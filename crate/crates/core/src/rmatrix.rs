//! The arithmetic permutation `χ_{n,m}` and the universal R-matrix it induces.
//!
//! For `(i, j) ∈ F_n × F_m` the integer `N = m(i−1) + j` has a second
//! mixed-radix reading `N = n(j̲−1) + i̲`; `χ_{n,m}(i, j) = (i̲, j̲)`.
//! `R^{(n,m)}` is the permutation matrix `Σ E_{χ(i,j), (i,j)}` on
//! `ℂ^n ⊗ ℂ^m`, and `R = (R^{(n,m)})_{n,m}` is generated block by block.
//!
//! Every identity is checked along two independent routes: composing grid
//! permutations, and multiplying sparse matrices. The routes must agree.
//!
//! The second hexagon `(id ⊗ φ_{m,l})(R^{(n,ml)}) = R^{(n,l)}_{13} R^{(n,m)}_{12}`
//! reduces, exactly like the first, to an equality of maps on
//! `F_n × F_m × F_l`:
//!
//! ```text
//! P′ = (id_n × φ_{m,l}⁻¹) ∘ χ_{n,ml} ∘ (id_n × φ_{m,l})
//! Q′ = (id_n × θ_{l,m}) ∘ (χ_{n,l} × id_m) ∘ (id_n × θ_{m,l}) ∘ (χ_{n,m} × id_l)
//! ```
//!
//! `P′` is the index map of the left side (apply `(id ⊗ φ_{m,l})` to
//! `Σ E_{χ_{n,ml}(i,s), (i,s)}`), `Q′` is the composite of the permutations of
//! `R_{12}` (applied first) and `R_{13}`, the latter conjugated into the
//! `F_n × F_l × F_m` ordering by `θ`. [`verify_hexagon_right`] checks
//! `P′ = Q′` against the matrix identity on every instance it runs.

use std::sync::OnceLock;
use std::time::Instant;

use crate::bialgebra::{phi, phi_op, BlockFamily};
use crate::error::{domain, Result};
use crate::limits::Limits;
use crate::matrix::{unit_positions, SparseSquareMatrix};
use crate::perm::GridPermutation;
use crate::report::{params, Counterexample, Outcome, VerificationReport};
use crate::tensor::{embed_legs, flip, split_index, split_leg, Legs};

/// `φ_{n,m}(i, j) = m(i−1) + j`, the bijection `F_n × F_m → F_{nm}`.
pub fn phi_index(m: usize, i: usize, j: usize) -> usize {
    m * (i - 1) + j
}

/// Inverse of [`phi_index`]: `k ↦ (i, j)` with `m(i−1) + j = k`.
pub fn phi_index_inv(m: usize, k: usize) -> (usize, usize) {
    ((k - 1) / m + 1, (k - 1) % m + 1)
}

/// The flip `θ(i, j) = (j, i)`.
pub fn theta((i, j): (usize, usize)) -> (usize, usize) {
    (j, i)
}

/// `χ_{n,m}(i, j)`: the unique `(i̲, j̲) ∈ F_n × F_m` with
/// `m(i−1) + j = n(j̲−1) + i̲`.
pub fn chi(n: usize, m: usize, i: usize, j: usize) -> Result<(usize, usize)> {
    if n == 0 || m == 0 {
        return Err(domain("χ needs positive n, m"));
    }
    if i == 0 || i > n || j == 0 || j > m {
        return Err(domain(format!("({i},{j}) is not in F_{n} × F_{m}")));
    }
    let big_n = m * (i - 1) + j;
    // remainder 0 ↦ i̲ = n handled by shifting N down by one
    Ok(((big_n - 1) % n + 1, (big_n - 1) / n + 1))
}

fn pair(v: &[usize]) -> (usize, usize) {
    (v[0], v[1])
}

/// `χ_{n,m}` tabulated from [`chi`].
pub fn chi_table(n: usize, m: usize) -> Result<GridPermutation> {
    GridPermutation::from_fn(&[n, m], |ij| {
        let (a, b) = chi(n, m, ij[0], ij[1]).expect("grid index in range");
        vec![a, b]
    })
}

/// `χ_{n,m}` built as `θ_{m,n} ∘ φ_{m,n}⁻¹ ∘ φ_{n,m}`.
pub fn chi_via_phi(n: usize, m: usize) -> Result<GridPermutation> {
    GridPermutation::from_fn(&[n, m], |ij| {
        let k = phi_index(m, ij[0], ij[1]);
        let (a, b) = theta(phi_index_inv(n, k));
        vec![a, b]
    })
}

/// One block `R^{(n,m)}` of the universal R-matrix. The matrix is derived
/// from the permutation on first use.
#[derive(Debug)]
pub struct RMatrixBlock {
    n: usize,
    m: usize,
    perm: GridPermutation,
    matrix: OnceLock<SparseSquareMatrix>,
}

impl RMatrixBlock {
    pub fn new(n: usize, m: usize, perm: GridPermutation) -> Result<Self> {
        if perm.shape() != [n, m] {
            return Err(domain(format!(
                "R-matrix block ({n},{m}) needs a permutation of F_{n}×F_{m}, got shape {:?}",
                perm.shape()
            )));
        }
        Ok(Self {
            n,
            m,
            perm,
            matrix: OnceLock::new(),
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn perm(&self) -> &GridPermutation {
        &self.perm
    }

    pub fn matrix(&self) -> &SparseSquareMatrix {
        self.matrix.get_or_init(|| self.perm.to_matrix())
    }

    /// `R(e_i ⊗ e_j)` as a basis pair.
    pub fn apply(&self, i: usize, j: usize) -> Result<(usize, usize)> {
        Ok(pair(&self.perm.apply(&[i, j])?))
    }
}

/// A family of permutations `{p_{n,m}}` whose matrices play the role of
/// `R^{(n,m)}`. [`ArithmeticR`] is the universal R-matrix; the other
/// families exist to confirm that the checks reject wrong candidates.
pub trait RFamily: Sync {
    fn name(&self) -> String;

    fn perm(&self, n: usize, m: usize) -> Result<GridPermutation>;

    fn block(&self, n: usize, m: usize) -> Result<RMatrixBlock> {
        RMatrixBlock::new(n, m, self.perm(n, m)?)
    }
}

/// `p_{n,m} = χ_{n,m}`.
#[derive(Debug, Clone, Copy, Default)]
pub struct ArithmeticR;

impl RFamily for ArithmeticR {
    fn name(&self) -> String {
        "arithmetic".into()
    }

    fn perm(&self, n: usize, m: usize) -> Result<GridPermutation> {
        chi_table(n, m)
    }
}

/// `p_{n,m} = id`.
#[derive(Debug, Clone, Copy, Default)]
pub struct IdentityR;

impl RFamily for IdentityR {
    fn name(&self) -> String {
        "identity".into()
    }

    fn perm(&self, n: usize, m: usize) -> Result<GridPermutation> {
        GridPermutation::identity(&[n, m])
    }
}

/// `χ` everywhere except block `(n, m)`, which uses `χ_{n,m}⁻¹`.
#[derive(Debug, Clone, Copy)]
pub struct InvertedBlockR {
    pub n: usize,
    pub m: usize,
}

impl RFamily for InvertedBlockR {
    fn name(&self) -> String {
        format!("inverted-on-({},{})", self.n, self.m)
    }

    fn perm(&self, n: usize, m: usize) -> Result<GridPermutation> {
        let chi = chi_table(n, m)?;
        Ok(if (n, m) == (self.n, self.m) { chi.inverse() } else { chi })
    }
}

/// `R^{(n,m)}`.
pub fn r_matrix(n: usize, m: usize) -> Result<RMatrixBlock> {
    ArithmeticR.block(n, m)
}

/// The blocks `R^{(n,m)}`, `n, m ≤ window`, of `R ∈ ∏ M_n ⊗ M_m`.
pub fn r_family_window(window: usize) -> Result<BlockFamily> {
    BlockFamily::from_generator(window, |n, m| Ok(r_matrix(n, m)?.matrix().clone()))
}

fn apply2(p: &GridPermutation, a: usize, b: usize) -> (usize, usize) {
    pair(&p.apply(&[a, b]).expect("index within block"))
}

/// `P = (φ_{n,m}⁻¹ × id_l) ∘ χ_{nm,l} ∘ (φ_{n,m} × id_l)` on `F_n × F_m × F_l`.
pub fn build_p(n: usize, m: usize, l: usize) -> Result<GridPermutation> {
    build_p_with(&ArithmeticR, n, m, l)
}

/// `Q = (id_n × θ_{l,m}) ∘ (χ_{n,l} × id_m) ∘ (id_n × θ_{m,l}) ∘ (id_n × χ_{m,l})`.
pub fn build_q(n: usize, m: usize, l: usize) -> Result<GridPermutation> {
    build_q_with(&ArithmeticR, n, m, l)
}

pub fn build_p_with(r: &dyn RFamily, n: usize, m: usize, l: usize) -> Result<GridPermutation> {
    let big = r.perm(n * m, l)?;
    GridPermutation::from_fn(&[n, m, l], |x| {
        let t = phi_index(m, x[0], x[1]);
        let (t2, k2) = apply2(&big, t, x[2]);
        let (i, j) = phi_index_inv(m, t2);
        vec![i, j, k2]
    })
}

pub fn build_q_with(r: &dyn RFamily, n: usize, m: usize, l: usize) -> Result<GridPermutation> {
    let (r_nl, r_ml) = (r.perm(n, l)?, r.perm(m, l)?);
    GridPermutation::from_fn(&[n, m, l], |x| {
        let (a, (b, c)) = (x[0], apply2(&r_ml, x[1], x[2]));
        // now in F_n × F_l × F_m as (a, c, b)
        let (a2, c2) = apply2(&r_nl, a, c);
        vec![a2, b, c2]
    })
}

/// `P′ = (id_n × φ_{m,l}⁻¹) ∘ χ_{n,ml} ∘ (id_n × φ_{m,l})`.
pub fn build_p_right(n: usize, m: usize, l: usize) -> Result<GridPermutation> {
    build_p_right_with(&ArithmeticR, n, m, l)
}

/// `Q′ = (id_n × θ_{l,m}) ∘ (χ_{n,l} × id_m) ∘ (id_n × θ_{m,l}) ∘ (χ_{n,m} × id_l)`.
pub fn build_q_right(n: usize, m: usize, l: usize) -> Result<GridPermutation> {
    build_q_right_with(&ArithmeticR, n, m, l)
}

pub fn build_p_right_with(r: &dyn RFamily, n: usize, m: usize, l: usize) -> Result<GridPermutation> {
    let big = r.perm(n, m * l)?;
    GridPermutation::from_fn(&[n, m, l], |x| {
        let s = phi_index(l, x[1], x[2]);
        let (a, s2) = apply2(&big, x[0], s);
        let (b, c) = phi_index_inv(l, s2);
        vec![a, b, c]
    })
}

pub fn build_q_right_with(r: &dyn RFamily, n: usize, m: usize, l: usize) -> Result<GridPermutation> {
    let (r_nm, r_nl) = (r.perm(n, m)?, r.perm(n, l)?);
    GridPermutation::from_fn(&[n, m, l], |x| {
        let (a, b) = apply2(&r_nm, x[0], x[1]);
        let (a2, c2) = apply2(&r_nl, a, x[2]);
        vec![a2, b, c2]
    })
}

/// First entry where two matrices over `dims` differ, as a counterexample
/// whose indices are the row tuple followed by the column tuple.
fn matrix_difference(
    what: &str,
    dims: &[usize],
    left: &SparseSquareMatrix,
    right: &SparseSquareMatrix,
) -> Outcome {
    if left == right {
        return Ok(());
    }
    let mut keys: Vec<(usize, usize)> = left
        .entries()
        .chain(right.entries())
        .map(|(r, c, _)| (c, r))
        .collect();
    keys.sort_unstable();
    let (c, r) = keys
        .into_iter()
        .find(|&(c, r)| left.get(r, c) != right.get(r, c))
        .expect("unequal matrices differ somewhere");
    let mut indices = split_index(dims, r);
    indices.extend(split_index(dims, c));
    Err(Counterexample::new(
        format!("{what}: entry (row {:?}, col {:?}) differs", split_index(dims, r), split_index(dims, c)),
        indices,
        left.get(r, c),
        right.get(r, c),
    ))
}

fn perm_difference(what: &str, left: &GridPermutation, right: &GridPermutation) -> Outcome {
    match left.first_difference(right) {
        None => Ok(()),
        Some((at, l, r)) => Err(Counterexample::new(
            format!("{what}: images of {at:?} differ"),
            at,
            format!("{l:?}"),
            format!("{r:?}"),
        )),
    }
}

fn positive(vals: &[usize]) -> Result<()> {
    if vals.contains(&0) {
        return Err(domain("block dimensions must be positive"));
    }
    Ok(())
}

/// `R^{(n,m)} φ_{n,m}(x) R^{(n,m)*} = φ^{op}_{m,n}(x)` for all matrix units
/// `x ∈ M_{nm}`.
pub fn verify_intertwiner(n: usize, m: usize, limits: &Limits) -> Result<VerificationReport> {
    verify_intertwiner_with(&ArithmeticR, n, m, limits)
}

pub fn verify_intertwiner_with(r: &dyn RFamily, n: usize, m: usize, limits: &Limits) -> Result<VerificationReport> {
    let started = Instant::now();
    positive(&[n, m])?;
    let nm = n * m;
    limits.check_dim("M_nm", nm)?;
    let block = r.block(n, m)?;

    // χ ∘ φ_{n,m}⁻¹ = θ_{m,n} ∘ φ_{m,n}⁻¹ on labels k ∈ F_{nm}
    let mut permutation = Ok(());
    for k in 1..=nm {
        let (i, j) = phi_index_inv(m, k);
        let left = block.apply(i, j)?;
        let right = theta(phi_index_inv(n, k));
        if left != right {
            permutation = Err(Counterexample::new(
                format!("label {k}: R-permutation ∘ φ_{{{n},{m}}}⁻¹ ≠ θ ∘ φ_{{{m},{n}}}⁻¹"),
                vec![k],
                format!("{left:?}"),
                format!("{right:?}"),
            ));
            break;
        }
    }

    let rm = block.matrix();
    let rm_adj = rm.adjoint();
    let mut matrix = Ok(());
    for (k, l) in unit_positions(nm) {
        let x = SparseSquareMatrix::unit(nm, k, l)?;
        let left = rm.mul(&phi(n, m, &x)?)?.mul(&rm_adj)?;
        let right = phi_op(m, n, &x)?;
        if left != right {
            matrix = Err(Counterexample::new(
                format!("R φ_{{{n},{m}}}(x) R* ≠ φ^op_{{{m},{n}}}(x) at x = E^({nm})_{{{k},{l}}}"),
                vec![k, l],
                left,
                right,
            ));
            break;
        }
    }
    Ok(VerificationReport::dual(
        "intertwiner",
        params([("n", n), ("m", m)]),
        permutation,
        matrix,
        started,
    ))
}

/// Folds a consistency failure between the two routes into a report.
fn with_consistency(mut report: VerificationReport, consistency: Outcome) -> VerificationReport {
    if let Err(c) = consistency {
        report.pass = false;
        report.counterexample = Some(Counterexample {
            description: format!("internal inconsistency: {}", c.description),
            ..c
        });
    }
    report
}

/// `(φ_{n,m} ⊗ id_l)(R^{(nm,l)}) = R^{(n,l)}_{13} R^{(m,l)}_{23}`, plus `P = Q`.
pub fn verify_hexagon_left(n: usize, m: usize, l: usize, limits: &Limits) -> Result<VerificationReport> {
    verify_hexagon_left_with(&ArithmeticR, n, m, l, limits)
}

pub fn verify_hexagon_left_with(
    r: &dyn RFamily,
    n: usize,
    m: usize,
    l: usize,
    limits: &Limits,
) -> Result<VerificationReport> {
    let started = Instant::now();
    positive(&[n, m, l])?;
    let dims = [n, m, l];
    limits.check_dim("M_n⊗M_m⊗M_l", n * m * l)?;
    let (p, q) = (build_p_with(r, n, m, l)?, build_q_with(r, n, m, l)?);
    let permutation = perm_difference("P ≠ Q", &p, &q);

    let lhs = split_leg(&[n * m, l], 0, (n, m), r.block(n * m, l)?.matrix())?;
    let rhs = embed_legs((n, m, l), Legs::L13, r.block(n, l)?.matrix())?
        .mul(&embed_legs((n, m, l), Legs::L23, r.block(m, l)?.matrix())?)?;
    let matrix = matrix_difference("(φ⊗id)(R) ≠ R13 R23", &dims, &lhs, &rhs);

    let consistency = matrix_difference("(φ⊗id)(R) ≠ Σ E_{P(x),x}", &dims, &lhs, &p.to_matrix())
        .and_then(|_| matrix_difference("R13 R23 ≠ Σ E_{Q(x),x}", &dims, &rhs, &q.to_matrix()));
    let report = VerificationReport::dual(
        "hexagon_left",
        params([("n", n), ("m", m), ("l", l)]),
        permutation,
        matrix,
        started,
    );
    Ok(with_consistency(report, consistency))
}

/// `(id_n ⊗ φ_{m,l})(R^{(n,ml)}) = R^{(n,l)}_{13} R^{(n,m)}_{12}`, plus `P′ = Q′`.
pub fn verify_hexagon_right(n: usize, m: usize, l: usize, limits: &Limits) -> Result<VerificationReport> {
    verify_hexagon_right_with(&ArithmeticR, n, m, l, limits)
}

pub fn verify_hexagon_right_with(
    r: &dyn RFamily,
    n: usize,
    m: usize,
    l: usize,
    limits: &Limits,
) -> Result<VerificationReport> {
    let started = Instant::now();
    positive(&[n, m, l])?;
    let dims = [n, m, l];
    limits.check_dim("M_n⊗M_m⊗M_l", n * m * l)?;
    let (p, q) = (build_p_right_with(r, n, m, l)?, build_q_right_with(r, n, m, l)?);
    let permutation = perm_difference("P′ ≠ Q′", &p, &q);

    let lhs = split_leg(&[n, m * l], 1, (m, l), r.block(n, m * l)?.matrix())?;
    let rhs = embed_legs((n, m, l), Legs::L13, r.block(n, l)?.matrix())?
        .mul(&embed_legs((n, m, l), Legs::L12, r.block(n, m)?.matrix())?)?;
    let matrix = matrix_difference("(id⊗φ)(R) ≠ R13 R12", &dims, &lhs, &rhs);

    let consistency = matrix_difference("(id⊗φ)(R) ≠ Σ E_{P′(x),x}", &dims, &lhs, &p.to_matrix())
        .and_then(|_| matrix_difference("R13 R12 ≠ Σ E_{Q′(x),x}", &dims, &rhs, &q.to_matrix()));
    let report = VerificationReport::dual(
        "hexagon_right",
        params([("n", n), ("m", m), ("l", l)]),
        permutation,
        matrix,
        started,
    );
    Ok(with_consistency(report, consistency))
}

/// `P = Q` on `F_n × F_m × F_l`, permutation route only.
pub fn verify_p_equals_q(n: usize, m: usize, l: usize) -> Result<VerificationReport> {
    let started = Instant::now();
    positive(&[n, m, l])?;
    let outcome = perm_difference("P ≠ Q", &build_p(n, m, l)?, &build_q(n, m, l)?);
    Ok(VerificationReport::single(
        "p_equals_q",
        params([("n", n), ("m", m), ("l", l)]),
        outcome,
        started,
    ))
}

/// `R^{(n,m)} τ_{m,n}(R^{(m,n)}) = I_n ⊗ I_m`, and
/// `χ_{n,m} θ_{m,n} χ_{m,n} θ_{n,m} = id`.
pub fn verify_triangularity(n: usize, m: usize, limits: &Limits) -> Result<VerificationReport> {
    verify_triangularity_with(&ArithmeticR, n, m, limits)
}

pub fn verify_triangularity_with(r: &dyn RFamily, n: usize, m: usize, limits: &Limits) -> Result<VerificationReport> {
    let started = Instant::now();
    positive(&[n, m])?;
    limits.check_dim("M_n⊗M_m", n * m)?;
    let (r_nm, r_mn) = (r.block(n, m)?, r.block(m, n)?);

    let composite = GridPermutation::from_fn(&[n, m], |x| {
        let (j, i) = theta((x[0], x[1]));
        let (a, b) = theta(r_mn.apply(j, i).expect("in range"));
        let (c, d) = r_nm.apply(a, b).expect("in range");
        vec![c, d]
    })?;
    let permutation = perm_difference(
        "χθχθ ≠ id",
        &composite,
        &GridPermutation::identity(&[n, m])?,
    );

    let product = r_nm.matrix().mul(&flip(m, n, r_mn.matrix())?)?;
    let matrix = matrix_difference(
        "R τ(R) ≠ I",
        &[n, m],
        &product,
        &SparseSquareMatrix::identity(n * m)?,
    );
    Ok(VerificationReport::dual(
        "triangularity",
        params([("n", n), ("m", m)]),
        permutation,
        matrix,
        started,
    ))
}

/// `R_{12} R_{13} R_{23} = R_{23} R_{13} R_{12}` on `M_n ⊗ M_m ⊗ M_l`.
pub fn verify_ybe(n: usize, m: usize, l: usize, limits: &Limits) -> Result<VerificationReport> {
    verify_ybe_with(&ArithmeticR, n, m, l, limits)
}

pub fn verify_ybe_with(r: &dyn RFamily, n: usize, m: usize, l: usize, limits: &Limits) -> Result<VerificationReport> {
    let started = Instant::now();
    positive(&[n, m, l])?;
    let dims = [n, m, l];
    limits.check_dim("M_n⊗M_m⊗M_l", n * m * l)?;
    let (b12, b13, b23) = (r.block(n, m)?, r.block(n, l)?, r.block(m, l)?);

    let lift = |block: &RMatrixBlock, legs: Legs| {
        let (p, q) = legs.positions();
        GridPermutation::from_fn(&dims, |x| {
            let mut y = x.to_vec();
            let (a, b) = block.apply(x[p], x[q]).expect("in range");
            y[p] = a;
            y[q] = b;
            y
        })
    };
    let (p12, p13, p23) = (lift(&b12, Legs::L12)?, lift(&b13, Legs::L13)?, lift(&b23, Legs::L23)?);
    let permutation = perm_difference(
        "R12 R13 R23 ≠ R23 R13 R12",
        &p12.compose(&p13)?.compose(&p23)?,
        &p23.compose(&p13)?.compose(&p12)?,
    );

    let e12 = embed_legs((n, m, l), Legs::L12, b12.matrix())?;
    let e13 = embed_legs((n, m, l), Legs::L13, b13.matrix())?;
    let e23 = embed_legs((n, m, l), Legs::L23, b23.matrix())?;
    let matrix = matrix_difference(
        "R12 R13 R23 ≠ R23 R13 R12",
        &dims,
        &e12.mul(&e13)?.mul(&e23)?,
        &e23.mul(&e13)?.mul(&e12)?,
    );
    Ok(VerificationReport::dual(
        "ybe",
        params([("n", n), ("m", m), ("l", l)]),
        permutation,
        matrix,
        started,
    ))
}

/// `R^{(1,m)} = I_m = R^{(m,1)}` for all `m ≤ k_max`: the blockwise form of
/// `(ε ⊗ id)(R) = 1 = (id ⊗ ε)(R)`.
pub fn verify_counit_r(k_max: usize, limits: &Limits) -> Result<VerificationReport> {
    verify_counit_r_with(&ArithmeticR, k_max, limits)
}

pub fn verify_counit_r_with(r: &dyn RFamily, k_max: usize, limits: &Limits) -> Result<VerificationReport> {
    let started = Instant::now();
    if k_max == 0 {
        return Err(domain("k_max must be at least 1"));
    }
    limits.check_dim("M_m", k_max)?;
    let mut permutation = Ok(());
    let mut matrix = Ok(());
    for m in 1..=k_max {
        let id = SparseSquareMatrix::identity(m)?;
        for (label, block) in [("R^(1,m)", r.block(1, m)?), ("R^(m,1)", r.block(m, 1)?)] {
            let shape = [block.n(), block.m()];
            if permutation.is_ok() {
                permutation = perm_difference(
                    &format!("{label} permutation ≠ id, m = {m}"),
                    block.perm(),
                    &GridPermutation::identity(&shape)?,
                );
            }
            if matrix.is_ok() {
                matrix = matrix_difference(&format!("{label} ≠ I, m = {m}"), &shape, block.matrix(), &id);
            }
        }
    }
    Ok(VerificationReport::dual(
        "counit_r",
        params([("k_max", k_max)]),
        permutation,
        matrix,
        started,
    ))
}
