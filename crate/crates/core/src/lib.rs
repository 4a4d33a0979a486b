//! Exact computation in the bialgebra of direct sums of matrix algebras
//! `M_*(ℂ) = ⊕_n M_n(ℂ)`, its arithmetic universal R-matrix, and the braid
//! operator it induces.
//!
//! All arithmetic is over Gaussian rationals; every identity is decided by
//! exact equality.
//!
//! ```
//! use rmatrix::{chi, r_matrix, verify_triangularity, Limits};
//!
//! assert_eq!(chi(2, 3, 1, 2).unwrap(), (2, 1));
//! assert!(r_matrix(2, 3).unwrap().matrix().is_unitary());
//! assert!(verify_triangularity(2, 3, &Limits::default()).unwrap().pass);
//! ```

pub mod bialgebra;
pub mod braid;
pub mod error;
pub mod json;
pub mod limits;
pub mod matrix;
pub mod monoid;
pub mod perm;
pub mod report;
pub mod rmatrix;
pub mod scalar;
pub mod suite;
pub mod tensor;

pub use bialgebra::{
    counit, delta, delta_op, phi, phi_op, verify_coassociativity, verify_counit_law, BlockFamily,
    DirectSumElement,
};
pub use braid::{
    build_c, c_i, c_permutation, verify_braid_relations, verify_involution, verify_reduced_words,
    BraidOperator, RepSpace,
};
pub use error::{Error, Result};
pub use limits::Limits;
pub use matrix::{mat_unit, SparseSquareMatrix};
pub use monoid::{check_wcs_coassoc, check_wcs_unit, factorizations, FactorizationSet, MonoidElement};
pub use perm::{perm_to_matrix, GridPermutation};
pub use report::{Counterexample, VerificationReport};
pub use rmatrix::{
    build_p, build_p_right, build_q, build_q_right, chi, chi_table, chi_via_phi, r_matrix,
    verify_counit_r, verify_hexagon_left, verify_hexagon_right, verify_intertwiner,
    verify_p_equals_q, verify_triangularity, verify_ybe, ArithmeticR, IdentityR, InvertedBlockR,
    RFamily, RMatrixBlock,
};
pub use scalar::ExactScalar;
pub use tensor::{embed_legs, flip, kron, Legs};
