//! Resource caps shared by every verification routine.

use crate::error::{Error, Result};

/// Environment variable overriding [`Limits::max_cells`].
pub const MAX_CELLS_ENV: &str = "RMATRIX_MAX_CELLS";

/// Bounds on the size of objects a check may materialize.
///
/// `max_cells` bounds `dim²` of the largest square matrix a check builds.
/// `max_coassoc_product` bounds `abc` in the coassociativity checks, whose
/// matrix-unit count grows as `(abc)²`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    pub max_cells: u64,
    pub max_coassoc_product: u64,
}

impl Default for Limits {
    fn default() -> Self {
        Self {
            max_cells: 1 << 24,
            max_coassoc_product: 512,
        }
    }
}

impl Limits {
    /// Defaults, with `max_cells` taken from `RMATRIX_MAX_CELLS` when set.
    pub fn from_env() -> Result<Self> {
        let mut limits = Self::default();
        if let Ok(raw) = std::env::var(MAX_CELLS_ENV) {
            limits.max_cells = raw.trim().parse().map_err(|_| {
                Error::Domain(format!("{MAX_CELLS_ENV} must be a positive integer, got {raw:?}"))
            })?;
        }
        Ok(limits)
    }

    /// Refuses a square matrix of dimension `dim`.
    pub fn check_dim(&self, what: &str, dim: usize) -> Result<()> {
        let cells = (dim as u64).saturating_mul(dim as u64);
        if cells > self.max_cells {
            return Err(Error::ResourceCap {
                what: format!("{what} (dimension {dim})"),
                requested: cells,
                cap: self.max_cells,
            });
        }
        Ok(())
    }

    pub fn check_coassoc_product(&self, product: u64) -> Result<()> {
        if product > self.max_coassoc_product {
            return Err(Error::ResourceCap {
                what: "coassociativity product abc".into(),
                requested: product,
                cap: self.max_coassoc_product,
            });
        }
        Ok(())
    }
}
