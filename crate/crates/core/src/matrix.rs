//! Sparse square matrices over [`ExactScalar`], indexed from 1.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_traits::{One, Zero};

use crate::error::{domain, Result};
use crate::scalar::ExactScalar;

/// An element of `M_n(ℂ)`. Only nonzero entries are stored and every stored
/// index lies in `1..=dim`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SparseSquareMatrix {
    dim: usize,
    entries: BTreeMap<(usize, usize), ExactScalar>,
}

/// The matrix unit `E^{(n)}_{i,j}`.
pub fn mat_unit(n: usize, i: usize, j: usize) -> Result<SparseSquareMatrix> {
    SparseSquareMatrix::unit(n, i, j)
}

/// Positions `(i, j)` of the matrix units of `M_n`: the diagonal units first,
/// then the off-diagonal ones in row-major order. Checks that report the
/// "first violating unit" use this order.
pub fn unit_positions(n: usize) -> impl Iterator<Item = (usize, usize)> {
    let diagonal = (1..=n).map(|i| (i, i));
    let off = (1..=n).flat_map(move |i| (1..=n).filter(move |&j| j != i).map(move |j| (i, j)));
    diagonal.chain(off)
}

impl SparseSquareMatrix {
    pub fn zero(dim: usize) -> Result<Self> {
        if dim == 0 {
            return Err(domain("matrix dimension must be positive"));
        }
        Ok(Self {
            dim,
            entries: BTreeMap::new(),
        })
    }

    pub fn identity(dim: usize) -> Result<Self> {
        let mut m = Self::zero(dim)?;
        for i in 1..=dim {
            m.entries.insert((i, i), ExactScalar::one());
        }
        Ok(m)
    }

    pub fn unit(dim: usize, i: usize, j: usize) -> Result<Self> {
        let mut m = Self::zero(dim)?;
        m.check_index(i, j)?;
        m.entries.insert((i, j), ExactScalar::one());
        Ok(m)
    }

    /// Builds a matrix from `(row, col, value)` triples. Repeated positions
    /// are summed and zeros are dropped.
    pub fn from_entries<I>(dim: usize, entries: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize, ExactScalar)>,
    {
        let mut m = Self::zero(dim)?;
        for (i, j, v) in entries {
            m.check_index(i, j)?;
            m.accumulate(i, j, v);
        }
        Ok(m)
    }

    /// The 0/1 matrix with a one at each `(row, col)` pair.
    pub(crate) fn from_ones<I>(dim: usize, positions: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        Self::from_entries(
            dim,
            positions.into_iter().map(|(i, j)| (i, j, ExactScalar::one())),
        )
    }

    fn check_index(&self, i: usize, j: usize) -> Result<()> {
        if i == 0 || j == 0 || i > self.dim || j > self.dim {
            return Err(domain(format!(
                "index ({i},{j}) out of range for dimension {}",
                self.dim
            )));
        }
        Ok(())
    }

    fn accumulate(&mut self, i: usize, j: usize, v: ExactScalar) {
        if v.is_zero() {
            return;
        }
        match self.entries.entry((i, j)) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(v);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get() + &v;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    /// The entry at `(i, j)`; zero when not stored.
    pub fn get(&self, i: usize, j: usize) -> ExactScalar {
        self.entries.get(&(i, j)).cloned().unwrap_or_default()
    }

    /// Nonzero entries in row-major order.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &ExactScalar)> + '_ {
        self.entries.iter().map(|(&(i, j), v)| (i, j, v))
    }

    fn same_dim(&self, other: &Self, op: &str) -> Result<()> {
        if self.dim != other.dim {
            return Err(domain(format!(
                "{op}: dimension mismatch {} vs {}",
                self.dim, other.dim
            )));
        }
        Ok(())
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.same_dim(other, "mul")?;
        let mut rows: HashMap<usize, Vec<(usize, &ExactScalar)>> = HashMap::new();
        for (&(k, j), v) in &other.entries {
            rows.entry(k).or_default().push((j, v));
        }
        let mut out = Self::zero(self.dim)?;
        for (&(i, k), a) in &self.entries {
            if let Some(row) = rows.get(&k) {
                for &(j, b) in row {
                    out.accumulate(i, j, a * b);
                }
            }
        }
        Ok(out)
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same_dim(other, "add")?;
        let mut out = self.clone();
        for (&(i, j), v) in &other.entries {
            out.accumulate(i, j, v.clone());
        }
        Ok(out)
    }

    pub fn scale(&self, s: &ExactScalar) -> Self {
        let mut out = Self {
            dim: self.dim,
            entries: BTreeMap::new(),
        };
        for (&(i, j), v) in &self.entries {
            out.accumulate(i, j, v * s);
        }
        out
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Self {
        Self {
            dim: self.dim,
            entries: self
                .entries
                .iter()
                .map(|(&(i, j), v)| ((j, i), v.conj()))
                .collect(),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.entries.len() == self.dim
            && self
                .entries
                .iter()
                .all(|(&(i, j), v)| i == j && v.is_one())
    }

    pub fn is_unitary(&self) -> bool {
        self.mul(&self.adjoint())
            .map(|p| p.is_identity())
            .unwrap_or(false)
    }

    /// `X ↦ U X U*`.
    pub fn conjugate_by(&self, u: &Self) -> Result<Self> {
        u.mul(self)?.mul(&u.adjoint())
    }
}

impl fmt::Debug for SparseSquareMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "M{}{{", self.dim)?;
        for (n, (&(i, j), v)) in self.entries.iter().enumerate() {
            if n > 0 {
                write!(f, ", ")?;
            }
            write!(f, "({i},{j}):{v}")?;
        }
        write!(f, "}}")
    }
}

impl fmt::Display for SparseSquareMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}
