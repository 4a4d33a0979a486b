//! Bijections of finite grids `F_{d_1} × … × F_{d_k}`.

use std::fmt;

use crate::error::{domain, Result};
use crate::matrix::SparseSquareMatrix;
use crate::tensor::{pair_index, split_index, total_dim};

/// A permutation of the grid `F_{shape[0]} × … × F_{shape[k-1]}`, stored as a
/// table over flat (paired) indices.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GridPermutation {
    shape: Vec<usize>,
    // table[flat - 1] = image flat index, both 1-based
    table: Vec<usize>,
}

impl GridPermutation {
    /// Tabulates `map` over every tuple of the grid and checks that the result
    /// is a bijection.
    pub fn from_fn<F>(shape: &[usize], map: F) -> Result<Self>
    where
        F: Fn(&[usize]) -> Vec<usize>,
    {
        if shape.is_empty() || shape.contains(&0) {
            return Err(domain("grid shape must be nonempty with positive sides"));
        }
        let len = total_dim(shape);
        let mut table = Vec::with_capacity(len);
        for flat in 1..=len {
            let image = map(&split_index(shape, flat));
            if image.len() != shape.len()
                || image.iter().zip(shape).any(|(&i, &d)| i == 0 || i > d)
            {
                return Err(domain(format!(
                    "image {image:?} of {:?} lies outside grid {shape:?}",
                    split_index(shape, flat)
                )));
            }
            table.push(pair_index(shape, &image));
        }
        Self::from_table(shape, table)
    }

    /// Wraps a flat 1-based table, rejecting anything that is not a bijection.
    pub fn from_table(shape: &[usize], table: Vec<usize>) -> Result<Self> {
        let len = total_dim(shape);
        if table.len() != len {
            return Err(domain(format!(
                "table has {} entries, grid {shape:?} has {len}",
                table.len()
            )));
        }
        let mut seen = vec![false; len];
        for &t in &table {
            if t == 0 || t > len || std::mem::replace(&mut seen[t - 1], true) {
                return Err(domain(format!("table is not a bijection of grid {shape:?}")));
            }
        }
        Ok(Self {
            shape: shape.to_vec(),
            table,
        })
    }

    pub fn identity(shape: &[usize]) -> Result<Self> {
        Self::from_table(shape, (1..=total_dim(shape)).collect())
    }

    pub fn shape(&self) -> &[usize] {
        &self.shape
    }

    pub fn len(&self) -> usize {
        self.table.len()
    }

    pub fn is_empty(&self) -> bool {
        self.table.is_empty()
    }

    /// Image of a flat 1-based index.
    pub fn apply_flat(&self, flat: usize) -> usize {
        self.table[flat - 1]
    }

    pub fn apply(&self, idx: &[usize]) -> Result<Vec<usize>> {
        if idx.len() != self.shape.len() || idx.iter().zip(&self.shape).any(|(&i, &d)| i == 0 || i > d) {
            return Err(domain(format!("{idx:?} is not in grid {:?}", self.shape)));
        }
        Ok(split_index(&self.shape, self.apply_flat(pair_index(&self.shape, idx))))
    }

    /// `(source, image)` pairs in lexicographic order of the source.
    pub fn pairs(&self) -> impl Iterator<Item = (Vec<usize>, Vec<usize>)> + '_ {
        self.table.iter().enumerate().map(move |(k, &t)| {
            (split_index(&self.shape, k + 1), split_index(&self.shape, t))
        })
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        if self.shape != other.shape {
            return Err(domain(format!(
                "cannot compose permutations of grids {:?} and {:?}",
                self.shape, other.shape
            )));
        }
        Ok(Self {
            shape: self.shape.clone(),
            table: other.table.iter().map(|&t| self.table[t - 1]).collect(),
        })
    }

    pub fn inverse(&self) -> Self {
        let mut table = vec![0; self.table.len()];
        for (k, &t) in self.table.iter().enumerate() {
            table[t - 1] = k + 1;
        }
        Self {
            shape: self.shape.clone(),
            table,
        }
    }

    pub fn is_identity(&self) -> bool {
        self.table.iter().enumerate().all(|(k, &t)| t == k + 1)
    }

    /// First source tuple where `self` and `other` differ, with both images.
    pub fn first_difference(&self, other: &Self) -> Option<(Vec<usize>, Vec<usize>, Vec<usize>)> {
        if self.shape != other.shape {
            return Some((vec![], vec![], vec![]));
        }
        self.table
            .iter()
            .zip(&other.table)
            .position(|(a, b)| a != b)
            .map(|k| {
                (
                    split_index(&self.shape, k + 1),
                    split_index(&self.shape, self.table[k]),
                    split_index(&self.shape, other.table[k]),
                )
            })
    }

    /// The permutation matrix `Σ_x E_{p(x), x}` on the paired tensor space.
    pub fn to_matrix(&self) -> SparseSquareMatrix {
        SparseSquareMatrix::from_ones(
            self.table.len(),
            self.table.iter().enumerate().map(|(k, &t)| (t, k + 1)),
        )
        .expect("bijection table indexes stay in range")
    }
}

/// Free-function form of [`GridPermutation::to_matrix`].
pub fn perm_to_matrix(p: &GridPermutation) -> SparseSquareMatrix {
    p.to_matrix()
}

impl fmt::Debug for GridPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.pairs()).finish()
    }
}
