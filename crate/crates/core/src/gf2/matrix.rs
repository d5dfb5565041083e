use super::{check_dim, mask, parity, Gf2Vector, Subspace};
use crate::error::{Error, Result};

/// An invertible n x n matrix over F2 together with its inverse.
///
/// Row `i` is stored as a bit pattern whose bit `j` is the entry `(i, j)`, so
/// `(Mx)_i = <row_i, x>`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Gf2Matrix {
    n: usize,
    rows: Vec<u32>,
    inverse: Vec<u32>,
}

fn invert(n: usize, rows: &[u32]) -> Option<Vec<u32>> {
    let mut left = rows.to_vec();
    let mut right: Vec<u32> = (0..n).map(|i| 1u32 << i).collect();
    for col in 0..n {
        let p = (col..n).find(|&r| left[r] >> col & 1 == 1)?;
        left.swap(col, p);
        right.swap(col, p);
        for r in 0..n {
            if r != col && left[r] >> col & 1 == 1 {
                left[r] ^= left[col];
                right[r] ^= right[col];
            }
        }
    }
    Some(right)
}

impl Gf2Matrix {
    /// Builds a matrix from its rows; fails if it is singular.
    pub fn new(n: usize, rows: Vec<u32>) -> Result<Self> {
        check_dim(n)?;
        if rows.len() != n {
            return Err(Error::DimensionMismatch {
                left: n,
                right: rows.len(),
            });
        }
        if let Some(&r) = rows.iter().find(|&&r| r & !mask(n) != 0) {
            return Err(Error::OutOfRange { value: r.into(), n });
        }
        let inverse = invert(n, &rows).ok_or(Error::Singular)?;
        Ok(Self { n, rows, inverse })
    }

    pub fn identity(n: usize) -> Result<Self> {
        Self::new(n, (0..n).map(|i| 1u32 << i).collect())
    }

    /// Builds a matrix from its columns.
    pub fn from_columns(n: usize, cols: &[u32]) -> Result<Self> {
        if cols.len() != n {
            return Err(Error::DimensionMismatch {
                left: n,
                right: cols.len(),
            });
        }
        Self::new(n, transpose_bits(n, cols))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn rows(&self) -> &[u32] {
        &self.rows
    }

    pub fn transpose(&self) -> Gf2Matrix {
        Gf2Matrix {
            n: self.n,
            rows: transpose_bits(self.n, &self.rows),
            inverse: transpose_bits(self.n, &self.inverse),
        }
    }

    pub fn inverse(&self) -> Gf2Matrix {
        Gf2Matrix {
            n: self.n,
            rows: self.inverse.clone(),
            inverse: self.rows.clone(),
        }
    }

    #[inline]
    pub fn apply_bits(&self, x: u32) -> u32 {
        self.rows
            .iter()
            .enumerate()
            .fold(0, |acc, (i, &r)| acc | u32::from(parity(r & x)) << i)
    }

    pub fn apply(&self, x: Gf2Vector) -> Result<Gf2Vector> {
        if x.dim() != self.n {
            return Err(Error::DimensionMismatch {
                left: self.n,
                right: x.dim(),
            });
        }
        Ok(Gf2Vector::from_bits_unchecked(self.n, self.apply_bits(x.bits())))
    }

    /// Columns `M e_1, ..., M e_n`, the images of the standard basis.
    pub fn columns(&self) -> Vec<u32> {
        transpose_bits(self.n, &self.rows)
    }

    /// Matrix product `self * other`.
    pub fn mul(&self, other: &Gf2Matrix) -> Result<Gf2Matrix> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch {
                left: self.n,
                right: other.n,
            });
        }
        let cols: Vec<u32> = other.columns().iter().map(|&c| self.apply_bits(c)).collect();
        Gf2Matrix::from_columns(self.n, &cols)
    }
}

fn transpose_bits(n: usize, rows: &[u32]) -> Vec<u32> {
    (0..n)
        .map(|j| {
            rows.iter()
                .enumerate()
                .fold(0u32, |acc, (i, &r)| acc | (r >> j & 1) << i)
        })
        .collect()
}

/// An invertible `L` such that `g(x) = f(Lx)` satisfies `ĝ(e1) = f̂(α)`.
///
/// Since `ĝ(β) = f̂((L^T)^{-1} β)`, this builds `M = (L^T)^{-1}` with first
/// column `α`, completing it to a basis with the smallest standard vectors
/// that keep the columns independent, and returns `L = (M^T)^{-1}`.
pub fn transform_sending_to_e1(alpha: Gf2Vector) -> Result<Gf2Matrix> {
    if alpha.is_zero() {
        return Err(Error::ZeroVector);
    }
    let n = alpha.dim();
    let mut cols = vec![alpha.bits()];
    let mut span = Subspace::from_bits(n, [alpha.bits()]);
    for j in 0..n {
        if span.insert(1 << j) {
            cols.push(1 << j);
        }
    }
    let m = Gf2Matrix::from_columns(n, &cols)?;
    Ok(m.transpose().inverse())
}
