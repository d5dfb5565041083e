//! Linear algebra over F2 on bit-packed vectors.
//!
//! A point of F2^n is encoded as an integer whose bit `i - 1` holds the
//! coordinate `x_i`, so `x_1` is the least significant bit.

mod matrix;
mod subspace;

use std::fmt;
use std::ops::Add;

pub use matrix::{transform_sending_to_e1, Gf2Matrix};
pub(crate) use subspace::affine_span_bits;
pub use subspace::{
    affine_span, enumerate_subspaces, is_full_affine_subspace, linear_span, AffineSubspace,
    Subspace,
};

use crate::error::{Error, Result};

/// Largest ambient dimension supported by the dense representations.
pub const MAX_DIM: usize = 24;

pub(crate) fn check_dim(n: usize) -> Result<()> {
    if n > MAX_DIM {
        return Err(Error::DimensionTooLarge(n));
    }
    Ok(())
}

#[inline]
pub(crate) fn mask(n: usize) -> u32 {
    if n >= 32 {
        u32::MAX
    } else {
        (1u32 << n) - 1
    }
}

#[inline]
pub(crate) fn parity(x: u32) -> u8 {
    (x.count_ones() & 1) as u8
}

/// A vector of F2^n.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Gf2Vector {
    bits: u32,
    n: u8,
}

impl Gf2Vector {
    pub fn new(n: usize, bits: u32) -> Result<Self> {
        check_dim(n)?;
        if bits & !mask(n) != 0 {
            return Err(Error::OutOfRange {
                value: bits.into(),
                n,
            });
        }
        Ok(Self { bits, n: n as u8 })
    }

    pub(crate) fn from_bits_unchecked(n: usize, bits: u32) -> Self {
        debug_assert!(n <= MAX_DIM && bits & !mask(n) == 0);
        Self { bits, n: n as u8 }
    }

    pub fn zero(n: usize) -> Result<Self> {
        Self::new(n, 0)
    }

    /// The standard basis vector `e_{i+1}` (zero-based index `i`).
    pub fn unit(n: usize, i: usize) -> Result<Self> {
        if i >= n {
            return Err(Error::InvalidParameter(format!(
                "unit index {i} out of range for n = {n}"
            )));
        }
        Self::new(n, 1 << i)
    }

    pub fn bits(self) -> u32 {
        self.bits
    }

    pub fn dim(self) -> usize {
        self.n as usize
    }

    pub fn is_zero(self) -> bool {
        self.bits == 0
    }

    pub fn weight(self) -> u32 {
        self.bits.count_ones()
    }

    /// Coordinate `x_{i+1}`.
    pub fn coord(self, i: usize) -> u8 {
        ((self.bits >> i) & 1) as u8
    }
}

impl fmt::Debug for Gf2Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        // x_1 printed first
        write!(f, "Gf2Vector(")?;
        for i in 0..self.n {
            write!(f, "{}", (self.bits >> i) & 1)?;
        }
        write!(f, ")")
    }
}

/// Coordinate-wise addition. Panics if the dimensions differ.
impl Add for Gf2Vector {
    type Output = Gf2Vector;

    fn add(self, rhs: Gf2Vector) -> Gf2Vector {
        assert_eq!(self.n, rhs.n, "adding vectors of different dimension");
        Gf2Vector {
            bits: self.bits ^ rhs.bits,
            n: self.n,
        }
    }
}

/// Standard dot product over F2.
pub fn dot(x: Gf2Vector, y: Gf2Vector) -> Result<u8> {
    if x.n != y.n {
        return Err(Error::DimensionMismatch {
            left: x.dim(),
            right: y.dim(),
        });
    }
    Ok(parity(x.bits & y.bits))
}
