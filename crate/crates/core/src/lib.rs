//! Boolean functions on `F2^n` whose Fourier coefficients take few values.
//!
//! Points of `F2^n` are `u32` values with `x1` as the least significant bit.
//! Spectra are stored as integers `F(α) = 2^n f̂(α)`.

pub mod addcomb;
pub mod error;
pub mod gf2;
pub mod harness;
pub mod spectrum;
pub mod structure;

pub use error::{Error, Result};
pub use gf2::{AffineSubspace, Gf2Matrix, Gf2Vector, Subspace};
pub use spectrum::{BooleanFunction, Spectrum};
