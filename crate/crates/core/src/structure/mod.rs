//! Structure theorems as algorithms.
//!
//! A Boolean function whose Fourier coefficients all lie in
//! `{0, ±1/2^k, ±2/2^k}` is, after stripping redundant coordinates, either a
//! single affine subspace of codimension `k` (when `f̂(0) = 1/2^k`), or a
//! disjoint union of two affine subspaces of dimension `n - k`, or, only when
//! the irreducible core has `k = 4`, of four affine subspaces of dimension
//! `n - k - 1` (when `f̂(0) = 2/2^k`). This module classifies a spectrum,
//! extracts the additive sets that drive the argument, performs the
//! dimension-reduction loop and recovers the pieces.

mod classify;
mod decompose;
mod generate;
mod kill;
mod reduce;
mod search;
mod sets;

pub use classify::{classify, Classification, Tag};
pub use decompose::{decompose, verify_pieces, Decomposition};
pub use generate::{generate, Family};
pub use kill::{kill_number, KILL_NUMBER_MAX_DIM};
pub use reduce::{is_irreducible, reduce, ReductionStep, ReductionTrace};
pub use search::partition_into_affine;
pub use sets::{spectral_sets, triangle_neighbors, SpectralSets};
