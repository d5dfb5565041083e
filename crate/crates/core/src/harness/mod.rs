//! Exhaustive and randomized verification, JSON formats and the CLI glue.

pub mod json;
mod report;
mod verify;

pub use report::{VerificationReport, Violation};
pub use verify::{
    enumerate_verify, enumerate_verify_transformed, random_verify, RandomFamily, Sampler, ENUMERATE_MAX_DIM,
};
