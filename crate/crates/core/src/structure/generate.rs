use crate::error::{Error, Result};
use crate::gf2::{check_dim, mask};
use crate::spectrum::{tensor, BooleanFunction};

/// Named families of test functions.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    /// Indicator of `{x : x1 = … = xk = 0}`.
    Affine { n: usize, k: usize },
    /// `{x1..x(k-1) = 0, xk = 1} ∪ {xk..x(2k-1) = 0}`, two disjoint affine
    /// subspaces of dimension `n - k`. Needs `n ≥ 2k - 1`.
    TwoAffine { n: usize, k: usize },
    /// The six-variable function supported on the points of Hamming weight
    /// 0, 5 and 6.
    CounterexampleCore,
    /// The core tensored with the all-ones function on `n - 6` variables.
    CounterexamplePadded { n: usize },
    /// `OR(x1, x2)` on `n` variables.
    IntroFk { n: usize },
    /// `1` unless `x1 = x2 = x3`.
    IntroGk { n: usize },
    /// Indicator of the origin.
    Delta { n: usize },
}

impl Family {
    pub const NAMES: [&'static str; 7] = [
        "affine",
        "two-affine",
        "counterexample-core",
        "counterexample-padded",
        "intro-fk",
        "intro-gk",
        "delta",
    ];

    /// Builds a family from its CLI name. `n` defaults to 6 for the
    /// counterexample families.
    pub fn from_name(name: &str, n: Option<usize>, k: Option<usize>) -> Result<Family> {
        let need_n = || n.ok_or_else(|| Error::InvalidParameter(format!("{name} needs n")));
        let need_k = || k.ok_or_else(|| Error::InvalidParameter(format!("{name} needs k")));
        Ok(match name {
            "affine" => Family::Affine { n: need_n()?, k: need_k()? },
            "two-affine" => Family::TwoAffine { n: need_n()?, k: need_k()? },
            "counterexample-core" => Family::CounterexampleCore,
            "counterexample-padded" => Family::CounterexamplePadded { n: n.unwrap_or(6) },
            "intro-fk" => Family::IntroFk { n: need_n()? },
            "intro-gk" => Family::IntroGk { n: need_n()? },
            "delta" => Family::Delta { n: need_n()? },
            _ => return Err(Error::InvalidParameter(format!("unknown family {name}"))),
        })
    }
}

pub fn generate(family: &Family) -> Result<BooleanFunction> {
    match *family {
        Family::Affine { n, k } => {
            if k > n {
                return Err(Error::InvalidParameter(format!("k = {k} exceeds n = {n}")));
            }
            BooleanFunction::from_fn(n, |x| x & mask(k) == 0)
        }
        Family::TwoAffine { n, k } => {
            if k == 0 || n + 1 < 2 * k {
                return Err(Error::InvalidParameter(format!(
                    "two_affine needs 1 ≤ k and 2k - 1 ≤ n, got n = {n}, k = {k}"
                )));
            }
            let first = mask(k - 1);
            let second = mask(k) << (k - 1);
            let xk = 1u32 << (k - 1);
            BooleanFunction::from_fn(n, |x| x & (first | xk) == xk || x & second == 0)
        }
        Family::CounterexampleCore => {
            BooleanFunction::from_fn(6, |x| matches!(x.count_ones(), 0 | 5 | 6))
        }
        Family::CounterexamplePadded { n } => {
            if n < 6 {
                return Err(Error::InvalidParameter(format!("padding needs n ≥ 6, got {n}")));
            }
            check_dim(n)?;
            let core = generate(&Family::CounterexampleCore)?;
            tensor(&core, &BooleanFunction::ones(n - 6)?)
        }
        Family::IntroFk { n } => {
            if n < 3 {
                return Err(Error::InvalidParameter(format!("intro_fk needs n ≥ 3, got {n}")));
            }
            BooleanFunction::from_fn(n, |x| x & 0b11 != 0)
        }
        Family::IntroGk { n } => {
            if n < 3 {
                return Err(Error::InvalidParameter(format!("intro_gk needs n ≥ 3, got {n}")));
            }
            BooleanFunction::from_fn(n, |x| !matches!(x & 0b111, 0 | 0b111))
        }
        Family::Delta { n } => BooleanFunction::from_fn(n, |x| x == 0),
    }
}
