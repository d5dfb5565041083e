//! JSON wire formats. Points are integers with `x1` as the least
//! significant bit.

use serde::{Deserialize, Serialize};

use crate::addcomb::PointSet;
use crate::error::{Error, Result};
use crate::gf2::AffineSubspace;
use crate::spectrum::{BooleanFunction, Spectrum};
use crate::structure::{Classification, Decomposition, Tag};

/// A function given by its support or by a hex truth table. Output always
/// uses the sorted support.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FunctionJson {
    pub n: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub support: Option<Vec<u32>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub truth_table_hex: Option<String>,
}

impl FunctionJson {
    pub fn from_function(f: &BooleanFunction) -> Self {
        Self {
            n: f.n(),
            support: Some(f.support()),
            truth_table_hex: None,
        }
    }

    pub fn to_function(&self) -> Result<BooleanFunction> {
        match (&self.support, &self.truth_table_hex) {
            (Some(support), None) => BooleanFunction::from_support(self.n, support),
            (None, Some(hex)) => BooleanFunction::from_table_hex(self.n, hex),
            _ => Err(Error::InvalidParameter(
                "expected exactly one of `support` and `truth_table_hex`".into(),
            )),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoeffJson {
    pub alpha: u32,
    /// `F(α) = 2^n f̂(α)`.
    pub num: i64,
}

/// Coefficients `num / 2^den_log2`, sorted by `alpha`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpectrumJson {
    pub n: usize,
    pub den_log2: usize,
    pub coeffs: Vec<CoeffJson>,
}

impl SpectrumJson {
    pub fn from_spectrum(s: &Spectrum, nonzero_only: bool) -> Self {
        let coeffs = s
            .coeffs()
            .iter()
            .enumerate()
            .filter(|&(_, &c)| !nonzero_only || c != 0)
            .map(|(alpha, &num)| CoeffJson {
                alpha: alpha as u32,
                num,
            })
            .collect();
        Self {
            n: s.n(),
            den_log2: s.n(),
            coeffs,
        }
    }

    /// Missing entries are zero. `den_log2` may differ from `n`; the
    /// numerators are rescaled to the denominator `2^n`.
    pub fn to_spectrum(&self) -> Result<Spectrum> {
        crate::gf2::check_dim(self.n)?;
        let mut coeffs = vec![0i64; 1 << self.n];
        for c in &self.coeffs {
            let slot = coeffs
                .get_mut(c.alpha as usize)
                .ok_or(Error::OutOfRange {
                    value: u64::from(c.alpha),
                    n: self.n,
                })?;
            *slot = rescale(c.num, self.den_log2, self.n)?;
        }
        Spectrum::from_coeffs(self.n, coeffs)
    }
}

fn rescale(num: i64, from: usize, to: usize) -> Result<i64> {
    if from <= to {
        num.checked_mul(1i64 << (to - from))
            .ok_or_else(|| Error::InvalidParameter("coefficient overflows".into()))
    } else {
        let d = 1i64 << (from - to).min(62);
        if num % d != 0 {
            return Err(Error::InvalidParameter(format!(
                "coefficient {num}/2^{from} is not a multiple of 1/2^{to}"
            )));
        }
        Ok(num / d)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PieceJson {
    pub shift: u32,
    pub basis: Vec<u32>,
}

impl PieceJson {
    pub fn from_piece(p: &AffineSubspace) -> Self {
        let mut basis = p.direction().basis().to_vec();
        basis.sort_unstable();
        Self {
            shift: p.shift_bits(),
            basis,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecompositionJson {
    pub classification: Tag,
    pub k: u32,
    pub pieces: Vec<PieceJson>,
    pub verified: bool,
}

impl DecompositionJson {
    pub fn from_decomposition(d: &Decomposition) -> Self {
        Self {
            classification: d.classification.tag,
            k: d.classification.k,
            pieces: d.pieces.iter().map(PieceJson::from_piece).collect(),
            verified: d.verified,
        }
    }
}

pub type ClassificationJson = Classification;

/// A set of points; `support` is accepted in place of `points`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PointSetJson {
    pub n: usize,
    #[serde(alias = "support")]
    pub points: Vec<u32>,
}

impl PointSetJson {
    pub fn from_set(a: &PointSet) -> Self {
        Self {
            n: a.n(),
            points: a.to_vec(),
        }
    }

    pub fn to_set(&self) -> Result<PointSet> {
        PointSet::from_points(self.n, self.points.iter().copied())
    }
}
