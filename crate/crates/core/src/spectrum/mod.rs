//! Exact Fourier analysis of Boolean functions.
//!
//! Spectra are kept as integers `F(α) = Σ_x f(x) (-1)^<α,x> = 2^n f̂(α)`, so
//! every coefficient carries the implicit denominator `2^n` and nothing is
//! ever rounded.

mod dyadic;
mod function;

pub use dyadic::DyadicRational;
pub use function::BooleanFunction;

use crate::error::{Error, Result};
use crate::gf2::{check_dim, Gf2Matrix, Gf2Vector, Subspace};

/// Integer-scaled Walsh-Hadamard spectrum.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Spectrum {
    n: usize,
    coeffs: Vec<i64>,
}

impl Spectrum {
    /// Wraps `2^n` scaled coefficients, the entry at index `α` being `F(α)`.
    pub fn from_coeffs(n: usize, coeffs: Vec<i64>) -> Result<Self> {
        check_dim(n)?;
        if coeffs.len() != 1 << n {
            return Err(Error::DimensionMismatch {
                left: 1 << n,
                right: coeffs.len(),
            });
        }
        Ok(Self { n, coeffs })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    /// `F(α) = 2^n f̂(α)`.
    pub fn get(&self, alpha: u32) -> i64 {
        self.coeffs[alpha as usize]
    }

    /// `f̂(α)` as an exact dyadic rational.
    pub fn coefficient(&self, alpha: u32) -> DyadicRational {
        DyadicRational::new(self.get(alpha), self.n as u32)
    }

    /// Nonzero entries `(α, F(α))` in ascending `α`.
    pub fn nonzero(&self) -> impl Iterator<Item = (u32, i64)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(a, &c)| (a as u32, c))
    }

    /// Dimension of the span of the Fourier support.
    pub fn fourier_dimension(&self) -> usize {
        Subspace::from_bits(self.n, self.nonzero().map(|(a, _)| a)).dim()
    }
}

/// In-place unnormalized Walsh-Hadamard butterfly.
pub(crate) fn butterfly(buf: &mut [i64]) {
    let len = buf.len();
    let mut h = 1;
    while h < len {
        for block in buf.chunks_exact_mut(2 * h) {
            let (lo, hi) = block.split_at_mut(h);
            for (a, b) in lo.iter_mut().zip(hi.iter_mut()) {
                let (x, y) = (*a, *b);
                *a = x + y;
                *b = x - y;
            }
        }
        h <<= 1;
    }
}

/// Exact transform of `f`.
pub fn wht(f: &BooleanFunction) -> Spectrum {
    let mut buf: Vec<i64> = (0..1u32 << f.n()).map(|x| i64::from(f.get(x))).collect();
    butterfly(&mut buf);
    Spectrum {
        n: f.n(),
        coeffs: buf,
    }
}

/// Fourier inversion `f(x) = Σ_α f̂(α) χ_α(x)`, value by value.
pub fn inverse_wht(s: &Spectrum) -> Vec<DyadicRational> {
    let mut buf = s.coeffs.clone();
    butterfly(&mut buf);
    buf.into_iter()
        .map(|v| DyadicRational::new(v, s.n as u32))
        .collect()
}

/// Inverts `s` and casts to a 0/1 function, failing on any other value.
pub fn to_boolean(s: &Spectrum) -> Result<BooleanFunction> {
    let mut buf = s.coeffs.clone();
    butterfly(&mut buf);
    let one = 1i64 << s.n;
    let mut f = BooleanFunction::zero(s.n)?;
    for (x, &v) in buf.iter().enumerate() {
        match v {
            0 => {}
            v if v == one => f.set(x as u32),
            _ => return Err(Error::NotBoolean),
        }
    }
    Ok(f)
}

/// Maximum granularity over the nonzero coefficients; 0 for the zero spectrum.
pub fn granularity(s: &Spectrum) -> u32 {
    s.nonzero()
        .map(|(_, c)| DyadicRational::new(c, s.n as u32).granularity())
        .max()
        .unwrap_or(0)
}

/// Number of nonzero coefficients.
pub fn sparsity(s: &Spectrum) -> usize {
    s.coeffs.iter().filter(|&&c| c != 0).count()
}

/// Whether `s` is the spectrum of a 0/1-valued function (invert and check).
pub fn is_boolean_spectrum(s: &Spectrum) -> bool {
    to_boolean(s).is_ok()
}

/// The same test through the convolution identity
/// `2^n F(α) = Σ_β F(β) F(α + β)` for every `α`. Quadratic in `2^n`.
pub fn is_boolean_spectrum_convolution(s: &Spectrum) -> bool {
    let size = s.coeffs.len();
    let scale = 1i128 << s.n;
    (0..size).all(|a| {
        let conv: i128 = (0..size)
            .map(|b| i128::from(s.coeffs[b]) * i128::from(s.coeffs[a ^ b]))
            .sum();
        conv == scale * i128::from(s.coeffs[a])
    })
}

/// Sub-functions `f_0(y) = f(0, y)` and `f_1(y) = f(1, y)` on `n - 1` bits.
pub fn restrict_first_bit(f: &BooleanFunction) -> Result<(BooleanFunction, BooleanFunction)> {
    if f.n() == 0 {
        return Err(Error::Precondition(
            "cannot restrict a function of zero variables".into(),
        ));
    }
    let m = f.n() - 1;
    let f0 = BooleanFunction::from_fn(m, |y| f.get(y << 1))?;
    let f1 = BooleanFunction::from_fn(m, |y| f.get(y << 1 | 1))?;
    Ok((f0, f1))
}

/// `h(x, y) = f(x) g(y)`, with `x` on the low `n_f` coordinates.
pub fn tensor(f: &BooleanFunction, g: &BooleanFunction) -> Result<BooleanFunction> {
    let n1 = f.n();
    let mut h = BooleanFunction::zero(n1 + g.n())?;
    let fs = f.support();
    for y in g.support() {
        for &x in &fs {
            h.set(y << n1 | x);
        }
    }
    Ok(h)
}

/// `g(x) = f(Lx)`.
pub fn apply_transform(f: &BooleanFunction, l: &Gf2Matrix) -> Result<BooleanFunction> {
    if l.n() != f.n() {
        return Err(Error::DimensionMismatch {
            left: f.n(),
            right: l.n(),
        });
    }
    BooleanFunction::from_fn(f.n(), |x| f.get(l.apply_bits(x)))
}

/// `h(x) = f(x + a)`.
pub fn shift(f: &BooleanFunction, a: Gf2Vector) -> Result<BooleanFunction> {
    if a.dim() != f.n() {
        return Err(Error::DimensionMismatch {
            left: f.n(),
            right: a.dim(),
        });
    }
    let a = a.bits();
    BooleanFunction::from_fn(f.n(), |x| f.get(x ^ a))
}
