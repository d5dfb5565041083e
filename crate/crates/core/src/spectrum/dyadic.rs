use std::cmp::Ordering;
use std::fmt;

/// An exact rational `numerator / 2^exponent` in lowest terms.
///
/// The numerator is odd unless the value is zero, in which case the exponent
/// is zero as well. The exponent is then the granularity of the value.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct DyadicRational {
    numerator: i64,
    exponent: u32,
}

impl DyadicRational {
    pub fn new(numerator: i64, exponent: u32) -> Self {
        if numerator == 0 {
            return Self::ZERO;
        }
        let shift = numerator.trailing_zeros().min(exponent);
        Self {
            numerator: numerator >> shift,
            exponent: exponent - shift,
        }
    }

    pub const ZERO: Self = Self {
        numerator: 0,
        exponent: 0,
    };

    pub fn numerator(self) -> i64 {
        self.numerator
    }

    pub fn exponent(self) -> u32 {
        self.exponent
    }

    /// Least `k >= 0` with `self = m / 2^k` for an integer `m`.
    pub fn granularity(self) -> u32 {
        self.exponent
    }

    pub fn is_zero(self) -> bool {
        self.numerator == 0
    }

    /// The value as an integer, if it is one.
    pub fn as_integer(self) -> Option<i64> {
        (self.exponent == 0).then_some(self.numerator)
    }
}

impl Ord for DyadicRational {
    fn cmp(&self, other: &Self) -> Ordering {
        let e = self.exponent.max(other.exponent);
        let a = i128::from(self.numerator) << (e - self.exponent);
        let b = i128::from(other.numerator) << (e - other.exponent);
        a.cmp(&b)
    }
}

impl PartialOrd for DyadicRational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for DyadicRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exponent == 0 {
            write!(f, "{}", self.numerator)
        } else {
            write!(f, "{}/{}", self.numerator, 1u64 << self.exponent)
        }
    }
}
