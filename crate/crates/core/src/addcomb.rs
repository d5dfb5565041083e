//! Set addition in F2^n: sumsets, doubling constants, sum-free sets, the
//! exact affine-span bound as a function of the doubling constant, and the
//! small-doubling subgroup criterion.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigUint;
use num_rational::Ratio;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gf2::{affine_span, check_dim, mask, Gf2Vector, Subspace};

/// A subset of F2^n stored as a bitset over all `2^n` points.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PointSet {
    n: usize,
    words: Vec<u64>,
}

// masks selecting the low half of each 2^j-bit block within a word
const LOW_HALVES: [u64; 6] = [
    0x5555_5555_5555_5555,
    0x3333_3333_3333_3333,
    0x0f0f_0f0f_0f0f_0f0f,
    0x00ff_00ff_00ff_00ff,
    0x0000_ffff_0000_ffff,
    0x0000_0000_ffff_ffff,
];

#[inline]
fn xor_permute_word(mut w: u64, a: u32) -> u64 {
    for (j, &lo) in LOW_HALVES.iter().enumerate() {
        if a >> j & 1 == 1 {
            let s = 1 << j;
            w = (w & lo) << s | (w >> s) & lo;
        }
    }
    w
}

impl PointSet {
    pub fn empty(n: usize) -> Result<Self> {
        check_dim(n)?;
        Ok(Self {
            n,
            words: vec![0; if n <= 6 { 1 } else { 1 << (n - 6) }],
        })
    }

    pub fn from_points(n: usize, points: impl IntoIterator<Item = u32>) -> Result<Self> {
        let mut s = Self::empty(n)?;
        for p in points {
            if p & !mask(n) != 0 {
                return Err(Error::OutOfRange { value: p.into(), n });
            }
            s.insert(p);
        }
        Ok(s)
    }

    pub fn from_vectors(n: usize, points: &[Gf2Vector]) -> Result<Self> {
        if let Some(p) = points.iter().find(|p| p.dim() != n) {
            return Err(Error::DimensionMismatch {
                left: n,
                right: p.dim(),
            });
        }
        Self::from_points(n, points.iter().map(|p| p.bits()))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn contains(&self, x: u32) -> bool {
        self.words[(x >> 6) as usize] >> (x & 63) & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, x: u32) {
        self.words[(x >> 6) as usize] |= 1 << (x & 63);
    }

    pub fn remove(&mut self, x: u32) {
        self.words[(x >> 6) as usize] &= !(1 << (x & 63));
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// Members in ascending order.
    pub fn iter(&self) -> impl Iterator<Item = u32> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let b = w.trailing_zeros();
                w &= w - 1;
                Some((i as u32) << 6 | b)
            })
        })
    }

    pub fn to_vec(&self) -> Vec<u32> {
        self.iter().collect()
    }

    fn zip_with(&self, other: &PointSet, op: impl Fn(u64, u64) -> u64) -> PointSet {
        assert_eq!(self.n, other.n, "point sets of different dimension");
        PointSet {
            n: self.n,
            words: self
                .words
                .iter()
                .zip(&other.words)
                .map(|(&a, &b)| op(a, b))
                .collect(),
        }
    }

    pub fn union(&self, other: &PointSet) -> PointSet {
        self.zip_with(other, |a, b| a | b)
    }

    pub fn intersection(&self, other: &PointSet) -> PointSet {
        self.zip_with(other, |a, b| a & b)
    }

    pub fn difference(&self, other: &PointSet) -> PointSet {
        self.zip_with(other, |a, b| a & !b)
    }

    pub fn is_subset(&self, other: &PointSet) -> bool {
        self.difference(other).is_empty()
    }

    pub fn is_disjoint(&self, other: &PointSet) -> bool {
        self.intersection(other).is_empty()
    }

    /// `a + self`.
    pub fn translated(&self, a: u32) -> PointSet {
        let hi = (a >> 6) as usize;
        let mut words = vec![0u64; self.words.len()];
        for (i, &w) in self.words.iter().enumerate() {
            words[i ^ hi] = xor_permute_word(w, a & 63);
        }
        PointSet { n: self.n, words }
    }

    /// Linear span of the members.
    pub fn linear_span(&self) -> Subspace {
        Subspace::from_bits(self.n, self.iter())
    }

    /// Whether the set is a linear subspace.
    pub fn is_subspace(&self) -> bool {
        !self.is_empty() && self.linear_span().len() == self.len()
    }
}

impl fmt::Debug for PointSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PointSet(n={}, ", self.n)?;
        f.debug_set().entries(self.iter()).finish()?;
        write!(f, ")")
    }
}

fn same_dim(a: &PointSet, b: &PointSet) -> Result<()> {
    if a.n != b.n {
        return Err(Error::DimensionMismatch {
            left: a.n,
            right: b.n,
        });
    }
    Ok(())
}

/// `{a + b : a in A, b in B}`.
pub fn sumset(a: &PointSet, b: &PointSet) -> Result<PointSet> {
    same_dim(a, b)?;
    let mut out = PointSet::empty(a.n)?;
    for x in a.iter() {
        let shifted = b.translated(x);
        for (o, w) in out.words.iter_mut().zip(shifted.words) {
            *o |= w;
        }
    }
    Ok(out)
}

/// `kA = A + ... + A` (k times).
pub fn iterated_sumset(a: &PointSet, k: usize) -> Result<PointSet> {
    if k == 0 {
        return Err(Error::InvalidParameter("iterated sumset needs k >= 1".into()));
    }
    let mut acc = a.clone();
    for _ in 1..k {
        acc = sumset(&acc, a)?;
    }
    Ok(acc)
}

/// Whether `(A + A) ∩ A = ∅`.
pub fn is_sum_free(a: &PointSet) -> bool {
    a.iter().all(|x| a.translated(x).is_disjoint(a))
}

/// A nonnegative rational in lowest terms.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Fraction(Ratio<BigUint>);

impl Fraction {
    pub fn new(num: u64, den: u64) -> Result<Self> {
        if den == 0 {
            return Err(Error::InvalidParameter("zero denominator".into()));
        }
        Ok(Self(Ratio::new(num.into(), den.into())))
    }

    fn from_big(num: BigUint, den: BigUint) -> Self {
        Self(Ratio::new(num, den))
    }

    pub fn numer(&self) -> &BigUint {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigUint {
        self.0.denom()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    /// Compares against `num / den` without allocating a fraction.
    pub fn cmp_ratio(&self, num: u64, den: u64) -> Ordering {
        (self.numer() * big(den)).cmp(&(self.denom() * big(num)))
    }
}

impl fmt::Display for Fraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.numer(), self.denom())
    }
}

impl fmt::Debug for Fraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Fraction({self})")
    }
}

/// `|2A| / |A|`.
pub fn doubling_constant(a: &PointSet) -> Result<Fraction> {
    if a.is_empty() {
        return Err(Error::Empty);
    }
    let doubled = sumset(a, a)?;
    Fraction::new(doubled.len() as u64, a.len() as u64)
}

fn big(x: u64) -> BigUint {
    BigUint::from(x)
}

/// Lower end of the bracket for `s`: `(C(s,2) + s + 1) / (s + 1)`.
fn bracket_low(s: u64) -> Ratio<BigUint> {
    Ratio::new(big(s * (s - 1) / 2 + s + 1), big(s + 1))
}

/// The unique positive integer `s` with
/// `(C(s,2)+s+1)/(s+1) <= K < (C(s+1,2)+s+2)/(s+2)`.
///
/// The upper end of the bracket for `s` is the lower end for `s + 1`, so the
/// brackets tile `[1, ∞)` and the search walks `s = 1, 2, ...`.
pub fn even_zohar_s(k: &Fraction) -> Result<u64> {
    if k.0 < Ratio::one() {
        return Err(Error::InvalidParameter(format!(
            "doubling constant {k} is below 1"
        )));
    }
    let mut s = 1;
    while bracket_low(s + 1) <= k.0 {
        s += 1;
    }
    Ok(s)
}

/// Tight upper bound on `|<A>| / |A|` for a set with doubling constant `K`,
/// where `<A>` is the affine span:
///
/// * `2^s / (C(s,2)+s+1) * K` when `K < (s^2+s+1) / (2s)`,
/// * `2^(s+1) / (s^2+s+1) * K` otherwise.
pub fn even_zohar_f(k: &Fraction) -> Result<Fraction> {
    let s = even_zohar_s(k)?;
    let split = Ratio::new(big(s * s + s + 1), big(2 * s));
    let factor = if k.0 < split {
        Ratio::new(BigUint::one() << s, big(s * (s - 1) / 2 + s + 1))
    } else {
        Ratio::new(BigUint::one() << (s + 1), big(s * s + s + 1))
    };
    let value = factor * &k.0;
    Ok(Fraction::from_big(value.numer().clone(), value.denom().clone()))
}

/// `|<A>| / |A|` with `<A>` the affine span.
pub fn affine_span_ratio(a: &PointSet) -> Result<Fraction> {
    if a.is_empty() {
        return Err(Error::Empty);
    }
    let pts: Vec<Gf2Vector> = a
        .iter()
        .map(|p| Gf2Vector::new(a.n, p))
        .collect::<Result<_>>()?;
    let span = affine_span(&pts)?;
    Fraction::new(span.len() as u64, a.len() as u64)
}

/// Outcome of the small-doubling subgroup test.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum LabaVerdict {
    /// `|A - A| >= (3/2) |A|`, so the criterion says nothing.
    NotApplicable,
    /// `|A - A| < (3/2) |A|` and `A - A` is a subgroup.
    Subgroup,
    /// `|A - A| < (3/2) |A|` but `A - A` is not closed; never expected.
    Violation,
}

/// If `|A - A| < (3/2)|A|` then `A - A` must be a subgroup.
pub fn laba_check(a: &PointSet) -> Result<LabaVerdict> {
    if a.is_empty() {
        return Err(Error::Empty);
    }
    // A - A = A + A in characteristic 2
    let diff = sumset(a, a)?;
    if 2 * diff.len() >= 3 * a.len() {
        return Ok(LabaVerdict::NotApplicable);
    }
    let closed = diff.contains(0) && sumset(&diff, &diff)? == diff;
    Ok(if closed {
        LabaVerdict::Subgroup
    } else {
        LabaVerdict::Violation
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(n: usize, pts: &[u32]) -> PointSet {
        PointSet::from_points(n, pts.iter().copied()).unwrap()
    }

    fn b_ce() -> PointSet {
        set(6, &[1, 2, 4, 8, 16, 32, 63])
    }

    fn brute_sumset(a: &PointSet, b: &PointSet) -> PointSet {
        let mut out = PointSet::empty(a.n()).unwrap();
        for x in a.iter() {
            for y in b.iter() {
                out.insert(x ^ y);
            }
        }
        out
    }

    #[test]
    fn translation_matches_pointwise_xor() {
        for n in [3usize, 6, 8] {
            let a = set(n, &[0, 1, 5, (1 << n) - 1]);
            for t in 0..1u32 << n {
                let expected = set(n, &a.iter().map(|x| x ^ t).collect::<Vec<_>>());
                assert_eq!(a.translated(t), expected);
            }
        }
    }

    #[test]
    fn sumset_examples() {
        let a = set(4, &[1, 6, 9, 14]);
        assert_eq!(sumset(&set(4, &[0]), &a).unwrap(), a);

        let h = set(4, &[0, 3, 12, 15]);
        assert_eq!(sumset(&h, &h).unwrap(), h);

        let b = b_ce();
        let two_b = sumset(&b, &b).unwrap();
        assert_eq!(two_b.len(), 22);
        assert_eq!(two_b, brute_sumset(&b, &b));

        assert!(sumset(&PointSet::empty(4).unwrap(), &a).unwrap().is_empty());
        assert!(sumset(&a, &b).is_err());
    }

    #[test]
    fn iterated_sumset_examples() {
        let b = b_ce();
        assert_eq!(iterated_sumset(&b, 1).unwrap(), b);
        assert_eq!(iterated_sumset(&b, 2).unwrap(), sumset(&b, &b).unwrap());
        let three = iterated_sumset(&b, 3).unwrap();
        assert_eq!(three.difference(&b).len(), 35);
        assert!(iterated_sumset(&b, 0).is_err());
    }

    #[test]
    fn doubling_examples() {
        let h = set(4, &[0, 3, 12, 15]);
        assert_eq!(doubling_constant(&h).unwrap(), Fraction::new(1, 1).unwrap());
        assert_eq!(doubling_constant(&b_ce()).unwrap(), Fraction::new(22, 7).unwrap());
        assert_eq!(
            doubling_constant(&set(5, &[19])).unwrap(),
            Fraction::new(1, 1).unwrap()
        );
        assert!(doubling_constant(&PointSet::empty(3).unwrap()).is_err());
    }

    #[test]
    fn sum_free_examples() {
        assert!(is_sum_free(&b_ce()));
        assert!(!is_sum_free(&set(3, &[0, 5])));
        assert!(!is_sum_free(&set(3, &[1, 2, 3])));
    }

    #[test]
    fn even_zohar_s_examples() {
        assert_eq!(even_zohar_s(&Fraction::new(46, 15).unwrap()).unwrap(), 5);
        assert_eq!(even_zohar_s(&Fraction::new(1, 1).unwrap()).unwrap(), 1);
        assert_eq!(even_zohar_s(&Fraction::new(22, 7).unwrap()).unwrap(), 6);
        // just below the s = 6 bracket
        assert_eq!(even_zohar_s(&Fraction::new(219, 70).unwrap()).unwrap(), 5);
        assert!(even_zohar_s(&Fraction::new(9, 10).unwrap()).is_err());
    }

    #[test]
    fn even_zohar_f_examples() {
        let f = even_zohar_f(&Fraction::new(46, 15).unwrap()).unwrap();
        assert_eq!(f, Fraction::new(92, 15).unwrap());
        assert_eq!(f.cmp_ratio(7, 1), Ordering::Less);
        assert_eq!(
            even_zohar_f(&Fraction::new(22, 7).unwrap()).unwrap(),
            Fraction::new(64, 7).unwrap()
        );
        assert_eq!(
            even_zohar_f(&Fraction::new(1, 1).unwrap()).unwrap(),
            Fraction::new(1, 1).unwrap()
        );
        // s = 3, K = 13/6 sits on the branch split: 2^4 / 13 * 13/6 = 8/3
        assert_eq!(even_zohar_s(&Fraction::new(13, 6).unwrap()).unwrap(), 3);
        assert_eq!(
            even_zohar_f(&Fraction::new(13, 6).unwrap()).unwrap(),
            Fraction::new(8, 3).unwrap()
        );
    }

    #[test]
    fn laba_examples() {
        let h = set(4, &[0, 3, 12, 15]);
        assert_eq!(laba_check(&h).unwrap(), LabaVerdict::Subgroup);
        let punctured = set(4, &[1, 2, 3, 4, 5, 6, 7]);
        assert_eq!(laba_check(&punctured).unwrap(), LabaVerdict::Subgroup);
        assert_eq!(sumset(&punctured, &punctured).unwrap().len(), 8);
        let units = set(4, &[1, 2, 4, 8]);
        assert_eq!(sumset(&units, &units).unwrap().len(), 7);
        assert_eq!(laba_check(&units).unwrap(), LabaVerdict::NotApplicable);
        assert!(laba_check(&PointSet::empty(2).unwrap()).is_err());
    }
}
