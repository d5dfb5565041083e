use std::collections::BTreeSet;
use std::ops::ControlFlow;

use super::{check_dim, mask, Gf2Vector};
use crate::error::{Error, Result};

/// A linear subspace of F2^n kept in fully reduced row-echelon form.
///
/// The pivot of a row is its highest set bit. Rows are sorted by pivot in
/// descending order and every pivot bit is cleared in all other rows, so two
/// subspaces are equal exactly when their bases are equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace {
    n: usize,
    basis: Vec<u32>,
}

#[inline]
fn pivot(row: u32) -> u32 {
    31 - row.leading_zeros()
}

impl Subspace {
    pub fn zero(n: usize) -> Result<Self> {
        check_dim(n)?;
        Ok(Self { n, basis: Vec::new() })
    }

    pub fn full(n: usize) -> Result<Self> {
        check_dim(n)?;
        Ok(Self {
            n,
            basis: (0..n).rev().map(|i| 1u32 << i).collect(),
        })
    }

    /// Span of raw bit patterns, all assumed to lie in F2^n.
    pub(crate) fn from_bits(n: usize, generators: impl IntoIterator<Item = u32>) -> Self {
        let mut s = Self { n, basis: Vec::new() };
        for g in generators {
            debug_assert!(g & !mask(n) == 0);
            s.insert(g);
        }
        s
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Number of points, `2^dim`.
    pub fn len(&self) -> usize {
        1 << self.basis.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Basis rows as raw bit patterns, pivots descending.
    pub fn basis(&self) -> &[u32] {
        &self.basis
    }

    pub fn basis_vectors(&self) -> impl Iterator<Item = Gf2Vector> + '_ {
        self.basis
            .iter()
            .map(move |&b| Gf2Vector::from_bits_unchecked(self.n, b))
    }

    /// Reduces `x` modulo the subspace. The result is the smallest element of
    /// the coset `x + V`.
    pub fn reduce(&self, mut x: u32) -> u32 {
        for &row in &self.basis {
            if x >> pivot(row) & 1 == 1 {
                x ^= row;
            }
        }
        x
    }

    pub fn contains(&self, x: u32) -> bool {
        self.reduce(x) == 0
    }

    /// Adds a generator. Returns `true` if the dimension grew.
    pub(crate) fn insert(&mut self, v: u32) -> bool {
        let v = self.reduce(v);
        if v == 0 {
            return false;
        }
        let p = pivot(v);
        for row in self.basis.iter_mut() {
            if *row >> p & 1 == 1 {
                *row ^= v;
            }
        }
        let at = self.basis.partition_point(|&r| pivot(r) > p);
        self.basis.insert(at, v);
        true
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        self.n == other.n && self.basis.iter().all(|&b| other.contains(b))
    }

    /// All `2^dim` elements, in Gray-code order starting at 0.
    pub fn elements(&self) -> SpanIter<'_> {
        SpanIter::new(0, &self.basis)
    }

    /// `{w : <w, v> = 0 for all v in V}`.
    pub fn orthogonal_complement(&self) -> Subspace {
        let pivots: u32 = self.basis.iter().fold(0, |acc, &r| acc | 1 << pivot(r));
        let free = mask(self.n) & !pivots;
        let gens = (0..self.n as u32)
            .filter(|j| free >> j & 1 == 1)
            .map(|j| {
                self.basis
                    .iter()
                    .filter(|&&r| r >> j & 1 == 1)
                    .fold(1u32 << j, |w, &r| w | 1 << pivot(r))
            });
        Subspace::from_bits(self.n, gens)
    }
}

/// Gray-code walk over `start + span(basis)`.
pub struct SpanIter<'a> {
    basis: &'a [u32],
    current: u32,
    index: u64,
    total: u64,
}

impl<'a> SpanIter<'a> {
    fn new(start: u32, basis: &'a [u32]) -> Self {
        Self {
            basis,
            current: start,
            index: 0,
            total: 1u64 << basis.len(),
        }
    }
}

impl Iterator for SpanIter<'_> {
    type Item = u32;

    fn next(&mut self) -> Option<u32> {
        if self.index == self.total {
            return None;
        }
        let out = self.current;
        self.index += 1;
        if self.index < self.total {
            self.current ^= self.basis[self.index.trailing_zeros() as usize];
        }
        Some(out)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let left = (self.total - self.index) as usize;
        (left, Some(left))
    }
}

impl ExactSizeIterator for SpanIter<'_> {}

/// A coset `shift + direction` with the shift reduced to the smallest element
/// of the coset.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AffineSubspace {
    shift: u32,
    direction: Subspace,
}

impl AffineSubspace {
    pub fn new(shift: Gf2Vector, direction: Subspace) -> Result<Self> {
        if shift.dim() != direction.n {
            return Err(Error::DimensionMismatch {
                left: shift.dim(),
                right: direction.n,
            });
        }
        Ok(Self::from_parts(shift.bits(), direction))
    }

    pub(crate) fn from_parts(shift: u32, direction: Subspace) -> Self {
        let shift = direction.reduce(shift);
        Self { shift, direction }
    }

    pub fn shift(&self) -> Gf2Vector {
        Gf2Vector::from_bits_unchecked(self.direction.n, self.shift)
    }

    pub fn shift_bits(&self) -> u32 {
        self.shift
    }

    pub fn direction(&self) -> &Subspace {
        &self.direction
    }

    pub fn n(&self) -> usize {
        self.direction.n
    }

    pub fn dim(&self) -> usize {
        self.direction.dim()
    }

    pub fn len(&self) -> usize {
        self.direction.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn contains(&self, x: u32) -> bool {
        self.direction.reduce(x) == self.shift
    }

    pub fn points(&self) -> SpanIter<'_> {
        SpanIter::new(self.shift, &self.direction.basis)
    }

    pub fn translate(&self, a: u32) -> AffineSubspace {
        Self::from_parts(self.shift ^ a, self.direction.clone())
    }

    /// Whether the two cosets share no point.
    pub fn is_disjoint(&self, other: &AffineSubspace) -> bool {
        // a + U and b + W meet iff a + b lies in U + W
        let mut sum = self.direction.clone();
        for &b in &other.direction.basis {
            sum.insert(b);
        }
        !sum.contains(self.shift ^ other.shift)
    }
}

fn check_points(n: usize, points: &[Gf2Vector]) -> Result<()> {
    check_dim(n)?;
    match points.iter().find(|p| p.dim() != n) {
        Some(p) => Err(Error::DimensionMismatch {
            left: n,
            right: p.dim(),
        }),
        None => Ok(()),
    }
}

/// Smallest linear subspace of F2^n containing every point. The empty set
/// spans the zero subspace.
pub fn linear_span(n: usize, points: &[Gf2Vector]) -> Result<Subspace> {
    check_points(n, points)?;
    Ok(Subspace::from_bits(n, points.iter().map(|p| p.bits())))
}

/// Smallest affine subspace containing every point.
pub fn affine_span(points: &[Gf2Vector]) -> Result<AffineSubspace> {
    let first = points.first().ok_or(Error::Empty)?;
    check_points(first.dim(), points)?;
    Ok(affine_span_bits(
        first.dim(),
        points.iter().map(|p| p.bits()),
    )
    .expect("nonempty"))
}

pub(crate) fn affine_span_bits(
    n: usize,
    points: impl IntoIterator<Item = u32>,
) -> Option<AffineSubspace> {
    let mut it = points.into_iter();
    let base = it.next()?;
    let direction = Subspace::from_bits(n, it.map(|p| p ^ base));
    Some(AffineSubspace::from_parts(base, direction))
}

/// Whether the (deduplicated) points form exactly one affine subspace.
pub fn is_full_affine_subspace(points: &[Gf2Vector]) -> Result<bool> {
    let span = affine_span(points)?;
    let distinct: BTreeSet<u32> = points.iter().map(|p| p.bits()).collect();
    Ok(span.len() == distinct.len())
}

/// Visits every linear subspace of F2^n of the given dimension once, passing
/// its reduced row-echelon basis. Stops early when the visitor breaks.
pub fn enumerate_subspaces<F>(n: usize, dim: usize, mut visit: F) -> ControlFlow<()>
where
    F: FnMut(&[u32]) -> ControlFlow<()>,
{
    if dim > n {
        return ControlFlow::Continue(());
    }
    let mut rows = vec![0u32; dim];
    if dim == 0 {
        return visit(&rows);
    }
    // pivot sets by Gosper's hack over n-bit masks with `dim` bits set
    let mut pivots: u64 = (1u64 << dim) - 1;
    while pivots < 1u64 << n {
        let pivot_list: Vec<u32> = (0..n as u32).rev().filter(|p| pivots >> p & 1 == 1).collect();
        // free slots: (row, bit) with bit below the row's pivot and not a pivot itself
        let slots: Vec<(usize, u32)> = pivot_list
            .iter()
            .enumerate()
            .flat_map(|(r, &p)| {
                (0..p)
                    .filter(move |q| pivots >> q & 1 == 0)
                    .map(move |q| (r, q))
            })
            .collect();
        for fill in 0u64..1u64 << slots.len() {
            for (r, &p) in pivot_list.iter().enumerate() {
                rows[r] = 1 << p;
            }
            for (s, &(r, q)) in slots.iter().enumerate() {
                if fill >> s & 1 == 1 {
                    rows[r] |= 1 << q;
                }
            }
            visit(&rows)?;
        }
        let c = pivots & pivots.wrapping_neg();
        let r = pivots + c;
        pivots = (((r ^ pivots) >> 2) / c) | r;
    }
    ControlFlow::Continue(())
}
