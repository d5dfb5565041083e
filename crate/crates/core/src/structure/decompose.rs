use std::collections::HashMap;

use super::classify::{classify, Classification, Tag};
use super::reduce::reduce_in_scope;
use super::search::partition_into_affine;
use super::sets::{spectral_sets, SpectralSets};
use crate::addcomb::{sumset, PointSet};
use crate::error::{Error, Result};
use crate::gf2::{affine_span_bits, AffineSubspace, Gf2Vector, Subspace};
use crate::spectrum::{shift, wht, BooleanFunction, Spectrum};

/// Disjoint affine pieces whose union is the support of a function.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    pub pieces: Vec<AffineSubspace>,
    pub classification: Classification,
    pub verified: bool,
}

impl Decomposition {
    /// Indicator of the union of the pieces.
    pub fn indicator(&self, n: usize) -> Result<BooleanFunction> {
        let mut f = BooleanFunction::zero(n)?;
        for piece in &self.pieces {
            if piece.n() != n {
                return Err(Error::DimensionMismatch {
                    left: piece.n(),
                    right: n,
                });
            }
            for x in piece.points() {
                f.set(x);
            }
        }
        Ok(f)
    }

    /// Piece dimensions in ascending order.
    pub fn shape(&self) -> Vec<usize> {
        let mut dims: Vec<usize> = self.pieces.iter().map(AffineSubspace::dim).collect();
        dims.sort_unstable();
        dims
    }
}

/// Whether the pieces are pairwise disjoint and cover exactly the support.
pub fn verify_pieces(f: &BooleanFunction, pieces: &[AffineSubspace]) -> bool {
    let mut covered = 0u64;
    for (i, p) in pieces.iter().enumerate() {
        if p.n() != f.n() || pieces[..i].iter().any(|q| !p.is_disjoint(q)) {
            return false;
        }
        if !p.points().all(|x| f.get(x)) {
            return false;
        }
        covered += p.len() as u64;
    }
    covered == f.weight()
}

/// Recovers the affine pieces promised by the structure theorems.
///
/// Fails with `OutOfScope` when the spectrum is not of the form handled here
/// and with `VerificationFailed` if the recovered pieces do not check out.
pub fn decompose(f: &BooleanFunction) -> Result<Decomposition> {
    let s = wht(f);
    let classification = classify(&s);
    let n = f.n();
    let k = classification.k as usize;
    let (pieces, expected) = match classification.tag {
        Tag::OutOfScope => return Err(Error::OutOfScope),
        Tag::Trivial => (Vec::new(), (0, 0)),
        Tag::Rvl => {
            let span = affine_span_bits(n, f.support()).expect("nonzero");
            (vec![span], (1, n - k))
        }
        Tag::TwoSubspace | Tag::ExceptionalK4Candidate => {
            let pieces = two_level(f)?;
            if pieces.len() == 4 && classification.core_k == Some(4) {
                (pieces, (4, n - k - 1))
            } else {
                (pieces, (2, n - k))
            }
        }
    };
    let (count, dim) = expected;
    let verified = pieces.len() == count
        && pieces.iter().all(|p| p.dim() == dim)
        && verify_pieces(f, &pieces);
    let out = Decomposition {
        pieces,
        classification,
        verified,
    };
    if verified {
        Ok(out)
    } else {
        Err(Error::VerificationFailed(Box::new(out)))
    }
}

/// Handles `f̂(0) = 2/2^k`: reduce, find the pieces of the core, lift them.
fn two_level(f: &BooleanFunction) -> Result<Vec<AffineSubspace>> {
    let (core, trace) = reduce_in_scope(f)?;
    let nc = core.n();
    let base = core.support()[0];
    let normalized = shift(&core, Gf2Vector::new(nc, base)?)?;
    let s = wht(&normalized);
    let support = PointSet::from_points(nc, normalized.support())?;
    let sets = spectral_sets(&s).ok();
    let kc = match &sets {
        Some(sets) => sets.k as usize,
        None => crate::spectrum::granularity(&s) as usize,
    };

    let exceptional = kc == 4
        && sets
            .as_ref()
            .is_some_and(|sets| sumset(&sets.b, &sets.b).is_ok_and(|b| b.len() == 22));
    let found = if exceptional {
        partition_into_affine(&support, nc - kc - 1, 4)
    } else {
        sets.as_ref()
            .and_then(|sets| two_pieces(&s, &support, sets))
            .or_else(|| partition_into_affine(&support, nc - kc, 2))
            .or_else(|| {
                if kc == 4 {
                    partition_into_affine(&support, nc - kc - 1, 4)
                } else {
                    None
                }
            })
    };
    Ok(found
        .unwrap_or_default()
        .iter()
        .map(|p| trace.lift(&p.translate(base)))
        .collect())
}

/// Reads the two pieces off the spectral sets: one is a coset of
/// `span(B)^⊥` (or `span{β, α}^⊥` when `k = 2`), the other is what remains.
fn two_pieces(s: &Spectrum, support: &PointSet, sets: &SpectralSets) -> Option<Vec<AffineSubspace>> {
    let n = s.n();
    let k = sets.k as usize;
    let (w1, gamma, l) = if k == 2 {
        let beta = sets.b.iter().next()?;
        let a: Vec<u32> = sets.a.iter().collect();
        let alpha = a.iter().copied().find(|&x| {
            let rest = a.iter().filter(|&&y| y != x).fold(0, |acc, &y| acc ^ y);
            s.get(beta ^ x) == 0 && rest == beta ^ x
        })?;
        let l: Vec<u32> = a.iter().copied().filter(|&y| y != alpha).collect();
        (Subspace::from_bits(n, [beta, alpha]), beta ^ alpha, l)
    } else {
        if sets.gamma.len() != 1 {
            return None;
        }
        (
            sets.b.linear_span(),
            sets.gamma.iter().next()?,
            sets.l.to_vec(),
        )
    };
    let v1 = w1.orthogonal_complement();
    let d = n - k;
    if v1.dim() != d {
        return None;
    }

    let mut cosets: HashMap<u32, usize> = HashMap::new();
    for x in support.iter() {
        *cosets.entry(v1.reduce(x)).or_default() += 1;
    }
    let mut full = cosets.iter().filter(|&(_, &c)| c == 1 << d);
    let (&rep, _) = full.next()?;
    if full.next().is_some() {
        return None;
    }
    let first = AffineSubspace::from_parts(rep, v1);
    let rest: Vec<u32> = support.iter().filter(|&x| !first.contains(x)).collect();
    let second = affine_span_bits(n, rest.iter().copied())?;
    if second.len() != rest.len() || second.dim() != d {
        return None;
    }
    let expected_dir = Subspace::from_bits(n, l.into_iter().chain([gamma])).orthogonal_complement();
    if *second.direction() != expected_dir {
        return None;
    }
    Some(vec![first, second])
}
