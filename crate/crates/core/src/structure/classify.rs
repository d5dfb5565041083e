use serde::{Deserialize, Serialize};

use super::reduce::reduce_in_scope;
use crate::addcomb::sumset;
use crate::spectrum::{granularity, is_boolean_spectrum, shift, to_boolean, wht, Spectrum};
use crate::gf2::Gf2Vector;

/// Which structure theorem applies to a spectrum.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Tag {
    /// `f ≡ 0`.
    Trivial,
    /// `f̂(0) = 1/2^k`: a single affine subspace of codimension `k`.
    #[serde(rename = "RvL")]
    Rvl,
    /// `f̂(0) = 2/2^k` with a regular core: two affine subspaces.
    TwoSubspace,
    /// `f̂(0) = 2/2^k` whose core has `k = 4` and `|2B| = 22`: four pieces.
    ExceptionalK4Candidate,
    OutOfScope,
}

impl Tag {
    pub const ALL: [Tag; 5] = [
        Tag::Trivial,
        Tag::Rvl,
        Tag::TwoSubspace,
        Tag::ExceptionalK4Candidate,
        Tag::OutOfScope,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Tag::Trivial => "Trivial",
            Tag::Rvl => "RvL",
            Tag::TwoSubspace => "TwoSubspace",
            Tag::ExceptionalK4Candidate => "ExceptionalK4Candidate",
            Tag::OutOfScope => "OutOfScope",
        }
    }
}

/// Classification of a spectrum with granularity `k` and `f̂(0) = m / 2^k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Classification {
    pub tag: Tag,
    pub k: u32,
    pub m: i64,
    /// `2^(k'-1) - 1` for the granularity `k'` of the irreducible core, when
    /// `m = 2`.
    pub t: Option<u64>,
    /// Granularity of the irreducible core, when `m = 2`.
    pub core_k: Option<u32>,
}

/// Granularity `k` and the numerator `m` of `f̂(0) = m / 2^k`.
pub(crate) fn level(s: &Spectrum) -> (u32, i64) {
    let k = granularity(s);
    (k, s.get(0) >> (s.n() as u32 - k))
}

/// Whether every nonzero coefficient has magnitude `1/2^k` or `2/2^k` and
/// `f̂(0) ∈ {1/2^k, 2/2^k}`.
pub(crate) fn in_scope(s: &Spectrum) -> bool {
    let (k, m) = level(s);
    let unit = 1i64 << (s.n() as u32 - k);
    (m == 1 || m == 2) && s.nonzero().all(|(_, c)| c.abs() == unit || c.abs() == 2 * unit)
}

pub fn classify(s: &Spectrum) -> Classification {
    let (k, m) = level(s);
    let mut out = Classification {
        tag: Tag::OutOfScope,
        k,
        m,
        t: None,
        core_k: None,
    };
    if !is_boolean_spectrum(s) {
        return out;
    }
    if s.get(0) == 0 {
        out.tag = Tag::Trivial;
        return out;
    }
    if !in_scope(s) {
        return out;
    }
    if m == 1 {
        out.tag = Tag::Rvl;
        return out;
    }

    let f = to_boolean(s).expect("checked Boolean");
    let Ok((core, _)) = reduce_in_scope(&f) else {
        // a failed reduction is a theorem violation; decompose reports it
        out.tag = Tag::TwoSubspace;
        return out;
    };
    let base = core.support()[0];
    let core = shift(&core, Gf2Vector::new(core.n(), base).expect("support point"))
        .expect("same dimension");
    let cs = wht(&core);
    let core_k = granularity(&cs);
    let unit = 1i64 << (cs.n() as u32 - core_k);
    let b = crate::addcomb::PointSet::from_points(
        cs.n(),
        cs.nonzero().filter(|&(_, c)| c == -unit).map(|(a, _)| a),
    )
    .expect("valid points");
    let doubled = sumset(&b, &b).expect("same dimension").len();

    out.core_k = Some(core_k);
    out.t = Some((1u64 << (core_k - 1)) - 1);
    out.tag = if core_k == 4 && doubled == 22 {
        Tag::ExceptionalK4Candidate
    } else {
        Tag::TwoSubspace
    };
    out
}
