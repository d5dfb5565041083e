use super::classify::level;
use crate::addcomb::{iterated_sumset, sumset, PointSet};
use crate::error::{Error, Result};
use crate::gf2::Gf2Vector;
use crate::spectrum::{is_boolean_spectrum, Spectrum};

/// Additive sets read off an irreducible spectrum with `f̂(0) = 2/2^k` and
/// `f(0) = 1`.
///
/// `A` holds the frequencies with coefficient `+1/2^k`, `B` those with
/// `-1/2^k`. With `t = 2^(k-1) - 1` one has `|A| = 3t`, `|B| = t`,
/// `R = (2B ∖ {0}) ∩ A`, `L = A ∖ R` and `Γ = 3B ∖ B`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpectralSets {
    pub k: u32,
    pub t: u64,
    pub a: PointSet,
    pub b: PointSet,
    pub r: PointSet,
    pub l: PointSet,
    pub gamma: PointSet,
}

pub fn spectral_sets(s: &Spectrum) -> Result<SpectralSets> {
    let n = s.n();
    if !is_boolean_spectrum(s) {
        return Err(Error::NotBoolean);
    }
    let (k, m) = level(s);
    if m != 2 || k < 2 {
        return Err(Error::Precondition(format!(
            "expected f̂(0) = 2/2^k, got {m}/2^{k}"
        )));
    }
    let unit = 1i64 << (n as u32 - k);
    if s.nonzero().any(|(a, c)| a != 0 && c.abs() == s.get(0)) {
        return Err(Error::Precondition(
            "spectrum is reducible: some |f̂(α)| equals f̂(0)".into(),
        ));
    }
    // Σ_α F(α) = 2^n f(0)
    if s.coeffs().iter().sum::<i64>() != 1i64 << n {
        return Err(Error::Precondition("expected f(0) = 1".into()));
    }
    if let Some((a, c)) = s.nonzero().find(|&(_, c)| c.abs() != unit && c != 2 * unit) {
        return Err(Error::Precondition(format!(
            "coefficient {c}/2^{n} at {a} is outside {{0, ±1/2^{k}}}"
        )));
    }

    let a = PointSet::from_points(n, s.nonzero().filter(|&(_, c)| c == unit).map(|(x, _)| x))?;
    let b = PointSet::from_points(n, s.nonzero().filter(|&(_, c)| c == -unit).map(|(x, _)| x))?;
    let t = (1u64 << (k - 1)) - 1;
    if a.len() as u64 != 3 * t || b.len() as u64 != t {
        return Err(Error::ClaimViolated(format!(
            "|A| = {}, |B| = {}, expected {} and {t}",
            a.len(),
            b.len(),
            3 * t
        )));
    }
    let mut two_b = sumset(&b, &b)?;
    two_b.remove(0);
    let r = two_b.intersection(&a);
    let l = a.difference(&r);
    let gamma = iterated_sumset(&b, 3)?.difference(&b);
    Ok(SpectralSets {
        k,
        t,
        a,
        b,
        r,
        l,
        gamma,
    })
}

/// `N(ρ) = {β ∈ B : β + ρ ∈ B}` for a nonzero `ρ ∈ 2B`.
pub fn triangle_neighbors(rho: Gf2Vector, b: &PointSet) -> Result<PointSet> {
    if rho.dim() != b.n() {
        return Err(Error::DimensionMismatch {
            left: rho.dim(),
            right: b.n(),
        });
    }
    if rho.is_zero() {
        return Err(Error::Precondition("ρ must be nonzero".into()));
    }
    let out = b.intersection(&b.translated(rho.bits()));
    if out.is_empty() {
        return Err(Error::Precondition("ρ is not in 2B".into()));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spectrum::wht;
    use crate::structure::{generate, Family};

    #[test]
    fn counterexample_sets() {
        let ce = generate(&Family::CounterexampleCore).unwrap();
        let sets = spectral_sets(&wht(&ce)).unwrap();
        assert_eq!((sets.k, sets.t), (4, 7));
        assert_eq!((sets.a.len(), sets.b.len()), (21, 7));
        assert_eq!(sets.b.to_vec(), vec![1, 2, 4, 8, 16, 32, 63]);
        assert_eq!(sumset(&sets.b, &sets.b).unwrap().len(), 22);
        assert_eq!(sets.gamma.len(), 35);
        assert!(sets.gamma.iter().all(|g| wht(&ce).get(g) == 0));
        assert_eq!(sets.r.len() + sets.l.len(), 21);
        assert!(sets.r.is_disjoint(&sets.l));
    }

    #[test]
    fn regular_sets_have_subspace_doubling() {
        for k in 3..=5 {
            let f = generate(&Family::TwoAffine { n: 2 * k - 1, k }).unwrap();
            let sets = spectral_sets(&wht(&f)).unwrap();
            assert_eq!(sets.k as usize, k);
            let two_b = sumset(&sets.b, &sets.b).unwrap();
            assert!(two_b.is_subspace());
            assert_eq!(two_b.len(), 1 << (k - 1));
            assert_eq!(sets.gamma.len(), 1);
        }
    }

    #[test]
    fn two_affine_gamma_is_ek() {
        for k in 3..=5 {
            let f = generate(&Family::TwoAffine { n: 2 * k - 1, k }).unwrap();
            let sets = spectral_sets(&wht(&f)).unwrap();
            assert_eq!(sets.gamma.to_vec(), vec![1 << (k - 1)]);
            assert_eq!(sets.a.len() as u64, 3 * sets.t);
        }
        let f = generate(&Family::TwoAffine { n: 5, k: 3 }).unwrap();
        let sets = spectral_sets(&wht(&f)).unwrap();
        let b = sets.b.to_vec();
        assert_eq!((sets.a.len(), b.len()), (9, 3));
        assert_eq!(sets.gamma.to_vec(), vec![b[0] ^ b[1] ^ b[2]]);
    }

    #[test]
    fn preconditions() {
        let or = crate::spectrum::BooleanFunction::from_support(2, &[1, 2, 3]).unwrap();
        assert!(matches!(spectral_sets(&wht(&or)), Err(Error::Precondition(_))));
        // f(0) = 0 after shifting the support away from the origin
        let f = generate(&Family::TwoAffine { n: 3, k: 2 }).unwrap();
        let moved = crate::spectrum::shift(&f, Gf2Vector::new(3, 0b111).unwrap()).unwrap();
        assert!(!moved.get(0));
        assert!(matches!(spectral_sets(&wht(&moved)), Err(Error::Precondition(_))));
    }

    #[test]
    fn triangle_neighbors_counts() {
        let ce = generate(&Family::CounterexampleCore).unwrap();
        let sets = spectral_sets(&wht(&ce)).unwrap();
        let b = &sets.b;
        for rho in sumset(b, b).unwrap().iter().filter(|&r| r != 0) {
            let got = triangle_neighbors(Gf2Vector::new(6, rho).unwrap(), b).unwrap();
            let oracle = b.iter().filter(|&x| b.contains(x ^ rho)).count();
            assert_eq!(got.len(), oracle);
            assert_eq!(got.len() % 2, 0);
        }
        assert!(triangle_neighbors(Gf2Vector::zero(6).unwrap(), b).is_err());
        let rho = Gf2Vector::new(6, 0b11).unwrap();
        assert_eq!(triangle_neighbors(rho, b).unwrap().to_vec(), vec![1, 2]);
        // weight 3 is not a sum of two elements of B_CE
        assert!(triangle_neighbors(Gf2Vector::new(6, 0b111).unwrap(), b).is_err());
    }

    #[test]
    fn two_affine_triangle_neighbors() {
        for k in 3..=5 {
            let n = 2 * k - 1;
            let f = generate(&Family::TwoAffine { n, k }).unwrap();
            let sets = spectral_sets(&wht(&f)).unwrap();
            let ek = 1u32 << (k - 1);
            for rho in sumset(&sets.b, &sets.b).unwrap().iter().filter(|&r| r != 0) {
                let got = triangle_neighbors(Gf2Vector::new(n, rho).unwrap(), &sets.b).unwrap();
                let mut expected = sets.b.clone();
                expected.remove(rho ^ ek);
                assert_eq!(got, expected);
                assert_eq!(got.len() as u64, sets.t - 1);
            }
        }
    }
}
