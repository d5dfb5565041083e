use super::classify::in_scope;
use crate::error::{Error, Result};
use crate::gf2::{affine_span_bits, transform_sending_to_e1, AffineSubspace, Gf2Matrix, Gf2Vector, Subspace};
use crate::spectrum::{apply_transform, restrict_first_bit, shift, wht, BooleanFunction};

/// One dimension-reduction step: optionally shift so the chosen coefficient
/// becomes `+f̂(0)`, transform it onto `e1`, then keep the sub-function with
/// first bit `kept_bit`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReductionStep {
    pub shift: Option<Gf2Vector>,
    pub transform: Gf2Matrix,
    pub kept_bit: u8,
}

/// Record of a reduction, sufficient to map core coordinates back.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReductionTrace {
    pub original_n: usize,
    pub core_n: usize,
    pub steps: Vec<ReductionStep>,
}

impl ReductionTrace {
    /// Image of a core point in the original coordinates.
    pub fn lift_point(&self, mut y: u32) -> u32 {
        for step in self.steps.iter().rev() {
            let x = y << 1 | u32::from(step.kept_bit);
            y = step.transform.apply_bits(x);
            if let Some(a) = step.shift {
                y ^= a.bits();
            }
        }
        y
    }

    fn lift_direction(&self, mut v: u32) -> u32 {
        for step in self.steps.iter().rev() {
            v = step.transform.apply_bits(v << 1);
        }
        v
    }

    /// Image of a core affine subspace in the original coordinates.
    pub fn lift(&self, piece: &AffineSubspace) -> AffineSubspace {
        let shift = self.lift_point(piece.shift_bits());
        let dirs = piece
            .direction()
            .basis()
            .iter()
            .map(|&v| self.lift_direction(v));
        AffineSubspace::from_parts(shift, Subspace::from_bits(self.original_n, dirs))
    }
}

/// Runs the reduction loop without checking the scope of the spectrum.
pub(crate) fn reduce_in_scope(f: &BooleanFunction) -> Result<(BooleanFunction, ReductionTrace)> {
    let mut cur = f.clone();
    let mut steps = Vec::new();
    loop {
        let s = wht(&cur);
        let top = s.get(0);
        let Some(alpha) = (1..1u32 << cur.n()).find(|&a| s.get(a).abs() == top) else {
            break;
        };
        let mut applied_shift = None;
        if s.get(alpha) < 0 {
            let a = Gf2Vector::new(cur.n(), 1 << alpha.trailing_zeros())?;
            cur = shift(&cur, a)?;
            applied_shift = Some(a);
        }
        let transform = transform_sending_to_e1(Gf2Vector::new(cur.n(), alpha)?)?;
        let g = apply_transform(&cur, &transform)?;
        let (g0, g1) = restrict_first_bit(&g)?;
        if !g1.is_zero() {
            return Err(Error::ClaimViolated(
                "restriction with ĝ(e1) = ĝ(0) left a nonzero half".into(),
            ));
        }
        steps.push(ReductionStep {
            shift: applied_shift,
            transform,
            kept_bit: 0,
        });
        cur = g0;
    }
    let trace = ReductionTrace {
        original_n: f.n(),
        core_n: cur.n(),
        steps,
    };
    Ok((cur, trace))
}

/// Strips coordinates while some nonzero `α` has `|f̂(α)| = f̂(0)`, choosing
/// the smallest such `α` each time. Returns the irreducible core and the
/// trace mapping it back.
pub fn reduce(f: &BooleanFunction) -> Result<(BooleanFunction, ReductionTrace)> {
    if f.is_zero() {
        return Err(Error::ZeroFunction);
    }
    if !in_scope(&wht(f)) {
        return Err(Error::OutOfScope);
    }
    reduce_in_scope(f)
}

/// Whether the support is contained in no proper affine subspace.
pub fn is_irreducible(f: &BooleanFunction) -> Result<bool> {
    let span = affine_span_bits(f.n(), f.support()).ok_or(Error::ZeroFunction)?;
    Ok(span.dim() == f.n())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spectrum::tensor;
    use crate::structure::{generate, Family};

    fn delta(n: usize) -> BooleanFunction {
        generate(&Family::Delta { n }).unwrap()
    }

    fn assert_lift_is_bijective(f: &BooleanFunction, core: &BooleanFunction, trace: &ReductionTrace) {
        let mut lifted: Vec<u32> = core.support().iter().map(|&y| trace.lift_point(y)).collect();
        lifted.sort_unstable();
        assert_eq!(lifted, f.support());
    }

    #[test]
    fn padded_instance_reduces_to_core() {
        let core = generate(&Family::TwoAffine { n: 5, k: 2 }).unwrap();
        let f = tensor(&core, &delta(2)).unwrap();
        let (got, trace) = reduce(&f).unwrap();
        assert_eq!(got, core);
        assert_eq!(trace.steps.len(), 2);
        assert_eq!((trace.original_n, trace.core_n), (7, 5));
        assert_lift_is_bijective(&f, &got, &trace);
    }

    #[test]
    fn irreducible_instance_is_unchanged() {
        let ce = generate(&Family::CounterexampleCore).unwrap();
        let (got, trace) = reduce(&ce).unwrap();
        assert_eq!(got, ce);
        assert!(trace.steps.is_empty());
    }

    #[test]
    fn negative_coefficient_goes_through_a_shift() {
        let core = generate(&Family::TwoAffine { n: 5, k: 2 }).unwrap();
        let padded = tensor(&core, &delta(1)).unwrap();
        // move the support off the hyperplane x6 = 0 so that F(e6) = -F(0)
        let a = Gf2Vector::new(6, 1 << 5).unwrap();
        let f = shift(&padded, a).unwrap();
        let s = wht(&f);
        assert_eq!(s.get(1 << 5), -s.get(0));
        let (got, trace) = reduce(&f).unwrap();
        assert_eq!(got, core);
        assert_eq!(trace.steps.len(), 1);
        assert!(trace.steps[0].shift.is_some());
        assert_lift_is_bijective(&f, &got, &trace);
    }

    #[test]
    fn reduce_rejects_out_of_scope_and_zero() {
        let or = BooleanFunction::from_support(2, &[1, 2, 3]).unwrap();
        assert!(matches!(reduce(&or), Err(Error::OutOfScope)));
        assert!(matches!(
            reduce(&BooleanFunction::zero(3).unwrap()),
            Err(Error::ZeroFunction)
        ));
    }

    #[test]
    fn affine_indicator_reduces_to_constant() {
        let f = generate(&Family::Affine { n: 5, k: 3 }).unwrap();
        let (core, trace) = reduce(&f).unwrap();
        assert_eq!(core.n(), 2);
        assert!(core.is_one());
        assert_lift_is_bijective(&f, &core, &trace);
    }

    #[test]
    fn irreducibility_examples() {
        assert!(is_irreducible(&generate(&Family::CounterexampleCore).unwrap()).unwrap());
        let padded = tensor(&generate(&Family::IntroFk { n: 3 }).unwrap(), &delta(1)).unwrap();
        assert!(!is_irreducible(&padded).unwrap());
        for k in 2..=4 {
            let f = generate(&Family::TwoAffine { n: 2 * k - 1, k }).unwrap();
            assert!(is_irreducible(&f).unwrap());
        }
        assert!(matches!(
            is_irreducible(&BooleanFunction::zero(2).unwrap()),
            Err(Error::ZeroFunction)
        ));
    }
}
