use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use rand_core::{RngCore, SeedableRng};
use rand_xoshiro::Xoshiro256PlusPlus;
use rayon::prelude::*;

use super::report::{VerificationReport, Violation};
use crate::addcomb::{
    affine_span_ratio, doubling_constant, even_zohar_f, is_sum_free, iterated_sumset, laba_check, sumset,
    LabaVerdict, PointSet,
};
use crate::error::{Error, Result};
use crate::gf2::{Gf2Matrix, Gf2Vector};
use crate::spectrum::{
    apply_transform, granularity, is_boolean_spectrum, is_boolean_spectrum_convolution, shift, sparsity, tensor,
    to_boolean, wht, BooleanFunction,
};
use crate::structure::{
    decompose, generate, kill_number, reduce, spectral_sets, Classification, Family, Tag, KILL_NUMBER_MAX_DIM,
};

/// Largest dimension for exhaustive enumeration.
pub const ENUMERATE_MAX_DIM: usize = 4;

/// Kill numbers are only computed up to this dimension during verification.
const KILL_CHECK_MAX_DIM: usize = 6;

#[derive(Default)]
struct Timer(BTreeMap<&'static str, Duration>);

impl Timer {
    fn time<T>(&mut self, phase: &'static str, run: impl FnOnce() -> T) -> T {
        let start = Instant::now();
        let out = run();
        self.since(phase, start);
        out
    }

    fn since(&mut self, phase: &'static str, start: Instant) {
        *self.0.entry(phase).or_default() += start.elapsed();
    }

    fn into_report(self, report: &mut VerificationReport) {
        for (phase, d) in self.0 {
            *report.timing_ms.entry(phase.to_string()).or_default() += d.as_millis() as u64;
        }
    }
}

struct Checker<'a> {
    f: &'a BooleanFunction,
    report: &'a mut VerificationReport,
    timer: &'a mut Timer,
}

impl Checker<'_> {
    fn fail(&mut self, check: &str) {
        self.report.violations.push(Violation {
            n: self.f.n(),
            truth_table_hex: self.f.table_hex(),
            check: check.to_string(),
        });
    }

    fn require(&mut self, ok: bool, check: &str) {
        if !ok {
            self.fail(check);
        }
    }

    /// Runs every check that applies to `f`. `expected` is the
    /// (piece count, piece dimension) that a construction guarantees.
    fn run(&mut self, expected: Option<(usize, usize)>) {
        let f = self.f;
        let n = f.n();
        self.report.examined += 1;
        let s = self.timer.time("spectrum", || wht(f));

        self.require(to_boolean(&s).is_ok_and(|g| &g == f), "round_trip");
        let energy: i128 = s.coeffs().iter().map(|&c| i128::from(c) * i128::from(c)).sum();
        self.require(energy == (i128::from(f.weight()) << n), "parseval");
        let top = s.get(0);
        self.require(s.coeffs().iter().all(|c| c.abs() <= top), "max_at_zero");
        self.require(
            is_boolean_spectrum(&s) && is_boolean_spectrum_convolution(&s),
            "boolean_test",
        );

        let class = self.timer.time("classify", || crate::structure::classify(&s));
        VerificationReport::bump(&mut self.report.counts, class.tag.name().to_string());
        if f.is_zero() {
            self.require(class.tag == Tag::Trivial, "classification");
            return;
        }

        let k = granularity(&s);
        let sp = sparsity(&s) as u128;
        self.require(
            sp >= 1u128 << k && sp <= 1u128 << (2 * k),
            "granularity_sparsity",
        );

        if n <= KILL_CHECK_MAX_DIM.min(KILL_NUMBER_MAX_DIM) {
            let kn = self.timer.time("kill_number", || kill_number(f));
            let bound = i64::from(k) + class.m - 1;
            self.require(kn.is_ok_and(|c| c as i64 <= bound), "kill_number_bound");
        }

        let support = PointSet::from_points(n, f.support()).expect("valid support");
        let start = Instant::now();
        self.require(
            laba_check(&support).is_ok_and(|v| v != LabaVerdict::Violation),
            "laba",
        );
        self.require(within_even_zohar(&support), "even_zohar");
        self.timer.since("addcomb", start);

        if class.tag == Tag::OutOfScope {
            self.require(expected.is_none(), "classification");
            return;
        }
        self.check_decomposition(&class, expected);
        if class.m == 2 {
            let start = Instant::now();
            self.check_core_sets(&class);
            self.timer.since("spectral_sets", start);
        }
    }

    fn check_decomposition(&mut self, class: &Classification, expected: Option<(usize, usize)>) {
        let f = self.f;
        let n = f.n();
        let k = class.k as usize;
        let result = self.timer.time("decompose", || decompose(f));
        let d = match result {
            Ok(d) => d,
            Err(_) => return self.fail("decompose"),
        };
        self.require(d.verified, "decompose");
        self.require(d.indicator(n).is_ok_and(|g| &g == f), "reconstruct");
        let shape = d.shape();
        let count = shape.len();
        let dim = shape.first().copied().unwrap_or(0);
        VerificationReport::bump(&mut self.report.shapes, format!("{count}x{dim}"));

        let allowed = match class.m {
            1 => count == 1 && dim == n - k,
            _ if count == 4 => class.core_k == Some(4) && dim == n - k - 1,
            _ => count == 2 && dim == n - k,
        };
        self.require(allowed && shape.iter().all(|&x| x == dim), "decomposition_shape");
        if count == 2 && n == k {
            self.report.outside_hypothesis += 1;
        }
        if let Some(want) = expected {
            self.require((count, dim) == want, "expected_shape");
        }
    }

    /// Additive-combinatorial lemmas on the normalized irreducible core.
    fn check_core_sets(&mut self, class: &Classification) {
        let Ok((core, _)) = reduce(self.f) else {
            return self.fail("reduce");
        };
        let base = Gf2Vector::new(core.n(), core.support()[0]).expect("support point");
        let core = shift(&core, base).expect("same dimension");
        let s = wht(&core);
        let Ok(sets) = spectral_sets(&s) else {
            return self.fail("claim_sizes");
        };
        let two_b = sumset(&sets.b, &sets.b).expect("same dimension");
        let three_b = iterated_sumset(&sets.b, 3).expect("nonzero multiple");
        let mut a0 = sets.a.clone();
        a0.insert(0);
        self.require(two_b.is_subset(&a0), "triangle_lemma");
        self.require(is_sum_free(&sets.b), "sum_free");
        self.require(two_b.is_disjoint(&three_b), "two_b_three_b_disjoint");
        self.require(sets.gamma.iter().all(|g| s.get(g) == 0), "gamma_zero");
        let k = sets.k;
        if class.tag == Tag::TwoSubspace && k >= 3 {
            self.require(
                two_b.is_subspace() && two_b.len() == 1 << (k - 1),
                "two_b_subspace",
            );
            self.require(sets.b.linear_span().len() == 1 << k, "span_b");
        }
        if !sets.b.is_empty() {
            self.require(within_even_zohar(&sets.b), "even_zohar_b");
        }
    }
}

fn within_even_zohar(a: &PointSet) -> bool {
    let (Ok(ratio), Ok(k)) = (affine_span_ratio(a), doubling_constant(a)) else {
        return false;
    };
    even_zohar_f(&k).is_ok_and(|bound| ratio <= bound)
}

fn check(f: &BooleanFunction, expected: Option<(usize, usize)>, report: &mut VerificationReport) {
    let mut timer = Timer::default();
    Checker {
        f,
        report,
        timer: &mut timer,
    }
    .run(expected);
    timer.into_report(report);
}

/// Verifies every function on `F2^n` for `1 <= n <= 4`.
pub fn enumerate_verify(n: usize) -> Result<VerificationReport> {
    enumerate_inner(n, None)
}

/// Like [`enumerate_verify`], but each function is first composed with `l`.
pub fn enumerate_verify_transformed(n: usize, l: &Gf2Matrix) -> Result<VerificationReport> {
    if l.n() != n {
        return Err(Error::DimensionMismatch { left: l.n(), right: n });
    }
    enumerate_inner(n, Some(l))
}

fn enumerate_inner(n: usize, l: Option<&Gf2Matrix>) -> Result<VerificationReport> {
    if n == 0 || n > ENUMERATE_MAX_DIM {
        return Err(Error::InvalidParameter(format!(
            "exhaustive verification needs 1 <= n <= {ENUMERATE_MAX_DIM}, got {n}"
        )));
    }
    let total = 1u64 << (1 << n);
    let chunk = 1024.min(total);
    let report = (0..total / chunk)
        .into_par_iter()
        .map(|c| {
            let mut report = VerificationReport::new(n);
            let mut timer = Timer::default();
            for table in c * chunk..(c + 1) * chunk {
                let f = BooleanFunction::from_table_word(n, table).expect("n <= 6");
                let f = match l {
                    Some(l) => apply_transform(&f, l).expect("same dimension"),
                    None => f,
                };
                Checker {
                    f: &f,
                    report: &mut report,
                    timer: &mut timer,
                }
                .run(None);
            }
            timer.into_report(&mut report);
            report
        })
        .reduce(|| VerificationReport::new(n), VerificationReport::merge);
    Ok(report)
}

/// Families sampled by [`random_verify`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RandomFamily {
    /// A random mix of affine, padded two-affine and padded counterexample
    /// instances.
    Mixed,
    Affine { k: usize },
    TwoAffine { k: usize },
    CounterexamplePadded,
}

/// Seeded sampler built on `Xoshiro256PlusPlus`.
pub struct Sampler(Xoshiro256PlusPlus);

impl Sampler {
    pub fn new(seed: u64) -> Self {
        Self(Xoshiro256PlusPlus::seed_from_u64(seed))
    }

    pub fn next_u64(&mut self) -> u64 {
        self.0.next_u64()
    }

    /// Uniform in `0..bound`, up to modulo bias.
    pub fn below(&mut self, bound: u64) -> u64 {
        self.next_u64() % bound
    }

    pub fn vector(&mut self, n: usize) -> Gf2Vector {
        Gf2Vector::new(n, (self.next_u64() & ((1u64 << n) - 1)) as u32).expect("masked")
    }

    /// Uniform invertible matrix by rejection.
    pub fn invertible(&mut self, n: usize) -> Gf2Matrix {
        loop {
            let rows = (0..n).map(|_| self.vector(n).bits()).collect();
            if let Ok(m) = Gf2Matrix::new(n, rows) {
                return m;
            }
        }
    }
}

/// A generated instance together with the decomposition shape its
/// construction guarantees.
fn sample_instance(n: usize, family: RandomFamily, rng: &mut Sampler) -> Result<(BooleanFunction, (usize, usize))> {
    let family = match family {
        RandomFamily::Mixed => {
            let mut options = vec![0];
            if n >= 3 {
                options.push(1);
            }
            if n >= 6 {
                options.push(2);
            }
            match options[rng.below(options.len() as u64) as usize] {
                0 => RandomFamily::Affine {
                    k: rng.below(n as u64 + 1) as usize,
                },
                1 => {
                    let k = 2 + rng.below((n.div_ceil(2) - 1) as u64) as usize;
                    let pad = rng.below((n + 2 - 2 * k) as u64) as usize;
                    let core = generate(&Family::TwoAffine { n: n - pad, k })?;
                    let f = tensor(&core, &generate(&Family::Delta { n: pad })?)?;
                    return Ok(transformed(f, (2, n - pad - k), n, rng));
                }
                _ => RandomFamily::CounterexamplePadded,
            }
        }
        other => other,
    };
    let (base, shape) = match family {
        RandomFamily::Affine { k } => (generate(&Family::Affine { n, k })?, (1, n - k)),
        RandomFamily::TwoAffine { k } => {
            if k < 2 {
                return Err(Error::InvalidParameter(format!(
                    "two-affine sampling needs k >= 2, got {k}"
                )));
            }
            (generate(&Family::TwoAffine { n, k })?, (2, n - k))
        }
        RandomFamily::CounterexamplePadded => (generate(&Family::CounterexamplePadded { n })?, (4, n - 5)),
        RandomFamily::Mixed => unreachable!(),
    };
    Ok(transformed(base, shape, n, rng))
}

fn transformed(
    f: BooleanFunction,
    shape: (usize, usize),
    n: usize,
    rng: &mut Sampler,
) -> (BooleanFunction, (usize, usize)) {
    let l = rng.invertible(n);
    let a = rng.vector(n);
    let g = apply_transform(&f, &l).expect("same dimension");
    (shift(&g, a).expect("same dimension"), shape)
}

/// Verifies `count` randomly transformed and shifted instances.
/// Deterministic for a given seed.
pub fn random_verify(n: usize, count: u64, seed: u64, family: RandomFamily) -> Result<VerificationReport> {
    if !(2..=crate::gf2::MAX_DIM).contains(&n) {
        return Err(Error::InvalidParameter(format!(
            "random verification needs 2 <= n <= {}, got {n}",
            crate::gf2::MAX_DIM
        )));
    }
    if count == 0 {
        return Err(Error::InvalidParameter("count must be positive".into()));
    }
    let mut rng = Sampler::new(seed);
    let instances = (0..count)
        .map(|_| sample_instance(n, family, &mut rng))
        .collect::<Result<Vec<_>>>()?;
    Ok(instances
        .par_iter()
        .map(|(f, shape)| {
            let mut report = VerificationReport::new(n);
            check(f, Some(*shape), &mut report);
            report
        })
        .reduce(|| VerificationReport::new(n), VerificationReport::merge))
}
