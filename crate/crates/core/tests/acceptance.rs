//! End-to-end acceptance checks. Runs as a plain binary and prints one
//! pass/fail line per criterion.

use std::process::{Command, ExitCode};
use std::time::Instant;

use serde_json::Value;

use boolspec::addcomb::{doubling_constant, even_zohar_f, even_zohar_s, sumset, Fraction, PointSet};
use boolspec::harness::{random_verify, RandomFamily, Sampler};
use boolspec::spectrum::{is_boolean_spectrum, is_boolean_spectrum_convolution, wht, BooleanFunction, Spectrum};
use boolspec::structure::{decompose, generate, partition_into_affine, Family};

type Outcome = Result<(), String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(ok: bool, what: impl FnOnce() -> String) -> Outcome {
    if ok {
        Ok(())
    } else {
        Err(what())
    }
}

fn cli(args: &[&str]) -> (i32, Value) {
    let out = Command::new(env!("CARGO_BIN_EXE_boolspec"))
        .args(args)
        .output()
        .expect("run boolspec");
    let code = out.status.code().unwrap_or(-1);
    let value = serde_json::from_slice(&out.stdout).unwrap_or(Value::Null);
    (code, value)
}

/// `verify --n 4` covers every truth table without violations.
fn exhaustive() -> Outcome {
    let (code, report) = cli(&["verify", "--n", "4"]);
    ensure(code == 0, || format!("exit code {code}"))?;
    ensure(report["examined"] == 65536, || format!("examined {}", report["examined"]))?;
    let total: u64 = report["counts"]
        .as_object()
        .map(|m| m.values().filter_map(Value::as_u64).sum())
        .unwrap_or(0);
    ensure(total == 65536, || format!("counts sum to {total}"))?;
    ensure(report["violations"].as_array().is_some_and(Vec::is_empty), || {
        format!("violations: {}", report["violations"])
    })?;
    // the 307 affine subspaces of F2^4 are exactly the single-piece cases
    ensure(report["counts"]["RvL"] == 307, || format!("RvL count {}", report["counts"]["RvL"]))
}

/// Independent check that no two disjoint 4-point affine planes cover a set.
fn has_two_plane_cover(points: &[u32]) -> bool {
    let mut planes = Vec::new();
    let n = points.len();
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                for d in c + 1..n {
                    let q = [points[a], points[b], points[c], points[d]];
                    // four points form an affine plane iff they sum to zero
                    if q[0] ^ q[1] ^ q[2] ^ q[3] == 0 {
                        planes.push(q);
                    }
                }
            }
        }
    }
    planes.iter().enumerate().any(|(i, p)| {
        planes[i + 1..]
            .iter()
            .any(|q| p.iter().all(|x| !q.contains(x)))
    })
}

fn counterexample() -> Outcome {
    let (code, f_json) = cli(&["generate", "--family", "counterexample-core"]);
    ensure(code == 0, || format!("generate exit code {code}"))?;
    let support: Vec<u32> = f_json["support"]
        .as_array()
        .map(|a| a.iter().filter_map(|v| v.as_u64().map(|x| x as u32)).collect())
        .unwrap_or_default();
    ensure(support == [0, 31, 47, 55, 59, 61, 62, 63], || format!("support {support:?}"))?;

    let f = BooleanFunction::from_support(6, &support).map_err(|e| e.to_string())?;
    let s = wht(&f);
    let count = |v: i64| s.coeffs().iter().filter(|&&c| c == v).count();
    ensure(s.get(0) == 8, || format!("F(0) = {}", s.get(0)))?;
    ensure(
        (count(-4), count(4), count(0)) == (7, 21, 35),
        || format!("value counts {:?}", (count(-4), count(4), count(0))),
    )?;

    let b = PointSet::from_points(6, (0..64).filter(|&a| s.get(a) == -4)).map_err(|e| e.to_string())?;
    let a = PointSet::from_points(6, (1..64).filter(|&a| s.get(a) == 4)).map_err(|e| e.to_string())?;
    let two_b = sumset(&b, &b).map_err(|e| e.to_string())?;
    ensure((b.len(), a.len(), two_b.len()) == (7, 21, 22), || {
        format!("|B|, |A|, |2B| = {}, {}, {}", b.len(), a.len(), two_b.len())
    })?;
    let sigma = doubling_constant(&b).map_err(|e| e.to_string())?;
    ensure(sigma.to_string() == "22/7", || format!("σ[B] = {sigma}"))?;

    let d = decompose(&f).map_err(|e| e.to_string())?;
    ensure(d.verified && d.shape() == [1, 1, 1, 1], || format!("shape {:?}", d.shape()))?;
    let pts = PointSet::from_points(6, support.iter().copied()).map_err(|e| e.to_string())?;
    ensure(partition_into_affine(&pts, 2, 2).is_none(), || "search found two planes".into())?;
    ensure(!has_two_plane_cover(&support), || "oracle found two planes".into())?;

    let (code, dec) = cli(&["decompose", "--in", &write_temp("ce.json", &f_json)]);
    ensure(code == 0 && dec["pieces"].as_array().map(Vec::len) == Some(4), || {
        format!("cli decompose exit {code}: {dec}")
    })
}

fn write_temp(name: &str, value: &Value) -> String {
    let path = std::env::temp_dir().join(format!("boolspec-acceptance-{}-{name}", std::process::id()));
    std::fs::write(&path, value.to_string()).expect("write temp file");
    path.to_string_lossy().into_owned()
}

fn even_zohar() -> Outcome {
    let k = Fraction::new(46, 15).map_err(|e| e.to_string())?;
    let s = even_zohar_s(&k).map_err(|e| e.to_string())?;
    let f = even_zohar_f(&k).map_err(|e| e.to_string())?;
    ensure(s == 5 && f.to_string() == "92/15", || format!("s = {s}, F = {f}"))?;
    ensure(f < Fraction::new(7, 1).map_err(|e| e.to_string())?, || "F(46/15) >= 7".into())?;

    let k = Fraction::new(22, 7).map_err(|e| e.to_string())?;
    let f = even_zohar_f(&k).map_err(|e| e.to_string())?;
    ensure(f.to_string() == "64/7", || format!("F(22/7) = {f}"))?;
    // times |B| = 7 gives the span bound 64
    ensure(f.cmp_ratio(64, 7).is_eq(), || "span bound is not 64".into())?;

    let (code, out) = cli(&["addcomb", "fk", "--num", "46", "--den", "15"]);
    ensure(code == 0 && out["s"] == 5 && out["F"] == "92/15", || format!("cli fk: {out}"))
}

/// The closed-form spectrum of `1_{e_k + V1} + 1_{V2}`, scaled by `2^n`.
fn two_affine_formula(n: usize, k: usize, alpha: u32) -> i64 {
    let unit = 1i64 << (n - k);
    let low = (1u32 << (k - 1)) - 1; // span{e1..e(k-1)}
    let ek = 1u32 << (k - 1);
    let high = ((1u32 << (2 * k - 1)) - 1) & !low & !ek; // span{e(k+1)..e(2k-1)}
    if alpha == 0 {
        return 2 * unit;
    }
    let rest = alpha & !ek;
    let in_low = rest & !low == 0 && rest != 0;
    let in_high = rest & !high == 0 && rest != 0;
    match (alpha & ek != 0, in_low, in_high) {
        (true, true, _) => -unit,
        (false, true, _) => unit,
        (_, _, true) => unit,
        _ => 0,
    }
}

fn spectrum_formula() -> Outcome {
    for k in 1..=4usize {
        for n in 2 * k - 1..=8 {
            let f = generate(&Family::TwoAffine { n, k }).map_err(|e| e.to_string())?;
            let s = wht(&f);
            for alpha in 0..1u32 << n {
                let want = two_affine_formula(n, k, alpha);
                ensure(s.get(alpha) == want, || {
                    format!("n={n} k={k} α={alpha}: F = {} but formula gives {want}", s.get(alpha))
                })?;
            }
            let unit = 1i64 << (n - k);
            let t = (1usize << (k - 1)) - 1;
            let a = (1..1u32 << n).filter(|&x| s.get(x) == unit).count();
            let b = (1..1u32 << n).filter(|&x| s.get(x) == -unit).count();
            ensure(a == 3 * t && b == t, || format!("n={n} k={k}: |A|={a}, |B|={b}, t={t}"))?;
        }
    }
    Ok(())
}

fn random_recovery() -> Outcome {
    let two = random_verify(8, 1000, 2024, RandomFamily::TwoAffine { k: 3 }).map_err(|e| e.to_string())?;
    ensure(two.is_clean() && two.examined == 1000, || format!("two-affine: {:?}", two.violations))?;
    ensure(two.shapes.get("2x5") == Some(&1000), || format!("two-affine shapes {:?}", two.shapes))?;
    let ce = random_verify(8, 100, 2024, RandomFamily::CounterexamplePadded).map_err(|e| e.to_string())?;
    ensure(ce.is_clean() && ce.examined == 100, || format!("padded: {:?}", ce.violations))?;
    ensure(ce.shapes.get("4x3") == Some(&100), || format!("padded shapes {:?}", ce.shapes))
}

fn naive(f: &BooleanFunction, alpha: u32) -> i64 {
    (0..1u32 << f.n())
        .map(|x| {
            let v = i64::from(f.get(x));
            if (alpha & x).count_ones().is_multiple_of(2) {
                v
            } else {
                -v
            }
        })
        .sum()
}

fn matches_naive(f: &BooleanFunction) -> bool {
    let s = wht(f);
    (0..1u32 << f.n()).all(|a| s.get(a) == naive(f, a))
}

fn oracle_equivalence() -> Outcome {
    for n in 0..=3usize {
        for table in 0..1u64 << (1 << n) {
            let f = BooleanFunction::from_table_word(n, table).map_err(|e| e.to_string())?;
            ensure(matches_naive(&f), || format!("wht differs on {f:?}"))?;
        }
        // every integer vector with entries in [-2^n, 2^n] for tiny n, so
        // both forms also see non-Boolean inputs
        if n <= 2 {
            let size = 1usize << n;
            let range = 2 * (1i64 << n) + 1;
            for code in 0..range.pow(size as u32) {
                let coeffs: Vec<i64> = (0..size)
                    .map(|i| (code / range.pow(i as u32)) % range - (1 << n))
                    .collect();
                let s = Spectrum::from_coeffs(n, coeffs).map_err(|e| e.to_string())?;
                ensure(is_boolean_spectrum(&s) == is_boolean_spectrum_convolution(&s), || {
                    format!("Boolean tests disagree on {:?}", s.coeffs())
                })?;
            }
        } else {
            for table in 0..1u64 << (1 << n) {
                let f = BooleanFunction::from_table_word(n, table).map_err(|e| e.to_string())?;
                let s = wht(&f);
                ensure(is_boolean_spectrum(&s) && is_boolean_spectrum_convolution(&s), || {
                    format!("Boolean tests reject {f:?}")
                })?;
                let mut skewed = s.coeffs().to_vec();
                skewed[1] += 2;
                let t = Spectrum::from_coeffs(n, skewed).map_err(|e| e.to_string())?;
                ensure(is_boolean_spectrum(&t) == is_boolean_spectrum_convolution(&t), || {
                    format!("Boolean tests disagree near {f:?}")
                })?;
            }
        }
    }
    let mut rng = Sampler::new(6);
    for _ in 0..1000 {
        let n = 1 + rng.below(10) as usize;
        let words: Vec<u64> = (0..(1usize << n).div_ceil(64)).map(|_| rng.next_u64()).collect();
        let f = BooleanFunction::from_fn(n, |x| words[x as usize / 64] >> (x % 64) & 1 == 1)
            .map_err(|e| e.to_string())?;
        ensure(matches_naive(&f), || format!("wht differs on random n={n} function"))?;
    }
    Ok(())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 6] = [
        ("exhaustive verification for n = 4", exhaustive),
        ("six-variable counterexample", counterexample),
        ("Even-Zohar anchors", even_zohar),
        ("two-affine spectrum formula", spectrum_formula),
        ("randomized structural recovery", random_recovery),
        ("transform oracle equivalence", oracle_equivalence),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = check();
        let ms = start.elapsed().as_millis();
        match outcome {
            Ok(()) => println!("criterion {}: PASS  {name} ({ms} ms)", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {}: FAIL  {name} ({ms} ms): {why}", i + 1);
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
