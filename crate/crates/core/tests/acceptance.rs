//! Acceptance criteria. Runs as a plain binary and prints one PASS/FAIL line
//! per criterion; exits nonzero if any criterion fails.

use std::f64::consts::PI;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use ces_orlicz::certify::{certify_nontrivial, certify_rotundity, solve_alpha};
use ces_orlicz::harness::{run_all, run_monotonicity_suite, SuiteConfig};
use ces_orlicz::witness::{sm_failure_witness, verify_witness};
use ces_orlicz::{luxemburg_norm, modular, parse_phi, OrliczFunction, Sequence, Verdict};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;

fn fixture(name: &str) -> OrliczFunction {
    let path = format!("{}/fixtures/{name}", env!("CARGO_MANIFEST_DIR"));
    parse_phi(&std::fs::read_to_string(path).unwrap()).unwrap()
}

fn ensure(ok: bool, msg: impl Into<String>) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn zeta2() -> f64 {
    PI * PI / 6.0
}

/// Sum of `1/n^2` over `n > big_n` by Euler-Maclaurin.
fn zeta2_tail(big_n: usize) -> f64 {
    let n = big_n as f64;
    1.0 / n - 0.5 / (n * n) + 1.0 / (6.0 * n * n * n)
}

/// Kahan-summed `sum phi(S_n / n)` for `n <= big_n` over a finite sequence;
/// returns the head sum and the total `S`.
fn brute_force_head(phi: impl Fn(f64) -> f64, x: &[f64], big_n: usize) -> (f64, f64) {
    let (mut sum, mut c, mut s) = (0.0f64, 0.0f64, 0.0f64);
    for n in 1..=big_n {
        if let Some(v) = x.get(n - 1) {
            s += v.abs();
        }
        let y = phi(s / n as f64) - c;
        let t = sum + y;
        c = (t - sum) - y;
        sum = t;
    }
    (sum, s)
}

fn criterion_1() -> Outcome {
    let phi = fixture("phi_p2.txt");
    let start = Instant::now();
    let norm = luxemburg_norm(&phi, &Sequence::unit(1), 1e-6).map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    let expected = PI / 6f64.sqrt();
    ensure(norm.contains(expected), format!("{norm} misses {expected}"))?;
    ensure(norm.width() <= 1e-6, format!("width {}", norm.width()))?;
    ensure(elapsed < Duration::from_secs(1), format!("took {elapsed:?}"))?;
    Ok(format!("norm {norm} contains pi/sqrt(6), {elapsed:?}"))
}

fn criterion_2() -> Outcome {
    let alpha = solve_alpha(&fixture("phi_p2.txt"), 1e-6).map_err(|e| e.to_string())?;
    let expected = 1.0 / (4.0 * zeta2() - 3.0).sqrt();
    ensure(alpha.contains(expected), format!("{alpha} misses {expected}"))?;
    ensure(alpha.width() <= 1e-6, format!("width {}", alpha.width()))?;
    Ok(format!("alpha {alpha} contains {expected:.9}"))
}

fn criterion_3() -> Outcome {
    let abs = certify_nontrivial(&fixture("phi_abs.txt"));
    ensure(abs.verdict == Verdict::Fails, format!("|u| gave {}", abs.verdict.as_str()))?;
    ensure(abs.constant("slope_at_zero") == Some(1.0), "missing divergence constant")?;
    for (file, p) in [("phi_p15.txt", 1.5), ("phi_p2.txt", 2.0), ("phi_p3.txt", 3.0)] {
        let c = certify_nontrivial(&fixture(file));
        ensure(c.holds() && c.constant("n1") == Some(1.0), format!("u^{p}: {}", c.verdict.as_str()))?;
    }
    Ok("|u| FAILS; u^1.5, u^2, u^3 HOLD with n1 = 1".into())
}

fn criterion_4() -> Outcome {
    let phi = fixture("phi_shifted.txt");
    let w = sm_failure_witness(&phi, 1e-10).map_err(|e| e.to_string())?;
    ensure(w.constant("c") == Some(2.0) && w.constant("n0") == Some(3.0), "c or n0 differ from 2, 3")?;
    // Machine precision: the enclosure is only the rounding slack of the
    // one nonzero term, a few dozen ulps.
    let mut slack = 0.0f64;
    for s in [&w.x, &w.y] {
        let r = modular(&phi, s, 1e-12);
        slack = slack.max(r.max_dist(1.0));
        ensure(r.max_dist(1.0) <= 64.0 * f64::EPSILON, format!("modular {r:?} not 1 to machine precision"))?;
    }
    let report = verify_witness(&phi, &w, 1e-8);
    ensure(report.passed(), format!("verification failed:\n{report}"))?;
    for s in [&w.x, &w.y] {
        let n = luxemburg_norm(&phi, s, 1e-9).map_err(|e| e.to_string())?;
        ensure(n.max_dist(1.0) <= 1e-8, format!("norm {n}"))?;
    }
    Ok(format!("x = ({}), y = ({}), |rho - 1| <= {slack:.1e}", w.x.to_inline(), w.y.to_inline()))
}

/// Independent modular for the piecewise function of the rotundity fixture:
/// brute force to 10^6 terms, then the quadratic tail `S^2 zeta(2, N+1)`.
fn phi_rot_modular(x: &[f64]) -> f64 {
    let phi = |u: f64| {
        if u <= 0.1 {
            u * u
        } else if u <= 0.3 {
            0.01 + 0.2 * (u - 0.1)
        } else {
            0.05 + 0.2 * (u - 0.3) + (u - 0.3) * (u - 0.3)
        }
    };
    let big_n = 1_000_000;
    let (head, s) = brute_force_head(phi, x, big_n);
    assert!(s / big_n as f64 <= 0.1);
    head + s * s * zeta2_tail(big_n)
}

fn criterion_5() -> Outcome {
    let phi = fixture("phi_rot.txt");
    let start = Instant::now();
    let cert = certify_rotundity(&phi, 1e-8).map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    ensure(cert.verdict == Verdict::Fails, format!("verdict {}", cert.verdict.as_str()))?;
    ensure(cert.constant("sai_lo") == Some(0.1) && cert.constant("sai_hi") == Some(0.3), "wrong SAI")?;
    let w = cert.witness.as_ref().ok_or("no witness")?;
    let mid = w.x.combine(0.5, &w.y, 0.5).map_err(|e| e.to_string())?;
    for (name, s) in [("x", &w.x), ("y", &w.y), ("(x+y)/2", &mid)] {
        ensure(s.tail().is_none(), "witness sequences are finite")?;
        let r = phi_rot_modular(s.head());
        ensure((r - 1.0).abs() <= 1e-6, format!("oracle rho({name}) = {r}"))?;
        // ||s|| within 1e-6 of 1: rho(s / l) brackets 1 at l = 1 -+ 1e-6.
        let below = phi_rot_modular(s.scaled(1.0 / (1.0 + 1e-6)).head());
        let above = phi_rot_modular(s.scaled(1.0 / (1.0 - 1e-6)).head());
        ensure(below < 1.0 && above > 1.0, format!("oracle norm of {name} not within 1e-6 of 1"))?;
        let n = luxemburg_norm(&phi, s, 1e-7).map_err(|e| e.to_string())?;
        ensure(n.max_dist(1.0) <= 1e-6, format!("certified ||{name}|| = {n}"))?;
    }
    ensure(elapsed < Duration::from_secs(10), format!("took {elapsed:?}"))?;
    Ok(format!("FAILS on SAI [0.1, 0.3], witness re-verified, {elapsed:?}"))
}

fn criterion_6() -> Outcome {
    let cert = certify_rotundity(&fixture("phi_p2.txt"), 1e-8).map_err(|e| e.to_string())?;
    ensure(cert.verdict == Verdict::Holds, format!("verdict {}", cert.verdict.as_str()))?;
    Ok("u^2 is rotund".into())
}

fn criterion_7() -> Outcome {
    let pool = ["phi_p15.txt", "phi_p2.txt", "phi_p3.txt", "phi_rot.txt"].map(fixture).to_vec();
    let cfg = SuiteConfig::new(0, 500, 1e-6, pool).map_err(|e| e.to_string())?;
    let start = Instant::now();
    let report = run_all(&cfg);
    let elapsed = start.elapsed();
    ensure(report.passed(), format!("{report}"))?;
    ensure(report.suites.len() == 5, "expected five suites")?;
    ensure(elapsed < Duration::from_secs(120), format!("took {elapsed:?}"))?;
    let trials: usize = report.suites.iter().map(|s| s.trials).sum();
    Ok(format!("{trials} trials over 5 suites, 0 failures, {elapsed:?}"))
}

fn criterion_8() -> Outcome {
    let phi = fixture("phi_p2.txt");
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let big_n = 1_000_000;
    let mut worst = 0.0f64;
    for i in 0..100 {
        let len = rng.gen_range(1..=20);
        let head: Vec<f64> = (0..len).map(|_| rng.gen_range(-2.0..2.0)).collect();
        let (sum, s) = brute_force_head(|u| u * u, &head, big_n);
        let oracle = sum + s * s * zeta2_tail(big_n);
        let x = Sequence::finite(head).map_err(|e| e.to_string())?;
        let v = modular(&phi, &x, 1e-10);
        ensure(v.contains(oracle), format!("sequence {i}: oracle {oracle} outside {v}"))?;
        worst = worst.max(v.width());
    }
    Ok(format!("100 sequences, oracle inside every interval (max width {worst:.2e})"))
}

fn criterion_9() -> Outcome {
    let mut cfg = SuiteConfig::new(0, 10, 1e-6, vec![fixture("phi_p2.txt")]).map_err(|e| e.to_string())?;
    cfg.invert_superadditivity = true;
    let report = run_monotonicity_suite(&cfg);
    ensure(!report.failures.is_empty(), "inverted superadditivity produced no failure")?;
    Ok(format!("{} failures from the inverted check", report.failures.len()))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 9] = [
        ("norm of e1 under u^2", criterion_1),
        ("alpha for u^2", criterion_2),
        ("triviality", criterion_3),
        ("strict monotonicity witness", criterion_4),
        ("rotundity failure", criterion_5),
        ("rotundity of u^2", criterion_6),
        ("property suites", criterion_7),
        ("modular oracle", criterion_8),
        ("mutation sensitivity", criterion_9),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        match f() {
            Ok(detail) => println!("PASS criterion {}: {name}: {detail}", i + 1),
            Err(reason) => {
                failed += 1;
                println!("FAIL criterion {}: {name}: {reason}", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
