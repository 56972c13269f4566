//! Seeded randomized suites checking the structural properties of `ces_phi`
//! (solidness, Fatou, order continuity, norm/modular relations, monotonicity)
//! on generated sequences.
//!
//! Every comparison is made between certified interval endpoints, so a
//! reported failure is a certified violation of the property being tested.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::certify::certify_nontrivial;
use crate::error::{Error, Result};
use crate::interval::{sig9, CertifiedValue};
use crate::modular::{luxemburg_norm, modular};
use crate::orlicz::OrliczFunction;
use crate::sequence::{GeometricTail, Sequence};
use crate::witness::{sm_failure_witness, verify_witness};

/// Shape of generated sequences.
#[derive(Debug, Clone, PartialEq)]
pub struct SequenceGen {
    /// Inclusive range of head lengths.
    pub support: (usize, usize),
    /// Range of entry magnitudes.
    pub magnitude: (f64, f64),
    pub tail_prob: f64,
    pub gamma: (f64, f64),
}

impl Default for SequenceGen {
    fn default() -> Self {
        SequenceGen { support: (1, 6), magnitude: (0.05, 1.0), tail_prob: 0.5, gamma: (0.1, 0.6) }
    }
}

impl SequenceGen {
    /// Draws a sequence; `tail` forces or forbids a geometric tail.
    pub fn draw(&self, rng: &mut ChaCha8Rng, signed: bool, tail: Option<bool>) -> Sequence {
        let m = rng.gen_range(self.support.0..=self.support.1);
        let entry = |rng: &mut ChaCha8Rng| {
            let v = rng.gen_range(self.magnitude.0..=self.magnitude.1);
            if signed && rng.gen_bool(0.5) {
                -v
            } else {
                v
            }
        };
        let head: Vec<f64> = (0..m).map(|_| entry(rng)).collect();
        let with_tail = tail.unwrap_or_else(|| rng.gen_bool(self.tail_prob));
        let tail = with_tail.then(|| {
            let c = entry(rng);
            GeometricTail { c, gamma: rng.gen_range(self.gamma.0..=self.gamma.1) }
        });
        Sequence::new(head, tail).expect("generator produces valid sequences")
    }
}

/// Lengths and thresholds of the discretized limit checks.
#[derive(Debug, Clone, PartialEq)]
pub struct Ladders {
    /// Truncation depth past the head for the Fatou check.
    pub fatou_extra: usize,
    /// Largest shift in the order-continuity ladder `1, 2, 4, ..`.
    pub order_max: usize,
    /// Number of halvings `x / 2^n` and the level they must reach.
    pub halvings: u32,
    pub small_threshold: f64,
    /// Number of doublings `x * 2^n`; modular and norm must reach `2^n`.
    pub doublings: u32,
    /// Halvings tried for the modular continuity check and its target.
    pub continuity_steps: u32,
    pub continuity_eps: f64,
}

impl Default for Ladders {
    fn default() -> Self {
        Ladders {
            fatou_extra: 60,
            order_max: 64,
            halvings: 20,
            small_threshold: 1e-3,
            doublings: 10,
            continuity_steps: 40,
            continuity_eps: 1e-3,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SuiteConfig {
    pub seed: u64,
    /// Trials per function in the pool.
    pub trials: usize,
    pub tol: f64,
    pub phi_pool: Vec<OrliczFunction>,
    pub sequence_gen: SequenceGen,
    pub ladders: Ladders,
    /// Levels `eps` of `||y|| >= eps` for the uniform monotonicity estimate.
    pub eps_levels: Vec<f64>,
    /// Mutation hook: tests `rho(x+y) <= rho(x) + rho(y)` instead of the true
    /// superadditivity, which must then fail.
    pub invert_superadditivity: bool,
}

impl SuiteConfig {
    pub fn new(seed: u64, trials: usize, tol: f64, phi_pool: Vec<OrliczFunction>) -> Result<Self> {
        if trials == 0 {
            return Err(Error::InvalidArgument("trials must be at least 1".into()));
        }
        if !(tol > 0.0) {
            return Err(Error::InvalidArgument(format!("tolerance must be positive, got {tol}")));
        }
        if phi_pool.is_empty() {
            return Err(Error::InvalidArgument("empty phi pool".into()));
        }
        Ok(SuiteConfig {
            seed,
            trials,
            tol,
            phi_pool,
            sequence_gen: SequenceGen::default(),
            ladders: Ladders::default(),
            eps_levels: vec![0.1, 0.5, 1.0],
            invert_superadditivity: false,
        })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Failure {
    pub suite: &'static str,
    /// `None` for a failure of an aggregate over all trials.
    pub trial: Option<usize>,
    pub seed: u64,
    pub phi: usize,
    pub check: String,
    pub lhs: f64,
    pub rhs: f64,
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let trial = self.trial.map_or_else(|| "all".to_string(), |t| t.to_string());
        write!(
            f,
            "FAIL suite={} trial={} seed={} phi={} check={} lhs={} rhs={}",
            self.suite,
            trial,
            self.seed,
            self.phi,
            self.check,
            sig9(self.lhs),
            sig9(self.rhs)
        )
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SuiteReport {
    pub suite: &'static str,
    pub trials: usize,
    pub failures: Vec<Failure>,
    pub info: Vec<String>,
}

impl SuiteReport {
    fn new(suite: &'static str) -> Self {
        SuiteReport { suite, trials: 0, failures: Vec::new(), info: Vec::new() }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct HarnessReport {
    pub suites: Vec<SuiteReport>,
}

impl HarnessReport {
    pub fn passed(&self) -> bool {
        self.suites.iter().all(SuiteReport::passed)
    }

    pub fn failure_count(&self) -> usize {
        self.suites.iter().map(|s| s.failures.len()).sum()
    }
}

impl fmt::Display for HarnessReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.suites {
            for fl in &s.failures {
                writeln!(f, "{fl}")?;
            }
        }
        writeln!(f, "# summary")?;
        for s in &self.suites {
            writeln!(f, "suite={} trials={} failures={}", s.suite, s.trials, s.failures.len())?;
            for line in &s.info {
                writeln!(f, "  {line}")?;
            }
        }
        writeln!(f, "total_failures={}", self.failure_count())
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", HarnessReport { suites: vec![self.clone()] })
    }
}

/// splitmix64 finalizer, used to derive independent per-trial seeds.
fn mix(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

fn suite_tag(name: &str) -> u64 {
    name.bytes().fold(0xcbf2_9ce4_8422_2325u64, |h, b| (h ^ b as u64).wrapping_mul(0x100_0000_01b3))
}

/// Per-trial bookkeeping.
struct Trial<'a> {
    suite: &'static str,
    index: usize,
    seed: u64,
    phi: usize,
    failures: &'a mut Vec<Failure>,
}

impl Trial<'_> {
    /// Records a failure unless `ok`.
    fn expect(&mut self, ok: bool, check: &str, lhs: f64, rhs: f64) -> bool {
        if !ok {
            self.failures.push(Failure {
                suite: self.suite,
                trial: Some(self.index),
                seed: self.seed,
                phi: self.phi,
                check: check.to_string(),
                lhs,
                rhs,
            });
        }
        ok
    }

    fn norm(&mut self, phi: &OrliczFunction, x: &Sequence, tol: f64) -> Option<CertifiedValue> {
        match luxemburg_norm(phi, x, tol) {
            Ok(v) => Some(v),
            Err(_) => {
                self.expect(false, "norm_computable", f64::NAN, f64::NAN);
                None
            }
        }
    }
}

/// Runs `body` for every (phi, trial) pair with a fresh seeded generator.
fn run_trials(
    cfg: &SuiteConfig,
    suite: &'static str,
    needs_delta2: bool,
    report: &mut SuiteReport,
    mut body: impl FnMut(&mut Trial<'_>, &OrliczFunction, &mut ChaCha8Rng),
) {
    for (j, phi) in cfg.phi_pool.iter().enumerate() {
        if !certify_nontrivial(phi).holds() {
            report.failures.push(Failure {
                suite,
                trial: None,
                seed: cfg.seed,
                phi: j,
                check: "precondition_nontrivial".into(),
                lhs: 0.0,
                rhs: 1.0,
            });
            continue;
        }
        if needs_delta2 && !phi.delta2_at_zero().holds() {
            report.info.push(format!("phi={j} skipped: Delta2(0) fails"));
            continue;
        }
        for t in 0..cfg.trials {
            let index = j * cfg.trials + t;
            let seed = mix(cfg.seed ^ mix(suite_tag(suite) ^ mix(index as u64)));
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut trial = Trial { suite, index, seed, phi: j, failures: &mut report.failures };
            body(&mut trial, phi, &mut rng);
            report.trials += 1;
        }
    }
}

/// Solidness: `|x| <= |y|` coordinatewise gives `x` in the space and
/// `||x|| <= ||y||`.
pub fn run_koethe_suite(cfg: &SuiteConfig) -> SuiteReport {
    let mut report = SuiteReport::new("koethe");
    let tol = cfg.tol;
    run_trials(cfg, "koethe", false, &mut report, |trial, phi, rng| {
        let y = cfg.sequence_gen.draw(rng, true, None);
        let x = match trial.index % cfg.trials {
            0 => y.clone(),
            1 => Sequence::zero(),
            _ => {
                let head = y.head().iter().map(|v| v * rng.gen_range(-1.0..=1.0)).collect();
                let tail = y.tail().map(|t| GeometricTail { c: t.c * rng.gen_range(-1.0..=1.0), gamma: t.gamma });
                Sequence::new(head, tail).unwrap()
            }
        };
        let rho = modular(phi, &x, tol);
        trial.expect(!rho.is_infinite(), "x_in_space", rho.lo(), f64::INFINITY);
        let (Some(nx), Some(ny)) = (trial.norm(phi, &x, tol), trial.norm(phi, &y, tol)) else { return };
        trial.expect(nx.hi() <= ny.hi() + 2.0 * tol, "solid", nx.hi(), ny.hi() + 2.0 * tol);
        if x.is_zero() {
            trial.expect(nx.hi() == 0.0, "zero_norm", nx.hi(), 0.0);
        }
        if x == y {
            trial.expect((nx.hi() - ny.hi()).abs() <= 2.0 * tol, "equal_norms", nx.hi(), ny.hi());
        }
    });
    report
}

/// Truncations `x_k` increase to `x`; their norms must increase to `||x||`.
pub fn run_fatou_suite(cfg: &SuiteConfig) -> SuiteReport {
    let mut report = SuiteReport::new("fatou");
    let tol = cfg.tol;
    let mut max_gap = 0.0f64;
    let mut profiles = Vec::new();
    run_trials(cfg, "fatou", false, &mut report, |trial, phi, rng| {
        let x = match trial.index % cfg.trials {
            1 => cfg.sequence_gen.draw(rng, false, Some(false)),
            2 => Sequence::zero(),
            _ => cfg.sequence_gen.draw(rng, false, Some(true)),
        };
        let m = x.head().len();
        let big_k = m + cfg.ladders.fatou_extra;
        let mut ks: Vec<usize> = std::iter::successors(Some(1usize), |k| Some(k * 2)).take_while(|k| *k < big_k).collect();
        ks.push(big_k);
        let Some(nx) = trial.norm(phi, &x, 0.25 * tol) else { return };
        let mut prev: Option<CertifiedValue> = None;
        let mut last = CertifiedValue::zero();
        let mut profile = Vec::new();
        for &k in &ks {
            let xk = x.truncated(k);
            let Some(nk) = trial.norm(phi, &xk, 0.25 * tol) else { return };
            profile.push(format!("{k}:{}", sig9(nk.hi())));
            if let Some(p) = prev {
                trial.expect(p.lo() <= nk.hi(), "truncation_norms_nondecreasing", p.lo(), nk.hi());
            }
            trial.expect(nk.lo() <= nx.hi(), "truncation_below_limit", nk.lo(), nx.hi());
            if x.support_end().is_some_and(|end| k >= end) {
                trial.expect(nk == nx, "finite_support_gap_zero", nk.hi() - nx.lo(), 0.0);
            }
            prev = Some(nk);
            last = nk;
        }
        let gap = nx.hi() - last.lo();
        max_gap = max_gap.max(gap);
        if trial.index % cfg.trials == 0 {
            profiles.push(format!("phi={} profile {} limit:{}", trial.phi, profile.join(" "), sig9(nx.hi())));
        }
        trial.expect(gap <= tol, "limit_gap", gap, tol);
        if x.is_zero() {
            trial.expect(nx.hi() == 0.0, "zero_norm", nx.hi(), 0.0);
        }
    });
    report.info.extend(profiles);
    report.info.push(format!("max_gap_at_K={}", sig9(max_gap)));
    report
}

/// `||(0, .., 0, x(n+1), ..)||` decreases to zero along `n = 1, 2, 4, ..`.
pub fn run_order_continuity_suite(cfg: &SuiteConfig) -> SuiteReport {
    let mut report = SuiteReport::new("order_continuity");
    let tol = cfg.tol;
    let mut worst_final = 0.0f64;
    run_trials(cfg, "order_continuity", true, &mut report, |trial, phi, rng| {
        let x = if trial.index % cfg.trials == 1 {
            cfg.sequence_gen.draw(rng, true, Some(false))
        } else {
            cfg.sequence_gen.draw(rng, true, Some(true))
        };
        let ns: Vec<usize> =
            std::iter::successors(Some(1usize), |n| Some(n * 2)).take_while(|n| *n <= cfg.ladders.order_max).collect();
        let mut prev: Option<CertifiedValue> = None;
        for &n in &ns {
            let tail = x.tail_after(n);
            let Some(v) = trial.norm(phi, &tail, 0.25 * tol) else { return };
            if let Some(p) = prev {
                trial.expect(v.lo() <= p.hi(), "tail_norms_nonincreasing", v.lo(), p.hi());
            }
            if x.support_end().is_some_and(|end| n >= end) {
                trial.expect(v.hi() == 0.0, "finite_support_tail_zero", v.hi(), 0.0);
            }
            prev = Some(v);
        }
        let last = prev.unwrap();
        worst_final = worst_final.max(last.hi());
        trial.expect(last.hi() <= tol, "tail_norm_below_tol", last.hi(), tol);
    });
    report.info.push(format!("max_final_tail_norm={}", sig9(worst_final)));
    report
}

/// Largest Cesaro mean `max_n S_n / n`, bounded above rigorously.
fn sup_cesaro_mean(x: &Sequence) -> f64 {
    let horizon = x.head().len() + 256;
    let seen = (1..=horizon).map(|n| x.cesaro_mean(n)).fold(0.0, f64::max);
    seen.max(x.total() / (horizon + 1) as f64)
}

/// Norm accurate enough that `x / ||x||` has modular within `tol` of 1.
fn precise_norm(trial: &mut Trial<'_>, phi: &OrliczFunction, x: &Sequence, tol: f64) -> Option<CertifiedValue> {
    let rough = trial.norm(phi, x, tol)?;
    let scale = rough.lo().clamp(1e-12, 1.0);
    trial.norm(phi, x, 1e-2 * tol * scale)
}

/// Norm/modular relations: unit normalization, joint convergence to zero and
/// infinity, the distance inequality, the Delta2 growth of the modular and
/// its continuity under small perturbations.
pub fn run_norm_modular_suite(cfg: &SuiteConfig) -> SuiteReport {
    let mut report = SuiteReport::new("norm_modular");
    let tol = cfg.tol;
    let lad = &cfg.ladders;
    let mut min_delta = f64::INFINITY;
    run_trials(cfg, "norm_modular", true, &mut report, |trial, phi, rng| {
        let base = cfg.sequence_gen.draw(rng, true, None);
        let x = base.scaled(2f64.powf(rng.gen_range(-2.0..=2.0)));
        let eps = 0.1 * tol;

        // Unit normalization.
        let Some(nx) = precise_norm(trial, phi, &x, tol) else { return };
        let z = x.scaled(1.0 / nx.mid());
        let rz = modular(phi, &z, eps);
        trial.expect(rz.max_dist(1.0) <= tol, "normalized_modular_is_one", rz.max_dist(1.0), tol);

        // Distance inequality on x itself.
        let rx = modular(phi, &x, eps);
        let slack = tol;
        trial.expect(
            nx.min_dist(1.0) <= rx.max_dist(1.0) + slack,
            "norm_distance_le_modular_distance",
            nx.min_dist(1.0),
            rx.max_dist(1.0) + slack,
        );

        // Halving: modular and norm go to zero together.
        let mut prev = rz;
        for n in 1..=lad.halvings {
            let v = modular(phi, &z.scaled(0.5f64.powi(n as i32)), 1e-3 * tol);
            trial.expect(v.lo() <= prev.hi(), "halving_modular_nonincreasing", v.lo(), prev.hi());
            prev = v;
        }
        trial.expect(prev.hi() <= lad.small_threshold, "halving_modular_small", prev.hi(), lad.small_threshold);
        let zh = z.scaled(0.5f64.powi(lad.halvings as i32));
        if let Some(nh) = trial.norm(phi, &zh, 1e-3 * lad.small_threshold) {
            trial.expect(nh.hi() <= lad.small_threshold, "halving_norm_small", nh.hi(), lad.small_threshold);
        }

        // Doubling: both grow past 2^n.
        let mut prev = rz;
        for n in 1..=lad.doublings {
            let v = modular(phi, &z.scaled(2f64.powi(n as i32)), tol);
            trial.expect(v.lo() > prev.hi(), "doubling_modular_increasing", v.lo(), prev.hi());
            prev = v;
        }
        let bound = 2f64.powi(lad.doublings as i32);
        trial.expect(prev.lo() >= bound, "doubling_modular_diverges", prev.lo(), bound);
        if let Some(nd) = trial.norm(phi, &z.scaled(bound), tol) {
            trial.expect(nd.lo() >= bound * (1.0 - 2.0 * tol), "doubling_norm_diverges", nd.lo(), bound);
        }

        // rho(2w) <= K rho(w) + eps on draws whose Cesaro means stay in [0, a].
        let d2 = phi.delta2_at_zero();
        let (k, a) = (d2.constant("K").unwrap(), d2.constant("a").unwrap());
        let w = x.scaled(a / sup_cesaro_mean(&x) * rng.gen_range(0.1..=1.0));
        let (r1, r2) = (modular(phi, &w, eps), modular(phi, &w.scaled(2.0), eps));
        trial.expect(r2.lo() <= k * r1.hi() + tol, "modular_delta2", r2.lo(), k * r1.hi() + tol);

        // |rho(x + y) - rho(x)| < eps once rho(y) is small enough.
        let y = cfg.sequence_gen.draw(rng, true, Some(false));
        let mut found = None;
        for j in 0..lad.continuity_steps {
            let yj = y.scaled(0.5f64.powi(j as i32));
            let Ok(sum) = z.combine(1.0, &yj, 1.0) else { break };
            let rs = modular(phi, &sum, 1e-2 * lad.continuity_eps);
            let diff = (rs.hi() - rz.lo()).max(rz.hi() - rs.lo());
            if diff < lad.continuity_eps {
                found = Some(modular(phi, &yj, 1e-2 * lad.continuity_eps).hi());
                break;
            }
        }
        match found {
            Some(delta) => min_delta = min_delta.min(delta),
            None => {
                trial.expect(false, "modular_continuity", f64::INFINITY, lad.continuity_eps);
            }
        }
    });
    if min_delta.is_finite() {
        report.info.push(format!("continuity_delta_estimate={} at eps={}", sig9(min_delta), sig9(lad.continuity_eps)));
    }
    report
}

/// Uniform monotonicity estimate and superadditivity of the modular.
pub fn run_monotonicity_suite(cfg: &SuiteConfig) -> SuiteReport {
    let mut report = SuiteReport::new("monotonicity");
    let tol = cfg.tol;
    let mut deltas = vec![f64::INFINITY; cfg.eps_levels.len()];
    run_trials(cfg, "monotonicity", true, &mut report, |trial, phi, rng| {
        let x = cfg.sequence_gen.draw(rng, false, None);
        let Some(nx) = precise_norm(trial, phi, &x, tol) else { return };
        let z = x.scaled(1.0 / nx.mid());
        let Some(nz) = trial.norm(phi, &z, 0.25 * tol) else { return };
        let rz = modular(phi, &z, 0.1 * tol);
        for (li, &level) in cfg.eps_levels.iter().enumerate() {
            let y = if trial.index % cfg.trials == 0 && li == 0 {
                Sequence::zero()
            } else {
                // Same tail ratio as z (or none) so that z + y stays representable.
                let raw = cfg.sequence_gen.draw(rng, false, Some(false));
                let raw = match z.tail() {
                    Some(t) if rng.gen_bool(0.5) => raw
                        .combine(1.0, &Sequence::new(vec![0.0; raw.head().len()], Some(GeometricTail { c: t.c.abs(), gamma: t.gamma })).unwrap(), 1.0)
                        .unwrap(),
                    _ => raw,
                };
                let Some(ny) = trial.norm(phi, &raw, tol) else { return };
                raw.scaled(level * rng.gen_range(1.0..=2.0) / ny.lo())
            };
            let Ok(sum) = z.combine(1.0, &y, 1.0) else { continue };
            let Some(ns) = trial.norm(phi, &sum, 0.25 * tol) else { return };
            if y.is_zero() {
                trial.expect(ns == nz, "zero_increment_keeps_norm", ns.hi(), nz.hi());
                continue;
            }
            deltas[li] = deltas[li].min(ns.lo() - nz.hi());
            let ry = modular(phi, &y, 0.1 * tol);
            let rs = modular(phi, &sum, 0.1 * tol);
            if cfg.invert_superadditivity {
                trial.expect(rs.lo() <= rz.hi() + ry.hi(), "subadditivity(mutant)", rs.lo(), rz.hi() + ry.hi());
            } else {
                trial.expect(rs.hi() >= rz.lo() + ry.lo(), "superadditivity", rs.hi(), rz.lo() + ry.lo());
            }
        }
    });
    for (li, &level) in cfg.eps_levels.iter().enumerate() {
        let d = deltas[li];
        report.info.push(format!("delta_estimate eps={} delta={}", sig9(level), sig9(d)));
        if d.is_finite() && d <= 0.0 {
            report.failures.push(Failure {
                suite: "monotonicity",
                trial: None,
                seed: cfg.seed,
                phi: 0,
                check: format!("uniform_monotone_delta_positive(eps={})", sig9(level)),
                lhs: d,
                rhs: 0.0,
            });
        }
    }
    // Functions vanishing near zero: the strict-monotonicity witness must show
    // equal norms for x <= y, x != y.
    for (j, phi) in cfg.phi_pool.iter().enumerate() {
        if phi.a_phi() == 0.0 || !certify_nontrivial(phi).holds() {
            continue;
        }
        match sm_failure_witness(phi, 1e-10) {
            Ok(w) => {
                let ok = verify_witness(phi, &w, tol).passed();
                let gap = match (luxemburg_norm(phi, &w.y, 0.25 * tol), luxemburg_norm(phi, &w.x, 0.25 * tol)) {
                    (Ok(ny), Ok(nx)) => ny.hi() - nx.lo(),
                    _ => f64::NAN,
                };
                report.info.push(format!("phi={j} expected SM failure: ||y||-||x||<={} (witness verified: {ok})", sig9(gap)));
                if !ok {
                    report.failures.push(Failure {
                        suite: "monotonicity",
                        trial: None,
                        seed: cfg.seed,
                        phi: j,
                        check: "sm_witness_verifies".into(),
                        lhs: gap,
                        rhs: 2.0 * tol,
                    });
                }
            }
            Err(e) => report.info.push(format!("phi={j} SM witness unavailable: {e}")),
        }
    }
    report
}

/// All five suites in a fixed order.
pub fn run_all(cfg: &SuiteConfig) -> HarnessReport {
    HarnessReport {
        suites: vec![
            run_koethe_suite(cfg),
            run_fatou_suite(cfg),
            run_order_continuity_suite(cfg),
            run_norm_modular_suite(cfg),
            run_monotonicity_suite(cfg),
        ],
    }
}
