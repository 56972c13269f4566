//! Concrete counterexample pairs: two unit-sphere sequences exhibiting the
//! failure of strict monotonicity (when `phi` vanishes near zero) or of
//! rotundity (when `phi` is affine somewhere below `alpha`).

use std::fmt;

use crate::error::{Error, Result};
use crate::interval::{sig9, CertifiedValue};
use crate::modular::{harmonic_profile_sum, luxemburg_norm, modular};
use crate::orlicz::{OrliczFunction, Sai};
use crate::sequence::{parse_sequence, Sequence};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WitnessKind {
    SmFailure,
    RotundityFailure,
}

impl WitnessKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            WitnessKind::SmFailure => "SM_FAILURE",
            WitnessKind::RotundityFailure => "ROTUNDITY_FAILURE",
        }
    }
}

/// One recorded relation: a certified quantity and the value it should hit.
#[derive(Debug, Clone, PartialEq)]
pub struct Check {
    pub name: String,
    pub target: f64,
    pub achieved: CertifiedValue,
}

#[derive(Debug, Clone, PartialEq)]
pub struct WitnessPair {
    pub x: Sequence,
    pub y: Sequence,
    pub kind: WitnessKind,
    pub checks: Vec<Check>,
    /// Construction parameters (`c`, `n0` or `b`, `c`, `b1`, `c1`, `k`, `k1`, ...).
    pub constants: Vec<(String, f64)>,
    pub branch: Option<String>,
}

impl WitnessPair {
    pub fn constant(&self, name: &str) -> Option<f64> {
        self.constants.iter().find(|(n, _)| n == name).map(|(_, v)| *v)
    }
}

impl fmt::Display for WitnessPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "# kind: {}", self.kind.as_str())?;
        if let Some(b) = &self.branch {
            writeln!(f, "# branch: {b}")?;
        }
        if !self.constants.is_empty() {
            let cs: Vec<String> = self.constants.iter().map(|(n, v)| format!("{n}={v}")).collect();
            writeln!(f, "# constants: {}", cs.join(" "))?;
        }
        writeln!(f, "# checks:")?;
        for c in &self.checks {
            writeln!(f, "#   {} target={} achieved={}", c.name, sig9(c.target), c.achieved)?;
        }
        writeln!(f, "# x")?;
        write!(f, "{}", self.x)?;
        writeln!(f, "# y")?;
        write!(f, "{}", self.y)
    }
}

/// Reads back the two sequences of a serialized pair. Checks and constants
/// are not parsed; [`verify_witness`] recomputes everything anyway.
pub fn parse_witness(text: &str) -> Result<WitnessPair> {
    let mut kind = None;
    let mut sections: Vec<String> = Vec::new();
    for line in text.lines() {
        let t = line.trim();
        if let Some(k) = t.strip_prefix("# kind:") {
            kind = match k.trim() {
                "SM_FAILURE" => Some(WitnessKind::SmFailure),
                "ROTUNDITY_FAILURE" => Some(WitnessKind::RotundityFailure),
                other => return Err(Error::Syntax { line: 0, msg: format!("unknown witness kind `{other}`") }),
            };
        } else if t == "# x" || t == "# y" {
            sections.push(String::new());
        } else if let Some(cur) = sections.last_mut() {
            cur.push_str(line);
            cur.push('\n');
        }
    }
    let kind = kind.ok_or(Error::Syntax { line: 0, msg: "missing `# kind:` header".into() })?;
    if sections.len() != 2 {
        return Err(Error::Syntax { line: 0, msg: "expected `# x` and `# y` sections".into() });
    }
    Ok(WitnessPair {
        x: parse_sequence(&sections[0])?,
        y: parse_sequence(&sections[1])?,
        kind,
        checks: Vec::new(),
        constants: Vec::new(),
        branch: None,
    })
}

/// Finds `t` with `g(t)` within `tol` of 1 for a nondecreasing continuous
/// `g`, given `g(lo) < 1`. `g(t, eps)` must return an enclosure of width at
/// most `eps`.
fn solve_unit_level(
    mut lo: f64,
    start: f64,
    tol: f64,
    g: impl Fn(f64, f64) -> CertifiedValue,
) -> Result<(f64, CertifiedValue)> {
    let eps = 0.25 * tol;
    let accept = |v: &CertifiedValue| v.lo() >= 1.0 - tol && v.hi() <= 1.0 + tol;
    let mut hi = start;
    let mut doublings = 0;
    loop {
        let v = g(hi, eps);
        if accept(&v) {
            return Ok((hi, v));
        }
        if v.lo() > 1.0 {
            break;
        }
        lo = hi;
        hi *= 2.0;
        doublings += 1;
        if doublings > 200 {
            return Err(Error::Undecidable { at: hi });
        }
    }
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        let v = g(mid, eps);
        if accept(&v) {
            return Ok((mid, v));
        }
        if v.hi() < 1.0 {
            lo = mid;
        } else if v.lo() > 1.0 {
            hi = mid;
        } else {
            return Err(Error::Undecidable { at: mid });
        }
    }
    Err(Error::Undecidable { at: 0.5 * (lo + hi) })
}

/// Witness that `A_phi` is not strictly monotone when `a_phi > 0`:
/// `x = (c, 0, ...)` with `sum_n phi(c/n) = 1`, and `y` equal to `x` plus a
/// unit at the first index `n0` with `(c+1)/n0 <= a_phi`.
pub fn sm_failure_witness(phi: &OrliczFunction, tol: f64) -> Result<WitnessPair> {
    let a_phi = phi.a_phi();
    if a_phi == 0.0 {
        return Err(Error::NotApplicable("phi > 0, strict monotonicity holds".into()));
    }
    let probe = |c: f64, eps: f64| modular(phi, &Sequence::finite(vec![c]).unwrap(), eps);
    let (c, _) = solve_unit_level(0.0, a_phi, tol, probe)?;
    let mut n0 = ((c + 1.0) / a_phi).ceil().max(1.0) as usize;
    while (c + 1.0) / n0 as f64 > a_phi {
        n0 += 1;
    }
    let x = Sequence::finite(vec![c])?;
    let mut head = vec![0.0; n0];
    head[0] = c;
    head[n0 - 1] += 1.0;
    let y = Sequence::finite(head)?;
    let eps = 0.1 * tol;
    let checks = vec![
        Check { name: "rho(x)".into(), target: 1.0, achieved: modular(phi, &x, eps) },
        Check { name: "rho(y)".into(), target: 1.0, achieved: modular(phi, &y, eps) },
    ];
    Ok(WitnessPair {
        x,
        y,
        kind: WitnessKind::SmFailure,
        checks,
        constants: vec![("c".into(), c), ("n0".into(), n0 as f64)],
        branch: None,
    })
}

/// Witness that the space is not rotund, built from an affine stretch
/// `[b, c]` of `phi` strictly below `alpha`.
///
/// With `b1 = b + delta` and `c1 = c - 3 delta` both sums
/// `phi(b) + phi((b+c)/2)` and `phi(b1) + phi((b1+c1)/2)` agree because `phi`
/// is affine there, and `k = (b+c) - (b1+c1)` realigns the partial sums from
/// the third coordinate on. `k1` then lifts both modulars to 1. The pair is
///
/// ```text
/// x = (b1, c1, k, k1, 0, ...)
/// y = (b,  c,  0, k1, 0, ...)
/// ```
pub fn rotundity_failure_witness(
    phi: &OrliczFunction,
    sai: Sai,
    alpha: CertifiedValue,
    tol: f64,
) -> Result<WitnessPair> {
    if !phi.delta2_at_zero().holds() {
        return Err(Error::Delta2Required);
    }
    let l = sai.lo;
    let r = sai.hi.min(alpha.lo());
    if !(r > l) {
        return Err(Error::NotApplicable(format!(
            "interval [{}, {}] does not meet (0, {})",
            sig9(sai.lo),
            sig9(sai.hi),
            sig9(alpha.lo())
        )));
    }
    let margin = (r - l) / 8.0;
    if margin < 1e-9 * r.max(1.0) {
        return Err(Error::SaiTooSmall { lo: sai.lo, hi: sai.hi });
    }
    let (b, c) = (l + margin, r - margin);

    // 2 phi(c) + sum_{i>=3} phi((2c + d)/i) < 1. Since c < alpha and phi is
    // increasing there, d = 2(alpha - c) is admissible up to rounding.
    let eps = 0.1 * tol;
    let below_one = |d: f64| (harmonic_profile_sum(phi, 2.0 * c + d, 3, eps) + CertifiedValue::exact(2.0 * phi.eval(c)).widened()).hi() < 1.0;
    let mut d = 2.0 * (alpha.lo() - c);
    let mut tries = 0;
    while !below_one(d) {
        d *= 0.5;
        tries += 1;
        if tries > 60 {
            return Err(Error::NoK1);
        }
    }

    let mut delta = (d / 16.0).min(margin / 8.0).min((c - b) / 8.0);
    for _ in 0..30 {
        let b1 = b + delta;
        let c1 = c - 3.0 * delta;
        let k = (b + c) - (b1 + c1);
        let base = |k1: f64| Sequence::finite(vec![b, c, 0.0, k1]).unwrap();
        if modular(phi, &base(0.0), eps).hi() >= 1.0 {
            delta *= 0.5;
            continue;
        }
        let (k1, _) = solve_unit_level(0.0, 1.0, 0.25 * tol, |k1, e| modular(phi, &base(k1), e))?;
        let x = Sequence::finite(vec![b1, c1, k, k1])?;
        let y = base(k1);
        let mid = x.combine(0.5, &y, 0.5)?;
        let affine_gap = (phi.eval(b) + phi.eval(0.5 * (b + c))) - (phi.eval(b1) + phi.eval(0.5 * (b1 + c1)));
        let checks = vec![
            Check { name: "rho(x)".into(), target: 1.0, achieved: modular(phi, &x, eps) },
            Check { name: "rho(y)".into(), target: 1.0, achieved: modular(phi, &y, eps) },
            Check { name: "rho((x+y)/2)".into(), target: 1.0, achieved: modular(phi, &mid, eps) },
            Check { name: "affine_identity".into(), target: 0.0, achieved: CertifiedValue::exact(affine_gap) },
        ];
        let constants = [("b", b), ("c", c), ("b1", b1), ("c1", c1), ("k", k), ("k1", k1), ("d", d), ("delta", delta)]
            .into_iter()
            .map(|(n, v)| (n.to_string(), v))
            .collect();
        return Ok(WitnessPair {
            x,
            y,
            kind: WitnessKind::RotundityFailure,
            checks,
            constants,
            branch: Some("b1+c1+k=b+c".into()),
        });
    }
    Err(Error::NoK1)
}

#[derive(Debug, Clone, PartialEq)]
pub struct VerifyEntry {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq)]
pub struct VerifyReport {
    pub entries: Vec<VerifyEntry>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.entries.iter().all(|e| e.passed)
    }

    pub fn entry(&self, name: &str) -> Option<&VerifyEntry> {
        self.entries.iter().find(|e| e.name == name)
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for e in &self.entries {
            writeln!(f, "{} {} {}", if e.passed { "PASS" } else { "FAIL" }, e.name, e.detail)?;
        }
        Ok(())
    }
}

/// Index range covering every coordinate where either sequence is nonzero,
/// plus enough of any tail to compare ratios.
fn compare_len(x: &Sequence, y: &Sequence) -> usize {
    x.head().len().max(y.head().len()) + 64
}

fn record(entries: &mut Vec<VerifyEntry>, name: &str, passed: bool, detail: String) {
    entries.push(VerifyEntry { name: name.to_string(), passed, detail });
}

fn check_unit_modular(entries: &mut Vec<VerifyEntry>, phi: &OrliczFunction, name: &str, s: &Sequence, tol: f64) {
    let v = modular(phi, s, 0.1 * tol);
    record(entries, name, v.max_dist(1.0) <= tol, format!("{v}"));
}

fn check_unit_norm(
    entries: &mut Vec<VerifyEntry>,
    phi: &OrliczFunction,
    name: &str,
    s: &Sequence,
    tol: f64,
) -> Option<CertifiedValue> {
    match luxemburg_norm(phi, s, 0.25 * tol) {
        Ok(v) => {
            record(entries, name, v.max_dist(1.0) <= tol, format!("{v}"));
            Some(v)
        }
        Err(e) => {
            record(entries, name, false, e.to_string());
            None
        }
    }
}

/// Recomputes every relation of a witness pair from scratch.
pub fn verify_witness(phi: &OrliczFunction, w: &WitnessPair, tol: f64) -> VerifyReport {
    let mut entries = Vec::new();
    let len = compare_len(&w.x, &w.y);
    let differs = (1..=len).any(|i| w.x.get(i) != w.y.get(i)) || w.x.tail() != w.y.tail();
    record(&mut entries, "x != y", differs, String::new());

    check_unit_modular(&mut entries, phi, "rho(x)=1", &w.x, tol);
    check_unit_modular(&mut entries, phi, "rho(y)=1", &w.y, tol);
    let nx = check_unit_norm(&mut entries, phi, "||x||=1", &w.x, tol);
    let ny = check_unit_norm(&mut entries, phi, "||y||=1", &w.y, tol);

    match w.kind {
        WitnessKind::SmFailure => {
            let ordered = (1..=len).all(|i| 0.0 <= w.x.get(i) && w.x.get(i) <= w.y.get(i));
            record(&mut entries, "0<=x<=y", ordered, String::new());
            if let (Some(nx), Some(ny)) = (nx, ny) {
                let gap = ny.hi() - nx.lo();
                record(&mut entries, "||y||-||x||<=2tol", gap <= 2.0 * tol, sig9(gap));
            }
        }
        WitnessKind::RotundityFailure => {
            match w.x.combine(0.5, &w.y, 0.5) {
                Ok(mid) => {
                    check_unit_modular(&mut entries, phi, "rho((x+y)/2)=1", &mid, tol);
                    check_unit_norm(&mut entries, phi, "||(x+y)/2||=1", &mid, tol);
                }
                Err(e) => record(&mut entries, "rho((x+y)/2)=1", false, e.to_string()),
            }
            let i0 = (1..=len).find(|&i| w.x.get(i).abs() != w.y.get(i).abs());
            record(
                &mut entries,
                "exists i |x(i)|!=|y(i)|",
                i0.is_some(),
                i0.map_or_else(String::new, |i| format!("i={i}")),
            );
        }
    }
    VerifyReport { entries }
}
