//! Certificates for the geometric properties of `ces_phi`.
//!
//! Every decision is read off the first piece of `phi` and, for rotundity, the
//! root `alpha` of `f(a) = 2 phi(a) + sum_{i>=3} phi(2a/i) = 1`. Where only a
//! sufficient condition is available the verdict is `UNKNOWN`, never `FAILS`.

use crate::certificate::{Certificate, Property, Verdict};
use crate::error::{Error, Result};
use crate::interval::CertifiedValue;
use crate::modular::{harmonic_profile_sum, modular};
use crate::orlicz::OrliczFunction;
use crate::root::{bisect, Side};
use crate::sequence::Sequence;
use crate::witness::{rotundity_failure_witness, sm_failure_witness, verify_witness, WitnessPair};

const ALPHA_EPS_START: f64 = 1e-4;
const ALPHA_EPS_FLOOR: f64 = 1e-14;
/// Narrowest alpha enclosure tried before a boundary case is left UNKNOWN.
const ALPHA_TOL_FLOOR: f64 = 1e-13;

pub fn certify_nontrivial(phi: &OrliczFunction) -> Certificate {
    let first = phi.first_piece();
    if first.slope > 0.0 {
        return Certificate::new(Property::Nontrivial, Verdict::Fails)
            .with("slope_at_zero", first.slope)
            .with_note("sum_n phi(1/n) >= slope * sum_n 1/n diverges; ces_phi = {0}");
    }
    // Zero piece or a*u^p with p > 1 at the origin: the series converges from
    // n1 = 1 since the finitely many leading terms are finite.
    let sum = modular(phi, &Sequence::unit(1), 1e-10);
    Certificate::new(Property::Nontrivial, Verdict::Holds)
        .with("n1", 1.0)
        .with("sum_phi_1_over_n_lo", sum.lo())
        .with("sum_phi_1_over_n_hi", sum.hi())
}

/// Smallest `n` from which `sum phi(k/n)` has a certified finite tail, i.e.
/// `k/n` lies in the first piece. `None` for a trivial space.
pub fn n_k(phi: &OrliczFunction, k: f64) -> Option<usize> {
    if phi.first_piece().slope > 0.0 {
        return None;
    }
    let end = phi.first_piece_end();
    let k = k.abs();
    if !end.is_finite() {
        return Some(1);
    }
    let mut n = ((k / end).ceil() as usize).max(1);
    while k / n as f64 > end {
        n += 1;
    }
    Some(n)
}

/// The chain "lower index > 1 => power bound => nontrivial".
#[derive(Debug, Clone, PartialEq)]
pub struct SufficientChain {
    pub index: Certificate,
    /// `(eps, A, u0)` with `phi(u) <= A u^(1+eps)` on `[0, u0]`.
    pub power_bound: Option<(f64, f64, f64)>,
    pub nontrivial: Certificate,
}

impl SufficientChain {
    pub fn certificate(&self) -> Certificate {
        let mut c = Certificate::new(Property::SufficientChain, self.index.verdict)
            .with("nontrivial", if self.nontrivial.holds() { 1.0 } else { 0.0 });
        if let Some(idx) = self.index.constant("index") {
            c = c.with("index", idx);
        }
        if let Some((eps, a, u0)) = self.power_bound {
            c = c.with("eps", eps).with("A", a).with("u0", u0);
        }
        let note = match self.index.verdict {
            Verdict::Holds => "(a) => (b) => (c) realized",
            Verdict::Fails => "(a) fails; no conclusion drawn from the chain",
            _ => "(a) not applicable: phi vanishes near zero; (c) decided directly",
        };
        c.with_note(note)
    }
}

pub fn check_sufficient_conditions(phi: &OrliczFunction) -> SufficientChain {
    let index = phi.lower_index_exceeds_one();
    let power_bound = if index.holds() {
        Some((index.constant("eps").unwrap(), index.constant("A").unwrap(), index.constant("u0").unwrap()))
    } else {
        None
    };
    SufficientChain { index, power_bound, nontrivial: certify_nontrivial(phi) }
}

fn require_nontrivial(phi: &OrliczFunction) -> Result<()> {
    if certify_nontrivial(phi).holds() {
        Ok(())
    } else {
        Err(Error::TrivialSpace)
    }
}

pub fn certify_order_continuity(phi: &OrliczFunction) -> Result<Certificate> {
    require_nontrivial(phi)?;
    let d2 = phi.delta2_at_zero();
    Ok(if d2.holds() {
        Certificate::new(Property::OrderContinuous, Verdict::Holds)
            .with("K", d2.constant("K").unwrap())
            .with("a", d2.constant("a").unwrap())
            .with_note("Delta2(0) gives A_phi = ces_phi")
    } else {
        Certificate::new(Property::OrderContinuous, Verdict::Unknown)
            .with_note("Delta2(0) fails; only the sufficient direction is known")
    })
}

pub fn certify_strict_monotonicity(phi: &OrliczFunction) -> Result<Certificate> {
    require_nontrivial(phi)?;
    if phi.a_phi() == 0.0 {
        let scope = if phi.delta2_at_zero().holds() { "ces_phi (= A_phi under Delta2(0))" } else { "A_phi" };
        return Ok(Certificate::new(Property::StrictMonotone, Verdict::Holds)
            .with("a_phi", 0.0)
            .with_note(format!("phi > 0; scope: {scope}")));
    }
    let w = sm_failure_witness(phi, 1e-10)?;
    Ok(Certificate::new(Property::StrictMonotone, Verdict::Fails)
        .with("a_phi", phi.a_phi())
        .with("c", w.constant("c").unwrap())
        .with("n0", w.constant("n0").unwrap())
        .with_note("0 <= x <= y, x != y, ||x|| = ||y|| = 1")
        .with_witness(w))
}

pub fn certify_uniform_monotonicity(phi: &OrliczFunction) -> Result<Certificate> {
    require_nontrivial(phi)?;
    let d2 = phi.delta2_at_zero();
    Ok(if d2.holds() {
        Certificate::new(Property::UniformMonotone, Verdict::Holds)
            .with("K", d2.constant("K").unwrap())
            .with("a", d2.constant("a").unwrap())
            .with_note("delta(eps) is estimated empirically by the monotonicity suite")
    } else {
        Certificate::new(Property::UniformMonotone, Verdict::Unknown)
            .with_note("Delta2(0) fails; only the sufficient direction is known")
    })
}

/// Encloses `f(a) = 2 phi(a) + sum_{i>=3} phi(2a/i)` to width `eps`.
pub fn alpha_function(phi: &OrliczFunction, a: f64, eps: f64) -> CertifiedValue {
    let head = CertifiedValue::exact(2.0 * phi.eval(a)).widened();
    head + harmonic_profile_sum(phi, 2.0 * a, 3, eps)
}

fn alpha_probe(phi: &OrliczFunction, a: f64, eps: &mut f64) -> Side {
    loop {
        let v = alpha_function(phi, a, *eps);
        if v.hi() < 1.0 {
            return Side::Below;
        }
        if v.lo() > 1.0 {
            return Side::Above;
        }
        if *eps <= ALPHA_EPS_FLOOR {
            return Side::Straddle;
        }
        *eps = (*eps * 0.1).max(ALPHA_EPS_FLOOR);
    }
}

/// Encloses the unique `alpha` with `f(alpha) = 1`, certifying
/// `f(alpha.lo) < 1 < f(alpha.hi)`.
pub fn solve_alpha(phi: &OrliczFunction, tol: f64) -> Result<CertifiedValue> {
    require_nontrivial(phi)?;
    if !(tol > 0.0) {
        return Err(Error::InvalidArgument(format!("tolerance must be positive, got {tol}")));
    }
    let mut eps = ALPHA_EPS_START;
    let mut lo = 0.0;
    let mut hi = phi.a_phi().max(1.0);
    let mut doublings = 0;
    loop {
        match alpha_probe(phi, hi, &mut eps) {
            Side::Above => break,
            Side::Below => lo = hi,
            Side::Straddle => {}
        }
        hi *= 2.0;
        doublings += 1;
        if doublings > 1000 {
            return Err(Error::Undecidable { at: hi });
        }
    }
    let (lo, hi) = bisect(lo, hi, tol, |a| Ok(alpha_probe(phi, a, &mut eps)))?;
    Ok(CertifiedValue::new(lo, hi))
}

pub fn certify_rotundity(phi: &OrliczFunction, tol: f64) -> Result<Certificate> {
    require_nontrivial(phi)?;
    if !phi.delta2_at_zero().holds() {
        return Err(Error::Delta2Required);
    }
    let mut t = tol;
    loop {
        let alpha = solve_alpha(phi, t)?;
        let base = |v: Verdict| {
            Certificate::new(Property::Rotund, v).with("alpha_lo", alpha.lo()).with("alpha_hi", alpha.hi())
        };
        if let Some(sai) = phi.sai_list().iter().find(|s| s.lo < alpha.lo()) {
            let w = rotundity_failure_witness(phi, *sai, alpha, tol)?;
            return Ok(base(Verdict::Fails)
                .with("sai_lo", sai.lo)
                .with("sai_hi", sai.hi)
                .with_note("phi is affine on a subinterval of [0, alpha]")
                .with_witness(w));
        }
        if !phi.sai_list().iter().any(|s| s.lo < alpha.hi()) {
            return Ok(base(Verdict::Holds).with_note("phi strictly convex on [0, alpha]"));
        }
        if t <= ALPHA_TOL_FLOOR {
            return Ok(base(Verdict::Unknown)
                .with_note("UNKNOWN_BOUNDARY: an affine interval starts inside the alpha enclosure"));
        }
        t = (t * 0.1).max(ALPHA_TOL_FLOOR);
    }
}

/// Rotundity counterexample from the first affine interval starting below
/// `alpha`.
pub fn rotundity_witness(phi: &OrliczFunction, tol: f64) -> Result<WitnessPair> {
    require_nontrivial(phi)?;
    if !phi.delta2_at_zero().holds() {
        return Err(Error::Delta2Required);
    }
    let alpha = solve_alpha(phi, tol)?;
    let sai = phi
        .sai_list()
        .iter()
        .find(|s| s.lo < alpha.lo())
        .copied()
        .ok_or_else(|| Error::NotApplicable("phi is strictly convex on [0, alpha]".into()))?;
    rotundity_failure_witness(phi, sai, alpha, tol)
}

/// The six space-level certificates, or the error explaining why one could
/// not be issued.
pub fn certify_all(phi: &OrliczFunction, tol: f64) -> Vec<(Property, Result<Certificate>)> {
    vec![
        (Property::Nontrivial, Ok(certify_nontrivial(phi))),
        (Property::SufficientChain, Ok(check_sufficient_conditions(phi).certificate())),
        (Property::OrderContinuous, certify_order_continuity(phi)),
        (Property::StrictMonotone, certify_strict_monotonicity(phi)),
        (Property::UniformMonotone, certify_uniform_monotonicity(phi)),
        (Property::Rotund, certify_rotundity(phi, tol)),
    ]
}

fn sample_points(hi: f64, n: usize) -> impl Iterator<Item = f64> {
    (1..=n).map(move |i| hi * i as f64 / n as f64)
}

/// Re-checks the defining inequality of every constant in a certificate.
pub fn reverify(phi: &OrliczFunction, cert: &Certificate) -> bool {
    const SAMPLES: usize = 1000;
    let rel = 1e-12;
    match (cert.property, cert.verdict) {
        (Property::Delta2AtZero, Verdict::Holds)
        | (Property::OrderContinuous, Verdict::Holds)
        | (Property::UniformMonotone, Verdict::Holds) => {
            let (Some(k), Some(a)) = (cert.constant("K"), cert.constant("a")) else { return false };
            phi.eval(a) > 0.0
                && sample_points(a, SAMPLES).all(|u| phi.eval(2.0 * u) <= k * phi.eval(u) * (1.0 + rel))
        }
        (Property::Delta2AtZero, Verdict::Fails) => {
            let Some(u) = cert.constant("u") else { return false };
            phi.eval(u) == 0.0 && phi.eval(2.0 * u) > 0.0
        }
        (Property::LowerIndex, Verdict::Holds) | (Property::SufficientChain, Verdict::Holds) => {
            let (Some(eps), Some(a), Some(u0)) = (cert.constant("eps"), cert.constant("A"), cert.constant("u0")) else {
                return false;
            };
            eps > 0.0 && sample_points(u0.min(10.0), SAMPLES).all(|u| phi.eval(u) <= a * u.powf(1.0 + eps) * (1.0 + rel))
        }
        (Property::Nontrivial, Verdict::Holds) => {
            let n1 = cert.constant("n1").unwrap_or(1.0) as usize;
            !modular(phi, &Sequence::unit(n1.max(1)), 1e-8).is_infinite()
        }
        (Property::Nontrivial, Verdict::Fails) => {
            phi.first_piece().slope > 0.0 && modular(phi, &Sequence::unit(1), 1e-8).is_infinite()
        }
        (Property::StrictMonotone, Verdict::Holds) => phi.a_phi() == 0.0,
        (Property::StrictMonotone, Verdict::Fails) | (Property::Rotund, Verdict::Fails) => {
            let Some(w) = &cert.witness else { return false };
            verify_witness(phi, w, 1e-7).passed()
        }
        (Property::Rotund, Verdict::Holds) => {
            let (Some(lo), Some(hi)) = (cert.constant("alpha_lo"), cert.constant("alpha_hi")) else {
                return false;
            };
            alpha_function(phi, lo, 1e-13).hi() < 1.0
                && alpha_function(phi, hi, 1e-13).lo() > 1.0
                && phi.is_strictly_convex_on(0.0, hi)
        }
        _ => true,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::orlicz::parse_phi;

    fn shifted_square() -> OrliczFunction {
        parse_phi("piece start=0 slope=0 coeff=0 exp=1\npiece start=1 slope=0 coeff=1 exp=2").unwrap()
    }

    #[test]
    fn nontriviality() {
        let sq = OrliczFunction::power(1.0, 2.0).unwrap();
        let c = certify_nontrivial(&sq);
        assert!(c.holds());
        assert_eq!(c.constant("n1"), Some(1.0));
        let abs = OrliczFunction::power(1.0, 1.0).unwrap();
        assert_eq!(certify_nontrivial(&abs).verdict, Verdict::Fails);
        assert!(reverify(&abs, &certify_nontrivial(&abs)));
        let c = certify_nontrivial(&shifted_square());
        assert!(c.holds());
        assert_eq!(c.constant("sum_phi_1_over_n_hi"), Some(0.0));
        assert_eq!(n_k(&shifted_square(), 1.0), Some(1));
        assert_eq!(n_k(&shifted_square(), 2.5), Some(3));
        assert_eq!(n_k(&abs, 1.0), None);
    }

    #[test]
    fn chain() {
        let cube = OrliczFunction::power(1.0, 3.0).unwrap();
        let ch = check_sufficient_conditions(&cube);
        assert!(ch.index.holds());
        assert_eq!(ch.power_bound, Some((2.0, 1.0, f64::INFINITY)));
        assert!(ch.nontrivial.holds());
        assert!(reverify(&cube, &ch.certificate()));
        let abs = OrliczFunction::power(1.0, 1.0).unwrap();
        let ch = check_sufficient_conditions(&abs);
        assert_eq!(ch.index.verdict, Verdict::Fails);
        assert_eq!(ch.nontrivial.verdict, Verdict::Fails);
        let ch = check_sufficient_conditions(&shifted_square());
        assert_eq!(ch.index.verdict, Verdict::NotApplicable);
        assert!(ch.nontrivial.holds());
    }

    #[test]
    fn trivial_space_errors() {
        let abs = OrliczFunction::power(1.0, 1.0).unwrap();
        assert_eq!(certify_order_continuity(&abs), Err(Error::TrivialSpace));
        assert_eq!(certify_strict_monotonicity(&abs), Err(Error::TrivialSpace));
        assert_eq!(certify_uniform_monotonicity(&abs), Err(Error::TrivialSpace));
        assert_eq!(solve_alpha(&abs, 1e-6), Err(Error::TrivialSpace));
        assert_eq!(certify_rotundity(&abs, 1e-6), Err(Error::TrivialSpace));
    }

    #[test]
    fn shifted_square_verdicts() {
        let phi = shifted_square();
        assert_eq!(certify_order_continuity(&phi).unwrap().verdict, Verdict::Unknown);
        assert_eq!(certify_uniform_monotonicity(&phi).unwrap().verdict, Verdict::Unknown);
        let sm = certify_strict_monotonicity(&phi).unwrap();
        assert_eq!(sm.verdict, Verdict::Fails);
        let w = sm.witness.as_ref().unwrap();
        assert_eq!(w.x.head(), &[2.0]);
        assert_eq!(w.y.head(), &[2.0, 0.0, 1.0]);
        assert!(reverify(&phi, &sm));
        assert_eq!(certify_rotundity(&phi, 1e-8), Err(Error::Delta2Required));
    }

    #[test]
    fn alpha_for_shifted_square_exceeds_one() {
        let a = solve_alpha(&shifted_square(), 1e-8).unwrap();
        assert!(a.lo() > 1.0);
        // Only the first two terms are nonzero below 1.5: 2 (a-1)^2 + (2a/3 - 1)^2 = 1.
        let f = |a: f64| 2.0 * (a - 1.0).powi(2) + (2.0 * a / 3.0 - 1.0).max(0.0).powi(2);
        assert!(f(a.lo()) < 1.0 && f(a.hi()) > 1.0);
    }
}
