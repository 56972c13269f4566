//! Cesaro mean, the modular `rho(x) = sum_n phi(S_n / n)` with certified tail
//! enclosures, and the Luxemburg norm by certified bisection.

use crate::error::{Error, Result};
use crate::interval::{Accumulator, CertifiedValue};
use crate::orlicz::{pow, OrliczFunction};
use crate::root::{bisect, Side};
use crate::sequence::Sequence;

/// Coarsest and finest modular tolerances used while comparing against 1.
const EPS_START: f64 = 1e-3;
const EPS_FLOOR: f64 = 1e-14;
/// Hard cap on explicitly summed terms.
const MAX_TERMS: usize = 1 << 27;

pub fn cesaro_mean(x: &Sequence, n: usize) -> f64 {
    x.cesaro_mean(n)
}

/// Encloses `sum_{n >= N} phi(s_n / n)` for arbitrary `s_n` in `[s_lo, s_hi]`
/// by the integral test on the first piece `s0*u + a*u^p`.
///
/// Requires `s_hi / N` to lie in the first piece.
pub fn modular_tail_bound(phi: &OrliczFunction, s_lo: f64, s_hi: f64, n: usize) -> Result<CertifiedValue> {
    check_tail_precondition(phi, s_lo, s_hi, n)?;
    let first = phi.first_piece();
    if let Some(v) = degenerate_tail(phi, s_lo, s_hi) {
        return Ok(v);
    }
    let (a, p, nf) = (first.coeff, first.exp, n as f64);
    let lo = a * pow(s_lo, p) * nf.powf(1.0 - p) / (p - 1.0);
    let hi = a * pow(s_hi, p) * (nf.powf(-p) + nf.powf(1.0 - p) / (p - 1.0));
    Ok(CertifiedValue::new(lo, hi).widened())
}

fn check_tail_precondition(phi: &OrliczFunction, s_lo: f64, s_hi: f64, n: usize) -> Result<()> {
    if n == 0 || !(0.0 <= s_lo && s_lo <= s_hi) {
        return Err(Error::InvalidArgument(format!("tail bound needs N >= 1 and 0 <= S_lo <= S_hi, got N={n} [{s_lo}, {s_hi}]")));
    }
    let ratio = s_hi / n as f64;
    let first_end = phi.first_piece_end();
    if ratio > first_end {
        return Err(Error::TailPrecondition { ratio, first_end });
    }
    Ok(())
}

/// Tails that do not need the power-law estimate.
fn degenerate_tail(phi: &OrliczFunction, s_lo: f64, s_hi: f64) -> Option<CertifiedValue> {
    let first = phi.first_piece();
    if s_hi == 0.0 || (first.slope == 0.0 && first.coeff == 0.0) {
        return Some(CertifiedValue::zero());
    }
    if first.slope > 0.0 {
        // Terms dominate slope * s_lo / n: harmonic divergence.
        return Some(if s_lo > 0.0 {
            CertifiedValue::Infinite
        } else {
            CertifiedValue::Interval { lo: 0.0, hi: f64::INFINITY }
        });
    }
    None
}

/// Sharper enclosure of the same tail. `t -> t^-p` is convex, so the
/// trapezoid rule underestimates the sum and the midpoint rule overestimates
/// it:
/// `int_N^inf + g(N)/2 <= sum_{n>=N} g(n) <= int_{N-1/2}^inf`.
fn refined_tail_bound(phi: &OrliczFunction, s_lo: f64, s_hi: f64, n: usize) -> CertifiedValue {
    if let Some(v) = degenerate_tail(phi, s_lo, s_hi) {
        return v;
    }
    let first = phi.first_piece();
    let (a, p, nf) = (first.coeff, first.exp, n as f64);
    let lo = a * pow(s_lo, p) * (nf.powf(1.0 - p) / (p - 1.0) + 0.5 * nf.powf(-p));
    let hi = a * pow(s_hi, p) * (nf - 0.5).powf(1.0 - p) / (p - 1.0);
    CertifiedValue::new(lo, hi).widened()
}

/// Tail enclosure used by the modular: the intersection of the integral-test
/// bound with the trapezoid/midpoint bound.
fn tail_enclosure(phi: &OrliczFunction, s_lo: f64, s_hi: f64, n: usize) -> Result<CertifiedValue> {
    let coarse = modular_tail_bound(phi, s_lo, s_hi, n)?;
    Ok(match coarse {
        CertifiedValue::Interval { .. } => coarse.intersect(refined_tail_bound(phi, s_lo, s_hi, n)),
        inf => inf,
    })
}

/// Stopping rule for [`evaluate`].
#[derive(Debug, Clone, Copy)]
struct Stop {
    eps: f64,
    /// Stop as soon as the enclosure lies strictly on one side of this value.
    threshold: Option<f64>,
}

/// Relative error budget for the explicitly summed part: rounding in `S_n`
/// amplified by the exponent, plus the power evaluation itself.
fn head_rtol(phi: &OrliczFunction) -> f64 {
    let p_max = phi.pieces().iter().map(|p| p.exp).fold(1.0, f64::max);
    (8.0 + 4.0 * p_max) * f64::EPSILON
}

/// Encloses `rho(k * x)`.
fn evaluate(phi: &OrliczFunction, x: &Sequence, k: f64, stop: Stop) -> CertifiedValue {
    let s_inf = x.total() * k;
    if s_inf == 0.0 {
        return CertifiedValue::zero();
    }
    if phi.first_piece().slope > 0.0 {
        return CertifiedValue::Infinite;
    }
    let rtol = head_rtol(phi);
    let first_end = phi.first_piece_end();
    let n_min = if first_end.is_finite() { ((s_inf / first_end).ceil() as usize).max(1) } else { 1 };
    if n_min > MAX_TERMS {
        // Only reachable for absurd scalings; report an honest lower bound.
        let lo = phi.eval(x.partial_sum(1) * k) * (1.0 - rtol);
        return CertifiedValue::Interval { lo, hi: f64::INFINITY };
    }
    let mut next_check = n_min.max(4);
    let mut acc = Accumulator::default();
    let mut last = CertifiedValue::Interval { lo: 0.0, hi: f64::INFINITY };
    for (i, s) in x.partial_sums().enumerate() {
        let n = i + 1;
        let s = s * k;
        acc.add(phi.eval(s / n as f64));
        let sum = acc.value();
        if let Some(t) = stop.threshold {
            if sum * (1.0 - rtol) > t {
                return CertifiedValue::Interval { lo: sum * (1.0 - rtol), hi: f64::INFINITY }.widened();
            }
        }
        if n + 1 < next_check {
            continue;
        }
        next_check *= 2;
        // Every later partial sum lies in [S_n, S_inf].
        let Ok(tail) = tail_enclosure(phi, s, s_inf, n + 1) else {
            if n >= MAX_TERMS {
                break;
            }
            continue;
        };
        let head = CertifiedValue::new(sum * (1.0 - rtol), sum * (1.0 + rtol));
        let total = head + tail;
        last = total;
        // Once the tail is narrower than the rounding slack of the head,
        // further terms cannot shrink the enclosure.
        if total.width() <= stop.eps || tail.width() <= head.width() {
            return total;
        }
        if let Some(t) = stop.threshold {
            if total.hi() < t || total.lo() > t {
                return total;
            }
        }
        if n >= MAX_TERMS {
            break;
        }
    }
    last
}

/// Encloses `sum_{n >= from} phi(s / n)` to width `eps`.
pub(crate) fn harmonic_profile_sum(phi: &OrliczFunction, s: f64, from: usize, eps: f64) -> CertifiedValue {
    assert!(from >= 1);
    if s == 0.0 {
        return CertifiedValue::zero();
    }
    if phi.first_piece().slope > 0.0 {
        return CertifiedValue::Infinite;
    }
    let first_end = phi.first_piece_end();
    let n_min = if first_end.is_finite() { ((s / first_end).ceil() as usize).max(from) } else { from };
    let rtol = head_rtol(phi);
    let mut acc = Accumulator::default();
    let mut n = from;
    let mut next_check = n_min.max(from + 4);
    loop {
        if n >= next_check {
            next_check *= 2;
            if let Ok(tail) = tail_enclosure(phi, s, s, n) {
                let sum = acc.value();
                let head = CertifiedValue::new(sum * (1.0 - rtol), sum * (1.0 + rtol));
                let total = head + tail;
                if total.width() <= eps || tail.width() <= head.width() || n >= MAX_TERMS {
                    return total;
                }
            }
        }
        acc.add(phi.eval(s / n as f64));
        n += 1;
    }
}

/// Certified enclosure of `rho(x)` with width at most `eps`, or a proven `+∞`.
pub fn modular(phi: &OrliczFunction, x: &Sequence, eps: f64) -> CertifiedValue {
    assert!(eps > 0.0, "eps must be positive");
    evaluate(phi, x, 1.0, Stop { eps, threshold: None })
}

/// Encloses `rho(k * x)`.
pub fn modular_scaled(phi: &OrliczFunction, x: &Sequence, k: f64, eps: f64) -> CertifiedValue {
    evaluate(phi, x, k, Stop { eps, threshold: None })
}

/// Certified comparison of `rho(k * x)` with `target`, tightening the modular
/// tolerance by factors of ten down to [`EPS_FLOOR`] while the enclosure
/// straddles the target. `eps` carries the current tolerance between calls.
pub(crate) fn compare_scaled(
    phi: &OrliczFunction,
    x: &Sequence,
    k: f64,
    target: f64,
    eps: &mut f64,
) -> (Side, CertifiedValue) {
    loop {
        let v = evaluate(phi, x, k, Stop { eps: *eps, threshold: Some(target) });
        if v.lo() > target {
            return (Side::Above, v);
        }
        if v.hi() <= target {
            return (Side::Below, v);
        }
        if *eps <= EPS_FLOOR {
            return (Side::Straddle, v);
        }
        *eps = (*eps * 0.1).max(EPS_FLOOR);
    }
}

/// Certified Luxemburg norm `inf { l > 0 : rho(x / l) <= 1 }` as an interval
/// of width at most `tol`.
pub fn luxemburg_norm(phi: &OrliczFunction, x: &Sequence, tol: f64) -> Result<CertifiedValue> {
    if !(tol > 0.0) {
        return Err(Error::InvalidArgument(format!("tolerance must be positive, got {tol}")));
    }
    let s_inf = x.total();
    if s_inf == 0.0 {
        return Ok(CertifiedValue::zero());
    }
    if phi.first_piece().slope > 0.0 {
        return Err(Error::NoFiniteScaling);
    }
    let mut eps = EPS_START.min(tol);
    // rho(x / l) is nonincreasing in l: a probe is below the norm when the
    // modular exceeds 1.
    let mut probe = |l: f64| -> Side {
        match compare_scaled(phi, x, 1.0 / l, 1.0, &mut eps).0 {
            Side::Above => Side::Below,
            Side::Below => Side::Above,
            Side::Straddle => Side::Straddle,
        }
    };

    let mut hi = s_inf.max(1.0) * 2.0;
    let mut doublings = 0;
    loop {
        match probe(hi) {
            Side::Above => break,
            _ if doublings >= 1100 => return Err(Error::NoFiniteScaling),
            _ => {
                hi *= 2.0;
                doublings += 1;
            }
        }
    }
    let mut lo = 0.5 * hi;
    loop {
        match probe(lo) {
            Side::Below => break,
            Side::Above => {
                hi = lo;
                lo *= 0.5;
            }
            Side::Straddle => lo *= 0.5,
        }
        if lo < 1e-300 {
            lo = 0.0;
            break;
        }
    }
    let (lo, hi) = bisect(lo, hi, tol, |l| Ok(probe(l)))?;
    Ok(CertifiedValue::new(lo, hi))
}

/// Norm/modular comparison for one sequence.
#[derive(Debug, Clone, PartialEq)]
pub struct GapReport {
    pub rho: CertifiedValue,
    pub norm: CertifiedValue,
    /// `rho <= 1` implies `rho <= ||x|| <= 1` (vacuous when `rho > 1`).
    pub below_one: bool,
    /// `rho > 1` implies `1 <= ||x|| <= rho` (vacuous when `rho <= 1`).
    pub above_one: bool,
    /// `| ||x|| - 1 | <= | rho - 1 |`.
    pub distance: bool,
}

impl GapReport {
    pub fn holds(&self) -> bool {
        self.below_one && self.above_one && self.distance
    }
}

pub fn norm_modular_gap(phi: &OrliczFunction, x: &Sequence) -> Result<GapReport> {
    let rho = modular(phi, x, 1e-10);
    if rho.is_infinite() {
        return Err(Error::NoFiniteScaling);
    }
    let norm = luxemburg_norm(phi, x, 1e-9)?;
    let below_one = if rho.hi() <= 1.0 { rho.lo() <= norm.hi() && norm.lo() <= 1.0 } else { true };
    let above_one = if rho.lo() > 1.0 { 1.0 <= norm.hi() && norm.lo() <= rho.hi() } else { true };
    let distance = norm.min_dist(1.0) <= rho.max_dist(1.0);
    Ok(GapReport { rho, norm, below_one, above_one, distance })
}
