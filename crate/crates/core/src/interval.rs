//! Certified enclosures of real quantities.
//!
//! Every bound produced by this crate is computed in double precision and then
//! pushed outward by a fixed number of ulps, so an enclosure stays valid even
//! though the arithmetic is not directed-rounded.

use std::fmt;

/// Number of ulps every certified bound is widened by.
pub const SLACK_ULPS: u32 = 4;

/// An enclosure `[lo, hi]` of a real quantity, or a proven `+∞`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum CertifiedValue {
    Interval { lo: f64, hi: f64 },
    Infinite,
}

impl CertifiedValue {
    pub fn new(lo: f64, hi: f64) -> Self {
        debug_assert!(lo <= hi, "inverted enclosure [{lo}, {hi}]");
        CertifiedValue::Interval { lo, hi }
    }

    pub fn exact(v: f64) -> Self {
        CertifiedValue::Interval { lo: v, hi: v }
    }

    pub fn zero() -> Self {
        Self::exact(0.0)
    }

    /// Widens both bounds outward by [`SLACK_ULPS`] ulps. An exact zero
    /// bound stays put: it only arises from sums of exact zeros.
    pub fn widened(self) -> Self {
        let widen = |v: f64, step: fn(f64, u32) -> f64| if v == 0.0 { v } else { step(v, SLACK_ULPS) };
        match self {
            CertifiedValue::Interval { lo, hi } => CertifiedValue::Interval {
                lo: widen(lo, step_down),
                hi: widen(hi, step_up),
            },
            inf => inf,
        }
    }

    pub fn is_infinite(&self) -> bool {
        matches!(self, CertifiedValue::Infinite)
    }

    /// Lower bound; `+∞` for a proven divergence.
    pub fn lo(&self) -> f64 {
        match *self {
            CertifiedValue::Interval { lo, .. } => lo,
            CertifiedValue::Infinite => f64::INFINITY,
        }
    }

    pub fn hi(&self) -> f64 {
        match *self {
            CertifiedValue::Interval { hi, .. } => hi,
            CertifiedValue::Infinite => f64::INFINITY,
        }
    }

    pub fn width(&self) -> f64 {
        match *self {
            CertifiedValue::Interval { lo, hi } => hi - lo,
            CertifiedValue::Infinite => f64::INFINITY,
        }
    }

    pub fn mid(&self) -> f64 {
        match *self {
            CertifiedValue::Interval { lo, hi } => 0.5 * (lo + hi),
            CertifiedValue::Infinite => f64::INFINITY,
        }
    }

    pub fn contains(&self, v: f64) -> bool {
        match *self {
            CertifiedValue::Interval { lo, hi } => lo <= v && v <= hi,
            CertifiedValue::Infinite => v == f64::INFINITY,
        }
    }

    /// Largest possible distance between the enclosed quantity and `v`.
    pub fn max_dist(&self, v: f64) -> f64 {
        (self.hi() - v).abs().max((v - self.lo()).abs())
    }

    /// Smallest possible distance between the enclosed quantity and `v`.
    pub fn min_dist(&self, v: f64) -> f64 {
        if self.contains(v) {
            0.0
        } else if v < self.lo() {
            self.lo() - v
        } else {
            v - self.hi()
        }
    }

    /// Intersection of two enclosures of the same quantity.
    pub fn intersect(self, other: Self) -> Self {
        match (self, other) {
            (CertifiedValue::Infinite, _) | (_, CertifiedValue::Infinite) => CertifiedValue::Infinite,
            (
                CertifiedValue::Interval { lo: a, hi: b },
                CertifiedValue::Interval { lo: c, hi: d },
            ) => {
                let lo = a.max(c);
                let hi = b.min(d);
                debug_assert!(lo <= hi, "disjoint enclosures [{a}, {b}] and [{c}, {d}]");
                CertifiedValue::Interval { lo, hi: hi.max(lo) }
            }
        }
    }

    pub fn scale(self, k: f64) -> Self {
        debug_assert!(k >= 0.0);
        match self {
            CertifiedValue::Interval { lo, hi } => CertifiedValue::Interval { lo: lo * k, hi: hi * k }.widened(),
            inf => inf,
        }
    }
}

impl std::ops::Add for CertifiedValue {
    type Output = CertifiedValue;

    fn add(self, rhs: Self) -> Self {
        match (self, rhs) {
            (
                CertifiedValue::Interval { lo: a, hi: b },
                CertifiedValue::Interval { lo: c, hi: d },
            ) => CertifiedValue::Interval { lo: a + c, hi: b + d }.widened(),
            _ => CertifiedValue::Infinite,
        }
    }
}

impl fmt::Display for CertifiedValue {
    /// Nine significant digits, `[lo, hi]` or `inf`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            CertifiedValue::Interval { lo, hi } => write!(f, "[{}, {}]", sig9(lo), sig9(hi)),
            CertifiedValue::Infinite => f.write_str("inf"),
        }
    }
}

/// Formats a float with nine significant digits.
pub fn sig9(v: f64) -> String {
    if v == 0.0 {
        return "0".to_string();
    }
    if !v.is_finite() {
        return if v.is_nan() { "nan".into() } else if v > 0.0 { "inf".into() } else { "-inf".into() };
    }
    let exp = v.abs().log10().floor() as i32;
    if (-5..9).contains(&exp) {
        let decimals = (8 - exp).max(0) as usize;
        let s = format!("{v:.decimals$}");
        trim_zeros(&s)
    } else {
        let s = format!("{v:.8e}");
        match s.split_once('e') {
            Some((m, e)) => format!("{}e{}", trim_zeros(m), e),
            None => s,
        }
    }
}

fn trim_zeros(s: &str) -> String {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.').to_string()
    } else {
        s.to_string()
    }
}

/// Moves `v` up by `n` ulps.
pub fn step_up(v: f64, n: u32) -> f64 {
    (0..n).fold(v, |acc, _| next_up(acc))
}

pub fn step_down(v: f64, n: u32) -> f64 {
    (0..n).fold(v, |acc, _| -next_up(-acc))
}

fn next_up(v: f64) -> f64 {
    if v.is_nan() || v == f64::INFINITY {
        return v;
    }
    if v == 0.0 {
        return f64::from_bits(1);
    }
    let bits = v.to_bits();
    if v > 0.0 {
        f64::from_bits(bits + 1)
    } else {
        f64::from_bits(bits - 1)
    }
}

/// Compensated (Neumaier) running sum.
#[derive(Debug, Clone, Copy, Default)]
pub(crate) struct Accumulator {
    sum: f64,
    carry: f64,
}

impl Accumulator {
    pub(crate) fn add(&mut self, v: f64) {
        let t = self.sum + v;
        if self.sum.abs() >= v.abs() {
            self.carry += (self.sum - t) + v;
        } else {
            self.carry += (v - t) + self.sum;
        }
        self.sum = t;
    }

    pub(crate) fn value(&self) -> f64 {
        self.sum + self.carry
    }
}
