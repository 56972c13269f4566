//! Piecewise convex Orlicz functions.
//!
//! A function is a sorted list of pieces. On `[u0, u1)` a piece evaluates to
//! `v0 + s0*(u - u0) + a*(u - u0)^p`, where `v0` is fixed by continuity with the
//! previous piece (`v0 = 0` on the first). Only `u >= 0` is stored; public
//! evaluation takes `|u|`, so the function is even.

use std::fmt;

use crate::certificate::{Certificate, Property, Verdict};
use crate::error::{Error, Result};
use crate::interval::sig9;

/// Relative slack for the slope comparison at piece boundaries. Authored
/// specs such as a C1 join compute both slopes in floating point.
const SLOPE_RTOL: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhiPiece {
    pub start: f64,
    /// Right slope carried into the piece.
    pub slope: f64,
    pub coeff: f64,
    pub exp: f64,
}

impl PhiPiece {
    pub fn new(start: f64, slope: f64, coeff: f64, exp: f64) -> Self {
        PhiPiece { start, slope, coeff, exp }
    }

    pub fn is_affine(&self) -> bool {
        self.coeff == 0.0
    }

    fn increment(&self, d: f64) -> f64 {
        self.slope * d + if self.coeff == 0.0 { 0.0 } else { self.coeff * pow(d, self.exp) }
    }

    fn slope_at(&self, d: f64) -> f64 {
        if self.coeff == 0.0 {
            self.slope
        } else {
            self.slope + self.coeff * self.exp * pow(d, self.exp - 1.0)
        }
    }
}

pub(crate) fn pow(d: f64, p: f64) -> f64 {
    if p == 1.0 {
        d
    } else if p == 2.0 {
        d * d
    } else if p == 3.0 {
        d * d * d
    } else {
        d.powf(p)
    }
}

/// A closed structurally affine interval; `hi` is `+∞` when the last piece
/// is affine.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Sai {
    pub lo: f64,
    pub hi: f64,
}

impl Sai {
    pub fn width(&self) -> f64 {
        self.hi - self.lo
    }
}

impl fmt::Display for Sai {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", sig9(self.lo), sig9(self.hi))
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct OrliczFunction {
    pieces: Vec<PhiPiece>,
    /// Value at the left endpoint of each piece.
    values: Vec<f64>,
    a_phi: f64,
    sais: Vec<Sai>,
}

impl OrliczFunction {
    pub fn new(pieces: Vec<PhiPiece>) -> Result<Self> {
        validate(&pieces)?;
        let mut values = Vec::with_capacity(pieces.len());
        let mut v = 0.0;
        for (i, p) in pieces.iter().enumerate() {
            if i > 0 {
                let prev = &pieces[i - 1];
                v += prev.increment(p.start - prev.start);
            }
            values.push(v);
        }
        let sais = merge_sais(&pieces);
        let a_phi = match sais.first() {
            Some(s) if s.lo == 0.0 && pieces[0].slope == 0.0 && pieces[0].is_affine() => s.hi,
            _ => 0.0,
        };
        Ok(OrliczFunction { pieces, values, a_phi, sais })
    }

    /// `coeff * |u|^exp`.
    pub fn power(coeff: f64, exp: f64) -> Result<Self> {
        if exp == 1.0 {
            Self::new(vec![PhiPiece::new(0.0, coeff, 0.0, 1.0)])
        } else {
            Self::new(vec![PhiPiece::new(0.0, 0.0, coeff, exp)])
        }
    }

    pub fn pieces(&self) -> &[PhiPiece] {
        &self.pieces
    }

    pub fn first_piece(&self) -> &PhiPiece {
        &self.pieces[0]
    }

    /// Right endpoint of the first piece, `+∞` for a single-piece function.
    pub fn first_piece_end(&self) -> f64 {
        self.pieces.get(1).map_or(f64::INFINITY, |p| p.start)
    }

    fn locate(&self, u: f64) -> usize {
        self.pieces.partition_point(|p| p.start <= u).saturating_sub(1)
    }

    pub fn eval(&self, u: f64) -> f64 {
        let u = u.abs();
        let i = self.locate(u);
        let p = &self.pieces[i];
        self.values[i] + p.increment(u - p.start)
    }

    /// Right derivative at `|u|`.
    pub fn right_derivative(&self, u: f64) -> f64 {
        let u = u.abs();
        let i = self.locate(u);
        let p = &self.pieces[i];
        p.slope_at(u - p.start)
    }

    /// `sup { t >= 0 : phi(t) = 0 }`.
    pub fn a_phi(&self) -> f64 {
        self.a_phi
    }

    pub fn sai_list(&self) -> &[Sai] {
        &self.sais
    }

    /// True iff no structurally affine interval has interior meeting `(l, r)`.
    pub fn is_strictly_convex_on(&self, l: f64, r: f64) -> bool {
        !self.sais.iter().any(|s| s.lo < r && s.hi > l)
    }

    pub fn delta2_at_zero(&self) -> Certificate {
        let first = self.first_piece();
        if self.a_phi > 0.0 {
            let u = 0.75 * self.a_phi;
            return Certificate::new(Property::Delta2AtZero, Verdict::Fails)
                .with("u", u)
                .with("phi_u", self.eval(u))
                .with("phi_2u", self.eval(2.0 * u))
                .with_note("phi vanishes at u while phi(2u) > 0, so phi(2u)/phi(u) is unbounded");
        }
        let k = if first.coeff > 0.0 { 2f64.powf(first.exp) } else { 2.0 };
        // 2u must stay inside the first piece.
        let end = self.first_piece_end();
        let a = if end.is_finite() { 0.5 * end } else { 1.0 };
        Certificate::new(Property::Delta2AtZero, Verdict::Holds).with("K", k).with("a", a)
    }

    /// Lower index test `liminf t phi'(t)/phi(t) > 1` at zero, with the
    /// derived power bound `phi(u) <= A u^(1+eps)` on `[0, u0]`.
    pub fn lower_index_exceeds_one(&self) -> Certificate {
        let first = self.first_piece();
        if self.a_phi > 0.0 {
            return Certificate::new(Property::LowerIndex, Verdict::NotApplicable)
                .with_note("phi vanishes near zero");
        }
        if first.slope > 0.0 {
            return Certificate::new(Property::LowerIndex, Verdict::Fails)
                .with("index", 1.0)
                .with_note("linear term at the origin: t phi'(t)/phi(t) -> 1");
        }
        Certificate::new(Property::LowerIndex, Verdict::Holds)
            .with("index", first.exp)
            .with("eps", first.exp - 1.0)
            .with("A", first.coeff)
            .with("u0", self.first_piece_end())
    }

    /// Serializes back to the text format accepted by [`parse_phi`].
    pub fn to_spec_text(&self) -> String {
        self.pieces
            .iter()
            .map(|p| format!("piece start={} slope={} coeff={} exp={}\n", p.start, p.slope, p.coeff, p.exp))
            .collect()
    }
}

impl fmt::Display for OrliczFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_spec_text())
    }
}

fn validate(pieces: &[PhiPiece]) -> Result<()> {
    let invalid = |piece: usize, msg: &str| Err(Error::InvalidPhi { piece, msg: msg.to_string() });
    if pieces.is_empty() {
        return invalid(0, "empty piece list");
    }
    for (i, p) in pieces.iter().enumerate() {
        let idx = i + 1;
        if ![p.start, p.slope, p.coeff, p.exp].iter().all(|v| v.is_finite()) {
            return invalid(idx, "non-finite field");
        }
        if p.start < 0.0 || p.slope < 0.0 || p.coeff < 0.0 {
            return invalid(idx, "negative start, slope or coefficient");
        }
        if p.exp < 1.0 {
            return invalid(idx, "exponent p < 1");
        }
        if p.coeff > 0.0 && p.exp == 1.0 {
            return invalid(idx, "redundant p = 1 power term (fold it into the slope)");
        }
        if i == 0 {
            if p.start != 0.0 {
                return invalid(idx, "first piece must start at 0");
            }
        } else {
            let prev = &pieces[i - 1];
            if p.start <= prev.start {
                return invalid(idx, "non-monotone starts");
            }
            let incoming = prev.slope_at(p.start - prev.start);
            if incoming > p.slope + SLOPE_RTOL * p.slope.abs().max(1.0) {
                return invalid(idx, "convexity violated");
            }
        }
    }
    let last = pieces.last().unwrap();
    if last.slope == 0.0 && last.coeff == 0.0 {
        return invalid(pieces.len(), "last piece is constant, phi must tend to infinity");
    }
    Ok(())
}

fn merge_sais(pieces: &[PhiPiece]) -> Vec<Sai> {
    let mut out: Vec<(Sai, f64)> = Vec::new();
    for (i, p) in pieces.iter().enumerate() {
        if !p.is_affine() {
            continue;
        }
        let hi = pieces.get(i + 1).map_or(f64::INFINITY, |n| n.start);
        match out.last_mut() {
            // Adjacent collinear pieces: same stored slope, shared endpoint.
            Some((sai, slope)) if sai.hi == p.start && *slope == p.slope => sai.hi = hi,
            _ => out.push((Sai { lo: p.start, hi }, p.slope)),
        }
    }
    out.into_iter().map(|(s, _)| s).collect()
}

/// Parses the line-oriented piece format:
///
/// ```text
/// # comment
/// piece start=0 slope=0 coeff=1 exp=2
/// ```
pub fn parse_phi(text: &str) -> Result<OrliczFunction> {
    let mut pieces = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let syntax = |msg: String| Error::Syntax { line: lineno + 1, msg };
        let mut words = line.split_whitespace();
        if words.next() != Some("piece") {
            return Err(syntax(format!("expected `piece`, found `{line}`")));
        }
        let (mut start, mut slope, mut coeff, mut exp) = (None, None, None, None);
        for w in words {
            let (key, val) = w.split_once('=').ok_or_else(|| syntax(format!("expected key=value, found `{w}`")))?;
            let v: f64 = val.parse().map_err(|_| syntax(format!("bad number `{val}`")))?;
            let slot = match key {
                "start" => &mut start,
                "slope" => &mut slope,
                "coeff" => &mut coeff,
                "exp" => &mut exp,
                _ => return Err(syntax(format!("unknown key `{key}`"))),
            };
            if slot.replace(v).is_some() {
                return Err(syntax(format!("duplicate key `{key}`")));
            }
        }
        let need = |v: Option<f64>, k: &str| v.ok_or_else(|| syntax(format!("missing `{k}`")));
        pieces.push(PhiPiece::new(
            need(start, "start")?,
            need(slope, "slope")?,
            need(coeff, "coeff")?,
            need(exp, "exp")?,
        ));
    }
    OrliczFunction::new(pieces)
}
