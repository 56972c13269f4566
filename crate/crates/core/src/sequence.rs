//! Real sequences with finite support plus an optional geometric tail.

use std::fmt;

use crate::error::{Error, Result};
use crate::interval::Accumulator;

/// `x(i) = c * gamma^(i - m)` for every `i > m`, where `m` is the head length.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GeometricTail {
    pub c: f64,
    pub gamma: f64,
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct Sequence {
    head: Vec<f64>,
    tail: Option<GeometricTail>,
    /// `prefix[k]` is the sum of `|x(i)|` for `i <= k`.
    prefix: Vec<f64>,
}

impl Sequence {
    pub fn new(head: Vec<f64>, tail: Option<GeometricTail>) -> Result<Self> {
        if head.iter().any(|v| !v.is_finite()) {
            return Err(Error::InvalidSequence("non-finite head entry".into()));
        }
        if let Some(t) = tail {
            if !t.c.is_finite() || !(t.gamma > 0.0 && t.gamma < 1.0) {
                return Err(Error::InvalidSequence(format!(
                    "tail needs finite c and 0 < gamma < 1, got c={} gamma={}",
                    t.c, t.gamma
                )));
            }
        }
        let tail = tail.filter(|t| t.c != 0.0);
        let mut prefix = Vec::with_capacity(head.len() + 1);
        let mut acc = Accumulator::default();
        prefix.push(0.0);
        for v in &head {
            acc.add(v.abs());
            prefix.push(acc.value());
        }
        Ok(Sequence { head, tail, prefix })
    }

    pub fn finite(head: Vec<f64>) -> Result<Self> {
        Self::new(head, None)
    }

    pub fn zero() -> Self {
        Self::finite(Vec::new()).unwrap()
    }

    /// The unit vector `e_n` (1-based).
    pub fn unit(n: usize) -> Self {
        assert!(n >= 1);
        let mut head = vec![0.0; n];
        head[n - 1] = 1.0;
        Self::finite(head).unwrap()
    }

    pub fn head(&self) -> &[f64] {
        &self.head
    }

    pub fn tail(&self) -> Option<GeometricTail> {
        self.tail
    }

    pub fn is_zero(&self) -> bool {
        self.total() == 0.0
    }

    /// `x(i)`, 1-based.
    pub fn get(&self, i: usize) -> f64 {
        assert!(i >= 1);
        let m = self.head.len();
        if i <= m {
            self.head[i - 1]
        } else {
            self.tail.map_or(0.0, |t| t.c * t.gamma.powi((i - m) as i32))
        }
    }

    /// Index of the last nonzero coordinate, `None` for an infinite tail.
    pub fn support_end(&self) -> Option<usize> {
        if self.tail.is_some() {
            return None;
        }
        Some(self.head.iter().rposition(|v| *v != 0.0).map_or(0, |i| i + 1))
    }

    /// `S_inf`, the sum of all `|x(i)|`.
    pub fn total(&self) -> f64 {
        let head = *self.prefix.last().unwrap();
        match self.tail {
            Some(t) => head + t.c.abs() * t.gamma / (1.0 - t.gamma),
            None => head,
        }
    }

    /// `S_n`, the sum of `|x(i)|` for `i <= n`.
    pub fn partial_sum(&self, n: usize) -> f64 {
        let m = self.head.len();
        if n <= m {
            return self.prefix[n];
        }
        let head = self.prefix[m];
        match self.tail {
            Some(t) => {
                let k = (n - m) as i32;
                let s = head + t.c.abs() * t.gamma * (1.0 - t.gamma.powi(k)) / (1.0 - t.gamma);
                s.min(self.total())
            }
            None => head,
        }
    }

    /// Streams `S_1, S_2, ...` without re-evaluating powers.
    pub fn partial_sums(&self) -> PartialSums<'_> {
        PartialSums { seq: self, n: 0, acc: Accumulator::default(), tail_term: 0.0, cap: self.total() }
    }

    /// Arithmetic mean `sigma x(n) = S_n / n`.
    pub fn cesaro_mean(&self, n: usize) -> f64 {
        assert!(n >= 1, "cesaro mean is defined for n >= 1");
        self.partial_sum(n) / n as f64
    }

    pub fn scaled(&self, k: f64) -> Sequence {
        let head = self.head.iter().map(|v| v * k).collect();
        let tail = self.tail.map(|t| GeometricTail { c: t.c * k, gamma: t.gamma });
        Sequence::new(head, tail).expect("scaling keeps a valid sequence")
    }

    /// Keeps the first `k` coordinates and zeroes the rest.
    pub fn truncated(&self, k: usize) -> Sequence {
        let head = (1..=k).map(|i| self.get(i)).collect();
        Sequence::finite(head).unwrap()
    }

    /// `(0, ..., 0, x(n+1), x(n+2), ...)`.
    pub fn tail_after(&self, n: usize) -> Sequence {
        let m = self.head.len();
        if n < m {
            let mut head = self.head.clone();
            head[..n].iter_mut().for_each(|v| *v = 0.0);
            Sequence::new(head, self.tail).unwrap()
        } else {
            let tail = self.tail.map(|t| GeometricTail { c: t.c * t.gamma.powi((n - m) as i32), gamma: t.gamma });
            Sequence::new(vec![0.0; n], tail).unwrap()
        }
    }

    /// Head padded to length `len` by unrolling the tail.
    fn extended(&self, len: usize) -> Sequence {
        let m = self.head.len();
        if len <= m {
            return self.clone();
        }
        let head = (1..=len).map(|i| self.get(i)).collect();
        let tail = self.tail.map(|t| GeometricTail { c: t.c * t.gamma.powi((len - m) as i32), gamma: t.gamma });
        Sequence::new(head, tail).unwrap()
    }

    /// Coordinatewise `a*x + b*y`. Fails when both sequences carry tails with
    /// different ratios, since the result would leave the representable class.
    pub fn combine(&self, a: f64, other: &Sequence, b: f64) -> Result<Sequence> {
        let len = self.head.len().max(other.head.len());
        let (x, y) = (self.extended(len), other.extended(len));
        let head = x.head.iter().zip(&y.head).map(|(u, v)| a * u + b * v).collect();
        let tail = match (x.tail, y.tail) {
            (None, None) => None,
            (Some(t), None) => Some(GeometricTail { c: a * t.c, gamma: t.gamma }),
            (None, Some(t)) => Some(GeometricTail { c: b * t.c, gamma: t.gamma }),
            (Some(s), Some(t)) if s.gamma == t.gamma => Some(GeometricTail { c: a * s.c + b * t.c, gamma: s.gamma }),
            (Some(s), Some(t)) => {
                return Err(Error::InvalidSequence(format!(
                    "tails with ratios {} and {} do not combine",
                    s.gamma, t.gamma
                )))
            }
        };
        Sequence::new(head, tail)
    }

    /// Single-line rendering used inside certificates: `head 1 2; tail c=1 gamma=0.5`.
    pub fn to_inline(&self) -> String {
        self.to_string().trim_end().replace('\n', "; ")
    }
}

impl fmt::Display for Sequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("head")?;
        for v in &self.head {
            write!(f, " {v}")?;
        }
        writeln!(f)?;
        if let Some(t) = self.tail {
            writeln!(f, "tail c={} gamma={}", t.c, t.gamma)?;
        }
        Ok(())
    }
}

pub struct PartialSums<'a> {
    seq: &'a Sequence,
    n: usize,
    acc: Accumulator,
    tail_term: f64,
    cap: f64,
}

impl Iterator for PartialSums<'_> {
    type Item = f64;

    fn next(&mut self) -> Option<f64> {
        self.n += 1;
        let m = self.seq.head.len();
        if self.n <= m {
            return Some(self.seq.prefix[self.n]);
        }
        let Some(t) = self.seq.tail else {
            return Some(self.seq.prefix[m]);
        };
        if self.n == m + 1 {
            self.acc.add(self.seq.prefix[m]);
            self.tail_term = t.c.abs() * t.gamma;
        } else {
            self.tail_term *= t.gamma;
        }
        self.acc.add(self.tail_term);
        Some(self.acc.value().min(self.cap))
    }
}

/// Parses `head <real> ...` with an optional `tail c=<real> gamma=<real>` line.
pub fn parse_sequence(text: &str) -> Result<Sequence> {
    let mut head = None;
    let mut tail = None;
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let syntax = |msg: String| Error::Syntax { line: lineno + 1, msg };
        let mut words = line.split_whitespace();
        match words.next() {
            Some("head") if head.is_none() && tail.is_none() => {
                let vals: std::result::Result<Vec<f64>, _> = words.map(str::parse::<f64>).collect();
                head = Some(vals.map_err(|e| syntax(format!("bad head entry: {e}")))?);
            }
            Some("tail") if head.is_some() && tail.is_none() => {
                let (mut c, mut gamma) = (None, None);
                for w in words {
                    let (k, v) = w.split_once('=').ok_or_else(|| syntax(format!("expected key=value, found `{w}`")))?;
                    let v: f64 = v.parse().map_err(|_| syntax(format!("bad number `{v}`")))?;
                    match k {
                        "c" => c = Some(v),
                        "gamma" => gamma = Some(v),
                        _ => return Err(syntax(format!("unknown key `{k}`"))),
                    }
                }
                match (c, gamma) {
                    (Some(c), Some(gamma)) => tail = Some(GeometricTail { c, gamma }),
                    _ => return Err(syntax("tail needs c= and gamma=".into())),
                }
            }
            Some(w) => return Err(syntax(format!("unexpected `{w}`"))),
            None => unreachable!(),
        }
    }
    let head = head.ok_or(Error::Syntax { line: 0, msg: "missing `head` line".into() })?;
    Sequence::new(head, tail)
}
