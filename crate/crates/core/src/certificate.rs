//! Verdict records for space properties and their text serialization.

use std::fmt;

use crate::interval::sig9;
use crate::witness::WitnessPair;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Property {
    Delta2AtZero,
    LowerIndex,
    Nontrivial,
    SufficientChain,
    OrderContinuous,
    StrictMonotone,
    UniformMonotone,
    Rotund,
}

impl Property {
    pub fn as_str(&self) -> &'static str {
        match self {
            Property::Delta2AtZero => "DELTA2_AT_ZERO",
            Property::LowerIndex => "LOWER_INDEX",
            Property::Nontrivial => "NONTRIVIAL",
            Property::SufficientChain => "SUFFICIENT_CHAIN",
            Property::OrderContinuous => "ORDER_CONTINUOUS",
            Property::StrictMonotone => "STRICT_MONOTONE",
            Property::UniformMonotone => "UNIFORM_MONOTONE",
            Property::Rotund => "ROTUND",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Holds,
    Fails,
    /// Only a one-directional implication is available, or the boundary
    /// could not be separated numerically.
    Unknown,
    NotApplicable,
}

impl Verdict {
    pub fn as_str(&self) -> &'static str {
        match self {
            Verdict::Holds => "HOLDS",
            Verdict::Fails => "FAILS",
            Verdict::Unknown => "UNKNOWN",
            Verdict::NotApplicable => "NOT_APPLICABLE",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Certificate {
    pub property: Property,
    pub verdict: Verdict,
    /// Named constants justifying the verdict, in emission order.
    pub constants: Vec<(String, f64)>,
    pub note: Option<String>,
    pub witness: Option<WitnessPair>,
}

impl Certificate {
    pub fn new(property: Property, verdict: Verdict) -> Self {
        Certificate { property, verdict, constants: Vec::new(), note: None, witness: None }
    }

    pub fn with(mut self, name: &str, value: f64) -> Self {
        self.constants.push((name.to_string(), value));
        self
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }

    pub fn with_witness(mut self, w: WitnessPair) -> Self {
        self.witness = Some(w);
        self
    }

    pub fn constant(&self, name: &str) -> Option<f64> {
        self.constants.iter().find(|(n, _)| n == name).map(|(_, v)| *v)
    }

    pub fn holds(&self) -> bool {
        self.verdict == Verdict::Holds
    }
}

impl fmt::Display for Certificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "property: {}", self.property.as_str())?;
        writeln!(f, "verdict: {}", self.verdict.as_str())?;
        let constants: Vec<String> =
            self.constants.iter().map(|(n, v)| format!(" {n}={}", sig9(*v))).collect();
        writeln!(f, "constants:{}", constants.concat())?;
        if let Some(note) = &self.note {
            writeln!(f, "note: {note}")?;
        }
        if let Some(w) = &self.witness {
            writeln!(f, "witness: {}", w.kind.as_str())?;
            writeln!(f, "witness.x: {}", w.x.to_inline())?;
            writeln!(f, "witness.y: {}", w.y.to_inline())?;
        }
        Ok(())
    }
}
