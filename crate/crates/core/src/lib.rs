//! Certified computations in Cesaro-Orlicz sequence spaces `ces_phi`.
//!
//! An [`OrliczFunction`] is given piecewise. The modular
//! `rho(x) = sum_n phi(|x(1)| + .. + |x(n)|) / n)` and the Luxemburg norm are
//! returned as [`CertifiedValue`] enclosures. On top of these sit certified
//! verdicts for structural properties of the space ([`certify`]), explicit
//! counterexample pairs ([`witness`]) and randomized property suites
//! ([`harness`]).

pub mod certificate;
pub mod certify;
pub mod cli;
pub mod error;
pub mod harness;
pub mod interval;
pub mod modular;
pub mod orlicz;
mod root;
pub mod sequence;
pub mod witness;

pub use certificate::{Certificate, Property, Verdict};
pub use certify::{certify_all, certify_rotundity, solve_alpha};
pub use error::{Error, Result};
pub use harness::{HarnessReport, SuiteConfig, SuiteReport};
pub use interval::CertifiedValue;
pub use modular::{luxemburg_norm, modular, modular_tail_bound};
pub use orlicz::{parse_phi, OrliczFunction, PhiPiece, Sai};
pub use sequence::{parse_sequence, GeometricTail, Sequence};
pub use witness::{parse_witness, verify_witness, WitnessKind, WitnessPair};
