//! Command-line front end. Exit status: 0 success, 1 certification or
//! property failure, 2 input error.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

use crate::certify::{certify_all, rotundity_witness, solve_alpha};
use crate::error::Error;
use crate::harness::{run_all, SuiteConfig};
use crate::modular::{luxemburg_norm, modular};
use crate::orlicz::{parse_phi, OrliczFunction};
use crate::sequence::{parse_sequence, Sequence};
use crate::witness::{sm_failure_witness, verify_witness};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

const DEFAULT_TOL: f64 = 1e-8;
const DEFAULT_TRIALS: usize = 200;
const DEFAULT_SEED: u64 = 0;

#[derive(Debug, Parser)]
#[command(name = "ces-orlicz", version, about = "Certified computations in Cesaro-Orlicz sequence spaces")]
struct Cli {
    /// Write the result to this file instead of standard output.
    #[arg(short, long, global = true)]
    output: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Validate phi and print a_phi, affine intervals, Delta2(0) and the lower index.
    PhiCheck { phi: PathBuf },
    /// Print all space-level certificates.
    Certify {
        phi: PathBuf,
        #[arg(long, default_value_t = DEFAULT_TOL, value_parser = positive)]
        tol: f64,
    },
    /// Certified Luxemburg norm of a sequence.
    Norm {
        phi: PathBuf,
        x: PathBuf,
        #[arg(long, default_value_t = DEFAULT_TOL, value_parser = positive)]
        tol: f64,
    },
    /// Certified modular of a sequence.
    Modular {
        phi: PathBuf,
        x: PathBuf,
        #[arg(long, default_value_t = DEFAULT_TOL, value_parser = positive)]
        tol: f64,
    },
    /// Root of 2 phi(a) + sum_{i>=3} phi(2a/i) = 1.
    Alpha {
        phi: PathBuf,
        #[arg(long, default_value_t = DEFAULT_TOL, value_parser = positive)]
        tol: f64,
    },
    /// Build and verify a counterexample pair.
    Witness {
        phi: PathBuf,
        #[arg(long, value_enum)]
        kind: Kind,
        #[arg(long, default_value_t = DEFAULT_TOL, value_parser = positive)]
        tol: f64,
    },
    /// Run all randomized property suites.
    Suite {
        phi: PathBuf,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[arg(long, default_value_t = DEFAULT_TRIALS)]
        trials: usize,
        #[arg(long, default_value_t = DEFAULT_TOL, value_parser = positive)]
        tol: f64,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Kind {
    Sm,
    Rotund,
}

fn positive(s: &str) -> Result<f64, String> {
    match s.parse::<f64>() {
        Ok(v) if v > 0.0 && v.is_finite() => Ok(v),
        Ok(v) => Err(format!("tolerance must be positive, got {v}")),
        Err(e) => Err(e.to_string()),
    }
}

/// Outcome of a subcommand: text for stdout, exit status, optional diagnostic.
struct Outcome {
    text: String,
    status: i32,
    diagnostic: Option<String>,
}

impl Outcome {
    fn ok(text: String) -> Self {
        Outcome { text, status: EXIT_OK, diagnostic: None }
    }

    fn error(e: &Error) -> Self {
        let status = if e.is_input_error() { EXIT_INPUT } else { EXIT_FAILURE };
        Outcome { text: String::new(), status, diagnostic: Some(format!("error: {}: {e}", e.code())) }
    }
}

fn read(path: &Path) -> Result<String, Outcome> {
    std::fs::read_to_string(path).map_err(|e| Outcome {
        text: String::new(),
        status: EXIT_INPUT,
        diagnostic: Some(format!("error: cannot read {}: {e}", path.display())),
    })
}

fn load_phi(path: &Path) -> Result<OrliczFunction, Outcome> {
    parse_phi(&read(path)?).map_err(|e| Outcome::error(&e))
}

fn load_sequence(path: &Path) -> Result<Sequence, Outcome> {
    parse_sequence(&read(path)?).map_err(|e| Outcome::error(&e))
}

fn execute(cmd: Command) -> Result<Outcome, Outcome> {
    let err = |e: Error| Outcome::error(&e);
    Ok(match cmd {
        Command::PhiCheck { phi } => {
            let phi = load_phi(&phi)?;
            let mut out = String::new();
            writeln!(out, "pieces: {}", phi.pieces().len()).unwrap();
            writeln!(out, "a_phi: {}", crate::interval::sig9(phi.a_phi())).unwrap();
            if phi.sai_list().is_empty() {
                writeln!(out, "sai: none").unwrap();
            }
            for s in phi.sai_list() {
                writeln!(out, "sai: {s}").unwrap();
            }
            writeln!(out).unwrap();
            writeln!(out, "{}", phi.delta2_at_zero()).unwrap();
            write!(out, "{}", phi.lower_index_exceeds_one()).unwrap();
            Outcome::ok(out)
        }
        Command::Certify { phi, tol } => {
            let phi = load_phi(&phi)?;
            let mut out = String::new();
            let mut status = EXIT_OK;
            for (i, (prop, res)) in certify_all(&phi, tol).into_iter().enumerate() {
                if i > 0 {
                    writeln!(out).unwrap();
                }
                match res {
                    Ok(c) => write!(out, "{c}").unwrap(),
                    Err(e) => {
                        writeln!(out, "property: {}", prop.as_str()).unwrap();
                        writeln!(out, "error: {}", e.code()).unwrap();
                        if !matches!(e, Error::TrivialSpace | Error::Delta2Required | Error::NotApplicable(_)) {
                            status = EXIT_FAILURE;
                        }
                    }
                }
            }
            Outcome { text: out, status, diagnostic: None }
        }
        Command::Norm { phi, x, tol } => {
            let (phi, x) = (load_phi(&phi)?, load_sequence(&x)?);
            Outcome::ok(format!("norm: {}\n", luxemburg_norm(&phi, &x, tol).map_err(err)?))
        }
        Command::Modular { phi, x, tol } => {
            let (phi, x) = (load_phi(&phi)?, load_sequence(&x)?);
            Outcome::ok(format!("modular: {}\n", modular(&phi, &x, tol)))
        }
        Command::Alpha { phi, tol } => {
            let phi = load_phi(&phi)?;
            Outcome::ok(format!("alpha: {}\n", solve_alpha(&phi, tol).map_err(err)?))
        }
        Command::Witness { phi, kind, tol } => {
            let phi = load_phi(&phi)?;
            let w = match kind {
                Kind::Sm => sm_failure_witness(&phi, tol).map_err(err)?,
                Kind::Rotund => rotundity_witness(&phi, tol).map_err(err)?,
            };
            let report = verify_witness(&phi, &w, tol);
            if report.passed() {
                Outcome::ok(w.to_string())
            } else {
                let failed = report.entries.iter().find(|e| !e.passed).map_or("", |e| e.name.as_str());
                Outcome {
                    text: w.to_string(),
                    status: EXIT_FAILURE,
                    diagnostic: Some(format!("error: witness verification failed: {failed}")),
                }
            }
        }
        Command::Suite { phi, seed, trials, tol } => {
            let phi = load_phi(&phi)?;
            let cfg = SuiteConfig::new(seed, trials, tol, vec![phi]).map_err(err)?;
            let report = run_all(&cfg);
            let status = if report.passed() { EXIT_OK } else { EXIT_FAILURE };
            Outcome { text: report.to_string(), status, diagnostic: None }
        }
    })
}

/// Runs the command line `args` (including the program name), writing the
/// result to `out` and diagnostics to `err`. Returns the exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(out, "{e}");
                return EXIT_OK;
            }
            let rendered = e.to_string();
            let line = rendered.lines().find(|l| !l.trim().is_empty()).unwrap_or("error: invalid arguments");
            let _ = writeln!(err, "{}", line.trim());
            return EXIT_INPUT;
        }
    };
    let outcome = execute(cli.command).unwrap_or_else(|o| o);
    if let Some(d) = &outcome.diagnostic {
        let _ = writeln!(err, "{d}");
    }
    if !outcome.text.is_empty() {
        match &cli.output {
            Some(path) => {
                if let Err(e) = std::fs::write(path, &outcome.text) {
                    let _ = writeln!(err, "error: cannot write {}: {e}", path.display());
                    return EXIT_INPUT;
                }
            }
            None => {
                let _ = out.write_all(outcome.text.as_bytes());
            }
        }
    }
    outcome.status
}
