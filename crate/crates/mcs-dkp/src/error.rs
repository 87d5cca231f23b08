//! Error type shared across the crate.

use std::fmt;
use std::path::PathBuf;

#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// A mass parameter must be strictly positive.
    NonPositiveMass(f64),
    /// A tolerance must be strictly positive.
    NonPositiveTolerance(f64),
    /// Matrix factors of different dimensions were combined.
    DimensionMismatch { expected: usize, got: usize },
    /// An operation requiring an on-shell momentum got `p^2 + mu^2 != 0`.
    OffShell { p_squared: f64, mass: f64 },
    /// An empty factor list was passed to a polynomial evaluation.
    EmptyFactorList,
    /// A printed-matrix fixture file is missing.
    MissingFixture(PathBuf),
    /// A fixture file could not be parsed.
    FixtureParse { file: String, line: usize, msg: String },
    /// A wave function claimed to solve the field equations does not.
    NotASolution { residual: f64 },
    /// The Lorentz condition `p_mu A_mu = 0` is violated, so the dynamical
    /// reduction formula does not apply.
    LorentzCondition { residual: f64 },
    /// The seed vector lies in the kernel of the requested projector; pick a
    /// different seed.
    SeedInKernel,
    /// A dispersion scan needs at least a 2x2 grid.
    GridTooSmall(usize),
    /// Root bracketing failed during a scan.
    Bracketing(String),
    /// Writing scan output failed.
    Io(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NonPositiveMass(m) => write!(f, "mass must be positive, got {m}"),
            Error::NonPositiveTolerance(t) => write!(f, "tolerance must be positive, got {t}"),
            Error::DimensionMismatch { expected, got } => {
                write!(f, "dimension mismatch: expected {expected}, got {got}")
            }
            Error::OffShell { p_squared, mass } => write!(
                f,
                "momentum is off-shell: p^2 = {p_squared}, expected -mu^2 = {}",
                -mass * mass
            ),
            Error::EmptyFactorList => write!(f, "empty factor list"),
            Error::MissingFixture(p) => write!(f, "missing fixture file: {}", p.display()),
            Error::FixtureParse { file, line, msg } => {
                write!(f, "fixture {file} line {line}: {msg}")
            }
            Error::NotASolution { residual } => {
                write!(f, "input does not solve the field equations (residual {residual:e})")
            }
            Error::LorentzCondition { residual } => {
                write!(f, "Lorentz condition violated (residual {residual:e})")
            }
            Error::SeedInKernel => {
                write!(f, "seed vector lies in the projector kernel; choose a different seed")
            }
            Error::GridTooSmall(g) => write!(f, "grid must be at least 2, got {g}"),
            Error::Bracketing(msg) => write!(f, "root bracketing failed: {msg}"),
            Error::Io(msg) => write!(f, "io error: {msg}"),
        }
    }
}

impl std::error::Error for Error {}
