use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;

use crate::catalog::ProblemSpec;
use crate::error::Error;

/// Route used to evaluate `Φ(ξ)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    Residue,
    RealIntegral,
    Circle,
    Series,
    MorseRay,
}

impl Method {
    pub const ALL: [Method; 5] = [Method::Residue, Method::RealIntegral, Method::Circle, Method::Series, Method::MorseRay];

    pub fn name(self) -> &'static str {
        match self {
            Method::Residue => "residue",
            Method::RealIntegral => "real",
            Method::Circle => "circle",
            Method::Series => "series",
            Method::MorseRay => "morse",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        Method::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| Error::InvalidParameter(format!("unknown method '{s}'")))
    }
}

/// A value of `Φ` with a flag for regimes where double precision is known to fail.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Estimate {
    pub value: Complex64,
    pub precision_loss: bool,
}

impl Estimate {
    pub fn exact(value: Complex64) -> Self {
        Self { value, precision_loss: false }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridEntry {
    pub coordinate: f64,
    pub xi: f64,
    pub phi: Complex64,
    pub psi: Complex64,
}

/// Samples of one unnormalized wavefunction, sorted by coordinate.
#[derive(Debug, Clone, PartialEq)]
pub struct WavefunctionGrid {
    pub entries: Vec<GridEntry>,
    pub method: Method,
    pub problem: ProblemSpec,
    pub energy: f64,
    /// Angular factor left symbolic, e.g. `e^{imφ}, m=2`.
    pub angular: Option<String>,
    /// Indices of samples evaluated in a regime known to lose precision.
    pub precision_warnings: Vec<usize>,
}
