//! The thirteen cataloged problems: physical parameters to canonical form,
//! bound-state quantization, and assembly of `ψ` from `Φ`.
//!
//! Units: `ħ = 1`. Defaults are the natural units: `μ = ω = a₀ = 1`
//! for oscillator and Coulomb problems, and `μ = ½, a = 1` for the Morse
//! problems so that `ħ²a²/2μ = 1`.

use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::grid::{Estimate, GridEntry, Method, WavefunctionGrid};
use crate::laplace::{exponents, CanonicalOde, HermiteOde, LaplaceForm};

type C64 = Complex64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ProblemKind {
    Sho1DEven,
    Sho1DOdd,
    Sho2D,
    Sho3D,
    Coulomb2D,
    Coulomb3D,
    Morse,
    Sho1DHermite,
    Free2D,
    Free3D,
    Coulomb2DCont,
    Coulomb3DCont,
    MorseCont,
}

impl ProblemKind {
    pub const ALL: [ProblemKind; 13] = [
        ProblemKind::Sho1DEven,
        ProblemKind::Sho1DOdd,
        ProblemKind::Sho2D,
        ProblemKind::Sho3D,
        ProblemKind::Coulomb2D,
        ProblemKind::Coulomb3D,
        ProblemKind::Morse,
        ProblemKind::Sho1DHermite,
        ProblemKind::Free2D,
        ProblemKind::Free3D,
        ProblemKind::Coulomb2DCont,
        ProblemKind::Coulomb3DCont,
        ProblemKind::MorseCont,
    ];

    /// Bound kinds whose `Φ` is a Laguerre polynomial times an exponential.
    pub const LAGUERRE_BOUND: [ProblemKind; 7] = [
        ProblemKind::Sho1DEven,
        ProblemKind::Sho1DOdd,
        ProblemKind::Sho2D,
        ProblemKind::Sho3D,
        ProblemKind::Coulomb2D,
        ProblemKind::Coulomb3D,
        ProblemKind::Morse,
    ];

    pub const CONTINUUM_DOG_BONE: [ProblemKind; 4] =
        [ProblemKind::Free2D, ProblemKind::Free3D, ProblemKind::Coulomb2DCont, ProblemKind::Coulomb3DCont];

    pub fn name(self) -> &'static str {
        match self {
            ProblemKind::Sho1DEven => "sho1d_even",
            ProblemKind::Sho1DOdd => "sho1d_odd",
            ProblemKind::Sho2D => "sho2d",
            ProblemKind::Sho3D => "sho3d",
            ProblemKind::Coulomb2D => "coulomb2d",
            ProblemKind::Coulomb3D => "coulomb3d",
            ProblemKind::Morse => "morse",
            ProblemKind::Sho1DHermite => "sho1d_hermite",
            ProblemKind::Free2D => "free2d",
            ProblemKind::Free3D => "free3d",
            ProblemKind::Coulomb2DCont => "coulomb2d_cont",
            ProblemKind::Coulomb3DCont => "coulomb3d_cont",
            ProblemKind::MorseCont => "morse_cont",
        }
    }

    pub fn is_bound(self) -> bool {
        matches!(
            self,
            ProblemKind::Sho1DEven
                | ProblemKind::Sho1DOdd
                | ProblemKind::Sho2D
                | ProblemKind::Sho3D
                | ProblemKind::Coulomb2D
                | ProblemKind::Coulomb3D
                | ProblemKind::Morse
                | ProblemKind::Sho1DHermite
        )
    }

    fn is_oscillator(self) -> bool {
        matches!(
            self,
            ProblemKind::Sho1DEven
                | ProblemKind::Sho1DOdd
                | ProblemKind::Sho2D
                | ProblemKind::Sho3D
                | ProblemKind::Sho1DHermite
        )
    }

    fn is_morse(self) -> bool {
        matches!(self, ProblemKind::Morse | ProblemKind::MorseCont)
    }
}

impl fmt::Display for ProblemKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ProblemKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        ProblemKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::InvalidParameter(format!("unknown problem kind '{s}'")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ProblemSpec {
    pub kind: ProblemKind,
    pub mu: f64,
    pub omega: f64,
    pub a0: f64,
    pub morse_a: f64,
    pub morse_v0: f64,
    pub m: i32,
    pub l: u32,
}

impl ProblemSpec {
    pub fn new(kind: ProblemKind) -> Self {
        let mu = if kind.is_morse() { 0.5 } else { 1.0 };
        Self { kind, mu, omega: 1.0, a0: 1.0, morse_a: 1.0, morse_v0: 1.0, m: 0, l: 0 }
    }

    pub fn with_m(mut self, m: i32) -> Self {
        self.m = m;
        self
    }

    pub fn with_l(mut self, l: u32) -> Self {
        self.l = l;
        self
    }

    pub fn with_v0(mut self, v0: f64) -> Self {
        self.morse_v0 = v0;
        self
    }

    pub fn validate(&self) -> Result<()> {
        for (name, v) in [
            ("mu", self.mu),
            ("omega", self.omega),
            ("a0", self.a0),
            ("morse_a", self.morse_a),
            ("morse_v0", self.morse_v0),
        ] {
            if !(v > 0.0 && v.is_finite()) {
                return Err(Error::InvalidParameter(format!("{name} must be positive, got {v}")));
            }
        }
        Ok(())
    }

    fn abs_m(&self) -> u32 {
        self.m.unsigned_abs()
    }

    /// `d = √(2μV₀)/(aħ)`, the Morse depth parameter.
    pub fn morse_d(&self) -> f64 {
        (2.0 * self.mu * self.morse_v0).sqrt() / self.morse_a
    }

    /// Angular factor kept symbolic in the assembled wavefunction.
    pub fn angular_factor(&self) -> Option<String> {
        match self.kind {
            ProblemKind::Sho2D | ProblemKind::Coulomb2D | ProblemKind::Free2D | ProblemKind::Coulomb2DCont => {
                Some(format!("e^{{imφ}}, m={}", self.m))
            }
            ProblemKind::Sho3D | ProblemKind::Coulomb3D | ProblemKind::Free3D | ProblemKind::Coulomb3DCont => {
                Some(format!("Y_l^m(θ,φ), l={}", self.l))
            }
            _ => None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct QuantumNumbers {
    /// Principal index (from `|m|+1` or `l+1` for the Coulomb kinds, else from 0).
    pub n: u32,
    /// Laplace index `N = −α₋`.
    pub big_n: u32,
}

impl QuantumNumbers {
    /// Quantum numbers for principal index `n`, checked against the kind's range.
    pub fn for_n(spec: &ProblemSpec, n: u32) -> Result<Self> {
        let invalid = |why: String| Err(Error::InvalidQuantumNumbers(why));
        match spec.kind {
            ProblemKind::Coulomb2D => {
                let min = spec.abs_m() + 1;
                if n < min {
                    return invalid(format!("coulomb2d needs n >= |m|+1 = {min}, got {n}"));
                }
                Ok(Self { n, big_n: n - min })
            }
            ProblemKind::Coulomb3D => {
                if n <= spec.l {
                    return invalid(format!("coulomb3d needs n > l = {}, got {n}", spec.l));
                }
                Ok(Self { n, big_n: n - spec.l - 1 })
            }
            ProblemKind::Morse => {
                let d = spec.morse_d();
                if n as f64 >= d - 0.5 {
                    return invalid(format!("morse needs n < d - 1/2 = {}, got {n}", d - 0.5));
                }
                Ok(Self { n, big_n: n })
            }
            k if k.is_bound() => Ok(Self { n, big_n: n }),
            k => Err(Error::NotBoundProblem(k.name().to_string())),
        }
    }
}

/// A bound state by quantum numbers, or a continuum state by energy.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum State {
    Bound(QuantumNumbers),
    Continuum { energy: f64 },
}

/// `ξ` as a function of the physical coordinate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum CoordinateMap {
    /// `ξ = c·x²`
    Quadratic { scale: f64 },
    /// `ξ = c·x`
    Linear { scale: f64 },
    /// `ξ = c·e^{−a x}`
    Exponential { prefactor: f64, rate: f64 },
}

impl CoordinateMap {
    pub fn xi(&self, x: f64) -> f64 {
        match *self {
            CoordinateMap::Quadratic { scale } => scale * x * x,
            CoordinateMap::Linear { scale } => scale * x,
            CoordinateMap::Exponential { prefactor, rate } => prefactor * (-rate * x).exp(),
        }
    }
}

fn check_energy(spec: &ProblemSpec, energy: f64) -> Result<()> {
    let ok = match spec.kind {
        k if k.is_oscillator() => energy >= 0.0,
        ProblemKind::Coulomb2D | ProblemKind::Coulomb3D | ProblemKind::Morse => energy < 0.0,
        _ => energy > 0.0,
    };
    if ok && energy.is_finite() {
        Ok(())
    } else {
        Err(Error::RegimeMismatch { kind: spec.kind.name().to_string(), energy })
    }
}

/// Canonical `(β, δ, λ)` for every kind except `Sho1DHermite`.
pub fn canonicalize(spec: &ProblemSpec, energy: f64) -> Result<CanonicalOde> {
    match laplace_form(spec, energy)? {
        LaplaceForm::Laguerre(ode) => Ok(ode),
        LaplaceForm::Hermite(_) => Err(Error::InvalidParameter(
            "sho1d_hermite reduces to the Hermite equation, not the canonical form".to_string(),
        )),
    }
}

pub fn laplace_form(spec: &ProblemSpec, energy: f64) -> Result<LaplaceForm> {
    spec.validate()?;
    check_energy(spec, energy)?;
    let m = spec.abs_m() as f64;
    let l = spec.l as f64;
    let osc = energy / (2.0 * spec.omega);
    let ode = match spec.kind {
        ProblemKind::Sho1DEven => CanonicalOde::bound(0.5, osc, 0.5),
        ProblemKind::Sho1DOdd => CanonicalOde::bound(1.5, osc, 0.5),
        ProblemKind::Sho2D => CanonicalOde::bound(m + 1.0, osc, 0.5),
        ProblemKind::Sho3D => CanonicalOde::bound(l + 1.5, osc, 0.5),
        ProblemKind::Coulomb2D | ProblemKind::Coulomb3D => {
            let kappa = (-2.0 * spec.mu * energy).sqrt();
            let beta = if spec.kind == ProblemKind::Coulomb2D { 2.0 * m + 1.0 } else { 2.0 * l + 2.0 };
            CanonicalOde::bound(beta, 2.0 / (spec.a0 * kappa), 1.0)
        }
        ProblemKind::Morse => {
            let s = (-2.0 * spec.mu * energy).sqrt() / spec.morse_a;
            CanonicalOde::bound(2.0 * s + 1.0, spec.morse_d(), 0.5)
        }
        ProblemKind::Sho1DHermite => return Ok(LaplaceForm::Hermite(HermiteOde { alpha: 0.5 - energy / spec.omega })),
        ProblemKind::Free2D => CanonicalOde::continuum(2.0 * m + 1.0, 0.0),
        ProblemKind::Free3D => CanonicalOde::continuum(2.0 * l + 2.0, 0.0),
        ProblemKind::Coulomb2DCont | ProblemKind::Coulomb3DCont => {
            let k = (2.0 * spec.mu * energy).sqrt();
            let beta = if spec.kind == ProblemKind::Coulomb2DCont { 2.0 * m + 1.0 } else { 2.0 * l + 2.0 };
            CanonicalOde::continuum(beta, 2.0 / (spec.a0 * k))
        }
        ProblemKind::MorseCont => {
            let k = (2.0 * spec.mu * energy).sqrt() / spec.morse_a;
            CanonicalOde::morse_continuum(k, spec.morse_d())
        }
    };
    Ok(LaplaceForm::Laguerre(ode))
}

/// Closed-form bound energy for quantum numbers `qn`.
///
/// The Morse level is `−(a²ħ²/2μ)(d − n − ½)²`, which is what `α₋ = −n` gives
/// with `α₋ = s − d + ½`.
pub fn bound_energy(spec: &ProblemSpec, qn: &QuantumNumbers) -> Result<f64> {
    if !spec.kind.is_bound() {
        return Err(Error::NotBoundProblem(spec.kind.name().to_string()));
    }
    spec.validate()?;
    let checked = QuantumNumbers::for_n(spec, qn.n)?;
    if checked != *qn {
        return Err(Error::InvalidQuantumNumbers(format!("{qn:?} is inconsistent; expected {checked:?}")));
    }
    let n = qn.n as f64;
    let w = spec.omega;
    let m = spec.abs_m() as f64;
    let l = spec.l as f64;
    let rydberg = 1.0 / (2.0 * spec.mu * spec.a0 * spec.a0);
    Ok(match spec.kind {
        ProblemKind::Sho1DEven => w * (2.0 * n + 0.5),
        ProblemKind::Sho1DOdd => w * (2.0 * n + 1.5),
        ProblemKind::Sho2D => w * (2.0 * n + m + 1.0),
        ProblemKind::Sho3D => w * (2.0 * n + l + 1.5),
        ProblemKind::Coulomb2D => -rydberg / ((n - 0.5) * (n - 0.5)),
        ProblemKind::Coulomb3D => -rydberg / (n * n),
        ProblemKind::Morse => {
            let s = spec.morse_d() - n - 0.5;
            -spec.morse_a * spec.morse_a / (2.0 * spec.mu) * s * s
        }
        ProblemKind::Sho1DHermite => w * (n + 0.5),
        _ => unreachable!(),
    })
}

/// `N = −α₋(E)` when it is a nonnegative integer within 1e−9.
pub fn quantization_check(spec: &ProblemSpec, energy: f64) -> Result<Option<QuantumNumbers>> {
    if !spec.kind.is_bound() {
        return Err(Error::NotBoundProblem(spec.kind.name().to_string()));
    }
    let minus_alpha = match laplace_form(spec, energy)? {
        LaplaceForm::Laguerre(ode) => -exponents(&ode)?.alpha_minus.re,
        LaplaceForm::Hermite(h) => -h.alpha,
    };
    let big_n = minus_alpha.round();
    if big_n < 0.0 || (minus_alpha - big_n).abs() > 1e-9 {
        return Ok(None);
    }
    let big_n = big_n as u32;
    let n = match spec.kind {
        ProblemKind::Coulomb2D => big_n + spec.abs_m() + 1,
        ProblemKind::Coulomb3D => big_n + spec.l + 1,
        _ => big_n,
    };
    Ok(QuantumNumbers::for_n(spec, n).ok())
}

/// Energy of a state: closed form for bound states, as given otherwise.
pub fn state_energy(spec: &ProblemSpec, state: &State) -> Result<f64> {
    match state {
        State::Bound(qn) => bound_energy(spec, qn),
        State::Continuum { energy } => {
            if spec.kind.is_bound() {
                return Err(Error::RegimeMismatch { kind: spec.kind.name().to_string(), energy: *energy });
            }
            check_energy(spec, *energy)?;
            Ok(*energy)
        }
    }
}

pub fn coordinate_map(spec: &ProblemSpec, energy: f64) -> CoordinateMap {
    match spec.kind {
        ProblemKind::Sho1DEven | ProblemKind::Sho1DOdd | ProblemKind::Sho2D | ProblemKind::Sho3D => {
            CoordinateMap::Quadratic { scale: spec.mu * spec.omega }
        }
        ProblemKind::Coulomb2D | ProblemKind::Coulomb3D => {
            CoordinateMap::Linear { scale: (-2.0 * spec.mu * energy).sqrt() }
        }
        ProblemKind::Sho1DHermite => CoordinateMap::Linear { scale: (spec.mu * spec.omega).sqrt() },
        ProblemKind::Free2D | ProblemKind::Free3D | ProblemKind::Coulomb2DCont | ProblemKind::Coulomb3DCont => {
            CoordinateMap::Linear { scale: (2.0 * spec.mu * energy).sqrt() }
        }
        ProblemKind::Morse | ProblemKind::MorseCont => {
            CoordinateMap::Exponential { prefactor: 2.0 * spec.morse_d(), rate: spec.morse_a }
        }
    }
}

fn is_radial(kind: ProblemKind) -> bool {
    !matches!(
        kind,
        ProblemKind::Sho1DEven
            | ProblemKind::Sho1DOdd
            | ProblemKind::Sho1DHermite
            | ProblemKind::Morse
            | ProblemKind::MorseCont
    )
}

/// Factor multiplying `Φ(ξ)` in the wavefunction ansatz.
pub fn prefactor(spec: &ProblemSpec, energy: f64, coordinate: f64, xi: f64) -> C64 {
    let m = spec.abs_m() as i32;
    let l = spec.l as i32;
    match spec.kind {
        ProblemKind::Sho1DEven => C64::new(1.0, 0.0),
        ProblemKind::Sho1DOdd => C64::new(coordinate, 0.0),
        ProblemKind::Sho2D | ProblemKind::Coulomb2D | ProblemKind::Free2D | ProblemKind::Coulomb2DCont => {
            C64::new(coordinate.powi(m), 0.0)
        }
        ProblemKind::Sho3D | ProblemKind::Coulomb3D | ProblemKind::Free3D | ProblemKind::Coulomb3DCont => {
            C64::new(coordinate.powi(l), 0.0)
        }
        ProblemKind::Morse => {
            let s = (-2.0 * spec.mu * energy).sqrt() / spec.morse_a;
            C64::new(xi.powf(s), 0.0)
        }
        ProblemKind::Sho1DHermite => C64::new((-0.5 * xi * xi).exp(), 0.0),
        ProblemKind::MorseCont => {
            let k = (2.0 * spec.mu * energy).sqrt() / spec.morse_a;
            C64::from_polar(1.0, k * xi.ln())
        }
    }
}

/// `ψ(coordinate) = prefactor × Φ(ξ(coordinate))` on the given samples.
///
/// `phi` evaluates `Φ` at a value of `ξ`; samples are evaluated in parallel
/// and returned sorted by coordinate.
pub fn assemble_wavefunction<F>(
    spec: &ProblemSpec,
    state: &State,
    coordinates: &[f64],
    method: Method,
    phi: F,
) -> Result<WavefunctionGrid>
where
    F: Fn(f64) -> Result<Estimate> + Sync,
{
    let energy = state_energy(spec, state)?;
    let map = coordinate_map(spec, energy);
    let mut coords = coordinates.to_vec();
    if is_radial(spec.kind) {
        if let Some(&bad) = coords.iter().find(|&&c| c < 0.0) {
            return Err(Error::DomainError(bad));
        }
    }
    coords.sort_by(f64::total_cmp);
    let evaluated = coords
        .par_iter()
        .enumerate()
        .map(|(index, &x)| {
            let xi = map.xi(x);
            let est = phi(xi).map_err(|e| Error::PointFailure { index, source: Box::new(e) })?;
            let entry = GridEntry { coordinate: x, xi, phi: est.value, psi: prefactor(spec, energy, x, xi) * est.value };
            Ok((entry, est.precision_loss))
        })
        .collect::<Result<Vec<_>>>()?;
    let precision_warnings = evaluated.iter().enumerate().filter(|(_, e)| e.1).map(|(i, _)| i).collect();
    Ok(WavefunctionGrid {
        entries: evaluated.into_iter().map(|e| e.0).collect(),
        method,
        problem: *spec,
        energy,
        angular: spec.angular_factor(),
        precision_warnings,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn spec(kind: ProblemKind) -> ProblemSpec {
        ProblemSpec::new(kind)
    }

    fn qn(s: &ProblemSpec, n: u32) -> QuantumNumbers {
        QuantumNumbers::for_n(s, n).unwrap()
    }

    #[test]
    fn canonical_examples() {
        let ode = canonicalize(&spec(ProblemKind::Sho1DOdd), 1.5).unwrap();
        assert_eq!((ode.beta.re, ode.delta, ode.lambda.re), (1.5, 0.75, 0.5));

        for e in [0.3, 2.0] {
            let ode = canonicalize(&spec(ProblemKind::Free3D), e).unwrap();
            assert_eq!((ode.beta.re, ode.delta, ode.lambda), (2.0, 0.0, C64::i()));
        }

        // E = −ħ²/(2μa₀²) gives √(−2μE) = ħ/a₀ and δ = 2
        let ode = canonicalize(&spec(ProblemKind::Coulomb3D), -0.5).unwrap();
        assert!((ode.delta - 2.0).abs() < 1e-15);

        let ode = canonicalize(&spec(ProblemKind::Sho2D).with_m(-2), 3.0).unwrap();
        assert_eq!((ode.beta.re, ode.delta, ode.lambda.re), (3.0, 1.5, 0.5));

        let ode = canonicalize(&spec(ProblemKind::MorseCont), 1.0).unwrap();
        assert_eq!((ode.beta, ode.delta, ode.lambda.re), (C64::new(1.0, 2.0), 1.0, 0.5));
    }

    #[test]
    fn regime_mismatch() {
        assert!(matches!(canonicalize(&spec(ProblemKind::Coulomb3D), 0.5), Err(Error::RegimeMismatch { .. })));
        assert!(matches!(canonicalize(&spec(ProblemKind::Free2D), -1.0), Err(Error::RegimeMismatch { .. })));
        assert!(matches!(canonicalize(&spec(ProblemKind::Sho2D), -1.0), Err(Error::RegimeMismatch { .. })));
        assert!(canonicalize(&spec(ProblemKind::Sho1DHermite), 0.5).is_err());
    }

    #[test]
    fn energy_examples() {
        let s = spec(ProblemKind::Sho1DEven);
        assert_eq!(bound_energy(&s, &qn(&s, 0)).unwrap(), 0.5);
        let s = spec(ProblemKind::Coulomb3D);
        assert_eq!(bound_energy(&s, &qn(&s, 1)).unwrap(), -0.5);
        let s = spec(ProblemKind::Coulomb2D);
        assert_eq!(bound_energy(&s, &qn(&s, 1)).unwrap(), -2.0);
        // d = 1.5: the single level sits at −(1.5 − ½)² = −1
        let s = spec(ProblemKind::Morse).with_v0(2.25);
        assert!((s.morse_d() - 1.5).abs() < 1e-15);
        assert!((bound_energy(&s, &qn(&s, 0)).unwrap() + 1.0).abs() < 1e-15);
    }

    #[test]
    fn energy_errors() {
        let s = spec(ProblemKind::Free3D);
        assert!(matches!(bound_energy(&s, &QuantumNumbers { n: 0, big_n: 0 }), Err(Error::NotBoundProblem(_))));
        let s = spec(ProblemKind::Coulomb3D).with_l(2);
        assert!(matches!(QuantumNumbers::for_n(&s, 2), Err(Error::InvalidQuantumNumbers(_))));
        let s = spec(ProblemKind::Morse); // d = 1: only n = 0
        assert!(QuantumNumbers::for_n(&s, 0).is_ok());
        assert!(matches!(QuantumNumbers::for_n(&s, 1), Err(Error::InvalidQuantumNumbers(_))));
    }

    #[test]
    fn quantization_examples() {
        let s = spec(ProblemKind::Sho1DHermite);
        for n in 0..6 {
            assert_eq!(quantization_check(&s, n as f64 + 0.5).unwrap(), Some(QuantumNumbers { n, big_n: n }));
        }
        let s = spec(ProblemKind::Sho2D).with_m(2);
        assert_eq!(quantization_check(&s, 2.0 * 3.0 + 2.0 + 1.0).unwrap(), Some(QuantumNumbers { n: 3, big_n: 3 }));
        assert_eq!(quantization_check(&spec(ProblemKind::Sho1DEven), 1.3).unwrap(), None);
        assert!(matches!(quantization_check(&spec(ProblemKind::Free2D), 1.0), Err(Error::NotBoundProblem(_))));
    }

    #[test]
    fn morse_bound_count_matches_enumeration() {
        for v0 in [0.2, 0.3, 1.0, 2.25, 4.0, 6.25, 9.0, 30.0] {
            let s = spec(ProblemKind::Morse).with_v0(v0);
            let d = s.morse_d();
            // enumeration oracle: integers n ≥ 0 with a positive decay exponent d − n − ½
            let want = (0..100).filter(|&n| d - n as f64 - 0.5 > 0.0).count();
            let got = (0..100).filter(|&n| QuantumNumbers::for_n(&s, n).is_ok()).count();
            assert_eq!(got, want, "v0={v0}");
        }
    }

    #[test]
    fn sho_interleaving() {
        let even = spec(ProblemKind::Sho1DEven);
        let odd = spec(ProblemKind::Sho1DOdd);
        let herm = spec(ProblemKind::Sho1DHermite);
        let mut merged: Vec<f64> = (0..=10)
            .flat_map(|n| [bound_energy(&even, &qn(&even, n)).unwrap(), bound_energy(&odd, &qn(&odd, n)).unwrap()])
            .collect();
        merged.sort_by(f64::total_cmp);
        for (k, e) in merged.iter().enumerate().take(21) {
            assert_eq!(*e, bound_energy(&herm, &qn(&herm, k as u32)).unwrap());
        }
    }

    #[test]
    fn hydrogen_ground_state_map() {
        let s = spec(ProblemKind::Coulomb3D);
        let map = coordinate_map(&s, -0.5);
        assert_eq!(map.xi(2.0), 2.0);
        let map = coordinate_map(&spec(ProblemKind::Morse), -0.25);
        assert!(map.xi(1.0) < map.xi(0.0));
    }

    #[test]
    fn domain_error_on_negative_radius() {
        let s = spec(ProblemKind::Sho3D);
        let r = assemble_wavefunction(&s, &State::Bound(qn(&s, 0)), &[0.5, -0.1], Method::Residue, |_| Ok(Estimate::exact(C64::new(1.0, 0.0))));
        assert!(matches!(r, Err(Error::DomainError(_))));
        let s = spec(ProblemKind::Sho1DOdd);
        let r = assemble_wavefunction(&s, &State::Bound(qn(&s, 0)), &[0.5, -0.1], Method::Residue, |_| Ok(Estimate::exact(C64::new(1.0, 0.0))))
            .unwrap();
        assert_eq!(r.entries[0].coordinate, -0.1);
        assert_eq!(r.entries[0].psi, C64::new(-0.1, 0.0));
    }

    #[test]
    fn names_round_trip() {
        for k in ProblemKind::ALL {
            assert_eq!(k.name().parse::<ProblemKind>().unwrap(), k);
        }
        assert!("hulthen".parse::<ProblemKind>().is_err());
    }

    /// `α₋` from the exponent column of the tables, with the 2D oscillator
    /// entry taken as `β/2 − E/2ħω`.
    fn table_alpha_minus(s: &ProblemSpec, e: f64) -> f64 {
        let m = s.m.unsigned_abs() as f64;
        let l = s.l as f64;
        match s.kind {
            ProblemKind::Sho1DEven => 0.25 - e / 2.0,
            ProblemKind::Sho1DOdd => 0.75 - e / 2.0,
            ProblemKind::Sho2D => (m + 1.0) / 2.0 - e / 2.0,
            ProblemKind::Sho3D => (2.0 * l + 3.0) / 4.0 - e / 2.0,
            ProblemKind::Coulomb2D => (2.0 * m + 1.0) / 2.0 - 1.0 / (-2.0 * e).sqrt(),
            ProblemKind::Coulomb3D => l + 1.0 - 1.0 / (-2.0 * e).sqrt(),
            ProblemKind::Morse => ((-2.0 * s.mu * e).sqrt() - (2.0 * s.mu * s.morse_v0).sqrt()) + 0.5,
            _ => unreachable!(),
        }
    }

    proptest! {
        #[test]
        fn table_consistency(ki in 0usize..7, m in -3i32..=3, l in 0u32..=3, u in 0.01f64..20.0) {
            let kind = ProblemKind::LAGUERRE_BOUND[ki];
            let s = spec(kind).with_m(m).with_l(l);
            let e = match kind {
                ProblemKind::Coulomb2D | ProblemKind::Coulomb3D | ProblemKind::Morse => -u,
                _ => u,
            };
            let ode = canonicalize(&s, e).unwrap();
            let ex = exponents(&ode).unwrap();
            let want = table_alpha_minus(&s, e);
            prop_assert!((ex.alpha_minus.re - want).abs() <= 1e-12 * want.abs().max(1.0));
            prop_assert!(((ex.alpha_plus + ex.alpha_minus) - ode.beta).norm() <= 1e-12 * ode.beta.norm());
        }

        #[test]
        fn energy_round_trip(ki in 0usize..8, m in -3i32..=3, l in 0u32..=3, n in 0u32..=10, v0 in 0.5f64..80.0) {
            let kind = [
                ProblemKind::Sho1DEven, ProblemKind::Sho1DOdd, ProblemKind::Sho2D, ProblemKind::Sho3D,
                ProblemKind::Coulomb2D, ProblemKind::Coulomb3D, ProblemKind::Morse, ProblemKind::Sho1DHermite,
            ][ki];
            let s = spec(kind).with_m(m).with_l(l).with_v0(v0);
            let n = match kind {
                ProblemKind::Coulomb2D => n + m.unsigned_abs() + 1,
                ProblemKind::Coulomb3D => n + l + 1,
                _ => n,
            };
            let Ok(q) = QuantumNumbers::for_n(&s, n) else { return Ok(()); };
            let e = bound_energy(&s, &q).unwrap();
            prop_assert_eq!(quantization_check(&s, e).unwrap(), Some(q));
        }

        #[test]
        fn continuum_exponents_conjugate(ki in 0usize..4, m in -3i32..=3, l in 0u32..=3, e in 0.01f64..50.0) {
            let s = spec(ProblemKind::CONTINUUM_DOG_BONE[ki]).with_m(m).with_l(l);
            let ex = exponents(&canonicalize(&s, e).unwrap()).unwrap();
            prop_assert!((ex.alpha_minus - ex.alpha_plus.conj()).norm() <= 1e-12 * ex.alpha_plus.norm());
        }
    }
}
