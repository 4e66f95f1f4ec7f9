//! Evaluation routes for `Φ(ξ)`.
//!
//! Bound states: residue at `z = −λ`. Continuum states (free particle and
//! Coulomb): the dog-bone reduced to a real integral, a circle of radius `R`
//! enclosing both branch points, and the residue at infinity as a Kummer series.
//! Morse continuum: the ray from `−λ` to `−∞`, which is Tricomi's `U`.
//!
//! Phases `φ₁`, `φ₂` are the windings of `z + λ` and `z − λ`, measured from
//! their values at the reference point `0⁺` where both are zero.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::catalog::{canonicalize, laplace_form, state_energy, ProblemKind, ProblemSpec, State};
use crate::error::{Error, Result};
use crate::grid::{Estimate, Method, WavefunctionGrid};
use crate::laplace::{exponents, integrand, modulus_pow, CanonicalOde, Exponents, LaplaceForm, PhaseConvention, Regime};
use crate::quadrature::{integrate_power_weight, QuadConfig};
use crate::special::{gamma_complex, hermite, kummer_m_series, tricomi_u};

type C64 = Complex64;

/// `e^{Rξ}` overflows double precision past this exponent.
pub const OVERFLOW_EXPONENT: f64 = 700.0;
/// Series results whose largest term exceeds the sum by this factor have lost
/// at least ten digits.
pub const SERIES_CANCELLATION_LIMIT: f64 = 1e10;
pub const SERIES_TOL: f64 = 1e-17;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ContourKind {
    ClosedAroundMinusLambda,
    CircleRadiusR,
    RealSegment,
    RayFromMinusLambda,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QuadratureRule {
    Trapezoid,
    GaussComposite,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ContourConfig {
    pub kind: ContourKind,
    pub radius: f64,
    pub steps: usize,
    pub quadrature: QuadratureRule,
    /// Relative tolerance for adaptive quadrature.
    pub tol: f64,
}

impl Default for ContourConfig {
    fn default() -> Self {
        Self { kind: ContourKind::CircleRadiusR, radius: 1.1, steps: 100_000, quadrature: QuadratureRule::Trapezoid, tol: 1e-12 }
    }
}

impl ContourConfig {
    pub fn quad(&self) -> QuadConfig {
        QuadConfig { epsrel: self.tol, ..QuadConfig::default() }
    }

    fn validate_circle(&self) -> Result<()> {
        if !(self.radius > 1.0) {
            return Err(Error::InvalidParameter(format!("circle radius must exceed 1, got {}", self.radius)));
        }
        if self.steps < 1000 {
            return Err(Error::InvalidParameter(format!("circle needs at least 1000 steps, got {}", self.steps)));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhaseState {
    pub theta: f64,
    pub phi1: f64,
    pub phi2: f64,
}

/// Shift `angle` by a multiple of 2π to land nearest `centre`.
fn nearest_branch(angle: f64, centre: f64) -> f64 {
    angle + 2.0 * PI * ((centre - angle) / (2.0 * PI)).round()
}

/// Winding of the arrow from `−i` to `z = R e^{i(θ+π/2)}`.
pub fn phase_phi1(theta: f64, radius: f64) -> f64 {
    let raw = (radius * theta.sin()).atan2(1.0 + radius * theta.cos());
    nearest_branch(raw, if theta < PI { 0.5 * PI } else { 1.5 * PI })
}

/// Winding of the arrow from `+i` to `z = R e^{i(θ+π/2)}`.
pub fn phase_phi2(theta: f64, radius: f64) -> f64 {
    let raw = (-radius * theta.sin()).atan2(1.0 - radius * theta.cos());
    nearest_branch(raw, if theta < PI { 1.5 * PI } else { 2.5 * PI })
}

pub fn phase_state(theta: f64, radius: f64) -> PhaseState {
    PhaseState { theta, phi1: phase_phi1(theta, radius), phi2: phase_phi2(theta, radius) }
}

fn is_integer(z: C64) -> bool {
    z.im == 0.0 && z.re == z.re.round()
}

/// Bound state by the residue at `z = −λ`, `α₋ = −N`:
/// `(2πi/N!) dᴺ/dzᴺ [e^{ξz}(z−λ)^{α₊−1}]` at `z = −λ`, expanded with Leibniz' rule.
pub fn bound_phi_residue(ode: &CanonicalOde, big_n: u32, xi: f64) -> Result<C64> {
    let ex = exponents(ode)?;
    let minus = -ex.alpha_minus;
    if (minus - C64::new(big_n as f64, 0.0)).norm() > 1e-9 {
        return Err(Error::NonIntegerOrder(minus));
    }
    let lambda = ode.lambda.re;
    let n = big_n as usize;
    // p = α₊ − 1 = β + N − 1; at z = −λ the factor (z − λ) = 2λ e^{iπ}
    let p = ode.beta.re + big_n as f64 - 1.0;
    let exp_part = (-lambda * xi).exp();
    let mut sum = C64::new(0.0, 0.0);
    let mut binom = 1.0;
    let mut falling = 1.0;
    let mut n_fact = 1.0;
    for j in 1..=n {
        n_fact *= j as f64;
    }
    for k in 0..=n {
        if k > 0 {
            binom *= (n - k + 1) as f64 / k as f64;
            falling *= p - (k - 1) as f64;
        }
        let q = p - k as f64;
        let power = C64::from_polar((2.0 * lambda).powf(q), PI * q);
        sum += power * (binom * falling * xi.powi((n - k) as i32));
    }
    Ok(C64::new(0.0, 2.0 * PI) * sum * exp_part / n_fact)
}

/// `2πi e^{iπ(β−1)} (2λ)^{β−1} e^{−λξ} L_N^{(β−1)}(2λξ)`, the Rodrigues form of the residue.
pub fn bound_phi_closed_form(ode: &CanonicalOde, big_n: u32, xi: f64) -> C64 {
    let b1 = ode.beta.re - 1.0;
    let lambda = ode.lambda.re;
    let c = C64::new(0.0, 2.0 * PI) * C64::from_polar((2.0 * lambda).powf(b1), PI * b1);
    c * (-lambda * xi).exp() * crate::special::laguerre(big_n as usize, b1, 2.0 * lambda * xi)
}

/// `Φ` for the Hermite route: the residue of `e^{ξz − z²/4} z^{−n−1}` scaled by `2ⁿn!`.
///
/// The residue's coefficient table is the one `hermite` uses, so the two agree exactly.
pub fn hermite_phi_residue(n: u32, xi: f64) -> f64 {
    hermite(n as usize, xi)
}

/// Weight multiplying `2^{β−1} e^{−iξ} ∫₀¹ e^{2iξx}(1−x)^{α₊−1}x^{α₋−1}dx`.
///
/// The dog-bone gives `i e^{−πδ/2}(1 − e^{2πi(α₊−1)})`. With integer exponents
/// that vanishes and the segment from `−i` to `i` alone, weight `i e^{−πδ/2}`, is used.
pub fn continuum_weight(ode: &CanonicalOde, exps: &Exponents) -> C64 {
    let base = C64::new(0.0, (-PI * ode.delta / 2.0).exp());
    if uses_segment(exps) {
        base
    } else {
        base * (1.0 - (C64::new(0.0, 2.0 * PI) * (exps.alpha_plus - 1.0)).exp())
    }
}

fn uses_segment(exps: &Exponents) -> bool {
    is_integer(exps.alpha_plus) && is_integer(exps.alpha_minus)
}

fn check_continuum(ode: &CanonicalOde) -> Result<()> {
    if ode.regime != Regime::Continuum {
        return Err(Error::InvalidParameter("route needs the free-particle or Coulomb continuum".to_string()));
    }
    Ok(())
}

/// Dog-bone contour collapsed onto the segment `[−i, i]` and mapped to `x ∈ (0, 1)`.
pub fn continuum_phi_real_integral(ode: &CanonicalOde, exps: &Exponents, xi: f64, tol: f64) -> Result<C64> {
    check_continuum(ode)?;
    let cfg = QuadConfig { epsrel: tol, ..QuadConfig::default() };
    let (ap, am) = (exps.alpha_plus, exps.alpha_minus);
    let two_i_xi = C64::new(0.0, 2.0 * xi);
    // split at ½ so each endpoint singularity sits at the origin of its own piece
    let left = integrate_power_weight(|x| (two_i_xi * x).exp() * modulus_pow(1.0 - x, ap - 1.0), am, 0.5, &cfg)?;
    let right = integrate_power_weight(|y| (two_i_xi * (1.0 - y)).exp() * modulus_pow(1.0 - y, am - 1.0), ap, 0.5, &cfg)?;
    let pref = continuum_weight(ode, exps) * modulus_pow(2.0, ode.beta - 1.0) * C64::new(0.0, -xi).exp();
    Ok(pref * (left.value + right.value))
}

/// Quadrature nodes `z_j` and weights `w_j` with `Φ(ξ) ≈ Σ w_j e^{ξ z_j}`.
#[derive(Debug, Clone, PartialEq)]
pub struct CirclePlan {
    nodes: Vec<(C64, C64)>,
    radius: f64,
}

impl CirclePlan {
    pub fn new(ode: &CanonicalOde, exps: &Exponents, conv: &PhaseConvention, cfg: &ContourConfig) -> Result<Self> {
        check_continuum(ode)?;
        cfg.validate_circle()?;
        let r = cfg.radius;
        let node = |theta: f64| -> Result<(C64, C64)> {
            let z = C64::from_polar(r, theta + 0.5 * PI);
            let ph = phase_state(theta, r);
            let f = integrand(ode, exps, conv, 0.0, z, (ph.phi1, ph.phi2))?;
            // dz = i z dθ
            Ok((z, C64::i() * z * f))
        };
        let mut nodes = Vec::new();
        if uses_segment(exps) {
            // entire integrand: −i → −iR, right half of the circle, iR → i;
            // the arc is not periodic, so it gets composite Gauss–Kronrod panels
            for (theta, w) in gauss_kronrod_panels(PI, 2.0 * PI, (cfg.steps / 30).max(1)) {
                let (z, f) = node(theta)?;
                nodes.push((z, f * w));
            }
            // both straight pieces are parametrised by t ∈ [1, R] with dz = −i dt
            for (sign, phases) in [(-1.0, (PI, 2.0 * PI)), (1.0, (2.0 * PI, 3.0 * PI))] {
                for (t, w) in gauss_kronrod_panels(1.0, r, 8) {
                    let z = C64::new(0.0, sign * t);
                    let f = integrand(ode, exps, conv, 0.0, z, phases)?;
                    nodes.push((z, f * C64::new(0.0, -w)));
                }
            }
        } else {
            match cfg.quadrature {
                QuadratureRule::Trapezoid => {
                    let h = 2.0 * PI / cfg.steps as f64;
                    for j in 0..cfg.steps {
                        let (z, f) = node(j as f64 * h)?;
                        nodes.push((z, f * h));
                    }
                }
                QuadratureRule::GaussComposite => {
                    for (t, w) in gauss_kronrod_panels(0.0, 2.0 * PI, cfg.steps.div_ceil(15)) {
                        let (z, f) = node(t)?;
                        nodes.push((z, f * w));
                    }
                }
            }
        }
        Ok(Self { nodes, radius: r })
    }

    pub fn eval(&self, xi: f64) -> Estimate {
        let value = self.nodes.iter().map(|(z, w)| w * (z * xi).exp()).sum();
        Estimate { value, precision_loss: self.radius * xi.abs() > OVERFLOW_EXPONENT }
    }
}

/// Fixed composite rule: 15-point Kronrod nodes on `panels` equal panels.
fn gauss_kronrod_panels(a: f64, b: f64, panels: usize) -> Vec<(f64, f64)> {
    use crate::quadrature::{WGK, XGK};
    let h = 0.5 * (b - a) / panels as f64;
    let mut out = Vec::with_capacity(15 * panels);
    for p in 0..panels {
        let c = a + (2 * p + 1) as f64 * h;
        out.push((c, WGK[7] * h));
        for j in 0..7 {
            out.push((c - h * XGK[j], WGK[j] * h));
            out.push((c + h * XGK[j], WGK[j] * h));
        }
    }
    out
}

/// Circle of radius `R` around both branch points, trapezoid rule in `θ`.
pub fn continuum_phi_circle(
    ode: &CanonicalOde,
    exps: &Exponents,
    conv: &PhaseConvention,
    xi: f64,
    cfg: &ContourConfig,
) -> Result<Estimate> {
    Ok(CirclePlan::new(ode, exps, conv, cfg)?.eval(xi))
}

/// `−2πi` times the residue at infinity, summed as
/// `w 2^{β−1} B(α₊, α₋) e^{−iξ} M(α₋, β, 2iξ)`.
pub fn continuum_phi_series(ode: &CanonicalOde, exps: &Exponents, xi: f64, tol: f64) -> Result<Estimate> {
    check_continuum(ode)?;
    let (ap, am) = (exps.alpha_plus, exps.alpha_minus);
    let beta = ap + am;
    if !is_integer(beta) || beta.re <= 0.0 {
        return Err(Error::InvalidParameter(format!("series route needs a positive integer α₊+α₋, got {beta}")));
    }
    let pref = series_prefactor(ode, exps)? * C64::new(0.0, -xi).exp();
    let m = kummer_m_series(am, beta, C64::new(0.0, 2.0 * xi), tol)?;
    Ok(Estimate { value: pref * m.value, precision_loss: m.cancellation() > SERIES_CANCELLATION_LIMIT })
}

/// Everything in the series route except `e^{−iξ}M`:
/// `w 2^{β−1} Γ(α₊)Γ(α₋)/Γ(β)` with `w` the segment weight.
pub fn series_prefactor(ode: &CanonicalOde, exps: &Exponents) -> Result<C64> {
    let (ap, am) = (exps.alpha_plus, exps.alpha_minus);
    let beta = ap + am;
    let gammas = gamma_complex(ap)? * gamma_complex(am)? / gamma_complex(beta)?;
    Ok(continuum_weight(ode, exps) * modulus_pow(2.0, beta - 1.0) * gammas)
}

/// Morse continuum from the ray `z = −λ − t`, `t ∈ (0, ∞)`:
/// `e^{iπ(β−1)} Γ(α₋) e^{−ξ/2} U(α₋, β, ξ)`.
pub fn morse_continuum_phi(ode: &CanonicalOde, exps: &Exponents, xi: f64, quad: &QuadConfig) -> Result<C64> {
    if ode.regime != Regime::MorseContinuum {
        return Err(Error::InvalidParameter("ray contour needs the Morse continuum".to_string()));
    }
    if !(xi > 0.0) {
        return Err(Error::DomainError(xi));
    }
    let sign = (C64::new(0.0, PI) * (ode.beta - 1.0)).exp();
    let u = tricomi_u(exps.alpha_minus, ode.beta, xi, quad)?;
    Ok(sign * gamma_complex(exps.alpha_minus)? * (-xi / 2.0).exp() * u)
}

/// A ready-to-evaluate `Φ` for one problem, state and route.
#[derive(Debug, Clone)]
pub struct PhiEvaluator {
    pub form: LaplaceForm,
    pub method: Method,
    route: Route,
}

#[derive(Debug, Clone)]
enum Route {
    Residue { ode: CanonicalOde, big_n: u32 },
    Hermite { n: u32 },
    Real { ode: CanonicalOde, exps: Exponents, tol: f64 },
    Circle(CirclePlan),
    Series { ode: CanonicalOde, exps: Exponents },
    Ray { ode: CanonicalOde, exps: Exponents, quad: QuadConfig },
}

pub fn method_allowed(kind: ProblemKind, method: Method) -> bool {
    match method {
        Method::Residue => kind.is_bound(),
        Method::RealIntegral | Method::Circle | Method::Series => ProblemKind::CONTINUUM_DOG_BONE.contains(&kind),
        Method::MorseRay => kind == ProblemKind::MorseCont,
    }
}

impl PhiEvaluator {
    pub fn new(spec: &ProblemSpec, state: &State, method: Method, cfg: &ContourConfig) -> Result<Self> {
        if !method_allowed(spec.kind, method) {
            return Err(Error::MethodRegimeMismatch { method: method.name().to_string(), kind: spec.kind.name().to_string() });
        }
        let energy = state_energy(spec, state)?;
        let form = laplace_form(spec, energy)?;
        let route = match (method, state) {
            (Method::Residue, State::Bound(qn)) => match form {
                LaplaceForm::Hermite(_) => Route::Hermite { n: qn.n },
                LaplaceForm::Laguerre(ode) => Route::Residue { ode, big_n: qn.big_n },
            },
            (Method::Residue, State::Continuum { .. }) => {
                return Err(Error::MethodRegimeMismatch { method: method.name().to_string(), kind: spec.kind.name().to_string() })
            }
            _ => {
                let ode = canonicalize(spec, energy)?;
                let exps = exponents(&ode)?;
                match method {
                    Method::RealIntegral => Route::Real { ode, exps, tol: cfg.tol },
                    Method::Circle => Route::Circle(CirclePlan::new(&ode, &exps, &PhaseConvention::dog_bone(ode.delta), cfg)?),
                    Method::Series => Route::Series { ode, exps },
                    Method::MorseRay => Route::Ray { ode, exps, quad: cfg.quad() },
                    Method::Residue => unreachable!(),
                }
            }
        };
        Ok(Self { form, method, route })
    }

    pub fn eval(&self, xi: f64) -> Result<Estimate> {
        match &self.route {
            Route::Residue { ode, big_n } => bound_phi_residue(ode, *big_n, xi).map(Estimate::exact),
            Route::Hermite { n } => Ok(Estimate::exact(C64::new(hermite_phi_residue(*n, xi), 0.0))),
            Route::Real { ode, exps, tol } => continuum_phi_real_integral(ode, exps, xi, *tol).map(Estimate::exact),
            Route::Circle(plan) => Ok(plan.eval(xi)),
            Route::Series { ode, exps } => continuum_phi_series(ode, exps, xi, SERIES_TOL),
            Route::Ray { ode, exps, quad } => morse_continuum_phi(ode, exps, xi, quad).map(Estimate::exact),
        }
    }
}

/// `Φ` and `ψ` on the given coordinates by the chosen route.
pub fn sample_wavefunction(
    spec: &ProblemSpec,
    state: &State,
    coordinates: &[f64],
    method: Method,
    cfg: &ContourConfig,
) -> Result<WavefunctionGrid> {
    let eval = PhiEvaluator::new(spec, state, method, cfg)?;
    crate::catalog::assemble_wavefunction(spec, state, coordinates, method, |xi| eval.eval(xi))
}
