//! The canonical Laplace-form equation `ξΦ'' + βΦ' + (δ − λ²ξ)Φ = 0` and its
//! contour-integral solution `Φ(ξ) = ∫ e^{ξz} (z−λ)^{α₊−1} (z+λ)^{α₋−1} dz`.
//!
//! Continuum problems store `λ = i` so that `−λ²ξ = +ξ`. Multivalued factors are
//! never evaluated with a principal-branch complex power; the caller supplies
//! the winding angles and this module only combines moduli and phases.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Error, Result};

type C64 = Complex64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Regime {
    Bound,
    Continuum,
    MorseContinuum,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CanonicalOde {
    pub beta: C64,
    pub delta: f64,
    pub lambda: C64,
    pub regime: Regime,
}

impl CanonicalOde {
    pub fn bound(beta: f64, delta: f64, lambda: f64) -> Self {
        Self { beta: C64::new(beta, 0.0), delta, lambda: C64::new(lambda, 0.0), regime: Regime::Bound }
    }

    /// Free particle and Coulomb continuum: `λ = i`.
    pub fn continuum(beta: f64, delta: f64) -> Self {
        Self { beta: C64::new(beta, 0.0), delta, lambda: C64::i(), regime: Regime::Continuum }
    }

    /// Morse continuum with `β = 2ik + 1`, `δ = d`, `λ = ½`.
    pub fn morse_continuum(k: f64, d: f64) -> Self {
        Self { beta: C64::new(1.0, 2.0 * k), delta: d, lambda: C64::new(0.5, 0.0), regime: Regime::MorseContinuum }
    }

    /// Checks the regime invariants.
    pub fn validate(&self) -> Result<()> {
        let bad = |msg: &str| Err(Error::InvalidParameter(msg.to_string()));
        match self.regime {
            Regime::Bound => {
                if self.beta.im != 0.0 || self.lambda.im != 0.0 {
                    return bad("bound regime needs real beta and lambda");
                }
                if self.lambda.re != 0.5 && self.lambda.re != 1.0 {
                    return bad("bound regime needs lambda in {1/2, 1}");
                }
            }
            Regime::Continuum => {
                if self.lambda.re != 0.0 || (self.lambda.im.abs() - 1.0).abs() > 1e-15 {
                    return bad("continuum regime needs lambda = i");
                }
            }
            Regime::MorseContinuum => {
                if self.lambda != C64::new(0.5, 0.0) || (self.beta.re - 1.0).abs() > 1e-15 {
                    return bad("Morse continuum needs lambda = 1/2 and Re(beta) = 1");
                }
            }
        }
        if !self.delta.is_finite() || !self.beta.re.is_finite() || !self.beta.im.is_finite() {
            return bad("non-finite coefficient");
        }
        Ok(())
    }

    /// `ξΦ'' + βΦ' + (δ − λ²ξ)Φ` for supplied derivatives.
    pub fn residual(&self, xi: f64, phi: C64, d1: C64, d2: C64) -> C64 {
        d2 * xi + self.beta * d1 + (self.lambda * self.lambda * (-xi) + self.delta) * phi
    }
}

/// The second 1D oscillator route, `Φ'' − 2ξΦ' − 2αΦ = 0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HermiteOde {
    pub alpha: f64,
}

impl HermiteOde {
    pub fn residual(&self, xi: f64, phi: C64, d1: C64, d2: C64) -> C64 {
        d2 - d1 * (2.0 * xi) - phi * (2.0 * self.alpha)
    }

    /// `P(z) = z² − 2α`, `Q(z) = −2z` in ascending coefficients.
    pub fn build_pq(&self) -> (Polynomial, Polynomial) {
        (
            Polynomial::new(vec![C64::new(-2.0 * self.alpha, 0.0), C64::new(0.0, 0.0), C64::new(1.0, 0.0)]),
            Polynomial::new(vec![C64::new(0.0, 0.0), C64::new(-2.0, 0.0)]),
        )
    }
}

/// Either shape of Laplace-form equation a cataloged problem reduces to.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum LaplaceForm {
    Laguerre(CanonicalOde),
    Hermite(HermiteOde),
}

impl LaplaceForm {
    pub fn residual(&self, xi: f64, phi: C64, d1: C64, d2: C64) -> C64 {
        match self {
            LaplaceForm::Laguerre(ode) => ode.residual(xi, phi, d1, d2),
            LaplaceForm::Hermite(ode) => ode.residual(xi, phi, d1, d2),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Exponents {
    pub alpha_plus: C64,
    pub alpha_minus: C64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CutLayout {
    TwoRays,
    CentralSegment,
    SingleRayPositive,
    SingleRayNegative,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhaseConvention {
    /// Value of the phase factor at the reference point `z = 0⁺`.
    pub reference_point_phase: C64,
    pub cut_layout: CutLayout,
}

impl PhaseConvention {
    /// Dog-bone around the segment `[−i, i]`, with `f(0⁺) = e^{−πδ/2}`.
    pub fn dog_bone(delta: f64) -> Self {
        Self { reference_point_phase: C64::new((-PI * delta / 2.0).exp(), 0.0), cut_layout: CutLayout::CentralSegment }
    }

    pub fn unit(cut_layout: CutLayout) -> Self {
        Self { reference_point_phase: C64::new(1.0, 0.0), cut_layout }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Polynomial {
    pub coefficients: Vec<C64>,
}

impl Polynomial {
    /// Trailing zero coefficients are dropped; the zero polynomial has no coefficients.
    pub fn new(mut coefficients: Vec<C64>) -> Self {
        while coefficients.last().is_some_and(|c| *c == C64::new(0.0, 0.0)) {
            coefficients.pop();
        }
        Self { coefficients }
    }

    pub fn degree(&self) -> Option<usize> {
        self.coefficients.len().checked_sub(1)
    }

    pub fn eval(&self, z: C64) -> C64 {
        self.coefficients.iter().rev().fold(C64::new(0.0, 0.0), |acc, c| acc * z + c)
    }
}

/// `P(z) = βz + δ` and `Q(z) = z² − λ²`.
pub fn build_pq(ode: &CanonicalOde) -> (Polynomial, Polynomial) {
    let p = Polynomial::new(vec![C64::new(ode.delta, 0.0), ode.beta]);
    let q = Polynomial::new(vec![-(ode.lambda * ode.lambda), C64::new(0.0, 0.0), C64::new(1.0, 0.0)]);
    (p, q)
}

/// `α± = (βλ ± δ)/(2λ)`.
pub fn exponents(ode: &CanonicalOde) -> Result<Exponents> {
    if ode.lambda == C64::new(0.0, 0.0) {
        return Err(Error::DegenerateLambda);
    }
    let bl = ode.beta * ode.lambda;
    let two_l = ode.lambda * 2.0;
    Ok(Exponents { alpha_plus: (bl + ode.delta) / two_l, alpha_minus: (bl - ode.delta) / two_l })
}

/// `r^p` for `r > 0` and complex `p`, as `r^{Re p} e^{i Im p ln r}`.
pub(crate) fn modulus_pow(r: f64, p: C64) -> C64 {
    if p.im == 0.0 {
        return C64::new(r.powf(p.re), 0.0);
    }
    let ln = r.ln();
    C64::from_polar((p.re * ln).exp(), p.im * ln)
}

/// Integrand of the contour representation at `z`, with `φ₁` the winding of
/// `z + λ` and `φ₂` the winding of `z − λ` supplied by the contour.
pub fn integrand(
    ode: &CanonicalOde,
    exps: &Exponents,
    conv: &PhaseConvention,
    xi: f64,
    z: C64,
    accumulated_phases: (f64, f64),
) -> Result<C64> {
    let (phi1, phi2) = accumulated_phases;
    let ap = exps.alpha_plus - 1.0;
    let am = exps.alpha_minus - 1.0;
    let r2 = (z - ode.lambda).norm();
    let r1 = (z + ode.lambda).norm();
    let factor = |r: f64, p: C64| -> Result<C64> {
        if r > 0.0 {
            Ok(modulus_pow(r, p))
        } else if p.re > 0.0 {
            Ok(C64::new(0.0, 0.0))
        } else if p == C64::new(0.0, 0.0) {
            Ok(C64::new(1.0, 0.0))
        } else {
            Err(Error::BranchPointEvaluation(z))
        }
    };
    let m2 = factor(r2, ap)?;
    let m1 = factor(r1, am)?;
    let phase = (C64::i() * (ap * phi2 + am * phi1)).exp();
    Ok((z * xi).exp() * m2 * m1 * phase * conv.reference_point_phase)
}
