//! Globally adaptive 15-point Gauss–Kronrod quadrature for complex integrands,
//! plus a helper for integrable power singularities at the left endpoint.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::laplace::modulus_pow;

type C64 = Complex64;

pub(crate) const XGK: [f64; 8] = [
    0.991_455_371_120_812_639_206_854_697_526_329,
    0.949_107_912_342_758_524_526_189_684_047_851,
    0.864_864_423_359_769_072_789_712_788_640_926,
    0.741_531_185_599_394_439_863_864_773_280_788,
    0.586_087_235_467_691_130_294_144_845_693_013,
    0.405_845_151_377_397_166_906_606_412_076_961,
    0.207_784_955_007_898_467_600_689_403_773_245,
    0.0,
];
pub(crate) const WGK: [f64; 8] = [
    0.022_935_322_010_529_224_963_732_008_058_970,
    0.063_092_092_629_978_553_290_700_663_189_204,
    0.104_790_010_322_250_183_839_876_322_541_518,
    0.140_653_259_715_525_918_745_189_590_510_238,
    0.169_004_726_639_267_902_826_583_426_598_550,
    0.190_350_578_064_785_409_913_256_402_421_014,
    0.204_432_940_075_298_892_414_161_999_234_649,
    0.209_482_141_084_727_828_012_999_174_891_714,
];
// Gauss weights for XGK[1], XGK[3], XGK[5], XGK[7]
const WG: [f64; 4] = [
    0.129_484_966_168_869_693_270_611_432_679_082,
    0.279_705_391_489_276_667_901_467_771_423_780,
    0.381_830_050_505_118_944_950_369_775_488_975,
    0.417_959_183_673_469_387_755_102_040_816_327,
];

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadConfig {
    pub epsabs: f64,
    pub epsrel: f64,
    pub max_intervals: usize,
}

impl Default for QuadConfig {
    fn default() -> Self {
        Self { epsabs: 1e-300, epsrel: 1e-12, max_intervals: 4000 }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadResult {
    pub value: C64,
    pub error: f64,
    pub intervals: usize,
}

struct Panel {
    a: f64,
    b: f64,
    value: C64,
    error: f64,
    /// `∫|f|` over the panel, the scale of rounding in `value`.
    magnitude: f64,
}

fn gk15<F: Fn(f64) -> C64>(f: &F, a: f64, b: f64) -> Panel {
    let c = 0.5 * (a + b);
    let h = 0.5 * (b - a);
    let fc = f(c);
    let mut k = fc * WGK[7];
    let mut g = fc * WG[3];
    let mut m = fc.norm() * WGK[7];
    for j in 0..7 {
        let dx = h * XGK[j];
        let (lo, hi) = (f(c - dx), f(c + dx));
        let s = lo + hi;
        k += s * WGK[j];
        m += (lo.norm() + hi.norm()) * WGK[j];
        if j % 2 == 1 {
            g += s * WG[j / 2];
        }
    }
    Panel { a, b, value: k * h, error: ((k - g) * h).norm(), magnitude: m * h.abs() }
}

/// Error estimates below this multiple of `ε∫|f|` are rounding, not truncation.
const ROUNDOFF: f64 = 50.0 * f64::EPSILON;

/// `∫_a^b f(x) dx`, bisecting the panel with the largest error estimate until
/// the summed estimate meets `max(epsabs, epsrel·|I|)`.
///
/// Near a zero of the integral the relative target is out of reach; the
/// rounding floor `ROUNDOFF·∫|f|` is accepted instead.
pub fn integrate<F: Fn(f64) -> C64>(f: F, a: f64, b: f64, cfg: &QuadConfig) -> Result<QuadResult> {
    let mut panels = vec![gk15(&f, a, b)];
    loop {
        let value: C64 = panels.iter().map(|p| p.value).sum();
        let error: f64 = panels.iter().map(|p| p.error).sum();
        let magnitude: f64 = panels.iter().map(|p| p.magnitude).sum();
        let tol = cfg.epsabs.max(cfg.epsrel * value.norm()).max(ROUNDOFF * magnitude);
        if error <= tol {
            return Ok(QuadResult { value, error, intervals: panels.len() });
        }
        if !value.is_finite() {
            return Err(Error::QuadratureFailure { error: f64::INFINITY, tolerance: tol });
        }
        let worst = panels
            .iter()
            .enumerate()
            .max_by(|x, y| x.1.error.total_cmp(&y.1.error))
            .map(|(i, _)| i)
            .unwrap_or(0);
        let p = panels.swap_remove(worst);
        let mid = 0.5 * (p.a + p.b);
        if panels.len() + 2 > cfg.max_intervals || mid <= p.a || mid >= p.b {
            panels.push(p);
            return Err(Error::QuadratureFailure { error, tolerance: tol });
        }
        panels.push(gk15(&f, p.a, mid));
        panels.push(gk15(&f, mid, p.b));
    }
}

/// `∫_0^m g(x) x^{p−1} dx` for `Re p > 0`.
///
/// When `Re p < 1` the substitution `x = m u^{1/Re p}` removes the algebraic
/// singularity, leaving the bounded factor `u^{i Im p / Re p}`.
pub fn integrate_power_weight<G: Fn(f64) -> C64>(g: G, p: C64, m: f64, cfg: &QuadConfig) -> Result<QuadResult> {
    if p.re <= 0.0 {
        return Err(Error::InvalidParameter(format!("power weight needs Re p > 0, got {p}")));
    }
    if p.re >= 1.0 {
        return integrate(|x| if x > 0.0 { g(x) * modulus_pow(x, p - 1.0) } else { C64::new(0.0, 0.0) }, 0.0, m, cfg);
    }
    let q = p.re;
    let osc = p.im / q;
    let scale = modulus_pow(m, p) / q;
    let r = integrate(
        |u| {
            if u <= 0.0 {
                return C64::new(0.0, 0.0);
            }
            let x = m * u.powf(1.0 / q);
            g(x) * C64::from_polar(1.0, osc * u.ln())
        },
        0.0,
        1.0,
        cfg,
    )?;
    Ok(QuadResult { value: r.value * scale, error: r.error * scale.norm(), intervals: r.intervals })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64) -> C64 {
        C64::new(re, 0.0)
    }

    #[test]
    fn polynomial_exact() {
        let r = integrate(|x| c(x.powi(5) - 3.0 * x), 0.0, 2.0, &QuadConfig::default()).unwrap();
        assert!((r.value - c(64.0 / 6.0 - 6.0)).norm() < 1e-13);
        assert_eq!(r.intervals, 1);
    }

    #[test]
    fn oscillatory() {
        let w = 60.0;
        let r = integrate(|x| C64::new(0.0, w * x).exp(), 0.0, 1.0, &QuadConfig::default()).unwrap();
        let want = (C64::new(0.0, w).exp() - 1.0) / C64::new(0.0, w);
        assert!((r.value - want).norm() < 1e-12 * want.norm());
    }

    #[test]
    fn power_weight_beta_function() {
        // ∫₀¹ x^{-1/2} (1−x)^{1/3} dx = B(1/2, 4/3)
        let cfg = QuadConfig::default();
        let r = integrate_power_weight(|x| c((1.0 - x).powf(1.0 / 3.0)), c(0.5), 1.0, &cfg).unwrap();
        let g = |x: f64| crate::special::gamma::gamma_complex(c(x)).unwrap().re;
        let b = g(0.5) * g(4.0 / 3.0) / g(11.0 / 6.0);
        assert!((r.value.re - b).abs() < 1e-11, "{} vs {}", r.value.re, b);
    }

    #[test]
    fn power_weight_complex_exponent() {
        // ∫₀² x^{p−1} dx = 2^p / p
        let cfg = QuadConfig::default();
        for p in [C64::new(0.3, 1.7), C64::new(1.0, 2.2), C64::new(2.5, -0.4)] {
            let r = integrate_power_weight(|_| c(1.0), p, 2.0, &cfg).unwrap();
            let want = modulus_pow(2.0, p) / p;
            assert!((r.value - want).norm() < 1e-11 * want.norm(), "p={p}: {} vs {want}", r.value);
        }
    }

    #[test]
    fn failure_is_reported() {
        let cfg = QuadConfig { max_intervals: 4, ..Default::default() };
        let r = integrate(|x| c((1.0 / x).sin()), 1e-6, 1.0, &cfg);
        assert!(matches!(r, Err(Error::QuadratureFailure { .. })));
    }
}
