//! Kummer's `M(a, b, z)` by its ascending series and Tricomi's `U(a, b, x)` by
//! its integral representation on `(0, ∞)`.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::laplace::modulus_pow;
use crate::quadrature::{integrate, integrate_power_weight, QuadConfig};
use crate::special::gamma::gamma_complex;

type C64 = Complex64;

pub const MAX_SERIES_TERMS: usize = 1000;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesSum {
    pub value: C64,
    /// Largest term magnitude; `max_term / |value|` bounds the cancellation.
    pub max_term: f64,
    pub terms: usize,
}

impl SeriesSum {
    /// Ratio of the largest term to the result; values near `1/ε` mean every digit was lost.
    pub fn cancellation(&self) -> f64 {
        self.max_term / self.value.norm()
    }
}

fn is_nonpositive_integer(b: C64) -> bool {
    b.im == 0.0 && b.re <= 0.0 && b.re == b.re.round()
}

/// Partial sums of `Σ (a)_j/(b)_j z^j/j!` until three consecutive terms fall
/// below `tol·|sum|`.
pub fn kummer_m_series(a: C64, b: C64, z: C64, tol: f64) -> Result<SeriesSum> {
    if is_nonpositive_integer(b) {
        return Err(Error::InvalidB(b));
    }
    let mut sum = C64::new(1.0, 0.0);
    let mut term = C64::new(1.0, 0.0);
    let mut max_term = 1.0f64;
    let mut small = 0;
    for j in 0..MAX_SERIES_TERMS {
        let jf = j as f64;
        term *= (a + jf) / (b + jf) * z / (jf + 1.0);
        sum += term;
        if !sum.is_finite() {
            return Err(Error::SeriesDivergence(j + 1));
        }
        let t = term.norm();
        max_term = max_term.max(t);
        if t <= tol * sum.norm() {
            small += 1;
            if small == 3 {
                return Ok(SeriesSum { value: sum, max_term, terms: j + 2 });
            }
        } else {
            small = 0;
        }
    }
    Err(Error::SeriesDivergence(MAX_SERIES_TERMS))
}

pub fn kummer_m(a: C64, b: C64, z: C64, tol: f64) -> Result<C64> {
    kummer_m_series(a, b, z, tol).map(|s| s.value)
}

/// `U(a, b, x)` for `x > 0`.
///
/// For `Re a > 0` the integral `(1/Γ(a)) ∫₀^∞ e^{−xt}(1+t)^{b−a−1} t^{a−1} dt`
/// is evaluated directly. Otherwise the value is carried down
/// from two integrals at `a + m`, `a + m + 1` with the recurrence
/// `U(a−1) + (b − 2a − x)U(a) + a(a − b + 1)U(a+1) = 0`.
pub fn tricomi_u(a: C64, b: C64, x: f64, cfg: &QuadConfig) -> Result<C64> {
    if !(x > 0.0) {
        return Err(Error::DomainError(x));
    }
    if a.re > 0.0 {
        return tricomi_u_integral(a, b, x, cfg);
    }
    let m = (1.0 - a.re).floor().max(1.0);
    let top = a + m;
    let mut u_hi = tricomi_u_integral(top + 1.0, b, x, cfg)?;
    let mut u = tricomi_u_integral(top, b, x, cfg)?;
    let mut c = top;
    for _ in 0..m as usize {
        let lower = -(b - c * 2.0 - x) * u - c * (c - b + 1.0) * u_hi;
        u_hi = u;
        u = lower;
        c -= 1.0;
    }
    Ok(u)
}

/// `(1/Γ(a)) ∫₀^∞ e^{−xt}(1+t)^{b−a−1} t^{a−1} dt` for `Re a > 0`, split at `t = 1`.
///
/// The tail uses `t = e^w`, which keeps the slowly decaying `t^{Re b − 2}`
/// regime at small `x` smooth; it is cut where `e^{−xt}` underflows.
fn tricomi_u_integral(a: C64, b: C64, x: f64, cfg: &QuadConfig) -> Result<C64> {
    let c = b - a - 1.0;
    let head = integrate_power_weight(|t| (-x * t).exp() * modulus_pow(1.0 + t, c), a, 1.0, cfg)?;
    let w_max = (750.0 / x).ln().max(1.0);
    let tail = integrate(
        |w| {
            let t = w.exp();
            let e = (-x * t).exp();
            if e == 0.0 {
                return C64::new(0.0, 0.0);
            }
            e * modulus_pow(1.0 + t, c) * modulus_pow(t, a)
        },
        0.0,
        w_max,
        cfg,
    )?;
    Ok((head.value + tail.value) / gamma_complex(a)?)
}

/// `U` from two Kummer functions:
/// `Γ(1−b)/Γ(a−b+1) M(a,b,x) + Γ(b−1)/Γ(a) x^{1−b} M(a−b+1, 2−b, x)`.
///
/// Requires non-integer `b`.
pub fn tricomi_u_connection(a: C64, b: C64, x: f64, tol: f64) -> Result<C64> {
    if !(x > 0.0) {
        return Err(Error::DomainError(x));
    }
    let z = C64::new(x, 0.0);
    let first = gamma_complex(1.0 - b)? / gamma_complex(a - b + 1.0)? * kummer_m(a, b, z, tol)?;
    let second =
        gamma_complex(b - 1.0)? / gamma_complex(a)? * modulus_pow(x, 1.0 - b) * kummer_m(a - b + 1.0, 2.0 - b, z, tol)?;
    Ok(first + second)
}
