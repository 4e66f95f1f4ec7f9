//! Associated Laguerre and physicists' Hermite polynomials from the closed-form
//! expansion of their Rodrigues formulas.

/// Ascending coefficients of `L_N^{(b)}`: `c_k = (−1)^k C(N+b, N−k) / k!`.
///
/// The generalized binomial is expanded as a product so that any real `b`
/// works, including the negative superscripts produced by the Morse problem.
pub fn laguerre_coeffs(n: usize, b: f64) -> Vec<f64> {
    (0..=n)
        .map(|k| {
            let mut binom = 1.0;
            for j in 1..=(n - k) {
                binom *= (k as f64 + b + j as f64) / j as f64;
            }
            let mut fact = 1.0;
            for j in 1..=k {
                fact *= j as f64;
            }
            let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
            sign * binom / fact
        })
        .collect()
}

pub fn laguerre(n: usize, b: f64, x: f64) -> f64 {
    horner(&laguerre_coeffs(n, b), x)
}

/// Ascending coefficients of `H_n`; only every other entry is nonzero.
pub fn hermite_coeffs(n: usize) -> Vec<f64> {
    let mut c = vec![0.0; n + 1];
    // leading 2^n, then c_{j−2} = −c_j · j(j−1) / (4·(n−j+2)/2)
    c[n] = 2f64.powi(n as i32);
    let mut j = n;
    let mut k = 1;
    while j >= 2 {
        c[j - 2] = -c[j] * (j * (j - 1)) as f64 / (4 * k) as f64;
        j -= 2;
        k += 1;
    }
    c
}

pub fn hermite(n: usize, x: f64) -> f64 {
    horner(&hermite_coeffs(n), x)
}

pub(crate) fn horner(coeffs: &[f64], x: f64) -> f64 {
    coeffs.iter().rev().fold(0.0, |acc, c| acc * x + c)
}

/// Scaled residual of `H_{2n}(x) = (−4)^n n! L_n^{(−½)}(x²)` and
/// `H_{2n+1}(x) = 2(−4)^n n! x L_n^{(½)}(x²)`.
///
/// Each side's absolute difference is divided by `max(1, |H|)`; the larger of
/// the two is returned.
pub fn laguerre_hermite_identity_residual(n: usize, x: f64) -> f64 {
    let mut pref = 1.0;
    for j in 1..=n {
        pref *= -4.0 * j as f64;
    }
    let even = hermite(2 * n, x);
    let odd = hermite(2 * n + 1, x);
    let re = (even - pref * laguerre(n, -0.5, x * x)).abs() / even.abs().max(1.0);
    let ro = (odd - 2.0 * pref * x * laguerre(n, 0.5, x * x)).abs() / odd.abs().max(1.0);
    re.max(ro)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    /// Coefficients of `e^x x^{−b} dⁿ/dxⁿ(e^{−x} x^{n+b}) / n!` by repeated
    /// symbolic differentiation of `Σ a_j x^{n+b−j}` times `e^{−x}`.
    fn rodrigues_laguerre(n: usize, b: f64) -> Vec<f64> {
        // poly[j] multiplies x^{n+b−j}
        let mut poly = vec![1.0];
        for _ in 0..n {
            let mut next = vec![0.0; poly.len() + 1];
            for (j, &a) in poly.iter().enumerate() {
                // d/dx(a x^p e^{−x}) = (a p x^{p−1} − a x^p) e^{−x}
                let p = n as f64 + b - j as f64;
                next[j + 1] += a * p;
                next[j] -= a;
            }
            poly = next;
        }
        let fact: f64 = (1..=n).map(|j| j as f64).product();
        // x^{n−j} after dividing by x^b
        let mut out = vec![0.0; n + 1];
        for (j, a) in poly.iter().enumerate() {
            out[n - j] = a / fact;
        }
        out
    }

    /// `(−1)^n e^{x²} dⁿ/dxⁿ e^{−x²}` with integer polynomial bookkeeping.
    fn rodrigues_hermite(n: usize) -> Vec<i128> {
        // d/dx(p e^{−x²}) = (p' − 2x p) e^{−x²}
        let mut p: Vec<i128> = vec![1];
        for _ in 0..n {
            let mut next = vec![0i128; p.len() + 1];
            for (k, &a) in p.iter().enumerate() {
                if k > 0 {
                    next[k - 1] += a * k as i128;
                }
                next[k + 1] -= 2 * a;
            }
            p = next;
        }
        if n % 2 == 1 {
            p.iter_mut().for_each(|a| *a = -*a);
        }
        p
    }

    fn hermite_recurrence(n: usize, x: f64) -> f64 {
        let (mut h0, mut h1) = (1.0, 2.0 * x);
        if n == 0 {
            return h0;
        }
        for k in 1..n {
            let h2 = 2.0 * x * h1 - 2.0 * k as f64 * h0;
            h0 = h1;
            h1 = h2;
        }
        h1
    }

    #[test]
    fn laguerre_examples() {
        for &(b, x) in &[(0.0, 0.3), (-0.5, 2.0), (3.7, -1.0)] {
            assert_eq!(laguerre(0, b, x), 1.0);
        }
        for x in [0.0, 0.5, 3.0] {
            assert!((laguerre(1, 0.0, x) - (1.0 - x)).abs() < 1e-15);
            assert!((laguerre(2, 1.0, x) - (3.0 - 3.0 * x + x * x / 2.0)).abs() < 1e-14);
        }
    }

    #[test]
    fn laguerre_matches_rodrigues_oracle() {
        for n in 0..=10 {
            for b in [-2.5, -0.5, 0.0, 0.5, 1.0, 2.0, 3.0, 4.3] {
                let got = laguerre_coeffs(n, b);
                let want = rodrigues_laguerre(n, b);
                for (g, w) in got.iter().zip(&want) {
                    assert!((g - w).abs() <= 1e-12 * w.abs().max(1.0), "n={n} b={b}: {got:?} vs {want:?}");
                }
            }
        }
    }

    #[test]
    fn hermite_examples() {
        assert_eq!(hermite(0, 0.7), 1.0);
        assert_eq!(hermite(1, 0.7), 1.4);
        assert_eq!(hermite(4, 0.0), 12.0);
        assert_eq!(hermite(3, 1.0), -4.0);
        assert_eq!(hermite(2, 0.0), -2.0);
    }

    #[test]
    fn hermite_coefficients_are_rodrigues_exactly() {
        for n in 0..=12 {
            let c = hermite_coeffs(n);
            let r = rodrigues_hermite(n);
            assert_eq!(c.len(), r.len());
            for (a, b) in c.iter().zip(&r) {
                assert_eq!(*a, *b as f64, "n={n}");
            }
            assert_eq!(c[n], 2f64.powi(n as i32));
        }
    }

    #[test]
    fn identity_examples() {
        assert_eq!(laguerre_hermite_identity_residual(0, 1.3), 0.0);
        assert!(laguerre_hermite_identity_residual(1, 1.0) < 1e-15);
        assert!(laguerre_hermite_identity_residual(2, 0.7) <= 1e-9);
    }

    #[test]
    fn laguerre_leading_coefficient() {
        for n in 0..8 {
            let c = laguerre_coeffs(n, 1.5);
            let fact: f64 = (1..=n).map(|j| j as f64).product();
            let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
            assert!((c[n] - sign / fact).abs() < 1e-15);
        }
    }

    proptest! {
        #[test]
        fn laguerre_satisfies_its_ode(
            n in 0usize..=8,
            bi in 0usize..6,
            x in 0.05f64..6.0,
        ) {
            let b = [-0.5, 0.5, 0.0, 1.0, 2.0, 3.0][bi];
            // L' = −L_{n−1}^{(b+1)}, L'' = L_{n−2}^{(b+2)}
            let l = laguerre(n, b, x);
            let d1 = if n >= 1 { -laguerre(n - 1, b + 1.0, x) } else { 0.0 };
            let d2 = if n >= 2 { laguerre(n - 2, b + 2.0, x) } else { 0.0 };
            let scale = (x * d2).abs() + ((b + 1.0 - x) * d1).abs() + (n as f64 * l).abs();
            let res = x * d2 + (b + 1.0 - x) * d1 + n as f64 * l;
            prop_assert!(res.abs() <= 1e-12 * scale.max(1.0), "residual {res} scale {scale}");
        }

        #[test]
        fn hermite_equals_recurrence(n in 0usize..=12, x in -3.0f64..3.0) {
            let a = hermite(n, x);
            let b = hermite_recurrence(n, x);
            // near a zero both sides carry the rounding of their largest term
            let scale: f64 = hermite_coeffs(n).iter().enumerate().map(|(k, c)| (c * x.powi(k as i32)).abs()).sum();
            prop_assert!((a - b).abs() <= 1e-13 * scale.max(1.0));
        }

        #[test]
        fn identity_holds(n in 0usize..=6, x in -3.0f64..3.0) {
            prop_assert!(laguerre_hermite_identity_residual(n, x) <= 1e-9);
        }
    }
}
