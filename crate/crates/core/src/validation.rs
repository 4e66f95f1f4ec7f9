//! Cross-method comparison, ODE residual sweeps, spectra, and independent
//! oracles (Bessel series, hydrogen ground state).

use num_complex::Complex64;
use rayon::prelude::*;

use crate::catalog::{bound_energy, canonicalize, laplace_form, ProblemKind, ProblemSpec, QuantumNumbers, State};
use crate::contour::{ContourConfig, PhiEvaluator};
use crate::error::{Error, Result};
use crate::grid::Method;
use crate::laplace::{exponents, LaplaceForm};
use crate::special::kummer_m;

type C64 = Complex64;

/// Relative deviation above which a point counts as failed.
pub const ONSET_THRESHOLD: f64 = 1e-3;
/// Consecutive failed points that define an onset.
pub const ONSET_RUN: usize = 3;
/// Reference magnitudes below this are skipped when forming relative deviations.
pub const REFERENCE_FLOOR: f64 = 1e-12;

/// Samples of `Φ` from one method; `None` where evaluation failed.
#[derive(Debug, Clone, PartialEq)]
pub struct MethodSamples {
    pub method: Method,
    pub values: Vec<Option<C64>>,
    pub errors: Vec<(usize, String)>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Deviation {
    pub method: Method,
    pub against: Method,
    /// Relative deviation per grid point; `None` where either side failed or
    /// the reference is below `REFERENCE_FLOOR`.
    pub per_point: Vec<Option<f64>>,
}

impl Deviation {
    /// Largest deviation over points with `lo ≤ ξ ≤ hi`; failures count as infinite.
    pub fn max_on(&self, grid: &[f64], lo: f64, hi: f64, reference: &MethodSamples) -> f64 {
        grid.iter()
            .zip(&self.per_point)
            .enumerate()
            .filter(|(_, (&x, _))| x >= lo && x <= hi)
            .map(|(i, (_, d))| match d {
                Some(v) => *v,
                None if reference.values[i].is_some_and(|r| r.norm() <= REFERENCE_FLOOR) => 0.0,
                None => f64::INFINITY,
            })
            .fold(0.0, f64::max)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ComparisonReport {
    pub problem: ProblemSpec,
    pub energy: f64,
    pub grid: Vec<f64>,
    /// Real integral first; it is the reference for the deviations.
    pub samples: Vec<MethodSamples>,
    /// Circle and series against the real integral, then circle against series.
    pub deviations: Vec<Deviation>,
    pub max_deviation: Vec<(Method, Method, f64)>,
    /// First `ξ` of a run of failed points, for circle and series.
    pub failure_onset: Vec<(Method, Option<f64>)>,
}

impl ComparisonReport {
    pub fn samples_for(&self, method: Method) -> Option<&MethodSamples> {
        self.samples.iter().find(|s| s.method == method)
    }

    pub fn onset(&self, method: Method) -> Option<f64> {
        self.failure_onset.iter().find(|(m, _)| *m == method).and_then(|(_, o)| *o)
    }

    pub fn deviation(&self, method: Method, against: Method) -> Option<&Deviation> {
        self.deviations.iter().find(|d| d.method == method && d.against == against)
    }
}

fn relative(a: Option<C64>, b: Option<C64>) -> Option<f64> {
    match (a, b) {
        (Some(a), Some(b)) if b.norm() > REFERENCE_FLOOR => Some((a - b).norm() / b.norm()),
        _ => None,
    }
}

/// Smallest grid `ξ` starting a run of `ONSET_RUN` points whose deviation
/// exceeds `ONSET_THRESHOLD`. Points with a negligible reference are skipped;
/// points where the method failed count as exceeding.
pub fn failure_onset(grid: &[f64], deviation: &[Option<f64>], reference: &[Option<C64>]) -> Option<f64> {
    let mut run_start = None;
    let mut run = 0;
    for (i, &x) in grid.iter().enumerate() {
        let failed = match deviation[i] {
            Some(d) => d > ONSET_THRESHOLD,
            None => match reference[i] {
                Some(r) if r.norm() <= REFERENCE_FLOOR => continue,
                _ => true,
            },
        };
        if failed {
            if run == 0 {
                run_start = Some(x);
            }
            run += 1;
            if run == ONSET_RUN {
                return run_start;
            }
        } else {
            run = 0;
        }
    }
    None
}

fn sample_method(eval: Result<PhiEvaluator>, method: Method, grid: &[f64]) -> MethodSamples {
    let eval = match eval {
        Ok(e) => e,
        Err(e) => {
            let msg = e.to_string();
            return MethodSamples {
                method,
                values: vec![None; grid.len()],
                errors: (0..grid.len()).map(|i| (i, msg.clone())).collect(),
            };
        }
    };
    let results: Vec<Result<C64>> = grid.par_iter().map(|&xi| eval.eval(xi).map(|e| e.value)).collect();
    let mut values = Vec::with_capacity(grid.len());
    let mut errors = Vec::new();
    for (i, r) in results.into_iter().enumerate() {
        match r {
            Ok(v) if v.is_finite() => values.push(Some(v)),
            Ok(v) => {
                values.push(None);
                errors.push((i, format!("non-finite value {v}")));
            }
            Err(e) => {
                values.push(None);
                errors.push((i, e.to_string()));
            }
        }
    }
    MethodSamples { method, values, errors }
}

/// Real integral, circle and series on the same `ξ` grid.
///
/// Per-point failures are recorded, not propagated.
pub fn cross_method_report(spec: &ProblemSpec, energy: f64, grid: &[f64], cfg: &ContourConfig) -> Result<ComparisonReport> {
    if !ProblemKind::CONTINUUM_DOG_BONE.contains(&spec.kind) {
        return Err(Error::MethodRegimeMismatch { method: "cross-method".to_string(), kind: spec.kind.name().to_string() });
    }
    let state = State::Continuum { energy };
    // fail early on bad energy or parameters
    canonicalize(spec, energy)?;
    let methods = [Method::RealIntegral, Method::Circle, Method::Series];
    let samples: Vec<MethodSamples> =
        methods.iter().map(|&m| sample_method(PhiEvaluator::new(spec, &state, m, cfg), m, grid)).collect();
    let pairs = [(1, 0), (2, 0), (1, 2)];
    let deviations: Vec<Deviation> = pairs
        .iter()
        .map(|&(a, b)| Deviation {
            method: methods[a],
            against: methods[b],
            per_point: samples[a].values.iter().zip(&samples[b].values).map(|(x, y)| relative(*x, *y)).collect(),
        })
        .collect();
    let max_deviation = deviations
        .iter()
        .map(|d| {
            let reference = &samples[methods.iter().position(|m| *m == d.against).unwrap()];
            (d.method, d.against, d.max_on(grid, f64::NEG_INFINITY, f64::INFINITY, reference))
        })
        .collect();
    let failure_onset = [1, 2]
        .iter()
        .map(|&a| (methods[a], failure_onset(grid, &deviations[a - 1].per_point, &samples[0].values)))
        .collect();
    Ok(ComparisonReport { problem: *spec, energy, grid: grid.to_vec(), samples, deviations, max_deviation, failure_onset })
}

// eighth-order central differences on x−4h..x+4h
const D1: [f64; 9] = [1.0 / 280.0, -4.0 / 105.0, 1.0 / 5.0, -4.0 / 5.0, 0.0, 4.0 / 5.0, -1.0 / 5.0, 4.0 / 105.0, -1.0 / 280.0];
const D2: [f64; 9] = [
    -1.0 / 560.0,
    8.0 / 315.0,
    -1.0 / 5.0,
    8.0 / 5.0,
    -205.0 / 72.0,
    8.0 / 5.0,
    -1.0 / 5.0,
    8.0 / 315.0,
    -1.0 / 560.0,
];

/// Max over `grid` of `|L Φ| / max(|Φ|, |Φ′|, |Φ″|)` with `L` the problem's
/// Laplace-form operator.
///
/// Derivatives are nine-point central differences in `u = ln ξ` with step `h`,
/// converted back with `Φ′ = Φ_u/ξ` and `Φ″ = (Φ_uu − Φ_u)/ξ²`. The stencil is
/// geometric, so it never leaves `ξ > 0` and tightens where `Φ` varies on the
/// scale of `ξ` itself.
pub fn ode_residual_of<F>(form: &LaplaceForm, phi: F, grid: &[f64], h: f64) -> Result<f64>
where
    F: Fn(f64) -> Result<C64> + Sync,
{
    if let Some(&bad) = grid.iter().find(|&&x| !(x > 0.0)) {
        return Err(Error::DomainError(bad));
    }
    let per_point: Vec<f64> = grid
        .par_iter()
        .map(|&xi| {
            let mut f = [C64::new(0.0, 0.0); 9];
            for (j, v) in f.iter_mut().enumerate() {
                *v = phi(xi * ((j as f64 - 4.0) * h).exp())?;
            }
            let du: C64 = f.iter().zip(D1).map(|(v, c)| v * c).sum::<C64>() / h;
            let duu: C64 = f.iter().zip(D2).map(|(v, c)| v * c).sum::<C64>() / (h * h);
            let d1 = du / xi;
            let d2 = (duu - du) / (xi * xi);
            let scale = f[4].norm().max(d1.norm()).max(d2.norm());
            let res = form.residual(xi, f[4], d1, d2).norm();
            Ok(if scale == 0.0 { res } else { res / scale })
        })
        .collect::<Result<_>>()?;
    Ok(per_point.into_iter().fold(0.0, f64::max))
}

/// `ode_residual_of` for `Φ` produced by `method`.
pub fn ode_residual_sweep(
    spec: &ProblemSpec,
    state: &State,
    method: Method,
    grid: &[f64],
    h: f64,
    cfg: &ContourConfig,
) -> Result<f64> {
    let eval = PhiEvaluator::new(spec, state, method, cfg)?;
    ode_residual_of(&eval.form, |xi| eval.eval(xi).map(|e| e.value), grid, h)
}

/// `(n, E_n)` for `n ≤ n_max`, starting at the lowest admissible `n` and
/// stopping at the last Morse level.
pub fn spectrum_table(spec: &ProblemSpec, n_max: u32) -> Result<Vec<(QuantumNumbers, f64)>> {
    if !spec.kind.is_bound() {
        return Err(Error::NotBoundProblem(spec.kind.name().to_string()));
    }
    spec.validate()?;
    let mut out = Vec::new();
    for n in 0..=n_max {
        match QuantumNumbers::for_n(spec, n) {
            Ok(qn) => out.push((qn, bound_energy(spec, &qn)?)),
            Err(Error::InvalidQuantumNumbers(_)) if spec.kind == ProblemKind::Morse => break,
            Err(Error::InvalidQuantumNumbers(_)) => continue,
            Err(e) => return Err(e),
        }
    }
    Ok(out)
}

/// `|Im(e^{−iξ}M(α₋, β, 2iξ))| / |e^{−iξ}M(α₋, β, 2iξ)|`; zero when the combination is real.
pub fn continuum_reality_residual(spec: &ProblemSpec, energy: f64, xi: f64) -> Result<f64> {
    let ode = match laplace_form(spec, energy)? {
        LaplaceForm::Laguerre(ode) if ProblemKind::CONTINUUM_DOG_BONE.contains(&spec.kind) => ode,
        _ => {
            return Err(Error::MethodRegimeMismatch { method: "series".to_string(), kind: spec.kind.name().to_string() })
        }
    };
    let ex = exponents(&ode)?;
    let v = C64::new(0.0, -xi).exp() * kummer_m(ex.alpha_minus, ode.beta, C64::new(0.0, 2.0 * xi), 1e-17)?;
    Ok(v.im.abs() / v.norm())
}

/// `J_m(x) = Σ_k (−1)^k (x/2)^{2k+m} / (k!(k+m)!)`, summed until the terms vanish.
pub fn bessel_j(m: u32, x: f64) -> f64 {
    let half = 0.5 * x;
    let mut term = (1..=m).fold(1.0, |t, j| t * half / j as f64);
    let mut sum = term;
    for k in 1..500 {
        term *= -half * half / (k as f64 * (k + m) as f64);
        sum += term;
        if term.abs() < 1e-17 * sum.abs() && k > 2 {
            break;
        }
    }
    sum
}

/// `j_l(x) = x^l Σ_k (−x²/2)^k / (k! (2l+2k+1)!!)`.
pub fn spherical_j(l: u32, x: f64) -> f64 {
    let mut lead = 1.0;
    for j in 0..=l {
        lead *= if j == 0 { 1.0 } else { x / (2 * j + 1) as f64 };
    }
    let mut term = lead;
    let mut sum = term;
    for k in 1..500 {
        term *= -0.5 * x * x / (k as f64 * (2 * l + 2 * k + 1) as f64);
        sum += term;
        if term.abs() < 1e-17 * sum.abs() && k > 2 {
            break;
        }
    }
    sum
}

/// Hydrogen ground state `e^{−r/a₀}` up to normalization.
pub fn hydrogen_ground_state(r: f64, a0: f64) -> f64 {
    (-r / a0).exp()
}

/// Free-particle `Φ` predicted by the Bessel oracles: `J_m(ξ)/ξ^m` in 2D and
/// `j_l(ξ)/ξ^l` in 3D.
pub fn free_particle_oracle(spec: &ProblemSpec, xi: f64) -> Result<f64> {
    match spec.kind {
        ProblemKind::Free2D => {
            let m = spec.m.unsigned_abs();
            Ok(bessel_j(m, xi) / xi.powi(m as i32))
        }
        ProblemKind::Free3D => Ok(spherical_j(spec.l, xi) / xi.powi(spec.l as i32)),
        k => Err(Error::InvalidParameter(format!("{k} has no free-particle oracle"))),
    }
}

/// Max of `|r_i/r_ref − 1|` with `r_i = values_i / oracle_i`.
///
/// Points where the oracle is below `1e−6` of its largest magnitude are
/// skipped; near a node the ratio only measures rounding.
pub fn ratio_spread(values: &[C64], oracle: &[f64]) -> f64 {
    let top = oracle.iter().fold(0.0f64, |a, o| a.max(o.abs()));
    let ratios: Vec<C64> =
        values.iter().zip(oracle).filter(|(_, o)| o.abs() > 1e-6 * top).map(|(v, o)| v / *o).collect();
    let Some(&first) = ratios.iter().max_by(|a, b| a.norm().total_cmp(&b.norm())) else {
        return 0.0;
    };
    ratios.iter().map(|r| (r - first).norm() / first.norm()).fold(0.0, f64::max)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::contour::sample_wavefunction;
    use proptest::prelude::*;

    fn grid(lo: f64, hi: f64, step: f64) -> Vec<f64> {
        let n = ((hi - lo) / step).round() as usize;
        (0..=n).map(|j| lo + step * j as f64).collect()
    }

    #[test]
    fn bessel_values() {
        // J₀(1), J₁(2.5), j₀(x) = sin x / x, j₁(x) = sin x/x² − cos x/x
        assert!((bessel_j(0, 1.0) - 0.765_197_686_557_966_6).abs() < 1e-15);
        assert!((bessel_j(1, 2.5) - 0.497_094_102_464_274_4).abs() < 1e-15);
        for x in [0.3, 2.0, 7.5] {
            assert!((spherical_j(0, x) - x.sin() / x).abs() < 1e-14);
            assert!((spherical_j(1, x) - (x.sin() / (x * x) - x.cos() / x)).abs() < 1e-13);
        }
    }

    #[test]
    fn onset_needs_three_in_a_row() {
        let g: Vec<f64> = (0..8).map(|j| j as f64).collect();
        let r = vec![Some(C64::new(1.0, 0.0)); 8];
        let d = [0.0, 1.0, 1.0, 0.0, 1.0, 1.0, 1.0, 1.0].map(Some);
        assert_eq!(failure_onset(&g, &d, &r), Some(4.0));
        let d = [0.0, 1.0, 1.0, 0.0, 1.0, 1.0, 0.0, 0.0].map(Some);
        assert_eq!(failure_onset(&g, &d, &r), None);
        // failed evaluations count, negligible references are skipped
        let mut d = [0.0, 0.0, 1.0, 0.0, 0.0, 0.0, 0.0, 0.0].map(Some);
        d[3] = None;
        d[4] = None;
        let mut r2 = r.clone();
        r2[3] = Some(C64::new(0.0, 0.0));
        assert_eq!(failure_onset(&g, &d, &r2), None);
        assert_eq!(failure_onset(&g, &d, &r), Some(2.0));
        d[5] = Some(2.0);
        assert_eq!(failure_onset(&g, &d, &r2), Some(2.0));
    }

    #[test]
    fn report_at_origin_agrees() {
        let spec = ProblemSpec::new(ProblemKind::Coulomb3DCont);
        let rep = cross_method_report(&spec, 1.0, &[0.0], &ContourConfig::default()).unwrap();
        for (_, _, d) in &rep.max_deviation {
            assert!(*d < 1e-9, "{:?}", rep.max_deviation);
        }
    }

    #[test]
    fn report_free3d_small_deviation() {
        let spec = ProblemSpec::new(ProblemKind::Free3D);
        let g = grid(0.1, 10.0, 0.1);
        let rep = cross_method_report(&spec, 1.0, &g, &ContourConfig::default()).unwrap();
        for (a, b, d) in &rep.max_deviation {
            assert!(*d <= 1e-6, "{a} vs {b}: {d}");
        }
        let real = rep.samples_for(Method::RealIntegral).unwrap();
        let vals: Vec<C64> = real.values.iter().map(|v| v.unwrap()).collect();
        let oracle: Vec<f64> = g.iter().map(|&x| x.sin() / x).collect();
        assert!(ratio_spread(&vals, &oracle) < 1e-7);
    }

    #[test]
    fn report_rejects_other_kinds() {
        let spec = ProblemSpec::new(ProblemKind::MorseCont);
        assert!(cross_method_report(&spec, 1.0, &[1.0], &ContourConfig::default()).is_err());
    }

    #[test]
    fn residual_of_zero_function() {
        let ode = canonicalize(&ProblemSpec::new(ProblemKind::Free2D), 1.0).unwrap();
        let r = ode_residual_of(&LaplaceForm::Laguerre(ode), |_| Ok(C64::new(0.0, 0.0)), &[0.5, 1.0, 2.0], 1e-3).unwrap();
        assert_eq!(r, 0.0);
    }

    #[test]
    fn residual_examples() {
        let cfg = ContourConfig::default();
        let g = grid(0.1, 10.0, 0.1);
        let spec = ProblemSpec::new(ProblemKind::Sho3D).with_l(1);
        let st = State::Bound(QuantumNumbers::for_n(&spec, 2).unwrap());
        assert!(ode_residual_sweep(&spec, &st, Method::Residue, &g, 0.04, &cfg).unwrap() <= 1e-5);
        let spec = ProblemSpec::new(ProblemKind::Coulomb2DCont);
        let st = State::Continuum { energy: 1.0 };
        assert!(ode_residual_sweep(&spec, &st, Method::RealIntegral, &g, 0.04, &cfg).unwrap() <= 1e-4);
    }

    #[test]
    fn spectra() {
        let t = spectrum_table(&ProblemSpec::new(ProblemKind::Sho1DHermite), 3).unwrap();
        assert_eq!(t.iter().map(|e| e.1).collect::<Vec<_>>(), vec![0.5, 1.5, 2.5, 3.5]);
        let t = spectrum_table(&ProblemSpec::new(ProblemKind::Coulomb3D), 3).unwrap();
        let e: Vec<f64> = t.iter().map(|e| e.1).collect();
        assert_eq!(t[0].0, QuantumNumbers { n: 1, big_n: 0 });
        assert_eq!(e[..2], [-0.5, -0.125]);
        assert!((e[2] + 1.0 / 18.0).abs() < 1e-16);
        // d = 2.5 admits n < d − ½
        let morse = ProblemSpec::new(ProblemKind::Morse).with_v0(6.25);
        assert_eq!(spectrum_table(&morse, 10).unwrap().len(), 2);
        assert!(matches!(spectrum_table(&ProblemSpec::new(ProblemKind::Free3D), 3), Err(Error::NotBoundProblem(_))));
    }

    #[test]
    fn hydrogen_ground_state_ratio() {
        let spec = ProblemSpec::new(ProblemKind::Coulomb3D);
        let st = State::Bound(QuantumNumbers::for_n(&spec, 1).unwrap());
        let rs: Vec<f64> = (1..=60).map(|j| 0.2 * j as f64).collect();
        let g = sample_wavefunction(&spec, &st, &rs, Method::Residue, &ContourConfig::default()).unwrap();
        let vals: Vec<C64> = g.entries.iter().map(|e| e.psi).collect();
        let oracle: Vec<f64> = rs.iter().map(|&r| hydrogen_ground_state(r, 1.0)).collect();
        assert!(ratio_spread(&vals, &oracle) < 1e-9);
    }

    #[test]
    fn reality_of_kummer_combination() {
        for kind in ProblemKind::CONTINUUM_DOG_BONE {
            for xi in [0.5, 3.0, 4.5] {
                assert!(continuum_reality_residual(&ProblemSpec::new(kind), 1.0, xi).unwrap() <= 1e-9, "{kind} {xi}");
            }
        }
    }

    proptest! {
        #[test]
        fn spectrum_increasing(ki in 0usize..7, m in 0i32..3, l in 0u32..3) {
            let kind = [
                ProblemKind::Sho1DEven, ProblemKind::Sho1DOdd, ProblemKind::Sho2D, ProblemKind::Sho3D,
                ProblemKind::Coulomb2D, ProblemKind::Coulomb3D, ProblemKind::Sho1DHermite,
            ][ki];
            let spec = ProblemSpec::new(kind).with_m(m).with_l(l);
            let t = spectrum_table(&spec, 10).unwrap();
            for w in t.windows(2) {
                prop_assert!(w[1].1 > w[0].1);
            }
        }

        #[test]
        fn ratio_spread_ignores_scale(c in 0.1f64..10.0, p in -3.0f64..3.0) {
            let o: Vec<f64> = (1..20).map(|j| (j as f64 * 0.4).cos()).collect();
            let v: Vec<C64> = o.iter().map(|x| C64::from_polar(c, p) * x).collect();
            prop_assert!(ratio_spread(&v, &o) < 1e-12);
        }
    }
}
