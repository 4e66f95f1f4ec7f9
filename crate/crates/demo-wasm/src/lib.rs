//! Browser bindings: a bound spectrum, a sampled wavefunction and the circle
//! contour phases. Every export is a thin wrapper over a plain function so the
//! logic also runs (and is tested) natively.

use laplace_qm::contour::{phase_phi1, phase_phi2, sample_wavefunction, ContourConfig};
use laplace_qm::validation::spectrum_table;
use laplace_qm::{Method, ProblemKind, ProblemSpec, QuantumNumbers, State};
use wasm_bindgen::prelude::*;

#[wasm_bindgen]
#[derive(Debug, Clone, Copy)]
pub struct Problem {
    spec: ProblemSpec,
}

fn to_js(e: String) -> JsValue {
    JsValue::from_str(&e)
}

impl Problem {
    pub fn parse(kind: &str) -> Result<Self, String> {
        let kind: ProblemKind = kind.parse().map_err(|e: laplace_qm::Error| e.to_string())?;
        Ok(Self { spec: ProblemSpec::new(kind) })
    }

    pub fn energies(&self, n_max: u32) -> Result<Vec<f64>, String> {
        let rows = spectrum_table(&self.spec, n_max).map_err(|e| e.to_string())?;
        Ok(rows.into_iter().map(|(_, e)| e).collect())
    }

    /// `[x₀, Re ψ₀, Im ψ₀, x₁, …]` on `count` points of `[min, max]`.
    ///
    /// `state` is the principal quantum number for bound kinds and the energy
    /// otherwise. An empty `method` picks the kind's default route.
    pub fn samples(&self, state: f64, method: &str, min: f64, max: f64, count: u32) -> Result<Vec<f64>, String> {
        if count < 2 || !(min < max) {
            return Err(format!("need count >= 2 and min < max, got {min},{max},{count}"));
        }
        let kind = self.spec.kind;
        let method = match method {
            "" if kind.is_bound() => Method::Residue,
            "" if kind == ProblemKind::MorseCont => Method::MorseRay,
            "" => Method::RealIntegral,
            m => m.parse().map_err(|e: laplace_qm::Error| e.to_string())?,
        };
        let state = if kind.is_bound() {
            if state < 0.0 || state.fract() != 0.0 {
                return Err(format!("bound state index must be a nonnegative integer, got {state}"));
            }
            State::Bound(QuantumNumbers::for_n(&self.spec, state as u32).map_err(|e| e.to_string())?)
        } else {
            State::Continuum { energy: state }
        };
        let step = (max - min) / (count - 1) as f64;
        let xs: Vec<f64> = (0..count).map(|i| min + step * i as f64).collect();
        let wf = sample_wavefunction(&self.spec, &state, &xs, method, &ContourConfig::default()).map_err(|e| e.to_string())?;
        Ok(wf.entries.iter().flat_map(|e| [e.coordinate, e.psi.re, e.psi.im]).collect())
    }
}

#[wasm_bindgen]
impl Problem {
    #[wasm_bindgen(constructor)]
    pub fn new(kind: &str) -> Result<Problem, JsValue> {
        Self::parse(kind).map_err(to_js)
    }

    #[wasm_bindgen(setter)]
    pub fn set_m(&mut self, m: i32) {
        self.spec.m = m;
    }

    #[wasm_bindgen(setter)]
    pub fn set_l(&mut self, l: u32) {
        self.spec.l = l;
    }

    #[wasm_bindgen(setter)]
    pub fn set_v0(&mut self, v0: f64) {
        self.spec.morse_v0 = v0;
    }

    pub fn spectrum(&self, n_max: u32) -> Result<Vec<f64>, JsValue> {
        self.energies(n_max).map_err(to_js)
    }

    pub fn wavefunction(&self, state: f64, method: &str, min: f64, max: f64, count: u32) -> Result<Vec<f64>, JsValue> {
        self.samples(state, method, min, max, count).map_err(to_js)
    }
}

/// `[θ₀, φ₁, φ₂, θ₁, …]` on `count` points of `θ ∈ [0, 2π]`.
#[wasm_bindgen]
pub fn circle_phases(radius: f64, count: u32) -> Vec<f64> {
    let count = count.max(2);
    let step = 2.0 * std::f64::consts::PI / (count - 1) as f64;
    (0..count)
        .flat_map(|i| {
            let theta = step * i as f64;
            [theta, phase_phi1(theta, radius), phase_phi2(theta, radius)]
        })
        .collect()
}
