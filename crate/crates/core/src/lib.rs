//! Solutions of the Schrödinger equation by Laplace contour integrals.
//!
//! Each supported potential is reduced to `ξΦ″ + βΦ′ + (δ − λ²ξ)Φ = 0` (or the
//! Hermite equation for the 1D oscillator on the full line). Bound states come
//! from a residue; continuum states from a real integral, a circle contour or a
//! power series, and the Morse continuum from Tricomi's `U`.

pub mod catalog;
pub mod contour;
pub mod error;
pub mod grid;
pub mod laplace;
pub mod quadrature;
pub mod special;
pub mod validation;

pub use catalog::{
    assemble_wavefunction, bound_energy, canonicalize, coordinate_map, laplace_form, quantization_check, state_energy,
    CoordinateMap, ProblemKind, ProblemSpec, QuantumNumbers, State,
};
pub use contour::{sample_wavefunction, ContourConfig, PhiEvaluator};
pub use error::{Error, Result};
pub use grid::{Estimate, GridEntry, Method, WavefunctionGrid};
pub use laplace::{exponents, CanonicalOde, Exponents, HermiteOde, LaplaceForm, Regime};
