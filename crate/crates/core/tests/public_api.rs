use laplace_qm::contour::{sample_wavefunction, ContourConfig};
use laplace_qm::validation::{cross_method_report, hydrogen_ground_state, spectrum_table};
use laplace_qm::{quantization_check, Error, Method, ProblemKind, ProblemSpec, QuantumNumbers, State};

#[test]
fn hydrogen_ground_state_shape() {
    let spec = ProblemSpec::new(ProblemKind::Coulomb3D);
    let state = State::Bound(QuantumNumbers::for_n(&spec, 1).unwrap());
    let rs: Vec<f64> = (0..=40).map(|j| 0.25 * j as f64).collect();
    let wf = sample_wavefunction(&spec, &state, &rs, Method::Residue, &ContourConfig::default()).unwrap();
    // residue normalization is a complex constant
    let scale = wf.entries[0].psi / hydrogen_ground_state(0.0, 1.0);
    for e in &wf.entries {
        let want = scale * hydrogen_ground_state(e.coordinate, 1.0);
        assert!((e.psi - want).norm() <= 1e-12 * scale.norm());
    }
}

#[test]
fn spectrum_energies_quantize() {
    for spec in [
        ProblemSpec::new(ProblemKind::Sho2D).with_m(-2),
        ProblemSpec::new(ProblemKind::Coulomb2D).with_m(1),
        ProblemSpec::new(ProblemKind::Morse).with_v0(30.0),
    ] {
        for (qn, e) in spectrum_table(&spec, 6).unwrap() {
            assert_eq!(quantization_check(&spec, e).unwrap(), Some(qn), "{} n={}", spec.kind, qn.n);
        }
    }
}

#[test]
fn free_particle_routes_agree() {
    let spec = ProblemSpec::new(ProblemKind::Free2D).with_m(1);
    let grid: Vec<f64> = (1..=50).map(|j| 0.2 * j as f64).collect();
    let rep = cross_method_report(&spec, 2.0, &grid, &ContourConfig::default()).unwrap();
    for (a, b, d) in &rep.max_deviation {
        assert!(*d <= 1e-6, "{a} vs {b}: {d}");
    }
    assert!(rep.samples.iter().all(|s| s.errors.is_empty()));
}

#[test]
fn regime_guards() {
    let cfg = ContourConfig::default();
    let spec = ProblemSpec::new(ProblemKind::Coulomb3DCont);
    let err = sample_wavefunction(&spec, &State::Continuum { energy: -1.0 }, &[1.0], Method::RealIntegral, &cfg).unwrap_err();
    assert!(matches!(err, Error::RegimeMismatch { .. }));
    let err = sample_wavefunction(&spec, &State::Continuum { energy: 1.0 }, &[1.0], Method::MorseRay, &cfg).unwrap_err();
    assert!(matches!(err, Error::MethodRegimeMismatch { .. }));
    assert!(matches!(
        spectrum_table(&ProblemSpec::new(ProblemKind::Free3D), 3),
        Err(Error::NotBoundProblem(_))
    ));
}
