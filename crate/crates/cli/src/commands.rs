//! The three subcommands, each producing a `Table`.

use laplace_qm::contour::sample_wavefunction;
use laplace_qm::validation::{cross_method_report, spectrum_table};
use laplace_qm::{Error, Method, ProblemKind, QuantumNumbers, State};

use crate::config::{coordinates, ConfigError, RunConfig};
use crate::table::{sci, Table};

/// Why a command failed, with its process exit code.
#[derive(Debug, Clone, PartialEq)]
pub enum Failure {
    /// Exit 2.
    Config(String),
    /// Exit 3.
    Evaluation(String),
}

impl Failure {
    pub fn exit_code(&self) -> u8 {
        match self {
            Failure::Config(_) => 2,
            Failure::Evaluation(_) => 3,
        }
    }

    pub fn message(&self) -> &str {
        match self {
            Failure::Config(m) | Failure::Evaluation(m) => m,
        }
    }
}

impl From<ConfigError> for Failure {
    fn from(e: ConfigError) -> Self {
        Failure::Config(e.0)
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::InvalidParameter(_)
            | Error::RegimeMismatch { .. }
            | Error::NotBoundProblem(_)
            | Error::InvalidQuantumNumbers(_)
            | Error::DomainError(_)
            | Error::MethodRegimeMismatch { .. }
            | Error::DegenerateLambda
            | Error::InvalidB(_) => Failure::Config(e.to_string()),
            _ => Failure::Evaluation(e.to_string()),
        }
    }
}

pub fn run(cfg: &RunConfig) -> Result<Table, Failure> {
    match cfg.command {
        crate::config::Command::Spectrum => spectrum(cfg),
        crate::config::Command::Wavefunction => wavefunction(cfg),
        crate::config::Command::Validate => validate(cfg),
    }
}

fn problem_footer(cfg: &RunConfig, t: &mut Table) {
    let s = &cfg.spec;
    t.footer.push(format!("kind={}", s.kind));
    let params = match s.kind {
        ProblemKind::Morse | ProblemKind::MorseCont => format!("mu={} a={} V0={}", s.mu, s.morse_a, s.morse_v0),
        ProblemKind::Coulomb2D | ProblemKind::Coulomb3D | ProblemKind::Coulomb2DCont | ProblemKind::Coulomb3DCont => {
            format!("mu={} a0={} m={} l={}", s.mu, s.a0, s.m, s.l)
        }
        ProblemKind::Free2D | ProblemKind::Free3D => format!("mu={} m={} l={}", s.mu, s.m, s.l),
        _ => format!("mu={} omega={} m={} l={}", s.mu, s.omega, s.m, s.l),
    };
    t.footer.push(format!("params={params}"));
}

pub fn spectrum(cfg: &RunConfig) -> Result<Table, Failure> {
    let rows = spectrum_table(&cfg.spec, cfg.n_max)?;
    let mut t = Table::new(&["n", "N", "E"]);
    for (qn, e) in rows {
        t.rows.push(vec![qn.n.to_string(), qn.big_n.to_string(), sci(e)]);
    }
    problem_footer(cfg, &mut t);
    t.footer.push(format!("n_max={}", cfg.n_max));
    Ok(t)
}

fn lowest_n(cfg: &RunConfig) -> u32 {
    match cfg.spec.kind {
        ProblemKind::Coulomb2D => cfg.spec.m.unsigned_abs() + 1,
        ProblemKind::Coulomb3D => cfg.spec.l + 1,
        _ => 0,
    }
}

pub fn wavefunction(cfg: &RunConfig) -> Result<Table, Failure> {
    let grid = cfg.grid.as_ref().expect("checked by RunConfig");
    let state = match cfg.energy {
        Some(energy) => State::Continuum { energy },
        None => State::Bound(QuantumNumbers::for_n(&cfg.spec, cfg.n.unwrap_or_else(|| lowest_n(cfg)))?),
    };
    let energy = laplace_qm::state_energy(&cfg.spec, &state)?;
    let coords = coordinates(&cfg.spec, energy, grid)?;
    let wf = sample_wavefunction(&cfg.spec, &state, &coords, cfg.method, &cfg.contour).map_err(|e| match e {
        Error::PointFailure { .. } => Failure::Evaluation(e.to_string()),
        e => e.into(),
    })?;
    let mut t = Table::new(&["coordinate", "xi", "re_phi", "im_phi", "re_psi", "im_psi", "method"]);
    for e in &wf.entries {
        t.rows.push(vec![
            sci(e.coordinate),
            sci(e.xi),
            sci(e.phi.re),
            sci(e.phi.im),
            sci(e.psi.re),
            sci(e.psi.im),
            wf.method.to_string(),
        ]);
    }
    problem_footer(cfg, &mut t);
    if let State::Bound(qn) = state {
        t.footer.push(format!("n={} N={}", qn.n, qn.big_n));
    }
    t.footer.push(format!("energy={}", sci(energy)));
    if let Some(a) = &wf.angular {
        t.footer.push(format!("angular={a}"));
    }
    if cfg.method == Method::Circle {
        t.footer.push(format!("radius={} steps={}", cfg.contour.radius, cfg.contour.steps));
    }
    t.footer.push(format!("grid={}", grid.describe()));
    let warnings: Vec<String> = wf.precision_warnings.iter().map(|i| i.to_string()).collect();
    t.footer.push(format!("precision_loss={}", if warnings.is_empty() { "none".to_string() } else { warnings.join(" ") }));
    Ok(t)
}

pub fn validate(cfg: &RunConfig) -> Result<Table, Failure> {
    let grid = cfg.grid.as_ref().expect("checked by RunConfig").points();
    let energy = cfg.energy.expect("checked by RunConfig");
    let rep = cross_method_report(&cfg.spec, energy, &grid, &cfg.contour)?;
    for s in &rep.samples {
        if s.values.iter().all(Option::is_none) {
            let (index, why) = s.errors.first().cloned().unwrap_or((0, "no value".to_string()));
            return Err(Failure::Evaluation(format!("method {} failed at every point; first at point {index}: {why}", s.method)));
        }
    }
    let mut header = vec!["xi".to_string()];
    for s in &rep.samples {
        header.push(format!("re_{}", s.method));
        header.push(format!("im_{}", s.method));
    }
    for d in &rep.deviations {
        header.push(format!("dev_{}_{}", d.method, d.against));
    }
    let mut t = Table { header, ..Table::default() };
    for (i, &xi) in grid.iter().enumerate() {
        let mut row = vec![sci(xi)];
        for s in &rep.samples {
            let v = s.values[i];
            row.push(sci(v.map_or(f64::NAN, |v| v.re)));
            row.push(sci(v.map_or(f64::NAN, |v| v.im)));
        }
        for d in &rep.deviations {
            row.push(sci(d.per_point[i].unwrap_or(f64::NAN)));
        }
        t.rows.push(row);
    }
    problem_footer(cfg, &mut t);
    t.footer.push(format!("energy={}", sci(energy)));
    t.footer.push(format!("radius={} steps={}", cfg.contour.radius, cfg.contour.steps));
    t.footer.push(format!("grid={}", cfg.grid.as_ref().unwrap().describe()));
    for (a, b, d) in &rep.max_deviation {
        t.footer.push(format!("max_dev_{a}_{b}={}", sci(*d)));
    }
    for (m, onset) in &rep.failure_onset {
        t.footer.push(format!("onset_{m}={}", onset.map_or("none".to_string(), sci)));
    }
    for s in &rep.samples {
        t.footer.push(format!("failed_{}={}", s.method, s.errors.len()));
    }
    Ok(t)
}
