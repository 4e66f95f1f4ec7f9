//! Run configuration from a flat `key=value` file and command-line overrides.

use std::collections::BTreeMap;
use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use laplace_qm::contour::{method_allowed, ContourConfig};
use laplace_qm::{coordinate_map, CoordinateMap, Method, ProblemKind, ProblemSpec};

/// Keys a config file or `--param` may set.
pub const KEYS: &[&str] = &[
    "kind", "method", "grid", "grid_space", "radius", "steps", "tol", "out", "mu", "omega", "a0", "a", "V0", "m", "l",
    "n", "n_max", "E",
];

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Command {
    Spectrum,
    Wavefunction,
    Validate,
}

impl FromStr for Command {
    type Err = ConfigError;

    fn from_str(s: &str) -> Result<Self, ConfigError> {
        match s {
            "spectrum" => Ok(Command::Spectrum),
            "wavefunction" => Ok(Command::Wavefunction),
            "validate" => Ok(Command::Validate),
            _ => Err(ConfigError(format!("unknown command '{s}'"))),
        }
    }
}

/// Invalid configuration; reported on one line with exit code 2.
#[derive(Debug, Clone, PartialEq)]
pub struct ConfigError(pub String);

impl fmt::Display for ConfigError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for ConfigError {}

fn bad<T>(msg: impl Into<String>) -> Result<T, ConfigError> {
    Err(ConfigError(msg.into()))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GridSpace {
    Coordinate,
    Xi,
}

/// `count` evenly spaced points from `min` to `max`, both included.
#[derive(Debug, Clone, PartialEq)]
pub struct GridSpec {
    pub min: f64,
    pub max: f64,
    pub count: usize,
    pub space: GridSpace,
}

impl GridSpec {
    pub fn parse(s: &str, space: GridSpace) -> Result<Self, ConfigError> {
        let parts: Vec<&str> = s.split(',').map(str::trim).collect();
        if parts.len() != 3 {
            return bad(format!("grid must be min,max,count, got '{s}'"));
        }
        let min: f64 = parse_num("grid min", parts[0])?;
        let max: f64 = parse_num("grid max", parts[1])?;
        let count: usize = parse_num("grid count", parts[2])?;
        if count == 0 {
            return bad("grid is empty (count = 0)");
        }
        if count < 2 {
            return bad(format!("grid count must be at least 2, got {count}"));
        }
        if !(min.is_finite() && max.is_finite() && min < max) {
            return bad(format!("grid needs finite min < max, got {min},{max}"));
        }
        Ok(Self { min, max, count, space })
    }

    pub fn points(&self) -> Vec<f64> {
        let last = (self.count - 1) as f64;
        (0..self.count)
            .map(|i| if i + 1 == self.count { self.max } else { self.min + (self.max - self.min) * (i as f64 / last) })
            .collect()
    }

    /// Text that `parse` turns back into the same grid.
    pub fn describe(&self) -> String {
        format!("{},{},{}", self.min, self.max, self.count)
    }
}

fn parse_num<T: FromStr>(what: &str, s: &str) -> Result<T, ConfigError> {
    s.trim().parse().map_err(|_| ConfigError(format!("{what}: cannot parse '{s}'")))
}

/// Reads the flat format: one `key=value` per line, `#` comments, blank lines ignored.
pub fn parse_flat(text: &str) -> Result<BTreeMap<String, String>, ConfigError> {
    let mut out = BTreeMap::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (k, v) = split_pair(line).map_err(|e| ConfigError(format!("line {}: {e}", i + 1)))?;
        out.insert(k, v);
    }
    Ok(out)
}

pub fn split_pair(s: &str) -> Result<(String, String), ConfigError> {
    match s.split_once('=') {
        Some((k, v)) if !k.trim().is_empty() => {
            let k = k.trim();
            if !KEYS.contains(&k) {
                return bad(format!("unknown key '{k}'"));
            }
            Ok((k.to_string(), v.trim().to_string()))
        }
        _ => bad(format!("expected key=value, got '{s}'")),
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub command: Command,
    pub spec: ProblemSpec,
    pub method: Method,
    pub grid: Option<GridSpec>,
    pub contour: ContourConfig,
    pub out: Option<PathBuf>,
    /// Principal quantum number of a bound state.
    pub n: Option<u32>,
    pub energy: Option<f64>,
    pub n_max: u32,
}

fn default_method(kind: ProblemKind) -> Method {
    if kind.is_bound() {
        Method::Residue
    } else if kind == ProblemKind::MorseCont {
        Method::MorseRay
    } else {
        Method::RealIntegral
    }
}

impl RunConfig {
    /// Builds and checks a configuration from merged key-value pairs.
    pub fn from_map(command: Command, map: &BTreeMap<String, String>) -> Result<Self, ConfigError> {
        let get = |k: &str| map.get(k).map(String::as_str);
        let kind: ProblemKind = match get("kind") {
            Some(k) => k.parse().map_err(|e: laplace_qm::Error| ConfigError(e.to_string()))?,
            None => return bad("missing --kind"),
        };
        let mut spec = ProblemSpec::new(kind);
        if let Some(v) = get("mu") {
            spec.mu = parse_num("mu", v)?;
        }
        if let Some(v) = get("omega") {
            spec.omega = parse_num("omega", v)?;
        }
        if let Some(v) = get("a0") {
            spec.a0 = parse_num("a0", v)?;
        }
        if let Some(v) = get("a") {
            spec.morse_a = parse_num("a", v)?;
        }
        if let Some(v) = get("V0") {
            spec.morse_v0 = parse_num("V0", v)?;
        }
        if let Some(v) = get("m") {
            spec.m = parse_num("m", v)?;
        }
        if let Some(v) = get("l") {
            spec.l = parse_num("l", v)?;
        }
        spec.validate().map_err(|e| ConfigError(e.to_string()))?;

        let method = match get("method") {
            Some(m) => m.parse().map_err(|e: laplace_qm::Error| ConfigError(e.to_string()))?,
            None => default_method(kind),
        };
        let mut contour = ContourConfig::default();
        if let Some(v) = get("radius") {
            contour.radius = parse_num("radius", v)?;
        }
        if let Some(v) = get("steps") {
            contour.steps = parse_num("steps", v)?;
        }
        if let Some(v) = get("tol") {
            contour.tol = parse_num("tol", v)?;
            if !(contour.tol > 0.0) {
                return bad(format!("tol must be positive, got {}", contour.tol));
            }
        }
        let space = match get("grid_space") {
            None | Some("coordinate") => GridSpace::Coordinate,
            Some("xi") => GridSpace::Xi,
            Some(s) => return bad(format!("grid_space must be coordinate or xi, got '{s}'")),
        };
        let grid = get("grid").map(|g| GridSpec::parse(g, space)).transpose()?;
        let cfg = Self {
            command,
            spec,
            method,
            grid,
            contour,
            out: get("out").map(PathBuf::from),
            n: get("n").map(|v| parse_num("n", v)).transpose()?,
            energy: get("E").map(|v| parse_num("E", v)).transpose()?,
            n_max: get("n_max").map(|v| parse_num("n_max", v)).transpose()?.unwrap_or(5),
        };
        cfg.check()?;
        Ok(cfg)
    }

    fn check(&self) -> Result<(), ConfigError> {
        let kind = self.spec.kind;
        let uses_circle = match self.command {
            Command::Spectrum => {
                if !kind.is_bound() {
                    return bad(format!("{kind} is not a bound problem"));
                }
                return Ok(());
            }
            Command::Wavefunction => {
                if !method_allowed(kind, self.method) {
                    return bad(format!("method {} cannot be used for {kind}", self.method));
                }
                if kind.is_bound() && self.energy.is_some() {
                    return bad(format!("{kind} is a bound problem; give n, not E"));
                }
                if !kind.is_bound() && self.energy.is_none() {
                    return bad(format!("{kind} needs an energy E"));
                }
                self.method == Method::Circle
            }
            Command::Validate => {
                if !ProblemKind::CONTINUUM_DOG_BONE.contains(&kind) {
                    return bad(format!("validate needs free2d, free3d, coulomb2d_cont or coulomb3d_cont, got {kind}"));
                }
                if self.energy.is_none() {
                    return bad(format!("{kind} needs an energy E"));
                }
                if self.grid.as_ref().is_some_and(|g| g.min < 0.0) {
                    return bad("validate grid is in xi and must be nonnegative");
                }
                true
            }
        };
        if self.grid.is_none() {
            return bad("missing --grid min,max,count");
        }
        if uses_circle && !(self.contour.radius > 1.0) {
            return bad(format!("circle radius must exceed 1, got {}", self.contour.radius));
        }
        if uses_circle && self.contour.steps < 1000 {
            return bad(format!("circle needs at least 1000 steps, got {}", self.contour.steps));
        }
        Ok(())
    }
}

/// Coordinate whose `ξ` is `xi` under `map`.
pub fn coordinate_of(map: &CoordinateMap, xi: f64) -> Result<f64, ConfigError> {
    match *map {
        CoordinateMap::Quadratic { scale } if xi >= 0.0 => Ok((xi / scale).sqrt()),
        CoordinateMap::Linear { scale } => Ok(xi / scale),
        CoordinateMap::Exponential { prefactor, rate } if xi > 0.0 => Ok(-(xi / prefactor).ln() / rate),
        _ => bad(format!("xi = {xi} is outside the range of the coordinate map")),
    }
}

/// Grid coordinates, converting from `ξ` when the grid is given in `ξ`.
pub fn coordinates(spec: &ProblemSpec, energy: f64, grid: &GridSpec) -> Result<Vec<f64>, ConfigError> {
    let points = grid.points();
    match grid.space {
        GridSpace::Coordinate => Ok(points),
        GridSpace::Xi => {
            let map = coordinate_map(spec, energy);
            points.into_iter().map(|xi| coordinate_of(&map, xi)).collect()
        }
    }
}
