use std::fmt;
use std::io::Read;
use std::path::Path;

use serde_json::{json, Value};

use resonant_core::json::{
    linear_from_json, linear_to_json, multi_index_to_json, sigma_from_json, sigma_to_json, weights_to_json,
};
use resonant_core::text::{parse_poly_map, parse_rational};
use resonant_core::{
    admissibility_pattern, check_theorem_instance, default_pool, find_violation, quasi_resonance_estimate,
    solve_conjugacy, tensor_block_pattern, Error, LinearMap, TriangularResonantMap, WeightVector,
};

#[derive(Debug)]
pub enum CliError {
    /// A library error. `Parse` is reported as a usage error.
    Library(Error),
    Io(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Library(Error::Parse(_)) | CliError::Io(_) => 2,
            CliError::Library(_) => 1,
        }
    }

    pub fn payload(&self) -> Option<Value> {
        match self {
            CliError::Library(e) => Some(json!({ "error": e.name(), "message": e.to_string() })),
            CliError::Io(_) => None,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Library(e) => write!(f, "{}: {e}", e.name()),
            CliError::Io(msg) => write!(f, "{msg}"),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Library(e)
    }
}

type CliResult = Result<Value, CliError>;

fn read_input(path: &Path) -> Result<String, CliError> {
    if path == Path::new("-") {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| CliError::Io(format!("reading stdin: {e}")))?;
        return Ok(buf);
    }
    std::fs::read_to_string(path).map_err(|e| CliError::Io(format!("reading {}: {e}", path.display())))
}

fn read_json(path: &Path) -> Result<Value, CliError> {
    let text = read_input(path)?;
    serde_json::from_str(&text).map_err(|e| CliError::Library(Error::Parse(format!("{}: {e}", path.display()))))
}

fn read_sigma(path: &Path) -> Result<TriangularResonantMap, CliError> {
    Ok(sigma_from_json(&read_json(path)?)?)
}

fn read_linear(path: &Path) -> Result<LinearMap, CliError> {
    Ok(linear_from_json(&read_json(path)?)?)
}

pub fn resonance(raw: &[i64], index: Option<usize>) -> CliResult {
    let m = WeightVector::new(raw)?;
    let profile = m.resonance_profile();
    let indices: Vec<usize> = match index {
        Some(i) => {
            m.weight(i)?;
            vec![i]
        }
        None => (1..=m.dim()).collect(),
    };
    let entries: Vec<Value> = indices
        .into_iter()
        .map(|i| {
            json!({
                "index": i,
                "set": profile.sets[i - 1].iter().map(multi_index_to_json).collect::<Vec<_>>(),
                "mu_i": profile.orders[i - 1],
            })
        })
        .collect();
    Ok(json!({ "weights": weights_to_json(&m), "resonance": entries, "mu": profile.order }))
}

pub fn partition(raw: &[i64]) -> CliResult {
    let m = WeightVector::new(raw)?;
    Ok(json!({ "boundaries": m.block_partition().boundaries() }))
}

pub fn sigma_random(raw: &[i64], seed: u64, pool: Option<&str>) -> CliResult {
    let m = WeightVector::new(raw)?;
    let pool = match pool {
        None => default_pool(),
        Some(s) if s.trim().is_empty() => Vec::new(),
        Some(s) => s.split(',').map(parse_rational).collect::<Result<Vec<_>, _>>()?,
    };
    let sigma = TriangularResonantMap::random(&m, seed, &pool)?;
    Ok(sigma_to_json(&sigma))
}

pub fn sigma_invert(path: &Path) -> CliResult {
    Ok(sigma_to_json(&read_sigma(path)?.invert()))
}

pub fn conjugate(raw: &[i64], sigma: &Path, linear: &Path) -> CliResult {
    let m = WeightVector::new(raw)?;
    let sigma = read_sigma(sigma)?;
    let l = read_linear(linear)?;
    let report = check_theorem_instance(&m, &sigma, &l)?;
    Ok(json!({
        "weights": weights_to_json(&m),
        "degree": report.degree,
        "bound_mu": report.bound_mu,
        "within_bound": report.within_bound,
        "block_diagonal": report.block_diagonal,
        "component_resonant": report.component_resonant,
        "result": report.result.components().iter().map(ToString::to_string).collect::<Vec<_>>(),
    }))
}

pub fn violate(raw: &[i64], linear: &Path, trials: u64, seed: u64) -> CliResult {
    let m = WeightVector::new(raw)?;
    let l = read_linear(linear)?;
    Ok(match find_violation(&m, &l, trials, seed)? {
        Some(w) => json!({
            "found": true,
            "trial": w.trial,
            "degree": w.degree,
            "bound_mu": w.bound_mu,
            "sigma": sigma_to_json(&w.sigma),
        }),
        None => json!({ "found": false }),
    })
}

pub fn quasi_order(raw: &[i64], trials: u64, seed: u64) -> CliResult {
    let m = WeightVector::new(raw)?;
    let e = quasi_resonance_estimate(&m, trials, seed)?;
    Ok(json!({ "observed_max": e.observed_max, "cap": e.cap }))
}

pub fn solve(raw: &[i64], path: &Path) -> CliResult {
    let m = WeightVector::new(raw)?;
    let f = parse_poly_map(&read_input(path)?)?;
    let sol = solve_conjugacy(&f, &m)?;
    Ok(json!({
        "sigma": sigma_to_json(&sol.sigma),
        "linear": linear_to_json(&sol.linear),
        "residual_zero": sol.residual_zero,
        "free_parameters": sol.free_parameters,
        "unique": sol.free_parameters == 0,
    }))
}

pub fn bergman(raw: &[i64]) -> CliResult {
    let m = WeightVector::new(raw)?;
    let admissible: Vec<Vec<Vec<Value>>> = admissibility_pattern(&m)
        .entries
        .iter()
        .map(|row| {
            row.iter()
                .map(|set| set.iter().map(multi_index_to_json).collect())
                .collect()
        })
        .collect();
    Ok(json!({
        "weights": weights_to_json(&m),
        "boundaries": m.block_partition().boundaries(),
        "admissible": admissible,
        "block_pattern": tensor_block_pattern(&m).allowed,
    }))
}
