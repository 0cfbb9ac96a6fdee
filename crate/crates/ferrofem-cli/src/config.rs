//! Experiment specification: defaults, config-file parsing (flat `key=value`
//! or JSON), flag overrides, and a JSON round-trip emitter.

use anyhow::{anyhow, bail, Context, Result};
use ferrofem::Params;
use serde::{Deserialize, Serialize};

/// Serializable mirror of the model parameters (all default to 1, the value
/// used in every reported experiment).
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct ParamsSpec {
    pub rho: f64,
    pub kappa: f64,
    pub eta: f64,
    pub zeta: f64,
    pub eta_p: f64,
    pub lambda_p: f64,
    pub sigma: f64,
    pub tau: f64,
    pub chi0: f64,
    pub mu0: f64,
}

impl Default for ParamsSpec {
    fn default() -> Self {
        ParamsSpec {
            rho: 1.0,
            kappa: 1.0,
            eta: 1.0,
            zeta: 1.0,
            eta_p: 1.0,
            lambda_p: 1.0,
            sigma: 1.0,
            tau: 1.0,
            chi0: 1.0,
            mu0: 1.0,
        }
    }
}

impl From<ParamsSpec> for Params {
    fn from(p: ParamsSpec) -> Params {
        Params {
            rho: p.rho,
            kappa: p.kappa,
            eta: p.eta,
            zeta: p.zeta,
            eta_p: p.eta_p,
            lambda_p: p.lambda_p,
            sigma: p.sigma,
            tau: p.tau,
            chi0: p.chi0,
            mu0: p.mu0,
        }
    }
}
use std::fmt;
use std::path::{Path, PathBuf};
use std::str::FromStr;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Converge,
    Energy,
    Run,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Mode::Converge => "converge",
            Mode::Energy => "energy",
            Mode::Run => "run",
        };
        f.write_str(s)
    }
}

/// Time-step rule: the scheme's coupling of the step to the mesh, or one or
/// more explicit values (the energy study sweeps several).
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum DtRule {
    /// `Δt = 1/K` for each mesh in the list.
    Coupled(String),
    /// Explicit values, formatted as entered (`1/16` or `0.0625`).
    Values(Vec<String>),
}

impl DtRule {
    pub fn one_over_k() -> Self {
        DtRule::Coupled("1/K".to_string())
    }

    /// The concrete step sizes for a mesh resolution.
    pub fn resolve(&self, k: usize) -> Result<Vec<f64>> {
        match self {
            DtRule::Coupled(_) => Ok(vec![1.0 / k as f64]),
            DtRule::Values(vals) => vals.iter().map(|v| parse_fraction(v)).collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ExperimentSpec {
    pub mode: Mode,
    pub example: usize,
    pub k: Vec<usize>,
    pub dt: DtRule,
    pub t_end: f64,
    pub sweeps: usize,
    pub strict_energy: bool,
    pub solver_tol: f64,
    pub constrain_h: bool,
    pub out: PathBuf,
    pub params: ParamsSpec,
}

/// Unvalidated, partially filled spec: the merge target for config files and
/// command-line flags (flags win).
#[derive(Clone, Debug, Default)]
pub struct PartialSpec {
    pub example: Option<usize>,
    pub k: Option<Vec<usize>>,
    pub dt: Option<DtRule>,
    pub t_end: Option<f64>,
    pub sweeps: Option<usize>,
    pub strict_energy: Option<bool>,
    pub solver_tol: Option<f64>,
    pub constrain_h: Option<bool>,
    pub out: Option<PathBuf>,
    pub params: Vec<(String, f64)>,
}

impl PartialSpec {
    /// Later entries override earlier ones field by field.
    pub fn merge_over(mut self, base: PartialSpec) -> PartialSpec {
        self.example = self.example.or(base.example);
        self.k = self.k.or(base.k);
        self.dt = self.dt.or(base.dt);
        self.t_end = self.t_end.or(base.t_end);
        self.sweeps = self.sweeps.or(base.sweeps);
        self.strict_energy = self.strict_energy.or(base.strict_energy);
        self.solver_tol = self.solver_tol.or(base.solver_tol);
        self.constrain_h = self.constrain_h.or(base.constrain_h);
        self.out = self.out.or(base.out);
        let mut params = base.params;
        params.extend(self.params);
        self.params = params;
        self
    }

    /// Fills defaults for the given mode and validates the result.
    pub fn resolve(self, mode: Mode) -> Result<ExperimentSpec> {
        let example = self.example.unwrap_or(match mode {
            Mode::Energy => 3,
            _ => 1,
        });
        if !(1..=3).contains(&example) {
            bail!("example must be 1, 2 or 3, got {example}");
        }
        let k = self.k.unwrap_or_else(|| match mode {
            Mode::Converge => vec![4, 8, 16],
            Mode::Energy => vec![16],
            Mode::Run => vec![8],
        });
        if k.is_empty() {
            bail!("k list must be nonempty");
        }
        if k.windows(2).any(|w| w[0] >= w[1]) {
            bail!("k list must be strictly ascending, got {k:?}");
        }
        if let Some(&bad) = k.iter().find(|&&kk| kk == 0) {
            bail!("k must be positive, got {bad}");
        }
        let dt = self.dt.unwrap_or_else(|| match (mode, example) {
            (Mode::Energy, _) => {
                DtRule::Values(vec!["1/16".into(), "1/32".into(), "1/64".into()])
            }
            _ => DtRule::one_over_k(),
        });
        let t_end = self.t_end.unwrap_or(match (mode, example) {
            (_, 2) => 2.0,
            _ => 1.0,
        });
        if !(t_end > 0.0) {
            bail!("T must be positive, got {t_end}");
        }
        let spec = ExperimentSpec {
            mode,
            example,
            k,
            dt,
            t_end,
            sweeps: self.sweeps.unwrap_or(2),
            strict_energy: self.strict_energy.unwrap_or(false),
            solver_tol: self.solver_tol.unwrap_or(1e-10),
            constrain_h: self.constrain_h.unwrap_or(true),
            out: self.out.unwrap_or_else(|| PathBuf::from(".")),
            params: apply_params(ParamsSpec::default(), &self.params)?,
        };
        if spec.sweeps == 0 {
            bail!("sweeps must be at least 1");
        }
        if !(spec.solver_tol > 0.0) {
            bail!("solver-tol must be positive");
        }
        // Every (K, Δt) pair must tile [0, T] exactly.
        for &kk in &spec.k {
            for dt in spec.dt.resolve(kk)? {
                if !(dt > 0.0) {
                    bail!("dt must be positive, got {dt}");
                }
                let n = (spec.t_end / dt).round();
                if n < 1.0 || (n * dt - spec.t_end).abs() > 1e-9 * spec.t_end.max(1.0) {
                    bail!("T={} is not an integer multiple of dt={dt}", spec.t_end);
                }
            }
        }
        Ok(spec)
    }
}

fn apply_params(mut p: ParamsSpec, overrides: &[(String, f64)]) -> Result<ParamsSpec> {
    for (key, v) in overrides {
        match key.as_str() {
            "rho" => p.rho = *v,
            "kappa" => p.kappa = *v,
            "eta" => p.eta = *v,
            "zeta" => p.zeta = *v,
            "eta_p" => p.eta_p = *v,
            "lambda_p" => p.lambda_p = *v,
            "sigma" => p.sigma = *v,
            "tau" => p.tau = *v,
            "chi0" => p.chi0 = *v,
            "mu0" => p.mu0 = *v,
            _ => bail!("unknown parameter key: {key}"),
        }
        if !(*v > 0.0) {
            bail!("parameter {key} must be positive, got {v}");
        }
    }
    Ok(p)
}

/// Accepts `p/q` fractions and plain decimals.
pub fn parse_fraction(s: &str) -> Result<f64> {
    let s = s.trim();
    if let Some((num, den)) = s.split_once('/') {
        let num: f64 = num.trim().parse().with_context(|| format!("bad fraction: {s}"))?;
        let den: f64 = den.trim().parse().with_context(|| format!("bad fraction: {s}"))?;
        if den == 0.0 {
            bail!("zero denominator in {s}");
        }
        Ok(num / den)
    } else {
        s.parse().with_context(|| format!("bad number: {s}"))
    }
}

fn parse_list<T: FromStr>(s: &str, what: &str) -> Result<Vec<T>> {
    s.split(',')
        .map(|p| p.trim().parse::<T>().map_err(|_| anyhow!("bad {what} entry: {p}")))
        .collect()
}

pub fn parse_dt_rule(s: &str) -> Result<DtRule> {
    let t = s.trim();
    if t.eq_ignore_ascii_case("1/k") {
        return Ok(DtRule::one_over_k());
    }
    let vals: Vec<String> = t.split(',').map(|p| p.trim().to_string()).collect();
    for v in &vals {
        parse_fraction(v)?;
    }
    Ok(DtRule::Values(vals))
}

const PARAM_KEYS: [&str; 10] =
    ["rho", "kappa", "eta", "zeta", "eta_p", "lambda_p", "sigma", "tau", "chi0", "mu0"];

/// Reads a config file in either format. JSON objects use the same keys as
/// the flat form; the flat form is one `key = value` per line with `#`
/// comments.
pub fn read_config(path: &Path) -> Result<PartialSpec> {
    let text = std::fs::read_to_string(path)
        .with_context(|| format!("cannot read config {}", path.display()))?;
    if text.trim_start().starts_with('{') {
        parse_json_config(&text)
    } else {
        parse_flat_config(&text)
    }
}

/// Applies one `key = value` setting; shared by config files and flags.
pub fn set_key(spec: &mut PartialSpec, key: &str, value: &str) -> Result<()> {
    match key {
        "example" => spec.example = Some(value.parse().context("bad example")?),
        "k" => spec.k = Some(parse_list(value, "k")?),
        "dt" => spec.dt = Some(parse_dt_rule(value)?),
        "t_end" | "T" => spec.t_end = Some(parse_fraction(value)?),
        "sweeps" => spec.sweeps = Some(value.parse().context("bad sweeps")?),
        "strict_energy" => {
            spec.strict_energy = Some(value.parse().context("bad strict_energy")?)
        }
        "solver_tol" => spec.solver_tol = Some(parse_fraction(value)?),
        "constrain_h" => spec.constrain_h = Some(value.parse().context("bad constrain_h")?),
        "out" => spec.out = Some(PathBuf::from(value)),
        k if PARAM_KEYS.contains(&k) => {
            spec.params.push((k.to_string(), parse_fraction(value)?))
        }
        _ => bail!("unknown config key: {key}"),
    }
    Ok(())
}

fn parse_flat_config(text: &str) -> Result<PartialSpec> {
    let mut spec = PartialSpec::default();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (key, value) = line
            .split_once('=')
            .ok_or_else(|| anyhow!("line {}: expected key=value, got `{line}`", lineno + 1))?;
        set_key(&mut spec, key.trim(), value.trim())
            .with_context(|| format!("line {}", lineno + 1))?;
    }
    Ok(spec)
}

fn parse_json_config(text: &str) -> Result<PartialSpec> {
    let value: serde_json::Value = serde_json::from_str(text).context("bad JSON config")?;
    let obj = value.as_object().ok_or_else(|| anyhow!("JSON config must be an object"))?;
    let mut spec = PartialSpec::default();
    for (key, v) in obj {
        match (key.as_str(), v) {
            ("k", serde_json::Value::Array(a)) => {
                let mut ks = Vec::new();
                for e in a {
                    ks.push(
                        e.as_u64().ok_or_else(|| anyhow!("bad k entry: {e}"))? as usize
                    );
                }
                spec.k = Some(ks);
            }
            ("dt", serde_json::Value::Array(a)) => {
                let vals: Vec<String> = a
                    .iter()
                    .map(|e| match e {
                        serde_json::Value::String(s) => Ok(s.clone()),
                        serde_json::Value::Number(n) => Ok(n.to_string()),
                        _ => Err(anyhow!("bad dt entry: {e}")),
                    })
                    .collect::<Result<_>>()?;
                for val in &vals {
                    parse_fraction(val)?;
                }
                spec.dt = Some(DtRule::Values(vals));
            }
            (_, serde_json::Value::String(s)) => set_key(&mut spec, key, s)?,
            (_, serde_json::Value::Number(n)) => set_key(&mut spec, key, &n.to_string())?,
            (_, serde_json::Value::Bool(b)) => {
                set_key(&mut spec, key, if *b { "true" } else { "false" })?
            }
            _ => bail!("unsupported value for config key {key}: {v}"),
        }
    }
    Ok(spec)
}

impl ExperimentSpec {
    /// JSON form that `read_config` + `resolve` map back to the same spec.
    pub fn emit(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("spec serializes")
    }
}

/// Re-reads an emitted spec (the round-trip property of the config format).
#[cfg_attr(not(test), allow(dead_code))]
pub fn parse_emitted(value: &serde_json::Value) -> Result<ExperimentSpec> {
    Ok(serde_json::from_value(value.clone())?)
}
