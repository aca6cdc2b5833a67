//! Run configuration: defaults, config-file parsing and flag precedence.
//!
//! Precedence is flags > config file > defaults. The config file is a flat
//! `key = value` text format with `#` comments; list values are
//! comma-separated. Unknown keys are rejected so typos do not silently fall
//! back to defaults.

use std::path::{Path, PathBuf};

use crate::CommonArgs;

pub const DEFAULT_A: f64 = -1.0;
pub const DEFAULT_B: f64 = 1.0;
pub const DEFAULT_EPS_RES: f64 = 1e-12;

#[derive(Debug)]
pub enum CliError {
    /// Invalid invocation or input data (exit code 1).
    Usage(String),
    /// Numeric failure or tolerance breach (exit code 2).
    Numeric(String),
}

impl CliError {
    pub fn usage(message: impl Into<String>) -> Self {
        CliError::Usage(message.into())
    }

    pub fn numeric(message: impl Into<String>) -> Self {
        CliError::Numeric(message.into())
    }
}

impl From<fourier_quad::Error> for CliError {
    fn from(err: fourier_quad::Error) -> Self {
        use fourier_quad::Error::*;
        match err {
            InvalidInterval { .. }
            | NodeCountTooSmall { .. }
            | InvalidFrequency { .. }
            | InvalidResonanceTolerance { .. }
            | UnknownIntegrand { .. }
            | WindowTooSmall { .. }
            | EmptyGrid { .. }
            | NodeIndexOutOfRange { .. }
            | InvalidStepSize { .. } => CliError::Usage(err.to_string()),
            UnstableRoot { .. }
            | WrongRegime { .. }
            | NonFiniteWeight { .. }
            | ZeroFrequencyRhs
            | SingularSystem { .. }
            | IncomparableSets { .. }
            | NonFiniteSample { .. } => CliError::Numeric(err.to_string()),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum OutputFormat {
    Csv,
    Json,
}

/// Fully resolved configuration for one command run.
#[derive(Debug, Clone)]
pub struct RunConfig {
    pub a: f64,
    pub b: f64,
    pub ns: Option<Vec<u32>>,
    pub omegas: Option<Vec<f64>>,
    pub eps_res: f64,
    pub format: Option<OutputFormat>,
    pub out: Option<PathBuf>,
    pub integrand: Option<String>,
    pub samples: Option<PathBuf>,
    pub paper_style: bool,
}

#[derive(Debug, Default)]
struct FileConfig {
    a: Option<f64>,
    b: Option<f64>,
    ns: Option<Vec<u32>>,
    omegas: Option<Vec<f64>>,
    eps_res: Option<f64>,
    format: Option<OutputFormat>,
    out: Option<PathBuf>,
    integrand: Option<String>,
    samples: Option<PathBuf>,
    paper_style: Option<bool>,
}

fn parse_file_config(path: &Path) -> Result<FileConfig, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|err| CliError::usage(format!("cannot read config {}: {err}", path.display())))?;
    let mut config = FileConfig::default();
    for (line_no, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (key, value) = line.split_once('=').ok_or_else(|| {
            CliError::usage(format!(
                "config {}:{}: expected `key = value`, got `{raw}`",
                path.display(),
                line_no + 1
            ))
        })?;
        let key = key.trim();
        let value = value.trim();
        let context = |what: &str| {
            CliError::usage(format!(
                "config {}:{}: invalid {what} `{value}`",
                path.display(),
                line_no + 1
            ))
        };
        match key {
            "a" => config.a = Some(value.parse().map_err(|_| context("number"))?),
            "b" => config.b = Some(value.parse().map_err(|_| context("number"))?),
            "n" | "N" => {
                let ns = value
                    .split(',')
                    .map(|s| s.trim().parse::<u32>())
                    .collect::<Result<Vec<_>, _>>()
                    .map_err(|_| context("node-count list"))?;
                config.ns = Some(ns);
            }
            "omega" => {
                let omegas = value
                    .split(',')
                    .map(|s| s.trim().parse::<f64>())
                    .collect::<Result<Vec<_>, _>>()
                    .map_err(|_| context("frequency list"))?;
                config.omegas = Some(omegas);
            }
            "eps_res" => config.eps_res = Some(value.parse().map_err(|_| context("number"))?),
            "format" => {
                config.format = Some(match value {
                    "csv" => OutputFormat::Csv,
                    "json" => OutputFormat::Json,
                    _ => return Err(context("format (csv or json)")),
                })
            }
            "out" => config.out = Some(PathBuf::from(value)),
            "integrand" => config.integrand = Some(value.to_string()),
            "samples" => config.samples = Some(PathBuf::from(value)),
            "paper_style" => {
                config.paper_style = Some(value.parse().map_err(|_| context("boolean"))?)
            }
            other => {
                return Err(CliError::usage(format!(
                    "config {}:{}: unknown key `{other}`",
                    path.display(),
                    line_no + 1
                )))
            }
        }
    }
    Ok(config)
}

/// Merges flags over the config file over the defaults and validates the
/// resulting interval and tolerance.
pub fn resolve(
    common: &CommonArgs,
    integrand: Option<String>,
    samples: Option<PathBuf>,
    paper_style: bool,
) -> Result<RunConfig, CliError> {
    let file = match &common.config {
        Some(path) => parse_file_config(path)?,
        None => FileConfig::default(),
    };
    let config = RunConfig {
        a: common.a.or(file.a).unwrap_or(DEFAULT_A),
        b: common.b.or(file.b).unwrap_or(DEFAULT_B),
        ns: common.n.clone().or(file.ns),
        omegas: common.omega.clone().or(file.omegas),
        eps_res: common.eps_res.or(file.eps_res).unwrap_or(DEFAULT_EPS_RES),
        format: common.format.or(file.format),
        out: common.out.clone().or(file.out),
        integrand: integrand.or(file.integrand),
        samples: samples.or(file.samples),
        paper_style: paper_style || file.paper_style.unwrap_or(false),
    };
    if !(config.a.is_finite() && config.b.is_finite() && config.a < config.b) {
        return Err(CliError::usage(format!(
            "interval requires finite a < b, got [{}, {}]",
            config.a, config.b
        )));
    }
    if !(config.eps_res > 0.0 && config.eps_res <= 1e-6) {
        return Err(CliError::usage(format!(
            "eps-res must lie in (0, 1e-6], got {}",
            config.eps_res
        )));
    }
    Ok(config)
}

impl RunConfig {
    /// A single node count, for the commands that do not accept grids.
    pub fn scalar_n(&self) -> Result<u32, CliError> {
        match self.ns.as_deref() {
            Some([n]) => Ok(*n),
            Some(_) => Err(CliError::usage("this command takes a single --N value")),
            None => Err(CliError::usage("missing required option --N")),
        }
    }

    /// A single frequency, for the commands that do not accept grids.
    pub fn scalar_omega(&self) -> Result<f64, CliError> {
        match self.omegas.as_deref() {
            Some([omega]) => Ok(*omega),
            Some(_) => Err(CliError::usage("this command takes a single --omega value")),
            None => Err(CliError::usage("missing required option --omega")),
        }
    }

    /// Writes `content` to `--out` or stdout.
    pub fn emit(&self, content: &str) -> Result<(), CliError> {
        match &self.out {
            Some(path) => std::fs::write(path, content)
                .map_err(|err| CliError::usage(format!("cannot write {}: {err}", path.display()))),
            None => {
                print!("{content}");
                Ok(())
            }
        }
    }
}
