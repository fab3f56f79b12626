//! Command-line flags, the optional key-value config file, and their merge.
//!
//! The config file is TOML restricted to top-level `key = value` pairs with
//! the same names as the long flags (dashes become underscores). Flags win
//! over the file.

use std::f64::consts::PI;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use entransfer::Tolerances;
use serde::Deserialize;

use crate::error::CliError;
use crate::table::Format;

#[derive(Debug, Parser)]
#[command(name = "entransfer", version, about = "Feasibility of entanglement transfer between pure two-qubit states")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Key-value config file; flags override its entries.
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,

    /// Acceptor angle.
    #[arg(long, global = true, allow_hyphen_values = true)]
    pub alpha: Option<String>,

    /// Donor angle.
    #[arg(long, global = true, allow_hyphen_values = true)]
    pub beta: Option<String>,

    /// Decrease of the donor angle.
    #[arg(long, global = true, allow_hyphen_values = true)]
    pub dbeta: Option<String>,

    /// Read angles as multiples of pi; `1/5` means pi/5.
    #[arg(long, global = true)]
    pub pi_fraction: bool,

    /// Points per sweep axis.
    #[arg(long, global = true)]
    pub grid_points: Option<usize>,

    /// Angle bracket width for all bisections.
    #[arg(long, global = true)]
    pub tol: Option<f64>,

    /// Admissible entropy residual of the transfer balance.
    #[arg(long, global = true)]
    pub entropy_tol: Option<f64>,

    /// Copy count for `asymptotic`.
    #[arg(long, global = true)]
    pub n: Option<u64>,

    /// Output file; standard output when absent.
    #[arg(long, short, global = true)]
    pub output: Option<PathBuf>,

    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Subcommand)]
pub enum Command {
    /// Reliable and catalytic feasibility at one point.
    Feasible,
    /// f1, f2, f3 at one point, or swept over alpha when --alpha is absent.
    Fslacks,
    /// Critical donor angle for a given --dbeta.
    BetaC,
    /// Catalytic window for --beta and --dbeta.
    Region,
    /// Maximum success probability at one point, or swept over alpha.
    Pmax,
    /// Many-copy accounting.
    Asymptotic,
    /// Figure data presets.
    Sweep {
        #[arg(long, value_enum)]
        preset: Option<Preset>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Preset {
    /// f1, f2, f3 against alpha; dbeta = 0.01, beta in {pi/10, 0.5, pi/5}.
    Fig1,
    /// beta_c against dbeta.
    Fig2,
    /// Root pairs against beta for dbeta in {0.2, 0.1, 0.01, 0.001}.
    Fig3,
    /// p_max against alpha; dbeta = 0.01, beta = pi/10.
    Fig4,
}

#[derive(Debug, Clone, PartialEq, Deserialize)]
#[serde(untagged)]
pub enum AngleValue {
    Number(f64),
    Text(String),
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FileConfig {
    pub alpha: Option<AngleValue>,
    pub beta: Option<AngleValue>,
    pub dbeta: Option<AngleValue>,
    pub pi_fraction: Option<bool>,
    pub grid_points: Option<usize>,
    pub tol: Option<f64>,
    pub entropy_tol: Option<f64>,
    pub n: Option<u64>,
    pub output: Option<PathBuf>,
    pub format: Option<Format>,
    pub preset: Option<Preset>,
}

impl FileConfig {
    pub fn load(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::Usage(format!("cannot read config {}: {e}", path.display())))?;
        Self::parse(&text)
    }

    pub fn parse(text: &str) -> Result<Self, CliError> {
        Ok(toml::from_str(text)?)
    }
}

/// Fully resolved run configuration.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepConfig {
    pub command: Command,
    pub preset: Option<Preset>,
    pub alpha: Option<f64>,
    pub beta: Option<f64>,
    pub dbeta: Option<f64>,
    pub grid_points: Option<usize>,
    pub tol: Tolerances,
    pub n: u64,
    pub output: Option<PathBuf>,
    pub format: Format,
}

impl SweepConfig {
    pub fn resolve(cli: Cli) -> Result<Self, CliError> {
        let file = match &cli.config {
            Some(path) => FileConfig::load(path)?,
            None => FileConfig::default(),
        };
        Self::merge(cli, file)
    }

    pub fn merge(cli: Cli, file: FileConfig) -> Result<Self, CliError> {
        let pi_fraction = cli.pi_fraction || file.pi_fraction.unwrap_or(false);
        let angle = |flag: Option<String>, entry: Option<AngleValue>, name: &str| -> Result<Option<f64>, CliError> {
            let value = match (flag, entry) {
                (Some(s), _) | (None, Some(AngleValue::Text(s))) => parse_number(&s, name)?,
                (None, Some(AngleValue::Number(x))) => x,
                (None, None) => return Ok(None),
            };
            let radians = if pi_fraction { value * PI } else { value };
            if !radians.is_finite() {
                return Err(CliError::Usage(format!("--{name} must be finite")));
            }
            Ok(Some(radians))
        };

        let mut tol = Tolerances::default();
        if let Some(t) = cli.tol.or(file.tol) {
            if t.is_nan() || t <= 0.0 {
                return Err(CliError::Usage(format!("--tol must be positive, got {t}")));
            }
            tol.angle = t;
        }
        if let Some(t) = cli.entropy_tol.or(file.entropy_tol) {
            if t.is_nan() || t <= 0.0 {
                return Err(CliError::Usage(format!("--entropy-tol must be positive, got {t}")));
            }
            tol.entropy = t;
        }

        let grid_points = cli.grid_points.or(file.grid_points);
        if let Some(g) = grid_points {
            if g < 2 {
                return Err(CliError::Usage(format!("--grid-points must be at least 2, got {g}")));
            }
        }

        let preset = match cli.command {
            Command::Sweep { preset } => preset.or(file.preset),
            _ => None,
        };

        Ok(SweepConfig {
            command: cli.command,
            preset,
            alpha: angle(cli.alpha, file.alpha, "alpha")?,
            beta: angle(cli.beta, file.beta, "beta")?,
            dbeta: angle(cli.dbeta, file.dbeta, "dbeta")?,
            grid_points,
            tol,
            n: cli.n.or(file.n).unwrap_or(1_000_000),
            output: cli.output.or(file.output),
            format: cli.format.or(file.format).unwrap_or(Format::Csv),
        })
    }
}

/// A decimal or a `p/q` fraction.
fn parse_number(s: &str, name: &str) -> Result<f64, CliError> {
    let bad = || CliError::Usage(format!("--{name}: cannot parse {s:?} as a number or p/q fraction"));
    let s = s.trim();
    match s.split_once('/') {
        Some((p, q)) => {
            let p: f64 = p.trim().parse().map_err(|_| bad())?;
            let q: f64 = q.trim().parse().map_err(|_| bad())?;
            if q == 0.0 {
                return Err(bad());
            }
            Ok(p / q)
        }
        None => s.parse().map_err(|_| bad()),
    }
}
