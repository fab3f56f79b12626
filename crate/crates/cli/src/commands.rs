use std::f64::consts::PI;

use entransfer::catalysis::{catalysis_possible_with, f3_roots_with};
use entransfer::exec::linspace;
use entransfer::probabilistic::p_max_of_spectra;
use entransfer::transfer::alpha_sweep;
use entransfer::{
    alpha_star, asymptotic_ledger, f_slacks, pmax_sweep, region_sweep, solve_beta_c, CatalysisRegion, Exec,
    SchmidtAngle, TransferProblem,
};

use crate::config::{Command, Preset, SweepConfig};
use crate::error::CliError;
use crate::table::{Cell, Table};

const FSLACK_COLUMNS: &[&str] = &["beta", "dbeta", "alpha", "dalpha", "f1", "f2", "f3", "f3x10", "regime", "status"];
const PMAX_COLUMNS: &[&str] = &["beta", "dbeta", "alpha", "dalpha", "p_max", "binding_term", "status"];
const REGION_COLUMNS: &[&str] =
    &["beta", "dbeta", "beta_c", "lower_root", "upper_root", "nonempty", "width", "status"];
const BETA_C_SWEEP_COLUMNS: &[&str] = &["dbeta", "beta_c", "status"];

const FIG1_BETAS: [f64; 3] = [PI / 10.0, 0.5, PI / 5.0];
const FIG1_DBETA: f64 = 0.01;
const FIG2_DBETA_RANGE: (f64, f64) = (1e-3, 0.2);
const FIG3_DBETAS: [f64; 4] = [0.2, 0.1, 0.01, 0.001];
const FIG4: (f64, f64) = (PI / 10.0, 0.01);

const OK: &str = "ok";

fn require(value: Option<f64>, name: &str) -> Result<f64, CliError> {
    value.ok_or_else(|| CliError::Usage(format!("--{name} is required")))
}

fn angle(value: Option<f64>, name: &str) -> Result<SchmidtAngle, CliError> {
    SchmidtAngle::new(require(value, name)?).map_err(|e| CliError::Usage(format!("--{name}: {e}")))
}

fn status<T>(r: &entransfer::Result<T>) -> Cell {
    match r {
        Ok(_) => OK.into(),
        Err(e) => e.to_string().into(),
    }
}

/// Builds the output table for a resolved configuration.
pub fn run(cfg: &SweepConfig) -> Result<Table, CliError> {
    let exec = Exec::default();
    let mut table = match cfg.command {
        Command::Feasible => feasible(cfg)?,
        Command::Fslacks => match cfg.alpha {
            Some(_) => fslacks_point(cfg)?,
            None => {
                let mut t = Table::new(FSLACK_COLUMNS);
                fslacks_sweep(&mut t, angle(cfg.beta, "beta")?, require(cfg.dbeta, "dbeta")?, cfg.grid_points.unwrap_or(400), cfg, exec)?;
                t
            }
        },
        Command::BetaC => {
            let dbeta = require(cfg.dbeta, "dbeta")?;
            let bc = solve_beta_c(dbeta, cfg.tol.angle)?;
            let mut t = Table::new(&["dbeta", "beta_c"]);
            t.push(vec![dbeta.into(), bc.radians().into()]);
            t
        }
        Command::Region => {
            let beta = angle(cfg.beta, "beta")?;
            let dbeta = require(cfg.dbeta, "dbeta")?;
            let region = f3_roots_with(beta, dbeta, &cfg.tol)?;
            let mut t = Table::new(REGION_COLUMNS);
            t.push(region_cells(beta.radians(), dbeta, &Ok(region)));
            t
        }
        Command::Pmax => match cfg.alpha {
            Some(_) => pmax_point(cfg)?,
            None => {
                let mut t = Table::new(PMAX_COLUMNS);
                pmax_rows(&mut t, angle(cfg.beta, "beta")?, require(cfg.dbeta, "dbeta")?, cfg.grid_points.unwrap_or(500), cfg, exec)?;
                t
            }
        },
        Command::Asymptotic => asymptotic(cfg)?,
        Command::Sweep { .. } => {
            let preset = cfg.preset.ok_or_else(|| CliError::Usage("sweep needs --preset".into()))?;
            sweep(preset, cfg, exec)?
        }
    };
    if table.columns.last() == Some(&"status") {
        let ok = Cell::from(OK);
        table.warnings = table.rows.iter().filter(|r| r.last() != Some(&ok)).count();
    }
    Ok(table)
}

fn problem(cfg: &SweepConfig) -> Result<TransferProblem, CliError> {
    let alpha = angle(cfg.alpha, "alpha")?;
    let beta = angle(cfg.beta, "beta")?;
    let dbeta = require(cfg.dbeta, "dbeta")?;
    Ok(TransferProblem::new_with(alpha, beta, dbeta, &cfg.tol)?)
}

fn feasible(cfg: &SweepConfig) -> Result<Table, CliError> {
    let p = problem(cfg)?;
    let report = p.majorization_with(cfg.tol.slack);
    let mut t = Table::new(&[
        "alpha",
        "beta",
        "dbeta",
        "dalpha",
        "alpha_star",
        "reliable",
        "catalysis_possible",
        "min_slack",
    ]);
    t.push(vec![
        p.alpha().radians().into(),
        p.beta().radians().into(),
        p.dbeta().into(),
        p.dalpha().into(),
        alpha_star(p.beta(), p.dbeta())?.radians().into(),
        report.feasible.into(),
        catalysis_possible_with(&p, cfg.tol.slack).into(),
        report.min_slack().into(),
    ]);
    Ok(t)
}

fn fslack_cells(p: &TransferProblem) -> Vec<Cell> {
    let f = f_slacks(p);
    vec![
        p.beta().radians().into(),
        p.dbeta().into(),
        p.alpha().radians().into(),
        p.dalpha().into(),
        f.f1.into(),
        f.f2.into(),
        f.f3.into(),
        (10.0 * f.f3).into(),
        f.regime_of_f2.as_str().into(),
        OK.into(),
    ]
}

fn failed_row(leading: [f64; 3], columns: usize, e: &entransfer::Error) -> Vec<Cell> {
    let mut row: Vec<Cell> = leading.iter().map(|&x| x.into()).collect();
    row.resize(columns - 1, Cell::Empty);
    row.push(e.to_string().into());
    row
}

fn fslacks_point(cfg: &SweepConfig) -> Result<Table, CliError> {
    let mut t = Table::new(FSLACK_COLUMNS);
    t.push(fslack_cells(&problem(cfg)?));
    Ok(t)
}

fn fslacks_sweep(
    t: &mut Table,
    beta: SchmidtAngle,
    dbeta: f64,
    points: usize,
    cfg: &SweepConfig,
    exec: Exec,
) -> Result<(), CliError> {
    let rows = alpha_sweep(beta, dbeta, points, &cfg.tol, exec, |p| Ok(fslack_cells(p)))?;
    for row in rows {
        t.push(match row.result {
            Ok(cells) => cells,
            Err(e) => failed_row([beta.radians(), dbeta, row.alpha], FSLACK_COLUMNS.len(), &e),
        });
    }
    Ok(())
}

fn pmax_point(cfg: &SweepConfig) -> Result<Table, CliError> {
    let p = problem(cfg)?;
    let r = p_max_of_spectra(&p.spectrum_before(), &p.spectrum_after(), &cfg.tol);
    let mut t = Table::new(PMAX_COLUMNS);
    t.push(vec![
        p.beta().radians().into(),
        p.dbeta().into(),
        p.alpha().radians().into(),
        p.dalpha().into(),
        r.p_max.into(),
        r.binding_term.into(),
        OK.into(),
    ]);
    Ok(t)
}

fn pmax_rows(
    t: &mut Table,
    beta: SchmidtAngle,
    dbeta: f64,
    points: usize,
    cfg: &SweepConfig,
    exec: Exec,
) -> Result<(), CliError> {
    for row in pmax_sweep(beta, dbeta, points, &cfg.tol, exec)? {
        t.push(match row.result {
            Ok(r) => vec![
                beta.radians().into(),
                dbeta.into(),
                row.alpha.into(),
                r.dalpha.into(),
                r.p_max.into(),
                r.binding_term.into(),
                OK.into(),
            ],
            Err(e) => failed_row([beta.radians(), dbeta, row.alpha], PMAX_COLUMNS.len(), &e),
        });
    }
    Ok(())
}

fn region_cells(beta: f64, dbeta: f64, region: &entransfer::Result<CatalysisRegion>) -> Vec<Cell> {
    match region {
        Ok(r) => vec![
            beta.into(),
            dbeta.into(),
            r.beta_c.radians().into(),
            r.lower_root.map(SchmidtAngle::radians).into(),
            r.upper_root.map(SchmidtAngle::radians).into(),
            r.nonempty.into(),
            r.width().into(),
            OK.into(),
        ],
        Err(e) => failed_row([beta, dbeta, f64::NAN], REGION_COLUMNS.len(), e),
    }
}

fn asymptotic(cfg: &SweepConfig) -> Result<Table, CliError> {
    let alpha = angle(cfg.alpha, "alpha")?;
    let beta = angle(cfg.beta, "beta")?;
    let dbeta = require(cfg.dbeta, "dbeta")?;
    if cfg.n == 0 {
        return Err(CliError::Usage("--n must be at least 1".into()));
    }
    let l = asymptotic_ledger(alpha, beta, dbeta, cfg.n)?;
    let mut t = Table::new(&[
        "alpha",
        "beta",
        "dbeta",
        "n",
        "dalpha",
        "singlets_from_donor",
        "donor_copies_needed",
        "surplus_donor_copies",
        "acceptor_intermediate_copies",
        "final_acceptor_copies",
        "conservation_error",
    ]);
    t.push(vec![
        alpha.radians().into(),
        beta.radians().into(),
        dbeta.into(),
        Cell::Int(cfg.n),
        l.dalpha.into(),
        l.singlets_from_donor.into(),
        l.donor_copies_needed.into(),
        l.surplus_donor_copies.into(),
        l.acceptor_intermediate_copies.into(),
        l.final_acceptor_copies.into(),
        l.conservation_error().into(),
    ]);
    Ok(t)
}

fn sweep(preset: Preset, cfg: &SweepConfig, exec: Exec) -> Result<Table, CliError> {
    match preset {
        Preset::Fig1 => {
            let mut t = Table::new(FSLACK_COLUMNS);
            for beta in FIG1_BETAS {
                let beta = SchmidtAngle::new(beta)?;
                fslacks_sweep(&mut t, beta, FIG1_DBETA, cfg.grid_points.unwrap_or(400), cfg, exec)?;
            }
            Ok(t)
        }
        Preset::Fig2 => {
            let (lo, hi) = FIG2_DBETA_RANGE;
            let grid = linspace(lo, hi, cfg.grid_points.unwrap_or(200));
            let results = exec.map(&grid, |&db| solve_beta_c(db, cfg.tol.angle));
            let mut t = Table::new(BETA_C_SWEEP_COLUMNS);
            for (db, r) in grid.iter().zip(&results) {
                t.push(vec![(*db).into(), r.as_ref().ok().map(|b| b.radians()).into(), status(r)]);
            }
            Ok(t)
        }
        Preset::Fig3 => {
            let mut t = Table::new(REGION_COLUMNS);
            for row in region_sweep(&FIG3_DBETAS, cfg.grid_points.unwrap_or(100), &cfg.tol, exec) {
                t.push(region_cells(row.beta, row.dbeta, &row.region));
            }
            Ok(t)
        }
        Preset::Fig4 => {
            let (beta, dbeta) = FIG4;
            let mut t = Table::new(PMAX_COLUMNS);
            pmax_rows(&mut t, SchmidtAngle::new(beta)?, dbeta, cfg.grid_points.unwrap_or(500), cfg, exec)?;
            Ok(t)
        }
    }
}
