//! Catalysed transfer.
//!
//! A catalyst can only help when the joint initial and final states are
//! incomparable under majorization. For the four-level spectra here that is
//! `f1 >= 0`, `f2 < 0`, `f3 >= 0`, which can only happen below the swap
//! point and only when `f3` turns positive there. This requires the donor
//! angle to exceed a threshold `beta_c(dbeta)`, the root of
//!
//! `(sin beta_c / sin(beta_c - dbeta))^2 = ln tan(beta_c - dbeta) / ln tan beta_c`,
//!
//! at which `df3/dalpha` vanishes at the swap point. Above the threshold the
//! admissible acceptor angles fill the interval between the two roots of
//! `f3 = 0`; the upper one is the swap point itself.
//!
//! Incomparability is a necessary condition for catalysis. It is reported
//! here as deciding, which is how the threshold analysis treats it; no
//! catalyst state is constructed.

use std::f64::consts::FRAC_PI_4;

use serde::Serialize;

use crate::bisect::{bisect, Stop};
use crate::entropy::{check_dbeta, SchmidtAngle};
use crate::error::{Error, Result};
use crate::exec::{linspace, Exec};
use crate::transfer::{alpha_star, f_slacks, TransferProblem};
use crate::tolerance::Tolerances;

/// Offset from the ends of `[0, alpha*]` when bracketing the lower root.
const ROOT_EPS: f64 = 1e-6;

/// Coarse probes used to locate a point with `f3 > 0` below the swap point.
const PROBES: usize = 64;

/// Default angle tolerance of [`solve_beta_c`].
pub const BETA_C_TOL: f64 = 1e-9;

/// Whether the incomparability conditions hold. The swap point itself
/// (`f2 = 0`) is excluded.
pub fn catalysis_possible(problem: &TransferProblem) -> bool {
    catalysis_possible_with(problem, Tolerances::default().slack)
}

pub fn catalysis_possible_with(problem: &TransferProblem, tol: f64) -> bool {
    let s = f_slacks(problem);
    s.f1 >= -tol && s.f2 < -tol && s.f3 >= -tol
}

/// `sin²x ln tan x`, continued by 0 at `x = 0`.
fn sin2_log_tan(x: f64) -> f64 {
    if x <= 0.0 {
        return 0.0;
    }
    let s = x.sin();
    s * s * x.tan().ln()
}

/// Threshold equation with denominators cleared:
/// `sin²(b - db) ln tan(b - db) - sin²b ln tan b`.
///
/// Multiplying through by `-sin²(b - db) ln tan b > 0` keeps the sign of
/// `lhs - rhs` and removes the poles at `b = db` and `b = pi/4`.
pub fn beta_c_residual(beta: f64, dbeta: f64) -> f64 {
    sin2_log_tan(beta - dbeta) - sin2_log_tan(beta)
}

/// Critical donor angle above which a catalytic window opens.
pub fn solve_beta_c(dbeta: f64, tol: f64) -> Result<SchmidtAngle> {
    if !(dbeta > 0.0 && dbeta < FRAC_PI_4) {
        return Err(Error::Domain(format!("dbeta = {dbeta} outside (0, pi/4)")));
    }
    if tol.is_nan() || tol <= 0.0 {
        return Err(Error::Domain(format!("tolerance {tol} must be positive")));
    }
    let root = bisect(|b| beta_c_residual(b, dbeta), dbeta, FRAC_PI_4, Stop::width(tol))?;
    SchmidtAngle::new(root)
}

/// Catalytic window in the acceptor angle for fixed `(beta, dbeta)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CatalysisRegion {
    pub beta: SchmidtAngle,
    pub dbeta: f64,
    pub beta_c: SchmidtAngle,
    pub lower_root: Option<SchmidtAngle>,
    pub upper_root: Option<SchmidtAngle>,
    pub nonempty: bool,
}

impl CatalysisRegion {
    pub fn width(&self) -> f64 {
        match (self.lower_root, self.upper_root) {
            (Some(lo), Some(hi)) => hi.radians() - lo.radians(),
            _ => 0.0,
        }
    }

    /// Strict interior membership.
    pub fn contains(&self, alpha: f64) -> bool {
        match (self.nonempty, self.lower_root, self.upper_root) {
            (true, Some(lo), Some(hi)) => lo.radians() < alpha && alpha < hi.radians(),
            _ => false,
        }
    }
}

fn f3_at(alpha: f64, beta: SchmidtAngle, dbeta: f64, tol: &Tolerances) -> f64 {
    SchmidtAngle::new(alpha)
        .and_then(|a| TransferProblem::new_with(a, beta, dbeta, tol))
        .map(|p| f_slacks(&p).f3)
        .unwrap_or(f64::NAN)
}

/// Both roots of `f3 = 0` bounding the catalytic window.
///
/// Returns an empty region with no roots for `beta` below `beta_c`, and a
/// degenerate one (both roots at the swap point) when `f3` is nowhere
/// resolvably positive below the swap point.
pub fn f3_roots(beta: SchmidtAngle, dbeta: f64) -> Result<CatalysisRegion> {
    f3_roots_with(beta, dbeta, &Tolerances::default())
}

pub fn f3_roots_with(beta: SchmidtAngle, dbeta: f64, tol: &Tolerances) -> Result<CatalysisRegion> {
    check_dbeta(beta, dbeta)?;
    let beta_c = solve_beta_c(dbeta, tol.angle)?;
    let star = alpha_star(beta, dbeta)?;
    let mut region = CatalysisRegion {
        beta,
        dbeta,
        beta_c,
        lower_root: None,
        upper_root: None,
        nonempty: false,
    };
    if beta.radians() < beta_c.radians() - tol.window {
        return Ok(region);
    }

    let hi = star.radians();
    let coarse = (1..PROBES).map(|k| hi * k as f64 / PROBES as f64);
    let fine = (3..=10).map(|m| hi - 10f64.powi(-m));
    let positive = coarse
        .chain(fine)
        .filter(|&a| a > 0.0)
        .find(|&a| f3_at(a, beta, dbeta, tol) > 0.0);

    region.upper_root = Some(star);
    match positive {
        None => {
            region.lower_root = Some(star);
        }
        Some(inside) => {
            let lo = ROOT_EPS.min(0.5 * inside);
            let root = bisect(|a| f3_at(a, beta, dbeta, tol), lo, inside, Stop::width(tol.angle))?;
            region.lower_root = Some(SchmidtAngle::new(root)?);
            region.nonempty = beta.radians() > beta_c.radians() && root < hi;
        }
    }
    Ok(region)
}

/// One row of a region sweep.
#[derive(Debug, Clone, PartialEq)]
pub struct RegionRow {
    pub dbeta: f64,
    pub beta: f64,
    pub region: Result<CatalysisRegion>,
}

/// Root pairs on a donor grid `[beta_c(dbeta), pi/4]` of `beta_points`
/// points, for each `dbeta`. The first point of every block sits at the
/// threshold, where the window degenerates.
pub fn region_sweep(dbeta_values: &[f64], beta_points: usize, tol: &Tolerances, exec: Exec) -> Vec<RegionRow> {
    let mut jobs: Vec<(f64, f64)> = Vec::new();
    let mut rows_failed: Vec<(usize, RegionRow)> = Vec::new();
    for &dbeta in dbeta_values {
        match solve_beta_c(dbeta, tol.angle) {
            Ok(bc) => {
                jobs.extend(linspace(bc.radians(), FRAC_PI_4, beta_points).into_iter().map(|b| (dbeta, b)))
            }
            Err(e) => rows_failed.push((jobs.len(), RegionRow { dbeta, beta: f64::NAN, region: Err(e) })),
        }
    }
    let mut rows = exec.map(&jobs, |&(dbeta, beta)| RegionRow {
        dbeta,
        beta,
        region: SchmidtAngle::new(beta).and_then(|b| f3_roots_with(b, dbeta, tol)),
    });
    for (pos, row) in rows_failed.into_iter().rev() {
        rows.insert(pos, row);
    }
    rows
}
