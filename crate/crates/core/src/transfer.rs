//! Reliable transfer between two pure two-qubit states.
//!
//! The donor `psi_beta` gives up the entanglement needed to move its angle
//! from `beta` to `beta - dbeta`; the acceptor `phi_alpha` absorbs it and
//! moves to `alpha + dalpha`. The joint four-level spectra before and after
//! are compared through three slack functions:
//!
//! * `f1 = sqrt(l1') - sqrt(l1)`
//! * `f2 = sqrt(l1' + l2') - sqrt(l1 + l2)`
//! * `f3 = sqrt(l4) - sqrt(l4')`
//!
//! all nonnegative iff the transfer is possible by LOCC. The only acceptor
//! angle where that happens is the swap point `alpha* = beta - dbeta`.

use std::f64::consts::FRAC_PI_4;

use serde::Serialize;

use crate::entropy::{acceptor_limit_with, check_dbeta, solve_delta_alpha_with, SchmidtAngle};
use crate::error::{Error, Result};
use crate::exec::{insert_sorted, linspace, Exec};
use crate::majorization::{majorizes_with, schmidt_vector_of_pair, MajorizationReport, SchmidtVector};
use crate::tolerance::Tolerances;

/// A donor/acceptor configuration with `dalpha` fixed by the entropy balance.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct TransferProblem {
    alpha: SchmidtAngle,
    beta: SchmidtAngle,
    dbeta: f64,
    dalpha: f64,
}

impl TransferProblem {
    pub fn new(alpha: SchmidtAngle, beta: SchmidtAngle, dbeta: f64) -> Result<Self> {
        Self::new_with(alpha, beta, dbeta, &Tolerances::default())
    }

    pub fn new_with(alpha: SchmidtAngle, beta: SchmidtAngle, dbeta: f64, tol: &Tolerances) -> Result<Self> {
        let dalpha = solve_delta_alpha_with(alpha, beta, dbeta, tol)?;
        Ok(TransferProblem { alpha, beta, dbeta, dalpha })
    }

    /// Convenience constructor from raw radians.
    pub fn from_radians(alpha: f64, beta: f64, dbeta: f64) -> Result<Self> {
        Self::new(SchmidtAngle::new(alpha)?, SchmidtAngle::new(beta)?, dbeta)
    }

    pub fn alpha(&self) -> SchmidtAngle {
        self.alpha
    }

    pub fn beta(&self) -> SchmidtAngle {
        self.beta
    }

    pub fn dbeta(&self) -> f64 {
        self.dbeta
    }

    pub fn dalpha(&self) -> f64 {
        self.dalpha
    }

    /// Donor angle after the transfer.
    pub fn donor_after(&self) -> SchmidtAngle {
        SchmidtAngle::saturating(self.beta.radians() - self.dbeta)
    }

    /// Acceptor angle after the transfer.
    pub fn acceptor_after(&self) -> SchmidtAngle {
        SchmidtAngle::saturating(self.alpha.radians() + self.dalpha)
    }

    pub fn spectrum_before(&self) -> SchmidtVector {
        schmidt_vector_of_pair(self.alpha, self.beta)
    }

    pub fn spectrum_after(&self) -> SchmidtVector {
        schmidt_vector_of_pair(self.acceptor_after(), self.donor_after())
    }

    pub fn majorization(&self) -> MajorizationReport {
        self.majorization_with(Tolerances::default().slack)
    }

    pub fn majorization_with(&self, slack: f64) -> MajorizationReport {
        majorizes_with(&self.spectrum_before(), &self.spectrum_after(), slack)
    }
}

/// Which closed form `f2` takes, by ordering of the middle coefficients.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum F2Regime {
    /// `alpha < beta - dalpha - dbeta`
    Below,
    /// `beta - dalpha - dbeta <= alpha <= beta`
    Middle,
    /// `alpha > beta`
    Above,
}

impl F2Regime {
    pub fn of(problem: &TransferProblem) -> Self {
        let a = problem.alpha.radians();
        let b = problem.beta.radians();
        if a < b - problem.dalpha - problem.dbeta {
            F2Regime::Below
        } else if a <= b {
            F2Regime::Middle
        } else {
            F2Regime::Above
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            F2Regime::Below => "below",
            F2Regime::Middle => "middle",
            F2Regime::Above => "above",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct FSlacks {
    pub f1: f64,
    pub f2: f64,
    pub f3: f64,
    pub regime_of_f2: F2Regime,
}

impl FSlacks {
    pub fn all_nonnegative(&self, tol: f64) -> bool {
        self.f1 >= -tol && self.f2 >= -tol && self.f3 >= -tol
    }
}

/// Slack functions evaluated on the numerically sorted spectra.
pub fn f_slacks(problem: &TransferProblem) -> FSlacks {
    let before = problem.spectrum_before();
    let after = problem.spectrum_after();
    let (l, lp) = (before.coeffs(), after.coeffs());
    FSlacks {
        f1: lp[0].sqrt() - l[0].sqrt(),
        f2: (lp[0] + lp[1]).sqrt() - (l[0] + l[1]).sqrt(),
        f3: l[3].sqrt() - lp[3].sqrt(),
        regime_of_f2: F2Regime::of(problem),
    }
}

/// `f2` from its piecewise closed form; agrees with [`f_slacks`] wherever
/// the regime bookkeeping is right.
pub fn f2_regime_formula(problem: &TransferProblem) -> f64 {
    let cos = f64::cos;
    let a = problem.alpha.radians();
    let b = problem.beta.radians();
    match F2Regime::of(problem) {
        F2Regime::Below => cos(a + problem.dalpha) - cos(a),
        F2Regime::Middle => cos(b - problem.dbeta) - cos(a),
        F2Regime::Above => cos(b - problem.dbeta) - cos(b),
    }
}

/// `ln tan a / ln tan (a + da)`, the ratio left over after eliminating
/// `d(dalpha)/d(alpha)` through the differentiated entropy balance.
fn log_tan_ratio(problem: &TransferProblem) -> Result<f64> {
    let a = problem.alpha.radians();
    if a <= 0.0 {
        return Err(Error::SingularPoint { alpha: a });
    }
    let upper = a + problem.dalpha;
    let denom = upper.tan().ln();
    if upper >= FRAC_PI_4 || denom == 0.0 {
        return Err(Error::SingularPoint { alpha: a });
    }
    Ok(a.tan().ln() / denom)
}

/// Closed-form `df1/dalpha`, with `dalpha` following the entropy balance:
///
/// `s_a [c_b - c_{b-db} (c_a / c_{a+da}) ln tan a / ln tan (a+da)]`
///
/// Singular at `alpha = 0` and where the acceptor reaches `pi/4`.
pub fn df1_dalpha(problem: &TransferProblem) -> Result<f64> {
    let ratio = log_tan_ratio(problem)?;
    let (sa, ca) = problem.alpha.radians().sin_cos();
    let cb = problem.beta.radians().cos();
    let cb_after = problem.donor_after().radians().cos();
    let ca_after = problem.acceptor_after().radians().cos();
    Ok(sa * (cb - cb_after * ca / ca_after * ratio))
}

/// Closed-form `df3/dalpha`:
///
/// `c_a [s_b - (s_a s_{b-db} / s_{a+da}) ln tan a / ln tan (a+da)]`
pub fn df3_dalpha(problem: &TransferProblem) -> Result<f64> {
    let ratio = log_tan_ratio(problem)?;
    let (sa, ca) = problem.alpha.radians().sin_cos();
    let sb = problem.beta.radians().sin();
    let sb_after = problem.donor_after().radians().sin();
    let sa_after = problem.acceptor_after().radians().sin();
    Ok(ca * (sb - sa * sb_after / sa_after * ratio))
}

/// The swap point `beta - dbeta`.
pub fn alpha_star(beta: SchmidtAngle, dbeta: f64) -> Result<SchmidtAngle> {
    check_dbeta(beta, dbeta)?;
    SchmidtAngle::new(beta.radians() - dbeta)
}

/// Whether the majorization condition holds for the joint spectra.
pub fn reliable_transfer_possible(problem: &TransferProblem) -> bool {
    problem.majorization().feasible
}

/// One evaluated acceptor angle in a sweep.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepPoint<T> {
    pub alpha: f64,
    pub result: Result<T>,
}

/// Acceptor grid over the relevant range `[0, alpha_max]` with the swap
/// point inserted.
pub fn alpha_grid(beta: SchmidtAngle, dbeta: f64, points: usize, tol: &Tolerances) -> Result<Vec<f64>> {
    let limit = acceptor_limit_with(beta, dbeta, tol)?;
    let mut grid = linspace(0.0, limit.radians(), points);
    insert_sorted(&mut grid, alpha_star(beta, dbeta)?.radians());
    Ok(grid)
}

/// Evaluates `eval` at every acceptor angle of [`alpha_grid`].
pub fn alpha_sweep<T, F>(
    beta: SchmidtAngle,
    dbeta: f64,
    points: usize,
    tol: &Tolerances,
    exec: Exec,
    eval: F,
) -> Result<Vec<SweepPoint<T>>>
where
    T: Send,
    F: Fn(&TransferProblem) -> Result<T> + Sync + Send,
{
    let grid = alpha_grid(beta, dbeta, points, tol)?;
    Ok(exec.map(&grid, |&alpha| SweepPoint {
        alpha,
        result: SchmidtAngle::new(alpha)
            .and_then(|a| TransferProblem::new_with(a, beta, dbeta, tol))
            .and_then(|p| eval(&p)),
    }))
}
