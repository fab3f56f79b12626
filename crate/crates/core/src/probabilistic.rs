//! Probabilistic single-copy conversion.
//!
//! The best success probability of `before -> after` is the smallest ratio
//! of tail sums `sum_{i>k} l_i / sum_{i>k} l'_i` over `k = 1..d-1`. For the
//! four-level spectra the three terms are `(1 - l1)/(1 - l1')`,
//! `(1 - l1 - l2)/(1 - l1' - l2')` and `l4/l4'`.
//!
//! Zero tails in the target follow a fixed convention: a ratio `0/0` counts
//! as 1, and a positive tail over a zero tail is dropped, since a target
//! with fewer nonzero coefficients places no constraint at that depth.

use serde::Serialize;

use crate::majorization::{majorizes_with, SchmidtVector};
use crate::tolerance::Tolerances;
use crate::transfer::{alpha_sweep, SweepPoint, TransferProblem};
use crate::entropy::SchmidtAngle;
use crate::error::Result;
use crate::exec::Exec;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ProbabilityResult {
    pub p_max: f64,
    /// 1-based index of the minimizing tail ratio; `None` when every ratio
    /// was dropped.
    pub binding_term: Option<usize>,
    /// Tail ratios by depth, `None` where dropped.
    pub ratios: Vec<Option<f64>>,
}

pub fn p_max_of_spectra(before: &SchmidtVector, after: &SchmidtVector, tol: &Tolerances) -> ProbabilityResult {
    let dim = before.dim().max(after.dim());
    let (before, after) = (before.padded(dim), after.padded(dim));
    let (tb, ta) = (before.tail_sums(), after.tail_sums());

    let ratios: Vec<Option<f64>> = (1..dim)
        .map(|k| {
            if ta[k] <= tol.zero {
                if tb[k] <= tol.zero {
                    Some(1.0)
                } else {
                    None
                }
            } else {
                Some(tb[k] / ta[k])
            }
        })
        .collect();

    let mut binding: Option<(usize, f64)> = None;
    for (k, r) in ratios.iter().enumerate() {
        if let Some(r) = *r {
            if binding.is_none_or(|(_, best)| r < best) {
                binding = Some((k + 1, r));
            }
        }
    }

    let p_max = if majorizes_with(&before, &after, tol.slack).feasible {
        1.0
    } else {
        binding.map_or(1.0, |(_, r)| r.min(1.0))
    };
    ProbabilityResult { p_max, binding_term: binding.map(|(k, _)| k), ratios }
}

pub fn p_max(problem: &TransferProblem) -> ProbabilityResult {
    p_max_of_spectra(&problem.spectrum_before(), &problem.spectrum_after(), &Tolerances::default())
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PmaxRow {
    pub dalpha: f64,
    pub p_max: f64,
    pub binding_term: Option<usize>,
}

/// `p_max` over the acceptor range, swap point included.
pub fn pmax_sweep(
    beta: SchmidtAngle,
    dbeta: f64,
    points: usize,
    tol: &Tolerances,
    exec: Exec,
) -> Result<Vec<SweepPoint<PmaxRow>>> {
    alpha_sweep(beta, dbeta, points, tol, exec, |p| {
        let r = p_max_of_spectra(&p.spectrum_before(), &p.spectrum_after(), tol);
        Ok(PmaxRow { dalpha: p.dalpha(), p_max: r.p_max, binding_term: r.binding_term })
    })
}
