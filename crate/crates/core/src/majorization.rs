//! Majorization of Schmidt spectra.
//!
//! A bipartite pure state can be converted into another by LOCC iff the
//! target's ordered Schmidt spectrum majorizes the source's: every prefix
//! sum of the target dominates the corresponding prefix sum of the source.
//! Since the last prefix sum is always 1, only `d - 1` inequalities carry
//! information. One consequence is that the Schmidt number (the count of
//! nonzero coefficients) can never grow.

use serde::Serialize;

use crate::entropy::SchmidtAngle;
use crate::error::{Error, Result};
use crate::tolerance::Tolerances;

/// Nonincreasingly ordered probability vector.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SchmidtVector {
    coeffs: Vec<f64>,
}

impl SchmidtVector {
    /// Builds a vector from coefficients in any order; they are sorted here.
    pub fn new(mut coeffs: Vec<f64>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::InvalidVector("empty".into()));
        }
        if let Some(bad) = coeffs.iter().find(|c| !(0.0..=1.0).contains(*c)) {
            return Err(Error::InvalidVector(format!("coefficient {bad} outside [0, 1]")));
        }
        let sum: f64 = coeffs.iter().sum();
        if (sum - 1.0).abs() > 1e-12 {
            return Err(Error::InvalidVector(format!("coefficients sum to {sum}")));
        }
        // Stable, so equal entries keep their input order.
        coeffs.sort_by(|a, b| b.total_cmp(a));
        Ok(SchmidtVector { coeffs })
    }

    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    pub fn dim(&self) -> usize {
        self.coeffs.len()
    }

    pub fn schmidt_number(&self) -> usize {
        self.schmidt_number_with(Tolerances::default().zero)
    }

    pub fn schmidt_number_with(&self, zero: f64) -> usize {
        self.coeffs.iter().filter(|&&c| c > zero).count()
    }

    /// `prefix[k]` is the sum of the `k + 1` largest coefficients.
    pub fn prefix_sums(&self) -> Vec<f64> {
        self.coeffs
            .iter()
            .scan(0.0, |acc, &c| {
                *acc += c;
                Some(*acc)
            })
            .collect()
    }

    /// `tail[k]` is the sum of coefficients `k..d`, accumulated from the
    /// smallest entry upwards.
    pub fn tail_sums(&self) -> Vec<f64> {
        let mut tails = vec![0.0; self.coeffs.len()];
        let mut acc = 0.0;
        for (k, &c) in self.coeffs.iter().enumerate().rev() {
            acc += c;
            tails[k] = acc;
        }
        tails
    }

    /// Zero-pads up to `dim`; never truncates.
    pub fn padded(&self, dim: usize) -> SchmidtVector {
        let mut coeffs = self.coeffs.clone();
        if coeffs.len() < dim {
            coeffs.resize(dim, 0.0);
        }
        SchmidtVector { coeffs }
    }
}

/// Four-entry spectrum of `|phi_alpha> ⊗ |psi_beta>`, sorted numerically.
pub fn schmidt_vector_of_pair(alpha: SchmidtAngle, beta: SchmidtAngle) -> SchmidtVector {
    let (sa, ca) = alpha.radians().sin_cos();
    let (sb, cb) = beta.radians().sin_cos();
    let mut coeffs = vec![ca * cb, ca * sb, sa * cb, sa * sb];
    for c in coeffs.iter_mut() {
        *c *= *c;
    }
    coeffs.sort_by(|a, b| b.total_cmp(a));
    SchmidtVector { coeffs }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MajorizationReport {
    /// `slacks[k - 1]` is the k-th prefix sum of `after` minus that of
    /// `before`, for `k = 1..d-1`.
    pub slacks: Vec<f64>,
    pub feasible: bool,
}

impl MajorizationReport {
    pub fn min_slack(&self) -> f64 {
        self.slacks.iter().copied().fold(f64::INFINITY, f64::min)
    }
}

/// Tests whether `before -> after` satisfies the majorization condition.
pub fn majorizes(before: &SchmidtVector, after: &SchmidtVector) -> MajorizationReport {
    majorizes_with(before, after, Tolerances::default().slack)
}

pub fn majorizes_with(before: &SchmidtVector, after: &SchmidtVector, tol: f64) -> MajorizationReport {
    let dim = before.dim().max(after.dim());
    let (before, after) = (before.padded(dim), after.padded(dim));
    let (pb, pa) = (before.prefix_sums(), after.prefix_sums());
    let (tb, ta) = (before.tail_sums(), after.tail_sums());

    // Upper prefixes are evaluated as complementary tails, which are sums
    // of small numbers and keep their relative precision.
    let slacks: Vec<f64> = (0..dim.saturating_sub(1))
        .map(|k| {
            if 2 * (k + 1) <= dim {
                pa[k] - pb[k]
            } else {
                tb[k + 1] - ta[k + 1]
            }
        })
        .collect();
    let feasible = slacks.iter().all(|&s| s >= -tol);
    MajorizationReport { slacks, feasible }
}

/// Schmidt-number counting for splitting a donor's entanglement with a
/// product acceptor.
///
/// Before the operation the total Schmidt number is the donor's; afterwards
/// it is the product of the donor's and the acceptor's. LOCC cannot raise
/// it, so the split is permitted only if the product does not exceed the
/// initial count.
pub fn schmidt_count_permits(donor_before: usize, donor_after: usize, acceptor_after: usize) -> bool {
    donor_after * acceptor_after <= donor_before
}

/// Whether entanglement of `donor` can be moved onto an initially product
/// acceptor.
///
/// With `partial = true` the donor keeps its Schmidt number while the
/// acceptor becomes entangled (Schmidt number at least 2); the count of
/// [`schmidt_count_permits`] then always fails. With `partial = false` the
/// whole state is handed over by local SWAPs, which is always possible.
pub fn transfer_to_product_possible(donor: &SchmidtVector, partial: bool) -> bool {
    if !partial {
        return true;
    }
    let r = donor.schmidt_number();
    if r < 2 {
        // Nothing to split off a product donor.
        return false;
    }
    schmidt_count_permits(r, r, 2)
}
