//! Copy accounting for the many-copy protocol.
//!
//! With `n` copies of each state, the donors are concentrated into
//! `n H(c_b²)` singlets and diluted into copies of `psi_{b-db}`, leaving a
//! surplus beyond the `n` they keep. The acceptors are converted into copies
//! of `phi_{b-db}`, pooled with the surplus and concentrated into `n` copies
//! of `phi_{a+da}`. Counts are asymptotic rates; nothing is rounded.

use serde::Serialize;

use crate::entropy::{raw_entropy, solve_delta_alpha, SchmidtAngle};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CopyLedger {
    pub n: f64,
    pub dalpha: f64,
    pub singlets_from_donor: f64,
    pub donor_copies_needed: f64,
    pub surplus_donor_copies: f64,
    /// Copies of `phi_{b-db}` obtained from the acceptors.
    pub acceptor_intermediate_copies: f64,
    pub final_acceptor_copies: f64,
    /// Per-copy entanglement of `psi_b`, `phi_a`, `psi_{b-db}`, `phi_{a+da}`.
    pub ebits: [f64; 4],
}

impl CopyLedger {
    /// Total ebits held after each stage: initial, after concentration,
    /// after dilution, after acceptor conversion, final.
    pub fn stage_totals(&self) -> [f64; 5] {
        let [e_b, e_a, e_mid, e_final] = self.ebits;
        let n = self.n;
        [
            n * e_b + n * e_a,
            self.singlets_from_donor + n * e_a,
            (self.donor_copies_needed + self.surplus_donor_copies) * e_mid + n * e_a,
            (self.donor_copies_needed + self.surplus_donor_copies + self.acceptor_intermediate_copies) * e_mid,
            self.donor_copies_needed * e_mid + self.final_acceptor_copies * e_final,
        ]
    }

    /// Largest relative deviation of any stage total from the initial one.
    pub fn conservation_error(&self) -> f64 {
        let totals = self.stage_totals();
        let scale = totals[0].abs().max(f64::MIN_POSITIVE);
        totals.iter().map(|t| (t - totals[0]).abs() / scale).fold(0.0, f64::max)
    }
}

pub fn asymptotic_ledger(alpha: SchmidtAngle, beta: SchmidtAngle, dbeta: f64, n: u64) -> Result<CopyLedger> {
    let dalpha = solve_delta_alpha(alpha, beta, dbeta)?;
    let n = n as f64;
    let e_b = raw_entropy(beta.radians());
    let e_a = raw_entropy(alpha.radians());
    let e_final = raw_entropy(alpha.radians() + dalpha);

    let mid = beta.radians() - dbeta;
    let e_mid = raw_entropy(mid);
    if e_mid <= 0.0 {
        return Err(Error::DegenerateDilution(mid));
    }
    let singlets = n * e_b;
    Ok(CopyLedger {
        n,
        dalpha,
        singlets_from_donor: singlets,
        donor_copies_needed: n,
        surplus_donor_copies: if dbeta == 0.0 { 0.0 } else { n * (e_b / e_mid - 1.0) },
        acceptor_intermediate_copies: n * e_a / e_mid,
        final_acceptor_copies: n,
        ebits: [e_b, e_a, e_mid, e_final],
    })
}
