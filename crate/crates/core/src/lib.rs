//! Reliable, catalysed and probabilistic transfer of entanglement between
//! two pure two-qubit states.
//!
//! A donor `cos b |00> + sin b |11>` hands part of its entanglement to an
//! acceptor `cos a |00> + sin a |11>`, both angles in `[0, pi/4]`. The
//! modules decide when that is possible by LOCC:
//!
//! * [`entropy`]: binary entropy and the entropy balance fixing `dalpha`.
//! * [`majorization`]: Schmidt spectra and the prefix-sum condition.
//! * [`transfer`]: slack functions `f1, f2, f3` and the swap point.
//! * [`catalysis`]: threshold `beta_c` and the catalytic window.
//! * [`probabilistic`]: maximum single-copy success probability.
//! * [`asymptotic`]: many-copy accounting.

pub mod asymptotic;
pub mod bisect;
pub mod catalysis;
pub mod entropy;
pub mod error;
pub mod exec;
pub mod majorization;
pub mod probabilistic;
pub mod tolerance;
pub mod transfer;

pub use asymptotic::{asymptotic_ledger, CopyLedger};
pub use catalysis::{catalysis_possible, f3_roots, region_sweep, solve_beta_c, CatalysisRegion, RegionRow};
pub use entropy::{binary_entropy, entanglement_of, solve_delta_alpha, Entanglement, SchmidtAngle};
pub use error::{Error, Result};
pub use exec::Exec;
pub use majorization::{
    majorizes, schmidt_vector_of_pair, transfer_to_product_possible, MajorizationReport, SchmidtVector,
};
pub use probabilistic::{p_max, pmax_sweep, ProbabilityResult};
pub use tolerance::Tolerances;
pub use transfer::{
    alpha_star, df1_dalpha, df3_dalpha, f2_regime_formula, f_slacks, reliable_transfer_possible, FSlacks,
    TransferProblem,
};
