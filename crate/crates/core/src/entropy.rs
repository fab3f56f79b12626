//! Angle and entropy primitives.
//!
//! A two-qubit pure state is parametrized by its Schmidt angle θ, with
//! Schmidt coefficients `{cos²θ, sin²θ}`. Its entanglement is the binary
//! entropy of that distribution, in bits.

use std::f64::consts::{FRAC_PI_4, LN_2};
use std::fmt;

use serde::Serialize;

use crate::bisect::{bisect, Stop};
use crate::error::{Error, Result};
use crate::tolerance::Tolerances;

/// Schmidt angle in radians, restricted to `[0, pi/4]`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd, Serialize)]
#[serde(transparent)]
pub struct SchmidtAngle(f64);

impl SchmidtAngle {
    pub const ZERO: SchmidtAngle = SchmidtAngle(0.0);
    pub const MAX: SchmidtAngle = SchmidtAngle(FRAC_PI_4);

    pub fn new(theta: f64) -> Result<Self> {
        if (0.0..=FRAC_PI_4).contains(&theta) {
            Ok(SchmidtAngle(theta))
        } else {
            Err(Error::Domain(format!("Schmidt angle {theta} outside [0, pi/4]")))
        }
    }

    /// Clamps into range; for values produced by arithmetic that may carry
    /// one ulp of overshoot. NaN maps to zero.
    pub fn saturating(theta: f64) -> Self {
        if theta.is_nan() {
            return SchmidtAngle::ZERO;
        }
        SchmidtAngle(theta.clamp(0.0, FRAC_PI_4))
    }

    #[inline]
    pub fn radians(self) -> f64 {
        self.0
    }

    /// Larger Schmidt coefficient `cos²θ`.
    pub fn major(self) -> f64 {
        let c = self.0.cos();
        c * c
    }

    /// Smaller Schmidt coefficient `sin²θ`.
    pub fn minor(self) -> f64 {
        let s = self.0.sin();
        s * s
    }
}

impl fmt::Display for SchmidtAngle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// Entanglement in ebits.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd, Serialize)]
#[serde(transparent)]
pub struct Entanglement(f64);

impl Entanglement {
    #[inline]
    pub fn ebits(self) -> f64 {
        self.0
    }
}

/// `-p log2 p`, with the `0 log 0 = 0` convention.
#[inline]
fn plogp(p: f64) -> f64 {
    if p <= 0.0 {
        0.0
    } else {
        -p * p.log2()
    }
}

/// Binary entropy `H[x] = -x log2 x - (1-x) log2 (1-x)` in bits.
pub fn binary_entropy(x: f64) -> Result<Entanglement> {
    if !(0.0..=1.0).contains(&x) {
        return Err(Error::Domain(format!("probability {x} outside [0, 1]")));
    }
    if x == 0.0 || x == 1.0 {
        return Ok(Entanglement(0.0));
    }
    Ok(Entanglement(plogp(x) + plogp(1.0 - x)))
}

/// Entropy of entanglement `H[cos²θ]`.
///
/// Evaluated through `ln cos` and `ln sin` directly so that `1 - cos²θ` is
/// never formed by cancellation.
pub fn entanglement_of(theta: SchmidtAngle) -> Entanglement {
    Entanglement(raw_entropy(theta.0))
}

/// `H[cos²θ]` without the range check, for use inside solvers.
pub(crate) fn raw_entropy(theta: f64) -> f64 {
    let (s, c) = theta.sin_cos();
    let term = |x: f64| if x <= 0.0 { 0.0 } else { -x * x * 2.0 * x.ln() };
    (term(c) + term(s)) / LN_2
}

/// Entanglement gained by the acceptor when the donor angle drops from
/// `beta` to `beta - dbeta`.
pub fn entanglement_gain(beta: SchmidtAngle, dbeta: f64) -> Result<f64> {
    check_dbeta(beta, dbeta)?;
    Ok(raw_entropy(beta.0) - raw_entropy(beta.0 - dbeta))
}

pub(crate) fn check_dbeta(beta: SchmidtAngle, dbeta: f64) -> Result<()> {
    if !(0.0..=beta.0).contains(&dbeta) {
        return Err(Error::Domain(format!(
            "dbeta = {dbeta} must lie in [0, beta = {}]",
            beta.0
        )));
    }
    Ok(())
}

/// Solves the entropy balance
/// `H[cos²β] + H[cos²α] = H[cos²(β-Δβ)] + H[cos²(α+Δα)]` for `Δα`.
pub fn solve_delta_alpha(alpha: SchmidtAngle, beta: SchmidtAngle, dbeta: f64) -> Result<f64> {
    solve_delta_alpha_with(alpha, beta, dbeta, &Tolerances::default())
}

pub fn solve_delta_alpha_with(
    alpha: SchmidtAngle,
    beta: SchmidtAngle,
    dbeta: f64,
    tol: &Tolerances,
) -> Result<f64> {
    let gain = entanglement_gain(beta, dbeta)?;
    if gain == 0.0 {
        return Ok(0.0);
    }
    // The swap point solves the balance identically.
    if alpha.0 == beta.0 - dbeta {
        return Ok(dbeta);
    }
    let acceptor = raw_entropy(alpha.0);
    let target = acceptor + gain;
    if target > 1.0 + tol.entropy {
        return Err(Error::InfeasibleHeadroom { acceptor_ebits: acceptor, gain });
    }
    let span = FRAC_PI_4 - alpha.0;
    if target >= 1.0 {
        return Ok(span);
    }
    bisect(
        |d| raw_entropy(alpha.0 + d) - target,
        0.0,
        span,
        Stop::width(tol.angle),
    )
}

/// Largest acceptor angle that can still absorb the gain of `(beta, dbeta)`,
/// i.e. the upper end of the range `alpha + dalpha <= pi/4`.
pub fn acceptor_limit(beta: SchmidtAngle, dbeta: f64) -> Result<SchmidtAngle> {
    acceptor_limit_with(beta, dbeta, &Tolerances::default())
}

pub fn acceptor_limit_with(beta: SchmidtAngle, dbeta: f64, tol: &Tolerances) -> Result<SchmidtAngle> {
    let gain = entanglement_gain(beta, dbeta)?;
    if gain == 0.0 {
        return Ok(SchmidtAngle::MAX);
    }
    let room = 1.0 - gain;
    let mut a = bisect(|a| raw_entropy(a) - room, 0.0, FRAC_PI_4, Stop::width(tol.angle))?;
    // The bisection midpoint may sit just past the boundary.
    while a > 0.0 && raw_entropy(a) + gain > 1.0 + tol.entropy {
        a -= tol.angle;
    }
    Ok(SchmidtAngle::saturating(a))
}
