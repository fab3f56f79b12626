#![allow(dead_code)]

use std::f64::consts::FRAC_PI_4;

use entransfer::entropy::acceptor_limit;
use entransfer::{entanglement_of, SchmidtAngle, TransferProblem};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

pub fn angle(x: f64) -> SchmidtAngle {
    SchmidtAngle::new(x).unwrap()
}

/// Uniform `(beta, dbeta)` with `dbeta <= beta`, then `alpha` uniform on the
/// acceptor range.
pub fn random_problem(rng: &mut StdRng) -> TransferProblem {
    loop {
        let beta = rng.random_range(1e-3..FRAC_PI_4);
        let dbeta = rng.random_range(0.0..beta);
        let limit = acceptor_limit(angle(beta), dbeta).unwrap().radians();
        if limit <= 0.0 {
            continue;
        }
        let alpha = rng.random_range(0.0..limit);
        if let Ok(p) = TransferProblem::from_radians(alpha, beta, dbeta) {
            return p;
        }
    }
}

/// Entropy balance residual in bits.
pub fn balance_residual(p: &TransferProblem) -> f64 {
    let e = |x: f64| entanglement_of(SchmidtAngle::saturating(x)).ebits();
    e(p.beta().radians()) + e(p.alpha().radians()) - e(p.beta().radians() - p.dbeta())
        - e(p.alpha().radians() + p.dalpha())
}

/// f1 recomputed from a fresh problem at `alpha`.
pub fn f1_at(alpha: f64, beta: f64, dbeta: f64) -> f64 {
    entransfer::f_slacks(&TransferProblem::from_radians(alpha, beta, dbeta).unwrap()).f1
}

pub fn f3_at(alpha: f64, beta: f64, dbeta: f64) -> f64 {
    entransfer::f_slacks(&TransferProblem::from_radians(alpha, beta, dbeta).unwrap()).f3
}

/// Centered difference of `f` at `x` with step `h`.
pub fn central(f: impl Fn(f64) -> f64, x: f64, h: f64) -> f64 {
    (f(x + h) - f(x - h)) / (2.0 * h)
}

/// Sample an interior point where the closed-form derivatives and a
/// centered step of `h` are well defined.
pub fn random_interior(rng: &mut StdRng, h: f64) -> (f64, f64, f64) {
    loop {
        let beta = rng.random_range(0.05..FRAC_PI_4);
        let dbeta = rng.random_range(1e-3..beta.min(0.25));
        let limit = acceptor_limit(angle(beta), dbeta).unwrap().radians();
        // Keep the acceptor away from pi/4, where ln tan vanishes.
        let hi = limit - 0.02;
        if hi <= 0.02 {
            continue;
        }
        let alpha = rng.random_range(0.02..hi);
        if alpha - h > 0.0 {
            return (alpha, beta, dbeta);
        }
    }
}
