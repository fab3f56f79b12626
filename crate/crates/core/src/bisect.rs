//! Bracketed bisection.
//!
//! Every implicit equation in this crate is solved by bisection on a bracket
//! with a guaranteed sign change. The targets involve binary entropies whose
//! derivatives diverge at the endpoints, which rules out Newton steps.

use crate::error::{Error, Result};

/// Upper bound on halvings; 200 steps exhaust the f64 mantissa on any
/// bracket inside `[0, pi/4]` long before the limit.
const MAX_ITER: usize = 200;

/// Stopping rule for [`bisect`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Stop {
    /// Terminate once the bracket is narrower than this.
    pub width: f64,
    /// Terminate early once `|f(mid)|` falls below this. Zero disables it.
    pub residual: f64,
}

impl Stop {
    pub fn width(width: f64) -> Self {
        Stop { width, residual: 0.0 }
    }
}

/// Finds a root of `f` on `[lo, hi]`.
///
/// `f(lo)` and `f(hi)` must differ in sign (an exact zero at either end is
/// accepted and returned). The midpoint of the final bracket is returned.
pub fn bisect<F>(mut f: F, lo: f64, hi: f64, stop: Stop) -> Result<f64>
where
    F: FnMut(f64) -> f64,
{
    let (mut a, mut b) = if lo <= hi { (lo, hi) } else { (hi, lo) };
    let fa = f(a);
    let fb = f(b);
    if fa == 0.0 {
        return Ok(a);
    }
    if fb == 0.0 {
        return Ok(b);
    }
    if fa.is_nan() || fb.is_nan() || fa.signum() == fb.signum() {
        return Err(Error::Bracket { lo: a, hi: b, f_lo: fa, f_hi: fb });
    }
    let a_negative = fa < 0.0;

    for _ in 0..MAX_ITER {
        let mid = 0.5 * (a + b);
        if b - a <= stop.width || mid <= a || mid >= b {
            break;
        }
        let fm = f(mid);
        if fm == 0.0 || fm.abs() < stop.residual {
            return Ok(mid);
        }
        if (fm < 0.0) == a_negative {
            a = mid;
        } else {
            b = mid;
        }
    }
    Ok(0.5 * (a + b))
}
