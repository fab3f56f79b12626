/// Numerical thresholds shared by the analysis modules.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerances {
    /// Maximum admissible entropy residual of the transfer balance (bits).
    pub entropy: f64,
    /// Bracket width at which angle bisection stops (radians).
    pub angle: f64,
    /// A majorization slack at or above `-slack` counts as satisfied.
    pub slack: f64,
    /// Schmidt coefficients at or below this count as zero.
    pub zero: f64,
    /// Half-width of the angle window treated as the swap point.
    pub window: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances {
            entropy: 1e-12,
            angle: 1e-12,
            slack: 1e-12,
            zero: 1e-12,
            window: 1e-9,
        }
    }
}
