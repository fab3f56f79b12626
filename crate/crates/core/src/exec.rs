//! Point-wise evaluation of parameter grids.
//!
//! Every grid point is independent, so sweeps are a plain ordered map. With
//! the `parallel` feature the map runs on the rayon pool; output order always
//! follows input order.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Defaults to `Parallel` when the feature is enabled.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub enum Exec {
    #[cfg_attr(not(feature = "parallel"), default)]
    Sequential,
    #[cfg(feature = "parallel")]
    #[default]
    Parallel,
}

impl Exec {
    pub fn map<T, R, F>(self, items: &[T], f: F) -> Vec<R>
    where
        T: Sync,
        R: Send,
        F: Fn(&T) -> R + Sync + Send,
    {
        match self {
            Exec::Sequential => items.iter().map(f).collect(),
            #[cfg(feature = "parallel")]
            Exec::Parallel => items.par_iter().map(f).collect(),
        }
    }
}

/// `points` evenly spaced values on `[lo, hi]`, both ends included.
pub fn linspace(lo: f64, hi: f64, points: usize) -> Vec<f64> {
    match points {
        0 => Vec::new(),
        1 => vec![lo],
        n => {
            let step = (hi - lo) / (n - 1) as f64;
            (0..n)
                .map(|i| if i == n - 1 { hi } else { lo + step * i as f64 })
                .collect()
        }
    }
}

/// Inserts `x` into an ascending grid unless an equal value is present.
pub fn insert_sorted(grid: &mut Vec<f64>, x: f64) {
    match grid.binary_search_by(|g| g.total_cmp(&x)) {
        Ok(_) => {}
        Err(pos) => grid.insert(pos, x),
    }
}
