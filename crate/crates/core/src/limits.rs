use crate::error::{Error, Result};

/// Environment variable overriding [`Limits::max_cells`].
pub const MAX_CELLS_ENV: &str = "HTSASM_MAX_CELLS";

/// Bounds on exhaustive enumeration.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    pub max_n: usize,
    /// Maximum `rows * columns` of an enumerated matrix or tableau grid.
    pub max_cells: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits { max_n: 4, max_cells: 64 }
    }
}

impl Limits {
    /// Defaults, with `max_cells` taken from `HTSASM_MAX_CELLS` when set.
    pub fn from_env() -> Self {
        let mut l = Limits::default();
        if let Some(v) = std::env::var(MAX_CELLS_ENV).ok().and_then(|s| s.trim().parse().ok()) {
            l.max_cells = v;
        }
        l
    }

    pub fn unbounded() -> Self {
        Limits { max_n: usize::MAX, max_cells: usize::MAX }
    }

    pub fn check(&self, n: usize, rows: usize, cols: usize) -> Result<()> {
        if n > self.max_n {
            return Err(Error::SizeLimitExceeded(format!("n = {n} exceeds the bound {}", self.max_n)));
        }
        if rows.saturating_mul(cols) > self.max_cells {
            return Err(Error::SizeLimitExceeded(format!(
                "{rows}x{cols} grid exceeds {} cells (set {MAX_CELLS_ENV} to raise)",
                self.max_cells
            )));
        }
        Ok(())
    }
}
