//! Size guards for the exponential parts of the library.

use crate::error::{Error, Result};

/// Upper limits on the problem sizes the library agrees to attempt.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    /// Largest `n` for Hecke algebra, KL and parabolic computations.
    pub max_n: usize,
    /// Largest degree for symmetric function basis changes.
    pub symfunc_degree: usize,
    /// Largest matrix size for immanants (`n!` products).
    pub immanant_n: usize,
    /// Largest `n` for proper-coloring enumeration.
    pub csf_n: usize,
    /// Largest `n` for the `n^n` all-colorings enumeration.
    pub llt_n: usize,
}

impl Default for Budget {
    fn default() -> Self {
        Budget { max_n: 8, symfunc_degree: 12, immanant_n: 7, csf_n: 8, llt_n: 6 }
    }
}

impl Budget {
    pub fn with_max_n(mut self, max_n: usize) -> Self {
        self.max_n = max_n;
        self
    }

    pub(crate) fn check(what: &'static str, size: usize, limit: usize) -> Result<()> {
        if size > limit {
            Err(Error::BudgetExceeded { what, size, limit })
        } else {
            Ok(())
        }
    }
}
