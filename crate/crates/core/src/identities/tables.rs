use std::sync::OnceLock;

use crate::exactmath::{deg_falling_factorial, LambdaPoly};
use crate::numbers::{
    deg_daehee, deg_daehee_order_row, deg_derangement, deg_harmonic_row, hyperharmonic_gf,
    HyperharmonicTable, Stirling1Triangle,
};

/// Precomputed values shared by every grid point of one verification run.
/// The cheap rows are built eagerly; the rest on first use.
pub(crate) struct Tables {
    n_cap: usize,
    o_cap: usize,
    harmonic: Vec<LambdaPoly>,
    daehee: Vec<LambdaPoly>,
    hyper: HyperharmonicTable,
    derangement: OnceLock<Vec<LambdaPoly>>,
    stirling: OnceLock<Stirling1Triangle>,
    hyper_gf: OnceLock<Vec<Vec<LambdaPoly>>>,
    daehee_order: Vec<OnceLock<Vec<LambdaPoly>>>,
    one_falling: OnceLock<Vec<LambdaPoly>>,
}

impl Tables {
    /// Covers indices n ≤ n_cap and orders r ≤ o_cap.
    pub(crate) fn new(n_cap: usize, o_cap: usize) -> Self {
        Self {
            n_cap,
            o_cap,
            harmonic: deg_harmonic_row(n_cap),
            daehee: (0..=n_cap).map(deg_daehee).collect(),
            hyper: HyperharmonicTable::new(n_cap, o_cap),
            derangement: OnceLock::new(),
            stirling: OnceLock::new(),
            hyper_gf: OnceLock::new(),
            daehee_order: (0..=o_cap).map(|_| OnceLock::new()).collect(),
            one_falling: OnceLock::new(),
        }
    }

    pub(crate) fn harmonic(&self, n: usize) -> &LambdaPoly {
        &self.harmonic[n]
    }

    pub(crate) fn daehee(&self, n: usize) -> &LambdaPoly {
        &self.daehee[n]
    }

    /// Recurrence-route hyperharmonic value.
    pub(crate) fn hyper(&self, n: usize, r: usize) -> &LambdaPoly {
        self.hyper.get(n, r)
    }

    /// Generating-function-route hyperharmonic value.
    pub(crate) fn hyper_gf(&self, n: usize, r: usize) -> &LambdaPoly {
        &self.hyper_gf.get_or_init(|| {
            (0..=self.o_cap)
                .map(|r| hyperharmonic_gf(r, self.n_cap + 1).coeffs().to_vec())
                .collect()
        })[r][n]
    }

    pub(crate) fn derangement(&self, n: usize) -> &LambdaPoly {
        &self
            .derangement
            .get_or_init(|| (0..=self.n_cap).map(deg_derangement).collect())[n]
    }

    pub(crate) fn stirling(&self, n: usize, k: usize) -> LambdaPoly {
        self.stirling
            .get_or_init(|| Stirling1Triangle::new(self.n_cap))
            .get(n, k)
    }

    pub(crate) fn daehee_order(&self, n: usize, r: usize) -> &LambdaPoly {
        &self.daehee_order[r].get_or_init(|| deg_daehee_order_row(r, self.n_cap))[n]
    }

    /// (1)_{k,λ}
    pub(crate) fn one_falling(&self, k: usize) -> &LambdaPoly {
        &self.one_falling.get_or_init(|| {
            (0..=self.n_cap)
                .map(|k| deg_falling_factorial(&LambdaPoly::one(), k))
                .collect()
        })[k]
    }
}
