//! Exact computation of degenerate harmonic, hyperharmonic, Daehee,
//! Stirling (first kind) and derangement numbers as polynomials in the
//! degeneracy parameter λ, plus an executable catalog of the identities
//! relating them.
//!
//! ```
//! use degen::numbers::{deg_daehee, deg_harmonic};
//!
//! // D_{1,λ} = −1!·(H_{2,λ} − H_{1,λ})
//! let d1 = -(deg_harmonic(2) - deg_harmonic(1));
//! assert_eq!(d1, deg_daehee(1));
//! assert_eq!(d1.to_string(), "[-1/2,1/2]");
//! ```

pub mod error;
pub mod exactmath;
pub mod identities;
pub mod numbers;
pub mod series;

pub use error::{Error, Result};
pub use exactmath::{LambdaPoly, LambdaRat, Rational};
pub use series::TruncSeries;

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/polynomials.md")]
    mod polynomials {}
    #[doc = include_str!("../../../book/src/series.md")]
    mod series {}
    #[doc = include_str!("../../../book/src/numbers.md")]
    mod numbers {}
    #[doc = include_str!("../../../book/src/identities.md")]
    mod identities {}
}
