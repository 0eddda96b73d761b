//! Exact and numeric verification of the polynomial families, recurrences and
//! generating-function identities attached to ζ({2,1}^l) = ζ({3}^l).
//!
//! - [`rings`]: rationals, Q(ω), polynomials in `t`, truncated series in `z`
//! - [`families`]: the polynomial families `C_n`, `B_n`, `B_n^α`, `A_n`, `A'_n`, `Ã_n`
//! - [`series_lab`]: generating functions, differential operators, series identities
//! - [`mzv`]: truncated (alternating) multiple zeta sums and identity checks
//! - [`zeros`]: Sturm-chain certification of root location in `x = t³`
//! - [`cli`]: the `polyzeta` command line

pub mod cli;
pub mod error;
pub mod families;
pub mod mzv;
pub mod rings;
pub mod series_lab;
pub mod zeros;

pub use error::{Error, Result};
