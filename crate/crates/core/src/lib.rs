//! Korobov lattice rules built from multiplicative subgroups of `Z_p*`.
//!
//! The crate constructs generating vectors `a = (a_1, ..., a_s)` from a
//! subgroup `G` and measures the quality of the resulting point sets
//!
//! ```text
//! K(a) = { ({a_1 k / N}, ..., {a_s k / N}) : k = 1..N }
//! ```
//!
//! through several exact quantities: the unnormalized star discrepancy, the
//! relative minima of the congruence lattice `a . m = 0 (mod N)` and the sum
//! `N * sum 1/H(m)` over them, continued-fraction partial quotients, and
//! exponential sums over `G`. It also evaluates the dimension thresholds
//! `s'(delta)`, `s''(delta)` and `s_min(delta)` exactly.
//!
//! Everything here is `no_std` (with `alloc`). File formats, the command line
//! and parallel drivers live in the companion `korolat` crate.
#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod budget;
pub mod contfrac;
pub mod discrepancy;
pub mod error;
pub mod expsum;
pub mod lattice;
pub mod modp;
pub mod pointset;
pub mod rational;
pub mod search;
pub mod thresholds;

pub use budget::Budget;
pub use error::{Error, Result};
pub use lattice::GeneratingVector;
pub use modp::{Coset, PrimeModulus, Subgroup};
pub use pointset::PointSet;
