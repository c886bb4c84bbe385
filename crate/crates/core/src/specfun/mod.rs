//! Self-contained special functions: Gamma, digamma, alternating zeta sums,
//! Bessel J (series and half-integer closed forms), modified Bessel K.
//!
//! Everything is pure `f64 -> f64` with no shared state; accuracy targets are
//! documented per function and exercised by the unit tests.

mod bessel_j;
mod bessel_k;
mod eta;
mod gamma;

pub use bessel_j::{bessel_j, bessel_j_halfint_closed, bessel_j_series};
pub use bessel_k::bessel_k;
pub use eta::alt_zeta_sum;
pub use gamma::{digamma, gamma, ln_gamma};

/// Euler--Mascheroni constant.
pub const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;
