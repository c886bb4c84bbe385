//! Generalized Fourier transforms of the radial kernels: expansion-at-zero
//! algebra, the r^m tanh r series, odd-dimension closed-form series, modified
//! Bessel expansions, and an independent Hankel quadrature oracle.

pub mod classical;
pub mod expansion;
pub mod hankel;
pub mod kexp;
pub mod odd_dim;
pub mod tanh_series;
pub mod univariate;

pub use classical::{classical_gft, delta_cancellation_constant, ClassicalKernel};
pub use expansion::{DeltaTerm, ExpansionTerm, RadialExpansion};
pub use hankel::HankelOracle;
pub use kexp::{halfint_mq_log_expansion, halfint_mq_log_gft, k_expansion_at_zero};
pub use odd_dim::{odd_dim_vhat, vhat_odd};
pub use tanh_series::{p_coefficient, tanh_power_expansion, vhat_from_series};
pub use univariate::{univariate_tanh_family, TanhFamilyMember};
