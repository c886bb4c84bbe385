//! Expansion at zero of the transform of r^m tanh r.
//!
//! The transform splits through r^m tanh r = r^m − r^m(1 − tanh r) into the
//! classical power transform plus an analytic series
//! 2^{−m+1} π^{(n−1)/2} Σ_j p_j s^{2j}, absolutely convergent for s < 1.

use super::classical::{classical_gft, ClassicalKernel};
use super::expansion::RadialExpansion;
use crate::error::{Error, Result};
use crate::specfun::{alt_zeta_sum, gamma};
use std::f64::consts::PI;

/// Series coefficient
/// p_j = ((−1)^j / (2^{2j} j!)) · S(m+2j+n) · Π_{i=0}^{m−1}(n+2j+i) · Γ(j+(n+1)/2)
/// with S(σ) = Σ_{k≥1} (−1)^k k^{−σ}.
pub fn p_coefficient(m: u32, n: u32, j: u32) -> Result<f64> {
    if m == 0 {
        return Err(Error::Contract("p_j needs m >= 1".into()));
    }
    let jf = j as f64;
    let nf = n as f64;
    let sign = if j % 2 == 0 { 1.0 } else { -1.0 };
    let mut product = 1.0;
    for i in 0..m {
        product *= nf + 2.0 * jf + i as f64;
    }
    Ok(sign / (4.0_f64.powi(j as i32) * gamma(jf + 1.0)?)
        * alt_zeta_sum((m + 2 * j + n) as f64)?
        * product
        * gamma(jf + 0.5 * (nf + 1.0))?)
}

/// Expansion of the transform of r^m tanh r in n dimensions: the power-part
/// transform (a delta for even m) plus `j_max`+1 analytic coefficients.
/// Valid for s inside the unit ball.
pub fn tanh_power_expansion(m: u32, n: u32, j_max: usize) -> Result<RadialExpansion> {
    if m == 0 || j_max == 0 {
        return Err(Error::Contract(
            "tanh_power_expansion needs m >= 1 and j_max >= 1".into(),
        ));
    }
    let mut e = classical_gft(
        &ClassicalKernel::Power { beta: m as f64 },
        n,
    )?;
    let prefactor = 2.0_f64.powi(1 - m as i32) * PI.powf(0.5 * (n as f64 - 1.0));
    for j in 0..=j_max as u32 {
        e.push_term(-2.0 * j as f64, 0, prefactor * p_coefficient(m, n, j)?);
    }
    e.valid_radius = 1.0;
    e.truncation_order = j_max + 1;
    Ok(e)
}

/// Transform of the L¹ remainder v(x) = r^m(1 − tanh r) by the same series:
/// v̂(s) = −2^{−m+1} π^{(n−1)/2} Σ_j p_j s^{2j}, s < 1.
pub fn vhat_from_series(m: u32, n: u32, s: f64, j_max: usize) -> Result<f64> {
    if !(0.0..1.0).contains(&s) {
        return Err(Error::Range(format!(
            "the p_j series converges for s < 1, got {s}"
        )));
    }
    let prefactor = 2.0_f64.powi(1 - m as i32) * PI.powf(0.5 * (n as f64 - 1.0));
    let mut acc = 0.0;
    let s2 = s * s;
    let mut sj = 1.0;
    for j in 0..=j_max as u32 {
        acc += p_coefficient(m, n, j)? * sj;
        sj *= s2;
    }
    Ok(-prefactor * acc)
}
