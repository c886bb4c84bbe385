//! Expansions at zero built from the modified Bessel function K:
//! the (c^ν/s^ν) K_ν(cs) expansion (DLMF 10.31 / Olver's form) and the
//! closed K_{3/2} transform of the shifted TPS comparator in one dimension.

use super::expansion::RadialExpansion;
use crate::error::{Error, Result};
use crate::specfun::{digamma, gamma};
use std::f64::consts::PI;

/// Expansion of (c^ν / s^ν) K_ν(cs) for integer ν ≥ 1 about s = 0:
///
///   2^{ν−1} s^{−2ν} Σ_{k<ν} (ν−k−1)!/(k!(−4)^k) (cs)^{2k}
///   − (−c²/2)^ν log s Σ_{k≥0} (cs)^{2k}/(4^k k! Γ(ν+k+1))
///   + (−c²/2)^ν Σ_{k≥0} [log 2 − log c + ½(Ψ(k+1)+Ψ(ν+k+1))]
///                (cs)^{2k}/(4^k k! Γ(ν+k+1)).
///
/// Analytic terms are kept through s^{2·order}.
pub fn k_expansion_at_zero(nu: u32, c: f64, order: usize, dim: u32) -> Result<RadialExpansion> {
    if nu == 0 {
        return Err(Error::Contract("k_expansion_at_zero needs nu >= 1".into()));
    }
    if c <= 0.0 {
        return Err(Error::Domain(format!("shift c must be positive, got {c}")));
    }
    let nuf = nu as f64;
    let mut e = RadialExpansion::new(dim);

    // singular block: exponents s^{−2ν+2k}, k = 0..ν−1
    let lead = 2.0_f64.powi(nu as i32 - 1);
    for k in 0..nu {
        let kf = k as f64;
        let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
        let coeff = lead * gamma(nuf - kf)? * sign
            / (gamma(kf + 1.0)? * 4.0_f64.powi(k as i32))
            * c.powi(2 * k as i32);
        e.push_term(2.0 * (nuf - kf), 0, coeff);
    }
    let front = (-c * c / 2.0).powi(nu as i32);

    // log and analytic blocks share the factor (cs)^{2k}/(4^k k! Γ(ν+k+1))
    for k in 0..=order {
        let kf = k as f64;
        let shared = c.powi(2 * k as i32)
            / (4.0_f64.powi(k as i32) * gamma(kf + 1.0)? * gamma(nuf + kf + 1.0)?);
        e.push_term(-2.0 * kf, 1, -front * shared);
        let constant =
            2.0_f64.ln() - c.ln() + 0.5 * (digamma(kf + 1.0)? + digamma(nuf + kf + 1.0)?);
        e.push_term(-2.0 * kf, 0, front * shared * constant);
    }
    e.truncation_order = order + 1;
    Ok(e)
}

/// Exact transform of the one-dimensional shifted-TPS comparator:
/// 2π e^{−c|s|} (s^{−3} + c s^{−2}), from the closed form of K_{3/2}
/// (Abramowitz–Stegun 10.2.17).
pub fn halfint_mq_log_gft(c: f64, s: f64) -> Result<f64> {
    if s <= 0.0 {
        return Err(Error::Domain(format!("s must be positive, got {s}")));
    }
    if c <= 0.0 {
        return Err(Error::Domain(format!("c must be positive, got {c}")));
    }
    Ok(2.0 * PI * (-c * s).exp() * (1.0 / (s * s * s) + c / (s * s)))
}

/// Expansion of [`halfint_mq_log_gft`] about the origin:
/// 2π Σ_j (−1)^j c^j (1−j)/j! · s^{j−3} (so 2π s^{−3} − πc² s^{−1} + 2πc³/3 − …).
pub fn halfint_mq_log_expansion(c: f64, order: usize) -> Result<RadialExpansion> {
    if c <= 0.0 {
        return Err(Error::Domain(format!("c must be positive, got {c}")));
    }
    let mut e = RadialExpansion::new(1);
    for j in 0..=order {
        let jf = j as f64;
        let sign = if j % 2 == 0 { 1.0 } else { -1.0 };
        let coeff = 2.0 * PI * sign * c.powi(j as i32) * (1.0 - jf) / gamma(jf + 1.0)?;
        e.push_term(3.0 - jf, 0, coeff);
    }
    e.truncation_order = order + 1;
    Ok(e)
}
