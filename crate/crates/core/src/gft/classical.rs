//! Generalized Fourier transforms of the classical radial kernels
//! r^β, r^β log r, r^{−n−2k}, r^{−n−2k} log r (Jones, "The Theory of
//! Generalised Functions", Theorems 7.31–7.35), under the non-unitary
//! e^{−iy·x} convention.
//!
//! Digamma arguments follow the standard Ψ = Γ'/Γ normalization in the form
//! that makes each theorem verifiable against independent derivations
//! (β-differentiation of Th. 7.31, and the known 1-D value
//! F[1/|x|] = −2γ − 2 log|s|); the book's own shifted-ψ convention differs
//! by one in some arguments.

use super::expansion::RadialExpansion;
use crate::error::{Error, Result};
use crate::specfun::{digamma, gamma};
use std::f64::consts::PI;

/// Kernel selector for [`classical_gft`].
#[derive(Clone, Copy, Debug)]
pub enum ClassicalKernel {
    /// r^β
    Power { beta: f64 },
    /// r^β log r + correction·r^β
    PowerLog { beta: f64, correction: f64 },
    /// r^{−n−2k}
    NegPower { k: u32 },
    /// r^{−n−2k} log r
    NegPowerLog { k: u32 },
}

fn is_nonneg_even_integer(x: f64) -> bool {
    x >= 0.0 && x == x.floor() && (x as i64) % 2 == 0
}

/// Coefficient of Th. 7.31: Γ((β+n)/2) / Γ(−β/2) · 2^{β+n} π^{n/2}.
fn power_coefficient(beta: f64, n: u32) -> Result<f64> {
    let nf = n as f64;
    Ok(gamma(0.5 * (beta + nf))? / gamma(-0.5 * beta)?
        * 2.0_f64.powf(beta + nf)
        * PI.powf(0.5 * nf))
}

/// n-dimensional generalized Fourier transform of the selected kernel as an
/// exact expansion. Excluded parameters of one theorem are routed to the
/// sibling covering them (β = 2k → the delta-supported transform,
/// β = −n−2k → the s^{2k}(a − log s) form).
pub fn classical_gft(kernel: &ClassicalKernel, n: u32) -> Result<RadialExpansion> {
    if n == 0 {
        return Err(Error::Contract("dimension must be >= 1".into()));
    }
    let nf = n as f64;
    match *kernel {
        ClassicalKernel::Power { beta } => {
            if is_nonneg_even_integer(beta) {
                // Th. 7.32: (2π)^n (−1)^k Δ^k δ
                let k = (beta / 2.0) as u32;
                let mut e = RadialExpansion::new(n);
                e.push_delta(k, (2.0 * PI).powi(n as i32) * if k % 2 == 0 { 1.0 } else { -1.0 });
                return Ok(e);
            }
            if beta <= -nf && is_nonneg_even_integer(-beta - nf) {
                let k = ((-beta - nf) / 2.0) as u32;
                return classical_gft(&ClassicalKernel::NegPower { k }, n);
            }
            let mut e = RadialExpansion::new(n);
            e.push_term(beta + nf, 0, power_coefficient(beta, n)?);
            Ok(e)
        }
        ClassicalKernel::PowerLog { beta, correction } => {
            if is_nonneg_even_integer(beta) {
                // r^{2k} log r + a r^{2k}: s^{−n−2k} part plus a delta part
                // that the correction a can cancel
                let k = (beta / 2.0) as u32;
                if k == 0 {
                    return Err(Error::Domain(
                        "pure log r (k = 0) carries an undetermined delta constant here".into(),
                    ));
                }
                let kf = k as f64;
                let sign_k = if k % 2 == 0 { 1.0 } else { -1.0 };
                let mut e = RadialExpansion::new(n);
                e.push_term(
                    nf + 2.0 * kf,
                    0,
                    -sign_k
                        * gamma(0.5 * nf + kf)?
                        * gamma(kf + 1.0)?
                        * 2.0_f64.powf(nf + 2.0 * kf - 1.0)
                        * PI.powf(0.5 * nf),
                );
                let bracket = 0.5 * digamma(0.5 * nf + kf - 1.0)?
                    + 0.5 * digamma(kf)?
                    + 2.0_f64.ln();
                let delta_coeff =
                    sign_k * (2.0 * PI).powi(n as i32) * (bracket + correction);
                // treat an analytically cancelled delta as exactly absent
                if delta_coeff.abs() > 1e-12 * (2.0 * PI).powi(n as i32) * bracket.abs().max(1.0) {
                    e.push_delta(k, delta_coeff);
                }
                return Ok(e);
            }
            if beta <= -nf && is_nonneg_even_integer(-beta - nf) {
                let k = ((-beta - nf) / 2.0) as u32;
                let mut e = classical_gft(&ClassicalKernel::NegPowerLog { k }, n)?;
                if correction != 0.0 {
                    let add = classical_gft(&ClassicalKernel::NegPower { k }, n)?.scaled(correction);
                    for t in add.terms {
                        e.push_term(t.q, t.log_power, t.coeff);
                    }
                }
                return Ok(e);
            }
            // generic β: differentiate Th. 7.31 in β:
            // C(β,n) s^{−β−n} {½Ψ((β+n)/2) + ½Ψ(−β/2) + log 2 − log s}
            let c = power_coefficient(beta, n)?;
            let bracket = 0.5 * digamma(0.5 * (beta + nf))?
                + 0.5 * digamma(-0.5 * beta)?
                + 2.0_f64.ln();
            let mut e = RadialExpansion::new(n);
            e.push_term(beta + nf, 0, c * (bracket + correction));
            e.push_term(beta + nf, 1, -c);
            Ok(e)
        }
        ClassicalKernel::NegPower { k } => {
            // Th. 7.33 in the normalization fixed by F[1/|x|] = −2γ − 2 log s:
            // ((−1)^k π^{n/2} s^{2k} / (Γ(n/2+k) k! 2^{2k−1}))
            //   {½Ψ(n/2+k) + ½Ψ(k+1) + log 2 − log s}
            let kf = k as f64;
            let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
            let front = sign * PI.powf(0.5 * nf)
                / (gamma(0.5 * nf + kf)? * gamma(kf + 1.0)? * 2.0_f64.powf(2.0 * kf - 1.0));
            let bracket = 0.5 * digamma(0.5 * nf + kf)?
                + 0.5 * digamma(kf + 1.0)?
                + 2.0_f64.ln();
            let mut e = RadialExpansion::new(n);
            e.push_term(-2.0 * kf, 0, front * bracket);
            e.push_term(-2.0 * kf, 1, -front);
            Ok(e)
        }
        ClassicalKernel::NegPowerLog { k } => {
            // Th. 7.35 (same argument normalization as NegPower):
            // ((−1)^k π^{n/2} s^{2k} / (Γ(n/2+k) k! 2^{2k}))
            //  [{A − log(s/2)}² − ¼{Ψ'(n/2+k) + Ψ'(k+1)} + π²/12],
            // A = ½Ψ(n/2+k) + ½Ψ(k+1); the square yields a log² s term.
            let kf = k as f64;
            let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
            let front = sign * PI.powf(0.5 * nf)
                / (gamma(0.5 * nf + kf)? * gamma(kf + 1.0)? * 2.0_f64.powf(2.0 * kf));
            let a = 0.5 * digamma(0.5 * nf + kf)? + 0.5 * digamma(kf + 1.0)? + 2.0_f64.ln();
            let trigamma = |x: f64| -> Result<f64> {
                // Ψ'(x) by central difference of Ψ; adequate for the constant
                let h = 1e-5;
                Ok((digamma(x + h)? - digamma(x - h)?) / (2.0 * h))
            };
            let tg = 0.25 * (trigamma(0.5 * nf + kf)? + trigamma(kf + 1.0)?);
            let mut e = RadialExpansion::new(n);
            e.push_term(-2.0 * kf, 0, front * (a * a - tg + PI * PI / 12.0));
            e.push_term(-2.0 * kf, 1, front * (-2.0 * a));
            e.push_term(-2.0 * kf, 2, front);
            Ok(e)
        }
    }
}

/// The constant a for which r^{2k} log r + a·r^{2k} has a delta-free
/// generalized transform: a = −{½Ψ(n/2+k−1) + ½Ψ(k) + log 2}.
pub fn delta_cancellation_constant(k: u32, n: u32) -> Result<f64> {
    if k == 0 {
        return Err(Error::Domain(
            "delta cancellation constant needs k >= 1".into(),
        ));
    }
    let kf = k as f64;
    let nf = n as f64;
    Ok(-(0.5 * digamma(0.5 * nf + kf - 1.0)? + 0.5 * digamma(kf)? + 2.0_f64.ln()))
}
