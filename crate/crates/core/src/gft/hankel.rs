//! Hankel-quadrature oracle: the n-dimensional Fourier transform of a
//! radial L¹ function by adaptive quadrature,
//!
//!   F(s) = (2π)^{n/2} s^{1−n/2} ∫₀^R f(r) r^{n/2} J_{n/2−1}(sr) dr,
//!
//! used as an independent check on every expansion-producing route.

use crate::error::{Error, Result};
use crate::quad;
use crate::specfun::bessel_j;
use std::f64::consts::PI;

pub struct HankelOracle<F: Fn(f64) -> f64> {
    pub dim: u32,
    /// radial profile f(r); the caller asserts decay making it L¹ against
    /// r^{n/2} J_{n/2−1}
    pub integrand: F,
    /// truncation radius R beyond which f is negligible
    pub truncation_radius: f64,
    /// absolute quadrature tolerance
    pub tol: f64,
}

impl<F: Fn(f64) -> f64> HankelOracle<F> {
    /// Transform value at s > 0; returns (value, quadrature error estimate).
    pub fn transform(&self, s: f64) -> Result<(f64, f64)> {
        if s <= 0.0 {
            return Err(Error::Domain(format!("s must be positive, got {s}")));
        }
        let n = self.dim;
        let nf = n as f64;
        let nu = 0.5 * nf - 1.0;
        let g = |r: f64| {
            if r <= 0.0 {
                return 0.0;
            }
            (self.integrand)(r) * r.powf(0.5 * nf) * bessel_j(nu, s * r).unwrap_or(f64::NAN)
        };
        let (integral, err) = quad::integrate(g, 0.0, self.truncation_radius, self.tol)
            .map_err(|e| Error::Numeric(format!("hankel oracle failed: {e}")))?;
        let prefactor = (2.0 * PI).powf(0.5 * nf) * s.powf(1.0 - 0.5 * nf);
        Ok((prefactor * integral, prefactor.abs() * err))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gft::odd_dim::vhat_odd;
    use approx::assert_relative_eq;

    #[test]
    fn one_dim_reduces_to_cosine_transform() {
        let v = |r: f64| {
            let x = (-2.0 * r).exp();
            r.powi(3) * 2.0 * x / (1.0 + x)
        };
        let oracle = HankelOracle {
            dim: 1,
            integrand: v,
            truncation_radius: 40.0,
            tol: 1e-12,
        };
        let s = 0.5;
        let (hankel, _) = oracle.transform(s).unwrap();
        let (cosine, _) =
            quad::integrate(|r| v(r) * (s * r).cos(), 0.0, 40.0, 1e-12).unwrap();
        assert_relative_eq!(hankel, 2.0 * cosine, max_relative = 1e-10);
    }

    #[test]
    fn gaussian_self_transform() {
        let oracle = HankelOracle {
            dim: 1,
            integrand: |r: f64| (-r * r / 2.0).exp(),
            truncation_radius: 40.0,
            tol: 1e-12,
        };
        let (v, _) = oracle.transform(1.0).unwrap();
        assert_relative_eq!(
            v,
            (2.0 * PI).sqrt() * (-0.5_f64).exp(),
            max_relative = 1e-10
        );
    }

    #[test]
    fn three_dim_cross_checked_by_series() {
        let oracle = HankelOracle {
            dim: 3,
            integrand: |r: f64| {
                let x = (-2.0 * r).exp();
                r * r * 2.0 * x / (1.0 + x)
            },
            truncation_radius: 40.0,
            tol: 1e-12,
        };
        // v(r) = r²(1−tanh r) in 3-D: the paper's series has m = 2
        let (hankel, _) = oracle.transform(1.0).unwrap();
        let series = vhat_odd(2, 3, 1.0, 300).unwrap();
        assert_relative_eq!(hankel, series, max_relative = 1e-8);
    }
}
