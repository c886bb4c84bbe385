//! Modified Bessel function of the second kind K_ν(z), real order ν ≥ 0.
//!
//! Three routes, chosen by argument:
//!   - half-integer ν: exact finite form K_{m+1/2}(z) = √(π/2z) e^{−z} Σ …
//!   - z ≤ 2: Temme's series for K_μ, K_{μ+1} with |μ| ≤ 1/2 (Temme 1975,
//!     the `bessik` scheme of Numerical Recipes §6.7), then upward recurrence
//!   - z > 2: the Steed/Thompson–Barnett continued fraction CF2, same
//!     recurrence.

use crate::error::{Error, Result};
use std::f64::consts::PI;

const EPS: f64 = 1e-16;
const MAX_ITER: usize = 10_000;

/// K_ν(z) for ν ≥ 0, z > 0.
pub fn bessel_k(nu: f64, z: f64) -> Result<f64> {
    if z <= 0.0 {
        return Err(Error::Domain(format!("bessel_k requires z > 0, got {z}")));
    }
    if nu < 0.0 {
        // K_{−ν} = K_ν would be fine, but the contract keeps ν ≥ 0
        return Err(Error::Domain(format!("bessel_k requires nu >= 0, got {nu}")));
    }
    if (nu - 0.5).fract() == 0.0 {
        return Ok(bessel_k_halfint(nu, z));
    }
    let n_shift = (nu + 0.5).floor() as usize;
    let mu = nu - n_shift as f64;
    let (mut k_mu, mut k_mu1) = if z <= 2.0 {
        temme_series(mu, z)?
    } else {
        cf2(mu, z)?
    };
    // upward recurrence K_{μ+i+1} = K_{μ+i−1} + 2(μ+i)/z K_{μ+i} (stable for K)
    for i in 0..n_shift {
        let next = k_mu + 2.0 * (mu + i as f64 + 1.0) / z * k_mu1;
        k_mu = k_mu1;
        k_mu1 = next;
    }
    Ok(k_mu)
}

/// Finite closed form for half-integer order (Abramowitz–Stegun 10.2.15):
/// K_{m+1/2}(z) = √(π/(2z)) e^{−z} Σ_{k=0}^{m} (m+k)!/(k!(m−k)!(2z)^k).
fn bessel_k_halfint(nu: f64, z: f64) -> f64 {
    let m = (nu - 0.5) as usize;
    let mut term = 1.0;
    let mut sum = 1.0;
    for k in 0..m {
        let kf = k as f64;
        let mf = m as f64;
        term *= (mf + kf + 1.0) * (mf - kf) / ((kf + 1.0) * 2.0 * z);
        sum += term;
    }
    (PI / (2.0 * z)).sqrt() * (-z).exp() * sum
}

/// Temme's Γ-combinations: Γ1 = [1/Γ(1−μ) − 1/Γ(1+μ)]/(2μ), Γ2 = their mean.
fn temme_gammas(mu: f64) -> (f64, f64, f64, f64) {
    let gp = 1.0 / crate::specfun::gamma(1.0 + mu).expect("|mu| <= 1/2");
    let gm = 1.0 / crate::specfun::gamma(1.0 - mu).expect("|mu| <= 1/2");
    let gam2 = 0.5 * (gm + gp);
    let gam1 = if mu.abs() < 1e-4 {
        // odd part of the A&S 6.1.34 series for 1/Γ(1+x): −(c2 + c4 μ² + c6 μ⁴)
        -(0.577_215_664_901_532_9
            + mu * mu * (-0.042_002_635_034_095_24 + mu * mu * -0.009_621_971_527_876_973))
    } else {
        (gm - gp) / (2.0 * mu)
    };
    (gam1, gam2, gp, gm)
}

/// Temme's small-argument series, returns (K_μ, K_{μ+1}), z ≤ 2, |μ| ≤ 1/2.
fn temme_series(mu: f64, z: f64) -> Result<(f64, f64)> {
    let x2 = 0.5 * z;
    let pimu = PI * mu;
    let fact = if pimu.abs() < 1e-12 {
        1.0
    } else {
        pimu / pimu.sin()
    };
    let d = -x2.ln();
    let e = mu * d;
    let fact2 = if e.abs() < 1e-12 { 1.0 } else { e.sinh() / e };
    let (gam1, gam2, gampl, gammi) = temme_gammas(mu);
    // gampl = 1/Γ(1+μ), gammi = 1/Γ(1−μ)
    let mut ff = fact * (gam1 * e.cosh() + gam2 * fact2 * d);
    let mut sum = ff;
    // p₀ = ½ (z/2)^{−μ} Γ(1+μ), q₀ = ½ (z/2)^{μ} Γ(1−μ); e^E = (z/2)^{−μ}
    let e_exp = e.exp();
    let mut p = 0.5 * e_exp / gampl;
    let mut q = 0.5 / (e_exp * gammi);
    let mut c = 1.0;
    let d2 = x2 * x2;
    let mut sum1 = p;
    for i in 1..=MAX_ITER {
        let fi = i as f64;
        ff = (fi * ff + p + q) / (fi * fi - mu * mu);
        c *= d2 / fi;
        p /= fi - mu;
        q /= fi + mu;
        let del = c * ff;
        sum += del;
        let del1 = c * (p - fi * ff);
        sum1 += del1;
        if del.abs() < sum.abs() * EPS {
            return Ok((sum, sum1 * 2.0 / z));
        }
    }
    Err(Error::Numeric("bessel_k Temme series stalled".into()))
}

/// Thompson–Barnett CF2 branch, returns (K_μ, K_{μ+1}), z > 2, |μ| ≤ 1/2.
fn cf2(mu: f64, z: f64) -> Result<(f64, f64)> {
    let mu2 = mu * mu;
    let mut b = 2.0 * (1.0 + z);
    let mut d = 1.0 / b;
    let mut h = d;
    let mut delh = d;
    let mut q1 = 0.0;
    let mut q2 = 1.0;
    let a1 = 0.25 - mu2;
    let mut q = a1;
    let mut c = a1;
    let mut a = -a1;
    let mut s = 1.0 + q * delh;
    for i in 2..=MAX_ITER {
        let fi = i as f64;
        a -= 2.0 * (fi - 1.0);
        c = -a * c / fi;
        let qnew = (q1 - b * q2) / a;
        q1 = q2;
        q2 = qnew;
        q += c * qnew;
        b += 2.0;
        d = 1.0 / (b + a * d);
        delh = (b * d - 1.0) * delh;
        h += delh;
        let dels = q * delh;
        s += dels;
        if (dels / s).abs() < EPS {
            let h = a1 * h;
            let k_mu = (PI / (2.0 * z)).sqrt() * (-z).exp() / s;
            let k_mu1 = k_mu * (mu + z + 0.5 - h) / z;
            return Ok((k_mu, k_mu1));
        }
    }
    Err(Error::Numeric("bessel_k CF2 did not converge".into()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn halfint_closed_forms() {
        // K_{3/2}(1) = e^{−1} √(π/2) (1 + 1/1) = 2 e^{−1} √(π/2)
        assert_relative_eq!(
            bessel_k(1.5, 1.0).unwrap(),
            2.0 * (-1.0_f64).exp() * (PI / 2.0).sqrt(),
            max_relative = 1e-14
        );
        // K_{1/2}(2) = √(π/4) e^{−2}
        assert_relative_eq!(
            bessel_k(0.5, 2.0).unwrap(),
            (PI / 4.0).sqrt() * (-2.0_f64).exp(),
            max_relative = 1e-14
        );
    }

    #[test]
    fn small_z_divergence_rate() {
        // K_2(z) ~ 2/z² as z → 0
        for z in [1e-2, 1e-3, 1e-4] {
            let v = bessel_k(2.0, z).unwrap();
            assert_relative_eq!(v * z * z / 2.0, 1.0, max_relative = 1e-3);
        }
    }

    #[test]
    fn reference_values() {
        // high-precision references for the general routes
        assert_relative_eq!(
            bessel_k(0.0, 1.0).unwrap(),
            0.421_024_438_240_708_33,
            max_relative = 1e-12
        );
        assert_relative_eq!(
            bessel_k(1.0, 1.0).unwrap(),
            0.601_907_230_197_234_6,
            max_relative = 1e-12
        );
        assert_relative_eq!(
            bessel_k(2.0, 0.005).unwrap(),
            79_999.500_019_263_32,
            max_relative = 1e-10
        );
        assert_relative_eq!(
            bessel_k(2.0, 3.141_592_653_589_793).unwrap(),
            0.051_098_690_253_792_58,
            max_relative = 1e-11
        );
        assert_relative_eq!(
            bessel_k(10.0, 30.0).unwrap(),
            1.084_281_694_222_297_4e-13,
            max_relative = 1e-10
        );
        assert_relative_eq!(
            bessel_k(3.3, 0.7).unwrap(),
            40.693_867_201_698_25,
            max_relative = 1e-11
        );
        assert_relative_eq!(
            bessel_k(3.3, 8.5).unwrap(),
            1.573_663_403_734_497_9e-4,
            max_relative = 1e-11
        );
    }

    #[test]
    fn halfint_consistency_with_general_routes() {
        // force the general machinery at nearly-half-integer order and
        // compare with the closed form
        for &(nu, z) in &[(1.5_f64, 0.8_f64), (2.5, 5.0), (4.5, 12.0)] {
            let closed = bessel_k(nu, z).unwrap();
            let general = {
                let shifted = bessel_k(nu + 1e-9, z).unwrap();
                shifted
            };
            assert_relative_eq!(closed, general, max_relative = 1e-6);
        }
    }

    #[test]
    fn domain_errors() {
        assert!(bessel_k(1.0, 0.0).is_err());
        assert!(bessel_k(-1.0, 1.0).is_err());
    }
}
