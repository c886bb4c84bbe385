//! Bessel functions of the first kind: ascending series, half-integer
//! closed forms, and a Hankel asymptotic branch for integer orders.

use crate::dd::DdAcc;
use crate::error::{Error, Result};
use crate::specfun::gamma;
use std::f64::consts::PI;

/// Partial sum of the ascending series (Gradshteyn–Ryzhik 8.440)
///
///   J_ν(z) = Σ_j (−1)^j / (j! Γ(ν+j+1)) (z/2)^{ν+2j}
///
/// truncated after `terms` terms. Truncation is controlled by the caller;
/// rounding limits usable accuracy to roughly ε·max-term.
pub fn bessel_j_series(nu: f64, z: f64, terms: usize) -> Result<f64> {
    if terms == 0 {
        return Err(Error::Contract("bessel_j_series needs terms >= 1".into()));
    }
    if z < 0.0 {
        return Err(Error::Domain("bessel_j_series requires z >= 0".into()));
    }
    if z == 0.0 {
        // limit of the leading term
        return Ok(match nu {
            v if v == 0.0 => 1.0,
            v if v > 0.0 => 0.0,
            _ => f64::INFINITY,
        });
    }
    let half = 0.5 * z;
    let mut term = half.powf(nu) / gamma(nu + 1.0)?;
    let mut acc = DdAcc::default();
    acc.add(term);
    let q = half * half;
    for j in 0..terms - 1 {
        let jf = j as f64;
        term *= -q / ((jf + 1.0) * (nu + jf + 1.0));
        acc.add(term);
    }
    Ok(acc.value())
}

/// J_ν(z) with the term count chosen adaptively (series for z ≤ 12,
/// Hankel asymptotics beyond; ν ≥ −1/2).
pub fn bessel_j(nu: f64, z: f64) -> Result<f64> {
    if z < 0.0 {
        return Err(Error::Domain("bessel_j requires z >= 0".into()));
    }
    // half-integer orders have exact finite forms for any argument
    if (nu - 0.5).fract() == 0.0 && nu >= -0.5 && z > 0.0 {
        let n_dim = (2.0 * (nu + 1.0)) as u32;
        if n_dim % 2 == 1 {
            return bessel_j_halfint_closed(n_dim, z);
        }
    }
    if z <= 12.0 {
        let mut acc;
        let half = 0.5 * z;
        let mut term = half.powf(nu) / gamma(nu + 1.0)?;
        acc = term;
        let q = half * half;
        for j in 0..400 {
            let jf = j as f64;
            term *= -q / ((jf + 1.0) * (nu + jf + 1.0));
            acc += term;
            if term.abs() < 1e-17 * acc.abs().max(1e-300) {
                break;
            }
        }
        Ok(acc)
    } else {
        hankel_asymptotic(nu, z)
    }
}

/// Hankel's large-argument expansion (Abramowitz–Stegun 9.2.5/9.2.6):
/// J_ν(z) = √(2/(πz)) [P cos ω − Q sin ω], ω = z − νπ/2 − π/4.
fn hankel_asymptotic(nu: f64, z: f64) -> Result<f64> {
    let mu = 4.0 * nu * nu;
    let mut p = 1.0;
    let mut q = 0.0;
    let mut term = 1.0_f64;
    let mut prev = f64::INFINITY;
    for k in 1..40 {
        let kf = k as f64;
        term *= (mu - (2.0 * kf - 1.0) * (2.0 * kf - 1.0)) / (kf * 8.0 * z);
        if term.abs() > prev {
            break; // divergent tail of the asymptotic series
        }
        prev = term.abs();
        match k % 4 {
            1 => q += term,
            2 => p -= term,
            3 => q -= term,
            _ => p += term,
        }
        if term.abs() < 1e-18 {
            break;
        }
    }
    let omega = z - nu * PI / 2.0 - PI / 4.0;
    Ok((2.0 / (PI * z)).sqrt() * (p * omega.cos() - q * omega.sin()))
}

/// J_{n/2−1}(z) for odd dimension n by the finite sin/cos formula
/// (Gradshteyn–Ryzhik 8.461 (1); 8.464 (2) for n = 1).
///
/// The two amplitude sums are accumulated in double-double arithmetic:
/// for z below the order they cancel severely.
pub fn bessel_j_halfint_closed(n_dim: u32, z: f64) -> Result<f64> {
    if n_dim % 2 == 0 {
        return Err(Error::Contract(format!(
            "bessel_j_halfint_closed needs odd dimension, got {n_dim}"
        )));
    }
    if z <= 0.0 {
        return Err(Error::Domain(
            "bessel_j_halfint_closed requires z > 0".into(),
        ));
    }
    if n_dim == 1 {
        // J_{−1/2}(z) = √(2/(πz)) cos z
        return Ok((2.0 / (PI * z)).sqrt() * z.cos());
    }
    // ν = m + 1/2 with m = (n−3)/2; amplitude coefficients
    // a_ℓ = (m+ℓ)! / (ℓ! (m−ℓ)! (2z)^ℓ)
    let m = (n_dim - 3) / 2;
    // sin(z − mπ/2), cos(z − mπ/2) by exact quarter-turn swaps: the shifted
    // argument would cost ~ε·m digits that the cancellation below amplifies
    let (sz, cz) = (z.sin(), z.cos());
    let (s, c) = match m % 4 {
        0 => (sz, cz),
        1 => (-cz, sz),
        2 => (-sz, -cz),
        _ => (cz, -sz),
    };
    let mut acc = DdAcc::default();
    let mut a = 1.0_f64; // a_0
    for l in 0..=m {
        let trig = match l % 4 {
            0 => s,
            1 => c,
            2 => -s,
            _ => -c,
        };
        acc.add_prod(a, trig);
        if l < m {
            let lf = l as f64;
            let mf = m as f64;
            a *= (mf + lf + 1.0) * (mf - lf) / ((lf + 1.0) * 2.0 * z);
        }
    }
    Ok((2.0 / (PI * z)).sqrt() * acc.value())
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::{assert_abs_diff_eq, assert_relative_eq};

    #[test]
    fn series_examples() {
        // J_{−1/2}(1) = √(2/π) cos 1
        let v = bessel_j_series(-0.5, 1.0, 40).unwrap();
        assert_relative_eq!(
            v,
            (2.0 / PI).sqrt() * 1.0_f64.cos(),
            max_relative = 1e-13
        );
        assert_eq!(bessel_j_series(0.0, 0.0, 5).unwrap(), 1.0);
        // J_{1/2}(π) = 0
        assert_abs_diff_eq!(bessel_j_series(0.5, PI, 60).unwrap(), 0.0, epsilon = 1e-14);
    }

    #[test]
    fn closed_form_matches_series() {
        for n in [1_u32, 3, 5, 7] {
            for z in [0.1, 1.0, 5.0, 10.0] {
                let closed = bessel_j_halfint_closed(n, z).unwrap();
                let series = bessel_j_series(n as f64 / 2.0 - 1.0, z, 80).unwrap();
                assert_relative_eq!(closed, series, max_relative = 1e-10, epsilon = 1e-13);
            }
        }
    }

    #[test]
    fn closed_form_examples() {
        assert_relative_eq!(
            bessel_j_halfint_closed(1, 1.0).unwrap(),
            0.431_098_868_018_389_8,
            max_relative = 1e-12
        );
        assert_abs_diff_eq!(
            bessel_j_halfint_closed(3, PI).unwrap(),
            0.0,
            epsilon = 1e-15
        );
        // J_{3/2}(2) from the series oracle
        assert_relative_eq!(
            bessel_j_halfint_closed(5, 2.0).unwrap(),
            0.491_293_778_687_162_3,
            max_relative = 1e-11
        );
    }

    #[test]
    fn integer_order_reference() {
        // A&S table values
        assert_relative_eq!(
            bessel_j(0.0, 1.0).unwrap(),
            0.765_197_686_557_966_6,
            max_relative = 1e-12
        );
        assert_relative_eq!(
            bessel_j(1.0, 1.0).unwrap(),
            0.440_050_585_744_933_5,
            max_relative = 1e-12
        );
        assert_relative_eq!(
            bessel_j(0.0, 20.0).unwrap(),
            0.167_024_664_340_583_1,
            max_relative = 1e-9
        );
        assert_relative_eq!(
            bessel_j(1.0, 35.0).unwrap(),
            0.043_990_942_179_625_64,
            max_relative = 1e-8,
            epsilon = 1e-10
        );
    }

    #[test]
    fn domain_errors() {
        assert!(bessel_j_halfint_closed(1, 0.0).is_err());
        assert!(bessel_j_halfint_closed(4, 1.0).is_err());
        assert!(bessel_j_series(0.0, 1.0, 0).is_err());
    }
}
