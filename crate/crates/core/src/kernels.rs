//! Radial basis function families and their numerically stable splits.
//!
//! The hyperbolic-tangent kernels r^β tanh^α r (optionally times log r) are
//! split as g = u − v into a generalized-function part u (pure power or
//! power-log) and an exponentially decaying L¹ remainder v; v is always
//! evaluated through 2e^{−2r}/(1+e^{−2r}) style forms, never as a difference
//! of nearly equal quantities.

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum KernelFamily {
    /// r^β
    Power,
    /// r^β log r + correction · r^β
    PowerLog,
    /// r^β tanh^α r
    TanhPower,
    /// (r^β log r + correction · r^β) tanh^α r, β an even positive integer
    TanhPowerLog,
    /// (r^{2β̄} + c^{2β̄})^γ̄
    GenMultiquadric,
    /// (r^{2β̄} + c^{2β̄})^γ̄ log(r^{2β̄} + c^{2β̄})
    GenTpsLog,
    /// (c²+r²) log √(c²+r²) − c² log c − r² log c = ½(c²+r²) log(1 + r²/c²).
    /// Also answers to the name "shifted TPS"; the same family shows up as a
    /// comparator in two experiments.
    PolyharmonicShift,
}

/// A radial kernel descriptor: family tag plus the real parameters it uses.
#[derive(Clone, Copy, Debug, Serialize, Deserialize)]
pub struct RadialKernel {
    pub family: KernelFamily,
    /// power exponent β (Power/PowerLog/TanhPower/TanhPowerLog)
    #[serde(default)]
    pub beta: f64,
    /// tanh exponent α ≥ 0
    #[serde(default)]
    pub alpha: f64,
    /// shift c > 0 (generalized MQ / polyharmonic shift)
    #[serde(default)]
    pub c: f64,
    /// generalized-MQ exponent β̄ > 0
    #[serde(default)]
    pub mq_beta: f64,
    /// generalized-MQ exponent γ̄
    #[serde(default)]
    pub mq_gamma: f64,
    /// coefficient of the added r^β term (delta cancellation)
    #[serde(default)]
    pub correction: f64,
}

fn is_nonneg_integer(x: f64) -> bool {
    x >= 0.0 && x == x.floor()
}

fn is_even_positive_integer(x: f64) -> bool {
    x > 0.0 && x == x.floor() && (x as i64) % 2 == 0
}

impl RadialKernel {
    pub fn power(beta: f64) -> Self {
        RadialKernel {
            family: KernelFamily::Power,
            beta,
            alpha: 0.0,
            c: 0.0,
            mq_beta: 0.0,
            mq_gamma: 0.0,
            correction: 0.0,
        }
    }

    pub fn power_log(beta: f64, correction: f64) -> Self {
        RadialKernel {
            family: KernelFamily::PowerLog,
            beta,
            correction,
            ..Self::power(beta)
        }
    }

    pub fn tanh_power(beta: f64, alpha: f64) -> Result<Self> {
        if alpha < 0.0 {
            return Err(Error::Contract(format!("tanh exponent must be >= 0, got {alpha}")));
        }
        if alpha + beta <= 0.0 {
            return Err(Error::Contract(format!(
                "tanh kernel requires alpha + beta > 0, got {}",
                alpha + beta
            )));
        }
        Ok(RadialKernel {
            family: KernelFamily::TanhPower,
            beta,
            alpha,
            ..Self::power(beta)
        })
    }

    pub fn tanh_power_log(beta: f64, alpha: f64, correction: f64) -> Result<Self> {
        if !is_even_positive_integer(beta) {
            return Err(Error::Contract(format!(
                "log variant requires beta an even positive integer, got {beta}"
            )));
        }
        if alpha < 0.0 {
            return Err(Error::Contract(format!("tanh exponent must be >= 0, got {alpha}")));
        }
        Ok(RadialKernel {
            family: KernelFamily::TanhPowerLog,
            beta,
            alpha,
            correction,
            ..Self::power(beta)
        })
    }

    /// Admissibility gate: β̄ > 0, c > 0, γ̄ not a nonnegative integer
    /// (integer γ̄ makes the kernel a polynomial in r^{2β̄} with no singular
    /// transform part).
    pub fn gen_multiquadric(mq_beta: f64, mq_gamma: f64, c: f64) -> Result<Self> {
        if c <= 0.0 || mq_beta <= 0.0 {
            return Err(Error::Contract(
                "generalized multiquadric requires c > 0 and mq_beta > 0".into(),
            ));
        }
        if is_nonneg_integer(mq_gamma) {
            return Err(Error::Contract(format!(
                "generalized multiquadric gate: mq_gamma must not be a nonnegative integer, got {mq_gamma}"
            )));
        }
        Ok(RadialKernel {
            family: KernelFamily::GenMultiquadric,
            c,
            mq_beta,
            mq_gamma,
            ..Self::power(0.0)
        })
    }

    pub fn gen_tps_log(mq_beta: f64, mq_gamma: f64, c: f64) -> Result<Self> {
        if c <= 0.0 || mq_beta <= 0.0 {
            return Err(Error::Contract(
                "generalized TPS-log requires c > 0 and mq_beta > 0".into(),
            ));
        }
        Ok(RadialKernel {
            family: KernelFamily::GenTpsLog,
            c,
            mq_beta,
            mq_gamma,
            ..Self::power(0.0)
        })
    }

    pub fn polyharmonic_shift(c: f64) -> Result<Self> {
        if c <= 0.0 {
            return Err(Error::Contract("polyharmonic shift requires c > 0".into()));
        }
        Ok(RadialKernel {
            family: KernelFamily::PolyharmonicShift,
            c,
            ..Self::power(0.0)
        })
    }

    /// φ(r) for r ≥ 0; continuous limits at r = 0 where they exist.
    pub fn eval(&self, r: f64) -> Result<f64> {
        if r < 0.0 {
            return Err(Error::Domain(format!("kernel argument must be >= 0, got {r}")));
        }
        match self.family {
            KernelFamily::Power => {
                if r == 0.0 {
                    return match self.beta {
                        b if b > 0.0 => Ok(0.0),
                        b if b == 0.0 => Ok(1.0),
                        _ => Err(Error::Domain("r^beta with beta < 0 at r = 0".into())),
                    };
                }
                Ok(r.powf(self.beta))
            }
            KernelFamily::PowerLog => {
                if r == 0.0 {
                    return if self.beta > 0.0 {
                        Ok(0.0)
                    } else {
                        Err(Error::Domain("r^beta log r at r = 0 with beta <= 0".into()))
                    };
                }
                Ok(r.powf(self.beta) * (r.ln() + self.correction))
            }
            KernelFamily::TanhPower => {
                if r == 0.0 {
                    // alpha + beta > 0 enforced at construction
                    return Ok(if self.beta + self.alpha > 0.0 { 0.0 } else { 1.0 });
                }
                Ok(r.powf(self.beta) * r.tanh().powf(self.alpha))
            }
            KernelFamily::TanhPowerLog => {
                if r == 0.0 {
                    return Ok(0.0);
                }
                Ok(r.powf(self.beta) * (r.ln() + self.correction) * r.tanh().powf(self.alpha))
            }
            KernelFamily::GenMultiquadric => {
                let tb = 2.0 * self.mq_beta;
                Ok((r.powf(tb) + self.c.powf(tb)).powf(self.mq_gamma))
            }
            KernelFamily::GenTpsLog => {
                let tb = 2.0 * self.mq_beta;
                let base = r.powf(tb) + self.c.powf(tb);
                Ok(base.powf(self.mq_gamma) * base.ln())
            }
            KernelFamily::PolyharmonicShift => {
                let q = r * r / (self.c * self.c);
                Ok(0.5 * (self.c * self.c + r * r) * q.ln_1p())
            }
        }
    }
}

/// Stable evaluator for 1 − tanh^α r.
///
/// 1 − tanh r = 2e^{−2r}/(1+e^{−2r}); for general α the power goes through
/// expm1(α·log1p(−δ)) with δ = 1 − tanh r, avoiding the 1−(1−ε)^α
/// cancellation at large r.
pub fn one_minus_tanh_pow(alpha: f64, r: f64) -> f64 {
    if r == 0.0 {
        return 1.0;
    }
    let e = (-2.0 * r).exp();
    let delta = 2.0 * e / (1.0 + e); // 1 − tanh r
    if alpha == 1.0 {
        return delta;
    }
    -f64::exp_m1(alpha * f64::ln_1p(-delta))
}

/// The u − v split of a hyperbolic-tangent kernel: u is the generalized
/// function (pure power or power-log, correction kept), v the exponentially
/// decaying L¹ remainder.
#[derive(Clone, Copy, Debug)]
pub struct KernelSplit {
    pub singular_part: RadialKernel,
    beta: f64,
    alpha: f64,
    log: bool,
    correction: f64,
}

impl KernelSplit {
    /// v(r) = r^β (1 − tanh^α r), times (log r + correction) for the log family.
    pub fn remainder(&self, r: f64) -> f64 {
        if r == 0.0 {
            return if self.beta > 0.0 {
                0.0
            } else if self.log {
                f64::NEG_INFINITY
            } else {
                1.0
            };
        }
        let base = r.powf(self.beta) * one_minus_tanh_pow(self.alpha, r);
        if self.log {
            base * (r.ln() + self.correction)
        } else {
            base
        }
    }
}

/// Split g = u − v for the TanhPower / TanhPowerLog families.
pub fn split(kernel: &RadialKernel) -> Result<KernelSplit> {
    match kernel.family {
        KernelFamily::TanhPower => Ok(KernelSplit {
            singular_part: RadialKernel::power(kernel.beta),
            beta: kernel.beta,
            alpha: kernel.alpha,
            log: false,
            correction: 0.0,
        }),
        KernelFamily::TanhPowerLog => Ok(KernelSplit {
            singular_part: RadialKernel::power_log(kernel.beta, kernel.correction),
            beta: kernel.beta,
            alpha: kernel.alpha,
            log: true,
            correction: kernel.correction,
        }),
        _ => Err(Error::Contract(format!(
            "split is defined for the tanh families, got {:?}",
            kernel.family
        ))),
    }
}

/// r^β (1 − tanh^α r) by the double series in e^{−2r}: the k-odd sum of
/// generalized binomial terms Γ(α+1)/(Γ(k+1)Γ(α−k+1)) e^{−2rk} times
/// 2r^β/(1+e^{−2r})^α. Returns (value, truncation bound).
pub fn v_remainder_series(beta: f64, alpha: f64, r: f64, terms: usize) -> Result<(f64, f64)> {
    if r <= 0.0 {
        return Err(Error::Domain("series in e^{-2r} needs r > 0".into()));
    }
    if terms == 0 {
        return Err(Error::Contract("need at least one series term".into()));
    }
    if alpha <= 0.0 && alpha == alpha.floor() {
        return Err(Error::Domain(
            "binomial gamma ratios undefined for nonpositive integer alpha".into(),
        ));
    }
    let x = (-2.0 * r).exp();
    // odd-k binomial coefficients by recurrence:
    // C(α,1) = α, C(α,k+2) = C(α,k)(α−k)(α−k−1)/((k+1)(k+2))
    let mut coeff = alpha;
    let mut xk = x;
    let mut sum = 0.0;
    let mut last = 0.0;
    let mut k = 1.0;
    for _ in 0..terms {
        last = coeff * xk;
        sum += last;
        coeff *= (alpha - k) * (alpha - k - 1.0) / ((k + 1.0) * (k + 2.0));
        xk *= x * x;
        k += 2.0;
    }
    let prefactor = 2.0 * r.powf(beta) / (1.0 + x).powf(alpha);
    // geometric tail bound on the odd-k series
    let bound = prefactor * last.abs() * x * x / (1.0 - x * x);
    Ok((prefactor * sum, bound))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quad;
    use approx::{assert_abs_diff_eq, assert_relative_eq};
    use std::f64::consts::PI;

    #[test]
    fn eval_examples() {
        let k = RadialKernel::tanh_power(3.0, 1.0).unwrap();
        assert_relative_eq!(k.eval(1.0).unwrap(), 1.0_f64.tanh(), max_relative = 1e-15);
        assert_eq!(k.eval(0.0).unwrap(), 0.0);
        let shifted = RadialKernel::polyharmonic_shift(0.5).unwrap();
        assert_eq!(shifted.eval(0.0).unwrap(), 0.0);
        // closed form vs the three-term original expression at a generic point
        let r: f64 = 1.7;
        let c: f64 = 0.5;
        let direct = (c * c + r * r) * (c * c + r * r).sqrt().ln()
            - c * c * c.ln()
            - r * r * c.ln();
        assert_relative_eq!(shifted.eval(r).unwrap(), direct, max_relative = 1e-13);
    }

    #[test]
    fn construction_gates() {
        assert!(RadialKernel::tanh_power(-2.0, 1.0).is_err()); // α+β ≤ 0
        assert!(RadialKernel::tanh_power_log(3.0, 1.0, 0.0).is_err()); // β odd
        assert!(RadialKernel::gen_multiquadric(1.0, 2.0, 0.5).is_err()); // γ̄ ∈ ℕ₀
        assert!(RadialKernel::gen_multiquadric(1.0, 1.5, 0.0).is_err()); // c = 0
        assert!(RadialKernel::gen_multiquadric(1.0, 1.5, 0.5).is_ok());
    }

    #[test]
    fn split_remainder_values() {
        let k = RadialKernel::tanh_power(3.0, 1.0).unwrap();
        let s = split(&k).unwrap();
        assert_relative_eq!(
            s.remainder(1.0),
            1.0 - 1.0_f64.tanh(),
            max_relative = 1e-14
        );
        // ∫_ℝ v(|x|) dx = 2∫₀^∞ r³(1−tanh r) dr = 7π⁴/480
        let (integral, _) = quad::integrate(|r| s.remainder(r), 0.0, 40.0, 1e-13).unwrap();
        assert_relative_eq!(
            2.0 * integral,
            7.0 * PI.powi(4) / 480.0,
            max_relative = 1e-11
        );
    }

    #[test]
    fn split_consistency() {
        // u − v = g pointwise, deterministic pseudo-random sample
        for &(beta, alpha) in &[(3.0, 1.0), (2.0, 2.0), (1.5, 0.5)] {
            let g = RadialKernel::tanh_power(beta, alpha).unwrap();
            let s = split(&g).unwrap();
            let mut state = 123456789_u64;
            for _ in 0..100 {
                state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                let r = 20.0 * ((state >> 11) as f64) / ((1_u64 << 53) as f64);
                if r == 0.0 {
                    continue;
                }
                let lhs = s.singular_part.eval(r).unwrap() - s.remainder(r);
                let rhs = g.eval(r).unwrap();
                assert_relative_eq!(lhs, rhs, max_relative = 1e-12, epsilon = 1e-13);
            }
        }
    }

    #[test]
    fn tanh_power_asymptotics() {
        let k = RadialKernel::tanh_power(3.0, 1.0).unwrap();
        // near zero: φ(r)/r^{α+β} → 1
        let ratio3 = k.eval(1e-3).unwrap() / 1e-3_f64.powi(4);
        let ratio4 = k.eval(1e-4).unwrap() / 1e-4_f64.powi(4);
        assert!((ratio3 - 1.0).abs() < 1e-2);
        assert!((ratio4 - 1.0).abs() < 1e-2);
        assert!((ratio4 - 1.0).abs() < (ratio3 - 1.0).abs());
        // towards infinity: φ(r)/r^β → 1
        assert!((k.eval(20.0).unwrap() / 20.0_f64.powi(3) - 1.0).abs() < 1e-15 * 20.0);
        assert!((k.eval(40.0).unwrap() / 40.0_f64.powi(3) - 1.0).abs() <= 1e-15);
        // nonnegative on a sweep
        for i in 0..200 {
            assert!(k.eval(i as f64 * 0.1).unwrap() >= 0.0);
        }
    }

    #[test]
    fn v_decay_rate() {
        // v(r)·e^{2r}/(2 r^β) → 1 for α = 1
        let s = split(&RadialKernel::tanh_power(3.0, 1.0).unwrap()).unwrap();
        for r in [15.0, 20.0] {
            let ratio = s.remainder(r) * (2.0 * r).exp() / (2.0 * r.powi(3));
            assert_relative_eq!(ratio, 1.0, max_relative = 1e-10);
        }
    }

    #[test]
    fn remainder_series_matches_direct() {
        let (v, _) = v_remainder_series(3.0, 1.0, 1.0, 40).unwrap();
        assert_relative_eq!(v, 1.0 - 1.0_f64.tanh(), max_relative = 1e-12);

        let (v, _) = v_remainder_series(1.0, 2.0, 2.0, 40).unwrap();
        let sech2 = {
            let t = 2.0_f64.tanh();
            1.0 - t * t
        };
        assert_relative_eq!(v, 2.0 * sech2, max_relative = 1e-12);

        let (v, bound) = v_remainder_series(0.5, 0.5, 3.0, 60).unwrap();
        let direct = 3.0_f64.powf(0.5) * one_minus_tanh_pow(0.5, 3.0);
        assert_relative_eq!(v, direct, max_relative = 1e-10);
        assert!(bound < 1e-12);
    }

    #[test]
    fn remainder_series_truncation_bound() {
        // under-resolved at small r: the returned bound covers the defect
        let (v, bound) = v_remainder_series(3.0, 0.5, 0.2, 3).unwrap();
        let direct = 0.2_f64.powi(3) * one_minus_tanh_pow(0.5, 0.2);
        assert!((v - direct).abs() <= bound * 1.01 + 1e-15);
    }

    #[test]
    fn gen_mq_matches_classic() {
        // β̄ = 1, γ̄ = 3/2 is the Example-1 comparator (c²+r²)^{3/2}
        let k = RadialKernel::gen_multiquadric(1.0, 1.5, 0.5).unwrap();
        assert_relative_eq!(
            k.eval(2.0).unwrap(),
            (0.25_f64 + 4.0).powf(1.5),
            max_relative = 1e-15
        );
    }
}
