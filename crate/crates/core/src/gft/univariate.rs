//! Univariate generalized Fourier transforms of the hyperbolic family:
//! sech, sech², tanh, under ∫ f(t) e^{−iωt} dt.

use crate::error::{Error, Result};
use std::f64::consts::PI;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TanhFamilyMember {
    Sech,
    Sech2,
    Tanh,
}

/// Transform values:
///   sech  → π sech(πω/2)
///   sech² → πω csch(πω/2)                    (limit 2 at ω = 0)
///   tanh  → −iπ csch(πω/2); the returned real number is the magnitude
///           π csch(πω/2), the full transform being −i times it.
pub fn univariate_tanh_family(which: TanhFamilyMember, omega: f64) -> Result<f64> {
    match which {
        TanhFamilyMember::Sech => Ok(PI / (PI * omega / 2.0).cosh()),
        TanhFamilyMember::Sech2 => {
            if omega == 0.0 {
                Ok(2.0)
            } else {
                Ok(PI * omega / (PI * omega / 2.0).sinh())
            }
        }
        TanhFamilyMember::Tanh => {
            if omega == 0.0 {
                Err(Error::Domain(
                    "transform of tanh has a distributional pole at omega = 0".into(),
                ))
            } else {
                Ok(PI / (PI * omega / 2.0).sinh())
            }
        }
    }
}
