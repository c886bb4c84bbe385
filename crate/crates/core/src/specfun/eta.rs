//! Alternating zeta sums via series acceleration.

use crate::error::{Error, Result};

/// S(σ) = Σ_{k≥1} (−1)^k / k^σ = −η(σ), η the Dirichlet eta function.
///
/// Uses the Cohen–Rodriguez Villegas–Zagier acceleration for alternating
/// series; with n = 24 Chebyshev steps the error is below (3+√8)^{−24},
/// comfortably under 1e−16 in absolute terms. Raw partial sums would need
/// about 10^14 terms for 1e−14 at σ = 2.
pub fn alt_zeta_sum(sigma: f64) -> Result<f64> {
    if sigma <= 1.0 {
        return Err(Error::Domain(format!(
            "alt_zeta_sum requires sigma > 1, got {sigma}"
        )));
    }
    const N: usize = 24;
    let mut d = (3.0 + 8.0_f64.sqrt()).powi(N as i32);
    d = 0.5 * (d + 1.0 / d);
    let mut b = -1.0;
    let mut c = -d;
    let mut eta = 0.0;
    for k in 0..N {
        c = b - c;
        eta += c * ((k + 1) as f64).powf(-sigma);
        b *= ((k + N) as f64) * ((k as f64) - N as f64)
            / ((k as f64 + 0.5) * (k as f64 + 1.0));
    }
    Ok(-(eta / d))
}
