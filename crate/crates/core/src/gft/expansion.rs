//! Expansion-at-zero container for generalized Fourier transforms.

use crate::error::{Error, Result};

/// One term coeff · s^{−q} · (log s)^{log_power}. Positive q is singular,
/// q ≤ 0 analytic. `log_power` 2 occurs only for the r^{−n−2k} log r
/// transforms, which carry a squared logarithm.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ExpansionTerm {
    pub q: f64,
    pub log_power: u8,
    pub coeff: f64,
}

/// Symbolic delta-supported part coeff · (∂₁²+···+∂ₙ²)^k δ(y).
/// Metadata only; it has no pointwise value and is never evaluated.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct DeltaTerm {
    pub laplacian_power: u32,
    pub coeff: f64,
}

/// A short expansion of a radial generalized Fourier transform at the origin.
#[derive(Clone, Debug)]
pub struct RadialExpansion {
    pub dim: u32,
    /// sorted by descending q; at most one term per (q, log_power)
    pub terms: Vec<ExpansionTerm>,
    pub delta_terms: Vec<DeltaTerm>,
    /// radius of validity of the analytic part (∞ for exact closed forms)
    pub valid_radius: f64,
    /// number of analytic terms kept, 0 when the expansion is exact
    pub truncation_order: usize,
}

impl RadialExpansion {
    pub fn new(dim: u32) -> Self {
        RadialExpansion {
            dim,
            terms: Vec::new(),
            delta_terms: Vec::new(),
            valid_radius: f64::INFINITY,
            truncation_order: 0,
        }
    }

    /// Insert a term, merging with an existing (q, log_power) slot and
    /// keeping the descending-q order.
    pub fn push_term(&mut self, q: f64, log_power: u8, coeff: f64) {
        if coeff == 0.0 {
            return;
        }
        if let Some(t) = self
            .terms
            .iter_mut()
            .find(|t| t.q == q && t.log_power == log_power)
        {
            t.coeff += coeff;
            if t.coeff == 0.0 {
                self.terms.retain(|t| t.coeff != 0.0);
            }
            return;
        }
        self.terms.push(ExpansionTerm { q, log_power, coeff });
        self.terms.sort_by(|a, b| {
            b.q.total_cmp(&a.q)
                .then(a.log_power.cmp(&b.log_power))
        });
    }

    pub fn push_delta(&mut self, laplacian_power: u32, coeff: f64) {
        if coeff != 0.0 {
            self.delta_terms.push(DeltaTerm {
                laplacian_power,
                coeff,
            });
        }
    }

    /// Leading singular term (largest q with q > 0), if any.
    pub fn leading(&self) -> Option<&ExpansionTerm> {
        self.terms.first().filter(|t| t.q > 0.0)
    }

    /// Multiply every function and delta coefficient by `factor`.
    pub fn scaled(mut self, factor: f64) -> Self {
        for t in &mut self.terms {
            t.coeff *= factor;
        }
        for d in &mut self.delta_terms {
            d.coeff *= factor;
        }
        self
    }

    /// Pointwise value of the function part at s > 0. Delta terms carry no
    /// pointwise value and do not contribute. Refuses s at or beyond the
    /// validity radius of a truncated series.
    pub fn eval(&self, s: f64) -> Result<f64> {
        if s <= 0.0 {
            return Err(Error::Domain(format!("expansion evaluated at s = {s}")));
        }
        if s >= self.valid_radius {
            return Err(Error::Range(format!(
                "s = {s} outside validity radius {}",
                self.valid_radius
            )));
        }
        let ln_s = s.ln();
        let mut acc = 0.0;
        for t in &self.terms {
            let mut v = t.coeff * s.powf(-t.q);
            for _ in 0..t.log_power {
                v *= ln_s;
            }
            acc += v;
        }
        Ok(acc)
    }

    /// Canonical text form, one term per line, descending q:
    /// `coeff * s^e [* log s]`, plus symbolic delta lines.
    pub fn canonical_text(&self) -> String {
        let mut out = Vec::new();
        for t in &self.terms {
            let mut line = format!("{} * s^{}", t.coeff, -t.q);
            for _ in 0..t.log_power {
                line.push_str(" * log s");
            }
            out.push(line);
        }
        for d in &self.delta_terms {
            if d.laplacian_power == 0 {
                out.push(format!("{} * delta", d.coeff));
            } else {
                out.push(format!("{} * lap^{}(delta)", d.coeff, d.laplacian_power));
            }
        }
        out.join("\n")
    }
}
