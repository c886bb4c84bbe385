//! Minimal double-double helpers (error-free transformations).
//!
//! Used where a handful of large terms cancel to a small result: the
//! half-integer Bessel brackets and iterative refinement residuals.

/// Error-free sum: a + b = s + e exactly.
#[inline]
pub fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    let e = (a - (s - bb)) + (b - bb);
    (s, e)
}

/// Error-free product via FMA: a·b = p + e exactly.
#[inline]
pub fn two_prod(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    let e = a.mul_add(b, -p);
    (p, e)
}

/// Compensated running sum (hi, lo).
#[derive(Clone, Copy, Default)]
pub struct DdAcc {
    hi: f64,
    lo: f64,
}

impl DdAcc {
    #[inline]
    pub fn add(&mut self, x: f64) {
        let (s, e) = two_sum(self.hi, x);
        self.hi = s;
        self.lo += e;
    }

    /// Accumulate a·b with its rounding error.
    #[inline]
    pub fn add_prod(&mut self, a: f64, b: f64) {
        let (p, e) = two_prod(a, b);
        self.add(p);
        self.lo += e;
    }

    #[inline]
    pub fn value(&self) -> f64 {
        self.hi + self.lo
    }
}

/// Compensated dot product, returns Σ a[i]·b[i] to roughly double precision.
pub fn dd_dot(a: &[f64], b: &[f64]) -> f64 {
    let mut acc = DdAcc::default();
    for (x, y) in a.iter().zip(b) {
        acc.add_prod(*x, *y);
    }
    acc.value()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cancellation_survives() {
        let mut acc = DdAcc::default();
        acc.add(1e16);
        acc.add(1.0);
        acc.add(-1e16);
        assert_eq!(acc.value(), 1.0);
    }

    #[test]
    fn dot_is_compensated() {
        let a = [1e8, 1.0, -1e8];
        let b = [1e8, 1.0, 1e8];
        assert_eq!(dd_dot(&a, &b), 1.0);
    }
}
