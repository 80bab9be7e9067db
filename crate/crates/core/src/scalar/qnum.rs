use super::ScalarError;

/// A positive real deformation parameter `q` with its quarter and half powers.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct QValue {
    q: f64,
    quarter: f64,
    half: f64,
}

impl QValue {
    pub fn new(q: f64) -> Result<Self, ScalarError> {
        if !(q.is_finite() && q > 0.0) {
            return Err(ScalarError::InvalidQ(q));
        }
        Ok(Self { q, quarter: q.powf(0.25), half: q.sqrt() })
    }

    pub fn undeformed() -> Self {
        Self { q: 1.0, quarter: 1.0, half: 1.0 }
    }

    pub fn value(&self) -> f64 {
        self.q
    }

    /// `q^{1/4}`
    pub fn quarter(&self) -> f64 {
        self.quarter
    }

    /// `q^{1/2}`
    pub fn half(&self) -> f64 {
        self.half
    }

    pub fn powf(&self, exponent: f64) -> f64 {
        self.q.powf(exponent)
    }

    pub fn inverse(&self) -> Self {
        Self::new(1.0 / self.q).expect("inverse of a positive q is positive")
    }
}

/// The q-number `[n]_q = (q^{n/2} - q^{-n/2}) / (q^{1/2} - q^{-1/2})`.
///
/// Evaluated as `sinh(n·ln q / 2) / sinh(ln q / 2)`, which is stable near
/// `q = 1` and returns `n` exactly there.
pub fn q_number(n: f64, q: &QValue) -> f64 {
    let t = q.value().ln() / 2.0;
    if t == 0.0 {
        return n;
    }
    (n * t).sinh() / t.sinh()
}

/// `[n]_q! = [1]_q [2]_q ⋯ [n]_q`, with `[0]_q! = 1`.
pub fn q_factorial(n: u32, q: &QValue) -> f64 {
    (1..=n).map(|k| q_number(k as f64, q)).product()
}
