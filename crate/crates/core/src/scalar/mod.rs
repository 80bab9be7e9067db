//! Exact scalars for the h-branch and numeric q-arithmetic.
//!
//! [`Rational`] is an arbitrary-precision reduced fraction, [`RadicalSum`]
//! adjoins square roots of rationals, and [`HScalar`] is a polynomial in the
//! deformation parameter `h` over radical sums.

mod format;
mod hscalar;
mod parse;
mod qnum;
mod radical;

pub use hscalar::HScalar;
pub use qnum::{q_factorial, q_number, QValue};
pub use radical::{sqrt_rational, RadicalSum};

use thiserror::Error;

/// Reduced fraction with arbitrary-precision numerator and positive denominator.
pub type Rational = num_rational::BigRational;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ScalarError {
    #[error("square root of non-positive rational {0}")]
    NonPositiveRadicand(String),
    #[error("radicand {0} is too large to reduce")]
    RadicandTooLarge(String),
    #[error("q must be a positive finite real, got {0}")]
    InvalidQ(f64),
    #[error("parse error at byte {position}: {message}")]
    Parse { position: usize, message: String },
}

/// `n!` as an exact rational.
pub fn factorial(n: u32) -> Rational {
    let mut acc = num_bigint::BigInt::from(1u8);
    for k in 2..=n {
        acc *= k;
    }
    Rational::from_integer(acc)
}

/// Shorthand for `numerator / denominator`.
pub fn rational(numerator: i64, denominator: i64) -> Rational {
    Rational::new(numerator.into(), denominator.into())
}
