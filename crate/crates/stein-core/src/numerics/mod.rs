//! Exact arithmetic: extended rationals, negative continued fractions,
//! the modular group action, integer normal forms, signatures and GF(2)
//! linear algebra.

mod cf;
mod ext;
mod gf2;
mod linalg;
mod matrix;
mod mobius;

pub use cf::{neg_continued_fraction, ContinuedFraction};
pub use ext::{floor_frac, Bound, ExtRational, Interval, ParseExtRationalError};
pub use gf2::{solve_gf2_affine, Gf2Affine};
pub(crate) use linalg::{rat_vec, to_rat};
pub use linalg::{rat_kernel, rat_solve, signature, signature_rational, RatMatrix};
pub use matrix::{determinant, smith_normal_form, IntMatrix, IntSymMatrix, Snf};
pub use mobius::MobiusMap;

pub use num_bigint::BigInt;
pub use num_rational::BigRational;

/// Errors raised by the arithmetic layer.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum NumericsError {
    #[error("domain error: {0} requires a finite argument")]
    Infinite(&'static str),
    #[error("0/0 is not a number")]
    Indeterminate,
}

/// Floor of a finite rational as a big integer.
pub fn floor_q(q: &BigRational) -> BigInt {
    q.floor().to_integer()
}

/// Rational from a pair of machine integers; `q` must be nonzero.
pub fn q(p: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(p), BigInt::from(den))
}

/// Integer as a rational.
pub fn qi(p: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(p))
}
