//! Exact arithmetic in free supercommutative algebras over Q.

mod context;
mod monomial;
mod parse;
mod poly;

pub use context::{Parity, Var, VariableContext, MAX_ODD_VARS};
pub use monomial::SuperMonomial;
pub(crate) use monomial::sort_odd_sequence;
pub use poly::SuperPolynomial;
pub(crate) use poly::resolve_image;

/// Exact coefficients.
pub type Rational = num_rational::BigRational;

/// Rational from an integer.
pub fn q(n: i64) -> Rational {
    Rational::from_integer(n.into())
}
