//! Supersymmetric products and superdivisors on (1,1) supercurves, computed exactly.
//!
//! The crate works on a single affine patch with trivialized line bundles: every
//! ring in sight is a free supercommutative algebra over Q, so the constructions
//! reduce to polynomial identities that can be checked mechanically.
//!
//! * [`superalgebra`]: exact arithmetic with even and odd (Grassmann) generators.
//! * [`symmetric`]: tensor powers as one ring, the signed symmetric-group action.
//! * [`invariants`]: even and odd symmetric functions, the invariant-algebra check.
//! * [`divisor`]: relative superdivisors in normal form, quotients, char polynomials.
//! * [`representability`]: conjugate patches, universal divisors, classification,
//!   spin structures and the superdiagonal.
//! * [`random`]: seeded random instances.
//! * [`cli`]: the command-line front end.

pub mod cli;
pub mod divisor;
pub mod error;
pub mod invariants;
pub mod linalg;
pub mod random;
pub mod representability;
pub mod superalgebra;
pub mod symmetric;

pub use error::{Error, Result};
pub use superalgebra::{Parity, Rational, SuperMonomial, SuperPolynomial, VariableContext};
