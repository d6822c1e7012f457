//! Scalar tower: Laurent polynomials in q, their field of fractions, and
//! the extension by formal square roots of q-multinomial values.

pub mod laurent;
pub mod rational;
pub mod scalar;

pub use laurent::{rat, LaurentPoly};
pub use rational::RationalScalar;
pub use scalar::{RadicalSymbol, Scalar};
