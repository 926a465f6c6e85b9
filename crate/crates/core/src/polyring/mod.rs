//! Exact sparse multivariate polynomials with an internal weight grading.

mod monomial;
mod polynomial;
mod ring;
mod text;

pub use monomial::{Monomial, MonomialOrder};
pub use polynomial::{Polynomial, Weight};
pub use ring::{Ring, RingDescriptor, Variable};
