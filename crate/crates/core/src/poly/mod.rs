//! Exact sparse multivariate polynomials over ℚ.

mod monomial;
mod order;
mod polynomial;
mod ring;

pub use monomial::{Exponent, Monomial};
pub use order::{Block, BlockKind, MonomialOrder};
pub use polynomial::{Polynomial, Rational, Term};
pub use ring::Ring;

pub(crate) use ring::check_same_ring;
