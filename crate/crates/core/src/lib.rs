//! Projective duals of algebraic sets over ℚ by Gröbner-basis elimination.
//!
//! The dual of `V(p_1, …, p_m) ⊂ ℙⁿ` is computed by eliminating the point
//! coordinates `x` and the multipliers `λ` from
//!
//! ```text
//! p_j(x) = 0                                   j = 1..m
//! u_i - Σ_j λ_j ∂p_j/∂x_i(x) = 0               i = 0..n
//! ```
//!
//! and renaming the hyperplane coordinates `u` back to `x`. Everything is
//! exact: coefficients are arbitrary-precision rationals.
//!
//! ```
//! use dualis::{dualize, io::parse_ideal, Engine};
//!
//! let doc = parse_ideal("ring x0 x1 x2; ideal = x1^3-x0*x2^2;").unwrap();
//! let dual = dualize::dual(&Engine::default(), &doc.ideal()).unwrap();
//! assert_eq!(dual.to_string(), "ideal = 4*x1^3+27*x0*x2^2;");
//! ```

pub mod dualize;
pub mod error;
pub mod groebner;
pub mod io;
pub mod plane_curves;
pub mod plot;
pub mod poly;

pub use error::{Error, Result};
pub use groebner::{Engine, GroebnerBasis, Ideal};
pub use poly::{Monomial, MonomialOrder, Polynomial, Rational, Ring};
