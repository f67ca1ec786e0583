use std::fmt;

use num_traits::{One, Signed};

use crate::groebner::Ideal;
use crate::poly::{Polynomial, Rational, Ring};

pub fn print_rational(c: &Rational) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

/// Canonical text of a polynomial: descending degrevlex, `*` between factors,
/// `^` for powers, unit coefficients omitted.
pub fn print_polynomial(p: &Polynomial) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let ring = p.ring();
    let mut out = String::new();
    for (i, term) in p.terms().iter().enumerate() {
        let negative = term.coeff.is_negative();
        if negative {
            out.push('-');
        } else if i > 0 {
            out.push('+');
        }
        let abs = term.coeff.abs();
        let mut factors: Vec<String> = Vec::new();
        if !abs.is_one() || term.monomial.is_one() {
            factors.push(print_rational(&abs));
        }
        for (v, &e) in term.monomial.exponents().iter().enumerate() {
            match e {
                0 => {}
                1 => factors.push(ring.name(v).to_string()),
                _ => factors.push(format!("{}^{}", ring.name(v), e)),
            }
        }
        out.push_str(&factors.join("*"));
    }
    out
}

/// `ideal = g1; g2; ...;` on one line. The zero ideal prints as `ideal = 0;`.
pub fn print_ideal(ideal: &Ideal) -> String {
    let gens = ideal.generators();
    if gens.is_empty() {
        return "ideal = 0;".to_string();
    }
    let body: Vec<String> = gens.iter().map(print_polynomial).collect();
    format!("ideal = {};", body.join("; "))
}

fn print_ring(ring: &Ring) -> String {
    format!("ring {};", ring.variables().join(" "))
}

/// A full document, parseable by [`crate::io::parse_ideal`].
pub fn print_document(ideal: &Ideal) -> String {
    format!("{}\n{}\n", print_ring(ideal.ring()), print_ideal(ideal))
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&print_polynomial(self))
    }
}

impl fmt::Display for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&print_ideal(self))
    }
}
