//! Benchmark inputs, taken from the shared corpus.

use dualis::io::{parse_ideal, parse_polynomial};
use dualis::{Ideal, Polynomial, Ring};

pub const STEINER: &str = include_str!("../../../corpus/steiner.ideal");
pub const KLEIN_QUARTIC: &str = include_str!("../../../corpus/klein_quartic.ideal");
pub const EIGHT_CURVE: &str = include_str!("../../../corpus/eight_curve_homog.ideal");
pub const NEWTON_KNOT: &str = include_str!("../../../corpus/newton_knot.ideal");

pub fn ideal(text: &str) -> Ideal {
    parse_ideal(text).expect("corpus file parses").ideal()
}

/// Cyclic-`n` roots system, homogenized with `h`; a standard Gröbner stress input.
pub fn cyclic(n: usize) -> Ideal {
    let mut names: Vec<String> = (0..n).map(|i| format!("z{i}")).collect();
    names.push("h".into());
    let ring = Ring::new(names).unwrap();
    let var = |i: usize| format!("z{}", i % n);
    let mut gens = Vec::with_capacity(n);
    for len in 1..n {
        let sum: Vec<String> = (0..n).map(|s| (s..s + len).map(var).collect::<Vec<_>>().join("*")).collect();
        gens.push(parse_polynomial(&sum.join("+"), &ring).unwrap());
    }
    let top = (0..n).map(var).collect::<Vec<_>>().join("*");
    gens.push(parse_polynomial(&format!("{top}-h^{n}"), &ring).unwrap());
    Ideal::new(&ring, gens).unwrap()
}

/// A dense polynomial of degree `d` to reduce against a basis in `ideal`'s ring.
pub fn dense(ideal: &Ideal, d: u32) -> Polynomial {
    let ring = ideal.ring();
    let sum: Polynomial = (0..ring.len())
        .map(|i| Polynomial::variable(ring, i).unwrap())
        .fold(Polynomial::one(ring), |acc, v| &acc + &v);
    sum.pow(d)
}
