//! Text formats: the ideal-file grammar and the canonical printer.

mod parse;
mod print;

pub use parse::{parse_ideal, parse_polynomial, parse_rational, IdealDocument};
pub use print::{print_document, print_ideal, print_polynomial, print_rational};
