//! Recursive-descent parser for ideal files.
//!
//! ```text
//! document   := ring_decl ideal_decl ;
//! ring_decl  := "ring" name+ ";" ;
//! ideal_decl := "ideal" "=" poly (";" poly)* ";"? ;
//! poly       := ["-"] term (("+"|"-") term)* ;
//! term       := factor ("*" factor)* ;
//! factor     := base ["^" nat] ;
//! base       := rational | name | "(" poly ")" ;
//! rational   := nat ["/" nat_nonzero] ;
//! ```
//!
//! `//` starts a comment running to the end of the line. Comment lines of the
//! form `//! key: value` are kept as document metadata.

use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Position, Result};
use crate::groebner::Ideal;
use crate::poly::{Polynomial, Rational, Ring};

#[derive(Clone, Debug, PartialEq)]
pub struct IdealDocument {
    pub ring: Arc<Ring>,
    pub generators: Vec<Polynomial>,
    pub metadata: Vec<(String, String)>,
}

impl IdealDocument {
    pub fn ideal(&self) -> Ideal {
        Ideal::new(&self.ring, self.generators.clone()).expect("generators are parsed in the document ring")
    }
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Name(String),
    Nat(BigInt),
    Sym(char),
    Eof,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Name(n) => format!("`{n}`"),
            Tok::Nat(n) => format!("number `{n}`"),
            Tok::Sym(c) => format!("`{c}`"),
            Tok::Eof => "end of input".to_string(),
        }
    }
}

#[derive(Clone, Debug)]
struct Spanned {
    tok: Tok,
    pos: Position,
}

/// Names the dualization pipeline uses for its auxiliary variables.
pub(crate) fn is_reserved_name(name: &str) -> bool {
    if name.starts_with('@') {
        return true;
    }
    let digits_after = |prefix: &str| {
        name.strip_prefix(prefix).is_some_and(|rest| !rest.is_empty() && rest.bytes().all(|b| b.is_ascii_digit()))
    };
    digits_after("lambda") || digits_after("u")
}

type Metadata = Vec<(String, String)>;

fn lex(text: &str) -> Result<(Vec<Spanned>, Metadata)> {
    let mut tokens = Vec::new();
    let mut metadata = Vec::new();
    let chars: Vec<char> = text.chars().collect();
    let (mut i, mut line, mut col) = (0usize, 1usize, 1usize);
    while i < chars.len() {
        let c = chars[i];
        let pos = Position { line, column: col };
        if c == '\n' {
            i += 1;
            line += 1;
            col = 1;
            continue;
        }
        if c.is_whitespace() {
            i += 1;
            col += 1;
            continue;
        }
        if c == '/' && chars.get(i + 1) == Some(&'/') {
            let start = i;
            while i < chars.len() && chars[i] != '\n' {
                i += 1;
            }
            let comment: String = chars[start..i].iter().collect();
            if let Some(rest) = comment.strip_prefix("//!") {
                if let Some((k, v)) = rest.split_once(':') {
                    metadata.push((k.trim().to_string(), v.trim().to_string()));
                }
            }
            col += i - start;
            continue;
        }
        if c.is_ascii_alphabetic() || c == '@' {
            let start = i;
            i += 1;
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            let name: String = chars[start..i].iter().collect();
            col += i - start;
            if c == '@' {
                return Err(Error::ReservedName { name, position: pos });
            }
            tokens.push(Spanned { tok: Tok::Name(name), pos });
            continue;
        }
        if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let digits: String = chars[start..i].iter().collect();
            col += i - start;
            tokens.push(Spanned { tok: Tok::Nat(digits.parse().expect("ascii digits")), pos });
            continue;
        }
        if ";=+-*^/()".contains(c) {
            tokens.push(Spanned { tok: Tok::Sym(c), pos });
            i += 1;
            col += 1;
            continue;
        }
        return Err(Error::Parse { position: pos, message: format!("unexpected character `{c}`"), expected: Vec::new() });
    }
    tokens.push(Spanned { tok: Tok::Eof, pos: Position { line, column: col } });
    Ok((tokens, metadata))
}

struct Parser {
    tokens: Vec<Spanned>,
    at: usize,
    ring: Option<Arc<Ring>>,
}

const OPERAND: [&str; 3] = ["number", "variable", "`(`"];

impl Parser {
    fn peek(&self) -> &Spanned {
        &self.tokens[self.at]
    }

    fn bump(&mut self) -> Spanned {
        let t = self.tokens[self.at].clone();
        if t.tok != Tok::Eof {
            self.at += 1;
        }
        t
    }

    fn is_sym(&self, c: char) -> bool {
        self.peek().tok == Tok::Sym(c)
    }

    fn error_here(&self, expected: &[&str]) -> Error {
        let t = self.peek();
        Error::Parse {
            position: t.pos,
            message: format!("unexpected {}, expected {}", t.tok.describe(), expected.join(" or ")),
            expected: expected.iter().map(|s| s.to_string()).collect(),
        }
    }

    fn expect_sym(&mut self, c: char) -> Result<()> {
        if self.is_sym(c) {
            self.bump();
            Ok(())
        } else {
            Err(self.error_here(&[&format!("`{c}`")]))
        }
    }

    fn expect_keyword(&mut self, kw: &str) -> Result<()> {
        match &self.peek().tok {
            Tok::Name(n) if n == kw => {
                self.bump();
                Ok(())
            }
            _ => Err(self.error_here(&[&format!("`{kw}`")])),
        }
    }

    fn ring(&self) -> &Arc<Ring> {
        self.ring.as_ref().expect("ring declared before polynomials")
    }

    fn document(&mut self) -> Result<(Arc<Ring>, Vec<Polynomial>)> {
        self.expect_keyword("ring")?;
        let mut names: Vec<String> = Vec::new();
        loop {
            let t = self.peek().clone();
            match t.tok {
                Tok::Name(ref n) if n != "ring" && n != "ideal" => {
                    if is_reserved_name(n) {
                        return Err(Error::ReservedName { name: n.clone(), position: t.pos });
                    }
                    if names.contains(n) {
                        return Err(Error::Parse {
                            position: t.pos,
                            message: format!("duplicate variable `{n}`"),
                            expected: Vec::new(),
                        });
                    }
                    names.push(n.clone());
                    self.bump();
                }
                Tok::Sym(';') if !names.is_empty() => {
                    self.bump();
                    break;
                }
                _ if names.is_empty() => return Err(self.error_here(&["variable name"])),
                _ => return Err(self.error_here(&["variable name", "`;`"])),
            }
        }
        self.ring = Some(Ring::new(names)?);
        self.expect_keyword("ideal")?;
        self.expect_sym('=')?;
        let mut gens = vec![self.poly()?];
        loop {
            if self.peek().tok == Tok::Eof {
                break;
            }
            self.expect_sym(';')?;
            if self.peek().tok == Tok::Eof {
                break;
            }
            gens.push(self.poly()?);
        }
        Ok((self.ring().clone(), gens))
    }

    fn poly(&mut self) -> Result<Polynomial> {
        let negate = if self.is_sym('-') { Some(self.bump()) } else { None };
        let first = self.term_after(negate.as_ref())?;
        let mut acc = if negate.is_some() { -&first } else { first };
        while self.is_sym('+') || self.is_sym('-') {
            let op = self.bump();
            let t = self.term_after(Some(&op))?;
            acc = if op.tok == Tok::Sym('+') { &acc + &t } else { &acc - &t };
        }
        Ok(acc)
    }

    // A missing operand is reported at the operator that needed it.
    fn term_after(&mut self, op: Option<&Spanned>) -> Result<Polynomial> {
        if !self.starts_operand() {
            return Err(self.missing_operand(op));
        }
        self.term()
    }

    fn starts_operand(&self) -> bool {
        matches!(self.peek().tok, Tok::Nat(_) | Tok::Name(_) | Tok::Sym('('))
    }

    fn missing_operand(&self, op: Option<&Spanned>) -> Error {
        match op {
            Some(op) => Error::Parse {
                position: op.pos,
                message: format!("missing operand after {} (found {})", op.tok.describe(), self.peek().tok.describe()),
                expected: OPERAND.iter().map(|s| s.to_string()).collect(),
            },
            None => self.error_here(&OPERAND),
        }
    }

    fn term(&mut self) -> Result<Polynomial> {
        let mut acc = self.factor()?;
        while self.is_sym('*') {
            let op = self.bump();
            if !self.starts_operand() {
                return Err(self.missing_operand(Some(&op)));
            }
            acc = &acc * &self.factor()?;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Polynomial> {
        let base = self.base()?;
        if self.is_sym('^') {
            let op = self.bump();
            let t = self.peek().clone();
            match t.tok {
                Tok::Nat(n) => {
                    self.bump();
                    let e: u32 = n.try_into().map_err(|_| Error::Parse {
                        position: t.pos,
                        message: "exponent too large".into(),
                        expected: Vec::new(),
                    })?;
                    return Ok(base.pow(e));
                }
                _ => {
                    return Err(Error::Parse {
                        position: op.pos,
                        message: format!("missing exponent after `^` (found {})", t.tok.describe()),
                        expected: vec!["natural number".into()],
                    })
                }
            }
        }
        Ok(base)
    }

    fn base(&mut self) -> Result<Polynomial> {
        let t = self.peek().clone();
        match t.tok {
            Tok::Nat(n) => {
                self.bump();
                let mut value = Rational::from_integer(n);
                if self.is_sym('/') {
                    let slash = self.bump();
                    let d = self.peek().clone();
                    match d.tok {
                        Tok::Nat(den) if !den.is_zero() => {
                            self.bump();
                            value /= Rational::from_integer(den);
                        }
                        Tok::Nat(_) => {
                            return Err(Error::Parse {
                                position: d.pos,
                                message: "zero denominator".into(),
                                expected: vec!["nonzero natural number".into()],
                            })
                        }
                        _ => {
                            return Err(Error::Parse {
                                position: slash.pos,
                                message: format!("missing denominator after `/` (found {})", d.tok.describe()),
                                expected: vec!["nonzero natural number".into()],
                            })
                        }
                    }
                }
                Ok(Polynomial::constant(self.ring(), value))
            }
            Tok::Name(name) => {
                self.bump();
                match self.ring().index_of(&name) {
                    Some(i) => Polynomial::variable(self.ring(), i),
                    None if is_reserved_name(&name) => Err(Error::ReservedName { name, position: t.pos }),
                    None => Err(Error::UnknownVariable { name, position: t.pos }),
                }
            }
            Tok::Sym('(') => {
                self.bump();
                let inner = self.poly()?;
                self.expect_sym(')')?;
                Ok(inner)
            }
            _ => Err(self.error_here(&OPERAND)),
        }
    }
}

pub fn parse_ideal(text: &str) -> Result<IdealDocument> {
    let (tokens, metadata) = lex(text)?;
    let mut parser = Parser { tokens, at: 0, ring: None };
    let (ring, generators) = parser.document()?;
    Ok(IdealDocument { ring, generators, metadata })
}

/// Parses a single polynomial over an existing ring (no trailing `;`).
pub fn parse_polynomial(text: &str, ring: &Arc<Ring>) -> Result<Polynomial> {
    let (tokens, _) = lex(text)?;
    let mut parser = Parser { tokens, at: 0, ring: Some(ring.clone()) };
    let p = parser.poly()?;
    if parser.peek().tok != Tok::Eof {
        return Err(parser.error_here(&["`+`", "`-`", "`*`", "end of input"]));
    }
    Ok(p)
}

/// Parses `[-]nat[/nat]`.
pub fn parse_rational(text: &str) -> Option<Rational> {
    let text = text.trim();
    let (neg, body) = match text.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, text),
    };
    let valid = |s: &str| !s.is_empty() && s.bytes().all(|b| b.is_ascii_digit());
    let value = match body.split_once('/') {
        Some((n, d)) if valid(n) && valid(d) => {
            let d: BigInt = d.parse().ok()?;
            if d.is_zero() {
                return None;
            }
            Rational::new(n.parse().ok()?, d)
        }
        None if valid(body) => Rational::from_integer(body.parse().ok()?),
        _ => return None,
    };
    Some(if neg { -value } else { value })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::io::print_document;
    use crate::poly::Monomial;
    use proptest::prelude::*;

    #[test]
    fn parses_two_generator_ideal() {
        let doc = parse_ideal("ring x y z; ideal = z^2; x+y-z;").unwrap();
        assert_eq!(doc.ring.variables(), &["x", "y", "z"]);
        assert_eq!(doc.generators.len(), 2);
        assert_eq!(doc.generators[0], parse_polynomial("z*z", &doc.ring).unwrap());
    }

    #[test]
    fn missing_operand_reports_operator_position() {
        match parse_ideal("ring x; ideal = x^2 + ;") {
            Err(Error::Parse { position, expected, .. }) => {
                assert_eq!(position, Position { line: 1, column: 21 });
                assert!(expected.contains(&"variable".to_string()));
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn positions_track_lines() {
        let text = "ring x y;\nideal =\n  x*y;\n  x y;";
        match parse_ideal(text) {
            Err(Error::Parse { position, .. }) => assert_eq!(position, Position { line: 4, column: 5 }),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn implicit_multiplication_rejected() {
        let r = Ring::new(["x", "y"]).unwrap();
        assert!(parse_polynomial("2x", &r).is_err());
        assert!(parse_polynomial("x y", &r).is_err());
        assert!(parse_polynomial("(x)(y)", &r).is_err());
    }

    #[test]
    fn name_errors() {
        assert!(matches!(parse_ideal("ring x; ideal = y;"), Err(Error::UnknownVariable { .. })));
        assert!(matches!(parse_ideal("ring x u0; ideal = x;"), Err(Error::ReservedName { .. })));
        assert!(matches!(parse_ideal("ring lambda1; ideal = 1;"), Err(Error::ReservedName { .. })));
        assert!(matches!(parse_ideal("ring @t; ideal = 1;"), Err(Error::ReservedName { .. })));
        assert!(parse_ideal("ring u lambda x_1; ideal = u*lambda-x_1;").is_ok());
        assert!(parse_ideal("ring x x; ideal = x;").is_err());
        assert!(parse_ideal("ring x; ideal = ;").is_err());
        assert!(parse_ideal("ring x; ideal = 1/0*x;").is_err());
    }

    #[test]
    fn comments_and_metadata() {
        let doc = parse_ideal("//! name: Neil parabola\n// plain comment\nring x0 x1 x2;\nideal = x1^3-x0*x2^2; // trailing\n").unwrap();
        assert_eq!(doc.metadata, vec![("name".to_string(), "Neil parabola".to_string())]);
        assert_eq!(doc.generators.len(), 1);
    }

    #[test]
    fn rationals() {
        assert_eq!(parse_rational("-1"), Some(Rational::from_integer((-1).into())));
        assert_eq!(parse_rational("3/6"), Some(Rational::new(1.into(), 2.into())));
        assert_eq!(parse_rational("1/0"), None);
        assert_eq!(parse_rational("x"), None);
    }

    fn arb_poly() -> impl Strategy<Value = Polynomial> {
        prop::collection::vec((-40i64..=40, 1i64..=6, prop::collection::vec(0u16..4, 3)), 0..6).prop_map(|ts| {
            let r = Ring::new(["x", "y", "z"]).unwrap();
            Polynomial::from_terms(&r, ts.into_iter().map(|(a, b, e)| (Rational::new(a.into(), b.into()), Monomial::new(e))))
                .unwrap()
        })
    }

    proptest! {
        #[test]
        fn print_parse_roundtrip(p in arb_poly(), q in arb_poly()) {
            let ideal = Ideal::new(p.ring(), vec![p.clone(), q.clone()]).unwrap();
            let doc = parse_ideal(&print_document(&ideal)).unwrap();
            prop_assert_eq!(doc.ideal(), ideal);
        }
    }
}
