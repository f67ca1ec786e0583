use std::cmp::Ordering;
use std::fmt;

use super::monomial::Monomial;
use crate::error::{Error, Result};

/// Ordering used inside one block of a block order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BlockKind {
    Lex,
    DegRevLex,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Block {
    pub size: usize,
    pub kind: BlockKind,
}

/// A global monomial order.
///
/// `Block` compares the exponent vector block by block starting from the
/// first block; inside a block the block's own kind decides. Any monomial
/// involving a variable of the first block is therefore larger than every
/// monomial in the remaining variables, which is what elimination needs.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum MonomialOrder {
    Lex,
    DegRevLex,
    Block(Vec<Block>),
}

impl MonomialOrder {
    /// Two-block elimination order: the first `k` of `nvars` variables against the rest,
    /// both blocks ordered by `kind`.
    pub fn elimination(k: usize, nvars: usize, kind: BlockKind) -> MonomialOrder {
        let mut blocks = Vec::with_capacity(2);
        if k > 0 {
            blocks.push(Block { size: k, kind });
        }
        if nvars > k {
            blocks.push(Block { size: nvars - k, kind });
        }
        MonomialOrder::Block(blocks)
    }

    /// Checks that the order can compare exponent vectors of length `nvars`.
    pub fn validate(&self, nvars: usize) -> Result<()> {
        if let MonomialOrder::Block(blocks) = self {
            if blocks.iter().any(|b| b.size == 0) {
                return Err(Error::InvalidOrder("empty block".into()));
            }
            let total: usize = blocks.iter().map(|b| b.size).sum();
            if total != nvars {
                return Err(Error::LengthMismatch { expected: total, found: nvars });
            }
        }
        Ok(())
    }

    /// Checked comparison.
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Result<Ordering> {
        if a.len() != b.len() {
            return Err(Error::LengthMismatch { expected: a.len(), found: b.len() });
        }
        self.validate(a.len())?;
        Ok(self.compare(a, b))
    }

    /// Unchecked comparison; lengths must agree with the order.
    #[inline]
    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Ordering {
        let (ea, eb) = (a.exponents(), b.exponents());
        match self {
            MonomialOrder::Lex => lex(ea, eb),
            MonomialOrder::DegRevLex => a.degree().cmp(&b.degree()).then_with(|| revlex(ea, eb)),
            MonomialOrder::Block(blocks) => {
                let mut start = 0;
                for block in blocks {
                    let end = start + block.size;
                    let (sa, sb) = (&ea[start..end], &eb[start..end]);
                    let ord = match block.kind {
                        BlockKind::Lex => lex(sa, sb),
                        BlockKind::DegRevLex => {
                            let da: u32 = sa.iter().map(|&e| u32::from(e)).sum();
                            let db: u32 = sb.iter().map(|&e| u32::from(e)).sum();
                            da.cmp(&db).then_with(|| revlex(sa, sb))
                        }
                    };
                    if ord != Ordering::Equal {
                        return ord;
                    }
                    start = end;
                }
                Ordering::Equal
            }
        }
    }

    /// Number of leading variables eliminated by this order, if it is a block order.
    pub fn first_block(&self) -> Option<usize> {
        match self {
            MonomialOrder::Block(blocks) => blocks.first().map(|b| b.size),
            _ => None,
        }
    }
}

fn lex(a: &[u16], b: &[u16]) -> Ordering {
    for (x, y) in a.iter().zip(b) {
        match x.cmp(y) {
            Ordering::Equal => continue,
            ord => return ord,
        }
    }
    Ordering::Equal
}

// Reverse lexicographic tiebreak: the last differing exponent decides, smaller wins.
fn revlex(a: &[u16], b: &[u16]) -> Ordering {
    for (x, y) in a.iter().zip(b).rev() {
        match x.cmp(y) {
            Ordering::Equal => continue,
            ord => return ord.reverse(),
        }
    }
    Ordering::Equal
}

impl fmt::Display for MonomialOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MonomialOrder::Lex => write!(f, "lex"),
            MonomialOrder::DegRevLex => write!(f, "degrevlex"),
            MonomialOrder::Block(blocks) => {
                write!(f, "block(")?;
                for (i, b) in blocks.iter().enumerate() {
                    if i > 0 {
                        write!(f, ", ")?;
                    }
                    let kind = match b.kind {
                        BlockKind::Lex => "lex",
                        BlockKind::DegRevLex => "degrevlex",
                    };
                    write!(f, "{}:{}", b.size, kind)?;
                }
                write!(f, ")")
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn m(e: &[u16]) -> Monomial {
        Monomial::new(e.iter().copied())
    }

    #[test]
    fn lex_compares_first_exponent_first() {
        assert_eq!(MonomialOrder::Lex.cmp(&m(&[1, 0]), &m(&[0, 2])).unwrap(), Ordering::Greater);
    }

    #[test]
    fn degrevlex_tiebreak() {
        let ord = MonomialOrder::DegRevLex.cmp(&m(&[1, 0, 1]), &m(&[0, 2, 0])).unwrap();
        assert_eq!(ord, Ordering::Less);
    }

    #[test]
    fn reflexive() {
        for order in [MonomialOrder::Lex, MonomialOrder::DegRevLex, MonomialOrder::elimination(1, 3, BlockKind::DegRevLex)] {
            assert_eq!(order.cmp(&m(&[2, 1, 3]), &m(&[2, 1, 3])).unwrap(), Ordering::Equal);
        }
    }

    #[test]
    fn length_mismatch_is_an_error() {
        assert!(MonomialOrder::Lex.cmp(&m(&[1, 0]), &m(&[1, 0, 0])).is_err());
        let block = MonomialOrder::elimination(1, 3, BlockKind::Lex);
        assert!(block.cmp(&m(&[1, 0]), &m(&[0, 1])).is_err());
    }

    /// All monomials of degree <= 3 in x > y > z, listed descending by the
    /// textbook graded reverse lexicographic order.
    #[test]
    fn degrevlex_matches_textbook_listing() {
        let expected: Vec<[u16; 3]> = vec![
            [3, 0, 0], [2, 1, 0], [1, 2, 0], [0, 3, 0], [2, 0, 1], [1, 1, 1], [0, 2, 1], [1, 0, 2], [0, 1, 2], [0, 0, 3],
            [2, 0, 0], [1, 1, 0], [0, 2, 0], [1, 0, 1], [0, 1, 1], [0, 0, 2],
            [1, 0, 0], [0, 1, 0], [0, 0, 1],
            [0, 0, 0],
        ];
        let mut all: Vec<Monomial> = Vec::new();
        for a in 0..=3u16 {
            for b in 0..=3 - a {
                for c in 0..=3 - a - b {
                    all.push(m(&[a, b, c]));
                }
            }
        }
        all.sort_by(|x, y| MonomialOrder::DegRevLex.compare(y, x));
        let got: Vec<[u16; 3]> = all.iter().map(|x| [x.exponent(0), x.exponent(1), x.exponent(2)]).collect();
        assert_eq!(got, expected);
    }

    #[test]
    fn elimination_block_dominates() {
        let order = MonomialOrder::elimination(1, 3, BlockKind::DegRevLex);
        // x beats any power of y, z
        assert_eq!(order.compare(&m(&[1, 0, 0]), &m(&[0, 9, 9])), Ordering::Greater);
        assert_eq!(order.compare(&m(&[0, 1, 2]), &m(&[0, 2, 0])), Ordering::Greater);
    }

    fn orders() -> Vec<MonomialOrder> {
        vec![
            MonomialOrder::Lex,
            MonomialOrder::DegRevLex,
            MonomialOrder::elimination(2, 4, BlockKind::DegRevLex),
            MonomialOrder::Block(vec![
                Block { size: 1, kind: BlockKind::Lex },
                Block { size: 3, kind: BlockKind::DegRevLex },
            ]),
        ]
    }

    proptest! {
        #[test]
        fn order_axioms(a in prop::collection::vec(0u16..5, 4),
                        b in prop::collection::vec(0u16..5, 4),
                        c in prop::collection::vec(0u16..5, 4)) {
            let (a, b, c) = (m(&a), m(&b), m(&c));
            let one = Monomial::one(4);
            for order in orders() {
                let ab = order.compare(&a, &b);
                prop_assert_eq!(ab, order.compare(&b, &a).reverse());
                prop_assert_eq!(ab == Ordering::Equal, a == b);
                if ab == Ordering::Less && order.compare(&b, &c) == Ordering::Less {
                    prop_assert_eq!(order.compare(&a, &c), Ordering::Less);
                }
                prop_assert_eq!(order.compare(&a.mul(&c), &b.mul(&c)), ab);
                prop_assert_ne!(order.compare(&a, &one), Ordering::Less);
            }
        }
    }
}
