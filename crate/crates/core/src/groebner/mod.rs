//! Gröbner bases, normal forms, elimination, and ideal predicates.

mod engine;
mod ideal;

use std::cmp::Ordering;
use std::sync::Arc;

use num_traits::{One, Zero};

pub use ideal::{GroebnerBasis, Ideal};

use crate::error::{Error, Result};
use crate::poly::{check_same_ring, BlockKind, Monomial, MonomialOrder, Polynomial, Rational, Ring, Term};
use engine::{Completion, IntPoly};

/// Name of the auxiliary variable used by radical membership tests.
pub const RABINOWITSCH_VARIABLE: &str = "@t";

/// Knobs shared by every Gröbner computation.
#[derive(Clone, Debug, Default)]
pub struct Engine {
    /// Maximum number of S-pair reductions per completion; `None` is unlimited.
    pub step_limit: Option<u64>,
    /// Eliminate with pure lex instead of the two-block degrevlex order.
    pub pure_lex_elimination: bool,
}

impl Engine {
    pub fn new() -> Engine {
        Engine::default()
    }

    pub fn with_step_limit(mut self, limit: Option<u64>) -> Engine {
        self.step_limit = limit;
        self
    }

    pub fn with_pure_lex_elimination(mut self, on: bool) -> Engine {
        self.pure_lex_elimination = on;
        self
    }

    fn complete(&self, ideal: &Ideal, order: &MonomialOrder, weights: Option<&[u32]>) -> Result<(Vec<IntPoly>, Vec<IntPoly>)> {
        let n = ideal.ring().len();
        order.validate(n)?;
        let inputs = ideal.generators().iter().map(|g| IntPoly::from_polynomial(g, order)).collect();
        Completion::new(order, n, weights, self.step_limit).run(inputs)
    }

    /// Buchberger completion; the result is a (generally non-reduced) Gröbner basis.
    pub fn buchberger(&self, ideal: &Ideal, order: &MonomialOrder) -> Result<GroebnerBasis> {
        let (all, _) = self.complete(ideal, order, None)?;
        Ok(GroebnerBasis {
            ideal: ideal.clone(),
            order: order.clone(),
            basis: engine::to_polynomials(&all, ideal.ring()),
            reduced: false,
        })
    }

    /// The reduced Gröbner basis of `ideal` under `order`.
    pub fn groebner(&self, ideal: &Ideal, order: &MonomialOrder) -> Result<GroebnerBasis> {
        self.groebner_weighted(ideal, order, None)
    }

    /// Like [`Engine::groebner`], with a positive weight per variable steering
    /// pair selection (the sugar degree). The basis itself does not depend on
    /// the weights.
    pub fn groebner_weighted(&self, ideal: &Ideal, order: &MonomialOrder, weights: Option<&[u32]>) -> Result<GroebnerBasis> {
        if let Some(w) = weights {
            if w.len() != ideal.ring().len() || w.contains(&0) {
                return Err(Error::LengthMismatch { expected: ideal.ring().len(), found: w.len() });
            }
        }
        let (_, minimal) = self.complete(ideal, order, weights)?;
        let reduced = engine::reduce_basis(minimal, order, ideal.ring().len());
        Ok(GroebnerBasis {
            ideal: ideal.clone(),
            order: order.clone(),
            basis: engine::to_polynomials(&reduced, ideal.ring()),
            reduced: true,
        })
    }

    /// The order used to eliminate the first `k` variables of an `n`-variable ring.
    pub fn elimination_order(&self, k: usize, n: usize) -> MonomialOrder {
        if self.pure_lex_elimination {
            MonomialOrder::Lex
        } else {
            MonomialOrder::elimination(k, n, BlockKind::DegRevLex)
        }
    }

    /// `I ∩ ℚ[x_k, …, x_{n-1}]`, expressed in the ring of the trailing variables.
    pub fn elimination_ideal(&self, ideal: &Ideal, k: usize) -> Result<Ideal> {
        Ok(self.eliminate(ideal, k, None)?.0)
    }

    /// Elimination returning the full basis as well.
    pub fn eliminate(&self, ideal: &Ideal, k: usize, weights: Option<&[u32]>) -> Result<(Ideal, GroebnerBasis)> {
        let n = ideal.ring().len();
        if k >= n {
            return Err(Error::IndexOutOfRange { index: k, len: n });
        }
        let order = self.elimination_order(k, n);
        let gb = self.groebner_weighted(ideal, &order, weights)?;
        let sub = ideal.ring().tail(k)?;
        let mut gens: Vec<Polynomial> = Vec::new();
        for g in gb.basis() {
            if g.terms().iter().all(|t| t.monomial.exponents()[..k].iter().all(|&e| e == 0)) {
                let terms = g.terms().iter().map(|t| (t.coeff.clone(), Monomial::new(t.monomial.exponents()[k..].iter().copied())));
                gens.push(Polynomial::from_terms(&sub, terms)?);
            }
        }
        // with pure lex the surviving elements are a lex basis; normalize to degrevlex
        let elim = Ideal::new(&sub, gens)?;
        let elim = if self.pure_lex_elimination && !elim.is_zero() {
            self.groebner(&elim, &MonomialOrder::DegRevLex)?.to_ideal()
        } else {
            elim
        };
        Ok((elim, gb))
    }

    fn canonical_basis(&self, ideal: &Ideal) -> Result<GroebnerBasis> {
        self.groebner(ideal, &MonomialOrder::DegRevLex)
    }

    pub fn ideal_membership(&self, p: &Polynomial, ideal: &Ideal) -> Result<bool> {
        check_same_ring(p.ring(), ideal.ring())?;
        if p.is_zero() {
            return Ok(true);
        }
        let gb = self.canonical_basis(ideal)?;
        Ok(normal_form(p, gb.basis(), gb.order())?.is_zero())
    }

    /// Reduced-basis identity under degrevlex.
    pub fn ideal_equal(&self, i: &Ideal, j: &Ideal) -> Result<bool> {
        check_same_ring(i.ring(), j.ring())?;
        Ok(self.canonical_basis(i)?.basis == self.canonical_basis(j)?.basis)
    }

    /// `J ⊆ I`.
    pub fn ideal_contains(&self, i: &Ideal, j: &Ideal) -> Result<bool> {
        check_same_ring(i.ring(), j.ring())?;
        let gb = self.canonical_basis(i)?;
        for g in j.generators() {
            if !normal_form(g, gb.basis(), gb.order())?.is_zero() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// `p ∈ √I`, decided by `1 ∈ I + (1 - t·p)` with a fresh variable `t`.
    pub fn radical_membership(&self, p: &Polynomial, ideal: &Ideal) -> Result<bool> {
        check_same_ring(p.ring(), ideal.ring())?;
        if p.is_zero() {
            return Ok(true);
        }
        let n = ideal.ring().len();
        let ext = ideal.ring().extended(&[RABINOWITSCH_VARIABLE])?;
        let embed: Vec<usize> = (0..n).collect();
        let mut gens: Vec<Polynomial> =
            ideal.generators().iter().map(|g| g.map_variables(&ext, &embed)).collect::<Result<_>>()?;
        let t = Polynomial::variable(&ext, n)?;
        let pe = p.map_variables(&ext, &embed)?;
        gens.push(&Polynomial::one(&ext) - &(&t * &pe));
        let gb = self.canonical_basis(&Ideal::new(&ext, gens)?)?;
        Ok(gb.basis().iter().any(Polynomial::is_constant))
    }

    /// `J ⊆ √I`, generator by generator.
    pub fn radical_contains(&self, i: &Ideal, j: &Ideal) -> Result<bool> {
        check_same_ring(i.ring(), j.ring())?;
        for g in j.generators() {
            if !self.radical_membership(g, i)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// Buchberger completion with the default engine.
pub fn buchberger(ideal: &Ideal, order: &MonomialOrder) -> Result<GroebnerBasis> {
    Engine::default().buchberger(ideal, order)
}

/// The reduced Gröbner basis of the ideal generated by an existing basis.
pub fn reduce_basis(gb: &GroebnerBasis) -> Result<GroebnerBasis> {
    let ring = gb.ring();
    let polys = gb.basis().iter().map(|g| IntPoly::from_polynomial(g, &gb.order)).collect();
    let reduced = engine::reduce_basis(polys, &gb.order, ring.len());
    Ok(GroebnerBasis {
        ideal: gb.ideal.clone(),
        order: gb.order.clone(),
        basis: engine::to_polynomials(&reduced, ring),
        reduced: true,
    })
}

pub fn elimination_ideal(ideal: &Ideal, k: usize) -> Result<Ideal> {
    Engine::default().elimination_ideal(ideal, k)
}

pub fn ideal_membership(p: &Polynomial, ideal: &Ideal) -> Result<bool> {
    Engine::default().ideal_membership(p, ideal)
}

pub fn ideal_equal(i: &Ideal, j: &Ideal) -> Result<bool> {
    Engine::default().ideal_equal(i, j)
}

pub fn ideal_contains(i: &Ideal, j: &Ideal) -> Result<bool> {
    Engine::default().ideal_contains(i, j)
}

pub fn radical_membership(p: &Polynomial, ideal: &Ideal) -> Result<bool> {
    Engine::default().radical_membership(p, ideal)
}

pub fn radical_contains(i: &Ideal, j: &Ideal) -> Result<bool> {
    Engine::default().radical_contains(i, j)
}

// ---------------------------------------------------------------------------
// Rational-coefficient division. Slow and simple; used for normal forms of
// single polynomials and to check completion results independently.

type Terms = Vec<(Rational, Monomial)>;

fn sorted(p: &Polynomial, order: &MonomialOrder) -> Terms {
    p.sorted_terms(order).into_iter().map(|t| (t.coeff.clone(), t.monomial.clone())).collect()
}

/// `lhs - c * shift * rhs`, both sorted descending.
fn sub_scaled(lhs: &[(Rational, Monomial)], c: &Rational, shift: &Monomial, rhs: &[(Rational, Monomial)], order: &MonomialOrder) -> Terms {
    let mut out = Vec::with_capacity(lhs.len() + rhs.len());
    let rhs: Vec<(Rational, Monomial)> = rhs.iter().map(|(k, m)| (k * c, m.mul(shift))).collect();
    let (mut i, mut j) = (0, 0);
    while i < lhs.len() && j < rhs.len() {
        match order.compare(&lhs[i].1, &rhs[j].1) {
            Ordering::Greater => {
                out.push(lhs[i].clone());
                i += 1;
            }
            Ordering::Less => {
                out.push((-&rhs[j].0, rhs[j].1.clone()));
                j += 1;
            }
            Ordering::Equal => {
                let k = &lhs[i].0 - &rhs[j].0;
                if !k.is_zero() {
                    out.push((k, lhs[i].1.clone()));
                }
                i += 1;
                j += 1;
            }
        }
    }
    out.extend(lhs[i..].iter().cloned());
    out.extend(rhs[j..].iter().map(|(k, m)| (-k, m.clone())));
    out
}

fn from_terms(ring: &Arc<Ring>, terms: Terms) -> Polynomial {
    Polynomial::from_terms(ring, terms).expect("monomials belong to the ring")
}

/// S-polynomial with monic-normalized leading terms.
pub fn s_polynomial(f: &Polynomial, g: &Polynomial, order: &MonomialOrder) -> Result<Polynomial> {
    check_same_ring(f.ring(), g.ring())?;
    order.validate(f.ring().len())?;
    let lf = f.leading_term(order).ok_or(Error::ZeroPolynomial)?;
    let lg = g.leading_term(order).ok_or(Error::ZeroPolynomial)?;
    let lcm = lf.monomial.lcm(&lg.monomial);
    let a = f.mul_term(&(Rational::one() / &lf.coeff), &lf.monomial.quotient_of(&lcm).expect("lcm"));
    let b = g.mul_term(&(Rational::one() / &lg.coeff), &lg.monomial.quotient_of(&lcm).expect("lcm"));
    a.checked_sub(&b)
}

/// Remainder of multivariate division of `p` by the list `divisors`.
///
/// The largest reducible monomial is always reduced next, by the first
/// divisor in list order whose leading monomial divides it.
pub fn normal_form(p: &Polynomial, divisors: &[Polynomial], order: &MonomialOrder) -> Result<Polynomial> {
    Ok(division(p, divisors, order)?.1)
}

/// Quotients and remainder: `p = Σ q_i·g_i + r`.
pub fn division(p: &Polynomial, divisors: &[Polynomial], order: &MonomialOrder) -> Result<(Vec<Polynomial>, Polynomial)> {
    order.validate(p.ring().len())?;
    let mut leads: Vec<(Rational, Monomial, Terms)> = Vec::with_capacity(divisors.len());
    for g in divisors {
        check_same_ring(p.ring(), g.ring())?;
        let terms = sorted(g, order);
        let (c, m) = terms.first().cloned().ok_or(Error::ZeroPolynomial)?;
        leads.push((c, m, terms));
    }
    let ring = p.ring();
    let mut quotients: Vec<Terms> = vec![Vec::new(); divisors.len()];
    let mut remainder: Terms = Vec::new();
    let mut work = sorted(p, order);
    while let Some((c, m)) = work.first().cloned() {
        match leads.iter().position(|(_, lm, _)| lm.divides(&m)) {
            Some(k) => {
                let (lc, lm, g) = &leads[k];
                let q = lm.quotient_of(&m).expect("divides");
                let factor = &c / lc;
                work = sub_scaled(&work[1..], &factor, &q, &g[1..], order);
                quotients[k].push((factor, q));
            }
            None => {
                remainder.push((c, m));
                work.remove(0);
            }
        }
    }
    let quotients = quotients.into_iter().map(|q| from_terms(ring, q)).collect();
    Ok((quotients, from_terms(ring, remainder)))
}

/// Buchberger's criterion, checked pair by pair with rational division.
/// Pairs with coprime leading monomials are skipped; their S-polynomials
/// always reduce to zero.
pub fn satisfies_buchberger_criterion(basis: &[Polynomial], order: &MonomialOrder) -> Result<bool> {
    let leads: Vec<Monomial> = basis
        .iter()
        .map(|g| g.leading_term(order).map(|t| t.monomial.clone()).ok_or(Error::ZeroPolynomial))
        .collect::<Result<_>>()?;
    for i in 0..basis.len() {
        for j in i + 1..basis.len() {
            if leads[i].is_coprime(&leads[j]) {
                continue;
            }
            let s = s_polynomial(&basis[i], &basis[j], order)?;
            if !normal_form(&s, basis, order)?.is_zero() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Structural check of the reduced-basis invariants.
pub fn is_reduced_basis(basis: &[Polynomial], order: &MonomialOrder) -> bool {
    let leads: Vec<&Term> = match basis.iter().map(|g| g.leading_term(order)).collect::<Option<Vec<_>>>() {
        Some(l) => l,
        None => return false,
    };
    let sorted_ascending = leads.windows(2).all(|w| order.compare(&w[0].monomial, &w[1].monomial) == Ordering::Less);
    let canonical = basis.iter().all(|g| g.canonicalize_with(order) == *g);
    let interreduced = basis.iter().enumerate().all(|(i, g)| {
        g.terms()
            .iter()
            .all(|t| leads.iter().enumerate().all(|(j, l)| i == j || !l.monomial.divides(&t.monomial)))
    });
    sorted_ascending && canonical && interreduced
}

#[cfg(test)]
mod tests;
