//! Buchberger completion over ℤ-primitive polynomials.
//!
//! Polynomials are kept with coprime integer coefficients and a positive
//! leading coefficient; reductions are fraction free and the content is
//! stripped after every full reduction. Pairs are chosen by the sugar strategy
//! (optionally with a weight vector), pruned with Buchberger's product and
//! chain criteria in the Gebauer–Möller formulation.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::poly::{Monomial, MonomialOrder, Polynomial, Rational};

#[derive(Clone, Debug, PartialEq)]
pub(crate) struct IntTerm {
    pub c: BigInt,
    pub m: Monomial,
}

/// Terms strictly decreasing under the engine's order.
#[derive(Clone, Debug, PartialEq)]
pub(crate) struct IntPoly {
    pub terms: Vec<IntTerm>,
}

impl IntPoly {
    pub fn from_polynomial(p: &Polynomial, order: &MonomialOrder) -> IntPoly {
        let canonical = p.canonicalize_with(order);
        let mut terms: Vec<IntTerm> = canonical
            .terms()
            .iter()
            .map(|t| IntTerm { c: t.coeff.to_integer(), m: t.monomial.clone() })
            .collect();
        terms.sort_by(|a, b| order.compare(&b.m, &a.m));
        IntPoly { terms }
    }

    pub fn to_polynomial(&self, ring: &std::sync::Arc<crate::poly::Ring>) -> Polynomial {
        Polynomial::from_terms(ring, self.terms.iter().map(|t| (Rational::from_integer(t.c.clone()), t.m.clone())))
            .expect("engine monomials match the ring")
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn lm(&self) -> &Monomial {
        &self.terms[0].m
    }

    pub fn is_constant(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].m.is_one()
    }

    /// Divides out the integer content and makes the leading coefficient positive.
    pub fn make_primitive(&mut self) {
        if self.terms.is_empty() {
            return;
        }
        let mut g = BigInt::zero();
        for t in &self.terms {
            g = g.gcd(&t.c);
            if g.is_one() {
                break;
            }
        }
        if self.terms[0].c.is_negative() {
            g = -g;
        }
        if !g.is_one() {
            for t in &mut self.terms {
                t.c /= &g;
            }
        }
    }
}

/// `a * shift_a * lhs - b * shift_b * rhs`, both inputs sorted descending.
fn lin_comb(
    lhs: &[IntTerm],
    a: &BigInt,
    shift_a: Option<&Monomial>,
    rhs: &[IntTerm],
    b: &BigInt,
    shift_b: Option<&Monomial>,
    order: &MonomialOrder,
) -> Vec<IntTerm> {
    let shifted = |t: &IntTerm, s: Option<&Monomial>| match s {
        Some(s) => t.m.mul(s),
        None => t.m.clone(),
    };
    let scale = |c: &BigInt, k: &BigInt| if k.is_one() { c.clone() } else { c * k };
    let mut out = Vec::with_capacity(lhs.len() + rhs.len());
    let (mut i, mut j) = (0, 0);
    let mut next_a = lhs.first().map(|t| shifted(t, shift_a));
    let mut next_b = rhs.first().map(|t| shifted(t, shift_b));
    loop {
        match (&next_a, &next_b) {
            (None, None) => break,
            (Some(ma), Some(mb)) => match order.compare(ma, mb) {
                Ordering::Greater => {
                    out.push(IntTerm { c: scale(&lhs[i].c, a), m: next_a.take().unwrap() });
                    i += 1;
                    next_a = lhs.get(i).map(|t| shifted(t, shift_a));
                }
                Ordering::Less => {
                    out.push(IntTerm { c: -scale(&rhs[j].c, b), m: next_b.take().unwrap() });
                    j += 1;
                    next_b = rhs.get(j).map(|t| shifted(t, shift_b));
                }
                Ordering::Equal => {
                    let c = scale(&lhs[i].c, a) - scale(&rhs[j].c, b);
                    if !c.is_zero() {
                        out.push(IntTerm { c, m: next_a.take().unwrap() });
                    }
                    i += 1;
                    j += 1;
                    next_a = lhs.get(i).map(|t| shifted(t, shift_a));
                    next_b = rhs.get(j).map(|t| shifted(t, shift_b));
                }
            },
            (Some(_), None) => {
                out.push(IntTerm { c: scale(&lhs[i].c, a), m: next_a.take().unwrap() });
                i += 1;
                next_a = lhs.get(i).map(|t| shifted(t, shift_a));
            }
            (None, Some(_)) => {
                out.push(IntTerm { c: -scale(&rhs[j].c, b), m: next_b.take().unwrap() });
                j += 1;
                next_b = rhs.get(j).map(|t| shifted(t, shift_b));
            }
        }
    }
    out
}

struct Element {
    poly: IntPoly,
    lm: Monomial,
    mask: u64,
    sugar: u32,
    active: bool,
}

struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
    sugar: u32,
}

/// One completion run.
pub(crate) struct Completion<'a> {
    order: &'a MonomialOrder,
    weights: Vec<u32>,
    step_limit: Option<u64>,
    elements: Vec<Element>,
    pairs: Vec<Pair>,
    steps: u64,
}

impl<'a> Completion<'a> {
    pub fn new(order: &'a MonomialOrder, nvars: usize, weights: Option<&[u32]>, step_limit: Option<u64>) -> Self {
        let weights = weights.map(|w| w.to_vec()).unwrap_or_else(|| vec![1; nvars]);
        Completion { order, weights, step_limit, elements: Vec::new(), pairs: Vec::new(), steps: 0 }
    }

    fn wdeg(&self, m: &Monomial) -> u32 {
        m.weighted_degree(&self.weights)
    }

    fn poly_sugar(&self, p: &IntPoly) -> u32 {
        p.terms.iter().map(|t| self.wdeg(&t.m)).max().unwrap_or(0)
    }

    /// Runs the completion. Returns every element ever added, and the subset
    /// still active at the end, which is a minimal Gröbner basis.
    pub fn run(mut self, mut inputs: Vec<IntPoly>) -> Result<(Vec<IntPoly>, Vec<IntPoly>)> {
        inputs.retain(|p| !p.is_zero());
        inputs.sort_by(|a, b| self.order.compare(a.lm(), b.lm()));
        for p in inputs {
            let sugar = self.poly_sugar(&p);
            let (mut r, sugar) = self.reduce(p, sugar);
            if r.is_zero() {
                continue;
            }
            r.make_primitive();
            self.insert(r, sugar);
        }
        while let Some(pair) = self.select_pair() {
            self.steps += 1;
            if let Some(limit) = self.step_limit {
                if self.steps > limit {
                    return Err(Error::StepLimit(limit));
                }
            }
            let s = self.s_poly(pair.i, pair.j, &pair.lcm);
            let (mut r, sugar) = self.reduce(s, pair.sugar);
            if r.is_zero() {
                continue;
            }
            r.make_primitive();
            self.insert(r, sugar);
        }
        let minimal: Vec<IntPoly> = self.elements.iter().filter(|e| e.active).map(|e| e.poly.clone()).collect();
        let all = self.elements.into_iter().map(|e| e.poly).collect();
        Ok((all, minimal))
    }

    fn select_pair(&mut self) -> Option<Pair> {
        if self.pairs.is_empty() {
            return None;
        }
        let order = self.order;
        let mut best = 0;
        for k in 1..self.pairs.len() {
            let (p, q) = (&self.pairs[k], &self.pairs[best]);
            let better = p
                .sugar
                .cmp(&q.sugar)
                .then_with(|| order.compare(&p.lcm, &q.lcm))
                .then_with(|| (p.i, p.j).cmp(&(q.i, q.j)))
                == Ordering::Less;
            if better {
                best = k;
            }
        }
        Some(self.pairs.swap_remove(best))
    }

    fn s_poly(&self, i: usize, j: usize, lcm: &Monomial) -> IntPoly {
        let (f, g) = (&self.elements[i], &self.elements[j]);
        let (cf, cg) = (&f.poly.terms[0].c, &g.poly.terms[0].c);
        let gcd = cf.gcd(cg);
        let (a, b) = (cg / &gcd, cf / &gcd);
        let qf = f.lm.quotient_of(lcm).expect("lcm is a multiple");
        let qg = g.lm.quotient_of(lcm).expect("lcm is a multiple");
        let terms = lin_comb(&f.poly.terms[1..], &a, Some(&qf), &g.poly.terms[1..], &b, Some(&qg), self.order);
        IntPoly { terms }
    }

    fn find_reducer(&self, m: &Monomial, skip: Option<usize>) -> Option<usize> {
        find_reducer(&self.elements, m, skip)
    }

    /// Full reduction against the active elements.
    fn reduce(&mut self, p: IntPoly, mut sugar: u32) -> (IntPoly, u32) {
        let mut rem: Vec<IntTerm> = Vec::new();
        let mut work = p.terms;
        let mut head = 0;
        let mut since_content = 0usize;
        while head < work.len() {
            let Some(k) = self.find_reducer(&work[head].m, None) else {
                rem.push(work[head].clone());
                head += 1;
                continue;
            };
            let g = &self.elements[k];
            let q = g.lm.quotient_of(&work[head].m).expect("reducer divides");
            let lc = &g.poly.terms[0].c;
            let gcd = work[head].c.gcd(lc);
            let a = lc / &gcd;
            let b = &work[head].c / &gcd;
            work = lin_comb(&work[head + 1..], &a, None, &g.poly.terms[1..], &b, Some(&q), self.order);
            head = 0;
            if !a.is_one() {
                for t in &mut rem {
                    t.c *= &a;
                }
            }
            sugar = sugar.max(g.sugar + q.weighted_degree(&self.weights));
            since_content += 1;
            if since_content >= 16 {
                since_content = 0;
                strip_common_content(&mut rem, &mut work);
            }
        }
        (IntPoly { terms: rem }, sugar)
    }

    fn insert(&mut self, h: IntPoly, sugar: u32) {
        let lm = h.lm().clone();
        let idx = self.elements.len();
        // candidate pairs with the active elements, chain criterion among themselves
        let candidates: Vec<(usize, Monomial, bool)> = self
            .elements
            .iter()
            .enumerate()
            .filter(|(_, e)| e.active)
            .map(|(k, e)| (k, e.lm.lcm(&lm), e.lm.is_coprime(&lm)))
            .collect();
        let mut kept: Vec<&(usize, Monomial, bool)> = Vec::new();
        for (n, cand) in candidates.iter().enumerate() {
            let (_, lcm, coprime) = cand;
            let dominated = !coprime
                && (candidates[n + 1..].iter().any(|(_, l2, _)| l2.divides(lcm))
                    || kept.iter().any(|(_, l2, _)| l2.divides(lcm)));
            if !dominated {
                kept.push(cand);
            }
        }

        // chain criterion on old pairs
        self.pairs.retain(|p| {
            let li = self.elements[p.i].lm.lcm(&lm);
            let lj = self.elements[p.j].lm.lcm(&lm);
            !(lm.divides(&p.lcm) && li != p.lcm && lj != p.lcm)
        });

        let new_pairs: Vec<Pair> = kept
            .into_iter()
            .filter(|(_, _, coprime)| !coprime)
            .map(|(k, lcm, _)| {
                let e = &self.elements[*k];
                let sk = e.sugar + e.lm.quotient_of(lcm).unwrap().weighted_degree(&self.weights);
                let sh = sugar + lm.quotient_of(lcm).unwrap().weighted_degree(&self.weights);
                Pair { i: *k, j: idx, lcm: lcm.clone(), sugar: sk.max(sh) }
            })
            .collect();
        self.pairs.extend(new_pairs);

        for e in &mut self.elements {
            if e.active && lm.divides(&e.lm) {
                e.active = false;
            }
        }
        let mask = lm.support_mask();
        self.elements.push(Element { poly: h, lm, mask, sugar, active: true });
    }
}

fn find_reducer(elements: &[Element], m: &Monomial, skip: Option<usize>) -> Option<usize> {
    let mask = m.support_mask();
    let mut best: Option<usize> = None;
    for (k, e) in elements.iter().enumerate() {
        if !e.active || Some(k) == skip || e.mask & !mask != 0 || !e.lm.divides(m) {
            continue;
        }
        // shortest reducer first, ties by position
        if best.is_none_or(|b| e.poly.terms.len() < elements[b].poly.terms.len()) {
            best = Some(k);
        }
    }
    best
}

fn strip_common_content(rem: &mut [IntTerm], work: &mut [IntTerm]) {
    let mut g = BigInt::zero();
    for t in rem.iter().chain(work.iter()) {
        g = g.gcd(&t.c);
        if g.is_one() {
            return;
        }
    }
    if g.is_zero() || g.is_one() {
        return;
    }
    for t in rem.iter_mut().chain(work.iter_mut()) {
        t.c /= &g;
    }
}

/// Turns any Gröbner basis into the reduced one: drops elements whose leading
/// monomial is a multiple of another's, reduces tails, normalizes and sorts
/// ascending by leading monomial.
pub(crate) fn reduce_basis(polys: Vec<IntPoly>, order: &MonomialOrder, nvars: usize) -> Vec<IntPoly> {
    let mut polys: Vec<IntPoly> = polys.into_iter().filter(|p| !p.is_zero()).collect();
    if polys.iter().any(IntPoly::is_constant) {
        let one = IntPoly { terms: vec![IntTerm { c: BigInt::one(), m: Monomial::one(nvars) }] };
        return vec![one];
    }
    polys.sort_by(|a, b| order.compare(a.lm(), b.lm()));
    let mut minimal: Vec<IntPoly> = Vec::new();
    for p in polys {
        if !minimal.iter().any(|q| q.lm().divides(p.lm())) {
            minimal.push(p);
        }
    }
    let mut elements: Vec<Element> = minimal
        .into_iter()
        .map(|p| Element { lm: p.lm().clone(), mask: p.lm().support_mask(), sugar: 0, active: true, poly: p })
        .collect();
    for k in 0..elements.len() {
        let reduced = reduce_tail(&elements, k, order);
        elements[k].poly = reduced;
    }
    let mut out: Vec<IntPoly> = elements.into_iter().map(|e| e.poly).collect();
    for p in &mut out {
        p.make_primitive();
    }
    out
}

fn reduce_tail(elements: &[Element], k: usize, order: &MonomialOrder) -> IntPoly {
    let p = &elements[k].poly;
    let mut rem: Vec<IntTerm> = vec![p.terms[0].clone()];
    let mut work: Vec<IntTerm> = p.terms[1..].to_vec();
    let mut head = 0;
    while head < work.len() {
        let Some(r) = find_reducer(elements, &work[head].m, Some(k)) else {
            rem.push(work[head].clone());
            head += 1;
            continue;
        };
        let g = &elements[r];
        let q = g.lm.quotient_of(&work[head].m).expect("reducer divides");
        let lc = &g.poly.terms[0].c;
        let gcd = work[head].c.gcd(lc);
        let a = lc / &gcd;
        let b = &work[head].c / &gcd;
        work = lin_comb(&work[head + 1..], &a, None, &g.poly.terms[1..], &b, Some(&q), order);
        head = 0;
        if !a.is_one() {
            for t in &mut rem {
                t.c *= &a;
            }
        }
    }
    IntPoly { terms: rem }
}

/// Converts engine output back to ℚ-polynomials.
pub(crate) fn to_polynomials(polys: &[IntPoly], ring: &std::sync::Arc<crate::poly::Ring>) -> Vec<Polynomial> {
    polys.iter().map(|p| p.to_polynomial(ring)).collect()
}
