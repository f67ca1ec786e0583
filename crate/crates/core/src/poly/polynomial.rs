use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::monomial::{Exponent, Monomial};
use super::order::MonomialOrder;
use super::ring::{check_same_ring, same_ring, Ring};
use crate::error::{Error, Result};

pub type Rational = num_rational::BigRational;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Term {
    pub coeff: Rational,
    pub monomial: Monomial,
}

/// Sparse polynomial over ℚ.
///
/// Terms are stored strictly decreasing under [`MonomialOrder::DegRevLex`],
/// with no zero coefficients; the zero polynomial has no terms. Views under
/// other orders are produced on demand ([`Polynomial::sorted_terms`]).
#[derive(Clone, Debug)]
pub struct Polynomial {
    ring: Arc<Ring>,
    terms: Vec<Term>,
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Polynomial) -> bool {
        same_ring(&self.ring, &other.ring) && self.terms == other.terms
    }
}

impl Eq for Polynomial {}

const STORAGE_ORDER: MonomialOrder = MonomialOrder::DegRevLex;

impl Polynomial {
    pub fn zero(ring: &Arc<Ring>) -> Polynomial {
        Polynomial { ring: ring.clone(), terms: Vec::new() }
    }

    pub fn constant(ring: &Arc<Ring>, c: Rational) -> Polynomial {
        let terms = if c.is_zero() {
            Vec::new()
        } else {
            vec![Term { coeff: c, monomial: Monomial::one(ring.len()) }]
        };
        Polynomial { ring: ring.clone(), terms }
    }

    pub fn one(ring: &Arc<Ring>) -> Polynomial {
        Polynomial::constant(ring, Rational::one())
    }

    pub fn variable(ring: &Arc<Ring>, index: usize) -> Result<Polynomial> {
        if index >= ring.len() {
            return Err(Error::IndexOutOfRange { index, len: ring.len() });
        }
        Ok(Polynomial {
            ring: ring.clone(),
            terms: vec![Term { coeff: Rational::one(), monomial: Monomial::variable(ring.len(), index) }],
        })
    }

    /// Builds a polynomial from arbitrary (possibly repeated, unsorted, zero) terms.
    pub fn from_terms<I>(ring: &Arc<Ring>, terms: I) -> Result<Polynomial>
    where
        I: IntoIterator<Item = (Rational, Monomial)>,
    {
        let mut acc: HashMap<Monomial, Rational> = HashMap::new();
        for (c, m) in terms {
            m.check_len(ring.len())?;
            *acc.entry(m).or_insert_with(Rational::zero) += c;
        }
        Ok(Polynomial::from_map(ring, acc))
    }

    /// Integer-coefficient convenience constructor, mostly for tests.
    pub fn from_int_terms(ring: &Arc<Ring>, terms: &[(i64, &[Exponent])]) -> Result<Polynomial> {
        Polynomial::from_terms(
            ring,
            terms.iter().map(|(c, e)| (Rational::from_integer(BigInt::from(*c)), Monomial::new(e.iter().copied()))),
        )
    }

    fn from_map(ring: &Arc<Ring>, acc: HashMap<Monomial, Rational>) -> Polynomial {
        let mut terms: Vec<Term> = acc
            .into_iter()
            .filter(|(_, c)| !c.is_zero())
            .map(|(monomial, coeff)| Term { coeff, monomial })
            .collect();
        terms.sort_by(|a, b| STORAGE_ORDER.compare(&b.monomial, &a.monomial));
        Polynomial { ring: ring.clone(), terms }
    }

    // Terms already sorted and merged by the caller.
    pub(crate) fn from_sorted_unchecked(ring: &Arc<Ring>, terms: Vec<Term>) -> Polynomial {
        debug_assert!(terms.windows(2).all(|w| STORAGE_ORDER.compare(&w[0].monomial, &w[1].monomial) == Ordering::Greater));
        Polynomial { ring: ring.clone(), terms }
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    /// Terms in descending degrevlex order.
    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|t| t.monomial.is_one())
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.iter().map(|t| t.monomial.degree()).max()
    }

    /// True iff all terms share one total degree. The zero polynomial counts as homogeneous.
    pub fn is_homogeneous(&self) -> bool {
        self.terms.windows(2).all(|w| w[0].monomial.degree() == w[1].monomial.degree())
    }

    /// Terms sorted descending under `order`.
    pub fn sorted_terms(&self, order: &MonomialOrder) -> Vec<&Term> {
        let mut terms: Vec<&Term> = self.terms.iter().collect();
        if *order != STORAGE_ORDER {
            terms.sort_by(|a, b| order.compare(&b.monomial, &a.monomial));
        }
        terms
    }

    pub fn leading_term(&self, order: &MonomialOrder) -> Option<&Term> {
        if *order == STORAGE_ORDER {
            return self.terms.first();
        }
        self.terms.iter().max_by(|a, b| order.compare(&a.monomial, &b.monomial))
    }

    pub fn checked_add(&self, other: &Polynomial) -> Result<Polynomial> {
        check_same_ring(&self.ring, &other.ring)?;
        Ok(self.merge(other, false))
    }

    pub fn checked_sub(&self, other: &Polynomial) -> Result<Polynomial> {
        check_same_ring(&self.ring, &other.ring)?;
        Ok(self.merge(other, true))
    }

    fn merge(&self, other: &Polynomial, subtract: bool) -> Polynomial {
        let mut out = Vec::with_capacity(self.len() + other.len());
        let (mut i, mut j) = (0, 0);
        let sign = |t: &Term| if subtract { Term { coeff: -&t.coeff, monomial: t.monomial.clone() } } else { t.clone() };
        while i < self.len() && j < other.len() {
            let (a, b) = (&self.terms[i], &other.terms[j]);
            match STORAGE_ORDER.compare(&a.monomial, &b.monomial) {
                Ordering::Greater => {
                    out.push(a.clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push(sign(b));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if subtract { &a.coeff - &b.coeff } else { &a.coeff + &b.coeff };
                    if !c.is_zero() {
                        out.push(Term { coeff: c, monomial: a.monomial.clone() });
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(self.terms[i..].iter().cloned());
        out.extend(other.terms[j..].iter().map(sign));
        Polynomial { ring: self.ring.clone(), terms: out }
    }

    pub fn checked_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        check_same_ring(&self.ring, &other.ring)?;
        let mut acc: HashMap<Monomial, Rational> = HashMap::with_capacity(self.len() * other.len());
        for a in &self.terms {
            for b in &other.terms {
                *acc.entry(a.monomial.mul(&b.monomial)).or_insert_with(Rational::zero) += &a.coeff * &b.coeff;
            }
        }
        Ok(Polynomial::from_map(&self.ring, acc))
    }

    pub fn mul_term(&self, coeff: &Rational, monomial: &Monomial) -> Polynomial {
        if coeff.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        // multiplication by a monomial preserves a monomial order
        let terms = self
            .terms
            .iter()
            .map(|t| Term { coeff: &t.coeff * coeff, monomial: t.monomial.mul(monomial) })
            .collect();
        Polynomial { ring: self.ring.clone(), terms }
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        self.mul_term(c, &Monomial::one(self.ring.len()))
    }

    pub fn pow(&self, exponent: u32) -> Polynomial {
        let mut result = Polynomial::one(&self.ring);
        let mut base = self.clone();
        let mut e = exponent;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    pub fn partial_derivative(&self, index: usize) -> Result<Polynomial> {
        if index >= self.ring.len() {
            return Err(Error::IndexOutOfRange { index, len: self.ring.len() });
        }
        let terms = self.terms.iter().filter(|t| t.monomial.exponent(index) > 0).map(|t| {
            let e = t.monomial.exponent(index);
            (&t.coeff * Rational::from_integer(BigInt::from(e)), t.monomial.with_exponent(index, e - 1))
        });
        Polynomial::from_terms(&self.ring, terms)
    }

    /// Multiplies every term by `name^(d - deg)` where `d` is the total degree;
    /// the new variable is inserted at `position` of the ring.
    pub fn homogenize(&self, name: &str, position: usize) -> Result<Polynomial> {
        let ring = self.ring.with_variable_at(name, position)?;
        self.homogenize_into(&ring, position)
    }

    /// Like [`Polynomial::homogenize`] but into an already extended ring.
    pub fn homogenize_into(&self, ring: &Arc<Ring>, position: usize) -> Result<Polynomial> {
        if ring.len() != self.ring.len() + 1 {
            return Err(Error::RingMismatch(format!("{ring} does not extend {} by one variable", self.ring)));
        }
        let d = self.total_degree().unwrap_or(0);
        let terms = self.terms.iter().map(|t| {
            let e = (d - t.monomial.degree()) as Exponent;
            (t.coeff.clone(), t.monomial.inserting(position, e))
        });
        Polynomial::from_terms(ring, terms)
    }

    /// Substitutes 1 for the variable at `index` and drops it from the ring.
    pub fn dehomogenize(&self, index: usize) -> Result<Polynomial> {
        let ring = self.ring.without(index)?;
        self.dehomogenize_into(&ring, index)
    }

    pub fn dehomogenize_into(&self, ring: &Arc<Ring>, index: usize) -> Result<Polynomial> {
        if index >= self.ring.len() || ring.len() + 1 != self.ring.len() {
            return Err(Error::IndexOutOfRange { index, len: self.ring.len() });
        }
        let terms = self.terms.iter().map(|t| (t.coeff.clone(), t.monomial.removing(index)));
        Polynomial::from_terms(ring, terms)
    }

    /// Simultaneous substitution into `target`.
    ///
    /// Variables without an assignment map to the variable of the same name in
    /// `target`; it is an error if there is none.
    pub fn substitute(&self, assignments: &BTreeMap<usize, Polynomial>, target: &Arc<Ring>) -> Result<Polynomial> {
        let n = self.ring.len();
        let mut images = Vec::with_capacity(n);
        for i in 0..n {
            let image = match assignments.get(&i) {
                Some(p) => {
                    check_same_ring(p.ring(), target)?;
                    p.clone()
                }
                None => {
                    let name = self.ring.name(i);
                    let j = target
                        .index_of(name)
                        .ok_or_else(|| Error::RingMismatch(format!("variable `{name}` has no image in {target}")))?;
                    Polynomial::variable(target, j)?
                }
            };
            images.push(image);
        }
        if let Some(&bad) = assignments.keys().find(|&&i| i >= n) {
            return Err(Error::IndexOutOfRange { index: bad, len: n });
        }
        let mut powers: HashMap<(usize, Exponent), Polynomial> = HashMap::new();
        let mut result = Polynomial::zero(target);
        for t in &self.terms {
            let mut acc = Polynomial::constant(target, t.coeff.clone());
            for (i, &e) in t.monomial.exponents().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let power = powers.entry((i, e)).or_insert_with(|| images[i].pow(u32::from(e)));
                acc = &acc * power;
            }
            result = &result + &acc;
        }
        Ok(result)
    }

    /// Re-expresses the polynomial in `target`, sending variable `i` to `target` variable `mapping[i]`.
    pub fn map_variables(&self, target: &Arc<Ring>, mapping: &[usize]) -> Result<Polynomial> {
        if mapping.len() != self.ring.len() {
            return Err(Error::LengthMismatch { expected: self.ring.len(), found: mapping.len() });
        }
        if let Some(&bad) = mapping.iter().find(|&&j| j >= target.len()) {
            return Err(Error::IndexOutOfRange { index: bad, len: target.len() });
        }
        let terms = self.terms.iter().map(|t| {
            let mut exps = vec![0; target.len()];
            for (i, &e) in t.monomial.exponents().iter().enumerate() {
                exps[mapping[i]] += e;
            }
            (t.coeff.clone(), Monomial::new(exps))
        });
        Polynomial::from_terms(target, terms)
    }

    /// Same terms, read in another ring with the same number of variables.
    pub fn rename_ring(&self, target: &Arc<Ring>) -> Result<Polynomial> {
        if target.len() != self.ring.len() {
            return Err(Error::LengthMismatch { expected: self.ring.len(), found: target.len() });
        }
        Ok(Polynomial { ring: target.clone(), terms: self.terms.clone() })
    }

    /// The primitive integer representative of the scalar class: denominators
    /// cleared, integer content removed, leading coefficient under `order` positive.
    pub fn canonicalize_with(&self, order: &MonomialOrder) -> Polynomial {
        if self.is_zero() {
            return self.clone();
        }
        let mut denom_lcm = BigInt::one();
        for t in &self.terms {
            denom_lcm = denom_lcm.lcm(t.coeff.denom());
        }
        let ints: Vec<BigInt> = self.terms.iter().map(|t| (&t.coeff * Rational::from_integer(denom_lcm.clone())).to_integer()).collect();
        let mut content = BigInt::zero();
        for c in &ints {
            content = content.gcd(c);
        }
        let lead_positive = self.leading_term(order).map(|t| t.coeff.is_positive()).unwrap_or(true);
        if !lead_positive {
            content = -content;
        }
        let terms = self
            .terms
            .iter()
            .zip(ints)
            .map(|(t, c)| Term { coeff: Rational::from_integer(c / &content), monomial: t.monomial.clone() })
            .collect();
        Polynomial { ring: self.ring.clone(), terms }
    }

    /// [`Polynomial::canonicalize_with`] under degrevlex.
    pub fn canonicalize(&self) -> Polynomial {
        self.canonicalize_with(&STORAGE_ORDER)
    }

    pub fn evaluate(&self, point: &[Rational]) -> Result<Rational> {
        if point.len() != self.ring.len() {
            return Err(Error::LengthMismatch { expected: self.ring.len(), found: point.len() });
        }
        let mut sum = Rational::zero();
        for t in &self.terms {
            let mut v = t.coeff.clone();
            for (x, &e) in point.iter().zip(t.monomial.exponents()) {
                if e > 0 {
                    v *= num_traits::pow(x.clone(), usize::from(e));
                }
            }
            sum += v;
        }
        Ok(sum)
    }

    /// Exact division by a single nonzero divisor; `None` if it leaves a remainder.
    pub fn exact_div(&self, divisor: &Polynomial) -> Result<Option<Polynomial>> {
        check_same_ring(&self.ring, &divisor.ring)?;
        let lead = divisor.terms.first().ok_or(Error::ZeroPolynomial)?;
        let mut rest = self.clone();
        let mut quotient = Polynomial::zero(&self.ring);
        while let Some(t) = rest.terms.first() {
            let Some(m) = lead.monomial.quotient_of(&t.monomial) else {
                return Ok(None);
            };
            let c = &t.coeff / &lead.coeff;
            rest = &rest - &divisor.mul_term(&c, &m);
            quotient = &quotient + &Polynomial::from_sorted_unchecked(&self.ring, vec![Term { coeff: c, monomial: m }]);
        }
        Ok(Some(quotient))
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;

    /// Panics on ring mismatch; use [`Polynomial::checked_add`] to get an error instead.
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.checked_add(rhs).expect("polynomials from different rings")
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;

    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.checked_sub(rhs).expect("polynomials from different rings")
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;

    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.checked_mul(rhs).expect("polynomials from different rings")
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        let terms = self.terms.iter().map(|t| Term { coeff: -&t.coeff, monomial: t.monomial.clone() }).collect();
        Polynomial { ring: self.ring.clone(), terms }
    }
}
