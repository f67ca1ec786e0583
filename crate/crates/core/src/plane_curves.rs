//! Pedal curves and circle inversion for implicit affine plane curves.
//!
//! The pedal is computed by elimination: a point `P = (X, Y)` is the foot of
//! the perpendicular from the origin to the tangent at `p = (x, y)` when
//!
//! ```text
//! f(x, y) = 0,   (X - x)·f_x + (Y - y)·f_y = 0,   X·f_y - Y·f_x = 0.
//! ```
//!
//! Points where the gradient is isotropic (`f_x² + f_y² = 0`, in particular
//! singular points) are removed with an extra variable `w` and the generator
//! `1 - w·(f_x² + f_y²)`; otherwise a singular point contributes the whole
//! plane and the elimination ideal collapses to zero.

use std::fmt;
use std::sync::Arc;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::groebner::{Engine, Ideal};
use crate::poly::{Polynomial, Rational, Ring};

/// A curve `f(x, y) = 0` in a two-variable ring.
#[derive(Clone, Debug, PartialEq)]
pub struct PlaneCurve {
    f: Polynomial,
}

impl PlaneCurve {
    pub fn new(f: Polynomial) -> Result<PlaneCurve> {
        if f.ring().len() != 2 {
            return Err(Error::InvalidRing(format!("plane curves need exactly two variables, got {}", f.ring().len())));
        }
        if f.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        Ok(PlaneCurve { f })
    }

    pub fn ring(&self) -> &Arc<Ring> {
        self.f.ring()
    }

    pub fn polynomial(&self) -> &Polynomial {
        &self.f
    }

    pub fn passes_through_origin(&self) -> bool {
        self.f.evaluate(&[Rational::zero(), Rational::zero()]).is_ok_and(|v| v.is_zero())
    }

    fn check_nonconstant(&self) -> Result<()> {
        if self.f.is_constant() {
            Err(Error::ConstantCurve)
        } else {
            Ok(())
        }
    }
}

impl fmt::Display for PlaneCurve {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.f.fmt(f)
    }
}

/// Squared inversion radius; nonzero. Defaults to `-1`, i.e. `r = i`.
#[derive(Clone, Debug, PartialEq)]
pub struct InversionRadiusSquared(Rational);

impl InversionRadiusSquared {
    pub fn new(r2: Rational) -> Result<InversionRadiusSquared> {
        if r2.is_zero() {
            return Err(Error::ZeroRadius);
        }
        Ok(InversionRadiusSquared(r2))
    }

    pub fn value(&self) -> &Rational {
        &self.0
    }
}

impl Default for InversionRadiusSquared {
    fn default() -> Self {
        InversionRadiusSquared(-Rational::one())
    }
}

/// Result of [`pedal_implicit`].
#[derive(Clone, Debug, PartialEq)]
pub enum Pedal {
    Curve(PlaneCurve),
    /// The elimination ideal was not principal (e.g. the pedal of a line is a point).
    Locus(Ideal),
}

impl Pedal {
    pub fn ideal(&self) -> Result<Ideal> {
        match self {
            Pedal::Curve(c) => Ideal::new(c.ring(), vec![c.polynomial().clone()]),
            Pedal::Locus(i) => Ok(i.clone()),
        }
    }
}

const PEDAL_AUX: [&str; 3] = ["@w", "@X", "@Y"];

/// Pedal of `c` with respect to the origin.
pub fn pedal_implicit(engine: &Engine, c: &PlaneCurve) -> Result<Pedal> {
    c.check_nonconstant()?;
    let base = c.ring();
    // x, y, w, X, Y
    let ring = base.extended(&PEDAL_AUX)?;
    let var = |i| Polynomial::variable(&ring, i);
    let (x, y, w, big_x, big_y) = (var(0)?, var(1)?, var(2)?, var(3)?, var(4)?);
    let f = c.polynomial().map_variables(&ring, &[0, 1])?;
    let fx = f.partial_derivative(0)?;
    let fy = f.partial_derivative(1)?;
    let gens = vec![
        f.clone(),
        &(&(&big_x - &x) * &fx) + &(&(&big_y - &y) * &fy),
        &(&big_x * &fy) - &(&big_y * &fx),
        &Polynomial::one(&ring) - &(&w * &(&(&fx * &fx) + &(&fy * &fy))),
    ];
    let elim = engine.elimination_ideal(&Ideal::new(&ring, gens)?, 3)?;
    if elim.is_zero() {
        return Err(Error::TrivialElimination);
    }
    let elim = elim.rename_ring(base)?;
    match elim.generators() {
        [g] => Ok(Pedal::Curve(PlaneCurve::new(g.canonicalize())?)),
        _ => Ok(Pedal::Locus(elim)),
    }
}

/// Image of `c` under `p ↦ r²·p/|p|²`, with denominators cleared and common
/// factors `x² + y²` removed.
pub fn invert_implicit(c: &PlaneCurve, r2: &InversionRadiusSquared) -> Result<PlaneCurve> {
    c.check_nonconstant()?;
    let ring = c.ring();
    let f = c.polynomial();
    let top = f.total_degree().expect("nonzero");
    let x = Polynomial::variable(ring, 0)?;
    let y = Polynomial::variable(ring, 1)?;
    let norm = &(&x * &x) + &(&y * &y);
    // c·x^a·y^b ↦ c·r^{2k}·x^a·y^b·(x²+y²)^{top-k}, k = a + b
    let mut out = Polynomial::zero(ring);
    for t in f.terms() {
        let k = t.monomial.degree();
        let coeff = &t.coeff * num_traits::pow(r2.value().clone(), k as usize);
        out = &out + &norm.pow(top - k).mul_term(&coeff, &t.monomial);
    }
    while let Some(q) = out.exact_div(&norm)? {
        if q.is_constant() {
            break;
        }
        out = q;
    }
    PlaneCurve::new(out.canonicalize())
}

/// Affine dual as inversion of the pedal.
pub fn dual_via_pedal(engine: &Engine, c: &PlaneCurve, r2: &InversionRadiusSquared) -> Result<PlaneCurve> {
    match pedal_implicit(engine, c)? {
        Pedal::Curve(p) => invert_implicit(&p, r2),
        Pedal::Locus(_) => Err(Error::DegeneratePedal),
    }
}
