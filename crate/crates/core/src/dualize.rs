//! Projective dualization by elimination.
//!
//! For `I = (p_1, …, p_m) ⊂ ℚ[x_0, …, x_n]` the system lives in
//! `ℚ[x_0..x_n, lambda1..lambdam, u0..un]` and consists of the `p_j` followed
//! by `u_i - Σ_j λ_j ∂p_j/∂x_i`, i.e. `u = Jᵗ(x)·λ` with `J` the Jacobian of
//! the generators. Eliminating `x` and `λ` leaves the ideal of the closure of
//! the image of the Gauß map; renaming `u_i → x_i` gives the dual ideal back
//! in the original ring.

use std::sync::Arc;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::groebner::{Engine, GroebnerBasis, Ideal};
use crate::poly::{Polynomial, Rational, Ring};

/// The elimination problem whose `u`-part is the dual.
#[derive(Clone, Debug)]
pub struct DualizationSystem {
    pub base_ring: Arc<Ring>,
    /// `x_0..x_n` (the base variables), then `lambda1..lambdam`, then `u0..un`.
    pub extended_ring: Arc<Ring>,
    /// `m + n + 1` generators.
    pub system: Ideal,
    /// `jacobian[j][i] = ∂p_j/∂x_i`, in the base ring.
    pub jacobian: Vec<Vec<Polynomial>>,
    weights: Vec<u32>,
}

impl DualizationSystem {
    pub fn generator_count(&self) -> usize {
        self.jacobian.len()
    }

    /// Number of variables eliminated: all `x` and all `λ`.
    pub fn eliminated(&self) -> usize {
        self.base_ring.len() + self.jacobian.len()
    }

    /// Grading that makes the system homogeneous: `x` weight 1, `λ_j` weight
    /// `c - deg p_j + 1`, `u` weight `c`, where `c` is the largest generator degree.
    pub fn weights(&self) -> &[u32] {
        &self.weights
    }
}

pub fn lambda_name(j: usize) -> String {
    format!("lambda{}", j + 1)
}

pub fn u_name(i: usize) -> String {
    format!("u{i}")
}

fn check_input(ideal: &Ideal) -> Result<()> {
    if ideal.is_zero() {
        return Err(Error::EmptyIdeal);
    }
    if !ideal.is_homogeneous() {
        return Err(Error::NonHomogeneous);
    }
    if ideal.ring().len() < 2 {
        return Err(Error::InvalidRing("dualization needs at least two variables".into()));
    }
    Ok(())
}

pub fn build_system(ideal: &Ideal) -> Result<DualizationSystem> {
    check_input(ideal)?;
    let base = ideal.ring();
    let n1 = base.len();
    let gens = ideal.generators();
    let m = gens.len();

    let mut aux: Vec<String> = (0..m).map(lambda_name).collect();
    aux.extend((0..n1).map(u_name));
    let ext = base.extended(&aux)?;
    let embed: Vec<usize> = (0..n1).collect();

    let jacobian: Vec<Vec<Polynomial>> =
        gens.iter().map(|p| (0..n1).map(|i| p.partial_derivative(i)).collect::<Result<_>>()).collect::<Result<_>>()?;

    let mut system: Vec<Polynomial> = gens.iter().map(|p| p.map_variables(&ext, &embed)).collect::<Result<_>>()?;
    for i in 0..n1 {
        let mut row = Polynomial::variable(&ext, n1 + m + i)?;
        for (j, grad) in jacobian.iter().enumerate() {
            let lambda = Polynomial::variable(&ext, n1 + j)?;
            row = &row - &(&lambda * &grad[i].map_variables(&ext, &embed)?);
        }
        system.push(row);
    }

    let degrees: Vec<u32> = gens.iter().map(|p| p.total_degree().expect("nonzero generator")).collect();
    let top = degrees.iter().copied().max().unwrap_or(1).max(1);
    let mut weights = vec![1u32; n1];
    weights.extend(degrees.iter().map(|&d| top + 1 - d.min(top)));
    weights.extend(std::iter::repeat_n(top, n1));

    Ok(DualizationSystem {
        base_ring: base.clone(),
        extended_ring: ext.clone(),
        system: Ideal::new(&ext, system)?,
        jacobian,
        weights,
    })
}

/// Everything computed on the way to a dual ideal.
#[derive(Clone, Debug)]
pub struct Dual {
    /// The dual ideal in the original ring, as a reduced degrevlex basis.
    pub ideal: Ideal,
    /// The elimination ideal in `ℚ[u0..un]` before renaming.
    pub elimination: Ideal,
    pub system: DualizationSystem,
    /// Reduced basis of the system under the elimination order.
    pub basis: GroebnerBasis,
    /// Set when elimination produced the zero ideal.
    pub degenerate: bool,
}

pub fn dualize(engine: &Engine, ideal: &Ideal) -> Result<Dual> {
    let system = build_system(ideal)?;
    let (elimination, basis) = engine.eliminate(&system.system, system.eliminated(), Some(system.weights()))?;
    let dual = elimination.rename_ring(&system.base_ring)?;
    Ok(Dual { degenerate: dual.is_zero(), ideal: dual, elimination, system, basis })
}

/// The dual ideal of a homogeneous ideal.
pub fn dual(engine: &Engine, ideal: &Ideal) -> Result<Ideal> {
    Ok(dualize(engine, ideal)?.ideal)
}

#[derive(Clone, Debug)]
pub struct BidualReport {
    pub dual: Ideal,
    pub bidual: Ideal,
    /// Whether the bidual equals the input ideal.
    pub equal: bool,
}

pub fn double_dual_check(engine: &Engine, ideal: &Ideal) -> Result<BidualReport> {
    let d = dual(engine, ideal)?;
    let dd = dual(engine, &d)?;
    let equal = engine.ideal_equal(ideal, &dd)?;
    Ok(BidualReport { dual: d, bidual: dd, equal })
}

/// Inclusions between `I`, `√I` and their duals.
///
/// `I ⊇ … ` relations that hold by construction are still evaluated, so a
/// failure points at a computational bug.
#[derive(Clone, Debug)]
pub struct DiagramReport {
    /// `D(I)`.
    pub dual: Ideal,
    /// `D(√I)`, when a radical was supplied.
    pub radical_dual: Option<Ideal>,
    /// `D(I) ⊆ √D(I)`; equivalently `V(√D(I)) ⊆ V(D(I))`.
    pub dual_in_own_radical: bool,
    /// `D(√I) ⊆ √D(√I)`; equivalently `V(√D(√I)) ⊆ V(D(√I))`.
    pub radical_dual_in_own_radical: Option<bool>,
    /// `√D(√I) ⊆ √D(I)`, tested as `D(√I) ⊆ √D(I)`. Observed, not a theorem.
    pub bent_arrow: Option<bool>,
}

impl DiagramReport {
    /// Named results in a fixed order; the flag marks inclusions that are only observed.
    pub fn inclusions(&self) -> Vec<(&'static str, Option<bool>, bool)> {
        vec![
            ("D(I) <= rad D(I)", Some(self.dual_in_own_radical), false),
            ("D(rad I) <= rad D(rad I)", self.radical_dual_in_own_radical, false),
            ("rad D(rad I) <= rad D(I)", self.bent_arrow, true),
            ("V(rad D(I)) <= V(D(I))", Some(self.dual_in_own_radical), false),
            ("V(rad D(rad I)) <= V(D(rad I))", self.radical_dual_in_own_radical, false),
        ]
    }

    /// True iff every evaluated inclusion holds.
    pub fn all_hold(&self) -> bool {
        self.inclusions().iter().all(|(_, v, _)| v.unwrap_or(true))
    }
}

/// Evaluates the inclusions of the dual diagram. `radical`, if given, must
/// satisfy `I ⊆ radical ⊆ √I`.
pub fn check_diagram(engine: &Engine, ideal: &Ideal, radical: Option<&Ideal>) -> Result<DiagramReport> {
    if let Some(r) = radical {
        if !engine.ideal_contains(r, ideal)? {
            return Err(Error::BadRadical("ideal is not contained in the candidate".into()));
        }
        if !engine.radical_contains(ideal, r)? {
            return Err(Error::BadRadical("candidate is not contained in the radical".into()));
        }
    }
    let d = dual(engine, ideal)?;
    let dual_in_own_radical = engine.radical_contains(&d, &d)?;
    let (radical_dual, radical_dual_in_own_radical, bent_arrow) = match radical {
        Some(r) => {
            let dr = dual(engine, r)?;
            let own = engine.radical_contains(&dr, &dr)?;
            let bent = engine.radical_contains(&d, &dr)?;
            (Some(dr), Some(own), Some(bent))
        }
        None => (None, None, None),
    };
    Ok(DiagramReport { dual: d, radical_dual, dual_in_own_radical, radical_dual_in_own_radical, bent_arrow })
}

/// Fixed multiplier vectors for the sampling oracle: the unit vectors, the
/// all-ones vector, `(1, 2, …, m)`, `-2·(1, …, 1)` and `(1, 2, …, m)/3`,
/// without duplicates.
pub fn oracle_lambdas(m: usize) -> Vec<Vec<Rational>> {
    let int = |k: i64| Rational::from_integer(k.into());
    let mut out: Vec<Vec<Rational>> = Vec::new();
    for j in 0..m {
        out.push((0..m).map(|k| if k == j { Rational::one() } else { Rational::zero() }).collect());
    }
    out.push(vec![Rational::one(); m]);
    out.push((1..=m as i64).map(int).collect());
    out.push(vec![int(-2); m]);
    out.push((1..=m as i64).map(|k| Rational::new(k.into(), 3.into())).collect());
    let mut unique: Vec<Vec<Rational>> = Vec::new();
    for v in out {
        if !unique.contains(&v) {
            unique.push(v);
        }
    }
    unique
}

/// Brute-force check of a dual: at every sample point `x` of `V(I)` and for
/// every multiplier vector `λ`, the hyperplane `u = Jᵗ(x)·λ` must satisfy all
/// generators of `dual` (zero `u` is skipped).
pub fn tangent_sample_oracle(ideal: &Ideal, dual: &Ideal, samples: &[Vec<Rational>]) -> Result<bool> {
    let n1 = ideal.ring().len();
    let gens = ideal.generators();
    let jacobian: Vec<Vec<Polynomial>> =
        gens.iter().map(|p| (0..n1).map(|i| p.partial_derivative(i)).collect::<Result<_>>()).collect::<Result<_>>()?;
    let lambdas = oracle_lambdas(gens.len());
    for (k, x) in samples.iter().enumerate() {
        for g in gens {
            if !g.evaluate(x)?.is_zero() {
                return Err(Error::NotOnVariety(k));
            }
        }
        let jx: Vec<Vec<Rational>> =
            jacobian.iter().map(|row| row.iter().map(|d| d.evaluate(x)).collect::<Result<_>>()).collect::<Result<_>>()?;
        for lambda in &lambdas {
            let u: Vec<Rational> = (0..n1).map(|i| jx.iter().zip(lambda).map(|(row, l)| &row[i] * l).sum()).collect();
            if u.iter().all(Zero::is_zero) {
                continue;
            }
            for d in dual.generators() {
                if !d.evaluate(&u)?.is_zero() {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}
