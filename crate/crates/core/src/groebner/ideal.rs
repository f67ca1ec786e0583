use std::sync::Arc;

use crate::error::Result;
use crate::poly::{check_same_ring, MonomialOrder, Polynomial, Ring};

/// A finitely generated ideal. Zero generators are dropped on construction,
/// so an empty generator list is the zero ideal.
#[derive(Clone, Debug, PartialEq)]
pub struct Ideal {
    ring: Arc<Ring>,
    generators: Vec<Polynomial>,
}

impl Ideal {
    pub fn new(ring: &Arc<Ring>, generators: Vec<Polynomial>) -> Result<Ideal> {
        for g in &generators {
            check_same_ring(g.ring(), ring)?;
        }
        let generators = generators.into_iter().filter(|g| !g.is_zero()).collect();
        Ok(Ideal { ring: ring.clone(), generators })
    }

    pub fn zero(ring: &Arc<Ring>) -> Ideal {
        Ideal { ring: ring.clone(), generators: Vec::new() }
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn is_zero(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn is_homogeneous(&self) -> bool {
        self.generators.iter().all(Polynomial::is_homogeneous)
    }

    /// The same generators read in a ring of equal size (variable renaming).
    pub fn rename_ring(&self, target: &Arc<Ring>) -> Result<Ideal> {
        let generators = self.generators.iter().map(|g| g.rename_ring(target)).collect::<Result<_>>()?;
        Ok(Ideal { ring: target.clone(), generators })
    }
}

/// A Gröbner basis of `ideal` with respect to `order`.
#[derive(Clone, Debug, PartialEq)]
pub struct GroebnerBasis {
    pub(crate) ideal: Ideal,
    pub(crate) order: MonomialOrder,
    pub(crate) basis: Vec<Polynomial>,
    pub(crate) reduced: bool,
}

impl GroebnerBasis {
    pub fn ideal(&self) -> &Ideal {
        &self.ideal
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn basis(&self) -> &[Polynomial] {
        &self.basis
    }

    pub fn is_reduced(&self) -> bool {
        self.reduced
    }

    pub fn ring(&self) -> &Arc<Ring> {
        self.ideal.ring()
    }

    /// The basis as an ideal.
    pub fn to_ideal(&self) -> Ideal {
        Ideal { ring: self.ideal.ring.clone(), generators: self.basis.clone() }
    }
}
