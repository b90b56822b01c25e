//! Ideals and Gröbner bases as values.

use crate::error::{Error, Result};
use crate::poly::Polynomial;
use crate::ring::{MonomialOrder, Ring};
use std::fmt;

/// A finitely generated ideal: a ring plus a generator list. Zero generators
/// are dropped; the order of the list is not semantically meaningful.
#[derive(Clone, PartialEq, Eq)]
pub struct Ideal {
    ring: Ring,
    generators: Vec<Polynomial>,
}

impl Ideal {
    pub fn new(ring: &Ring, generators: Vec<Polynomial>) -> Result<Ideal> {
        for g in &generators {
            if g.ring() != ring {
                return Err(Error::RingMismatch);
            }
        }
        Ok(Ideal {
            ring: ring.clone(),
            generators: generators.into_iter().filter(|g| !g.is_zero()).collect(),
        })
    }

    pub fn zero(ring: &Ring) -> Ideal {
        Ideal {
            ring: ring.clone(),
            generators: Vec::new(),
        }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn is_zero_ideal(&self) -> bool {
        self.generators.is_empty()
    }

    /// Sum of ideals (concatenated generators).
    pub fn plus(&self, other: &Ideal) -> Result<Ideal> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch);
        }
        let mut gens = self.generators.clone();
        gens.extend(other.generators.iter().cloned());
        Ideal::new(&self.ring, gens)
    }
}

impl fmt::Debug for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Ideal")?;
        f.debug_list().entries(self.generators.iter()).finish()
    }
}

/// A Gröbner basis computed (or asserted) for some ideal under a fixed
/// monomial order.
///
/// A reduced basis is monic, no leading term divides any term of another
/// element, and elements are sorted ascending by leading monomial, so it is
/// the unique canonical representative of the (ideal, order) pair.
#[derive(Clone, PartialEq, Eq)]
pub struct GroebnerBasis {
    order: MonomialOrder,
    elements: Vec<Polynomial>,
    reduced: bool,
}

impl GroebnerBasis {
    pub(crate) fn from_parts(
        order: MonomialOrder,
        elements: Vec<Polynomial>,
        reduced: bool,
    ) -> GroebnerBasis {
        GroebnerBasis {
            order,
            elements,
            reduced,
        }
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn elements(&self) -> &[Polynomial] {
        &self.elements
    }

    pub fn is_reduced(&self) -> bool {
        self.reduced
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn to_ideal(&self, ring: &Ring) -> Ideal {
        Ideal {
            ring: ring.clone(),
            generators: self.elements.clone(),
        }
    }
}

impl fmt::Debug for GroebnerBasis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GroebnerBasis[{}]", self.order)?;
        f.debug_list().entries(self.elements.iter()).finish()
    }
}
