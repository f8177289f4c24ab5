use std::fmt;

use super::{check_same, Ring};
use crate::error::Result;

/// Canonical index of an element within its ring's enumeration.
///
/// An `Elem` carries no ring; arithmetic goes through the owning [`Ring`].
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Elem(pub(crate) u32);

impl Elem {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

/// An element bound to its ring, with checked binary operations.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Element {
    ring: Ring,
    value: Elem,
}

impl Element {
    pub(crate) fn new(ring: Ring, value: Elem) -> Element {
        Element { ring, value }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn value(&self) -> Elem {
        self.value
    }

    fn binary(&self, other: &Element, op: impl Fn(&Ring, Elem, Elem) -> Elem) -> Result<Element> {
        check_same(&self.ring, &other.ring)?;
        Ok(Element::new(
            self.ring.clone(),
            op(&self.ring, self.value, other.value),
        ))
    }

    pub fn add(&self, other: &Element) -> Result<Element> {
        self.binary(other, Ring::add)
    }

    pub fn sub(&self, other: &Element) -> Result<Element> {
        self.binary(other, Ring::sub)
    }

    pub fn mul(&self, other: &Element) -> Result<Element> {
        self.binary(other, Ring::mul)
    }

    pub fn neg(&self) -> Element {
        Element::new(self.ring.clone(), self.ring.neg(self.value))
    }

    pub fn pow(&self, e: u64) -> Element {
        Element::new(self.ring.clone(), self.ring.pow(self.value, e))
    }

    pub fn inv(&self) -> Result<Element> {
        Ok(Element::new(self.ring.clone(), self.ring.inv(self.value)?))
    }

    pub fn is_unit(&self) -> bool {
        self.ring.is_unit(self.value)
    }

    pub fn in_maximal_ideal(&self) -> bool {
        self.ring.in_maximal_ideal(self.value)
    }

    /// Image in the residue field.
    pub fn residue(&self) -> Element {
        let k = self.ring.residue_field().clone();
        Element::new(k, self.ring.residue(self.value))
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.ring.encode(self.value))
    }
}

impl fmt::Debug for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} in {}", self.ring.encode(self.value), self.ring)
    }
}
