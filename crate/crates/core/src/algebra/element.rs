use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::rootsys::{GroupId, WeylElement, WeylGroup};

/// A finitely supported rational combination of elements of one Weyl group.
///
/// Coefficients are keyed by enumeration index; zero coefficients are never
/// stored, so the zero element is the empty map.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgebraElement {
    group: GroupId,
    coeffs: BTreeMap<u32, BigRational>,
}

impl AlgebraElement {
    pub fn zero(group: &WeylGroup) -> Self {
        AlgebraElement { group: group.id(), coeffs: BTreeMap::new() }
    }

    pub(crate) fn zero_in(group: GroupId) -> Self {
        AlgebraElement { group, coeffs: BTreeMap::new() }
    }

    /// `delta_w`, the basis element of `w`.
    pub fn delta(w: WeylElement) -> Self {
        Self::monomial(w, BigRational::one())
    }

    pub fn monomial(w: WeylElement, c: BigRational) -> Self {
        let mut out = Self::zero_in(w.group_id());
        out.add_term(w.index() as u32, c);
        out
    }

    /// Builds an element from `(w, c)` pairs; repeated keys are summed.
    pub fn from_terms(group: &WeylGroup, terms: impl IntoIterator<Item = (WeylElement, BigRational)>) -> Result<Self> {
        let mut out = Self::zero(group);
        for (w, c) in terms {
            if !group.contains(w) {
                return Err(Error::MixedGroups);
            }
            out.add_term(w.index() as u32, c);
        }
        Ok(out)
    }

    pub fn group_id(&self) -> GroupId {
        self.group
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Number of nonzero coefficients.
    pub fn support_len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeff(&self, w: WeylElement) -> BigRational {
        assert_eq!(w.group_id(), self.group, "element does not belong to this algebra");
        self.coeffs.get(&(w.index() as u32)).cloned().unwrap_or_else(BigRational::zero)
    }

    /// Nonzero terms in enumeration order, by index.
    pub fn terms(&self) -> impl Iterator<Item = (usize, &BigRational)> + '_ {
        self.coeffs.iter().map(|(&k, c)| (k as usize, c))
    }

    pub(crate) fn add_term(&mut self, index: u32, c: BigRational) {
        if c.is_zero() {
            return;
        }
        match self.coeffs.entry(index) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        if self.group != other.group {
            return Err(Error::MixedGroups);
        }
        let mut out = self.clone();
        for (&k, c) in &other.coeffs {
            out.add_term(k, c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.checked_add(&other.scale(&-BigRational::one()))
    }

    pub fn scale(&self, q: &BigRational) -> Self {
        if q.is_zero() {
            return Self::zero_in(self.group);
        }
        AlgebraElement {
            group: self.group,
            coeffs: self.coeffs.iter().map(|(&k, c)| (k, c * q)).collect(),
        }
    }
}
