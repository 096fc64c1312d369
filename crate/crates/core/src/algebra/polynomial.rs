use std::collections::btree_map::{self, BTreeMap, Entry};
use std::ops::{Add, Neg, Sub};

use crate::error::{Error, Result};
use crate::scalar::{Coefficient, RationalFunction};
use crate::tree::{BasisElement, PlanarTree};

/// A finite linear combination of basis trees with coefficients in `C`.
///
/// Zero coefficients are never stored and terms iterate in basis order.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct TreePolynomial<C = RationalFunction> {
    terms: BTreeMap<BasisElement, C>,
}

impl<C: Coefficient> TreePolynomial<C> {
    pub fn zero() -> Self {
        TreePolynomial { terms: BTreeMap::new() }
    }

    /// The algebra unit `1`.
    pub fn one() -> Self {
        Self::monomial(BasisElement::Unit)
    }

    pub fn monomial(t: impl Into<BasisElement>) -> Self {
        Self::term(t, C::one())
    }

    pub fn term(t: impl Into<BasisElement>, c: C) -> Self {
        let mut p = Self::zero();
        p.add_term(t.into(), c);
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Adds `c * t` in place.
    pub fn add_term(&mut self, t: BasisElement, c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(t) {
            Entry::Vacant(slot) => {
                slot.insert(c);
            }
            Entry::Occupied(mut slot) => {
                let sum = slot.get().clone() + &c;
                if sum.is_zero() {
                    slot.remove();
                } else {
                    *slot.get_mut() = sum;
                }
            }
        }
    }

    pub fn add_scaled(&mut self, other: &Self, factor: &C) {
        for (t, c) in &other.terms {
            self.add_term(t.clone(), c.clone() * factor);
        }
    }

    pub fn scale(&self, factor: &C) -> Self {
        let mut out = Self::zero();
        out.add_scaled(self, factor);
        out
    }

    /// The coefficient of `t`, zero if absent.
    pub fn coeff(&self, t: &BasisElement) -> C {
        self.terms.get(t).cloned().unwrap_or_else(C::zero)
    }

    pub fn iter(&self) -> btree_map::Iter<'_, BasisElement, C> {
        self.terms.iter()
    }

    pub fn support(&self) -> impl Iterator<Item = &BasisElement> {
        self.terms.keys()
    }

    /// Largest degree of a monomial, `None` for the zero polynomial.
    pub fn max_degree(&self) -> Option<usize> {
        self.terms.keys().map(BasisElement::degree).max()
    }

    /// True when every monomial has degree `d`.
    pub fn is_homogeneous_of(&self, d: usize) -> bool {
        self.terms.keys().all(|t| t.degree() == d)
    }

    /// Drops the monomials of degree above `cap`.
    pub fn truncate(&self, cap: usize) -> Self {
        TreePolynomial {
            terms: self
                .terms
                .iter()
                .filter(|(t, _)| t.degree() <= cap)
                .map(|(t, c)| (t.clone(), c.clone()))
                .collect(),
        }
    }

    /// Applies `f` to every coefficient, dropping those that become zero.
    pub fn map_coeffs<D: Coefficient>(&self, mut f: impl FnMut(&C) -> D) -> TreePolynomial<D> {
        let mut out = TreePolynomial::zero();
        for (t, c) in &self.terms {
            out.add_term(t.clone(), f(c));
        }
        out
    }

    pub fn try_map_coeffs<D: Coefficient>(&self, mut f: impl FnMut(&C) -> Result<D>) -> Result<TreePolynomial<D>> {
        let mut out = TreePolynomial::zero();
        for (t, c) in &self.terms {
            out.add_term(t.clone(), f(c)?);
        }
        Ok(out)
    }

    /// Multilinear `m`-ary grafting with the unital convention for unit factors.
    pub fn graft(factors: &[&TreePolynomial<C>]) -> Result<Self> {
        if factors.len() < 2 {
            return Err(Error::GraftArity(factors.len()));
        }
        Ok(graft_unchecked(factors))
    }
}

pub(crate) fn graft_unchecked<C: Coefficient>(factors: &[&TreePolynomial<C>]) -> TreePolynomial<C> {
    let mut out = TreePolynomial::zero();
    if factors.iter().any(|f| f.is_zero()) {
        return out;
    }
    let mut chosen = Vec::with_capacity(factors.len());
    expand(factors, &mut chosen, C::one(), &mut out);
    out
}

fn expand<C: Coefficient>(
    factors: &[&TreePolynomial<C>],
    chosen: &mut Vec<BasisElement>,
    coeff: C,
    out: &mut TreePolynomial<C>,
) {
    let Some((first, rest)) = factors.split_first() else {
        out.add_term(BasisElement::graft_unital(chosen.iter()), coeff);
        return;
    };
    for (t, c) in first.iter() {
        chosen.push(t.clone());
        expand(rest, chosen, coeff.clone() * c, out);
        chosen.pop();
    }
}

impl<C: Coefficient> Default for TreePolynomial<C> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<C: Coefficient> From<BasisElement> for TreePolynomial<C> {
    fn from(t: BasisElement) -> Self {
        Self::monomial(t)
    }
}

impl<C: Coefficient> From<PlanarTree> for TreePolynomial<C> {
    fn from(t: PlanarTree) -> Self {
        Self::monomial(t)
    }
}

impl<C: Coefficient> FromIterator<(BasisElement, C)> for TreePolynomial<C> {
    fn from_iter<I: IntoIterator<Item = (BasisElement, C)>>(iter: I) -> Self {
        let mut out = Self::zero();
        for (t, c) in iter {
            out.add_term(t, c);
        }
        out
    }
}

impl<'a, C: Coefficient> IntoIterator for &'a TreePolynomial<C> {
    type Item = (&'a BasisElement, &'a C);
    type IntoIter = btree_map::Iter<'a, BasisElement, C>;

    fn into_iter(self) -> Self::IntoIter {
        self.terms.iter()
    }
}

impl<'a, C: Coefficient> Add<&'a TreePolynomial<C>> for &'a TreePolynomial<C> {
    type Output = TreePolynomial<C>;

    fn add(self, rhs: &TreePolynomial<C>) -> TreePolynomial<C> {
        let mut out = self.clone();
        out.add_scaled(rhs, &C::one());
        out
    }
}

impl<'a, C: Coefficient> Sub<&'a TreePolynomial<C>> for &'a TreePolynomial<C> {
    type Output = TreePolynomial<C>;

    fn sub(self, rhs: &TreePolynomial<C>) -> TreePolynomial<C> {
        let mut out = self.clone();
        out.add_scaled(rhs, &-C::one());
        out
    }
}

impl<C: Coefficient> Neg for &TreePolynomial<C> {
    type Output = TreePolynomial<C>;

    fn neg(self) -> TreePolynomial<C> {
        self.scale(&-C::one())
    }
}
