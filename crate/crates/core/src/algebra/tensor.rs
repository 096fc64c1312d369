use std::collections::btree_map::{self, BTreeMap, Entry};
use std::ops::Add;

use super::TreePolynomial;
use crate::error::{Error, Result};
use crate::scalar::{Coefficient, RationalFunction};
use crate::tree::BasisElement;

/// A finite combination of pure tensors `V ⊗ W` of basis elements.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct TensorPolynomial<C = RationalFunction> {
    terms: BTreeMap<(BasisElement, BasisElement), C>,
}

impl<C: Coefficient> TensorPolynomial<C> {
    pub fn zero() -> Self {
        TensorPolynomial { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::pure(BasisElement::Unit, BasisElement::Unit)
    }

    pub fn pure(left: BasisElement, right: BasisElement) -> Self {
        Self::term(left, right, C::one())
    }

    pub fn term(left: BasisElement, right: BasisElement, c: C) -> Self {
        let mut p = Self::zero();
        p.add_term(left, right, c);
        p
    }

    /// `f ⊗ g`, expanded bilinearly.
    pub fn tensor(f: &TreePolynomial<C>, g: &TreePolynomial<C>) -> Self {
        let mut out = Self::zero();
        for (v, a) in f {
            for (w, b) in g {
                out.add_term(v.clone(), w.clone(), a.clone() * b);
            }
        }
        out
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

    pub fn add_term(&mut self, left: BasisElement, right: BasisElement, c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry((left, right)) {
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
        for ((v, w), c) in &other.terms {
            self.add_term(v.clone(), w.clone(), c.clone() * factor);
        }
    }

    /// The coefficient of `v ⊗ w`, zero if absent.
    pub fn coeff(&self, v: &BasisElement, w: &BasisElement) -> C {
        // BTreeMap lookups need an owned key pair.
        self.terms
            .get(&(v.clone(), w.clone()))
            .cloned()
            .unwrap_or_else(C::zero)
    }

    pub fn iter(&self) -> btree_map::Iter<'_, (BasisElement, BasisElement), C> {
        self.terms.iter()
    }

    /// Drops the pure tensors with `deg V + deg W > cap`.
    pub fn truncate(&self, cap: usize) -> Self {
        TensorPolynomial {
            terms: self
                .terms
                .iter()
                .filter(|((v, w), _)| v.degree() + w.degree() <= cap)
                .map(|(k, c)| (k.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn map_coeffs<D: Coefficient>(&self, mut f: impl FnMut(&C) -> D) -> TensorPolynomial<D> {
        let mut out = TensorPolynomial::zero();
        for ((v, w), c) in &self.terms {
            out.add_term(v.clone(), w.clone(), f(c));
        }
        out
    }

    pub fn try_map_coeffs<D: Coefficient>(&self, mut f: impl FnMut(&C) -> Result<D>) -> Result<TensorPolynomial<D>> {
        let mut out = TensorPolynomial::zero();
        for ((v, w), c) in &self.terms {
            out.add_term(v.clone(), w.clone(), f(c)?);
        }
        Ok(out)
    }

    /// Componentwise multilinear grafting:
    /// `(f1 ⊗ g1, ..., fm ⊗ gm) ↦ (f1 ... fm) ⊗ (g1 ... gm)`, with the unital
    /// convention on each side.
    pub fn graft(factors: &[&TensorPolynomial<C>]) -> Result<Self> {
        if factors.len() < 2 {
            return Err(Error::GraftArity(factors.len()));
        }
        let mut out = Self::zero();
        if factors.iter().any(|f| f.is_zero()) {
            return Ok(out);
        }
        let mut lefts = Vec::with_capacity(factors.len());
        let mut rights = Vec::with_capacity(factors.len());
        expand(factors, &mut lefts, &mut rights, C::one(), &mut out);
        Ok(out)
    }
}

fn expand<C: Coefficient>(
    factors: &[&TensorPolynomial<C>],
    lefts: &mut Vec<BasisElement>,
    rights: &mut Vec<BasisElement>,
    coeff: C,
    out: &mut TensorPolynomial<C>,
) {
    let Some((first, rest)) = factors.split_first() else {
        out.add_term(
            BasisElement::graft_unital(lefts.iter()),
            BasisElement::graft_unital(rights.iter()),
            coeff,
        );
        return;
    };
    for ((v, w), c) in first.iter() {
        lefts.push(v.clone());
        rights.push(w.clone());
        expand(rest, lefts, rights, coeff.clone() * c, out);
        lefts.pop();
        rights.pop();
    }
}

impl<C: Coefficient> Default for TensorPolynomial<C> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<'a, C: Coefficient> Add<&'a TensorPolynomial<C>> for &'a TensorPolynomial<C> {
    type Output = TensorPolynomial<C>;

    fn add(self, rhs: &TensorPolynomial<C>) -> TensorPolynomial<C> {
        let mut out = self.clone();
        out.add_scaled(rhs, &C::one());
        out
    }
}

impl<'a, C: Coefficient> IntoIterator for &'a TensorPolynomial<C> {
    type Item = (&'a (BasisElement, BasisElement), &'a C);
    type IntoIter = btree_map::Iter<'a, (BasisElement, BasisElement), C>;

    fn into_iter(self) -> Self::IntoIter {
        self.terms.iter()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::BigInt;

    type T = TensorPolynomial<BigInt>;

    fn t(s: &str) -> BasisElement {
        s.parse().unwrap()
    }

    #[test]
    fn grafting_pure_tensors() {
        let x = BasisElement::x();
        let u = BasisElement::Unit;
        let left = T::pure(x.clone(), u.clone());
        assert_eq!(T::graft(&[&left, &left]).unwrap(), T::pure(t("x^2"), u.clone()));
        let right = T::pure(u.clone(), x.clone());
        assert_eq!(T::graft(&[&right, &right]).unwrap(), T::pure(u.clone(), t("x^2")));
        assert_eq!(T::graft(&[&left, &right]).unwrap(), T::pure(x.clone(), x.clone()));
        assert_eq!(T::graft(&[&left]), Err(Error::GraftArity(1)));
    }

    #[test]
    fn coefficient_lookup() {
        let mut p = T::zero();
        p.add_term(BasisElement::x(), BasisElement::x(), BigInt::from(2));
        assert_eq!(p.coeff(&BasisElement::x(), &BasisElement::x()), BigInt::from(2));
        assert_eq!(p.coeff(&BasisElement::x(), &BasisElement::Unit), BigInt::from(0));
        p.add_term(BasisElement::x(), BasisElement::x(), BigInt::from(-2));
        assert!(p.is_zero());
    }
}
