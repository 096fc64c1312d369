//! Brute-force shuffle: `S ⧢ T = Σ_V #N_{S,T}(V) · V`, where `N_{S,T}(V)` is the
//! set of leaf subsets `I` of `V` with `V|I = S` and `V|I^c = T`. Contractions
//! here are computed as the reduction of the spanned subtree.

use std::collections::BTreeMap;

use super::{Counts, TreePolynomial};
use crate::error::{Error, Result};
use crate::scalar::BigInt;
use crate::tree::{enumerate_trees_up_to, BasisElement, LeafSet, PlanarTree};

pub const DEFAULT_ORACLE_BOUND: usize = 8;

/// Enumerative shuffle for total degrees up to a bound.
pub struct ShuffleOracle {
    bound: usize,
    trees: Vec<Vec<PlanarTree>>,
}

impl ShuffleOracle {
    pub fn new(bound: usize) -> Self {
        ShuffleOracle {
            bound,
            trees: enumerate_trees_up_to(bound),
        }
    }

    pub fn bound(&self) -> usize {
        self.bound
    }

    fn check(&self, degree: usize) -> Result<()> {
        if degree > self.bound {
            Err(Error::OracleBound { degree, bound: self.bound })
        } else {
            Ok(())
        }
    }

    /// `s ⧢ t` by enumerating every tree of degree `deg s + deg t` and every
    /// leaf subset of size `deg s`.
    pub fn shuffle(&self, s: &BasisElement, t: &BasisElement) -> Result<Counts> {
        let degree = s.degree() + t.degree();
        self.check(degree)?;
        if degree == 0 {
            return Ok(Counts::one());
        }
        let mut out = TreePolynomial::zero();
        for v in &self.trees[degree] {
            let mut count = 0u64;
            for mask in 0u64..(1 << degree) {
                if mask.count_ones() as usize != s.degree() {
                    continue;
                }
                let (left, right) = split(v, mask);
                if &left == s && &right == t {
                    count += 1;
                }
            }
            out.add_term(BasisElement::Tree(v.clone()), BigInt::from(count));
        }
        Ok(out)
    }

    /// `S ⧢ T` for every pair with `deg S + deg T = degree`, from a single pass
    /// over the trees of that degree and all of their leaf subsets.
    pub fn table(&self, degree: usize) -> Result<BTreeMap<(BasisElement, BasisElement), Counts>> {
        self.check(degree)?;
        let mut table: BTreeMap<(BasisElement, BasisElement), Counts> = BTreeMap::new();
        if degree == 0 {
            table.insert((BasisElement::Unit, BasisElement::Unit), Counts::one());
            return Ok(table);
        }
        let one = BigInt::from(1);
        for v in &self.trees[degree] {
            let tree = BasisElement::Tree(v.clone());
            for mask in 0u64..(1 << degree) {
                table.entry(split(v, mask)).or_default().add_term(tree.clone(), one.clone());
            }
        }
        Ok(table)
    }
}

impl Default for ShuffleOracle {
    fn default() -> Self {
        Self::new(DEFAULT_ORACLE_BOUND)
    }
}

fn contraction(v: &PlanarTree, leaves: &LeafSet) -> BasisElement {
    if leaves.is_empty() {
        return BasisElement::Unit;
    }
    let spanned = v.spanned_subtree(leaves).expect("leaf indices in range");
    BasisElement::Tree(spanned.reduce())
}

fn split(v: &PlanarTree, mask: u64) -> (BasisElement, BasisElement) {
    let inside = LeafSet::from_mask(mask);
    let outside = inside.complement(v.degree());
    (contraction(v, &inside), contraction(v, &outside))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(s: &str) -> BasisElement {
        s.parse().unwrap()
    }

    #[test]
    fn base_cases() {
        let oracle = ShuffleOracle::default();
        assert_eq!(oracle.shuffle(&t("x"), &t("x")).unwrap(), Counts::term(t("x^2"), BigInt::from(2)));
        assert_eq!(oracle.shuffle(&BasisElement::Unit, &BasisElement::Unit).unwrap(), Counts::one());
        let p = oracle.shuffle(&t("x"), &t("x^2")).unwrap();
        let total: BigInt = p.iter().map(|(_, c)| c.clone()).sum();
        assert_eq!(total, BigInt::from(9));
        assert_eq!(p.coeff(&t("x^3")), BigInt::from(3));
        assert_eq!(p.coeff(&t("(x x^2)")), BigInt::from(3));
        assert_eq!(p.coeff(&t("(x^2 x)")), BigInt::from(3));
    }

    #[test]
    fn bound_is_enforced() {
        let oracle = ShuffleOracle::new(4);
        assert_eq!(
            oracle.shuffle(&t("x^3"), &t("x^2")),
            Err(Error::OracleBound { degree: 5, bound: 4 })
        );
        assert!(oracle.table(5).is_err());
    }

    #[test]
    fn table_agrees_with_single_queries() {
        let oracle = ShuffleOracle::new(5);
        for degree in 0..=5 {
            for ((s, u), p) in oracle.table(degree).unwrap() {
                assert_eq!(oracle.shuffle(&s, &u).unwrap(), p, "{s} ⧢ {u}");
            }
        }
    }
}
