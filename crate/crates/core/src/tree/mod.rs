//! Planar reduced rooted trees and their unit-extended basis.
//!
//! A [`PlanarTree`] is either the single vertex `x` or a root with at least two
//! ordered children. [`BasisElement`] adjoins the empty tree `1`, giving the
//! monomial basis of the tree-polynomial algebra.

mod contract;
mod enumerate;
mod general;
pub(crate) mod text;

use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

pub use contract::LeafSet;
pub(crate) use contract::contract_with;
pub use enumerate::{enumerate_trees, enumerate_trees_up_to};
pub use general::GeneralTree;

use crate::error::{Error, Result};

/// A finite planar reduced rooted tree.
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum PlanarTree {
    /// The single-vertex tree `x`.
    Leaf,
    Node(Arc<Node>),
}

/// An internal vertex with at least two children, carrying its cached leaf count.
#[derive(PartialEq, Eq, Hash)]
pub struct Node {
    degree: usize,
    children: Vec<PlanarTree>,
}

impl PlanarTree {
    pub fn leaf() -> Self {
        PlanarTree::Leaf
    }

    /// Grafts `children` onto a new root. At least two children are required.
    pub fn graft(children: Vec<PlanarTree>) -> Result<Self> {
        if children.len() < 2 {
            return Err(Error::GraftArity(children.len()));
        }
        Ok(Self::graft_unchecked(children))
    }

    pub(crate) fn graft_unchecked(children: Vec<PlanarTree>) -> Self {
        debug_assert!(children.len() >= 2);
        let degree = children.iter().map(PlanarTree::degree).sum();
        PlanarTree::Node(Arc::new(Node { degree, children }))
    }

    /// The `m`-ary corolla `x^m`; `x^1` is `x` itself.
    pub fn corolla(m: usize) -> Result<Self> {
        match m {
            0 => Err(Error::GraftArity(0)),
            1 => Ok(PlanarTree::Leaf),
            _ => Ok(Self::graft_unchecked(vec![PlanarTree::Leaf; m])),
        }
    }

    /// Number of leaves.
    pub fn degree(&self) -> usize {
        match self {
            PlanarTree::Leaf => 1,
            PlanarTree::Node(node) => node.degree,
        }
    }

    /// Number of children of the root.
    pub fn arity(&self) -> usize {
        self.children().len()
    }

    pub fn children(&self) -> &[PlanarTree] {
        match self {
            PlanarTree::Leaf => &[],
            PlanarTree::Node(node) => &node.children,
        }
    }

    pub fn is_leaf(&self) -> bool {
        matches!(self, PlanarTree::Leaf)
    }

    /// True for `x^m` with `m >= 2`.
    pub fn is_corolla(&self) -> bool {
        !self.is_leaf() && self.children().iter().all(PlanarTree::is_leaf)
    }

    pub fn contract(&self, leaves: &LeafSet) -> Result<BasisElement> {
        contract::contract(self, leaves)
    }

    pub fn spanned_subtree(&self, leaves: &LeafSet) -> Result<GeneralTree> {
        contract::spanned_subtree(self, leaves)
    }
}

impl Ord for PlanarTree {
    /// Degree first, then root arity, then the child sequences lexicographically.
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.arity().cmp(&other.arity()))
            .then_with(|| self.children().cmp(other.children()))
    }
}

impl PartialOrd for PlanarTree {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for PlanarTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A basis element of the tree-polynomial algebra: the unit `1` or a tree.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BasisElement {
    Unit,
    Tree(PlanarTree),
}

impl BasisElement {
    pub fn x() -> Self {
        BasisElement::Tree(PlanarTree::Leaf)
    }

    pub fn degree(&self) -> usize {
        match self {
            BasisElement::Unit => 0,
            BasisElement::Tree(t) => t.degree(),
        }
    }

    pub fn arity(&self) -> Result<usize> {
        match self {
            BasisElement::Unit => Err(Error::UnitArity),
            BasisElement::Tree(t) => Ok(t.arity()),
        }
    }

    pub fn is_unit(&self) -> bool {
        matches!(self, BasisElement::Unit)
    }

    pub fn as_tree(&self) -> Option<&PlanarTree> {
        match self {
            BasisElement::Unit => None,
            BasisElement::Tree(t) => Some(t),
        }
    }

    /// Strict grafting: at least two children, none of them the unit.
    pub fn graft(children: &[BasisElement]) -> Result<PlanarTree> {
        if children.len() < 2 {
            return Err(Error::GraftArity(children.len()));
        }
        let trees = children
            .iter()
            .map(|c| c.as_tree().cloned().ok_or(Error::UnitChild))
            .collect::<Result<Vec<_>>>()?;
        Ok(PlanarTree::graft_unchecked(trees))
    }

    /// Grafting with the unital convention: unit factors are dropped; two or
    /// more remaining factors are grafted, a single one is returned as is, and
    /// no remaining factor gives the unit.
    pub fn graft_unital<'a, I>(factors: I) -> BasisElement
    where
        I: IntoIterator<Item = &'a BasisElement>,
    {
        let mut trees: Vec<PlanarTree> = factors.into_iter().filter_map(|f| f.as_tree().cloned()).collect();
        match trees.len() {
            0 => BasisElement::Unit,
            1 => BasisElement::Tree(trees.pop().expect("one factor")),
            _ => BasisElement::Tree(PlanarTree::graft_unchecked(trees)),
        }
    }
}

impl From<PlanarTree> for BasisElement {
    fn from(t: PlanarTree) -> Self {
        BasisElement::Tree(t)
    }
}

impl fmt::Debug for BasisElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(s: &str) -> BasisElement {
        s.parse().unwrap()
    }

    #[test]
    fn arity_of_basic_trees() {
        assert_eq!(t("x").arity(), Ok(0));
        assert_eq!(t("(x x x)").arity(), Ok(3));
        assert_eq!(t("((x x) x)").arity(), Ok(2));
        assert_eq!(BasisElement::Unit.arity(), Err(Error::UnitArity));
    }

    #[test]
    fn degree_counts_leaves() {
        assert_eq!(BasisElement::Unit.degree(), 0);
        assert_eq!(t("x").degree(), 1);
        for m in 2..8 {
            assert_eq!(PlanarTree::corolla(m).unwrap().degree(), m);
        }
        assert_eq!(t("((x x) (x x x))").degree(), 5);
    }

    #[test]
    fn graft_builds_new_root() {
        let x = BasisElement::x();
        assert_eq!(BasisElement::graft(&[x.clone(), x.clone()]).unwrap(), PlanarTree::corolla(2).unwrap());
        assert_eq!(BasisElement::Tree(BasisElement::graft(&[x.clone(), x.clone(), x.clone()]).unwrap()), t("x^3"));
        assert_eq!(BasisElement::Tree(BasisElement::graft(&[t("(x x)"), x.clone()]).unwrap()), t("((x x) x)"));
    }

    #[test]
    fn graft_rejects_bad_input() {
        let x = BasisElement::x();
        assert_eq!(BasisElement::graft(std::slice::from_ref(&x)), Err(Error::GraftArity(1)));
        assert_eq!(BasisElement::graft(&[]), Err(Error::GraftArity(0)));
        assert_eq!(BasisElement::graft(&[x, BasisElement::Unit]), Err(Error::UnitChild));
        assert_eq!(PlanarTree::graft(vec![PlanarTree::Leaf]), Err(Error::GraftArity(1)));
    }

    #[test]
    fn unital_graft_collapses() {
        let x = BasisElement::x();
        let u = BasisElement::Unit;
        assert_eq!(BasisElement::graft_unital([&u, &x]), x);
        assert_eq!(BasisElement::graft_unital([&u, &u]), u);
        assert_eq!(BasisElement::graft_unital([&x, &u, &x]), t("x^2"));
    }

    #[test]
    fn ordering() {
        assert!(BasisElement::Unit < t("x"));
        assert_eq!(t("(x x x)").cmp(&t("((x x) x)")), Ordering::Greater);
        assert_eq!(t("((x x) x)").cmp(&t("((x x) x)")), Ordering::Equal);
        assert!(t("(x (x x))") < t("((x x) x)"));
        assert!(t("x^2") < t("(x x^2)"));
    }
}
