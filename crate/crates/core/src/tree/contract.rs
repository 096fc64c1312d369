//! Spanned subtrees and contractions onto sets of leaves.

use std::collections::BTreeSet;

use super::{BasisElement, GeneralTree, PlanarTree};
use crate::error::{Error, Result};

/// A set of leaf positions, 0-based in planar left-to-right order.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct LeafSet(BTreeSet<usize>);

impl LeafSet {
    pub fn new() -> Self {
        LeafSet::default()
    }

    /// All leaves of a tree with `degree` leaves.
    pub fn full(degree: usize) -> Self {
        (0..degree).collect()
    }

    /// Positions of the set bits of `mask`.
    pub fn from_mask(mask: u64) -> Self {
        (0..64).filter(|i| mask >> i & 1 == 1).collect()
    }

    pub fn contains(&self, index: usize) -> bool {
        self.0.contains(&index)
    }

    pub fn insert(&mut self, index: usize) -> bool {
        self.0.insert(index)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    /// Complement within the leaves of a tree with `degree` leaves.
    pub fn complement(&self, degree: usize) -> Self {
        (0..degree).filter(|i| !self.contains(*i)).collect()
    }

    fn check_range(&self, degree: usize) -> Result<()> {
        match self.0.iter().next_back() {
            Some(&index) if index >= degree => Err(Error::LeafOutOfRange { index, degree }),
            _ => Ok(()),
        }
    }
}

impl FromIterator<usize> for LeafSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        LeafSet(iter.into_iter().collect())
    }
}

/// The smallest subtree containing the root and the leaves in `leaves`; it
/// may have vertices of arity one.
pub(crate) fn spanned_subtree(t: &PlanarTree, leaves: &LeafSet) -> Result<GeneralTree> {
    leaves.check_range(t.degree())?;
    if leaves.is_empty() {
        return Err(Error::EmptyLeafSet);
    }
    let mut offset = 0;
    Ok(span(t, &mut offset, leaves).expect("nonempty leaf set"))
}

fn span(t: &PlanarTree, offset: &mut usize, leaves: &LeafSet) -> Option<GeneralTree> {
    if t.is_leaf() {
        let here = *offset;
        *offset += 1;
        return leaves.contains(here).then(GeneralTree::leaf);
    }
    let children: Vec<GeneralTree> = t.children().iter().filter_map(|c| span(c, offset, leaves)).collect();
    (!children.is_empty()).then(|| GeneralTree::node(children))
}

/// The contraction of `t` onto `leaves`; the unit when `leaves` is empty.
pub(crate) fn contract(t: &PlanarTree, leaves: &LeafSet) -> Result<BasisElement> {
    leaves.check_range(t.degree())?;
    Ok(contract_with(t, |i| leaves.contains(i)))
}

/// Contraction onto the leaves selected by `keep`, computed child by child:
/// the parts with at least one kept leaf are grafted, and a single surviving
/// part replaces the whole tree.
pub(crate) fn contract_with<F: Fn(usize) -> bool>(t: &PlanarTree, keep: F) -> BasisElement {
    let mut offset = 0;
    match contract_rec(t, &mut offset, &keep) {
        Some(tree) => BasisElement::Tree(tree),
        None => BasisElement::Unit,
    }
}

fn contract_rec<F: Fn(usize) -> bool>(t: &PlanarTree, offset: &mut usize, keep: &F) -> Option<PlanarTree> {
    if t.is_leaf() {
        let here = *offset;
        *offset += 1;
        return keep(here).then_some(PlanarTree::Leaf);
    }
    if t.children().iter().all(PlanarTree::is_leaf) {
        // fast path for corollas
        let start = *offset;
        *offset += t.arity();
        let kept = (start..*offset).filter(|&i| keep(i)).count();
        return match kept {
            0 => None,
            1 => Some(PlanarTree::Leaf),
            n if n == t.arity() => Some(t.clone()),
            n => Some(PlanarTree::corolla(n).expect("n >= 2")),
        };
    }
    let mut parts = Vec::new();
    let mut unchanged = true;
    for child in t.children() {
        match contract_rec(child, offset, keep) {
            Some(part) => {
                unchanged &= &part == child;
                parts.push(part);
            }
            None => unchanged = false,
        }
    }
    match parts.len() {
        0 => None,
        1 => parts.pop(),
        _ if unchanged => Some(t.clone()),
        _ => Some(PlanarTree::graft_unchecked(parts)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(s: &str) -> PlanarTree {
        s.parse::<BasisElement>().unwrap().as_tree().unwrap().clone()
    }

    fn set(ix: &[usize]) -> LeafSet {
        ix.iter().copied().collect()
    }

    #[test]
    fn spanned_subtrees() {
        assert_eq!(t("x^3").spanned_subtree(&set(&[0, 2])).unwrap().to_string(), "(x x)");
        // path root - binary vertex - leaf 0
        assert_eq!(t("((x x) x)").spanned_subtree(&set(&[0])).unwrap().to_string(), "((x))");
        assert_eq!(t("x").spanned_subtree(&set(&[0])).unwrap(), GeneralTree::leaf());
        assert_eq!(t("x^2").spanned_subtree(&set(&[])), Err(Error::EmptyLeafSet));
    }

    #[test]
    fn contraction_examples() {
        let tree = t("((x x) x)");
        assert_eq!(tree.contract(&set(&[0, 1])).unwrap(), "x^2".parse().unwrap());
        assert_eq!(tree.contract(&set(&[0, 2])).unwrap(), "x^2".parse().unwrap());
        assert_eq!(tree.contract(&set(&[1])).unwrap(), BasisElement::x());
        assert_eq!(tree.contract(&set(&[])).unwrap(), BasisElement::Unit);
        assert_eq!(tree.contract(&LeafSet::full(3)).unwrap(), BasisElement::Tree(tree.clone()));
    }

    #[test]
    fn contraction_drops_only_emptied_branches() {
        let tree = t("((x x x) (x x) x)");
        assert_eq!(tree.contract(&set(&[0, 2, 3, 5])).unwrap().to_string(), "(x^2 x x)");
        assert_eq!(tree.contract(&set(&[3, 4])).unwrap().to_string(), "x^2");
    }

    #[test]
    fn out_of_range_index() {
        assert_eq!(
            t("x^2").contract(&set(&[2])),
            Err(Error::LeafOutOfRange { index: 2, degree: 2 })
        );
    }

    #[test]
    fn contraction_is_reduction_of_spanned_subtree() {
        let tree = t("((x (x x)) x (x x x))");
        for mask in 1u64..(1 << tree.degree()) {
            let leaves = LeafSet::from_mask(mask);
            let direct = tree.contract(&leaves).unwrap();
            let via_span = tree.spanned_subtree(&leaves).unwrap().reduce();
            assert_eq!(direct, BasisElement::Tree(via_span), "mask {mask:b}");
        }
    }

    #[test]
    fn complement() {
        assert_eq!(set(&[0, 2]).complement(4), set(&[1, 3]));
        assert_eq!(LeafSet::from_mask(0b101), set(&[0, 2]));
    }
}
