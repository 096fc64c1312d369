use std::collections::BTreeSet;

use plantree::tree::{enumerate_trees, enumerate_trees_up_to, BasisElement, GeneralTree, LeafSet, PlanarTree};
use proptest::prelude::*;

/// Arbitrary planar rooted trees, including arity-1 vertices.
fn general_tree() -> impl Strategy<Value = GeneralTree> {
    Just(GeneralTree::leaf()).prop_recursive(5, 24, 4, |inner| {
        prop::collection::vec(inner, 1..=4).prop_map(GeneralTree::node)
    })
}

fn reduced_tree() -> impl Strategy<Value = PlanarTree> {
    general_tree().prop_map(|t| t.reduce()).prop_filter("at most 12 leaves", |t| t.degree() <= 12)
}

/// Leaf sets of every vertex, leaves numbered left to right.
fn vertex_leaf_sets(t: &GeneralTree, next: &mut usize, out: &mut BTreeSet<Vec<usize>>) -> Vec<usize> {
    let set = if t.children.is_empty() {
        *next += 1;
        vec![*next - 1]
    } else {
        let mut all = Vec::new();
        for c in &t.children {
            all.extend(vertex_leaf_sets(c, next, out));
        }
        all
    };
    out.insert(set.clone());
    set
}

/// The planar tree of a laminar family of leaf intervals: a vertex per set,
/// children the maximal proper subsets in left-to-right order.
fn from_laminar(root: &[usize], family: &BTreeSet<Vec<usize>>) -> PlanarTree {
    if root.len() == 1 {
        return PlanarTree::leaf();
    }
    let mut children: Vec<&Vec<usize>> = family
        .iter()
        .filter(|s| s.len() < root.len() && s.iter().all(|i| root.contains(i)))
        .collect();
    let inner = children.clone();
    children.retain(|s| !inner.iter().any(|big| big.len() > s.len() && s.iter().all(|i| big.contains(i))));
    children.sort_by_key(|s| s[0]);
    PlanarTree::graft(children.into_iter().map(|s| from_laminar(s, family)).collect()).unwrap()
}

/// Reduction as the tree of distinct vertex leaf sets.
fn reduce_by_vertex_sets(t: &GeneralTree) -> PlanarTree {
    let mut family = BTreeSet::new();
    let mut next = 0;
    let root = vertex_leaf_sets(t, &mut next, &mut family);
    from_laminar(&root, &family)
}

/// Contraction to `leaves` computed directly from the definition: restrict
/// vertex leaf sets to `leaves` and rebuild.
fn contract_by_vertex_sets(t: &PlanarTree, leaves: &LeafSet) -> BasisElement {
    if leaves.is_empty() {
        return BasisElement::Unit;
    }
    let mut family = BTreeSet::new();
    let mut next = 0;
    vertex_leaf_sets(&GeneralTree::from(t), &mut next, &mut family);
    let restricted: BTreeSet<Vec<usize>> = family
        .into_iter()
        .map(|s| s.into_iter().filter(|i| leaves.contains(*i)).collect::<Vec<_>>())
        .filter(|s| !s.is_empty())
        .collect();
    let root: Vec<usize> = leaves.iter().collect();
    BasisElement::Tree(from_laminar(&root, &restricted))
}

fn tree_and_mask() -> impl Strategy<Value = (PlanarTree, u64)> {
    reduced_tree().prop_flat_map(|t| {
        let d = t.degree();
        (Just(t), 0u64..(1u64 << d))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn reduction_is_idempotent_and_keeps_leaves(t in general_tree()) {
        let r = t.reduce();
        prop_assert_eq!(r.degree(), t.leaf_count());
        let g = GeneralTree::from(&r);
        prop_assert!(g.is_reduced());
        prop_assert_eq!(g.reduce(), r);
    }

    #[test]
    fn reduction_matches_vertex_set_construction(t in general_tree()) {
        prop_assert_eq!(t.reduce(), reduce_by_vertex_sets(&t));
    }

    #[test]
    fn reduction_commutes_with_grafting(parts in prop::collection::vec(general_tree(), 2..=4)) {
        let grafted = GeneralTree::node(parts.clone()).reduce();
        let reduced: Vec<PlanarTree> = parts.iter().map(GeneralTree::reduce).collect();
        prop_assert_eq!(grafted, PlanarTree::graft(reduced).unwrap());
    }

    #[test]
    fn lengthening_the_root_is_invisible(t in general_tree()) {
        prop_assert_eq!(t.clone().lengthen().reduce(), t.reduce());
    }

    #[test]
    fn contraction_matches_definition((t, mask) in tree_and_mask()) {
        let leaves = LeafSet::from_mask(mask);
        prop_assert_eq!(t.contract(&leaves).unwrap(), contract_by_vertex_sets(&t, &leaves));
    }

    #[test]
    fn contraction_recurses_over_children((t, mask) in tree_and_mask()) {
        prop_assume!(!t.is_leaf());
        let leaves = LeafSet::from_mask(mask);
        let mut offset = 0;
        let mut parts = Vec::new();
        for child in t.children() {
            let local: LeafSet = leaves
                .iter()
                .filter(|i| (offset..offset + child.degree()).contains(i))
                .map(|i| i - offset)
                .collect();
            offset += child.degree();
            if !local.is_empty() {
                parts.push(child.contract(&local).unwrap());
            }
        }
        let expected = match parts.len() {
            0 => BasisElement::Unit,
            1 => parts.pop().unwrap(),
            _ => BasisElement::Tree(BasisElement::graft(&parts).unwrap()),
        };
        prop_assert_eq!(t.contract(&leaves).unwrap(), expected);
    }

    #[test]
    fn contraction_degree_is_subset_size((t, mask) in tree_and_mask()) {
        let leaves = LeafSet::from_mask(mask);
        prop_assert_eq!(t.contract(&leaves).unwrap().degree(), leaves.len());
    }

    #[test]
    fn text_round_trip(t in reduced_tree()) {
        let parsed: PlanarTree = t.to_string().parse().unwrap();
        prop_assert_eq!(parsed, t.clone());
        let general: GeneralTree = GeneralTree::from(&t).to_string().parse().unwrap();
        prop_assert_eq!(general.reduce(), t);
    }
}

#[test]
fn contraction_to_nothing_and_everything() {
    for trees in enumerate_trees_up_to(6) {
        for t in trees {
            assert_eq!(t.contract(&LeafSet::new()).unwrap(), BasisElement::Unit);
            assert_eq!(t.contract(&LeafSet::full(t.degree())).unwrap(), BasisElement::Tree(t.clone()));
        }
    }
}

#[test]
fn enumerated_trees_round_trip_and_are_distinct() {
    for n in 1..=6 {
        let trees = enumerate_trees(n);
        let distinct: BTreeSet<&PlanarTree> = trees.iter().collect();
        assert_eq!(distinct.len(), trees.len());
        for t in &trees {
            assert_eq!(t.degree(), n);
            assert_eq!(&t.to_string().parse::<PlanarTree>().unwrap(), t);
        }
        let mut sorted = trees.clone();
        sorted.sort();
        assert_eq!(sorted, trees);
    }
}

#[test]
fn unit_literal() {
    assert_eq!("1".parse::<BasisElement>().unwrap(), BasisElement::Unit);
    assert!("1".parse::<PlanarTree>().is_err());
    assert!("(x)".parse::<PlanarTree>().is_err());
}
