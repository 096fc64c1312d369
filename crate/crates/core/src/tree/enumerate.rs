use super::PlanarTree;

/// All planar reduced trees with exactly `n` leaves, sorted by the basis order.
/// Empty for `n = 0`.
pub fn enumerate_trees(n: usize) -> Vec<PlanarTree> {
    enumerate_trees_up_to(n).pop().unwrap_or_default()
}

/// `result[d]` lists the trees with `d` leaves for every `d <= n`.
pub fn enumerate_trees_up_to(n: usize) -> Vec<Vec<PlanarTree>> {
    let mut by_degree: Vec<Vec<PlanarTree>> = vec![Vec::new(); n + 1];
    if n >= 1 {
        by_degree[1].push(PlanarTree::Leaf);
    }
    for d in 2..=n {
        let mut trees = Vec::new();
        let mut prefix = Vec::new();
        extend_compositions(&by_degree, d, &mut prefix, &mut trees);
        trees.sort();
        by_degree[d] = trees;
    }
    by_degree
}

/// Appends every grafting whose children (after `prefix`) have total degree `remaining`.
fn extend_compositions(
    by_degree: &[Vec<PlanarTree>],
    remaining: usize,
    prefix: &mut Vec<PlanarTree>,
    out: &mut Vec<PlanarTree>,
) {
    if remaining == 0 {
        if prefix.len() >= 2 {
            out.push(PlanarTree::graft_unchecked(prefix.clone()));
        }
        return;
    }
    // a single child carrying every leaf would be an arity-one root
    let max_part = if prefix.is_empty() { remaining - 1 } else { remaining };
    for part in 1..=max_part {
        for child in &by_degree[part] {
            prefix.push(child.clone());
            extend_compositions(by_degree, remaining - part, prefix, out);
            prefix.pop();
        }
    }
}
