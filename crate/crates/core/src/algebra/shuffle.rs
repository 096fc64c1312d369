//! The planar shuffle product, computed by recursion on the root decomposition.
//!
//! For trees `S = S_1 ... S_m` and `T = T_1 ... T_n` the product is the sum of
//! `R(alpha, beta)` over `k = 2..=m+n` and the pairs in
//! `Γ_k(1,1) ∪ Γ_k(1,n) ∪ Γ_k(m,1) ∪ Γ_k(m,n)`. Position `j` of the grafting
//! `R(alpha, beta)` holds the `alpha`-part if only `j ∈ alpha`, the `beta`-part if
//! only `j ∈ beta`, and the shuffle of both parts if `j` lies in both. A side
//! with a singleton index set contributes the whole tree as its only part,
//! otherwise its root children.
//!
//! The leaf `x` has no root decomposition; `x ⧢ T` uses the closed form
//! `x·T + T·x + Σ_i (x inserted at position i) + Σ_i T_1 ... (x ⧢ T_i) ... T_n`
//! with `n + 1` insertion positions.

use std::collections::HashMap;
use std::sync::Arc;

use super::gamma::{gamma_set, GammaPair};
use super::polynomial::graft_unchecked;
use super::{Counts, TreePolynomial};
use crate::scalar::{BigInt, Coefficient};
use crate::tree::{BasisElement, PlanarTree};

/// Shuffle products with a memo of the tree pairs already expanded.
#[derive(Default)]
pub struct Shuffler {
    memo: HashMap<(PlanarTree, PlanarTree), Arc<Counts>>,
}

impl Shuffler {
    pub fn new() -> Self {
        Self::default()
    }

    /// `s ⧢ t` for basis elements; integer coefficients.
    pub fn trees(&mut self, s: &BasisElement, t: &BasisElement) -> Arc<Counts> {
        match (s, t) {
            (BasisElement::Unit, other) | (other, BasisElement::Unit) => {
                Arc::new(TreePolynomial::monomial(other.clone()))
            }
            (BasisElement::Tree(s), BasisElement::Tree(t)) => self.pair(s, t),
        }
    }

    /// The bilinear extension to polynomials.
    pub fn poly<C: Coefficient>(&mut self, f: &TreePolynomial<C>, g: &TreePolynomial<C>) -> TreePolynomial<C> {
        let mut out = TreePolynomial::zero();
        for (s, a) in f {
            for (t, b) in g {
                let ab = a.clone() * b;
                for (v, count) in self.trees(s, t).iter() {
                    out.add_term(v.clone(), C::from(count.clone()) * &ab);
                }
            }
        }
        out
    }

    pub fn memo_len(&self) -> usize {
        self.memo.len()
    }

    fn pair(&mut self, s: &PlanarTree, t: &PlanarTree) -> Arc<Counts> {
        let key = (s.clone(), t.clone());
        if let Some(hit) = self.memo.get(&key) {
            return Arc::clone(hit);
        }
        let result = Arc::new(match (s.is_leaf(), t.is_leaf()) {
            (true, true) => TreePolynomial::term(PlanarTree::corolla(2).expect("x^2"), BigInt::from(2)),
            (true, false) => self.leaf_expansion(t, Side::Left),
            (false, true) => self.leaf_expansion(s, Side::Right),
            (false, false) => self.node_expansion(s, t),
        });
        debug_assert!(result.is_homogeneous_of(s.degree() + t.degree()));
        self.memo.insert(key, Arc::clone(&result));
        result
    }

    /// `x ⧢ tree` (side `Left`) or `tree ⧢ x` (side `Right`).
    fn leaf_expansion(&mut self, tree: &PlanarTree, side: Side) -> Counts {
        let x = PlanarTree::Leaf;
        let children = tree.children();
        let n = children.len();
        let mut out = Counts::zero();
        let one = BigInt::from(1);

        // x·T and T·x
        out.add_term(graft(vec![x.clone(), tree.clone()]), one.clone());
        out.add_term(graft(vec![tree.clone(), x.clone()]), one.clone());

        // x as a new child at each of the n + 1 positions
        for pos in 0..=n {
            let mut grown = children.to_vec();
            grown.insert(pos, x.clone());
            out.add_term(graft(grown), one.clone());
        }

        // x shuffled into one child
        for pos in 0..n {
            let inner = match side {
                Side::Left => self.pair(&x, &children[pos]),
                Side::Right => self.pair(&children[pos], &x),
            };
            let factors: Vec<Arc<Counts>> = children
                .iter()
                .enumerate()
                .map(|(i, c)| if i == pos { Arc::clone(&inner) } else { Arc::new(Counts::monomial(c.clone())) })
                .collect();
            let refs: Vec<&Counts> = factors.iter().map(Arc::as_ref).collect();
            out.add_scaled(&graft_unchecked(&refs), &one);
        }
        out
    }

    fn node_expansion(&mut self, s: &PlanarTree, t: &PlanarTree) -> Counts {
        let m = s.arity();
        let n = t.arity();
        let whole_s = std::slice::from_ref(s);
        let whole_t = std::slice::from_ref(t);
        let mut out = Counts::zero();
        for k in 2..=m + n {
            // Cases 1, 2, 2' and 3; the size constraints keep these disjoint.
            for pair in gamma_set(k, 1, 1) {
                self.add_assembled(&mut out, &pair, whole_s, whole_t);
            }
            for pair in gamma_set(k, 1, n) {
                self.add_assembled(&mut out, &pair, whole_s, t.children());
            }
            for pair in gamma_set(k, m, 1) {
                self.add_assembled(&mut out, &pair, s.children(), whole_t);
            }
            for pair in gamma_set(k, m, n) {
                self.add_assembled(&mut out, &pair, s.children(), t.children());
            }
        }
        out
    }

    /// Adds `R(alpha, beta)` built from the given parts of the two factors.
    fn add_assembled(&mut self, out: &mut Counts, pair: &GammaPair, s_parts: &[PlanarTree], t_parts: &[PlanarTree]) {
        let k = pair.width();
        let total = sum_degree(s_parts) + sum_degree(t_parts);
        let mut factors: Vec<Arc<Counts>> = Vec::with_capacity(k);
        for j in 1..=k {
            let factor = match (pair.alpha_index(j), pair.beta_index(j)) {
                (Some(i), None) => Arc::new(Counts::monomial(s_parts[i].clone())),
                (None, Some(l)) => Arc::new(Counts::monomial(t_parts[l].clone())),
                (Some(i), Some(l)) => {
                    let (a, b) = (&s_parts[i], &t_parts[l]);
                    assert!(a.degree() + b.degree() < total, "shuffle recursion must decrease the total degree");
                    self.pair(a, b)
                }
                (None, None) => unreachable!("gamma pairs cover 1..=k"),
            };
            factors.push(factor);
        }
        let refs: Vec<&Counts> = factors.iter().map(Arc::as_ref).collect();
        out.add_scaled(&graft_unchecked(&refs), &BigInt::from(1));
    }
}

#[derive(Clone, Copy)]
enum Side {
    Left,
    Right,
}

fn graft(children: Vec<PlanarTree>) -> BasisElement {
    BasisElement::Tree(PlanarTree::graft_unchecked(children))
}

fn sum_degree(parts: &[PlanarTree]) -> usize {
    parts.iter().map(PlanarTree::degree).sum()
}

/// `s ⧢ t` with a fresh memo.
pub fn shuffle_trees(s: &BasisElement, t: &BasisElement) -> Counts {
    Shuffler::new().trees(s, t).as_ref().clone()
}

/// Bilinear shuffle of two polynomials with a fresh memo.
pub fn shuffle_poly<C: Coefficient>(f: &TreePolynomial<C>, g: &TreePolynomial<C>) -> TreePolynomial<C> {
    Shuffler::new().poly(f, g)
}
