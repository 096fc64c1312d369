//! Truncated series in the completed tree algebra and the generic exponential
//! `EXP = Σ_T a(T) T` over `Q(q)`.
//!
//! The coefficients satisfy `a(1) = a(x) = 1` and, for `T = T_1 ... T_m` of
//! degree `n`, `a(T) = binom(q, m) / (q^n - q) · a(T_1) ... a(T_m)`.

use std::collections::HashMap;

use num_traits::{One, Zero};

use crate::algebra::{coproduct_tree, Shuffler, TensorPolynomial, TreePolynomial};
use crate::error::{Error, Result};
use crate::report::{Report, Violation};
use crate::scalar::{BigRational, Coefficient, RationalFunction, Specialize};
use crate::sweep::map_with;
use crate::tree::{enumerate_trees_up_to, BasisElement, PlanarTree};

pub const DEFAULT_CAP: usize = 6;

/// A series known up to and including degree `cap`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedSeries<C: Coefficient = RationalFunction> {
    cap: usize,
    body: TreePolynomial<C>,
}

impl<C: Coefficient> TruncatedSeries<C> {
    /// Drops the terms of `body` above `cap`.
    pub fn new(cap: usize, body: &TreePolynomial<C>) -> Self {
        TruncatedSeries {
            cap,
            body: body.truncate(cap),
        }
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    pub fn body(&self) -> &TreePolynomial<C> {
        &self.body
    }

    pub fn coeff(&self, t: &BasisElement) -> C {
        self.body.coeff(t)
    }
}

impl<C: Coefficient + Specialize> TruncatedSeries<C> {
    /// Coefficientwise evaluation at `q = k`, for `k >= 2`.
    pub fn specialize(&self, k: i64) -> Result<TruncatedSeries<BigRational>> {
        if k < 2 {
            return Err(Error::Domain(format!("specialization point must be at least 2, got {k}")));
        }
        Ok(TruncatedSeries {
            cap: self.cap,
            body: self.body.try_map_coeffs(|c| c.specialize(k))?,
        })
    }
}

/// `Δ̂(s)` with the pairs of total degree above the cap removed.
pub fn truncated_coproduct<C: Coefficient>(s: &TruncatedSeries<C>) -> TensorPolynomial<C> {
    let mut out = TensorPolynomial::zero();
    for (t, c) in s.body() {
        for ((v, w), count) in &coproduct_tree(t) {
            if v.degree() + w.degree() <= s.cap() {
                out.add_term(v.clone(), w.clone(), C::from(count.clone()) * c);
            }
        }
    }
    out
}

/// Memoized coefficients `a(T)` of the generic exponential.
#[derive(Clone, Debug, Default)]
pub struct ExpTable {
    memo: HashMap<PlanarTree, RationalFunction>,
    overrides: HashMap<BasisElement, RationalFunction>,
}

impl ExpTable {
    pub fn new() -> Self {
        Self::default()
    }

    /// A table with every tree of degree at most `cap` already computed,
    /// filled bottom-up by degree.
    pub fn build(cap: usize) -> Self {
        let mut table = Self::new();
        table.fill(cap);
        table
    }

    fn fill(&mut self, cap: usize) {
        for trees in enumerate_trees_up_to(cap) {
            for t in trees {
                self.tree_coefficient(&t);
            }
        }
    }

    /// Replaces `a(t)` by `value`; trees built on `t` inherit the change.
    /// Only meaningful before the affected coefficients are computed.
    pub fn with_override(mut self, t: BasisElement, value: RationalFunction) -> Self {
        self.memo.clear();
        self.overrides.insert(t, value);
        self
    }

    /// `a(t)`, computing and caching it if needed.
    pub fn coefficient(&mut self, t: &BasisElement) -> RationalFunction {
        if let Some(v) = self.overrides.get(t) {
            return v.clone();
        }
        match t {
            BasisElement::Unit => RationalFunction::one(),
            BasisElement::Tree(tree) => self.tree_coefficient(tree),
        }
    }

    /// `a(t)` if it is cached (or trivially known), without computing.
    pub fn get(&self, t: &BasisElement) -> Option<RationalFunction> {
        if let Some(v) = self.overrides.get(t) {
            return Some(v.clone());
        }
        match t {
            BasisElement::Unit | BasisElement::Tree(PlanarTree::Leaf) => Some(RationalFunction::one()),
            BasisElement::Tree(tree) => self.memo.get(tree).cloned(),
        }
    }

    fn tree_coefficient(&mut self, t: &PlanarTree) -> RationalFunction {
        if let Some(v) = self.overrides.get(&BasisElement::Tree(t.clone())) {
            return v.clone();
        }
        if t.is_leaf() {
            return RationalFunction::one();
        }
        if let Some(v) = self.memo.get(t) {
            return v.clone();
        }
        let n = t.degree();
        assert!(n >= 2, "the recursion only applies to trees of degree at least 2");
        let mut value = RationalFunction::q_binomial(t.arity())
            .checked_div(&(RationalFunction::q_pow(n) - RationalFunction::q()))
            .expect("q^n - q is nonzero for n >= 2");
        for child in t.children() {
            value = value * self.tree_coefficient(child);
        }
        self.memo.insert(t.clone(), value.clone());
        value
    }

    /// `Σ_{deg T <= cap} a(T) T`.
    pub fn series(&mut self, cap: usize) -> TruncatedSeries {
        let mut body = TreePolynomial::one();
        for trees in enumerate_trees_up_to(cap) {
            for t in trees {
                let a = self.tree_coefficient(&t);
                body.add_term(BasisElement::Tree(t), a);
            }
        }
        TruncatedSeries { cap, body }
    }
}

/// `a(t)` with a fresh table.
pub fn exp_coefficient(t: &BasisElement) -> RationalFunction {
    ExpTable::new().coefficient(t)
}

/// The generic exponential truncated at degree `cap`.
pub fn exp_series(cap: usize) -> TruncatedSeries {
    ExpTable::new().series(cap)
}

/// All pairs `(V, W)` of basis elements with `deg V + deg W <= cap`.
pub fn basis_pairs(cap: usize) -> Vec<(BasisElement, BasisElement)> {
    let mut basis: Vec<Vec<BasisElement>> = enumerate_trees_up_to(cap)
        .into_iter()
        .map(|trees| trees.into_iter().map(BasisElement::Tree).collect())
        .collect();
    basis[0] = vec![BasisElement::Unit];
    let mut pairs = Vec::new();
    for total in 0..=cap {
        for left in 0..=total {
            for v in &basis[left] {
                for w in &basis[total - left] {
                    pairs.push((v.clone(), w.clone()));
                }
            }
        }
    }
    pairs
}

/// `c_{V,W}(Δ̂(EXP)) = a(V) a(W)` for every pair with `deg V + deg W <= cap`.
pub fn check_exp_grouplike(cap: usize) -> Report {
    check_grouplike_with(ExpTable::build(cap), cap, 1)
}

/// The grouplike check for the series whose coefficients come from `table`.
pub fn check_grouplike_with(mut table: ExpTable, cap: usize, jobs: usize) -> Report {
    let series = table.series(cap);
    let terms: Vec<(BasisElement, RationalFunction)> =
        series.body().iter().map(|(t, c)| (t.clone(), c.clone())).collect();
    let parts = map_with(jobs, &terms, || (), |_, (t, a)| {
        let mut part = TensorPolynomial::zero();
        for ((v, w), count) in &coproduct_tree(t) {
            part.add_term(v.clone(), w.clone(), RationalFunction::from(count.clone()) * a);
        }
        part
    });
    let mut delta = TensorPolynomial::zero();
    for part in &parts {
        delta.add_scaled(part, &RationalFunction::one());
    }

    let lookup = |t: &BasisElement| series.coeff(t);
    let pairs = basis_pairs(cap);
    let outcomes = map_with(jobs, &pairs, || (), |_, (v, w)| {
        let lhs = delta.coeff(v, w);
        let rhs = lookup(v) * lookup(w);
        (lhs != rhs).then(|| Violation::new(format!("{v} ⊗ {w}"), lhs, rhs))
    });
    Report::from_outcomes("grouplike", cap, outcomes)
}

/// `Σ_T a(T) c_T(V ⧢ W)`.
pub fn shuffle_pairing(shuffler: &mut Shuffler, table: &ExpTable, v: &BasisElement, w: &BasisElement) -> RationalFunction {
    let mut sum = RationalFunction::zero();
    for (t, count) in shuffler.trees(v, w).iter() {
        let a = table.get(t).expect("table covers the shuffle degree");
        sum = sum + &(a * &RationalFunction::from(count.clone()));
    }
    sum
}

/// The quadratic relation `a(V) a(W) = Σ_T a(T) c_T(V ⧢ W)` at one pair.
pub fn quadratic_relation(v: &BasisElement, w: &BasisElement) -> std::result::Result<(), Violation> {
    let table = ExpTable::build(v.degree() + w.degree());
    quadratic_case(&mut Shuffler::new(), &table, v, w).map_or(Ok(()), Err)
}

fn quadratic_case(shuffler: &mut Shuffler, table: &ExpTable, v: &BasisElement, w: &BasisElement) -> Option<Violation> {
    let lhs = table.get(v).expect("covered") * table.get(w).expect("covered");
    let rhs = shuffle_pairing(shuffler, table, v, w);
    (lhs != rhs).then(|| Violation::new(format!("{v}, {w}"), lhs, rhs))
}

/// Quadratic relations for every pair with `deg V + deg W <= cap`.
pub fn check_quadratic_relations(cap: usize, jobs: usize) -> Report {
    let table = ExpTable::build(cap);
    let pairs = basis_pairs(cap);
    let outcomes = map_with(jobs, &pairs, Shuffler::new, |shuffler, (v, w)| quadratic_case(shuffler, &table, v, w));
    Report::from_outcomes("quadratic", cap, outcomes)
}

/// Specialization at `q = k` against the series identities over `Q`:
/// it commutes with the truncated coproduct, the specialized coproduct is
/// `exp_k ⊗ exp_k`, and the specialized quadratic relations hold.
pub fn check_specialization(cap: usize, k: i64) -> Result<Report> {
    let mut table = ExpTable::build(cap);
    let generic = table.series(cap);
    let special = generic.specialize(k)?;
    let mut report = Report::new(format!("specialization at q = {k}"), cap);

    let specialized_delta = truncated_coproduct(&generic).try_map_coeffs(|c| c.evaluate_at(k))?;
    let delta_of_special = truncated_coproduct(&special);
    let mut shuffler = Shuffler::new();
    for (v, w) in basis_pairs(cap) {
        let a = specialized_delta.coeff(&v, &w);
        let b = delta_of_special.coeff(&v, &w);
        report.record((a != b).then(|| Violation::new(format!("π(Δ̂ EXP) vs Δ̂(π EXP) at {v} ⊗ {w}"), &a, &b)));

        let product = special.coeff(&v) * &special.coeff(&w);
        report.record((b != product).then(|| Violation::new(format!("Δ̂(exp_k) vs exp_k ⊗ exp_k at {v} ⊗ {w}"), &b, &product)));

        let mut pairing = BigRational::from_integer(0.into());
        for (t, count) in shuffler.trees(&v, &w).iter() {
            pairing += special.coeff(t) * BigRational::from_integer(count.clone());
        }
        report.record((pairing != product).then(|| Violation::new(format!("quadratic relation at {v}, {w}"), &product, &pairing)));
    }
    Ok(report)
}
