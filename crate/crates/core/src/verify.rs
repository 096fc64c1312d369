//! Verification suites: exhaustive sweeps of the algebraic identities up to a
//! degree cap, each producing [`Report`]s.

use std::fmt;
use std::str::FromStr;

use num_traits::Zero;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use crate::algebra::{coproduct_poly, gamma_set, Counts, ShuffleOracle, Shuffler, TreePolynomial};
use crate::error::{Error, Result};
use crate::report::{Report, Violation};
use crate::scalar::{BigInt, QPolynomial, RationalFunction};
use crate::series::{basis_pairs, check_grouplike_with, check_quadratic_relations, ExpTable};
use crate::sweep::map_with;
use crate::tree::{enumerate_trees_up_to, BasisElement};

pub const DEFAULT_DEGREE: usize = 6;
pub const DUALITY_SAMPLES: usize = 200;
pub const DUALITY_SEED: u64 = 0x5eed;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    ShuffleAxioms,
    Duality,
    Grouplike,
    Quadratic,
    GammaCounts,
}

impl Suite {
    pub const ALL: [Suite; 5] = [
        Suite::ShuffleAxioms,
        Suite::Duality,
        Suite::Grouplike,
        Suite::Quadratic,
        Suite::GammaCounts,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::ShuffleAxioms => "shuffle-axioms",
            Suite::Duality => "duality",
            Suite::Grouplike => "grouplike",
            Suite::Quadratic => "quadratic",
            Suite::GammaCounts => "gamma-counts",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| Error::Domain(format!("unknown suite {s:?}")))
    }
}

/// Runs `suite` up to total degree `degree`.
pub fn run(suite: Suite, degree: usize, jobs: usize) -> Result<Vec<Report>> {
    Ok(match suite {
        Suite::ShuffleAxioms => vec![
            check_oracle_equivalence(degree, jobs)?,
            check_commutativity(degree, jobs),
            check_associativity(degree, jobs),
        ],
        Suite::Duality => vec![check_duality(degree, DUALITY_SAMPLES, DUALITY_SEED, jobs)],
        Suite::Grouplike => vec![check_grouplike_with(ExpTable::build(degree), degree, jobs)],
        Suite::Quadratic => vec![check_quadratic_relations(degree, jobs)],
        Suite::GammaCounts => vec![check_gamma_counts(degree.max(2), 5)],
    })
}

/// Recursive shuffle against the enumerative oracle for every pair of total
/// degree at most `cap`.
pub fn check_oracle_equivalence(cap: usize, jobs: usize) -> Result<Report> {
    let oracle = ShuffleOracle::new(cap);
    let degrees: Vec<usize> = (0..=cap).collect();
    let tables = map_with(jobs, &degrees, || (), |_, &d| oracle.table(d));
    let tables = tables.into_iter().collect::<Result<Vec<_>>>()?;
    let pairs = basis_pairs(cap);
    let empty = Counts::zero();
    let outcomes = map_with(jobs, &pairs, Shuffler::new, |shuffler, (s, t)| {
        let expected = tables[s.degree() + t.degree()].get(&(s.clone(), t.clone())).unwrap_or(&empty);
        let got = shuffler.trees(s, t);
        (got.as_ref() != expected).then(|| Violation::new(format!("{s} ⧢ {t}"), got.as_ref(), expected))
    });
    Ok(Report::from_outcomes("oracle equivalence", cap, outcomes))
}

/// `S ⧢ T = T ⧢ S` for every pair of total degree at most `cap`.
pub fn check_commutativity(cap: usize, jobs: usize) -> Report {
    let pairs = basis_pairs(cap);
    let outcomes = map_with(jobs, &pairs, Shuffler::new, |shuffler, (s, t)| {
        let lhs = shuffler.trees(s, t);
        let rhs = shuffler.trees(t, s);
        (lhs != rhs).then(|| Violation::new(format!("{s}, {t}"), lhs.as_ref(), rhs.as_ref()))
    });
    Report::from_outcomes("commutativity", cap, outcomes)
}

/// All triples `(R, S, T)` of basis elements with total degree at most `cap`.
pub fn basis_triples(cap: usize) -> Vec<(BasisElement, BasisElement, BasisElement)> {
    let mut out = Vec::new();
    for (r, s) in basis_pairs(cap) {
        let rest = cap - r.degree() - s.degree();
        for (t, unit) in basis_pairs(rest) {
            if unit.is_unit() {
                out.push((r.clone(), s.clone(), t));
            }
        }
    }
    out
}

/// `(R ⧢ S) ⧢ T = R ⧢ (S ⧢ T)` for every triple of total degree at most `cap`.
pub fn check_associativity(cap: usize, jobs: usize) -> Report {
    let triples = basis_triples(cap);
    let outcomes = map_with(jobs, &triples, Shuffler::new, |shuffler, (r, s, t)| {
        let rs = shuffler.trees(r, s).as_ref().clone();
        let st = shuffler.trees(s, t).as_ref().clone();
        let lhs = shuffler.poly(&rs, &Counts::monomial(t.clone()));
        let rhs = shuffler.poly(&Counts::monomial(r.clone()), &st);
        (lhs != rhs).then(|| Violation::new(format!("{r}, {s}, {t}"), lhs, rhs))
    });
    Report::from_outcomes("associativity", cap, outcomes)
}

/// A random element of `Q(q)` with small integer coefficients.
pub fn random_rational_function(rng: &mut impl Rng) -> RationalFunction {
    let poly = |rng: &mut dyn rand::RngCore, nonzero: bool| loop {
        let degree = rng.gen_range(0..=2);
        let coeffs: Vec<i64> = (0..=degree).map(|_| rng.gen_range(-4..=4)).collect();
        let p = QPolynomial::from_integers(&coeffs);
        if !(nonzero && p.is_zero()) {
            break p;
        }
    };
    loop {
        let num = poly(rng, true);
        let den = poly(rng, true);
        if let Ok(f) = RationalFunction::new(num, den) {
            break f;
        }
    }
}

/// A random polynomial with at most `max_terms` terms of degree at most `cap`.
pub fn random_polynomial(rng: &mut impl Rng, cap: usize, max_terms: usize) -> TreePolynomial {
    let mut basis = vec![BasisElement::Unit];
    basis.extend(enumerate_trees_up_to(cap).into_iter().flatten().map(BasisElement::Tree));
    let mut f = TreePolynomial::zero();
    for _ in 0..rng.gen_range(1..=max_terms) {
        let t = basis[rng.gen_range(0..basis.len())].clone();
        f.add_term(t, random_rational_function(rng));
    }
    f
}

/// `c_{V,W}(Δ f) = Σ_T c_T(f) c_T(V ⧢ W)` for `samples` seeded random `f` and
/// every pair with `deg V + deg W <= cap`.
pub fn check_duality(cap: usize, samples: usize, seed: u64, jobs: usize) -> Report {
    let mut rng = StdRng::seed_from_u64(seed);
    let polys: Vec<TreePolynomial> = (0..samples).map(|_| random_polynomial(&mut rng, cap, 6)).collect();
    let pairs = basis_pairs(cap);
    let mut shuffler = Shuffler::new();
    let shuffles: Vec<Counts> = pairs.iter().map(|(v, w)| shuffler.trees(v, w).as_ref().clone()).collect();
    let outcomes = map_with(jobs, &polys, || (), |_, f| {
        let delta = coproduct_poly(f);
        let mut failures = Vec::new();
        for ((v, w), product) in pairs.iter().zip(&shuffles) {
            let lhs = delta.coeff(v, w);
            let mut rhs = RationalFunction::zero();
            for (t, c) in f {
                let count = product.coeff(t);
                if count != BigInt::from(0) {
                    rhs = rhs + &(c.clone() * &RationalFunction::from(count));
                }
            }
            if lhs != rhs {
                failures.push(Violation::new(format!("f = {f}, V = {v}, W = {w}"), lhs, rhs));
            }
        }
        failures
    });
    let mut report = Report::new("duality", cap);
    for failures in outcomes {
        report.checked += pairs.len();
        report.violations.extend(failures);
    }
    report
}

/// `k! / ((k-n)! (k-m)! (m+n-k)!)`, or zero outside `m, n <= k <= m + n`.
pub fn gamma_count(k: usize, m: usize, n: usize) -> BigInt {
    if m == 0 || n == 0 || m > k || n > k || k > m + n {
        return BigInt::from(0);
    }
    let fact = |n: usize| (1..=n).fold(BigInt::from(1), |acc, i| acc * i);
    fact(k) / (fact(k - n) * fact(k - m) * fact(m + n - k))
}

/// Counts covering pairs `(alpha, beta)` of `{1..k}` of the given sizes by
/// scanning all pairs of bitmasks.
pub fn gamma_count_brute_force(k: usize, m: usize, n: usize) -> usize {
    let full = (1u32 << k) - 1;
    let mut count = 0;
    for alpha in 0..=full {
        if alpha.count_ones() as usize != m {
            continue;
        }
        for beta in 0..=full {
            if beta.count_ones() as usize == n && alpha | beta == full {
                count += 1;
            }
        }
    }
    count
}

/// `|Γ_k(m, n)|` against the closed form and a brute-force count for
/// `2 <= k <= max_k` and `1 <= m, n <= max_side`.
pub fn check_gamma_counts(max_k: usize, max_side: usize) -> Report {
    let mut report = Report::new("gamma counts", max_k);
    for k in 2..=max_k {
        for m in 1..=max_side {
            for n in 1..=max_side {
                let listed = gamma_set(k, m, n).len();
                let formula = gamma_count(k, m, n);
                let brute = gamma_count_brute_force(k, m, n);
                let ok = BigInt::from(listed) == formula && listed == brute;
                report.record((!ok).then(|| {
                    Violation::new(format!("k = {k}, m = {m}, n = {n}"), listed, format!("{formula} (brute force {brute})"))
                }));
            }
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names_round_trip() {
        for suite in Suite::ALL {
            assert_eq!(suite.name().parse::<Suite>().unwrap(), suite);
        }
        assert!("nope".parse::<Suite>().is_err());
    }

    #[test]
    fn gamma_formula_small() {
        assert_eq!(gamma_count(2, 1, 1), BigInt::from(2));
        assert_eq!(gamma_count(4, 1, 4), BigInt::from(4));
        assert_eq!(gamma_count(3, 1, 1), BigInt::from(0));
        assert_eq!(gamma_count_brute_force(3, 2, 2), 6);
    }

    #[test]
    fn small_sweeps_pass() {
        assert!(check_oracle_equivalence(4, 1).unwrap().passed());
        assert!(check_commutativity(4, 2).passed());
        assert!(check_associativity(4, 1).passed());
        assert!(check_duality(3, 10, 1, 1).passed());
        assert!(check_gamma_counts(5, 4).passed());
    }

    #[test]
    fn triples_cover_total_degree() {
        // (1,1,1), (x,1,1), (1,x,1), (1,1,x)
        assert_eq!(basis_triples(1).len(), 4);
    }

    #[test]
    fn parallel_matches_serial() {
        assert_eq!(check_commutativity(5, 1), check_commutativity(5, 3));
    }

    #[test]
    fn random_polynomials_are_seeded() {
        let a = random_polynomial(&mut StdRng::seed_from_u64(7), 4, 5);
        let b = random_polynomial(&mut StdRng::seed_from_u64(7), 4, 5);
        assert_eq!(a, b);
        assert!(!a.is_zero() || a.is_empty());
    }
}
