use num_traits::Zero;
use plantree::scalar::{QPolynomial, RationalFunction};
use plantree::series::{check_specialization, exp_coefficient, ExpTable};
use plantree::tree::{enumerate_trees_up_to, BasisElement, PlanarTree};

fn q_power_minus_q(n: usize) -> QPolynomial {
    let mut coeffs = vec![0i64; n + 1];
    coeffs[n] = 1;
    coeffs[1] -= 1;
    QPolynomial::from_integers(&coeffs)
}

fn vertex_denominators(t: &PlanarTree) -> QPolynomial {
    if t.is_leaf() {
        return QPolynomial::from_integers(&[1]);
    }
    t.children()
        .iter()
        .fold(q_power_minus_q(t.degree()), |acc, c| &acc * &vertex_denominators(c))
}

#[test]
fn denominators_are_safe() {
    let mut table = ExpTable::new();
    for trees in enumerate_trees_up_to(8).into_iter().skip(2) {
        for t in trees {
            let a = table.coefficient(&BasisElement::Tree(t.clone()));
            let (_, rem) = vertex_denominators(&t).div_rem(a.denominator());
            assert!(rem.is_zero(), "{t}: {a}");
            for k in 2..=10 {
                assert!(a.evaluate_at(k).is_ok(), "{t} at {k}");
            }
        }
    }
}

#[test]
fn corolla_and_grafted_corolla() {
    let x = PlanarTree::leaf();
    for m in 2..=6 {
        let corolla = PlanarTree::corolla(m).unwrap();
        let a_m = RationalFunction::q_binomial(m)
            .checked_div(&RationalFunction::from_polynomial(q_power_minus_q(m)))
            .unwrap();
        assert_eq!(exp_coefficient(&BasisElement::Tree(corolla.clone())), a_m);
        let outer = RationalFunction::q_binomial(2)
            .checked_div(&RationalFunction::from_polynomial(q_power_minus_q(m + 1)))
            .unwrap();
        let expected = &outer * &a_m;
        let right = PlanarTree::graft(vec![corolla.clone(), x.clone()]).unwrap();
        let left = PlanarTree::graft(vec![x.clone(), corolla]).unwrap();
        assert_eq!(exp_coefficient(&BasisElement::Tree(right)), expected);
        assert_eq!(exp_coefficient(&BasisElement::Tree(left)), expected);
    }
}

#[test]
fn grafted_corolla_identity() {
    // (q - m)(q^m - q) + m(q^m - q) + q(q - 1) = q^{m+1} - q
    let q = QPolynomial::q();
    for m in 3..=6usize {
        let m_const = QPolynomial::from_integers(&[m as i64]);
        let lhs = &(&(&(&q - &m_const) * &q_power_minus_q(m)) + &(&m_const * &q_power_minus_q(m)))
            + &(&q * &(&q - &QPolynomial::from_integers(&[1])));
        assert_eq!(lhs, q_power_minus_q(m + 1), "m = {m}");
    }
}

#[test]
fn specialization_commutes_with_coproduct() {
    for k in [2, 3, 5] {
        for cap in 0..=4 {
            let report = check_specialization(cap, k).unwrap();
            assert!(report.passed(), "{report:?}");
        }
    }
}

#[test]
fn specialization_rejects_small_points() {
    assert!(check_specialization(3, 1).is_err());
    assert!(check_specialization(3, -2).is_err());
}
