//! Co-addition: the unital algebra homomorphism with `Δ(x) = x ⊗ 1 + 1 ⊗ x`,
//! computed on basis trees as the sum over leaf subsets `I` of `T|I ⊗ T|I^c`.

use super::{Shuffler, TensorPolynomial, TreePolynomial};
use crate::scalar::{BigInt, Coefficient};
use crate::tree::{contract_with, BasisElement};

/// `Δ(t)` with integer coefficients.
pub fn coproduct_tree(t: &BasisElement) -> TensorPolynomial<BigInt> {
    let mut out = TensorPolynomial::zero();
    let tree = match t {
        BasisElement::Unit => return TensorPolynomial::one(),
        BasisElement::Tree(tree) => tree,
    };
    let degree = tree.degree();
    assert!(degree < 64, "subset enumeration limited to 63 leaves");
    let one = BigInt::from(1);
    for mask in 0u64..(1u64 << degree) {
        let left = contract_with(tree, |i| mask >> i & 1 == 1);
        let right = contract_with(tree, |i| mask >> i & 1 == 0);
        out.add_term(left, right, one.clone());
    }
    out
}

/// The linear extension of [`coproduct_tree`].
pub fn coproduct_poly<C: Coefficient>(f: &TreePolynomial<C>) -> TensorPolynomial<C> {
    let mut out = TensorPolynomial::zero();
    for (t, c) in f {
        for ((v, w), count) in &coproduct_tree(t) {
            out.add_term(v.clone(), w.clone(), C::from(count.clone()) * c);
        }
    }
    out
}

/// Both sides of `c_{V,W}(Δ(f)) = Σ_T c_T(f) · c_T(V ⧢ W)`.
pub fn duality_sides<C: Coefficient>(
    shuffler: &mut Shuffler,
    f: &TreePolynomial<C>,
    delta_f: &TensorPolynomial<C>,
    v: &BasisElement,
    w: &BasisElement,
) -> (C, C) {
    let lhs = delta_f.coeff(v, w);
    let mut rhs = C::zero();
    for (t, count) in shuffler.trees(v, w).iter() {
        rhs = rhs + &(f.coeff(t) * &C::from(count.clone()));
    }
    (lhs, rhs)
}

/// Whether the duality between co-addition and shuffle holds at `(f, v, w)`.
pub fn duality_check<C: Coefficient>(f: &TreePolynomial<C>, v: &BasisElement, w: &BasisElement) -> bool {
    let (lhs, rhs) = duality_sides(&mut Shuffler::new(), f, &coproduct_poly(f), v, w);
    lhs == rhs
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::RationalFunction;

    fn t(s: &str) -> BasisElement {
        s.parse().unwrap()
    }

    #[test]
    fn coproduct_of_small_trees() {
        let x = BasisElement::x();
        let u = BasisElement::Unit;
        let mut expected = TensorPolynomial::pure(x.clone(), u.clone());
        expected.add_term(u.clone(), x.clone(), BigInt::from(1));
        assert_eq!(coproduct_tree(&x), expected);

        let x2 = t("x^2");
        let mut expected = TensorPolynomial::pure(x2.clone(), u.clone());
        expected.add_term(x.clone(), x.clone(), BigInt::from(2));
        expected.add_term(u.clone(), x2.clone(), BigInt::from(1));
        assert_eq!(coproduct_tree(&x2), expected);

        assert_eq!(coproduct_tree(&u), TensorPolynomial::one());
    }

    #[test]
    fn graft_of_coproducts() {
        let dx = coproduct_tree(&BasisElement::x());
        assert_eq!(TensorPolynomial::graft(&[&dx, &dx]).unwrap(), coproduct_tree(&t("x^2")));
    }

    #[test]
    fn linear_extension() {
        let c = RationalFunction::q();
        let f = TreePolynomial::term(BasisElement::x(), c.clone());
        let mut expected = TensorPolynomial::term(BasisElement::x(), BasisElement::Unit, c.clone());
        expected.add_term(BasisElement::Unit, BasisElement::x(), c);
        assert_eq!(coproduct_poly(&f), expected);
        assert!(coproduct_poly(&TreePolynomial::<RationalFunction>::zero()).is_zero());

        let g = &TreePolynomial::<RationalFunction>::monomial(t("x^2")) + &TreePolynomial::monomial(t("x"));
        let sum = &coproduct_tree(&t("x^2")) + &coproduct_tree(&t("x"));
        assert_eq!(coproduct_poly(&g), sum.map_coeffs(|c| RationalFunction::from(c.clone())));
    }

    #[test]
    fn duality_examples() {
        let x = BasisElement::x();
        let f = TreePolynomial::<RationalFunction>::monomial(t("x^2"));
        let (lhs, rhs) = duality_sides(&mut Shuffler::new(), &f, &coproduct_poly(&f), &x, &x);
        assert_eq!(lhs, RationalFunction::from_integer(2));
        assert_eq!(rhs, lhs);

        let g: TreePolynomial = [
            (BasisElement::Unit, RationalFunction::from_ratio(3, 7)),
            (t("(x x^2)"), RationalFunction::q()),
        ]
        .into_iter()
        .collect();
        assert!(duality_check(&g, &BasisElement::Unit, &BasisElement::Unit));
        assert_eq!(coproduct_poly(&g).coeff(&BasisElement::Unit, &BasisElement::Unit), RationalFunction::from_ratio(3, 7));
        assert!(duality_check(&g, &x, &t("x^2")));
        assert!(duality_check(&g, &t("x^2"), &x));
    }
}
