//! Elements of the field `Q(q)` in canonical form.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::parse::parse_rational_function;
use super::polynomial::{write_integer_poly, QPolynomial};
use crate::error::{Error, Result};

/// A reduced fraction `num / den` of polynomials in `q`.
///
/// Canonical form: `den` is monic and `gcd(num, den) = 1`, and zero is `0/1`.
/// Every constructor normalizes, so derived equality is field equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalFunction {
    num: QPolynomial,
    den: QPolynomial,
}

impl RationalFunction {
    /// Builds `num / den` in canonical form.
    pub fn new(num: QPolynomial, den: QPolynomial) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::ZeroDivisor);
        }
        Ok(Self::normalize(num, den))
    }

    fn normalize(num: QPolynomial, den: QPolynomial) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let (num, den) = if den.is_constant() {
            (num, den)
        } else {
            let g = num.gcd(&den);
            if g.is_one() {
                (num, den)
            } else {
                (num.div_rem(&g).0, den.div_rem(&g).0)
            }
        };
        let lc = den.leading_coefficient().expect("nonzero denominator").clone();
        if lc.is_one() {
            RationalFunction { num, den }
        } else {
            let inv = lc.recip();
            RationalFunction {
                num: num.scale(&inv),
                den: den.scale(&inv),
            }
        }
    }

    pub fn from_polynomial(p: QPolynomial) -> Self {
        RationalFunction {
            num: p,
            den: QPolynomial::one(),
        }
    }

    pub fn from_rational(c: BigRational) -> Self {
        Self::from_polynomial(QPolynomial::constant(c))
    }

    pub fn from_integer(n: impl Into<BigInt>) -> Self {
        Self::from_rational(BigRational::from_integer(n.into()))
    }

    pub fn from_ratio(n: i64, d: i64) -> Self {
        Self::from_rational(BigRational::new(n.into(), d.into()))
    }

    /// The indeterminate `q`.
    pub fn q() -> Self {
        Self::from_polynomial(QPolynomial::q())
    }

    /// `q^n`.
    pub fn q_pow(n: usize) -> Self {
        Self::from_polynomial(QPolynomial::monomial(BigRational::one(), n))
    }

    pub fn numerator(&self) -> &QPolynomial {
        &self.num
    }

    pub fn denominator(&self) -> &QPolynomial {
        &self.den
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    pub fn as_constant(&self) -> Option<BigRational> {
        if self.is_polynomial() {
            self.num.as_constant()
        } else {
            None
        }
    }

    pub fn recip(&self) -> Result<Self> {
        Self::new(self.den.clone(), self.num.clone())
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self> {
        if rhs.is_zero() {
            return Err(Error::ZeroDivisor);
        }
        Ok(Self::normalize(&self.num * &rhs.den, &self.den * &rhs.num))
    }

    pub fn pow(&self, exp: u32) -> Self {
        // powers of coprime polynomials stay coprime
        RationalFunction {
            num: self.num.pow(exp),
            den: self.den.pow(exp),
        }
    }

    /// The falling-factorial binomial `q(q-1)...(q-m+1)/m!`.
    pub fn q_binomial(m: usize) -> Self {
        let mut num = QPolynomial::one();
        let mut factorial = BigInt::one();
        for i in 0..m {
            num = &num * &QPolynomial::from_integers(&[-(i as i64), 1]);
            factorial *= BigInt::from(i + 1);
        }
        Self::from_polynomial(num.scale(&BigRational::new(BigInt::one(), factorial)))
    }

    /// Exact value at `q = k`.
    pub fn evaluate_at(&self, k: i64) -> Result<BigRational> {
        let point = BigRational::from_integer(k.into());
        let den = self.den.eval(&point);
        if den.is_zero() {
            return Err(Error::Pole(k));
        }
        Ok(self.num.eval(&point) / den)
    }

    /// Whether the numerator's leading coefficient is negative.
    pub fn is_negative(&self) -> bool {
        self.num.leading_coefficient().is_some_and(Signed::is_negative)
    }

    /// Integer numerator and denominator polynomials with coprime contents
    /// and a positive leading denominator coefficient.
    fn integer_parts(&self) -> (Vec<BigInt>, Vec<BigInt>) {
        let scale = self.num.denominator_lcm().lcm(&self.den.denominator_lcm());
        let num = self.num.integer_coefficients(&scale);
        let den = self.den.integer_coefficients(&scale);
        let content = num
            .iter()
            .chain(den.iter())
            .fold(BigInt::zero(), |acc, c| acc.gcd(c));
        let divide = |v: Vec<BigInt>| v.into_iter().map(|c| c / &content).collect();
        (divide(num), divide(den))
    }
}

fn term_count(coeffs: &[BigInt]) -> usize {
    coeffs.iter().filter(|c| !c.is_zero()).count()
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (num, den) = self.integer_parts();
        let den_is_one = den.len() == 1 && den[0].is_one();
        if den_is_one {
            return write_integer_poly(f, &num);
        }
        if term_count(&num) > 1 {
            f.write_str("(")?;
            write_integer_poly(f, &num)?;
            f.write_str(")")?;
        } else {
            write_integer_poly(f, &num)?;
        }
        f.write_str("/")?;
        if den.len() == 1 {
            write_integer_poly(f, &den)
        } else {
            f.write_str("(")?;
            write_integer_poly(f, &den)?;
            f.write_str(")")
        }
    }
}

impl fmt::Debug for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for RationalFunction {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_rational_function(s)
    }
}

impl Zero for RationalFunction {
    fn zero() -> Self {
        RationalFunction {
            num: QPolynomial::zero(),
            den: QPolynomial::one(),
        }
    }

    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl One for RationalFunction {
    fn one() -> Self {
        Self::from_polynomial(QPolynomial::one())
    }
}

impl From<BigInt> for RationalFunction {
    fn from(n: BigInt) -> Self {
        Self::from_integer(n)
    }
}

impl From<BigRational> for RationalFunction {
    fn from(c: BigRational) -> Self {
        Self::from_rational(c)
    }
}

impl From<QPolynomial> for RationalFunction {
    fn from(p: QPolynomial) -> Self {
        Self::from_polynomial(p)
    }
}

impl<'a> Add<&'a RationalFunction> for &'a RationalFunction {
    type Output = RationalFunction;

    fn add(self, rhs: &RationalFunction) -> RationalFunction {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            if self.den.is_one() {
                return RationalFunction::from_polynomial(&self.num + &rhs.num);
            }
            return RationalFunction::normalize(&self.num + &rhs.num, self.den.clone());
        }
        let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
        RationalFunction::normalize(num, &self.den * &rhs.den)
    }
}

impl<'a> Sub<&'a RationalFunction> for &'a RationalFunction {
    type Output = RationalFunction;

    fn sub(self, rhs: &RationalFunction) -> RationalFunction {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a RationalFunction> for &'a RationalFunction {
    type Output = RationalFunction;

    fn mul(self, rhs: &RationalFunction) -> RationalFunction {
        if self.is_zero() || rhs.is_zero() {
            return RationalFunction::zero();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return RationalFunction::from_polynomial(&self.num * &rhs.num);
        }
        if rhs.is_one() {
            return self.clone();
        }
        if self.is_one() {
            return rhs.clone();
        }
        RationalFunction::normalize(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

/// Panics on division by zero; use [`RationalFunction::checked_div`] to get an error.
impl<'a> Div<&'a RationalFunction> for &'a RationalFunction {
    type Output = RationalFunction;

    fn div(self, rhs: &RationalFunction) -> RationalFunction {
        self.checked_div(rhs).expect("zero divisor")
    }
}

impl Neg for &RationalFunction {
    type Output = RationalFunction;

    fn neg(self) -> RationalFunction {
        RationalFunction {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Neg for RationalFunction {
    type Output = RationalFunction;

    fn neg(self) -> RationalFunction {
        -&self
    }
}

macro_rules! forward_binops {
    ($($tr:ident :: $m:ident),*) => {$(
        impl $tr for RationalFunction {
            type Output = RationalFunction;
            fn $m(self, rhs: RationalFunction) -> RationalFunction {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a RationalFunction> for RationalFunction {
            type Output = RationalFunction;
            fn $m(self, rhs: &RationalFunction) -> RationalFunction {
                (&self).$m(rhs)
            }
        }
    )*};
}
forward_binops!(Add::add, Sub::sub, Mul::mul, Div::div);
