//! Exact scalars: `Q` (via [`BigRational`]) and the rational-function field `Q(q)`.

mod parse;
mod polynomial;
mod rational_function;

use std::fmt::{Debug, Display};
use std::ops::{Add, Mul, Neg};

pub use num_bigint::BigInt;
pub use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub(crate) use parse::{power as parse_rf_power, Cursor};
pub use polynomial::QPolynomial;
pub use rational_function::RationalFunction;

/// A commutative ring of exact coefficients for tree polynomials.
pub trait Coefficient:
    Clone
    + Debug
    + Display
    + PartialEq
    + Zero
    + One
    + Neg<Output = Self>
    + for<'a> Add<&'a Self, Output = Self>
    + for<'a> Mul<&'a Self, Output = Self>
    + From<BigInt>
    + Send
    + Sync
{
    /// Sign used when rendering `a - c*T` instead of `a + (-c)*T`.
    fn is_negative(&self) -> bool;

    /// Whether the rendered value can be used as a factor without parentheses.
    fn is_atomic(&self) -> bool;
}

impl Coefficient for BigInt {
    fn is_negative(&self) -> bool {
        Signed::is_negative(self)
    }

    fn is_atomic(&self) -> bool {
        !Signed::is_negative(self)
    }
}

impl Coefficient for BigRational {
    fn is_negative(&self) -> bool {
        Signed::is_negative(self)
    }

    fn is_atomic(&self) -> bool {
        self.is_integer() && !Signed::is_negative(self)
    }
}

impl Coefficient for RationalFunction {
    fn is_negative(&self) -> bool {
        RationalFunction::is_negative(self)
    }

    fn is_atomic(&self) -> bool {
        if let Some(c) = self.as_constant() {
            return c.is_integer() && !Signed::is_negative(&c);
        }
        self.numerator() == &QPolynomial::q() && self.denominator().is_one()
    }
}

/// Evaluation of coefficients at an integer point `q = k`.
pub trait Specialize {
    fn specialize(&self, k: i64) -> crate::Result<BigRational>;
}

impl Specialize for RationalFunction {
    fn specialize(&self, k: i64) -> crate::Result<BigRational> {
        self.evaluate_at(k)
    }
}

impl Specialize for BigRational {
    fn specialize(&self, _k: i64) -> crate::Result<BigRational> {
        Ok(self.clone())
    }
}
