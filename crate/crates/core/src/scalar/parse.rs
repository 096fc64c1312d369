//! Text grammar for rational functions:
//!
//! ```text
//! expr    := term (("+" | "-") term)*
//! term    := unary (("*" | "/") unary)*
//! unary   := "-" unary | power
//! power   := primary ("^" INT)?
//! primary := INT | "q" | "(" expr ")"
//! ```

use num_bigint::BigInt;

use super::RationalFunction;
use crate::error::{Error, Result};

pub(crate) struct Cursor<'a> {
    src: &'a [u8],
    pub(crate) pos: usize,
}

impl<'a> Cursor<'a> {
    pub(crate) fn new(src: &'a str) -> Self {
        Cursor {
            src: src.as_bytes(),
            pos: 0,
        }
    }

    pub(crate) fn skip_ws(&mut self) {
        while self.src.get(self.pos).is_some_and(u8::is_ascii_whitespace) {
            self.pos += 1;
        }
    }

    pub(crate) fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    /// Next byte without skipping whitespace.
    pub(crate) fn peek_raw(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    /// First byte at or after the cursor that is not whitespace or `(`.
    pub(crate) fn peek_past_parens(&self) -> Option<u8> {
        self.src[self.pos..]
            .iter()
            .copied()
            .find(|b| !b.is_ascii_whitespace() && *b != b'(')
    }

    pub(crate) fn eat(&mut self, byte: u8) -> bool {
        if self.peek() == Some(byte) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    pub(crate) fn expect(&mut self, byte: u8) -> Result<()> {
        if self.eat(byte) {
            Ok(())
        } else {
            Err(self.error(format!("expected '{}'", byte as char)))
        }
    }

    pub(crate) fn error(&self, msg: impl Into<String>) -> Error {
        Error::parse(self.pos, msg)
    }

    pub(crate) fn at_end(&mut self) -> bool {
        self.peek().is_none()
    }

    pub(crate) fn finish(&mut self) -> Result<()> {
        if self.at_end() {
            Ok(())
        } else {
            Err(self.error("unexpected trailing input"))
        }
    }

    pub(crate) fn integer(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.peek_raw().is_some_and(|b| b.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected integer"));
        }
        let digits = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        Ok(digits.parse().expect("ascii digits"))
    }

    pub(crate) fn small_integer(&mut self) -> Result<usize> {
        let start = self.pos;
        let n = self.integer()?;
        usize::try_from(n).map_err(|_| Error::parse(start, "exponent too large"))
    }
}

pub(crate) fn parse_rational_function(src: &str) -> Result<RationalFunction> {
    let mut cur = Cursor::new(src);
    let value = expr(&mut cur)?;
    cur.finish()?;
    Ok(value)
}

fn expr(cur: &mut Cursor<'_>) -> Result<RationalFunction> {
    let mut acc = term(cur)?;
    loop {
        if cur.eat(b'+') {
            acc = acc + term(cur)?;
        } else if cur.eat(b'-') {
            acc = acc - term(cur)?;
        } else {
            return Ok(acc);
        }
    }
}

fn term(cur: &mut Cursor<'_>) -> Result<RationalFunction> {
    let mut acc = unary(cur)?;
    loop {
        if cur.eat(b'*') {
            acc = acc * unary(cur)?;
        } else if cur.peek() == Some(b'/') {
            let at = cur.pos;
            cur.pos += 1;
            let divisor = unary(cur)?;
            acc = acc
                .checked_div(&divisor)
                .map_err(|_| Error::parse(at, "zero divisor"))?;
        } else {
            return Ok(acc);
        }
    }
}

fn unary(cur: &mut Cursor<'_>) -> Result<RationalFunction> {
    if cur.eat(b'-') {
        return Ok(-unary(cur)?);
    }
    power(cur)
}

pub(crate) fn power(cur: &mut Cursor<'_>) -> Result<RationalFunction> {
    let base = primary(cur)?;
    if cur.eat(b'^') {
        let at = cur.pos;
        let exp = cur.small_integer()?;
        let exp = u32::try_from(exp).map_err(|_| Error::parse(at, "exponent too large"))?;
        return Ok(base.pow(exp));
    }
    Ok(base)
}

fn primary(cur: &mut Cursor<'_>) -> Result<RationalFunction> {
    match cur.peek() {
        Some(b'q') => {
            cur.pos += 1;
            Ok(RationalFunction::q())
        }
        Some(b'(') => {
            cur.pos += 1;
            let inner = expr(cur)?;
            cur.expect(b')')?;
            Ok(inner)
        }
        Some(b) if b.is_ascii_digit() => Ok(RationalFunction::from_integer(cur.integer()?)),
        Some(_) => Err(cur.error("expected integer, 'q' or '('")),
        None => Err(cur.error("unexpected end of input")),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::QPolynomial;
    use num_traits::{One, Zero};

    #[test]
    fn reads_fraction() {
        let f = parse_rational_function("(q^2 - q)/2").unwrap();
        assert_eq!(f, RationalFunction::q_binomial(2));
    }

    #[test]
    fn cancels() {
        assert_eq!(parse_rational_function("q/(q)").unwrap(), RationalFunction::one());
    }

    #[test]
    fn precedence() {
        assert_eq!(
            parse_rational_function("1 + 2*q^2").unwrap(),
            RationalFunction::from_polynomial(QPolynomial::from_integers(&[1, 0, 2]))
        );
        assert_eq!(parse_rational_function("-q^2").unwrap(), -RationalFunction::q_pow(2));
        assert_eq!(parse_rational_function("1/2/2").unwrap(), RationalFunction::from_ratio(1, 4));
        assert!(parse_rational_function("q - q").unwrap().is_zero());
    }

    #[test]
    fn errors_carry_position() {
        assert_eq!(
            parse_rational_function("q +"),
            Err(Error::parse(3, "unexpected end of input"))
        );
        assert_eq!(parse_rational_function("1/(q - q)"), Err(Error::parse(1, "zero divisor")));
        assert!(matches!(parse_rational_function("q x"), Err(Error::Parse { pos: 2, .. })));
        assert!(matches!(parse_rational_function("q^-1"), Err(Error::Parse { pos: 2, .. })));
    }
}
