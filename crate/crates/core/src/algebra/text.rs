//! Text and JSON forms of tree and tensor polynomials.
//!
//! Text: `c1*T1 + c2*T2 + ...`, coefficients parenthesized unless they are a
//! nonnegative integer or `q`, a coefficient of one omitted, and a unit term
//! written as its bare coefficient. Tensors render `c*(V ⊗ W)`.

use std::fmt::{self, Write as _};
use std::str::FromStr;

use num_traits::One;
use serde::{Deserialize, Serialize};

use super::{TensorPolynomial, TreePolynomial};
use crate::error::{Error, Result};
use crate::scalar::{parse_rf_power, Coefficient, Cursor, RationalFunction};
use crate::tree::text::parse_elem;
use crate::tree::BasisElement;

fn write_coeff<C: Coefficient>(out: &mut String, c: &C) {
    if c.is_atomic() {
        let _ = write!(out, "{c}");
    } else {
        let _ = write!(out, "({c})");
    }
}

/// Writes `terms` as a signed sum, rendering each magnitude with `body`.
fn write_sum<'a, C: Coefficient + 'a, T: 'a>(
    f: &mut fmt::Formatter<'_>,
    terms: impl Iterator<Item = (T, &'a C)>,
    mut body: impl FnMut(&mut String, T, &C),
) -> fmt::Result {
    let mut out = String::new();
    for (i, (key, c)) in terms.enumerate() {
        let negative = c.is_negative();
        let magnitude = if negative { -c.clone() } else { c.clone() };
        match (i, negative) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        body(&mut out, key, &magnitude);
    }
    if out.is_empty() {
        out.push('0');
    }
    f.write_str(&out)
}

impl<C: Coefficient> fmt::Display for TreePolynomial<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_sum(f, self.iter(), |out, t, c| {
            if c.is_one() {
                let _ = write!(out, "{t}");
            } else if t.is_unit() {
                write_coeff(out, c);
            } else {
                write_coeff(out, c);
                let _ = write!(out, "*{t}");
            }
        })
    }
}

impl<C: Coefficient> fmt::Debug for TreePolynomial<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// How the tensor sign is written.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum TensorStyle {
    #[default]
    Unicode,
    Ascii,
}

impl TensorStyle {
    fn symbol(self) -> &'static str {
        match self {
            TensorStyle::Unicode => "⊗",
            TensorStyle::Ascii => "(x)",
        }
    }
}

/// Display adapter for a tensor polynomial in a given [`TensorStyle`].
pub struct TensorDisplay<'a, C> {
    poly: &'a TensorPolynomial<C>,
    style: TensorStyle,
}

impl<C: Coefficient> TensorPolynomial<C> {
    pub fn display(&self, style: TensorStyle) -> TensorDisplay<'_, C> {
        TensorDisplay { poly: self, style }
    }
}

impl<C: Coefficient> fmt::Display for TensorDisplay<'_, C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sym = self.style.symbol();
        write_sum(f, self.poly.iter(), |out, (v, w), c| {
            if c.is_one() {
                let _ = write!(out, "{v} {sym} {w}");
            } else {
                write_coeff(out, c);
                let _ = write!(out, "*({v} {sym} {w})");
            }
        })
    }
}

impl<C: Coefficient> fmt::Display for TensorPolynomial<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.display(TensorStyle::Unicode), f)
    }
}

impl<C: Coefficient> fmt::Debug for TensorPolynomial<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

fn starts_tree(cur: &mut Cursor<'_>) -> bool {
    match cur.peek() {
        Some(b'x') => true,
        Some(b'(') => cur.peek_past_parens() == Some(b'x'),
        _ => false,
    }
}

fn parse_term(cur: &mut Cursor<'_>) -> Result<(BasisElement, RationalFunction)> {
    let mut coeff = RationalFunction::one();
    let mut elem: Option<BasisElement> = None;
    loop {
        let at = cur.pos;
        if starts_tree(cur) {
            if elem.is_some() {
                return Err(Error::parse(at, "a term holds at most one tree"));
            }
            elem = Some(parse_elem(cur)?);
        } else {
            coeff = coeff * parse_rf_power(cur)?;
        }
        if !cur.eat(b'*') {
            break;
        }
    }
    Ok((elem.unwrap_or(BasisElement::Unit), coeff))
}

impl FromStr for TreePolynomial<RationalFunction> {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut cur = Cursor::new(s);
        let mut out = TreePolynomial::zero();
        let mut negative = cur.eat(b'-');
        loop {
            let (t, c) = parse_term(&mut cur)?;
            out.add_term(t, if negative { -c } else { c });
            if cur.eat(b'+') {
                negative = false;
            } else if cur.eat(b'-') {
                negative = true;
            } else {
                break;
            }
        }
        cur.finish()?;
        Ok(out)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct JsonTerm {
    pub tree: String,
    pub coeff: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct JsonTensorTerm {
    pub left: String,
    pub right: String,
    pub coeff: String,
}

impl<C: Coefficient> TreePolynomial<C> {
    pub fn to_json_terms(&self) -> Vec<JsonTerm> {
        self.iter()
            .map(|(t, c)| JsonTerm {
                tree: t.to_string(),
                coeff: c.to_string(),
            })
            .collect()
    }
}

impl TreePolynomial<RationalFunction> {
    pub fn from_json_terms(terms: &[JsonTerm]) -> Result<Self> {
        let mut out = TreePolynomial::zero();
        for term in terms {
            out.add_term(term.tree.parse()?, term.coeff.parse()?);
        }
        Ok(out)
    }
}

impl<C: Coefficient> TensorPolynomial<C> {
    pub fn to_json_terms(&self) -> Vec<JsonTensorTerm> {
        self.iter()
            .map(|((v, w), c)| JsonTensorTerm {
                left: v.to_string(),
                right: w.to_string(),
                coeff: c.to_string(),
            })
            .collect()
    }
}

impl TensorPolynomial<RationalFunction> {
    pub fn from_json_terms(terms: &[JsonTensorTerm]) -> Result<Self> {
        let mut out = TensorPolynomial::zero();
        for term in terms {
            out.add_term(term.left.parse()?, term.right.parse()?, term.coeff.parse()?);
        }
        Ok(out)
    }
}
