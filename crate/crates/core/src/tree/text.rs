//! Canonical text form of trees: `1`, `x`, `x^m` for corollas, and
//! parenthesized child lists such as `((x x) x)`, rendered as `(x^2 x)`.

use std::fmt;
use std::str::FromStr;

use super::{BasisElement, PlanarTree};
use crate::error::{Error, Result};
use crate::scalar::Cursor;

impl fmt::Display for PlanarTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PlanarTree::Leaf => f.write_str("x"),
            t if t.is_corolla() => write!(f, "x^{}", t.arity()),
            t => {
                f.write_str("(")?;
                for (i, c) in t.children().iter().enumerate() {
                    if i > 0 {
                        f.write_str(" ")?;
                    }
                    write!(f, "{c}")?;
                }
                f.write_str(")")
            }
        }
    }
}

impl fmt::Display for BasisElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BasisElement::Unit => f.write_str("1"),
            BasisElement::Tree(t) => write!(f, "{t}"),
        }
    }
}

pub(crate) fn parse_elem(cur: &mut Cursor<'_>) -> Result<BasisElement> {
    if cur.peek() == Some(b'1') {
        cur.pos += 1;
        return Ok(BasisElement::Unit);
    }
    parse_tree(cur).map(BasisElement::Tree)
}

pub(crate) fn parse_tree(cur: &mut Cursor<'_>) -> Result<PlanarTree> {
    match cur.peek() {
        Some(b'x') => {
            cur.pos += 1;
            if cur.peek_raw() != Some(b'^') {
                return Ok(PlanarTree::Leaf);
            }
            cur.pos += 1;
            let at = cur.pos;
            let m = cur.small_integer()?;
            if m < 2 {
                return Err(Error::parse(at, "corolla exponent must be at least 2"));
            }
            Ok(PlanarTree::corolla(m).expect("m >= 2"))
        }
        Some(b'(') => {
            let open = cur.pos;
            cur.pos += 1;
            let mut children = vec![parse_tree(cur)?];
            while !cur.eat(b')') {
                if cur.at_end() {
                    return Err(cur.error("expected ')'"));
                }
                children.push(parse_tree(cur)?);
            }
            if children.len() < 2 {
                return Err(Error::parse(open, "non-reduced tree literal"));
            }
            Ok(PlanarTree::graft_unchecked(children))
        }
        Some(_) => Err(cur.error("expected '1', 'x' or '('")),
        None => Err(cur.error("unexpected end of input")),
    }
}

impl FromStr for BasisElement {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut cur = Cursor::new(s);
        let elem = parse_elem(&mut cur)?;
        cur.finish()?;
        Ok(elem)
    }
}

impl FromStr for PlanarTree {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut cur = Cursor::new(s);
        let tree = parse_tree(&mut cur)?;
        cur.finish()?;
        Ok(tree)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn corolla_sugar() {
        assert_eq!("x^3".parse::<PlanarTree>().unwrap(), PlanarTree::corolla(3).unwrap());
        assert_eq!("(x x x)".parse::<PlanarTree>().unwrap().to_string(), "x^3");
    }

    #[test]
    fn nested() {
        let t: PlanarTree = "((x x) x)".parse().unwrap();
        assert_eq!(t.children()[0], PlanarTree::corolla(2).unwrap());
        assert_eq!(t.children()[1], PlanarTree::Leaf);
        assert_eq!(t.to_string(), "(x^2 x)");
        assert_eq!("( (x  x)x )".parse::<PlanarTree>().unwrap(), t);
    }

    #[test]
    fn unit() {
        assert_eq!("1".parse::<BasisElement>().unwrap(), BasisElement::Unit);
        assert_eq!(BasisElement::Unit.to_string(), "1");
        assert!("1".parse::<PlanarTree>().is_err());
    }

    #[test]
    fn rejects_non_reduced_and_malformed() {
        assert_eq!(
            "(x)".parse::<BasisElement>(),
            Err(Error::parse(0, "non-reduced tree literal"))
        );
        assert_eq!(
            "(x (x))".parse::<BasisElement>(),
            Err(Error::parse(3, "non-reduced tree literal"))
        );
        assert!(matches!("x^1".parse::<PlanarTree>(), Err(Error::Parse { pos: 2, .. })));
        assert!(matches!("(x x".parse::<PlanarTree>(), Err(Error::Parse { pos: 4, .. })));
        assert!(matches!("(x y)".parse::<PlanarTree>(), Err(Error::Parse { pos: 3, .. })));
        assert!(matches!("x x".parse::<PlanarTree>(), Err(Error::Parse { pos: 2, .. })));
    }
}
