use std::fmt;
use std::str::FromStr;

use super::PlanarTree;
use crate::error::{Error, Result};
use crate::scalar::Cursor;

/// A finite planar rooted tree that may contain vertices of arity one.
///
/// Text form: `x` for a vertex without children, `(c1 c2 ...)` for a vertex
/// with one or more children, and `x^m` as shorthand for `m` leaves under a root.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct GeneralTree {
    pub children: Vec<GeneralTree>,
}

impl GeneralTree {
    pub fn leaf() -> Self {
        GeneralTree::default()
    }

    pub fn node(children: Vec<GeneralTree>) -> Self {
        GeneralTree { children }
    }

    /// A vertex whose only child is `self`.
    pub fn lengthen(self) -> Self {
        GeneralTree::node(vec![self])
    }

    pub fn leaf_count(&self) -> usize {
        if self.children.is_empty() {
            1
        } else {
            self.children.iter().map(GeneralTree::leaf_count).sum()
        }
    }

    pub fn vertex_count(&self) -> usize {
        1 + self.children.iter().map(GeneralTree::vertex_count).sum::<usize>()
    }

    pub fn is_reduced(&self) -> bool {
        self.children.len() != 1 && self.children.iter().all(GeneralTree::is_reduced)
    }

    /// The reduced tree on the vertices of arity ≠ 1: arity-one chains are
    /// contracted away, which preserves the leaves and their planar order.
    pub fn reduce(&self) -> PlanarTree {
        let mut current = self;
        while current.children.len() == 1 {
            current = &current.children[0];
        }
        if current.children.is_empty() {
            PlanarTree::Leaf
        } else {
            PlanarTree::graft_unchecked(current.children.iter().map(GeneralTree::reduce).collect())
        }
    }
}

impl From<&PlanarTree> for GeneralTree {
    fn from(t: &PlanarTree) -> Self {
        GeneralTree::node(t.children().iter().map(GeneralTree::from).collect())
    }
}

impl fmt::Display for GeneralTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.children.is_empty() {
            return f.write_str("x");
        }
        f.write_str("(")?;
        for (i, c) in self.children.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str(")")
    }
}

impl fmt::Debug for GeneralTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for GeneralTree {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut cur = Cursor::new(s);
        let tree = parse_general(&mut cur)?;
        cur.finish()?;
        Ok(tree)
    }
}

fn parse_general(cur: &mut Cursor<'_>) -> Result<GeneralTree> {
    match cur.peek() {
        Some(b'x') => {
            cur.pos += 1;
            if cur.peek_raw() == Some(b'^') {
                cur.pos += 1;
                let m = cur.small_integer()?;
                if m == 0 {
                    return Err(cur.error("corolla exponent must be positive"));
                }
                return Ok(GeneralTree::node(vec![GeneralTree::leaf(); m]));
            }
            Ok(GeneralTree::leaf())
        }
        Some(b'(') => {
            cur.pos += 1;
            let mut children = vec![parse_general(cur)?];
            while !cur.eat(b')') {
                if cur.at_end() {
                    return Err(cur.error("expected ')'"));
                }
                children.push(parse_general(cur)?);
            }
            Ok(GeneralTree::node(children))
        }
        Some(_) => Err(cur.error("expected 'x' or '('")),
        None => Err(cur.error("unexpected end of input")),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(s: &str) -> GeneralTree {
        s.parse().unwrap()
    }

    fn x2() -> PlanarTree {
        PlanarTree::corolla(2).unwrap()
    }

    #[test]
    fn reduction_of_lengthened_binary_trees() {
        // root above a binary vertex
        let t1 = g("((x x))");
        // one leg of the binary vertex lengthened
        let t2 = g("(((x) x))");
        // both legs lengthened
        let t3 = g("(((x) (x)))");
        for t in [&t1, &t2, &t3] {
            assert!(!t.is_reduced());
            assert_eq!(t.reduce(), x2());
        }
    }

    #[test]
    fn single_vertex_reduces_to_x() {
        assert_eq!(GeneralTree::leaf().reduce(), PlanarTree::Leaf);
        assert_eq!(g("(((x)))").reduce(), PlanarTree::Leaf);
    }

    #[test]
    fn reduction_keeps_leaf_order() {
        let t = g("((x x) ((x)) (x x x))");
        assert_eq!(t.reduce().to_string(), "(x^2 x x^3)");
        assert_eq!(t.leaf_count(), t.reduce().degree());
    }

    #[test]
    fn parse_errors() {
        assert!(matches!("(x".parse::<GeneralTree>(), Err(Error::Parse { pos: 2, .. })));
        assert!(matches!("()".parse::<GeneralTree>(), Err(Error::Parse { pos: 1, .. })));
        assert!("x^0".parse::<GeneralTree>().is_err());
    }
}
