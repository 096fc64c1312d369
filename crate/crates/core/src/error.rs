use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("zero divisor")]
    ZeroDivisor,

    #[error("pole at evaluation point {0}")]
    Pole(i64),

    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("unit has no arity")]
    UnitArity,

    #[error("grafting needs at least two children, got {0}")]
    GraftArity(usize),

    #[error("cannot graft the unit as a child")]
    UnitChild,

    #[error("leaf index {index} out of range for a tree with {degree} leaves")]
    LeafOutOfRange { index: usize, degree: usize },

    #[error("spanned subtree of an empty leaf set")]
    EmptyLeafSet,

    #[error("oracle bound: total degree {degree} exceeds bound {bound}")]
    OracleBound { degree: usize, bound: usize },

    #[error("{0}")]
    Domain(String),
}

impl Error {
    pub(crate) fn parse(pos: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            pos,
            msg: msg.into(),
        }
    }
}
