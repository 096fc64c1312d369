//! Exact computation with planar tree polynomials over `Q(q)`: reduction and
//! contraction of planar rooted trees, the planar shuffle product, co-addition
//! and the generic non-associative exponential series.

pub mod algebra;
pub mod error;
pub mod report;
pub mod scalar;
pub mod series;
mod sweep;
pub mod tree;
pub mod verify;

pub use error::{Error, Result};
