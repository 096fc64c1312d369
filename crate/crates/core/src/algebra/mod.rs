//! The algebra of planar tree polynomials and its tensor square.

mod coproduct;
mod gamma;
mod oracle;
mod polynomial;
mod shuffle;
mod tensor;
mod text;

pub use coproduct::{coproduct_poly, coproduct_tree, duality_check, duality_sides};
pub use gamma::{gamma_set, GammaPair};
pub use oracle::{ShuffleOracle, DEFAULT_ORACLE_BOUND};
pub use polynomial::TreePolynomial;
pub use shuffle::{shuffle_poly, shuffle_trees, Shuffler};
pub use tensor::TensorPolynomial;
pub use text::{JsonTensorTerm, JsonTerm, TensorStyle};

use crate::scalar::BigInt;

/// Tree polynomials with integer coefficients, as produced by shuffles and coproducts.
pub type Counts = TreePolynomial<BigInt>;
