//! Quasi-cyclic codes and their constituents: evaluation along the factors
//! of `x^m - 1`, trace reconstruction, flattening and the associated cyclic
//! codes.

pub mod array;
pub mod code;
pub mod decomposition;

pub use array::{shift_flattened, shift_invariance_check, CodewordArray};
pub use code::QCCode;
pub use decomposition::{
    decompose, dimension_of, evaluate_constituents, AssociatedCode, ConstituentDecomposition,
};
