//! Linear and cyclic codes over any constructed field, with exact minimum
//! distance.

pub mod cyclic;
pub mod distance;
pub mod linear;
pub mod matrix;

pub use cyclic::{subcode_from_bz, CyclicCode};
pub use distance::{
    low_weight_search, min_distance, min_weight_codeword, DistanceBudget, Strategy,
};
pub use linear::{weight, LinearCode};
pub use matrix::{Matrix, Rref};
