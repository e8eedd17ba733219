pub mod algebra;
pub mod bounds;
pub mod codes;
pub mod construct;
pub mod error;
pub mod examples;
pub mod qc;
pub mod render;
pub mod spec;

pub use error::{Error, Result};
