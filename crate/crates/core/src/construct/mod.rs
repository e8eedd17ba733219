//! Extension families: constituents grown to `[ell + j, k_i + j, d_i]`
//! with the same distance, the resulting quasi-cyclic codes, and the scan
//! for the first optimal member.

pub mod columns;
pub mod database;
pub mod family;
pub mod ladder;

pub use columns::ParityColumns;
pub use database::{render_record, shorten, CodeDatabase};
pub use family::{
    build_cj, chain_condition, ds_of_cj, scan, FamilyBuilder, FamilySpec, Member, ScanReport,
    ScanRow, Truncation, DEFAULT_JMAX,
};
pub use ladder::{
    construct_code, construct_with, extend_constituent, extend_with, Constructed, Source,
};
