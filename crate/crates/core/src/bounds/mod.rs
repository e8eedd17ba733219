//! Bounds for quasi-cyclic locally recoverable codes: the Singleton-type
//! upper bound, the locality bound from the associated cyclic code, the
//! constituent lower bound with its `R_I` terms, and column-wise repair.

pub mod go;
pub mod locality;
pub mod report;
pub mod singleton;

pub use go::{
    constituent_distances, go_bound, go_bound_from, r_term, GoBound, RTerm, SubcodeDistances,
};
pub use locality::{locality_upper, recovery_check, LocalRecovery, Recovery};
pub use report::{full_report, full_report_with, BoundsReport, ConstituentSummary, SubcodeSummary};
pub use singleton::{singleton_bound, Status};
