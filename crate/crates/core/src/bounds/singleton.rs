use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// `n - k - ceil(k / r) + 2`; may be nonpositive, in which case no code with
/// these parameters exists.
pub fn singleton_bound(n: usize, k: usize, r: usize) -> i64 {
    assert!(r >= 1, "locality must be positive");
    n as i64 - k as i64 - k.div_ceil(r) as i64 + 2
}

/// How far the lower bound is from the Singleton-type bound.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Optimal,
    AlmostOptimal,
    /// Gap of at least two.
    Gap(u64),
    /// The Singleton-type bound is not positive.
    Nonexistent,
    /// The lower bound exceeds the Singleton-type bound. For the published
    /// bound this exposes its unsoundness; see [`crate::bounds::GoBound`].
    Contradiction,
    /// The certified lower bound exceeds the Singleton-type bound computed from the
    /// `m - 1` fallback locality, which shows the code's locality is larger.
    LocalityRefuted,
}

impl Status {
    pub fn classify(d_s: i64, d_lower: usize) -> Status {
        if d_s <= 0 {
            return Status::Nonexistent;
        }
        match d_s - d_lower as i64 {
            0 => Status::Optimal,
            1 => Status::AlmostOptimal,
            g if g >= 2 => Status::Gap(g as u64),
            _ => Status::Contradiction,
        }
    }

    /// Status of a proven lower bound. Since the code exists, exceeding the
    /// Singleton-type bound is only possible when `r_upper` is the `m - 1`
    /// fallback rather than a proven locality bound.
    pub fn certify(d_s: i64, d_lower: usize, locality_fallback: bool) -> Result<Status> {
        match Status::classify(d_s, d_lower) {
            Status::Nonexistent | Status::Contradiction if locality_fallback => {
                Ok(Status::LocalityRefuted)
            }
            Status::Nonexistent | Status::Contradiction => Err(Error::Internal(format!(
                "proven lower bound {d_lower} exceeds the Singleton-type bound {d_s}"
            ))),
            s => Ok(s),
        }
    }

    pub fn gap(&self) -> Option<u64> {
        match self {
            Status::Optimal => Some(0),
            Status::AlmostOptimal => Some(1),
            Status::Gap(g) => Some(*g),
            Status::Nonexistent | Status::Contradiction | Status::LocalityRefuted => None,
        }
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Status::Optimal => write!(f, "optimal"),
            Status::AlmostOptimal => write!(f, "almost-optimal"),
            Status::Gap(g) => write!(f, "gap-{g}"),
            Status::Nonexistent => write!(f, "nonexistent"),
            Status::Contradiction => write!(f, "contradiction"),
            Status::LocalityRefuted => write!(f, "locality-refuted"),
        }
    }
}

impl std::str::FromStr for Status {
    type Err = Error;

    fn from_str(s: &str) -> Result<Status> {
        match s {
            "optimal" => Ok(Status::Optimal),
            "almost-optimal" => Ok(Status::AlmostOptimal),
            "nonexistent" => Ok(Status::Nonexistent),
            "contradiction" => Ok(Status::Contradiction),
            "locality-refuted" => Ok(Status::LocalityRefuted),
            _ => s
                .strip_prefix("gap-")
                .and_then(|g| g.parse().ok())
                .filter(|&g| g >= 2)
                .map(Status::Gap)
                .ok_or_else(|| Error::Invalid(format!("unknown status {s:?}"))),
        }
    }
}

impl Serialize for Status {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Status {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Status, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
