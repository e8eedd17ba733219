use serde::{Deserialize, Serialize};

use super::go::{constituent_distances, go_bound_from, GoBound, RTerm, SubcodeDistances};
use super::locality::locality_upper;
use super::singleton::{singleton_bound, Status};
use crate::codes::DistanceBudget;
use crate::error::{Error, Result};
use crate::qc::ConstituentDecomposition;

/// Largest number of nonzero constituents for which the report lists
/// `d(D_I)` for every nonempty `I`, not only the ones the bound uses.
pub const MAX_LISTED_SUBSETS: usize = 6;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConstituentSummary {
    /// 1-based position in the bound's constituent order; `None` for a zero
    /// constituent.
    pub label: Option<usize>,
    pub factor: usize,
    /// Cyclotomic coset representative `u_i`.
    pub representative: u64,
    pub degree: usize,
    /// `b_i(x)` in ascending bracket syntax.
    pub modulus: String,
    pub length: usize,
    pub dimension: usize,
    pub distance: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubcodeSummary {
    pub labels: Vec<usize>,
    pub factors: Vec<usize>,
    pub generator: String,
    pub dimension: usize,
    pub distance: usize,
}

/// Every number the analysis produces for one quasi-cyclic code.
///
/// `d_s` is the Singleton-type bound evaluated at `r_upper`, i.e. assuming
/// locality at most `r_upper`; exact locality is never claimed.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundsReport {
    pub q: u64,
    pub m: usize,
    pub ell: usize,
    pub n: usize,
    pub k: usize,
    pub r_upper: usize,
    /// `D` is the whole space, so `r_upper` is the `m - 1` fallback and not
    /// backed by a column parity check.
    pub locality_fallback: bool,
    pub d_s: i64,
    /// Published lower bound `min R_I`; not a proven bound in general.
    pub d_go: usize,
    /// `d_S` against `d_go`.
    pub status: Status,
    /// Proven lower bound `min_a d(C_{i_a}) d(D_{i_a..i_h})`.
    pub d_certified: usize,
    /// `d_S` against `d_certified`.
    pub certified_status: Status,
    pub constituents: Vec<ConstituentSummary>,
    pub subcodes: Vec<SubcodeSummary>,
    pub terms: Vec<RTerm>,
    pub certified_terms: Vec<RTerm>,
    pub orderings_tried: usize,
}

pub fn full_report(
    dec: &ConstituentDecomposition,
    budget: &DistanceBudget,
) -> Result<BoundsReport> {
    let dd = SubcodeDistances::new(dec.factorization().clone(), *budget);
    full_report_with(dec, &dd, budget)
}

/// As [`full_report`], reusing subcode distances across calls that share a
/// factorization.
pub fn full_report_with(
    dec: &ConstituentDecomposition,
    dd: &SubcodeDistances,
    budget: &DistanceBudget,
) -> Result<BoundsReport> {
    let k = dec.dimension();
    if k == 0 {
        return Err(Error::ZeroCode);
    }
    let n = dec.length();
    let r_upper = locality_upper(dec, budget)?;
    let cd = constituent_distances(dec, budget)?;
    let go: GoBound = go_bound_from(&cd, dd)?;
    let d_s = singleton_bound(n, k, r_upper);
    let locality_fallback = dec.associated_code()?.dual().is_zero();
    let status = Status::classify(d_s, go.value);
    let certified_status = Status::certify(d_s, go.certified, locality_fallback)?;

    let fact = dec.factorization();
    let constituents = fact
        .factors
        .iter()
        .enumerate()
        .map(|(i, f)| {
            let c = &dec.constituents()[i];
            ConstituentSummary {
                label: go.order.iter().position(|&x| x == i).map(|p| p + 1),
                factor: i,
                representative: f.representative(),
                degree: f.degree(),
                modulus: f.poly.to_bracket(),
                length: c.n(),
                dimension: c.k(),
                distance: cd.iter().find(|x| x.0 == i).map(|x| x.1),
            }
        })
        .collect();

    let listed = if go.order.len() <= MAX_LISTED_SUBSETS {
        dec.associated_cyclic_codes(&go.order)?
    } else {
        Vec::new()
    };
    let mut subcodes = Vec::with_capacity(listed.len());
    for a in listed {
        subcodes.push(SubcodeSummary {
            distance: dd.distance(&a.factors)?,
            dimension: a.code.dimension(),
            generator: a.code.generator().to_bracket(),
            labels: a.labels,
            factors: a.factors,
        });
    }

    Ok(BoundsReport {
        q: dec.base_field().order() as u64,
        m: dec.m(),
        ell: dec.ell(),
        n,
        k,
        r_upper,
        locality_fallback,
        d_s,
        d_go: go.value,
        status,
        d_certified: go.certified,
        certified_status,
        constituents,
        subcodes,
        terms: go.terms,
        certified_terms: go.certified_terms,
        orderings_tried: go.orderings_tried,
    })
}
