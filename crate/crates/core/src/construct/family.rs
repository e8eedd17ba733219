use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::columns::ParityColumns;
use super::database::CodeDatabase;
use super::ladder::{extend_with, Source};
use crate::bounds::{
    constituent_distances, go_bound_from, locality_upper, singleton_bound, Status, SubcodeDistances,
};
use crate::codes::DistanceBudget;
use crate::error::{Error, Result};
use crate::qc::ConstituentDecomposition;

pub const DEFAULT_JMAX: usize = 64;

/// A base code and the settings for growing it into the family `C^j`.
#[derive(Debug, Clone)]
pub struct FamilySpec {
    pub base: ConstituentDecomposition,
    pub jmax: usize,
    pub budget: DistanceBudget,
    pub database: Option<Arc<CodeDatabase>>,
}

impl FamilySpec {
    pub fn new(base: ConstituentDecomposition) -> FamilySpec {
        FamilySpec {
            base,
            jmax: DEFAULT_JMAX,
            budget: DistanceBudget::default(),
            database: Some(Arc::new(CodeDatabase::bundled())),
        }
    }

    /// `(k_i, deg b_i)` for the nonzero constituents.
    pub fn parts(&self) -> Vec<(usize, usize)> {
        let fact = self.base.factorization();
        self.base
            .nonzero_indices()
            .into_iter()
            .map(|i| (self.base.constituents()[i].k(), fact.factors[i].degree()))
            .collect()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.parts().into_iter().map(|p| p.1).collect()
    }
}

/// Singleton-type bound of `C^j`: with `K = sum (k_i + j) b_i`,
/// `m (ell + j) - K - ceil(K / r) + 2`.
pub fn ds_of_cj(m: usize, ell: usize, r: usize, parts: &[(usize, usize)], j: usize) -> i64 {
    let k: usize = parts.iter().map(|&(k, b)| (k + j) * b).sum();
    singleton_bound(m * (ell + j), k, r)
}

/// `m + 1 - (sum b_i + ceil(sum b_i / r)) <= 0`, which makes the
/// Singleton-type bound of the family nonincreasing in `j`.
pub fn chain_condition(m: usize, r: usize, b: &[usize]) -> bool {
    let s: usize = b.iter().sum();
    (m + 1) as i64 - (s + s.div_ceil(r)) as i64 <= 0
}

/// One member `C^j` with the provenance of each extended constituent.
#[derive(Debug, Clone)]
pub struct Member {
    pub j: usize,
    pub dec: ConstituentDecomposition,
    pub sources: Vec<Source>,
}

/// Builds members of a family, sharing greedy column sequences between
/// values of `j` and verifying every extended constituent's distance.
#[derive(Debug)]
pub struct FamilyBuilder<'a> {
    spec: &'a FamilySpec,
    distances: Vec<Option<usize>>,
    columns: Vec<Option<ParityColumns>>,
}

impl<'a> FamilyBuilder<'a> {
    pub fn new(spec: &'a FamilySpec) -> Result<FamilyBuilder<'a>> {
        let distances = spec
            .base
            .constituents()
            .iter()
            .map(|c| {
                if c.is_zero() {
                    Ok(None)
                } else {
                    c.min_distance(&spec.budget).map(Some)
                }
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(FamilyBuilder {
            spec,
            columns: vec![None; distances.len()],
            distances,
        })
    }

    pub fn build(&mut self, j: usize) -> Result<Member> {
        let base = &self.spec.base;
        let db = self.spec.database.as_deref();
        let mut cons = Vec::with_capacity(self.distances.len());
        let mut sources = Vec::with_capacity(self.distances.len());
        for (i, c) in base.constituents().iter().enumerate() {
            let e = extend_with(
                c,
                self.distances[i],
                j,
                &mut self.columns[i],
                db,
                &self.spec.budget,
            )?;
            cons.push(e.code);
            sources.push(e.source);
        }
        let dec =
            ConstituentDecomposition::new(base.factorization().clone(), base.ell() + j, cons)?;
        Ok(Member { j, dec, sources })
    }
}

/// `C^j` for a single `j`.
pub fn build_cj(spec: &FamilySpec, j: usize) -> Result<ConstituentDecomposition> {
    Ok(FamilyBuilder::new(spec)?.build(j)?.dec)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanRow {
    pub j: usize,
    pub ell: usize,
    pub n: usize,
    pub k: usize,
    pub d_s: i64,
    /// Published lower bound and the status it gives.
    pub d_go: usize,
    pub status: Status,
    /// Proven lower bound and the status it gives.
    pub d_certified: usize,
    pub certified_status: Status,
    /// Per factor, how the constituent was obtained.
    pub sources: Vec<Source>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Truncation {
    /// First `j` left out of `J`.
    pub j: usize,
    pub reason: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanReport {
    pub q: u64,
    pub m: usize,
    pub ell: usize,
    pub jmax: usize,
    pub r_upper: usize,
    /// `deg b_i` of the nonzero constituents.
    pub degrees: Vec<usize>,
    pub chain_condition: bool,
    pub d_go: usize,
    pub d_certified: usize,
    /// `r_upper` is the `m - 1` fallback (`D` is the whole space).
    pub locality_fallback: bool,
    pub rows: Vec<ScanRow>,
    /// Least `j` with `d_S = d_GO`.
    pub j0: Option<usize>,
    /// Least `j` with `d_S` equal to the certified lower bound.
    pub j0_certified: Option<usize>,
    /// Set when `J` stops before `jmax`.
    pub truncated: Option<Truncation>,
    /// `j` with `d_S(C^{j+1}) > d_S(C^j)`; only possible when the chain
    /// condition fails.
    pub increases: Vec<usize>,
}

/// Walks `j = 0, 1, ..., jmax`, stopping early when the Singleton-type bound
/// is no longer positive or an extension cannot be constructed. Every member
/// is rebuilt and its dimension and lower bound recomputed; the lower bound
/// must not change with `j`, and the Singleton-type bound must not increase
/// when the chain condition holds.
pub fn scan(spec: &FamilySpec) -> Result<ScanReport> {
    let base = &spec.base;
    if base.dimension() == 0 {
        return Err(Error::ZeroCode);
    }
    let m = base.m();
    let r = locality_upper(base, &spec.budget)?;
    let parts = spec.parts();
    let degrees = spec.degrees();
    let chain = chain_condition(m, r, &degrees);
    let fallback = base.associated_code()?.dual().is_zero();
    let dd = SubcodeDistances::new(base.factorization().clone(), spec.budget);
    let base_go = go_bound_from(&constituent_distances(base, &spec.budget)?, &dd)?;
    let (d_go, d_certified) = (base_go.value, base_go.certified);
    let mut builder = FamilyBuilder::new(spec)?;
    let mut rows: Vec<ScanRow> = Vec::new();
    let mut truncated = None;
    let mut increases = Vec::new();
    for j in 0..=spec.jmax {
        let d_s = ds_of_cj(m, base.ell(), r, &parts, j);
        if d_s <= 0 {
            truncated = Some(Truncation {
                j,
                reason: format!("Singleton-type bound {d_s} is not positive"),
            });
            break;
        }
        let member = match builder.build(j) {
            Ok(mem) => mem,
            Err(e @ (Error::Existence { .. } | Error::Budget(_))) => {
                truncated = Some(Truncation {
                    j,
                    reason: e.to_string(),
                });
                break;
            }
            Err(e) => return Err(e),
        };
        let dec = &member.dec;
        let k: usize = parts.iter().map(|&(k, b)| (k + j) * b).sum();
        if dec.dimension() != k {
            return Err(Error::Internal(format!(
                "C^{j} has dimension {}, expected {k}",
                dec.dimension()
            )));
        }
        if singleton_bound(dec.length(), k, r) != d_s {
            return Err(Error::Internal(format!(
                "Singleton-type bound of C^{j} disagrees"
            )));
        }
        let go = go_bound_from(&constituent_distances(dec, &spec.budget)?, &dd)?;
        if (go.value, go.certified) != (d_go, d_certified) {
            return Err(Error::Internal(format!(
                "lower bounds of C^{j} are ({}, {}), base code has ({d_go}, {d_certified})",
                go.value, go.certified
            )));
        }
        if let Some(prev) = rows.last() {
            if d_s > prev.d_s {
                if chain {
                    return Err(Error::Internal(format!(
                        "Singleton-type bound increases from j = {} to {j} although the chain condition holds",
                        prev.j
                    )));
                }
                increases.push(prev.j);
            }
        }
        rows.push(ScanRow {
            j,
            ell: dec.ell(),
            n: dec.length(),
            k,
            d_s,
            d_go: go.value,
            status: Status::classify(d_s, go.value),
            d_certified: go.certified,
            certified_status: Status::certify(d_s, go.certified, fallback)?,
            sources: member.sources,
        });
    }
    let j0 = rows
        .iter()
        .find(|r| r.status == Status::Optimal)
        .map(|r| r.j);
    let j0_certified = rows
        .iter()
        .find(|r| r.certified_status == Status::Optimal)
        .map(|r| r.j);
    Ok(ScanReport {
        q: base.base_field().order() as u64,
        m,
        ell: base.ell(),
        jmax: spec.jmax,
        r_upper: r,
        degrees,
        chain_condition: chain,
        d_go,
        d_certified,
        locality_fallback: fallback,
        rows,
        j0,
        j0_certified,
        truncated,
        increases,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn singleton_of_family() {
        let p46 = [(3, 1), (4, 5), (5, 5)];
        for j in 0..=22 {
            let expect = 31 - (48 + 11 * j as i64 + 9) / 10;
            assert_eq!(ds_of_cj(11, 7, 10, &p46, j), expect);
        }
        assert_eq!(ds_of_cj(11, 7, 10, &p46, 14), 10);
        assert_eq!(ds_of_cj(11, 7, 10, &p46, 0), 26);
        for j in 0..=10 {
            assert_eq!(ds_of_cj(7, 3, 6, &[(2, 3), (3, 3)], j), 5);
        }
    }

    #[test]
    fn chain_condition_values() {
        assert!(chain_condition(11, 10, &[1, 5, 5]));
        assert!(!chain_condition(7, 6, &[3, 3]));
        // every factor nonzero: sum b_i = m
        for (m, b) in [
            (7usize, vec![1usize, 3, 3]),
            (11, vec![1, 5, 5]),
            (5, vec![1, 4]),
        ] {
            for r in 1..m {
                assert!(chain_condition(m, r, &b));
            }
        }
    }
}
