use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use serde::{Deserialize, Serialize};

use crate::algebra::Factorization;
use crate::codes::{subcode_from_bz, DistanceBudget};
use crate::error::{Error, Result};
use crate::qc::ConstituentDecomposition;

/// Largest number of nonzero constituents for which every tie-consistent
/// ordering is tried.
pub const MAX_TIE_ENUMERATION: usize = 6;

/// Memoized `d(D_I)` keyed by the factor index set `I`.
#[derive(Debug)]
pub struct SubcodeDistances {
    fact: Arc<Factorization>,
    budget: DistanceBudget,
    cache: Mutex<HashMap<Vec<usize>, usize>>,
}

impl SubcodeDistances {
    pub fn new(fact: Arc<Factorization>, budget: DistanceBudget) -> SubcodeDistances {
        SubcodeDistances {
            fact,
            budget,
            cache: Mutex::new(HashMap::new()),
        }
    }

    pub fn factorization(&self) -> &Arc<Factorization> {
        &self.fact
    }

    pub fn distance(&self, factors: &[usize]) -> Result<usize> {
        let mut key = factors.to_vec();
        key.sort_unstable();
        if let Some(&d) = self.cache.lock().expect("cache lock").get(&key) {
            return Ok(d);
        }
        let d = subcode_from_bz(&key, &self.fact)?
            .linear_code()
            .min_distance(&self.budget)?;
        self.cache.lock().expect("cache lock").insert(key, d);
        Ok(d)
    }
}

/// One term `R_I` of the lower bound. `labels` are 1-based positions in the
/// chosen constituent order, `factors` the factor indices in that order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RTerm {
    pub labels: Vec<usize>,
    pub factors: Vec<usize>,
    pub value: usize,
}

/// The published bound `min{R_h, R_{h-1,h}, ..., R_{1..h}}` together with a
/// certified lower bound.
///
/// The published `R_I` formula is not a valid lower bound in general: it
/// charges the columns in `supp(lambda_{i_a}) \ supp(lambda_{i_{a+1}})` at
/// `d(D_{i_1..i_a})` as if every support had exactly minimum size, but a
/// larger support of a later component moves columns to the cheaper
/// `d(D_{i_1..i_t})`. A binary `m = 7, ell = 3` code with constituent
/// distances `(2, 1, 1)` has a weight-2 codeword while the formula gives 3.
///
/// `certified` is the sound counterpart: a codeword whose nonzero
/// components are `I`, with `i_a` the first of them in the order, has at
/// least `d(C_{i_a})` nonzero columns, each a nonzero word of a subcode of
/// `D_{i_a..i_h}`. Hence `d(C) >= min_a d(C_{i_a}) d(D_{i_a..i_h})`, which does
/// not depend on how ties are ordered.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GoBound {
    /// Minimum of the published `R_I` terms.
    pub value: usize,
    /// `min_a d(C_{i_a}) d(D_{i_a..i_h})`, a proven lower bound.
    pub certified: usize,
    /// `d(C_{i_a}) d(D_{i_a..i_h})` for `a = h, h - 1, ..., 1`.
    pub certified_terms: Vec<RTerm>,
    /// Nonzero factor indices, constituent distances nonincreasing.
    pub order: Vec<usize>,
    /// `d(C_i)` along `order`.
    pub distances: Vec<usize>,
    /// `R_h, R_{h-1,h}, ..., R_{1..h}`.
    pub terms: Vec<RTerm>,
    pub orderings_tried: usize,
}

/// `R_I` for `I = (i_1, ..., i_t)`: `cd` are the constituent distances along
/// `I` (nonincreasing) and `dd[a]` is `d(D_{i_1..i_{a+1}})`.
pub fn r_term(cd: &[usize], dd: &[usize]) -> Result<usize> {
    let t = cd.len();
    if t == 0 || dd.len() != t {
        return Err(Error::Invalid(format!(
            "{t} constituent distances with {} subcode distances",
            dd.len()
        )));
    }
    if cd.windows(2).any(|w| w[0] < w[1]) {
        return Err(Error::Invalid(format!(
            "constituent distances {cd:?} are not nonincreasing"
        )));
    }
    let steps: usize = (0..t - 1).map(|a| (cd[a] - cd[a + 1]) * dd[a]).sum();
    Ok(steps + cd[t - 1] * dd[t - 1])
}

/// The lower bound from constituent distances `(factor index, d(C_i))` and
/// subcode distances. Ties in `d(C_i)` are resolved by trying every
/// consistent ordering (up to [`MAX_TIE_ENUMERATION`] constituents) and
/// keeping the largest bound; otherwise the order is distance descending,
/// factor index ascending.
pub fn go_bound_from(cd: &[(usize, usize)], dd: &SubcodeDistances) -> Result<GoBound> {
    if cd.is_empty() {
        return Err(Error::ZeroCode);
    }
    let mut stable = cd.to_vec();
    stable.sort_by(|a, b| b.1.cmp(&a.1).then(a.0.cmp(&b.0)));
    let orderings = if stable.len() <= MAX_TIE_ENUMERATION {
        tie_orderings(&stable)
    } else {
        vec![stable]
    };
    let mut best: Option<GoBound> = None;
    for ord in &orderings {
        let candidate = evaluate_ordering(ord, dd)?;
        if best.as_ref().is_none_or(|b| candidate.value > b.value) {
            best = Some(candidate);
        }
    }
    let mut best = best.expect("at least one ordering");
    best.orderings_tried = orderings.len();
    let h = best.order.len();
    best.certified_terms = (0..h)
        .rev()
        .map(|a| {
            Ok(RTerm {
                labels: (a + 1..=h).collect(),
                factors: best.order[a..].to_vec(),
                value: best.distances[a] * dd.distance(&best.order[a..])?,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    best.certified = best
        .certified_terms
        .iter()
        .map(|t| t.value)
        .min()
        .expect("h >= 1");
    Ok(best)
}

pub fn go_bound(dec: &ConstituentDecomposition, budget: &DistanceBudget) -> Result<GoBound> {
    let dd = SubcodeDistances::new(dec.factorization().clone(), *budget);
    go_bound_from(&constituent_distances(dec, budget)?, &dd)
}

/// `(factor index, d(C_i))` for every nonzero constituent.
pub fn constituent_distances(
    dec: &ConstituentDecomposition,
    budget: &DistanceBudget,
) -> Result<Vec<(usize, usize)>> {
    dec.nonzero_indices()
        .into_iter()
        .map(|i| Ok((i, dec.constituents()[i].min_distance(budget)?)))
        .collect()
}

fn evaluate_ordering(ord: &[(usize, usize)], dd: &SubcodeDistances) -> Result<GoBound> {
    let h = ord.len();
    let order: Vec<usize> = ord.iter().map(|x| x.0).collect();
    let distances: Vec<usize> = ord.iter().map(|x| x.1).collect();
    let mut terms = Vec::with_capacity(h);
    for a in (0..h).rev() {
        let prefix_d = (a..h)
            .map(|b| dd.distance(&order[a..=b]))
            .collect::<Result<Vec<_>>>()?;
        terms.push(RTerm {
            labels: (a + 1..=h).collect(),
            factors: order[a..].to_vec(),
            value: r_term(&distances[a..], &prefix_d)?,
        });
    }
    let value = terms.iter().map(|t| t.value).min().expect("h >= 1");
    Ok(GoBound {
        value,
        certified: 0,
        certified_terms: Vec::new(),
        order,
        distances,
        terms,
        orderings_tried: 1,
    })
}

/// Every ordering that permutes only within runs of equal distance, the
/// stable one first.
fn tie_orderings(sorted: &[(usize, usize)]) -> Vec<Vec<(usize, usize)>> {
    let mut out = vec![Vec::new()];
    let mut start = 0;
    while start < sorted.len() {
        let end = (start..sorted.len())
            .find(|&i| sorted[i].1 != sorted[start].1)
            .unwrap_or(sorted.len());
        let perms = permutations(&sorted[start..end]);
        out = out
            .into_iter()
            .flat_map(|prefix| {
                perms.iter().map(move |p| {
                    let mut v = prefix.clone();
                    v.extend_from_slice(p);
                    v
                })
            })
            .collect();
        start = end;
    }
    out
}

fn permutations<T: Clone>(items: &[T]) -> Vec<Vec<T>> {
    if items.len() <= 1 {
        return vec![items.to_vec()];
    }
    let mut out = Vec::new();
    for i in 0..items.len() {
        let mut rest = items.to_vec();
        let head = rest.remove(i);
        for mut tail in permutations(&rest) {
            tail.insert(0, head.clone());
            out.push(tail);
        }
    }
    out
}
