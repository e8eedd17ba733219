//! Exact minimum distance.
//!
//! Two independent strategies:
//!
//! * **Enumerate**: walk every codeword up to scalar multiples, i.e. the
//!   messages whose first nonzero entry is one, in base-`q` counting order,
//!   updating the codeword incrementally.
//! * **Support search**: the minimum distance is the least `w` such that some
//!   `w` columns of a parity-check matrix are linearly dependent. Column
//!   subsets are visited depth first with an incrementally reduced basis.
//!
//! Both report the weight over the code's own alphabet, and both refuse to
//! run past their budget rather than return a bound.

use rand::seq::SliceRandom;
use rand::Rng;
use serde::{Deserialize, Serialize};

use super::linear::{weight, LinearCode};
use crate::algebra::{Elem, Field};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct DistanceBudget {
    /// Enumeration is allowed when `q^k` is at most this.
    pub max_codewords: u64,
    /// Support search aborts after this many column reductions.
    pub max_rank_checks: u64,
}

impl Default for DistanceBudget {
    fn default() -> Self {
        DistanceBudget {
            max_codewords: 1 << 24,
            max_rank_checks: 10_000_000,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Strategy {
    /// Cheapest applicable strategy by estimated work, falling back to the
    /// other when the first runs out of budget.
    Auto,
    Enumerate,
    SupportSearch,
}

pub fn min_distance(
    code: &LinearCode,
    strategy: Strategy,
    budget: &DistanceBudget,
) -> Result<usize> {
    Ok(min_weight_codeword(code, strategy, budget)?.0)
}

/// Minimum distance together with a codeword attaining it.
pub fn min_weight_codeword(
    code: &LinearCode,
    strategy: Strategy,
    budget: &DistanceBudget,
) -> Result<(usize, Vec<Elem>)> {
    if code.is_zero() {
        return Err(Error::ZeroCode);
    }
    match strategy {
        Strategy::Enumerate => enumerate(code, budget),
        Strategy::SupportSearch => support_search(code, budget),
        Strategy::Auto => {
            let (n, k) = (code.n() as u64, code.k() as u64);
            let q = code.field().order() as u64;
            let enum_cost = q.checked_pow(k as u32).unwrap_or(u64::MAX);
            let support_cost = (1..=(n - k + 1).min(n))
                .map(|w| binomial(n, w))
                .fold(0u64, u64::saturating_add)
                .saturating_mul(n - k + 1);
            let enum_ok = enum_cost <= budget.max_codewords;
            if enum_ok && enum_cost <= support_cost {
                enumerate(code, budget)
            } else {
                match support_search(code, budget) {
                    Err(Error::Budget(_)) if enum_ok => enumerate(code, budget),
                    r => r,
                }
            }
        }
    }
}

pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut r: u128 = 1;
    for i in 0..k {
        r = r * (n - i) as u128 / (i + 1) as u128;
        if r > u64::MAX as u128 {
            return u64::MAX;
        }
    }
    r as u64
}

fn enumerate(code: &LinearCode, budget: &DistanceBudget) -> Result<(usize, Vec<Elem>)> {
    let f = code.field();
    let q = f.order();
    let k = code.k();
    let total = (q as u64).checked_pow(k as u32);
    if total.is_none_or(|t| t > budget.max_codewords) {
        return Err(Error::Budget(format!(
            "{q}^{k} codewords exceed the enumeration budget of {}",
            budget.max_codewords
        )));
    }
    let g = code.generator();
    let mut best = usize::MAX;
    let mut witness = Vec::new();
    'lead: for lead in 0..k {
        let mut c = g.row(lead).to_vec();
        let mut digits = vec![0 as Elem; k - lead - 1];
        loop {
            let w = weight(&c);
            if w < best {
                best = w;
                witness.clone_from(&c);
                if best == 1 {
                    break 'lead;
                }
            }
            // odometer step; delta applied to the row whose digit changed
            let mut i = 0;
            loop {
                if i == digits.len() {
                    continue 'lead;
                }
                let old = digits[i];
                let new = if old + 1 == q { 0 } else { old + 1 };
                let delta = f.sub(new, old);
                for (x, &r) in c.iter_mut().zip(g.row(lead + 1 + i)) {
                    *x = f.add(*x, f.mul(delta, r));
                }
                digits[i] = new;
                if new != 0 {
                    break;
                }
                i += 1;
            }
        }
    }
    Ok((best, witness))
}

/// Echelon basis of column vectors with a pivot row per vector.
#[derive(Clone)]
struct ColumnBasis {
    vectors: Vec<(usize, Vec<Elem>)>,
}

impl ColumnBasis {
    /// Reduce `v` against the basis; returns the residual.
    fn reduce(&self, f: &Field, v: &[Elem]) -> Vec<Elem> {
        let mut r = v.to_vec();
        for (p, b) in &self.vectors {
            let c = r[*p];
            if c == 0 {
                continue;
            }
            for (x, &y) in r.iter_mut().zip(b) {
                *x = f.sub(*x, f.mul(c, y));
            }
        }
        r
    }

    fn push(&mut self, f: &Field, residual: Vec<Elem>) {
        let p = residual
            .iter()
            .position(|&x| x != 0)
            .expect("nonzero residual");
        let inv = f.inv(residual[p]).expect("nonzero pivot");
        let v: Vec<Elem> = residual.iter().map(|&x| f.mul(x, inv)).collect();
        self.vectors.push((p, v));
    }
}

fn support_search(code: &LinearCode, budget: &DistanceBudget) -> Result<(usize, Vec<Elem>)> {
    let f = code.field();
    let n = code.n();
    let h = code.parity_check();
    if h.rows() == 0 {
        let mut v = vec![0; n];
        v[0] = 1;
        return Ok((1, v));
    }
    let columns: Vec<Vec<Elem>> = (0..n)
        .map(|c| (0..h.rows()).map(|r| h.get(r, c)).collect())
        .collect();
    let mut checks = 0u64;
    let max_w = (h.rows() + 1).min(n);
    for w in 1..=max_w {
        let mut chosen = Vec::with_capacity(w);
        let basis = ColumnBasis {
            vectors: Vec::new(),
        };
        if let Some(set) = search(f, &columns, w, 0, &mut chosen, &basis, &mut checks, budget)? {
            let sub = h.select_columns(&set);
            let ns = sub.nullspace();
            let coeffs = ns.row(0);
            let mut v = vec![0; n];
            for (&c, &x) in set.iter().zip(coeffs) {
                v[c] = x;
            }
            debug_assert_eq!(weight(&v), w);
            return Ok((w, v));
        }
    }
    Err(Error::Internal(format!(
        "no dependent set of at most {max_w} columns in a rank-{} parity-check matrix",
        h.rows()
    )))
}

#[allow(clippy::too_many_arguments)]
fn search(
    f: &Field,
    columns: &[Vec<Elem>],
    w: usize,
    start: usize,
    chosen: &mut Vec<usize>,
    basis: &ColumnBasis,
    checks: &mut u64,
    budget: &DistanceBudget,
) -> Result<Option<Vec<usize>>> {
    let depth = chosen.len();
    let n = columns.len();
    for c in start..=(n - (w - depth)) {
        *checks += 1;
        if *checks > budget.max_rank_checks {
            return Err(Error::Budget(format!(
                "support search exceeded {} column reductions",
                budget.max_rank_checks
            )));
        }
        let residual = basis.reduce(f, &columns[c]);
        let dependent = residual.iter().all(|&x| x == 0);
        chosen.push(c);
        if depth + 1 == w {
            if dependent {
                return Ok(Some(chosen.clone()));
            }
        } else if !dependent {
            let mut next = basis.clone();
            next.push(f, residual);
            if let Some(s) = search(f, columns, w, c + 1, chosen, &next, checks, budget)? {
                return Ok(Some(s));
            }
        }
        chosen.pop();
    }
    Ok(None)
}

/// Upper bound on the minimum distance by random information sets: each
/// round permutes the coordinates, reduces the generator, and tries every
/// row and every pair of rows with scalar multiples (Lee-Brickell with
/// `p = 2`). Returns the lightest codeword seen, in original coordinates.
pub fn low_weight_search<R: Rng + ?Sized>(
    code: &LinearCode,
    rounds: usize,
    rng: &mut R,
) -> Result<(usize, Vec<Elem>)> {
    if code.is_zero() {
        return Err(Error::ZeroCode);
    }
    let f = code.field();
    let n = code.n();
    let mut best = (usize::MAX, Vec::new());
    let mut perm: Vec<usize> = (0..n).collect();
    for _ in 0..rounds.max(1) {
        perm.shuffle(rng);
        let rows = code
            .generator()
            .select_columns(&perm)
            .rref()
            .matrix
            .row_vecs();
        let mut consider = |v: &[Elem]| {
            let w = weight(v);
            if w < best.0 {
                let mut orig = vec![0; n];
                for (i, &x) in v.iter().enumerate() {
                    orig[perm[i]] = x;
                }
                best = (w, orig);
            }
        };
        for (i, a) in rows.iter().enumerate() {
            consider(a);
            for b in &rows[i + 1..] {
                for s in 1..f.order() {
                    let v: Vec<Elem> = a
                        .iter()
                        .zip(b)
                        .map(|(&x, &y)| f.add(x, f.mul(s, y)))
                        .collect();
                    consider(&v);
                }
            }
        }
    }
    Ok(best)
}
