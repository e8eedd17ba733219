//! Plain-text tables for the reports. The structured form is the serde
//! serialization of the same values, so both carry identical numbers.

use std::fmt::Write;

use serde::{Deserialize, Serialize};

use crate::algebra::Factorization;
use crate::bounds::BoundsReport;
use crate::construct::ScanReport;
use crate::examples::Reproduction;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactorSummary {
    pub index: usize,
    pub representative: u64,
    pub coset: Vec<u64>,
    pub degree: usize,
    /// Ascending bracket syntax.
    pub poly: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactorizationSummary {
    pub m: u64,
    pub q: u64,
    /// Degree of the splitting field over `F_q`.
    pub splitting_degree: u32,
    pub factors: Vec<FactorSummary>,
}

impl FactorizationSummary {
    pub fn new(fact: &Factorization) -> FactorizationSummary {
        FactorizationSummary {
            m: fact.m,
            q: fact.q(),
            splitting_degree: fact.splitting.field.degree_over(&fact.base).unwrap_or(1),
            factors: fact
                .factors
                .iter()
                .enumerate()
                .map(|(i, f)| FactorSummary {
                    index: i,
                    representative: f.representative(),
                    coset: f.coset.members.clone(),
                    degree: f.degree(),
                    poly: f.poly.to_bracket(),
                })
                .collect(),
        }
    }
}

fn set(labels: &[usize]) -> String {
    let parts: Vec<String> = labels.iter().map(|l| l.to_string()).collect();
    format!("{{{}}}", parts.join(","))
}

pub fn factorization_text(s: &FactorizationSummary) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "x^{} - 1 over F_{}: {} irreducible factor{}, splitting field of degree {}",
        s.m,
        s.q,
        s.factors.len(),
        if s.factors.len() == 1 { "" } else { "s" },
        s.splitting_degree
    );
    let _ = writeln!(
        out,
        "{:>3} {:>4} {:>6}  {:<24} coset",
        "i", "u", "degree", "b_i"
    );
    for f in &s.factors {
        let coset: Vec<String> = f.coset.iter().map(|c| c.to_string()).collect();
        let _ = writeln!(
            out,
            "{:>3} {:>4} {:>6}  {:<24} {{{}}}",
            f.index,
            f.representative,
            f.degree,
            f.poly,
            coset.join(",")
        );
    }
    out
}

pub fn report_text(r: &BoundsReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "q = {}, m = {}, ell = {}", r.q, r.m, r.ell);
    let _ = writeln!(out, "n = {}, k = {}", r.n, r.k);
    let fallback = if r.locality_fallback {
        " (fallback m - 1: D is the whole space)"
    } else {
        ""
    };
    let _ = writeln!(out, "r_upper = {}{fallback}", r.r_upper);
    let _ = writeln!(out);
    let _ = writeln!(out, "constituents");
    let _ = writeln!(
        out,
        "{:>5} {:>6} {:>4} {:>6}  {:<24} {:>4} {:>4} {:>4}",
        "label", "factor", "u", "degree", "b_i", "n_i", "k_i", "d_i"
    );
    for c in &r.constituents {
        let label = c.label.map_or("-".into(), |l| l.to_string());
        let d = c.distance.map_or("-".into(), |d| d.to_string());
        let _ = writeln!(
            out,
            "{:>5} {:>6} {:>4} {:>6}  {:<24} {:>4} {:>4} {:>4}",
            label, c.factor, c.representative, c.degree, c.modulus, c.length, c.dimension, d
        );
    }
    if !r.subcodes.is_empty() {
        let _ = writeln!(out);
        let _ = writeln!(out, "subcodes D_I");
        let _ = writeln!(out, "{:<10} {:>4} {:>4}  generator", "I", "dim", "d");
        for s in &r.subcodes {
            let _ = writeln!(
                out,
                "{:<10} {:>4} {:>4}  {}",
                set(&s.labels),
                s.dimension,
                s.distance,
                s.generator
            );
        }
    }
    let _ = writeln!(out);
    let _ = writeln!(out, "lower-bound terms");
    for t in &r.terms {
        let _ = writeln!(out, "R_{:<10} = {}", set(&t.labels), t.value);
    }
    let _ = writeln!(out);
    let _ = writeln!(out, "certified terms d(C_a) d(D_{{a..h}})");
    for t in &r.certified_terms {
        let _ = writeln!(out, "T_{:<10} = {}", set(&t.labels), t.value);
    }
    if r.orderings_tried > 1 {
        let _ = writeln!(out, "(maximum over {} tie orderings)", r.orderings_tried);
    }
    let _ = writeln!(out);
    let _ = writeln!(out, "d_S = {}", r.d_s);
    let _ = writeln!(
        out,
        "d_GO = {} (published formula), status = {}",
        r.d_go, r.status
    );
    let _ = writeln!(
        out,
        "d_certified = {} (proven), status = {}",
        r.d_certified, r.certified_status
    );
    out
}

pub fn scan_text(s: &ScanReport) -> String {
    let mut out = String::new();
    let degrees: Vec<String> = s.degrees.iter().map(|d| d.to_string()).collect();
    let _ = writeln!(
        out,
        "q = {}, m = {}, ell = {}, r_upper = {}, degrees = [{}], j_max = {}",
        s.q,
        s.m,
        s.ell,
        s.r_upper,
        degrees.join(","),
        s.jmax
    );
    let _ = writeln!(out, "chain condition: {}", s.chain_condition);
    if s.locality_fallback {
        let _ = writeln!(out, "r_upper is the m - 1 fallback: D is the whole space");
    }
    let _ = writeln!(
        out,
        "{:>4} {:>6} {:>6} {:>6} {:>5} {:>5}  {:<15} {:>6}  {:<17} sources",
        "j", "ell", "n", "k", "d_S", "d_GO", "status", "d_cert", "certified status"
    );
    for r in &s.rows {
        let sources: Vec<String> = r.sources.iter().map(|x| x.to_string()).collect();
        let _ = writeln!(
            out,
            "{:>4} {:>6} {:>6} {:>6} {:>5} {:>5}  {:<15} {:>6}  {:<17} {}",
            r.j,
            r.ell,
            r.n,
            r.k,
            r.d_s,
            r.d_go,
            r.status.to_string(),
            r.d_certified,
            r.certified_status.to_string(),
            sources.join(",")
        );
    }
    let show = |j: Option<usize>| j.map_or("none".to_string(), |j| j.to_string());
    let _ = writeln!(
        out,
        "j_0 = {} (published), {} (certified)",
        show(s.j0),
        show(s.j0_certified)
    );
    if !s.increases.is_empty() {
        let js: Vec<String> = s.increases.iter().map(|j| j.to_string()).collect();
        let _ = writeln!(out, "d_S increases after j = {}", js.join(", "));
    }
    if let Some(t) = &s.truncated {
        let _ = writeln!(out, "J stops before j = {}: {}", t.j, t.reason);
    }
    out
}

pub fn reproduction_text(r: &Reproduction) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "example {}: {}", r.id, r.title);
    for c in &r.checks {
        let verdict = if c.pass { "PASS" } else { "FAIL" };
        let _ = writeln!(
            out,
            "{verdict} {}: expected {}, got {}",
            c.name, c.expected, c.actual
        );
    }
    let failed = r.checks.iter().filter(|c| !c.pass).count();
    let _ = writeln!(
        out,
        "{}: {} of {} checks passed",
        if failed == 0 { "PASS" } else { "FAIL" },
        r.checks.len() - failed,
        r.checks.len()
    );
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{factor_unity, Field};

    #[test]
    fn factor_table_lists_unit_factor_last() {
        let fact = factor_unity(&Field::prime(2).unwrap(), 7).unwrap();
        let s = FactorizationSummary::new(&fact);
        assert_eq!(s.splitting_degree, 3);
        let text = factorization_text(&s);
        let last = text.lines().last().unwrap();
        assert!(last.contains("[1,1]"), "{text}");
        assert!(text.contains("{1,2,4}"));
    }
}
