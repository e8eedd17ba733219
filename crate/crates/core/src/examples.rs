//! Built-in worked examples with their published values, and a checker
//! that recomputes everything and compares.

use serde::{Deserialize, Serialize};

use crate::bounds::{full_report, BoundsReport, Status};
use crate::codes::DistanceBudget;
use crate::construct::{chain_condition, scan, CodeDatabase, FamilySpec, ScanReport};
use crate::error::{Error, Result};
use crate::spec::CodeSpec;
use std::sync::Arc;

#[derive(Debug, Clone, Copy)]
pub struct Example {
    pub id: &'static str,
    pub title: &'static str,
    pub spec: &'static str,
    /// Largest `j` scanned, or `None` when only the base code is analyzed.
    pub jmax: Option<usize>,
}

pub const EXAMPLES: [Example; 3] = [
    Example {
        id: "4.1",
        title: "binary [21, 15] code with locality at most 6, almost optimal",
        spec: include_str!("../data/almost-optimal-f2-m7.qc"),
        jmax: None,
    },
    Example {
        id: "4.4",
        title: "binary family with constant Singleton-type bound 5",
        spec: include_str!("../data/family-f2-m7.qc"),
        jmax: Some(10),
    },
    Example {
        id: "4.6",
        title: "quinary family reaching an optimal [231, 202, 10] code",
        spec: include_str!("../data/optimal-family-f5-m11.qc"),
        jmax: Some(22),
    },
];

pub fn example(id: &str) -> Option<&'static Example> {
    EXAMPLES.iter().find(|e| e.id == id)
}

impl Example {
    pub fn code_spec(&self) -> CodeSpec {
        CodeSpec::parse(self.spec).expect("built-in spec parses")
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub expected: String,
    pub actual: String,
    pub pass: bool,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Reproduction {
    pub id: String,
    pub title: String,
    pub report: BoundsReport,
    pub scan: Option<ScanReport>,
    pub checks: Vec<Check>,
}

impl Reproduction {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn failures(&self) -> Vec<&Check> {
        self.checks.iter().filter(|c| !c.pass).collect()
    }
}

#[derive(Default)]
struct Checks(Vec<Check>);

impl Checks {
    fn eq<T: PartialEq + std::fmt::Debug>(
        &mut self,
        name: impl Into<String>,
        expected: T,
        actual: T,
    ) {
        self.0.push(Check {
            name: name.into(),
            expected: format!("{expected:?}"),
            actual: format!("{actual:?}"),
            pass: expected == actual,
        });
    }
}

fn subcode(report: &BoundsReport, labels: &[usize]) -> Option<(String, usize)> {
    report
        .subcodes
        .iter()
        .find(|s| s.labels == labels)
        .map(|s| (s.generator.clone(), s.distance))
}

fn term(report: &BoundsReport, labels: &[usize]) -> Option<usize> {
    report
        .terms
        .iter()
        .find(|t| t.labels == labels)
        .map(|t| t.value)
}

/// Recomputes an example from its spec and compares with the published
/// values.
pub fn reproduce(id: &str, budget: &DistanceBudget) -> Result<Reproduction> {
    let ex = example(id).ok_or_else(|| Error::Invalid(format!("unknown example {id:?}")))?;
    let db = Arc::new(CodeDatabase::bundled());
    let spec = ex.code_spec();
    let fact = spec.factorization()?;
    let dec = spec.to_decomposition(Some(&db), budget)?;
    let report = full_report(&dec, budget)?;
    let scan_report = match ex.jmax {
        Some(jmax) => Some(scan(&FamilySpec {
            base: dec.clone(),
            jmax,
            budget: *budget,
            database: Some(db),
        })?),
        None => None,
    };
    let factors: Vec<String> = fact.factors.iter().map(|f| f.poly.to_bracket()).collect();
    let mut c = Checks::default();
    match id {
        "4.1" => {
            c.eq(
                "factors of x^7 - 1",
                vec!["[1,1,0,1]", "[1,0,1,1]", "[1,1]"],
                factors.iter().map(String::as_str).collect(),
            );
            c.eq("n", 21, report.n);
            c.eq("k", 15, report.k);
            c.eq(
                "D_1",
                Some(("[1,1,1,0,1]".into(), 4)),
                subcode(&report, &[1]),
            );
            c.eq(
                "D_2",
                Some(("[1,0,1,1,1]".into(), 4)),
                subcode(&report, &[2]),
            );
            c.eq(
                "D_{1,2}",
                Some(("[1,1]".into(), 2)),
                subcode(&report, &[1, 2]),
            );
            c.eq("d_GO", 4, report.d_go);
            c.eq("r_upper", 6, report.r_upper);
            c.eq("d_S", 5, report.d_s);
            c.eq("status", Status::AlmostOptimal, report.status);
        }
        "4.4" => {
            let s = scan_report.as_ref().expect("family example");
            c.eq("k", 15, report.k);
            c.eq("r_upper", 6, report.r_upper);
            c.eq("chain condition", false, chain_condition(7, 6, &[3, 3]));
            c.eq(
                "scanned j",
                (0..=10).collect::<Vec<_>>(),
                s.rows.iter().map(|r| r.j).collect(),
            );
            for r in &s.rows {
                c.eq(
                    format!("j={} (n, k)", r.j),
                    (7 * (3 + r.j), 6 * r.j + 15),
                    (r.n, r.k),
                );
                c.eq(format!("j={} d_S", r.j), 5, r.d_s);
                c.eq(format!("j={} d_GO", r.j), 4, r.d_go);
                c.eq(format!("j={} status", r.j), Status::AlmostOptimal, r.status);
            }
            c.eq("j_0", None, s.j0);
        }
        "4.6" => {
            let s = scan_report.as_ref().expect("family example");
            c.eq(
                "factors of x^11 - 1",
                vec!["[4,3,1,4,4,1]", "[4,1,1,4,2,1]", "[4,1]"],
                factors.iter().map(String::as_str).collect(),
            );
            c.eq("n", 77, report.n);
            c.eq("k", 48, report.k);
            let published: [(&[usize], &str, usize); 7] = [
                (&[1], "[1,1,1,1,1,1,1,1,1,1,1]", 11),
                (&[2], "[1,1,2,2,0,3,1]", 6),
                (&[3], "[1,3,0,2,2,1,1]", 6),
                (&[1, 2], "[4,3,1,4,4,1]", 5),
                (&[1, 3], "[4,1,1,4,2,1]", 5),
                (&[2, 3], "[4,1]", 2),
                (&[1, 2, 3], "[1]", 1),
            ];
            for (labels, g, d) in published {
                let name = format!(
                    "D_{{{}}}",
                    labels
                        .iter()
                        .map(|l| l.to_string())
                        .collect::<Vec<_>>()
                        .join(",")
                );
                c.eq(name, Some((g.to_string(), d)), subcode(&report, labels));
            }
            c.eq("R_3", Some(12), term(&report, &[3]));
            c.eq("R_{2,3}", Some(10), term(&report, &[2, 3]));
            c.eq("R_{1,2,3}", Some(18), term(&report, &[1, 2, 3]));
            c.eq("d_GO", 10, report.d_go);
            c.eq("r_upper", 10, report.r_upper);
            c.eq("d_S at j=0", 26, report.d_s);
            c.eq("status at j=0", Status::Gap(16), report.status);
            c.eq("chain condition", true, s.chain_condition);
            c.eq("j_0", Some(14), s.j0);
            let row = s
                .rows
                .iter()
                .find(|r| r.j == 14)
                .map(|r| (r.n, r.k, r.d_s, r.d_go, r.status));
            c.eq("row j=14", Some((231, 202, 10, 10, Status::Optimal)), row);
            for r in &s.rows {
                c.eq(
                    format!("j={} d_S", r.j),
                    31 - (48 + 11 * r.j as i64 + 9) / 10,
                    r.d_s,
                );
            }
        }
        _ => unreachable!("ids come from EXAMPLES"),
    }
    Ok(Reproduction {
        id: ex.id.into(),
        title: ex.title.into(),
        report,
        scan: scan_report,
        checks: c.0,
    })
}
