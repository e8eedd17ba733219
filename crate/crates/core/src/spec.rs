//! Text format describing a quasi-cyclic code, either by generators or by
//! constituents.
//!
//! ```text
//! # comment
//! q: 2
//! m: 7
//! ell: 3
//! constituents:
//!   u=1 b=[1,1,0,1]
//!     [1,1,1] [1,1,1] [1,0,1]
//!     [0] [1,0,1] [1,0,1]
//!   u=3 b=[1,0,1,1] full
//! ```
//!
//! Headers are `key: value` lines; `q` may be written `p^a`. A
//! `generators:` block has one line per generator with `ell` polynomials
//! over `F_q` in ascending bracket syntax (coefficients are field element
//! encodings). A `constituents:` block has one header per factor, named by
//! a member `u` of its cyclotomic coset and optionally its polynomial
//! `b=[..]` (checked), followed by `full`, `zero`, `construct k=.. d=..`,
//! or indented generator rows whose entries are polynomials in the class of
//! `x` modulo `b(x)`. Factors not listed have zero constituents.

use std::fmt::Write as _;
use std::sync::Arc;

use crate::algebra::{factor_unity, prime_power, Elem, Factorization, Field, Poly};
use crate::codes::{DistanceBudget, LinearCode};
use crate::construct::{construct_code, CodeDatabase};
use crate::error::{Error, Result};
use crate::qc::{evaluate_constituents, ConstituentDecomposition, QCCode};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CodeSpec {
    pub q: u64,
    pub m: usize,
    pub ell: usize,
    pub body: Body,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Body {
    /// Each generator is `ell` polynomials over `F_q`.
    Generators(Vec<Vec<Poly>>),
    Constituents(Vec<ConstituentSpec>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConstituentSpec {
    /// Coset representative of the factor.
    pub u: u64,
    pub kind: ConstituentKind,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ConstituentKind {
    /// Generator rows; entries are polynomials over `F_q` of degree below
    /// `deg b(x)`.
    Rows(Vec<Vec<Poly>>),
    Full,
    Zero,
    /// Built by the construction ladder.
    Construct {
        k: usize,
        d: usize,
    },
}

impl CodeSpec {
    pub fn field(&self) -> Result<Field> {
        Field::galois(self.q)
    }

    pub fn factorization(&self) -> Result<Factorization> {
        factor_unity(&self.field()?, self.m as u64)
    }

    pub fn parse(text: &str) -> Result<CodeSpec> {
        Parser::default().run(text)
    }

    /// The decomposition of the described code. `construct` entries use
    /// `database` as the fallback source.
    pub fn to_decomposition(
        &self,
        database: Option<&CodeDatabase>,
        budget: &DistanceBudget,
    ) -> Result<ConstituentDecomposition> {
        let fact = Arc::new(self.factorization()?);
        let base = fact.base.clone();
        match &self.body {
            Body::Generators(gens) => {
                let code = QCCode::new(&base, self.m, self.ell, gens.clone())?;
                evaluate_constituents(&code, &fact)
            }
            Body::Constituents(list) => {
                let mut cons: Vec<LinearCode> = fact
                    .factors
                    .iter()
                    .map(|f| LinearCode::zero(&f.field, self.ell))
                    .collect();
                for c in list {
                    let i = fact.index_of(c.u);
                    let k = &fact.factors[i].field;
                    cons[i] = match &c.kind {
                        ConstituentKind::Full => LinearCode::full(k, self.ell),
                        ConstituentKind::Zero => LinearCode::zero(k, self.ell),
                        ConstituentKind::Rows(rows) => {
                            let rows: Vec<Vec<Elem>> = rows
                                .iter()
                                .map(|r| r.iter().map(|p| k.from_coeffs(p.coeffs())).collect())
                                .collect();
                            LinearCode::new(k, self.ell, &rows)?
                        }
                        ConstituentKind::Construct { k: dim, d } => {
                            construct_code(k, self.ell, *dim, *d, database, budget)?.code
                        }
                    };
                }
                ConstituentDecomposition::new(fact, self.ell, cons)
            }
        }
    }

    pub fn render(&self) -> Result<String> {
        let mut out = String::new();
        writeln!(out, "q: {}", self.q).unwrap();
        writeln!(out, "m: {}", self.m).unwrap();
        writeln!(out, "ell: {}", self.ell).unwrap();
        match &self.body {
            Body::Generators(gens) => {
                out.push_str("generators:\n");
                for g in gens {
                    writeln!(out, "  {}", brackets(g)).unwrap();
                }
            }
            Body::Constituents(list) => {
                let fact = self.factorization()?;
                out.push_str("constituents:\n");
                for c in list {
                    let b = &fact.factors[fact.index_of(c.u)].poly;
                    write!(out, "  u={} b={}", c.u, b.to_bracket()).unwrap();
                    match &c.kind {
                        ConstituentKind::Full => out.push_str(" full\n"),
                        ConstituentKind::Zero => out.push_str(" zero\n"),
                        ConstituentKind::Construct { k, d } => {
                            writeln!(out, " construct k={k} d={d}").unwrap()
                        }
                        ConstituentKind::Rows(rows) => {
                            out.push('\n');
                            for r in rows {
                                writeln!(out, "    {}", brackets(r)).unwrap();
                            }
                        }
                    }
                }
            }
        }
        Ok(out)
    }
}

fn brackets(ps: &[Poly]) -> String {
    ps.iter()
        .map(Poly::to_bracket)
        .collect::<Vec<_>>()
        .join(" ")
}

#[derive(Default)]
struct Parser {
    q: Option<u64>,
    m: Option<usize>,
    ell: Option<usize>,
    context: Option<(Field, Factorization)>,
    body: Option<Body>,
    /// Slot and line of the open rows-style constituent header.
    open: Option<(usize, usize)>,
}

impl Parser {
    fn run(mut self, text: &str) -> Result<CodeSpec> {
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let content = raw.split('#').next().unwrap_or("").trim();
            if content.is_empty() {
                continue;
            }
            self.line(content, raw.starts_with(char::is_whitespace), line)
                .map_err(|e| match e {
                    Error::Parse { .. } => e,
                    e => Error::Parse {
                        line,
                        msg: e.to_string(),
                    },
                })?;
        }
        let missing = |k: &str| Error::Parse {
            line: text.lines().count().max(1),
            msg: format!("missing {k}"),
        };
        self.close_open()?;
        let body = self
            .body
            .ok_or_else(|| missing("generators: or constituents: block"))?;
        Ok(CodeSpec {
            q: self.q.ok_or_else(|| missing("q"))?,
            m: self.m.ok_or_else(|| missing("m"))?,
            ell: self.ell.ok_or_else(|| missing("ell"))?,
            body,
        })
    }

    /// Rejects a rows-style constituent header that received no rows.
    fn close_open(&mut self) -> Result<()> {
        if let Some((slot, line)) = self.open.take() {
            if let Some(Body::Constituents(list)) = &self.body {
                if matches!(&list[slot].kind, ConstituentKind::Rows(r) if r.is_empty()) {
                    return Err(Error::Parse {
                        line,
                        msg: format!("constituent u={} has no rows", list[slot].u),
                    });
                }
            }
        }
        Ok(())
    }

    fn line(&mut self, content: &str, indented: bool, line: usize) -> Result<()> {
        if !indented {
            self.close_open()?;
            let (key, value) = content.split_once(':').ok_or_else(|| {
                Error::Invalid(format!("expected \"key: value\", got {content:?}"))
            })?;
            let value = value.trim();
            match key.trim() {
                "q" => self.q = Some(parse_q(value)?),
                "m" => self.m = Some(parse_num(value, "m")?),
                "ell" => self.ell = Some(parse_num(value, "ell")?),
                "generators" | "constituents" => {
                    if !value.is_empty() {
                        return Err(Error::Invalid(format!("unexpected {value:?} after {key}:")));
                    }
                    if self.body.is_some() {
                        return Err(Error::Invalid("more than one body block".into()));
                    }
                    self.prepare()?;
                    self.body = Some(if key.trim() == "generators" {
                        Body::Generators(Vec::new())
                    } else {
                        Body::Constituents(Vec::new())
                    });
                }
                other => return Err(Error::Invalid(format!("unknown key {other:?}"))),
            }
            return Ok(());
        }
        let (field, fact) = self.context.as_ref().ok_or_else(|| {
            Error::Invalid("indented line outside a generators: or constituents: block".into())
        })?;
        let ell = self.ell.expect("checked in prepare");
        match self.body.as_mut().expect("context implies body") {
            Body::Generators(gens) => {
                let row = parse_row(field, content, ell)?;
                let m = self.m.expect("checked in prepare");
                if let Some(p) = row.iter().find(|p| p.degree().is_some_and(|d| d >= m)) {
                    return Err(Error::Invalid(format!(
                        "{} has degree >= m = {m}",
                        p.to_bracket()
                    )));
                }
                gens.push(row);
            }
            Body::Constituents(list) => {
                if content.starts_with("u=") {
                    if let Some((slot, open_line)) = self.open.take() {
                        if matches!(&list[slot].kind, ConstituentKind::Rows(r) if r.is_empty()) {
                            return Err(Error::Parse {
                                line: open_line,
                                msg: format!("constituent u={} has no rows", list[slot].u),
                            });
                        }
                    }
                    let c = parse_header(content, field, fact)?;
                    let i = fact.index_of(c.u);
                    if list.iter().any(|x| fact.index_of(x.u) == i) {
                        return Err(Error::Invalid(format!("factor of u={} listed twice", c.u)));
                    }
                    self.open =
                        matches!(c.kind, ConstituentKind::Rows(_)).then_some((list.len(), line));
                    list.push(c);
                } else {
                    let (slot, _) = self.open.ok_or_else(|| {
                        Error::Invalid("generator row without an open u= header".into())
                    })?;
                    let deg = fact.factors[fact.index_of(list[slot].u)].degree();
                    let row = parse_row(field, content, ell)?;
                    if let Some(p) = row.iter().find(|p| p.degree().is_some_and(|d| d >= deg)) {
                        return Err(Error::Invalid(format!(
                            "entry {} has degree >= deg b(x) = {deg}",
                            p.to_bracket()
                        )));
                    }
                    if let ConstituentKind::Rows(rows) = &mut list[slot].kind {
                        rows.push(row);
                    }
                }
            }
        }
        Ok(())
    }

    fn prepare(&mut self) -> Result<()> {
        let q = self
            .q
            .ok_or_else(|| Error::Invalid("q must precede the body".into()))?;
        let m = self
            .m
            .ok_or_else(|| Error::Invalid("m must precede the body".into()))?;
        if self.ell.is_none_or(|l| l == 0) || m == 0 {
            return Err(Error::Invalid(
                "positive ell and m must precede the body".into(),
            ));
        }
        let field = Field::galois(q)?;
        let fact = factor_unity(&field, m as u64)?;
        self.context = Some((field, fact));
        Ok(())
    }
}

fn parse_q(value: &str) -> Result<u64> {
    let q = match value.split_once('^') {
        Some((p, a)) => {
            let p: u64 = parse_num(p.trim(), "p")? as u64;
            let a: u32 = parse_num(a.trim(), "exponent")? as u32;
            p.checked_pow(a)
                .ok_or_else(|| Error::Invalid(format!("{value} overflows")))?
        }
        None => parse_num(value, "q")? as u64,
    };
    prime_power(q).ok_or(Error::NotPrimePower(q))?;
    Ok(q)
}

fn parse_num(value: &str, what: &str) -> Result<usize> {
    value.parse().map_err(|_| {
        Error::Invalid(format!(
            "{what} must be a nonnegative integer, got {value:?}"
        ))
    })
}

fn parse_row(field: &Field, content: &str, ell: usize) -> Result<Vec<Poly>> {
    let row = content
        .split_whitespace()
        .map(|t| Poly::parse(field, t))
        .collect::<Result<Vec<_>>>()?;
    if row.len() != ell {
        return Err(Error::Invalid(format!(
            "{} entries, expected ell = {ell}",
            row.len()
        )));
    }
    Ok(row)
}

fn parse_header(content: &str, field: &Field, fact: &Factorization) -> Result<ConstituentSpec> {
    let mut toks = content.split_whitespace();
    let u: u64 = toks
        .next()
        .and_then(|t| t.strip_prefix("u="))
        .and_then(|t| t.parse().ok())
        .ok_or_else(|| Error::Invalid(format!("bad constituent header {content:?}")))?;
    let factor = &fact.factors[fact.index_of(u)];
    if factor.representative() != u {
        return Err(Error::Invalid(format!(
            "u={u} is not a coset representative (use u={})",
            factor.representative()
        )));
    }
    let mut rest: Vec<&str> = toks.collect();
    if let Some(b) = rest.first().and_then(|t| t.strip_prefix("b=")) {
        let b = Poly::parse(field, b)?;
        if b != factor.poly {
            return Err(Error::Invalid(format!(
                "u={u} belongs to b(x) = {}, not {}",
                factor.poly.to_bracket(),
                b.to_bracket()
            )));
        }
        rest.remove(0);
    }
    let kind = match rest.as_slice() {
        [] => ConstituentKind::Rows(Vec::new()),
        ["full"] => ConstituentKind::Full,
        ["zero"] => ConstituentKind::Zero,
        ["construct", a, b] => {
            let get = |t: &str, key: &str| -> Result<usize> {
                t.strip_prefix(key)
                    .and_then(|v| v.parse().ok())
                    .ok_or_else(|| Error::Invalid(format!("expected {key}<n>, got {t:?}")))
            };
            ConstituentKind::Construct {
                k: get(a, "k=")?,
                d: get(b, "d=")?,
            }
        }
        _ => {
            return Err(Error::Invalid(format!(
                "bad constituent header {content:?}"
            )))
        }
    };
    Ok(ConstituentSpec { u, kind })
}
