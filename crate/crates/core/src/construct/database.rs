use crate::algebra::{Elem, Field, Poly};
use crate::codes::{LinearCode, Matrix};
use crate::error::{Error, Result};

/// Plain-text table of linear codes keyed by `(q, n, k)`.
///
/// ```text
/// code 5 26 22
///   [3] [3] [1] [1] [0] ...
///   ...
/// code 8 5 3 modulus [1,1,0,1]
///   [1] [0,1] ...
/// ```
///
/// Entries are bracket polynomials in the generator of the field; records
/// for extension fields name the field's defining polynomial so that the
/// entries are unambiguous.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct CodeDatabase {
    records: Vec<Record>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
struct Record {
    q: u64,
    n: usize,
    k: usize,
    modulus: Option<String>,
    /// Per entry, coefficients over the field's immediate base.
    rows: Vec<Vec<Vec<Elem>>>,
    line: usize,
}

const BUNDLED: &str = include_str!("../../data/codes.db");

impl CodeDatabase {
    /// The codes shipped with the library.
    pub fn bundled() -> CodeDatabase {
        CodeDatabase::parse(BUNDLED).expect("bundled database parses")
    }

    pub fn len(&self) -> usize {
        self.records.len()
    }

    pub fn is_empty(&self) -> bool {
        self.records.is_empty()
    }

    pub fn merge(&mut self, other: CodeDatabase) {
        self.records.extend(other.records);
    }

    pub fn parse(text: &str) -> Result<CodeDatabase> {
        let mut records: Vec<Record> = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let body = raw.split('#').next().unwrap_or("").trim_end();
            if body.trim().is_empty() {
                continue;
            }
            let err = |msg: String| Error::Parse { line, msg };
            if !raw.starts_with(char::is_whitespace) {
                let mut toks = body.split_whitespace();
                if toks.next() != Some("code") {
                    return Err(err(format!("expected \"code q n k\", got {body:?}")));
                }
                let mut num = |what: &str| -> Result<u64> {
                    toks.next()
                        .and_then(|t| t.parse().ok())
                        .ok_or_else(|| err(format!("missing or bad {what}")))
                };
                let (q, n, k) = (num("q")?, num("n")? as usize, num("k")? as usize);
                let rest: Vec<&str> = toks.collect();
                let modulus = match rest.as_slice() {
                    [] => None,
                    ["modulus", p @ ..] => Some(p.concat()),
                    _ => return Err(err(format!("unexpected {:?}", rest.join(" ")))),
                };
                if k == 0 || k > n {
                    return Err(err(format!("dimension {k} does not fit length {n}")));
                }
                records.push(Record {
                    q,
                    n,
                    k,
                    modulus,
                    rows: Vec::new(),
                    line,
                });
                continue;
            }
            let rec = records
                .last_mut()
                .ok_or_else(|| err("row before any \"code\" header".into()))?;
            if rec.rows.len() == rec.k {
                return Err(err(format!("more than {} rows", rec.k)));
            }
            let row = body
                .split_whitespace()
                .map(|t| parse_entry(t).map_err(&err))
                .collect::<Result<Vec<_>>>()?;
            if row.len() != rec.n {
                return Err(err(format!(
                    "row has {} entries, expected {}",
                    row.len(),
                    rec.n
                )));
            }
            rec.rows.push(row);
        }
        if let Some(r) = records.iter().find(|r| r.rows.len() != r.k) {
            return Err(Error::Parse {
                line: r.line,
                msg: format!("record has {} rows, expected {}", r.rows.len(), r.k),
            });
        }
        Ok(CodeDatabase { records })
    }

    /// An `[n, k]` code over `field`: a record with exactly these
    /// parameters, or one of length `n + s` and dimension `k + s` shortened
    /// on `s` information positions. The distance is not checked here.
    pub fn lookup(&self, field: &Field, n: usize, k: usize) -> Result<Option<LinearCode>> {
        let mut best: Option<&Record> = None;
        for r in &self.records {
            if !self.matches(r, field) || r.n < n || r.n - n != r.k.wrapping_sub(k) || r.k < k {
                continue;
            }
            if best.is_none_or(|b| r.n < b.n) {
                best = Some(r);
            }
        }
        let Some(r) = best else { return Ok(None) };
        let code = self.materialize(r, field)?;
        Ok(Some(shorten(&code, r.n - n)))
    }

    fn matches(&self, r: &Record, field: &Field) -> bool {
        if r.q != field.order() as u64 {
            return false;
        }
        match (&r.modulus, field.modulus()) {
            (None, None) => true,
            (None, Some(_)) => field.step_degree() == 1,
            (Some(m), Some(fm)) => *m == fm.to_bracket(),
            (Some(_), None) => false,
        }
    }

    fn materialize(&self, r: &Record, field: &Field) -> Result<LinearCode> {
        let base = field.base().unwrap_or(field);
        let mut mat = Matrix::zeros(field, 0, r.n);
        for (i, row) in r.rows.iter().enumerate() {
            let mut out = Vec::with_capacity(r.n);
            for c in row {
                if c.len() > field.step_degree() as usize || c.iter().any(|&x| !base.contains(x)) {
                    return Err(Error::Parse {
                        line: r.line + 1 + i,
                        msg: format!("entry {c:?} is not an element of {field}"),
                    });
                }
                out.push(field.from_coeffs(c));
            }
            mat.push_row(&out)?;
        }
        let code = LinearCode::from_matrix(&mat);
        if code.k() != r.k {
            return Err(Error::Parse {
                line: r.line,
                msg: format!("rows have rank {}, expected {}", code.k(), r.k),
            });
        }
        Ok(code)
    }
}

fn parse_entry(tok: &str) -> std::result::Result<Vec<Elem>, String> {
    let inner = tok
        .strip_prefix('[')
        .and_then(|t| t.strip_suffix(']'))
        .ok_or_else(|| format!("expected a bracket polynomial, got {tok:?}"))?;
    inner
        .split(',')
        .map(|c| {
            c.trim()
                .parse::<Elem>()
                .map_err(|_| format!("bad coefficient in {tok:?}"))
        })
        .collect()
}

/// Codewords vanishing on the last `s` pivot positions, with those
/// positions deleted: `[n, k] -> [n - s, k - s]` with distance at least as
/// large.
pub fn shorten(code: &LinearCode, s: usize) -> LinearCode {
    if s == 0 {
        return code.clone();
    }
    let k = code.k();
    let drop: Vec<usize> = code.pivots()[k - s..].to_vec();
    let keep: Vec<usize> = (0..code.n()).filter(|c| !drop.contains(c)).collect();
    // RREF rows past k - s are the only ones nonzero on the dropped pivots
    let rows: Vec<Vec<Elem>> = (0..k - s)
        .map(|r| keep.iter().map(|&c| code.generator().get(r, c)).collect())
        .collect();
    LinearCode::new(code.field(), keep.len(), &rows).expect("consistent widths")
}

/// Renders a code as a database record.
pub fn render_record(code: &LinearCode) -> String {
    let f = code.field();
    let mut out = format!("code {} {} {}", f.order(), code.n(), code.k());
    if let Some(m) = f.modulus().filter(|_| f.step_degree() > 1) {
        out.push_str(&format!(" modulus {}", m.to_bracket()));
    }
    out.push('\n');
    let base = f.base().unwrap_or(f).clone();
    for row in code.generator().row_vecs() {
        let entries: Vec<String> = row
            .iter()
            .map(|&x| Poly::new(&base, f.coeffs(x)).to_bracket())
            .collect();
        out.push_str("  ");
        out.push_str(&entries.join(" "));
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::codes::DistanceBudget;

    #[test]
    fn bundled_quadric_code() {
        let db = CodeDatabase::bundled();
        let f5 = Field::prime(5).unwrap();
        let b = DistanceBudget::default();
        let c = db.lookup(&f5, 26, 22).unwrap().unwrap();
        assert_eq!((c.n(), c.k()), (26, 22));
        assert_eq!(c.min_distance(&b).unwrap(), 4);
        for n in [17usize, 21, 25] {
            let s = db.lookup(&f5, n, n - 4).unwrap().unwrap();
            assert_eq!((s.n(), s.k()), (n, n - 4));
            assert_eq!(s.min_distance(&b).unwrap(), 4);
        }
        assert!(db.lookup(&f5, 27, 23).unwrap().is_none());
        assert!(db.lookup(&f5, 20, 17).unwrap().is_none());
        assert!(db
            .lookup(&Field::prime(7).unwrap(), 20, 16)
            .unwrap()
            .is_none());
    }

    #[test]
    fn render_and_parse_extension_field_record() {
        let f2 = Field::prime(2).unwrap();
        let f8 = Field::extension(&f2, &Poly::new(&f2, vec![1, 1, 0, 1])).unwrap();
        let c = LinearCode::new(&f8, 3, &[vec![7, 7, 5], vec![0, 5, 5]]).unwrap();
        let text = render_record(&c);
        assert!(text.starts_with("code 8 3 2 modulus [1,1,0,1]"));
        let db = CodeDatabase::parse(&text).unwrap();
        assert_eq!(db.lookup(&f8, 3, 2).unwrap().unwrap(), c);
        // a different F_8 does not match the record
        let other = Field::extension(&f2, &Poly::new(&f2, vec![1, 0, 1, 1])).unwrap();
        assert!(db.lookup(&other, 3, 2).unwrap().is_none());
    }

    #[test]
    fn parse_errors_carry_lines() {
        let bad = "code 5 3 1\n  [1] [2]\n";
        assert!(matches!(
            CodeDatabase::parse(bad),
            Err(Error::Parse { line: 2, .. })
        ));
        let short = "code 5 3 2\n  [1] [2] [3]\n";
        assert!(matches!(
            CodeDatabase::parse(short),
            Err(Error::Parse { line: 1, .. })
        ));
        assert!(matches!(
            CodeDatabase::parse("  [1]\n"),
            Err(Error::Parse { line: 1, .. })
        ));
        assert!(CodeDatabase::parse("# nothing\n\n").unwrap().is_empty());
    }
}
