use serde::{Deserialize, Serialize};

use super::columns::ParityColumns;
use super::database::CodeDatabase;
use crate::algebra::{Elem, Field};
use crate::codes::{DistanceBudget, LinearCode, Matrix};
use crate::error::{Error, Result};

/// Where a constructed code came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Source {
    /// The input code itself (no extension).
    Given,
    Zero,
    /// `[I_k | 0]`, the full space when `k = n`.
    Identity,
    /// Dual of the all-ones word.
    SumZero,
    /// Greedy parity-check columns.
    Greedy,
    Database,
}

impl std::fmt::Display for Source {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Source::Given => "given",
            Source::Zero => "zero",
            Source::Identity => "identity",
            Source::SumZero => "sum-zero",
            Source::Greedy => "greedy",
            Source::Database => "database",
        })
    }
}

#[derive(Debug, Clone)]
pub struct Constructed {
    pub code: LinearCode,
    pub source: Source,
}

/// An `[n, k, d]` code over `field`, with `d` verified exactly.
///
/// `d = 1` gives `[I_k | 0]`; `d = 2, k = n - 1` the dual of the all-ones
/// word; otherwise greedy parity-check columns ([`ParityColumns`]), and if
/// those run out, `database`.
pub fn construct_code(
    field: &Field,
    n: usize,
    k: usize,
    d: usize,
    database: Option<&CodeDatabase>,
    budget: &DistanceBudget,
) -> Result<Constructed> {
    let mut columns = None;
    construct_with(field, n, k, d, &mut columns, database, budget)
}

/// As [`construct_code`], reusing (and filling) a column sequence across
/// calls with the same redundancy and distance.
pub fn construct_with(
    field: &Field,
    n: usize,
    k: usize,
    d: usize,
    columns: &mut Option<ParityColumns>,
    database: Option<&CodeDatabase>,
    budget: &DistanceBudget,
) -> Result<Constructed> {
    let q = field.order() as u64;
    if k == 0 || k > n || d == 0 || d > n - k + 1 {
        return Err(Error::Existence { n, k, d, q });
    }
    let built = if d == 1 {
        let rows: Vec<Vec<Elem>> = (0..k)
            .map(|i| {
                let mut r = vec![0; n];
                r[i] = 1;
                r
            })
            .collect();
        Constructed {
            code: LinearCode::new(field, n, &rows)?,
            source: Source::Identity,
        }
    } else if d == 2 && k == n - 1 {
        Constructed {
            code: LinearCode::repetition(field, n).dual(),
            source: Source::SumZero,
        }
    } else {
        match greedy(field, n, k, d, columns) {
            Ok(code) => Constructed {
                code,
                source: Source::Greedy,
            },
            Err(e @ (Error::Existence { .. } | Error::Budget(_))) => {
                match database
                    .map(|db| db.lookup(field, n, k))
                    .transpose()?
                    .flatten()
                {
                    Some(code) => Constructed {
                        code,
                        source: Source::Database,
                    },
                    None => {
                        return Err(match e {
                            Error::Budget(_) => Error::Existence { n, k, d, q },
                            e => e,
                        })
                    }
                }
            }
            Err(e) => return Err(e),
        }
    };
    verify(&built.code, n, k, d, budget)?;
    Ok(built)
}

fn greedy(
    field: &Field,
    n: usize,
    k: usize,
    d: usize,
    columns: &mut Option<ParityColumns>,
) -> Result<LinearCode> {
    let rho = n - k;
    let reusable = columns
        .as_ref()
        .is_some_and(|c| c.rho() == rho && c.distance() == d);
    if !reusable {
        *columns = Some(ParityColumns::new(field, rho, d)?);
    }
    let cols = columns
        .as_mut()
        .expect("just set")
        .columns(n)
        .map_err(|e| match e {
            Error::Existence { .. } => Error::Existence {
                n,
                k,
                d,
                q: field.order() as u64,
            },
            e => e,
        })?;
    let rows: Vec<Vec<Elem>> = (0..rho)
        .map(|r| cols.iter().map(|c| c[r]).collect())
        .collect();
    Ok(LinearCode::from_matrix(&Matrix::from_rows(field, n, &rows)?).dual())
}

fn verify(code: &LinearCode, n: usize, k: usize, d: usize, budget: &DistanceBudget) -> Result<()> {
    let got = code.min_distance(budget)?;
    if code.n() != n || code.k() != k || got != d {
        return Err(Error::Internal(format!(
            "constructed [{}, {}, {got}] code, wanted [{n}, {k}, {d}]",
            code.n(),
            code.k()
        )));
    }
    Ok(())
}

/// `[ell + j, k + j, d]` from an `[ell, k, d]` code: the code itself at
/// `j = 0`, the zero code of length `ell + j` for a zero code, otherwise
/// [`construct_code`] with the distance measured on `code`.
pub fn extend_constituent(
    code: &LinearCode,
    j: usize,
    database: Option<&CodeDatabase>,
    budget: &DistanceBudget,
) -> Result<Constructed> {
    let mut columns = None;
    extend_with(code, None, j, &mut columns, database, budget)
}

/// As [`extend_constituent`], with the distance of `code` supplied and a
/// reusable column sequence.
pub fn extend_with(
    code: &LinearCode,
    distance: Option<usize>,
    j: usize,
    columns: &mut Option<ParityColumns>,
    database: Option<&CodeDatabase>,
    budget: &DistanceBudget,
) -> Result<Constructed> {
    let f = code.field();
    if code.is_zero() {
        return Ok(Constructed {
            code: LinearCode::zero(f, code.n() + j),
            source: Source::Zero,
        });
    }
    if j == 0 {
        return Ok(Constructed {
            code: code.clone(),
            source: Source::Given,
        });
    }
    let d = match distance {
        Some(d) => d,
        None => code.min_distance(budget)?,
    };
    construct_with(f, code.n() + j, code.k() + j, d, columns, database, budget)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Poly;

    fn f8() -> Field {
        let f2 = Field::prime(2).unwrap();
        Field::extension(&f2, &Poly::new(&f2, vec![1, 1, 0, 1])).unwrap()
    }

    #[test]
    fn ladder_rungs() {
        let b = DistanceBudget::default();
        let f = f8();
        let full = construct_code(&f, 5, 5, 1, None, &b).unwrap();
        assert_eq!(full.source, Source::Identity);
        assert_eq!(full.code, LinearCode::full(&f, 5));
        let sz = construct_code(&f, 5, 4, 2, None, &b).unwrap();
        assert_eq!(sz.source, Source::SumZero);
        assert_eq!(sz.code, LinearCode::repetition(&f, 5).dual());
        let g = construct_code(&Field::prime(5).unwrap(), 8, 4, 4, None, &b).unwrap();
        assert_eq!(g.source, Source::Greedy);
        assert!(matches!(
            construct_code(&f, 5, 4, 3, None, &b),
            Err(Error::Existence {
                n: 5,
                k: 4,
                d: 3,
                q: 8
            })
        ));
        let low = construct_code(&f, 6, 2, 1, None, &b).unwrap();
        assert_eq!((low.code.k(), low.code.min_distance(&b).unwrap()), (2, 1));
    }

    #[test]
    fn extensions_keep_distance() {
        let b = DistanceBudget::default();
        let f = f8();
        let c1 = LinearCode::new(&f, 3, &[vec![7, 7, 5], vec![0, 5, 5]]).unwrap();
        for j in 0..5 {
            let e = extend_constituent(&c1, j, None, &b).unwrap();
            assert_eq!((e.code.n(), e.code.k()), (3 + j, 2 + j));
            assert_eq!(e.code.min_distance(&b).unwrap(), 2);
        }
        let z = extend_constituent(&LinearCode::zero(&f, 3), 4, None, &b).unwrap();
        assert!(z.code.is_zero());
        assert_eq!(z.code.n(), 7);
    }

    #[test]
    fn database_takes_over_when_greedy_stops() {
        let b = DistanceBudget::default();
        let f5 = Field::prime(5).unwrap();
        let db = CodeDatabase::bundled();
        let mut cols = None;
        let mut sources = Vec::new();
        for n in 7..=26 {
            let c = construct_with(&f5, n, n - 4, 4, &mut cols, Some(&db), &b).unwrap();
            sources.push(c.source);
        }
        assert_eq!(sources[0], Source::Greedy);
        assert_eq!(*sources.last().unwrap(), Source::Database);
        assert!(matches!(
            construct_with(&f5, 27, 23, 4, &mut cols, Some(&db), &b),
            Err(Error::Existence { n: 27, .. })
        ));
        assert!(construct_code(&f5, 20, 16, 4, None, &b).is_err());
    }
}
