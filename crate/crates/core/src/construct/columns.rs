use std::collections::HashSet;

use crate::algebra::{Elem, Field};
use crate::error::{Error, Result};

/// Default cap on the number of stored forbidden vectors.
pub const DEFAULT_MAX_FORBIDDEN: usize = 1 << 24;

/// Columns of a parity-check matrix with `rho` rows in which every `d - 1`
/// columns are linearly independent, grown one column at a time.
///
/// The sequence starts with the unit vectors `e_1..e_rho` and
/// `s = e_1 + ... + e_{d-1}` (so the code has a word of weight exactly `d`),
/// then takes every vector in base-`q` counting order (first coordinate
/// least significant) that lies outside the span of each `d - 2` columns
/// already chosen. The sequence depends only on `(field, rho, d)`, so codes
/// of growing length share a prefix and are built incrementally.
#[derive(Debug, Clone)]
pub struct ParityColumns {
    field: Field,
    rho: usize,
    d: usize,
    q: u64,
    columns: Vec<u64>,
    /// `combos[t]`: encodings of combinations of exactly `t` chosen columns
    /// with nonzero coefficients, `t <= d - 2`.
    combos: Vec<Vec<u64>>,
    forbidden: HashSet<u64>,
    next: u64,
    max_forbidden: usize,
}

impl ParityColumns {
    pub fn new(field: &Field, rho: usize, d: usize) -> Result<ParityColumns> {
        ParityColumns::with_limit(field, rho, d, DEFAULT_MAX_FORBIDDEN)
    }

    pub fn with_limit(
        field: &Field,
        rho: usize,
        d: usize,
        max_forbidden: usize,
    ) -> Result<ParityColumns> {
        if d < 2 || rho == 0 || d - 1 > rho {
            return Err(Error::Invalid(format!(
                "no parity-check columns for redundancy {rho} and distance {d}"
            )));
        }
        let q = field.order() as u64;
        if (q as f64).powi(rho as i32) >= 2f64.powi(63) {
            return Err(Error::Budget(format!("{q}^{rho} column vectors")));
        }
        let mut combos = vec![Vec::new(); d - 1];
        combos[0].push(0);
        let mut pc = ParityColumns {
            field: field.clone(),
            rho,
            d,
            q,
            columns: Vec::new(),
            combos,
            forbidden: HashSet::from([0]),
            next: 1,
            max_forbidden,
        };
        let mut start: Vec<Vec<Elem>> = (0..rho)
            .map(|i| {
                let mut e = vec![0; rho];
                e[i] = 1;
                e
            })
            .collect();
        let mut s = vec![0; rho];
        s[..d - 1].iter_mut().for_each(|x| *x = 1);
        start.push(s);
        for v in start {
            let code = pc.encode(&v);
            if pc.forbidden.contains(&code) {
                return Err(Error::Internal(
                    "systematic prefix is not independent".into(),
                ));
            }
            pc.push(code)?;
        }
        Ok(pc)
    }

    pub fn rho(&self) -> usize {
        self.rho
    }

    pub fn distance(&self) -> usize {
        self.d
    }

    pub fn len(&self) -> usize {
        self.columns.len()
    }

    pub fn is_empty(&self) -> bool {
        self.columns.is_empty()
    }

    /// The first `n` columns, extending the sequence as needed.
    pub fn columns(&mut self, n: usize) -> Result<Vec<Vec<Elem>>> {
        while self.columns.len() < n {
            self.grow()?;
        }
        Ok(self.columns[..n].iter().map(|&c| self.decode(c)).collect())
    }

    fn grow(&mut self) -> Result<()> {
        let total = self.q.pow(self.rho as u32);
        while self.next < total {
            let c = self.next;
            self.next += 1;
            if !self.forbidden.contains(&c) {
                return self.push(c);
            }
        }
        Err(Error::Existence {
            n: self.columns.len() + 1,
            k: self.columns.len() + 1 - self.rho,
            d: self.d,
            q: self.q,
        })
    }

    fn push(&mut self, c: u64) -> Result<()> {
        let f = self.field.clone();
        let cv = self.decode(c);
        for t in (1..self.d - 1).rev() {
            let mut fresh = Vec::with_capacity(self.combos[t - 1].len() * (self.q as usize - 1));
            for &v in &self.combos[t - 1] {
                let vv = self.decode(v);
                for a in 1..self.q as Elem {
                    let w: Vec<Elem> = vv
                        .iter()
                        .zip(&cv)
                        .map(|(&x, &y)| f.add(x, f.mul(a, y)))
                        .collect();
                    fresh.push(self.encode(&w));
                }
            }
            self.forbidden.extend(fresh.iter().copied());
            self.combos[t].extend(fresh);
            if self.forbidden.len() > self.max_forbidden {
                return Err(Error::Budget(format!(
                    "more than {} excluded column vectors",
                    self.max_forbidden
                )));
            }
        }
        self.columns.push(c);
        Ok(())
    }

    fn encode(&self, v: &[Elem]) -> u64 {
        v.iter().rev().fold(0, |acc, &x| acc * self.q + x as u64)
    }

    fn decode(&self, mut c: u64) -> Vec<Elem> {
        (0..self.rho)
            .map(|_| {
                let x = (c % self.q) as Elem;
                c /= self.q;
                x
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::codes::{DistanceBudget, LinearCode, Matrix};

    fn code_from_columns(f: &Field, cols: &[Vec<Elem>]) -> LinearCode {
        let rho = cols[0].len();
        let rows: Vec<Vec<Elem>> = (0..rho)
            .map(|r| cols.iter().map(|c| c[r]).collect())
            .collect();
        LinearCode::from_matrix(&Matrix::from_rows(f, cols.len(), &rows).unwrap()).dual()
    }

    #[test]
    fn binary_hamming_and_extended() {
        let f2 = Field::prime(2).unwrap();
        // d = 3 over F_2 with 3 checks: all 7 nonzero columns
        let mut pc = ParityColumns::new(&f2, 3, 3).unwrap();
        let cols = pc.columns(7).unwrap();
        let c = code_from_columns(&f2, &cols);
        assert_eq!((c.n(), c.k()), (7, 4));
        assert_eq!(c.min_distance(&DistanceBudget::default()).unwrap(), 3);
        assert!(matches!(pc.columns(8), Err(Error::Existence { .. })));
        // d = 4 over F_2 with 4 checks: a cap of size 8 in PG(3, 2)
        let mut pc = ParityColumns::new(&f2, 4, 4).unwrap();
        let cols = pc.columns(8).unwrap();
        let c = code_from_columns(&f2, &cols);
        assert_eq!(c.min_distance(&DistanceBudget::default()).unwrap(), 4);
    }

    #[test]
    fn prefixes_are_shared() {
        let f5 = Field::prime(5).unwrap();
        let mut a = ParityColumns::new(&f5, 4, 4).unwrap();
        let mut b = ParityColumns::new(&f5, 4, 4).unwrap();
        let long = a.columns(12).unwrap();
        assert_eq!(b.columns(8).unwrap(), long[..8].to_vec());
        let c = code_from_columns(&f5, &long[..8]);
        assert_eq!((c.n(), c.k()), (8, 4));
        assert_eq!(c.min_distance(&DistanceBudget::default()).unwrap(), 4);
    }

    #[test]
    fn rejects_impossible_shapes() {
        let f3 = Field::prime(3).unwrap();
        assert!(ParityColumns::new(&f3, 2, 4).is_err());
        assert!(ParityColumns::new(&f3, 2, 1).is_err());
        let tiny = ParityColumns::with_limit(&f3, 3, 3, 4);
        assert!(matches!(tiny, Err(Error::Budget(_))));
    }
}
