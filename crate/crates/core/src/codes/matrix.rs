use std::fmt;

use crate::algebra::{Elem, Field};
use crate::error::{Error, Result};

/// Dense row-major matrix over a finite field.
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<Elem>,
}

/// Result of [`Matrix::rref`].
#[derive(Debug, Clone)]
pub struct Rref {
    pub matrix: Matrix,
    pub rank: usize,
    pub pivots: Vec<usize>,
}

impl Matrix {
    pub fn zeros(field: &Field, rows: usize, cols: usize) -> Matrix {
        Matrix {
            field: field.clone(),
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(field: &Field, n: usize) -> Matrix {
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    pub fn from_rows(field: &Field, cols: usize, rows: &[Vec<Elem>]) -> Result<Matrix> {
        let mut m = Matrix::zeros(field, 0, cols);
        for r in rows {
            m.push_row(r)?;
        }
        Ok(m)
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> Elem {
        self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: Elem) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[Elem] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<Elem>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn push_row(&mut self, row: &[Elem]) -> Result<()> {
        if row.len() != self.cols {
            return Err(Error::Dimension(format!(
                "row of length {} in a matrix with {} columns",
                row.len(),
                self.cols
            )));
        }
        if let Some(&e) = row.iter().find(|&&e| !self.field.contains(e)) {
            return Err(Error::Invalid(format!(
                "{e} is not an element of {}",
                self.field
            )));
        }
        self.data.extend_from_slice(row);
        self.rows += 1;
        Ok(())
    }

    /// Submatrix of the given columns, in the given order.
    pub fn select_columns(&self, cols: &[usize]) -> Matrix {
        let mut m = Matrix::zeros(&self.field, self.rows, cols.len());
        for r in 0..self.rows {
            for (j, &c) in cols.iter().enumerate() {
                m.set(r, j, self.get(r, c));
            }
        }
        m
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(&self.field, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c));
            }
        }
        t
    }

    /// `v * self` for a row vector `v` of length `rows`.
    pub fn left_mul(&self, v: &[Elem]) -> Vec<Elem> {
        assert_eq!(v.len(), self.rows);
        let f = &self.field;
        let mut out = vec![0; self.cols];
        for (r, &a) in v.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (o, &b) in out.iter_mut().zip(self.row(r)) {
                *o = f.add(*o, f.mul(a, b));
            }
        }
        out
    }

    /// Reduced row-echelon form with leading ones. Zero rows are dropped from
    /// the returned matrix, so it has exactly `rank` rows.
    pub fn rref(&self) -> Rref {
        let f = &self.field;
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(pr) = (r..m.rows).find(|&i| m.get(i, c) != 0) else {
                continue;
            };
            m.swap_rows(r, pr);
            let inv = f.inv(m.get(r, c)).expect("pivot is nonzero");
            for j in c..m.cols {
                let v = f.mul(m.get(r, j), inv);
                m.set(r, j, v);
            }
            for i in 0..m.rows {
                if i == r {
                    continue;
                }
                let factor = m.get(i, c);
                if factor == 0 {
                    continue;
                }
                for j in c..m.cols {
                    let v = f.sub(m.get(i, j), f.mul(factor, m.get(r, j)));
                    m.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        m.data.truncate(r * m.cols);
        m.rows = r;
        Rref {
            matrix: m,
            rank: r,
            pivots,
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().rank
    }

    /// Basis (as rows) of `{x : self * x^T = 0}`.
    pub fn nullspace(&self) -> Matrix {
        let f = &self.field;
        let Rref {
            matrix: e, pivots, ..
        } = self.rref();
        let mut out = Matrix::zeros(f, 0, self.cols);
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        for free in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut v = vec![0; self.cols];
            v[free] = 1;
            for (r, &p) in pivots.iter().enumerate() {
                v[p] = f.neg(e.get(r, free));
            }
            out.push_row(&v).expect("width matches");
        }
        out
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}x{} over {}", self.rows, self.cols, self.field)?;
        for r in 0..self.rows {
            writeln!(f, "  {:?}", self.row(r))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Poly;

    #[test]
    fn identity_and_zero() {
        let f = Field::prime(3).unwrap();
        let id = Matrix::identity(&f, 4);
        let r = id.rref();
        assert_eq!(r.rank, 4);
        assert_eq!(r.matrix, id);
        let z = Matrix::zeros(&f, 3, 5);
        let r = z.rref();
        assert_eq!(r.rank, 0);
        assert_eq!(r.matrix.rows(), 0);
        assert_eq!(z.nullspace().rows(), 5);
    }

    #[test]
    fn rank_of_f8_generators() {
        let f2 = Field::prime(2).unwrap();
        let f8 = Field::extension(&f2, &Poly::new(&f2, vec![1, 1, 0, 1])).unwrap();
        // beta^2+beta+1 = 7, beta^2+1 = 5
        let m = Matrix::from_rows(&f8, 3, &[vec![7, 7, 5], vec![0, 5, 5]]).unwrap();
        assert_eq!(m.rank(), 2);
        let r = m.rref();
        assert_eq!(r.pivots, vec![0, 1]);
        let ns = m.nullspace();
        assert_eq!(ns.rows(), 1);
        assert!(
            m.left_mul(&[1, 0])
                .iter()
                .zip(ns.row(0))
                .fold(0, |acc, (&a, &b)| f8.add(acc, f8.mul(a, b)))
                == 0
        );
    }

    #[test]
    fn push_row_checks() {
        let f = Field::prime(2).unwrap();
        let mut m = Matrix::zeros(&f, 0, 3);
        assert!(m.push_row(&[1, 0]).is_err());
        assert!(m.push_row(&[1, 0, 2]).is_err());
        m.push_row(&[1, 0, 1]).unwrap();
        assert_eq!(m.rows(), 1);
    }
}
