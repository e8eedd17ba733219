use rand::Rng;

use super::distance::{self, DistanceBudget, Strategy};
use super::matrix::Matrix;
use crate::algebra::{Elem, Field};
use crate::error::Result;

/// A linear `[n, k]` code over `field`. The generator is kept in reduced
/// row-echelon form without zero rows, so two codes are equal exactly when
/// their generators are.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearCode {
    field: Field,
    n: usize,
    generator: Matrix,
    pivots: Vec<usize>,
}

impl LinearCode {
    /// Code spanned by `rows` (which may be dependent).
    pub fn new(field: &Field, n: usize, rows: &[Vec<Elem>]) -> Result<LinearCode> {
        Ok(LinearCode::from_matrix(&Matrix::from_rows(field, n, rows)?))
    }

    pub fn from_matrix(m: &Matrix) -> LinearCode {
        let r = m.rref();
        LinearCode {
            field: m.field().clone(),
            n: m.cols(),
            generator: r.matrix,
            pivots: r.pivots,
        }
    }

    pub fn zero(field: &Field, n: usize) -> LinearCode {
        LinearCode::from_matrix(&Matrix::zeros(field, 0, n))
    }

    pub fn full(field: &Field, n: usize) -> LinearCode {
        LinearCode::from_matrix(&Matrix::identity(field, n))
    }

    /// `<(1, 1, ..., 1)>`
    pub fn repetition(field: &Field, n: usize) -> LinearCode {
        LinearCode::new(field, n, &[vec![1; n]]).expect("valid row")
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.generator.rows()
    }

    pub fn is_zero(&self) -> bool {
        self.k() == 0
    }

    /// RREF generator matrix, `k x n`.
    pub fn generator(&self) -> &Matrix {
        &self.generator
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn dual(&self) -> LinearCode {
        LinearCode::from_matrix(&self.generator.nullspace())
    }

    /// Generator of the dual code, `(n - k) x n`.
    pub fn parity_check(&self) -> Matrix {
        self.dual().generator
    }

    pub fn encode(&self, message: &[Elem]) -> Vec<Elem> {
        self.generator.left_mul(message)
    }

    /// Membership by reduction against the RREF basis.
    pub fn contains(&self, v: &[Elem]) -> bool {
        if v.len() != self.n {
            return false;
        }
        let f = &self.field;
        let mut r = v.to_vec();
        for (i, &p) in self.pivots.iter().enumerate() {
            let c = r[p];
            if c == 0 {
                continue;
            }
            for (x, &g) in r.iter_mut().zip(self.generator.row(i)) {
                *x = f.sub(*x, f.mul(c, g));
            }
        }
        r.iter().all(|&x| x == 0)
    }

    pub fn is_subcode_of(&self, other: &LinearCode) -> bool {
        self.field == other.field
            && self.n == other.n
            && (0..self.k()).all(|i| other.contains(self.generator.row(i)))
    }

    pub fn random_codeword<R: Rng + ?Sized>(&self, rng: &mut R) -> Vec<Elem> {
        let q = self.field.order();
        let msg: Vec<Elem> = (0..self.k()).map(|_| rng.gen_range(0..q)).collect();
        self.encode(&msg)
    }

    pub fn min_distance(&self, budget: &DistanceBudget) -> Result<usize> {
        distance::min_distance(self, Strategy::Auto, budget)
    }
}

/// Symbol weight.
pub fn weight(v: &[Elem]) -> usize {
    v.iter().filter(|&&x| x != 0).count()
}
