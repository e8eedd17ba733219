use super::array::CodewordArray;
use crate::algebra::{Elem, Field, Poly};
use crate::codes::{LinearCode, Matrix};
use crate::error::{Error, Result};

/// A quasi-cyclic code of index `ell` and co-index `m` over `F_q`, given by
/// generators in `R^ell` with `R = F_q[x]/<x^m - 1>`.
///
/// The `t`-th entry of a generator is the `t`-th column of its array form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QCCode {
    field: Field,
    m: usize,
    ell: usize,
    generators: Vec<Vec<Poly>>,
}

impl QCCode {
    /// Entries are reduced modulo `x^m - 1`.
    pub fn new(field: &Field, m: usize, ell: usize, generators: Vec<Vec<Poly>>) -> Result<QCCode> {
        if m == 0 || ell == 0 {
            return Err(Error::Invalid("m and ell must be positive".into()));
        }
        let xm = Poly::x_pow_minus_one(field, m);
        let mut reduced = Vec::with_capacity(generators.len());
        for g in generators {
            if g.len() != ell {
                return Err(Error::Dimension(format!(
                    "generator with {} entries for index {ell}",
                    g.len()
                )));
            }
            let mut row = Vec::with_capacity(ell);
            for a in g {
                if a.field() != field {
                    return Err(Error::FieldMismatch(format!(
                        "generator entry over {}",
                        a.field()
                    )));
                }
                row.push(a.rem(&xm)?);
            }
            reduced.push(row);
        }
        Ok(QCCode {
            field: field.clone(),
            m,
            ell,
            generators: reduced,
        })
    }

    /// Each row, read as a column-major flattened array, becomes one generator.
    pub fn from_generator_matrix(m: usize, ell: usize, matrix: &Matrix) -> Result<QCCode> {
        let f = matrix.field();
        let mut gens = Vec::with_capacity(matrix.rows());
        for r in 0..matrix.rows() {
            let a = CodewordArray::unflatten(m, ell, matrix.row(r))?;
            gens.push((0..ell).map(|j| Poly::new(f, a.column(j))).collect());
        }
        QCCode::new(f, m, ell, gens)
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn ell(&self) -> usize {
        self.ell
    }

    pub fn length(&self) -> usize {
        self.m * self.ell
    }

    pub fn generators(&self) -> &[Vec<Poly>] {
        &self.generators
    }

    /// Flattened `x^t a(x)` for every generator `a` and `t < m`; spans the
    /// code over `F_q` (not reduced).
    pub fn spanning_matrix(&self) -> Matrix {
        let mut mat = Matrix::zeros(&self.field, 0, self.length());
        for g in &self.generators {
            let mut cols: Vec<Vec<Elem>> = g
                .iter()
                .map(|a| {
                    let mut c = a.coeffs().to_vec();
                    c.resize(self.m, 0);
                    c
                })
                .collect();
            for _ in 0..self.m {
                mat.push_row(&cols.concat()).expect("width m * ell");
                for c in &mut cols {
                    c.rotate_right(1);
                }
            }
        }
        mat
    }

    pub fn linear_code(&self) -> LinearCode {
        LinearCode::from_matrix(&self.spanning_matrix())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qc::shift_invariance_check;

    #[test]
    fn spans_shifts_of_generators() {
        let f2 = Field::prime(2).unwrap();
        let g = vec![Poly::new(&f2, vec![1, 1]), Poly::new(&f2, vec![1])];
        let c = QCCode::new(&f2, 7, 2, vec![g]).unwrap();
        let lc = c.linear_code();
        assert_eq!(lc.n(), 14);
        // (1 + x, 1) generates a free module of rank 1
        assert_eq!(lc.k(), 7);
        assert!(shift_invariance_check(lc.generator(), 2));
        let back = QCCode::from_generator_matrix(7, 2, lc.generator()).unwrap();
        assert_eq!(back.linear_code(), lc);
    }

    #[test]
    fn entries_reduced_mod_unity() {
        let f2 = Field::prime(2).unwrap();
        let g = vec![Poly::monomial(&f2, 1, 3)];
        let c = QCCode::new(&f2, 3, 1, vec![g]).unwrap();
        assert_eq!(c.generators()[0][0], Poly::one(&f2));
        assert!(QCCode::new(&f2, 3, 2, vec![vec![Poly::one(&f2)]]).is_err());
    }
}
