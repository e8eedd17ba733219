use crate::algebra::Elem;
use crate::codes::{LinearCode, Matrix};
use crate::error::{Error, Result};

/// An `m x ell` array over `F_q`: row `g` is the `g`-th block of `ell`
/// symbols, column `j` is the `j`-th length-`m` cyclic component.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CodewordArray {
    m: usize,
    ell: usize,
    /// Row-major.
    data: Vec<Elem>,
}

impl CodewordArray {
    pub fn zeros(m: usize, ell: usize) -> CodewordArray {
        CodewordArray {
            m,
            ell,
            data: vec![0; m * ell],
        }
    }

    pub fn from_rows(rows: &[Vec<Elem>]) -> Result<CodewordArray> {
        let m = rows.len();
        let ell = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != ell) {
            return Err(Error::Dimension("ragged array rows".into()));
        }
        Ok(CodewordArray {
            m,
            ell,
            data: rows.concat(),
        })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn ell(&self) -> usize {
        self.ell
    }

    pub fn get(&self, row: usize, col: usize) -> Elem {
        self.data[row * self.ell + col]
    }

    pub fn set(&mut self, row: usize, col: usize, v: Elem) {
        self.data[row * self.ell + col] = v;
    }

    pub fn row(&self, g: usize) -> &[Elem] {
        &self.data[g * self.ell..(g + 1) * self.ell]
    }

    pub fn column(&self, j: usize) -> Vec<Elem> {
        (0..self.m).map(|i| self.get(i, j)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    /// Column-major flattening: the columns one after another.
    pub fn flatten(&self) -> Vec<Elem> {
        (0..self.ell).flat_map(|j| self.column(j)).collect()
    }

    pub fn unflatten(m: usize, ell: usize, v: &[Elem]) -> Result<CodewordArray> {
        if v.len() != m * ell {
            return Err(Error::Dimension(format!(
                "vector of length {} is not an {m} x {ell} array",
                v.len()
            )));
        }
        let mut a = CodewordArray::zeros(m, ell);
        for j in 0..ell {
            for i in 0..m {
                a.set(i, j, v[j * m + i]);
            }
        }
        Ok(a)
    }

    /// Moves every row down by one, the last row wrapping to the top: the
    /// shift by `ell` positions of the row-by-row reading of the array.
    pub fn shifted(&self) -> CodewordArray {
        let mut out = CodewordArray::zeros(self.m, self.ell);
        for i in 0..self.m {
            for j in 0..self.ell {
                out.set((i + 1) % self.m, j, self.get(i, j));
            }
        }
        out
    }
}

/// Rotates each length-`m` block of a column-major flattened array by one:
/// the quasi-cyclic shift expressed on the flattened vector.
pub fn shift_flattened(v: &[Elem], ell: usize) -> Vec<Elem> {
    let m = v.len() / ell;
    let mut out = vec![0; v.len()];
    for j in 0..ell {
        for i in 0..m {
            out[j * m + (i + 1) % m] = v[j * m + i];
        }
    }
    out
}

/// Whether the row space of `matrix` (columns in flattened order) is closed
/// under the quasi-cyclic shift of index `ell`.
pub fn shift_invariance_check(matrix: &Matrix, ell: usize) -> bool {
    if ell == 0 || !matrix.cols().is_multiple_of(ell) {
        return false;
    }
    let code = LinearCode::from_matrix(matrix);
    (0..matrix.rows()).all(|r| code.contains(&shift_flattened(matrix.row(r), ell)))
}
