use serde::{Deserialize, Serialize};

use crate::algebra::{Elem, Field};
use crate::codes::{min_weight_codeword, CyclicCode, DistanceBudget, Strategy};
use crate::error::{Error, Result};
use crate::qc::{CodewordArray, ConstituentDecomposition};

/// Upper bound on the locality from the associated cyclic code `D`:
/// `d(D^perp) - 1`, which never exceeds `m - 1`.
///
/// When `D` is the whole space its dual is zero and no column parity exists;
/// the bound then falls back to `m - 1`.
pub fn locality_upper(dec: &ConstituentDecomposition, budget: &DistanceBudget) -> Result<usize> {
    let m = dec.m();
    if m < 2 {
        return Err(Error::Invalid("locality needs m >= 2".into()));
    }
    let dual = dec.associated_code()?.dual();
    if dual.is_zero() {
        return Ok(m - 1);
    }
    Ok(dual.linear_code().min_distance(budget)? - 1)
}

/// Column-wise repair: a minimum-weight word `h` of `D^perp` is a parity
/// check on every column of every codeword, and cyclic shifts of `h` cover
/// every row.
#[derive(Debug, Clone)]
pub struct LocalRecovery {
    field: Field,
    word: Vec<Elem>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Recovery {
    /// `(row, column)` of the erased symbol.
    pub coordinate: (usize, usize),
    /// Coordinates read to repair it, all in the same column.
    pub set: Vec<(usize, usize)>,
    pub recovered: Elem,
    pub actual: Elem,
}

impl Recovery {
    pub fn is_exact(&self) -> bool {
        self.recovered == self.actual
    }
}

impl LocalRecovery {
    pub fn new(dec: &ConstituentDecomposition, budget: &DistanceBudget) -> Result<LocalRecovery> {
        let dual: CyclicCode = dec.associated_code()?.dual();
        if dual.is_zero() {
            return Err(Error::Invalid(
                "the associated cyclic code is the full space; no column parity exists".into(),
            ));
        }
        let (_, word) = min_weight_codeword(&dual.linear_code(), Strategy::Auto, budget)?;
        Ok(LocalRecovery {
            field: dec.base_field().clone(),
            word,
        })
    }

    /// Size of every recovery set.
    pub fn set_size(&self) -> usize {
        self.word.iter().filter(|&&x| x != 0).count() - 1
    }

    /// A cyclic shift of the minimum-weight dual word that is nonzero at `row`.
    pub fn check_for_row(&self, row: usize) -> Vec<Elem> {
        let m = self.word.len();
        let p = self
            .word
            .iter()
            .position(|&x| x != 0)
            .expect("nonzero word");
        let mut h = self.word.clone();
        h.rotate_right((row + m - p) % m);
        h
    }

    /// Repairs `c[row][col]` from the other symbols of its column.
    pub fn recover(&self, c: &CodewordArray, (row, col): (usize, usize)) -> Result<Recovery> {
        let f = &self.field;
        let m = self.word.len();
        if c.m() != m || row >= m || col >= c.ell() {
            return Err(Error::Dimension(format!(
                "coordinate ({row}, {col}) in a {} x {} array",
                c.m(),
                c.ell()
            )));
        }
        let h = self.check_for_row(row);
        let mut acc = 0;
        let mut set = Vec::new();
        for (i, &hi) in h.iter().enumerate() {
            if i == row || hi == 0 {
                continue;
            }
            set.push((i, col));
            acc = f.add(acc, f.mul(hi, c.get(i, col)));
        }
        let recovered = f.neg(f.div(acc, h[row])?);
        Ok(Recovery {
            coordinate: (row, col),
            set,
            recovered,
            actual: c.get(row, col),
        })
    }
}

/// Repairs one coordinate of `codeword` and reports whether it matched.
pub fn recovery_check(
    dec: &ConstituentDecomposition,
    coordinate: (usize, usize),
    codeword: &CodewordArray,
    budget: &DistanceBudget,
) -> Result<Recovery> {
    LocalRecovery::new(dec, budget)?.recover(codeword, coordinate)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::factor_unity;
    use crate::codes::LinearCode;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;
    use std::sync::Arc;

    #[test]
    fn cyclic_case_recovers_every_symbol() {
        // ell = 1: the QC code is the cyclic code D itself
        let f3 = Field::prime(3).unwrap();
        let fact = Arc::new(factor_unity(&f3, 8).unwrap());
        let cons: Vec<LinearCode> = fact
            .factors
            .iter()
            .enumerate()
            .map(|(i, f)| {
                if i % 2 == 0 {
                    LinearCode::full(&f.field, 1)
                } else {
                    LinearCode::zero(&f.field, 1)
                }
            })
            .collect();
        let dec = ConstituentDecomposition::new(fact, 1, cons).unwrap();
        let b = DistanceBudget::default();
        let r = locality_upper(&dec, &b).unwrap();
        let lr = LocalRecovery::new(&dec, &b).unwrap();
        assert_eq!(lr.set_size(), r);
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..10 {
            let c = dec.random_codeword(&mut rng);
            for row in 0..8 {
                let rec = lr.recover(&c, (row, 0)).unwrap();
                assert!(rec.is_exact());
                assert_eq!(rec.set.len(), r);
            }
        }
    }

    #[test]
    fn full_space_falls_back_to_m_minus_one() {
        let f5 = Field::prime(5).unwrap();
        let fact = Arc::new(factor_unity(&f5, 11).unwrap());
        let cons = fact
            .factors
            .iter()
            .map(|f| LinearCode::full(&f.field, 2))
            .collect();
        let dec = ConstituentDecomposition::new(fact, 2, cons).unwrap();
        let b = DistanceBudget::default();
        assert_eq!(locality_upper(&dec, &b).unwrap(), 10);
        assert!(LocalRecovery::new(&dec, &b).is_err());
    }
}
