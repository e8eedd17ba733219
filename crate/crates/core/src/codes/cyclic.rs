use super::linear::LinearCode;
use crate::algebra::{Elem, Factorization, Field, Poly};
use crate::error::{Error, Result};

/// Cyclic code `<g(x)>` of length `m` over `F_q`, with `g | x^m - 1` monic.
/// `g = x^m - 1` is the zero code and `g = 1` the full space.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CyclicCode {
    m: usize,
    generator: Poly,
}

impl CyclicCode {
    pub fn new(g: &Poly, m: usize) -> Result<CyclicCode> {
        let f = g.field();
        let xm = Poly::x_pow_minus_one(f, m);
        if g.is_zero() || !g.divides(&xm) {
            return Err(Error::NotDivisor(g.to_string(), m as u64));
        }
        Ok(CyclicCode {
            m,
            generator: g.monic(),
        })
    }

    pub fn zero(field: &Field, m: usize) -> CyclicCode {
        CyclicCode {
            m,
            generator: Poly::x_pow_minus_one(field, m),
        }
    }

    pub fn full(field: &Field, m: usize) -> CyclicCode {
        CyclicCode {
            m,
            generator: Poly::one(field),
        }
    }

    pub fn field(&self) -> &Field {
        self.generator.field()
    }

    pub fn length(&self) -> usize {
        self.m
    }

    pub fn generator(&self) -> &Poly {
        &self.generator
    }

    pub fn dimension(&self) -> usize {
        self.m - self.generator.degree().expect("nonzero generator")
    }

    pub fn is_zero(&self) -> bool {
        self.dimension() == 0
    }

    /// `h(x) = (x^m - 1) / g(x)`
    pub fn check_polynomial(&self) -> Poly {
        let xm = Poly::x_pow_minus_one(self.field(), self.m);
        xm.div_rem(&self.generator).expect("nonzero generator").0
    }

    /// Rows are the coefficient vectors of `x^t g(x)`, `t < dim`.
    pub fn linear_code(&self) -> LinearCode {
        let f = self.field();
        let rows: Vec<Vec<Elem>> = (0..self.dimension())
            .map(|t| {
                let mut row = vec![0; self.m];
                for (i, &c) in self.generator.coeffs().iter().enumerate() {
                    row[t + i] = c;
                }
                row
            })
            .collect();
        LinearCode::new(f, self.m, &rows).expect("rows have length m")
    }

    /// Generated by the monic reciprocal of the check polynomial.
    pub fn dual(&self) -> CyclicCode {
        CyclicCode {
            m: self.m,
            generator: self.check_polynomial().reciprocal().monic(),
        }
    }

    /// Whether the word, read as `c_0 + c_1 x + ...`, is a multiple of `g`.
    pub fn contains(&self, word: &[Elem]) -> bool {
        word.len() == self.m
            && Poly::new(self.field(), word.to_vec())
                .rem(&self.generator)
                .map(|r| r.is_zero())
                .unwrap_or(false)
    }
}

/// The cyclic code `D_I` whose dual has basic zero set
/// `{beta^{-u_i} : i in I}`: the dual of the cyclic code generated by the
/// product of the minimal polynomials of `beta^{-u_i}`.
///
/// `indices` are factor indices into `fact`.
pub fn subcode_from_bz(indices: &[usize], fact: &Factorization) -> Result<CyclicCode> {
    if indices.is_empty() {
        return Err(Error::Invalid("empty index set".into()));
    }
    let mut g = Poly::one(&fact.base);
    let mut used = Vec::new();
    for &i in indices {
        let f = fact
            .factors
            .get(i)
            .ok_or_else(|| Error::Invalid(format!("no factor with index {i}")))?;
        let j = fact.index_of_inverse(f.representative());
        if used.contains(&j) {
            return Err(Error::Invalid(format!("factor index {i} repeated")));
        }
        used.push(j);
        g = g.mul(&fact.factors[j].poly);
    }
    Ok(CyclicCode::new(&g, fact.m as usize)?.dual())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::factor_unity;
    use crate::codes::DistanceBudget;

    fn f2() -> Field {
        Field::prime(2).unwrap()
    }

    #[test]
    fn trivial_generators() {
        let f = f2();
        let full = CyclicCode::new(&Poly::one(&f), 7).unwrap();
        assert_eq!(full.linear_code(), LinearCode::full(&f, 7));
        let rep_g = Poly::x_pow_minus_one(&f, 7)
            .div_rem(&Poly::new(&f, vec![1, 1]))
            .unwrap()
            .0;
        let rep = CyclicCode::new(&rep_g, 7).unwrap();
        assert_eq!(rep.linear_code(), LinearCode::repetition(&f, 7));
        assert!(CyclicCode::new(&Poly::new(&f, vec![1, 0, 1]), 7).is_err());
    }

    #[test]
    fn d1_of_length_seven() {
        let f = f2();
        let d1 = CyclicCode::new(&Poly::new(&f, vec![1, 1, 1, 0, 1]), 7).unwrap();
        assert_eq!(d1.dimension(), 3);
        assert_eq!(
            d1.linear_code()
                .min_distance(&DistanceBudget::default())
                .unwrap(),
            4
        );
    }

    #[test]
    fn duals() {
        let f = f2();
        let c = CyclicCode::new(&Poly::new(&f, vec![1, 1]), 7).unwrap();
        assert_eq!(c.dual().generator().coeffs(), &[1; 7]);
        let rep = c.dual().linear_code();
        assert_eq!(rep.min_distance(&DistanceBudget::default()).unwrap(), 7);
        assert_eq!(c.dual().linear_code(), c.linear_code().dual());

        let full = CyclicCode::full(&f, 7);
        assert!(full.dual().is_zero());
        assert_eq!(full.dual().generator(), &Poly::x_pow_minus_one(&f, 7));

        // reciprocal of (x^7 - 1)/(x^3 + x^2 + 1) is x^4 + x^2 + x + 1
        let d1_dual = CyclicCode::new(&Poly::new(&f, vec![1, 0, 1, 1]), 7).unwrap();
        assert_eq!(d1_dual.dual().generator().coeffs(), &[1, 1, 1, 0, 1]);
        assert_eq!(d1_dual.dual().dual(), d1_dual);
    }

    #[test]
    fn cyclic_dual_agrees_with_linear_dual() {
        for (q, m) in [(2u64, 7u64), (2, 15), (3, 8), (5, 11), (4, 5)] {
            let fq = Field::galois(q).unwrap();
            let fact = factor_unity(&fq, m).unwrap();
            // every product of a subset of factors
            for mask in 0u32..(1 << fact.len()) {
                let g = fact
                    .factors
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask >> i & 1 == 1)
                    .fold(Poly::one(&fq), |acc, (_, f)| acc.mul(&f.poly));
                let c = CyclicCode::new(&g, m as usize).unwrap();
                assert_eq!(c.dual().linear_code(), c.linear_code().dual());
                assert_eq!(c.linear_code().k(), c.dimension());
            }
        }
    }

    #[test]
    fn shift_invariance_of_cyclic_codes() {
        let f3 = Field::prime(3).unwrap();
        let fact = factor_unity(&f3, 8).unwrap();
        for fa in &fact.factors {
            let c = CyclicCode::new(&fa.poly, 8).unwrap();
            let lc = c.linear_code();
            for row in lc.generator().row_vecs() {
                let mut shifted = row.clone();
                shifted.rotate_right(1);
                assert!(lc.contains(&shifted));
                assert!(c.contains(&shifted));
            }
        }
    }

    #[test]
    fn bz_subcodes_length_seven() {
        let f = f2();
        let fact = factor_unity(&f, 7).unwrap();
        // factor indices: 0 -> u=1, 1 -> u=3, 2 -> u=0
        let d12 = subcode_from_bz(&[0, 1], &fact).unwrap();
        assert_eq!(d12.generator().coeffs(), &[1, 1]);
        let d1 = subcode_from_bz(&[0], &fact).unwrap();
        assert_eq!(d1.generator().coeffs(), &[1, 1, 1, 0, 1]);
        let d2 = subcode_from_bz(&[1], &fact).unwrap();
        assert_eq!(d2.generator().coeffs(), &[1, 0, 1, 1, 1]);
        assert!(subcode_from_bz(&[], &fact).is_err());
        assert!(d1.linear_code().is_subcode_of(&d12.linear_code()));
    }

    #[test]
    fn bz_subcodes_length_eleven() {
        let f5 = Field::prime(5).unwrap();
        let fact = factor_unity(&f5, 11).unwrap();
        let all = subcode_from_bz(&[0, 1, 2], &fact).unwrap();
        assert_eq!(all.generator(), &Poly::one(&f5));
        let b = DistanceBudget::default();
        assert_eq!(all.linear_code().min_distance(&b).unwrap(), 1);
    }
}
