use std::sync::Arc;

use rand::Rng;

use super::array::CodewordArray;
use super::code::QCCode;
use crate::algebra::{factor_unity, Elem, Factorization, Field, Poly};
use crate::codes::{subcode_from_bz, CyclicCode, LinearCode, Matrix};
use crate::error::{Error, Result};

/// A quasi-cyclic code described by its constituents: one length-`ell`
/// linear code `C_i` over `F_q[x]/<b_i(x)>` for every factor `b_i` of
/// `x^m - 1`, aligned with `factorization().factors`.
#[derive(Debug, Clone)]
pub struct ConstituentDecomposition {
    fact: Arc<Factorization>,
    ell: usize,
    constituents: Vec<LinearCode>,
}

/// One of the cyclic codes `D_I`: `labels` are 1-based positions in the
/// constituent order it was built from, `factors` the matching factor
/// indices (ascending).
#[derive(Debug, Clone)]
pub struct AssociatedCode {
    pub labels: Vec<usize>,
    pub factors: Vec<usize>,
    pub code: CyclicCode,
}

impl ConstituentDecomposition {
    pub fn new(
        fact: Arc<Factorization>,
        ell: usize,
        constituents: Vec<LinearCode>,
    ) -> Result<ConstituentDecomposition> {
        if constituents.len() != fact.len() {
            return Err(Error::Dimension(format!(
                "{} constituents for {} factors",
                constituents.len(),
                fact.len()
            )));
        }
        for (i, (c, f)) in constituents.iter().zip(&fact.factors).enumerate() {
            if c.field() != &f.field {
                return Err(Error::FieldMismatch(format!(
                    "constituent {i} is over {}, factor field is {}",
                    c.field(),
                    f.field
                )));
            }
            if c.n() != ell {
                return Err(Error::Dimension(format!(
                    "constituent {i} has length {}, expected {ell}",
                    c.n()
                )));
            }
        }
        Ok(ConstituentDecomposition {
            fact,
            ell,
            constituents,
        })
    }

    pub fn zero(fact: Arc<Factorization>, ell: usize) -> ConstituentDecomposition {
        let constituents = fact
            .factors
            .iter()
            .map(|f| LinearCode::zero(&f.field, ell))
            .collect();
        ConstituentDecomposition {
            fact,
            ell,
            constituents,
        }
    }

    pub fn factorization(&self) -> &Arc<Factorization> {
        &self.fact
    }

    pub fn base_field(&self) -> &Field {
        &self.fact.base
    }

    pub fn m(&self) -> usize {
        self.fact.m as usize
    }

    pub fn ell(&self) -> usize {
        self.ell
    }

    pub fn length(&self) -> usize {
        self.m() * self.ell
    }

    pub fn constituents(&self) -> &[LinearCode] {
        &self.constituents
    }

    /// Factor indices with a nonzero constituent, ascending.
    pub fn nonzero_indices(&self) -> Vec<usize> {
        (0..self.constituents.len())
            .filter(|&i| !self.constituents[i].is_zero())
            .collect()
    }

    /// `sum k_i deg(b_i)`.
    pub fn dimension(&self) -> usize {
        self.constituents
            .iter()
            .zip(&self.fact.factors)
            .map(|(c, f)| c.k() * f.degree())
            .sum()
    }

    /// Whether both describe the same code (same factorization, equal
    /// constituent row spaces).
    pub fn same_code(&self, other: &ConstituentDecomposition) -> bool {
        self.ell == other.ell
            && self.fact.m == other.fact.m
            && self.fact.base == other.fact.base
            && self.constituents == other.constituents
    }

    /// Array with rows `c_g = sum_i Tr(lambda_i * gamma_i^{-g})`, where
    /// `gamma_i` is the class of `x` in the `i`-th factor field.
    pub fn trace_codeword(&self, lambda: &[Vec<Elem>]) -> Result<CodewordArray> {
        if lambda.len() != self.constituents.len() {
            return Err(Error::Dimension(format!(
                "{} constituent words for {} factors",
                lambda.len(),
                self.constituents.len()
            )));
        }
        for (i, (l, c)) in lambda.iter().zip(&self.constituents).enumerate() {
            if !c.contains(l) {
                return Err(Error::NotInCode(i));
            }
        }
        let base = &self.fact.base;
        let m = self.m();
        let mut out = CodewordArray::zeros(m, self.ell);
        for (i, l) in lambda.iter().enumerate() {
            if l.iter().all(|&x| x == 0) {
                continue;
            }
            let k = &self.fact.factors[i].field;
            let gamma_inv = k.inv(k.generator())?;
            let mut scale = 1;
            for g in 0..m {
                for (j, &x) in l.iter().enumerate() {
                    let t = k.trace(k.mul(x, scale), base)?;
                    out.set(g, j, base.add(out.get(g, j), t));
                }
                scale = k.mul(scale, gamma_inv);
            }
        }
        Ok(out)
    }

    /// Flattened trace codewords of `gamma_i^t v` for every RREF basis row
    /// `v` of every `C_i` and `t < deg(b_i)`; the rank is checked against
    /// [`ConstituentDecomposition::dimension`].
    pub fn generator_matrix(&self) -> Result<Matrix> {
        let base = &self.fact.base;
        let mut mat = Matrix::zeros(base, 0, self.length());
        let mut lambda: Vec<Vec<Elem>> = vec![vec![0; self.ell]; self.constituents.len()];
        for (i, c) in self.constituents.iter().enumerate() {
            let k = c.field();
            for row in c.generator().row_vecs() {
                let mut scale = 1;
                for _ in 0..self.fact.factors[i].degree() {
                    lambda[i] = row.iter().map(|&x| k.mul(x, scale)).collect();
                    mat.push_row(&self.trace_codeword(&lambda)?.flatten())?;
                    scale = k.mul(scale, k.generator());
                }
            }
            lambda[i] = vec![0; self.ell];
        }
        let rank = mat.rank();
        if rank != self.dimension() {
            return Err(Error::Internal(format!(
                "generator matrix has rank {rank}, expected {}",
                self.dimension()
            )));
        }
        Ok(mat)
    }

    pub fn linear_code(&self) -> Result<LinearCode> {
        Ok(LinearCode::from_matrix(&self.generator_matrix()?))
    }

    pub fn to_qc_code(&self) -> Result<QCCode> {
        QCCode::from_generator_matrix(self.m(), self.ell, &self.generator_matrix()?)
    }

    /// Trace codeword of independent uniform constituent codewords, which is
    /// uniform over the code.
    pub fn random_codeword<R: Rng + ?Sized>(&self, rng: &mut R) -> CodewordArray {
        let lambda: Vec<Vec<Elem>> = self
            .constituents
            .iter()
            .map(|c| c.random_codeword(rng))
            .collect();
        self.trace_codeword(&lambda)
            .expect("constituent codewords are valid")
    }

    /// The cyclic code `D` containing every column of every codeword:
    /// `D_I` for the set of all nonzero constituents.
    pub fn associated_code(&self) -> Result<CyclicCode> {
        let nz = self.nonzero_indices();
        if nz.is_empty() {
            return Err(Error::ZeroCode);
        }
        subcode_from_bz(&nz, &self.fact)
    }

    /// `D_I` for every nonempty `I`, where `I` ranges over subsets of
    /// positions in `order` (a list of nonzero factor indices), listed by
    /// size and then lexicographically. The last entry is `D`.
    pub fn associated_cyclic_codes(&self, order: &[usize]) -> Result<Vec<AssociatedCode>> {
        if order.is_empty() {
            return Err(Error::ZeroCode);
        }
        let h = order.len();
        if h > 16 {
            return Err(Error::Budget(format!("2^{h} subsets of constituents")));
        }
        let mut masks: Vec<u32> = (1..1u32 << h).collect();
        masks.sort_by_key(|&s| {
            let bits: Vec<usize> = (0..h).filter(|b| s >> b & 1 == 1).collect();
            (bits.len(), bits)
        });
        masks
            .into_iter()
            .map(|s| {
                let labels: Vec<usize> =
                    (0..h).filter(|b| s >> b & 1 == 1).map(|b| b + 1).collect();
                let mut factors: Vec<usize> = labels.iter().map(|&l| order[l - 1]).collect();
                factors.sort_unstable();
                let code = subcode_from_bz(&factors, &self.fact)?;
                Ok(AssociatedCode {
                    labels,
                    factors,
                    code,
                })
            })
            .collect()
    }
}

/// `dim C = sum k_i deg(b_i)`.
pub fn dimension_of(dec: &ConstituentDecomposition) -> usize {
    dec.dimension()
}

/// The constituents of `code`: for each factor `b_i`, the span over
/// `F_q[x]/<b_i(x)>` of the generators with every entry reduced mod `b_i`
/// (the evaluation at `beta^{u_i}`, since the class of `x` plays that root).
pub fn evaluate_constituents(
    code: &QCCode,
    fact: &Arc<Factorization>,
) -> Result<ConstituentDecomposition> {
    if code.field() != &fact.base || code.m() as u64 != fact.m {
        return Err(Error::FieldMismatch(
            "code and factorization disagree on q or m".into(),
        ));
    }
    let mut constituents = Vec::with_capacity(fact.len());
    for f in &fact.factors {
        let rows: Vec<Vec<Elem>> = code
            .generators()
            .iter()
            .map(|g| evaluate_tuple(g, &f.poly, &f.field))
            .collect::<Result<_>>()?;
        constituents.push(LinearCode::new(&f.field, code.ell(), &rows)?);
    }
    ConstituentDecomposition::new(fact.clone(), code.ell(), constituents)
}

/// Factors `x^m - 1` and evaluates.
pub fn decompose(code: &QCCode) -> Result<ConstituentDecomposition> {
    let fact = Arc::new(factor_unity(code.field(), code.m() as u64)?);
    evaluate_constituents(code, &fact)
}

fn evaluate_tuple(g: &[Poly], modulus: &Poly, k: &Field) -> Result<Vec<Elem>> {
    g.iter()
        .map(|a| Ok(k.from_coeffs(a.rem(modulus)?.coeffs())))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qc::shift_invariance_check;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn f2() -> Field {
        Field::prime(2).unwrap()
    }

    fn fact(q: u64, m: u64) -> Arc<Factorization> {
        Arc::new(factor_unity(&Field::galois(q).unwrap(), m).unwrap())
    }

    /// The [21, 15] code over F_2 with constituents <(b^2+b+1, b^2+b+1,
    /// b^2+1), (0, b^2+1, b^2+1)>, F_8^3 and {0}.
    fn almost_optimal() -> ConstituentDecomposition {
        let fa = fact(2, 7);
        let k1 = &fa.factors[0].field;
        let k2 = &fa.factors[1].field;
        let c1 = LinearCode::new(k1, 3, &[vec![7, 7, 5], vec![0, 5, 5]]).unwrap();
        let c2 = LinearCode::full(k2, 3);
        let c3 = LinearCode::zero(&fa.factors[2].field, 3);
        ConstituentDecomposition::new(fa, 3, vec![c1, c2, c3]).unwrap()
    }

    #[test]
    fn dimension_and_generator_matrix() {
        let dec = almost_optimal();
        assert_eq!(dec.dimension(), 15);
        let g = dec.generator_matrix().unwrap();
        assert_eq!((g.rows(), g.cols(), g.rank()), (15, 21, 15));
        assert!(shift_invariance_check(&g, 3));
        let zero = ConstituentDecomposition::zero(fact(2, 7), 3);
        assert_eq!(zero.dimension(), 0);
        assert_eq!(zero.generator_matrix().unwrap().rows(), 0);
    }

    #[test]
    #[allow(clippy::needless_range_loop)]
    fn trace_rows() {
        let dec = almost_optimal();
        let zero: Vec<Vec<Elem>> = vec![vec![0; 3]; 3];
        assert!(dec.trace_codeword(&zero).unwrap().is_zero());
        let lambda = vec![vec![7, 7, 5], vec![1, 2, 3], vec![0; 3]];
        let a = dec.trace_codeword(&lambda).unwrap();
        let f = dec.base_field();
        for j in 0..3 {
            let expect = (0..2).fold(0, |acc, i| {
                let k = &dec.factorization().factors[i].field;
                f.add(acc, k.trace(lambda[i][j], f).unwrap())
            });
            assert_eq!(a.get(0, j), expect);
        }
        let bad = vec![vec![1, 0, 0], vec![0; 3], vec![0; 3]];
        assert_eq!(dec.trace_codeword(&bad).unwrap_err(), Error::NotInCode(0));
    }

    #[test]
    fn round_trip_through_qc_code() {
        let dec = almost_optimal();
        let back = evaluate_constituents(&dec.to_qc_code().unwrap(), dec.factorization()).unwrap();
        assert!(back.same_code(&dec));
    }

    #[test]
    fn columns_lie_in_associated_code() {
        let dec = almost_optimal();
        let d = dec.associated_code().unwrap();
        assert_eq!(d.generator().coeffs(), &[1, 1]);
        // D is generated by the product of the factors with zero constituent
        let direct = CyclicCode::new(&dec.factorization().factors[2].poly, 7).unwrap();
        assert_eq!(d, direct);
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..20 {
            let c = dec.random_codeword(&mut rng);
            for j in 0..3 {
                assert!(d.contains(&c.column(j)));
            }
        }
    }

    #[test]
    fn zero_constituent_at_x_minus_one() {
        let f = f2();
        let g = vec![Poly::new(&f, vec![1, 1]), Poly::zero(&f), Poly::zero(&f)];
        let code = QCCode::new(&f, 7, 3, vec![g]).unwrap();
        let dec = decompose(&code).unwrap();
        assert!(dec.constituents()[2].is_zero());
        assert_eq!(dec.nonzero_indices(), vec![0, 1]);
        // b_j divides every entry exactly when C_j is zero
        for (i, fa) in dec.factorization().factors.iter().enumerate() {
            let divides = code.generators()[0].iter().all(|a| fa.poly.divides(a));
            assert_eq!(divides, dec.constituents()[i].is_zero());
        }
    }

    #[test]
    fn evaluation_matches_powering_in_splitting_field() {
        let fa = fact(2, 7);
        let f = f2();
        let split = &fa.splitting;
        let big = &split.field;
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..30 {
            let g: Vec<Poly> = (0..2)
                .map(|_| Poly::new(&f, (0..7).map(|_| rng.gen_range(0..2)).collect()))
                .collect();
            let code = QCCode::new(&f, 7, 2, vec![g.clone()]).unwrap();
            let dec = evaluate_constituents(&code, &fa).unwrap();
            for (i, factor) in fa.factors.iter().enumerate() {
                let root = big.pow(split.beta, factor.representative());
                let row: Vec<Elem> = g
                    .iter()
                    .map(|a| Poly::new(big, a.coeffs().to_vec()).eval(root))
                    .collect();
                // image in the splitting field of the constituent's generator
                let embed = |x: Elem| -> Elem {
                    factor
                        .field
                        .coeffs(x)
                        .iter()
                        .enumerate()
                        .fold(0, |acc, (t, &c)| {
                            big.add(acc, big.mul(c, big.pow(root, t as u64)))
                        })
                };
                let c = &dec.constituents()[i];
                if row.iter().all(|&x| x == 0) {
                    assert!(c.is_zero());
                } else {
                    assert_eq!(c.k(), 1);
                    let v = c.generator().row(0);
                    // row is a scalar multiple of the embedded basis row
                    let p = v.iter().position(|&x| x != 0).unwrap();
                    let s = big.div(row[p], embed(v[p])).unwrap();
                    for (x, &y) in v.iter().zip(&row) {
                        assert_eq!(big.mul(s, embed(*x)), y);
                    }
                }
            }
        }
    }

    #[test]
    fn trace_codewords_equal_crt_code() {
        // every decomposition with m = 7, ell = 3 and one-dimensional
        // constituents given by a random row
        let fa = fact(2, 7);
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..10 {
            let cons: Vec<LinearCode> = fa
                .factors
                .iter()
                .map(|f| {
                    let q = f.field.order();
                    let row: Vec<Elem> = (0..3).map(|_| rng.gen_range(0..q)).collect();
                    LinearCode::new(&f.field, 3, &[row]).unwrap()
                })
                .collect();
            let dec = ConstituentDecomposition::new(fa.clone(), 3, cons).unwrap();
            let lc = dec.linear_code().unwrap();
            // all trace codewords, enumerated over every lambda
            let all: Vec<Vec<Vec<Elem>>> = dec
                .constituents()
                .iter()
                .map(|c| {
                    if c.is_zero() {
                        return vec![vec![0; 3]];
                    }
                    let k = c.field();
                    k.elements().map(|s| c.encode(&[s])).collect()
                })
                .collect();
            let mut count = 0;
            let mut seen = std::collections::HashSet::new();
            for a in &all[0] {
                for b in &all[1] {
                    for c in &all[2] {
                        let w = dec
                            .trace_codeword(&[a.clone(), b.clone(), c.clone()])
                            .unwrap()
                            .flatten();
                        assert!(lc.contains(&w));
                        seen.insert(w);
                        count += 1;
                    }
                }
            }
            // the trace map is injective, so the sets have equal size
            assert_eq!(seen.len(), count);
            assert_eq!(count as u64, 2u64.pow(lc.k() as u32));
        }
    }

    #[test]
    fn associated_codes_length_seven() {
        let dec = almost_optimal();
        let codes = dec.associated_cyclic_codes(&[0, 1]).unwrap();
        let labels: Vec<_> = codes.iter().map(|a| a.labels.clone()).collect();
        assert_eq!(labels, vec![vec![1], vec![2], vec![1, 2]]);
        assert_eq!(codes[0].code.generator().coeffs(), &[1, 1, 1, 0, 1]);
        assert_eq!(codes[1].code.generator().coeffs(), &[1, 0, 1, 1, 1]);
        assert_eq!(codes[2].code.generator().coeffs(), &[1, 1]);
        assert!(dec.associated_cyclic_codes(&[]).is_err());
    }
}
