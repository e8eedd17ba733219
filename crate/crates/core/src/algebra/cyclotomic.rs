//! Cyclotomic cosets and the factorization of `x^m - 1` over `F_q`.

use serde::Serialize;

use super::field::{Elem, Field};
use super::poly::{find_irreducible, Poly};
use crate::error::{Error, Result};

/// `{u q^t mod m}`, represented by its smallest member.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CyclotomicCoset {
    pub modulus: u64,
    pub representative: u64,
    /// Sorted ascending.
    pub members: Vec<u64>,
}

impl CyclotomicCoset {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, u: u64) -> bool {
        self.members.binary_search(&(u % self.modulus)).is_ok()
    }
}

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

fn check_coprime(m: u64, q: u64) -> Result<()> {
    if m == 0 || gcd(m, q) != 1 {
        return Err(Error::NotCoprime { m, q });
    }
    Ok(())
}

/// Least `w >= 1` with `q^w = 1 mod m`.
pub fn multiplicative_order(q: u64, m: u64) -> Result<u32> {
    check_coprime(m, q)?;
    if m == 1 {
        return Ok(1);
    }
    let mut w = 1;
    let mut x = q % m;
    while x != 1 {
        x = x * (q % m) % m;
        w += 1;
    }
    Ok(w)
}

/// The `q`-cyclotomic cosets modulo `m`, sorted by representative.
pub fn cyclotomic_cosets(m: u64, q: u64) -> Result<Vec<CyclotomicCoset>> {
    check_coprime(m, q)?;
    let mut seen = vec![false; m as usize];
    let mut out = Vec::new();
    for u in 0..m {
        if seen[u as usize] {
            continue;
        }
        let mut members = Vec::new();
        let mut x = u;
        while !seen[x as usize] {
            seen[x as usize] = true;
            members.push(x);
            x = x * (q % m) % m;
        }
        members.sort_unstable();
        out.push(CyclotomicCoset {
            modulus: m,
            representative: u,
            members,
        });
    }
    Ok(out)
}

/// `F_{q^w}` with `w = ord_m(q)` and a primitive `m`-th root of unity `beta`.
///
/// The modulus is the smallest irreducible of degree `w` over `F_q`, and
/// `beta = g^{(q^w - 1)/m}` for the smallest primitive element `g`: the first
/// power of `g` whose order is exactly `m`.
#[derive(Debug, Clone)]
pub struct SplittingField {
    pub field: Field,
    pub beta: Elem,
    pub m: u64,
}

impl SplittingField {
    pub fn new(base: &Field, m: u64) -> Result<SplittingField> {
        let q = base.order() as u64;
        let w = multiplicative_order(q, m)?;
        let field = if w == 1 {
            base.clone()
        } else {
            Field::extension(base, &find_irreducible(base, w as usize))?
        };
        let n = field.order() as u64 - 1;
        let g = field.primitive_element();
        let beta = field.pow(g, n / m);
        if m > 1 && field.element_order(beta) != m {
            return Err(Error::Internal(format!(
                "no element of order {m} in {field}"
            )));
        }
        Ok(SplittingField { field, beta, m })
    }

    /// `prod_{t in U} (x - beta^t)` for the coset `U`, descended to `base`.
    pub fn minimal_polynomial(&self, coset: &CyclotomicCoset, base: &Field) -> Result<Poly> {
        let f = &self.field;
        let mut acc = Poly::one(f);
        for &t in &coset.members {
            let root = f.pow(self.beta, t);
            acc = acc.mul(&Poly::new(f, vec![f.neg(root), 1]));
        }
        acc.descend(base)
    }
}

/// Minimal polynomial over `F_q` of `beta^u`, where `beta` is the primitive
/// `m`-th root of unity fixed by [`SplittingField::new`].
pub fn minimal_polynomial(base: &Field, m: u64, u: u64) -> Result<Poly> {
    let split = SplittingField::new(base, m)?;
    let cosets = cyclotomic_cosets(m, base.order() as u64)?;
    let coset = cosets
        .iter()
        .find(|c| c.contains(u))
        .expect("cosets partition Z/m");
    split.minimal_polynomial(coset, base)
}

/// One irreducible factor `b_i(x)` of `x^m - 1` with its coset, and the field
/// `F_q[x]/<b_i(x)>` in which the class of `x` plays the role of
/// `beta^{u_i}`.
#[derive(Debug, Clone)]
pub struct Factor {
    pub poly: Poly,
    pub coset: CyclotomicCoset,
    pub field: Field,
}

impl Factor {
    pub fn representative(&self) -> u64 {
        self.coset.representative
    }

    pub fn degree(&self) -> usize {
        self.coset.len()
    }
}

/// `x^m - 1 = b_1(x) ... b_s(x) b_{s+1}(x)` over `F_q`, one factor per
/// cyclotomic coset, ordered by coset representative except that `x - 1`
/// (representative 0) comes last.
#[derive(Debug, Clone)]
pub struct Factorization {
    pub m: u64,
    pub base: Field,
    pub factors: Vec<Factor>,
    pub splitting: SplittingField,
}

impl Factorization {
    pub fn q(&self) -> u64 {
        self.base.order() as u64
    }

    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    /// Index of the factor whose coset contains `u mod m`.
    pub fn index_of(&self, u: u64) -> usize {
        self.factors
            .iter()
            .position(|f| f.coset.contains(u % self.m))
            .expect("cosets partition Z/m")
    }

    /// Index of the factor that vanishes at `beta^{-u}`.
    pub fn index_of_inverse(&self, u: u64) -> usize {
        self.index_of((self.m - u % self.m) % self.m)
    }

    pub fn product(&self) -> Poly {
        self.factors
            .iter()
            .fold(Poly::one(&self.base), |acc, f| acc.mul(&f.poly))
    }
}

pub fn factor_unity(base: &Field, m: u64) -> Result<Factorization> {
    let q = base.order() as u64;
    let cosets = cyclotomic_cosets(m, q)?;
    let splitting = SplittingField::new(base, m)?;
    let mut factors = Vec::with_capacity(cosets.len());
    for coset in cosets {
        let poly = splitting.minimal_polynomial(&coset, base)?;
        if poly.degree() != Some(coset.len()) || !poly.is_irreducible() {
            return Err(Error::Internal(format!(
                "minimal polynomial {poly} of coset {:?} is inconsistent",
                coset.members
            )));
        }
        let field = Field::extension(base, &poly)?;
        factors.push(Factor { poly, coset, field });
    }
    factors.rotate_left(1);
    let fact = Factorization {
        m,
        base: base.clone(),
        factors,
        splitting,
    };
    if fact.product() != Poly::x_pow_minus_one(base, m as usize) {
        return Err(Error::Internal(
            "factor product differs from x^m - 1".into(),
        ));
    }
    Ok(fact)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn members(c: &[CyclotomicCoset]) -> Vec<Vec<u64>> {
        c.iter().map(|c| c.members.clone()).collect()
    }

    #[test]
    fn cosets_mod_7_and_11() {
        assert_eq!(
            members(&cyclotomic_cosets(7, 2).unwrap()),
            vec![vec![0], vec![1, 2, 4], vec![3, 5, 6]]
        );
        assert_eq!(
            members(&cyclotomic_cosets(11, 5).unwrap()),
            vec![vec![0], vec![1, 3, 4, 5, 9], vec![2, 6, 7, 8, 10]]
        );
        assert_eq!(members(&cyclotomic_cosets(1, 3).unwrap()), vec![vec![0]]);
        assert_eq!(
            cyclotomic_cosets(6, 2).unwrap_err(),
            Error::NotCoprime { m: 6, q: 2 }
        );
    }

    #[test]
    fn cosets_partition_and_are_closed() {
        for (m, q) in [(7u64, 2u64), (11, 5), (15, 2), (13, 3), (21, 4), (9, 2)] {
            let cs = cyclotomic_cosets(m, q).unwrap();
            let mut all: Vec<u64> = cs.iter().flat_map(|c| c.members.clone()).collect();
            all.sort_unstable();
            assert_eq!(all, (0..m).collect::<Vec<_>>());
            for c in &cs {
                assert_eq!(c.representative, c.members[0]);
                for &u in &c.members {
                    assert!(c.contains(u * q % m));
                }
            }
        }
    }

    #[test]
    fn minimal_polynomials_mod_7() {
        let f2 = Field::prime(2).unwrap();
        assert_eq!(minimal_polynomial(&f2, 7, 0).unwrap().coeffs(), &[1, 1]);
        assert_eq!(
            minimal_polynomial(&f2, 7, 1).unwrap().coeffs(),
            &[1, 1, 0, 1]
        );
        assert_eq!(
            minimal_polynomial(&f2, 7, 3).unwrap().coeffs(),
            &[1, 0, 1, 1]
        );
    }

    #[test]
    fn factor_x7_minus_1() {
        let f2 = Field::prime(2).unwrap();
        let fact = factor_unity(&f2, 7).unwrap();
        let polys: Vec<_> = fact
            .factors
            .iter()
            .map(|f| f.poly.coeffs().to_vec())
            .collect();
        assert_eq!(polys, vec![vec![1, 1, 0, 1], vec![1, 0, 1, 1], vec![1, 1]]);
        assert_eq!(fact.factors.last().unwrap().representative(), 0);
    }

    #[test]
    fn factor_x11_minus_1_over_f5() {
        let f5 = Field::prime(5).unwrap();
        let fact = factor_unity(&f5, 11).unwrap();
        let polys: Vec<_> = fact
            .factors
            .iter()
            .map(|f| f.poly.coeffs().to_vec())
            .collect();
        assert_eq!(
            polys,
            vec![vec![4, 3, 1, 4, 4, 1], vec![4, 1, 1, 4, 2, 1], vec![4, 1],]
        );
    }

    #[test]
    fn factor_trivial_and_invariants() {
        let f2 = Field::prime(2).unwrap();
        let one = factor_unity(&f2, 1).unwrap();
        assert_eq!(one.factors.len(), 1);
        assert_eq!(one.factors[0].poly.coeffs(), &[1, 1]);
        for (q, m) in [(2u64, 15u64), (3, 13), (4, 5), (2, 9), (3, 8), (5, 12)] {
            let fq = Field::galois(q).unwrap();
            let fact = factor_unity(&fq, m).unwrap();
            assert_eq!(fact.product(), Poly::x_pow_minus_one(&fq, m as usize));
            for (i, a) in fact.factors.iter().enumerate() {
                assert_eq!(a.poly.degree(), Some(a.coset.len()));
                assert!(a.poly.is_irreducible());
                for b in &fact.factors[i + 1..] {
                    assert_eq!(a.poly.gcd(&b.poly), Poly::one(&fq));
                }
            }
            let last = fact.factors.last().unwrap();
            assert_eq!(last.representative(), 0);
            assert_eq!(last.poly, Poly::new(&fq, vec![fq.neg(1), 1]));
        }
    }
}
