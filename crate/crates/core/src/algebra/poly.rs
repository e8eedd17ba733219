//! Dense univariate polynomials over a [`Field`].

use std::fmt;

use super::field::{prime_factors, Elem, Field};
use crate::error::{Error, Result};

/// Polynomial with coefficients ascending by degree, kept trimmed so the
/// leading coefficient is nonzero (the zero polynomial has no coefficients).
#[derive(Clone, PartialEq, Eq)]
pub struct Poly {
    field: Field,
    coeffs: Vec<Elem>,
}

impl Poly {
    pub fn new(field: &Field, mut coeffs: Vec<Elem>) -> Poly {
        debug_assert!(coeffs.iter().all(|&c| field.contains(c)));
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        Poly {
            field: field.clone(),
            coeffs,
        }
    }

    pub fn zero(field: &Field) -> Poly {
        Poly::new(field, Vec::new())
    }

    pub fn one(field: &Field) -> Poly {
        Poly::new(field, vec![1])
    }

    pub fn constant(field: &Field, c: Elem) -> Poly {
        Poly::new(field, vec![c])
    }

    /// `c x^d`
    pub fn monomial(field: &Field, c: Elem, d: usize) -> Poly {
        let mut v = vec![0; d + 1];
        v[d] = c;
        Poly::new(field, v)
    }

    pub fn x(field: &Field) -> Poly {
        Poly::monomial(field, 1, 1)
    }

    /// `x^m - 1`
    pub fn x_pow_minus_one(field: &Field, m: usize) -> Poly {
        let mut v = vec![0; m + 1];
        v[0] = field.neg(1);
        v[m] = field.add(v[m], 1);
        Poly::new(field, v)
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn coeffs(&self) -> &[Elem] {
        &self.coeffs
    }

    /// Coefficient of `x^i` (zero past the degree).
    pub fn coeff(&self, i: usize) -> Elem {
        self.coeffs.get(i).copied().unwrap_or(0)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading(&self) -> Elem {
        self.coeffs.last().copied().unwrap_or(0)
    }

    pub fn is_monic(&self) -> bool {
        self.leading() == 1
    }

    fn check(&self, other: &Poly) {
        assert!(
            self.field == other.field,
            "polynomials over different fields"
        );
    }

    pub fn add(&self, other: &Poly) -> Poly {
        self.check(other);
        let f = &self.field;
        let n = self.coeffs.len().max(other.coeffs.len());
        let v = (0..n)
            .map(|i| f.add(self.coeff(i), other.coeff(i)))
            .collect();
        Poly::new(f, v)
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.check(other);
        let f = &self.field;
        let n = self.coeffs.len().max(other.coeffs.len());
        let v = (0..n)
            .map(|i| f.sub(self.coeff(i), other.coeff(i)))
            .collect();
        Poly::new(f, v)
    }

    pub fn neg(&self) -> Poly {
        let f = &self.field;
        Poly::new(f, self.coeffs.iter().map(|&c| f.neg(c)).collect())
    }

    pub fn scale(&self, c: Elem) -> Poly {
        let f = &self.field;
        Poly::new(f, self.coeffs.iter().map(|&a| f.mul(a, c)).collect())
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        self.check(other);
        if self.is_zero() || other.is_zero() {
            return Poly::zero(&self.field);
        }
        let f = &self.field;
        let mut v = vec![0; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                v[i + j] = f.add(v[i + j], f.mul(a, b));
            }
        }
        Poly::new(f, v)
    }

    /// Quotient and remainder.
    pub fn div_rem(&self, divisor: &Poly) -> Result<(Poly, Poly)> {
        self.check(divisor);
        let f = &self.field;
        let dd = divisor.degree().ok_or(Error::DivisionByZero)?;
        let lead_inv = f.inv(divisor.leading())?;
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((Poly::zero(f), self.clone()));
        }
        let mut quot = vec![0; rem.len() - dd];
        for i in (dd..rem.len()).rev() {
            let c = f.mul(rem[i], lead_inv);
            if c == 0 {
                continue;
            }
            quot[i - dd] = c;
            for (t, &dc) in divisor.coeffs.iter().enumerate() {
                rem[i - dd + t] = f.sub(rem[i - dd + t], f.mul(c, dc));
            }
        }
        rem.truncate(dd);
        Ok((Poly::new(f, quot), Poly::new(f, rem)))
    }

    pub fn rem(&self, divisor: &Poly) -> Result<Poly> {
        Ok(self.div_rem(divisor)?.1)
    }

    pub fn divides(&self, other: &Poly) -> bool {
        !self.is_zero() && other.rem(self).map(|r| r.is_zero()).unwrap_or(false)
    }

    /// Scaled to leading coefficient one; zero stays zero.
    pub fn monic(&self) -> Poly {
        if self.is_zero() {
            return self.clone();
        }
        let inv = self.field.inv(self.leading()).expect("nonzero leading");
        self.scale(inv)
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &Poly) -> Poly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b).expect("nonzero divisor");
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn eval(&self, x: Elem) -> Elem {
        let f = &self.field;
        self.coeffs
            .iter()
            .rev()
            .fold(0, |acc, &c| f.add(f.mul(acc, x), c))
    }

    /// `self^e mod modulus`.
    pub fn pow_mod(&self, mut e: u64, modulus: &Poly) -> Result<Poly> {
        let mut result = Poly::one(&self.field).rem(modulus)?;
        let mut b = self.rem(modulus)?;
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&b).rem(modulus)?;
            }
            b = b.mul(&b).rem(modulus)?;
            e >>= 1;
        }
        Ok(result)
    }

    /// `x^{deg} p(1/x)`.
    pub fn reciprocal(&self) -> Poly {
        let mut v = self.coeffs.clone();
        v.reverse();
        Poly::new(&self.field, v)
    }

    /// Reinterpret the coefficients in a field of the same tower. Fails if a
    /// coefficient does not belong to `target`.
    pub fn descend(&self, target: &Field) -> Result<Poly> {
        if let Some(&c) = self.coeffs.iter().find(|&&c| !target.contains(c)) {
            return Err(Error::Internal(format!(
                "coefficient {c} does not descend to {target}"
            )));
        }
        Ok(Poly::new(target, self.coeffs.clone()))
    }

    /// Rabin's test: `f | x^{Q^d} - x` and `gcd(x^{Q^{d/r}} - x, f) = 1` for
    /// each prime `r | d`, where `Q` is the coefficient field order.
    pub fn is_irreducible(&self) -> bool {
        let d = match self.degree() {
            Some(d) if d >= 1 => d,
            _ => return false,
        };
        if d == 1 {
            return true;
        }
        let f = self.monic();
        let q = self.field.order() as u64;
        let x = Poly::x(&self.field);
        // frob[i] = x^{Q^i} mod f
        let mut frob = vec![x.rem(&f).unwrap()];
        for i in 1..=d {
            let next = frob[i - 1].pow_mod(q, &f).unwrap();
            frob.push(next);
        }
        if frob[d] != x.rem(&f).unwrap() {
            return false;
        }
        prime_factors(d as u64).into_iter().all(|r| {
            let g = frob[d / r as usize].sub(&x).gcd(&f);
            g.degree() == Some(0)
        })
    }

    /// Ascending bracket syntax, e.g. `[1,1,0,1]` for `1 + x + x^3`.
    pub fn to_bracket(&self) -> String {
        if self.is_zero() {
            return "[0]".into();
        }
        let parts: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        format!("[{}]", parts.join(","))
    }

    /// Parses the bracket syntax. Coefficients are field element encodings.
    pub fn parse(field: &Field, s: &str) -> Result<Poly> {
        let s = s.trim();
        let inner = s
            .strip_prefix('[')
            .and_then(|r| r.strip_suffix(']'))
            .ok_or_else(|| Error::Invalid(format!("expected [c0,c1,...], got {s:?}")))?;
        let mut coeffs = Vec::new();
        if !inner.trim().is_empty() {
            for tok in inner.split(',') {
                let c: Elem = tok
                    .trim()
                    .parse()
                    .map_err(|_| Error::Invalid(format!("bad coefficient {tok:?} in {s:?}")))?;
                if !field.contains(c) {
                    return Err(Error::Invalid(format!(
                        "coefficient {c} is not an element of {field}"
                    )));
                }
                coeffs.push(c);
            }
        }
        Ok(Poly::new(field, coeffs))
    }
}

/// Smallest monic irreducible of the given degree, scanning the non-leading
/// coefficients in base-`Q` counting order (constant term least significant).
pub fn find_irreducible(field: &Field, degree: usize) -> Poly {
    assert!(degree >= 1, "degree must be positive");
    let q = field.order() as u64;
    let mut t: u64 = 0;
    loop {
        let mut v = Vec::with_capacity(degree + 1);
        let mut r = t;
        for _ in 0..degree {
            v.push((r % q) as Elem);
            r /= q;
        }
        v.push(1);
        let p = Poly::new(field, v);
        if p.is_irreducible() {
            return p;
        }
        t += 1;
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match (i, c) {
                (0, c) => write!(f, "{c}")?,
                (1, 1) => write!(f, "x")?,
                (1, c) => write!(f, "{c}x")?,
                (i, 1) => write!(f, "x^{i}")?,
                (i, c) => write!(f, "{c}x^{i}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} over {}", self, self.field)
    }
}
