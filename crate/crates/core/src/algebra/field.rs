//! Finite fields built as towers of simple extensions over a prime field.
//!
//! An element is stored as a single `u32`: its coefficient vector over the
//! immediate base field, lowest degree first, with each coefficient itself
//! encoded recursively and packed as a base-`|base|` digit. Unwinding the
//! recursion, the encoding is just the base-`p` digit string of the element's
//! coordinates over the prime field. Two consequences matter to callers:
//!
//! * addition is digit-wise modulo `p` at every level of the tower, and
//! * the elements of a subfield in the tower are exactly the integers below
//!   that subfield's order, so the embedding of a base field is the identity
//!   on encodings.

use std::fmt;
use std::sync::Arc;

use super::poly::Poly;
use crate::error::{Error, Result};

/// Canonical encoding of a field element. Only meaningful together with the
/// [`Field`] it came from.
pub type Elem = u32;

/// Fields up to this order get exp/log tables.
const TABLE_LIMIT: u64 = 1 << 22;
const ORDER_LIMIT: u64 = 1 << 31;

/// A finite field. Cheap to clone; all clones share the same tables.
#[derive(Clone)]
pub struct Field(Arc<Inner>);

struct Inner {
    p: u32,
    /// Degree over the prime field.
    degree: u32,
    order: u32,
    base: Option<Field>,
    /// Monic modulus over `base`, ascending. Empty for a prime field.
    modulus: Vec<Elem>,
    /// Degree over `base` (1 for a prime field).
    step: u32,
    generator: Elem,
    tables: Option<Tables>,
}

struct Tables {
    exp: Vec<Elem>,
    log: Vec<u32>,
}

impl Field {
    /// The prime field `F_p`.
    pub fn prime(p: u64) -> Result<Field> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if p >= ORDER_LIMIT {
            return Err(Error::FieldTooLarge(p as u128));
        }
        Ok(Field(Arc::new(Inner {
            p: p as u32,
            degree: 1,
            order: p as u32,
            base: None,
            modulus: Vec::new(),
            step: 1,
            generator: 1,
            tables: None,
        })))
    }

    /// `F_q` for a prime power `q = p^a`, using the smallest irreducible of
    /// degree `a` over `F_p` when `a > 1`.
    pub fn galois(q: u64) -> Result<Field> {
        let (p, a) = prime_power(q).ok_or(Error::NotPrimePower(q))?;
        let fp = Field::prime(p)?;
        if a == 1 {
            return Ok(fp);
        }
        let modulus = super::poly::find_irreducible(&fp, a as usize);
        Field::extension(&fp, &modulus)
    }

    /// `base[x] / <modulus>`. The class of `x` becomes [`Field::generator`].
    ///
    /// A degree-one modulus `x - a` yields a field with the same elements as
    /// `base`, whose generator is `a`.
    pub fn extension(base: &Field, modulus: &Poly) -> Result<Field> {
        if modulus.field() != base {
            return Err(Error::FieldMismatch(
                "modulus coefficients are not in the base field".into(),
            ));
        }
        let deg = match modulus.degree() {
            Some(d) if d >= 1 => d,
            _ => return Err(Error::BadModulus),
        };
        if modulus.leading() != 1 {
            return Err(Error::BadModulus);
        }
        if !modulus.is_irreducible() {
            return Err(Error::Reducible(modulus.to_string()));
        }
        let order = (base.order() as u128).pow(deg as u32);
        if order >= ORDER_LIMIT as u128 {
            return Err(Error::FieldTooLarge(order));
        }
        let coeffs = modulus.coeffs().to_vec();
        let generator = if deg == 1 {
            base.neg(coeffs[0])
        } else {
            base.order()
        };
        let plain = Field(Arc::new(Inner {
            p: base.0.p,
            degree: base.0.degree * deg as u32,
            order: order as u32,
            base: Some(base.clone()),
            modulus: coeffs,
            step: deg as u32,
            generator,
            tables: None,
        }));
        if deg == 1 || order as u64 > TABLE_LIMIT {
            return Ok(plain);
        }
        let tables = build_tables(&plain);
        let mut inner = Arc::try_unwrap(plain.0)
            .ok()
            .expect("freshly built field is not shared");
        inner.tables = Some(tables);
        Ok(Field(Arc::new(inner)))
    }

    pub fn characteristic(&self) -> u32 {
        self.0.p
    }

    pub fn order(&self) -> u32 {
        self.0.order
    }

    /// Degree over the prime field.
    pub fn degree(&self) -> u32 {
        self.0.degree
    }

    /// Degree over the immediate base field.
    pub fn step_degree(&self) -> u32 {
        self.0.step
    }

    pub fn base(&self) -> Option<&Field> {
        self.0.base.as_ref()
    }

    pub fn is_prime_field(&self) -> bool {
        self.0.base.is_none()
    }

    /// The defining modulus over the base field, if this is an extension.
    pub fn modulus(&self) -> Option<Poly> {
        self.base().map(|b| Poly::new(b, self.0.modulus.clone()))
    }

    /// The class of `x` in `base[x]/<modulus>` (1 for a prime field).
    pub fn generator(&self) -> Elem {
        self.0.generator
    }

    /// Moduli from the prime field upwards.
    pub fn modulus_chain(&self) -> Vec<Poly> {
        let mut chain = Vec::new();
        let mut cur = self;
        while let Some(m) = cur.modulus() {
            chain.push(m);
            cur = cur.base().unwrap();
        }
        chain.reverse();
        chain
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> {
        0..self.0.order
    }

    #[inline]
    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        let p = self.0.p;
        if self.0.degree == 1 {
            let s = a + b;
            return if s >= p { s - p } else { s };
        }
        if p == 2 {
            return a ^ b;
        }
        let (mut a, mut b) = (a, b);
        let (mut w, mut r) = (1u32, 0u32);
        while a | b != 0 {
            let s = a % p + b % p;
            r += if s >= p { s - p } else { s } * w;
            a /= p;
            b /= p;
            w = w.wrapping_mul(p);
        }
        r
    }

    #[inline]
    pub fn neg(&self, a: Elem) -> Elem {
        let p = self.0.p;
        if p == 2 {
            return a;
        }
        if self.0.degree == 1 {
            return if a == 0 { 0 } else { p - a };
        }
        let (mut a, mut w, mut r) = (a, 1u32, 0u32);
        while a != 0 {
            let d = a % p;
            if d != 0 {
                r += (p - d) * w;
            }
            a /= p;
            w = w.wrapping_mul(p);
        }
        r
    }

    #[inline]
    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        if a == 0 || b == 0 {
            return 0;
        }
        if let Some(t) = &self.0.tables {
            let n = t.exp.len() as u32;
            let mut s = t.log[a as usize] + t.log[b as usize];
            if s >= n {
                s -= n;
            }
            return t.exp[s as usize];
        }
        match &self.0.base {
            None => ((a as u64 * b as u64) % self.0.p as u64) as u32,
            Some(base) if self.0.step == 1 => base.mul(a, b),
            Some(_) => self.mul_slow(a, b),
        }
    }

    /// Polynomial multiplication over the base followed by reduction.
    fn mul_slow(&self, a: Elem, b: Elem) -> Elem {
        let base = self.0.base.as_ref().expect("extension field");
        let s = self.0.step as usize;
        let ca = self.coeffs(a);
        let cb = self.coeffs(b);
        let mut prod = vec![0; 2 * s - 1];
        for (i, &x) in ca.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in cb.iter().enumerate() {
                prod[i + j] = base.add(prod[i + j], base.mul(x, y));
            }
        }
        let md = &self.0.modulus;
        for i in (s..prod.len()).rev() {
            let c = prod[i];
            if c == 0 {
                continue;
            }
            for t in 0..s {
                let v = base.mul(c, md[t]);
                prod[i - s + t] = base.sub(prod[i - s + t], v);
            }
            prod[i] = 0;
        }
        self.from_coeffs(&prod[..s])
    }

    pub fn pow(&self, a: Elem, mut e: u64) -> Elem {
        let mut result = 1;
        let mut b = a;
        while e > 0 {
            if e & 1 == 1 {
                result = self.mul(result, b);
            }
            b = self.mul(b, b);
            e >>= 1;
        }
        result
    }

    pub fn inv(&self, a: Elem) -> Result<Elem> {
        if a == 0 {
            return Err(Error::DivisionByZero);
        }
        if let Some(t) = &self.0.tables {
            let n = t.exp.len() as u32;
            let l = t.log[a as usize];
            return Ok(t.exp[((n - l) % n) as usize]);
        }
        Ok(self.pow(a, self.0.order as u64 - 2))
    }

    pub fn div(&self, a: Elem, b: Elem) -> Result<Elem> {
        Ok(self.mul(a, self.inv(b)?))
    }

    /// `z -> z^{|base|}`, the Frobenius over the immediate base field.
    pub fn frobenius(&self, z: Elem) -> Elem {
        match &self.0.base {
            Some(b) => self.pow(z, b.order() as u64),
            None => z,
        }
    }

    /// Coefficient vector over the immediate base (length = step degree).
    pub fn coeffs(&self, mut e: Elem) -> Vec<Elem> {
        let s = self.0.step as usize;
        match &self.0.base {
            None => vec![e],
            Some(_) if s == 1 => vec![e],
            Some(b) => {
                let q = b.order();
                let mut out = Vec::with_capacity(s);
                for _ in 0..s {
                    out.push(e % q);
                    e /= q;
                }
                out
            }
        }
    }

    /// Inverse of [`Field::coeffs`]. Missing high coefficients are zero.
    pub fn from_coeffs(&self, c: &[Elem]) -> Elem {
        match &self.0.base {
            None => c.first().copied().unwrap_or(0) % self.0.p,
            Some(b) => {
                let q = b.order();
                let mut e = 0u32;
                for &x in c.iter().take(self.0.step as usize).rev() {
                    e = e * q + x;
                }
                e
            }
        }
    }

    /// Whether `e` is a valid encoding in this field.
    pub fn contains(&self, e: Elem) -> bool {
        e < self.0.order
    }

    /// `[self : sub]` when `sub` is `self` or one of its ancestors in the tower.
    pub fn degree_over(&self, sub: &Field) -> Option<u32> {
        let mut cur = self;
        let mut e = 1;
        loop {
            if cur == sub {
                return Some(e);
            }
            e *= cur.0.step;
            cur = cur.0.base.as_ref()?;
        }
    }

    /// `Tr_{self/sub}(z) = sum_{t < e} z^{|sub|^t}` with `e = [self : sub]`.
    pub fn trace(&self, z: Elem, sub: &Field) -> Result<Elem> {
        let e = self.degree_over(sub).ok_or_else(|| {
            Error::FieldMismatch(format!(
                "{sub:?} is not a subfield of {self:?} in its tower"
            ))
        })?;
        let q = sub.order() as u64;
        let mut acc = 0;
        let mut y = z;
        for _ in 0..e {
            acc = self.add(acc, y);
            y = self.pow(y, q);
        }
        if !sub.contains(acc) {
            return Err(Error::Internal(format!(
                "trace {acc} does not lie in the subfield of order {q}"
            )));
        }
        Ok(acc)
    }

    /// Multiplicative order of a nonzero element.
    pub fn element_order(&self, a: Elem) -> u64 {
        assert_ne!(a, 0, "zero has no multiplicative order");
        let n = self.0.order as u64 - 1;
        let mut ord = n;
        for r in prime_factors(n) {
            while ord.is_multiple_of(r) && self.pow(a, ord / r) == 1 {
                ord /= r;
            }
        }
        ord
    }

    /// Smallest encoding that generates the multiplicative group.
    pub fn primitive_element(&self) -> Elem {
        if let Some(t) = &self.0.tables {
            return t.exp[1];
        }
        find_primitive(self)
    }
}

fn find_primitive(f: &Field) -> Elem {
    let n = f.order() as u64 - 1;
    if n == 1 {
        return 1;
    }
    let factors = prime_factors(n);
    (1..f.order())
        .find(|&g| factors.iter().all(|&r| f.pow(g, n / r) != 1))
        .expect("multiplicative group of a finite field is cyclic")
}

fn build_tables(f: &Field) -> Tables {
    let g = find_primitive(f);
    let n = f.order() as usize - 1;
    let mut exp = Vec::with_capacity(n);
    let mut log = vec![0u32; n + 1];
    let mut x = 1;
    for i in 0..n {
        exp.push(x);
        log[x as usize] = i as u32;
        x = f.mul(x, g);
    }
    debug_assert_eq!(x, 1);
    Tables { exp, log }
}

impl PartialEq for Field {
    fn eq(&self, other: &Field) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.p == other.0.p
                && self.0.order == other.0.order
                && self.0.modulus == other.0.modulus
                && self.0.base == other.0.base)
    }
}

impl Eq for Field {}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F_{}", self.0.order)?;
        if let Some(m) = self.modulus() {
            write!(f, "[{}]", m.to_bracket())?;
        }
        Ok(())
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F_{}", self.0.order)
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// `q = p^a` with `p` prime, or `None`.
pub fn prime_power(q: u64) -> Option<(u64, u64)> {
    if q < 2 {
        return None;
    }
    let p = (2..=q).find(|d| q.is_multiple_of(*d))?;
    let (mut r, mut a) = (q, 0);
    while r % p == 0 {
        r /= p;
        a += 1;
    }
    (r == 1).then_some((p, a))
}

pub fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}
