#![allow(dead_code)]

use std::sync::Arc;

use qclrc::algebra::{factor_unity, Elem, Field};
use qclrc::codes::LinearCode;
use qclrc::qc::ConstituentDecomposition;
use rand::Rng;

/// `(q, m)` pairs from `{2, 3} x {3, 5, 7}` with `gcd(m, q) = 1`.
pub const SMALL_PARAMS: [(u64, u64); 5] = [(2, 3), (2, 5), (2, 7), (3, 5), (3, 7)];

pub fn random_rows<R: Rng + ?Sized>(
    rng: &mut R,
    field: &Field,
    k: usize,
    n: usize,
) -> Vec<Vec<Elem>> {
    let q = field.order();
    (0..k)
        .map(|_| (0..n).map(|_| rng.gen_range(0..q)).collect())
        .collect()
}

/// Constituents with random dimensions and random (possibly dependent)
/// generator rows, so ranks below the drawn dimension also occur.
pub fn random_decomposition<R: Rng + ?Sized>(
    rng: &mut R,
    q: u64,
    m: u64,
    ell: usize,
) -> ConstituentDecomposition {
    let base = Field::galois(q).unwrap();
    let fact = Arc::new(factor_unity(&base, m).unwrap());
    let constituents = fact
        .factors
        .iter()
        .map(|f| {
            let k = rng.gen_range(0..=ell);
            LinearCode::new(&f.field, ell, &random_rows(rng, &f.field, k, ell)).unwrap()
        })
        .collect();
    ConstituentDecomposition::new(fact, ell, constituents).unwrap()
}

/// As [`random_decomposition`] over a random small parameter set, redrawn
/// until the code is nonzero.
pub fn random_nonzero<R: Rng + ?Sized>(rng: &mut R) -> ConstituentDecomposition {
    loop {
        let (q, m) = SMALL_PARAMS[rng.gen_range(0..SMALL_PARAMS.len())];
        let ell = rng.gen_range(2..=3);
        let dec = random_decomposition(rng, q, m, ell);
        if dec.dimension() > 0 {
            return dec;
        }
    }
}

/// A random `[n, k]` code over `F_q` with `q^k` at most `max_words`.
pub fn random_code<R: Rng + ?Sized>(rng: &mut R, max_words: u64) -> LinearCode {
    let q = [2u64, 3, 4, 5][rng.gen_range(0..4)];
    let f = Field::galois(q).unwrap();
    loop {
        let n = rng.gen_range(1..=12);
        let k = rng.gen_range(1..=n);
        if q.pow(k as u32) > max_words {
            continue;
        }
        let code = LinearCode::new(&f, n, &random_rows(rng, &f, k, n)).unwrap();
        if !code.is_zero() {
            return code;
        }
    }
}
