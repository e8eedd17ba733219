//! Exact arithmetic: prime and extension fields, polynomials, cyclotomic
//! cosets and the factorization of `x^m - 1`.

pub mod cyclotomic;
pub mod field;
pub mod poly;

pub use cyclotomic::{
    cyclotomic_cosets, factor_unity, minimal_polynomial, multiplicative_order, CyclotomicCoset,
    Factor, Factorization, SplittingField,
};
pub use field::{is_prime, prime_power, Elem, Field};
pub use poly::{find_irreducible, Poly};
