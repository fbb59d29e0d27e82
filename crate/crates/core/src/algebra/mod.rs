//! Exact-arithmetic foundation: variables, monomials, Laurent polynomials
//! and the iterated-Laurent-series order on monomials.

pub(crate) mod division;
mod monomial;
mod order;
mod poly;
mod symbol;

pub use monomial::{Monomial, ScaledMonomial};
pub use order::{is_small, VariableOrder};
pub use poly::{LaurentPolynomial, Substitution};
pub use symbol::Symbol;

use num::BigRational;

/// Raise an exact rational to a signed integer power. `base` must be
/// nonzero when `exp` is negative.
pub(crate) fn rat_pow(base: &BigRational, exp: i64) -> BigRational {
    use num::traits::One;
    if exp == 0 {
        return BigRational::one();
    }
    let mut acc = BigRational::one();
    let mut b = if exp < 0 { base.recip() } else { base.clone() };
    let mut e = exp.unsigned_abs();
    while e > 0 {
        if e & 1 == 1 {
            acc *= &b;
        }
        e >>= 1;
        if e > 0 {
            b = &b * &b;
        }
    }
    acc
}
