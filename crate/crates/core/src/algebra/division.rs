//! Reduction and exact division by binomials `1 - c*M`, viewed through a
//! pivot variable.
//!
//! Working modulo the ideal generated by `1 - c*M` identifies `c*M` with 1.
//! With a pivot variable `v` of exponent `e != 0` in `M`, every monomial has
//! a unique representative whose `v`-exponent lies in `[0, |e|)`; reduction
//! rewrites `v^(q*e)` as `(c * M / v^e)^(-q)`. A Laurent polynomial reduces
//! to zero exactly when the binomial divides it.

use num::BigRational;

use super::monomial::{Monomial, ScaledMonomial};
use super::poly::LaurentPolynomial;
use super::rat_pow;
use super::symbol::Symbol;

/// Canonical representative of `p` modulo `<1 - c*mono>`, with the
/// `pivot`-exponent confined to `[0, |e|)` where `e` is the pivot exponent
/// of `mono` (which must be nonzero).
pub(crate) fn reduce_mod_binomial(
    p: &LaurentPolynomial,
    coeff: &BigRational,
    mono: &Monomial,
    pivot: Symbol,
) -> LaurentPolynomial {
    let e = mono.exponent(pivot);
    assert!(e != 0, "pivot must occur in the binomial monomial");
    if e < 0 {
        // Same ideal, generated by 1 - c^{-1} M^{-1}.
        return reduce_mod_binomial(p, &coeff.recip(), &mono.inv(), pivot);
    }
    // c * rest * v^e = 1, so v^(q e) = (c * rest)^(-q).
    let rest = mono.mul(&Monomial::from_pairs([(pivot, -e)]));
    let mut out = LaurentPolynomial::zero();
    for (m, a) in p.iter() {
        let d = m.exponent(pivot);
        let q = d.div_euclid(e) as i64;
        if q == 0 {
            out.add_term(a, m);
            continue;
        }
        let unit = ScaledMonomial::new(rat_pow(coeff, -q), rest.pow(-q as i32))
            .expect("coefficient is nonzero");
        let shifted = m
            .mul(&Monomial::from_pairs([(pivot, -(q as i32) * e)]))
            .mul(unit.monomial());
        out.add_term(&(a * unit.coeff()), &shifted);
    }
    out
}

/// Exact quotient `p / (1 - c*mono)`, or `None` when the binomial does not
/// divide `p`. `pivot` must occur in `mono`.
pub(crate) fn div_exact_binomial(
    p: &LaurentPolynomial,
    coeff: &BigRational,
    mono: &Monomial,
    pivot: Symbol,
) -> Option<LaurentPolynomial> {
    if p.is_zero() {
        return Some(LaurentPolynomial::zero());
    }
    let e = mono.exponent(pivot);
    assert!(e != 0, "pivot must occur in the binomial monomial");
    if e < 0 {
        // 1 - cM = (-cM) * (1 - c^{-1} M^{-1}); divide by each part.
        let unit = ScaledMonomial::new(-coeff.clone(), mono.clone())
            .expect("coefficient is nonzero")
            .pow(-1);
        return div_exact_binomial(&p.mul_unit(&unit), &coeff.recip(), &mono.inv(), pivot);
    }

    // Shift so the pivot degrees are nonnegative, then do descending long
    // division by 1 - c*rest*v^e; the leading coefficient -c*rest is a unit.
    let (min_d, _) = p.degree_range(pivot).expect("nonzero polynomial");
    let shift = (-min_d).max(0) as i32;
    let shifted = p.mul_unit(&ScaledMonomial::from_monomial(Monomial::from_pairs([(
        pivot, shift,
    )])));

    let rest = mono.mul(&Monomial::from_pairs([(pivot, -e)]));
    let lead_inv = ScaledMonomial::new(-coeff.recip(), rest.inv().mul(&Monomial::from_pairs([(
        pivot, -e,
    )])))
    .expect("coefficient is nonzero");

    let mut rem = shifted.by_degree(pivot);
    let mut quot = LaurentPolynomial::zero();
    while let Some((&top, _)) = rem.iter().next_back() {
        if top < e as i64 {
            return None; // nonzero remainder of degree < e
        }
        let block = rem.remove(&top).unwrap();
        // quotient block: (block * v^top) / (-c * rest * v^e)
        let q_block = block
            .mul_unit(&lead_inv)
            .mul_unit(&ScaledMonomial::from_monomial(Monomial::from_pairs([(
                pivot,
                top as i32,
            )])));
        // Subtract q_block * 1 (the -c*rest*v^e part cancelled the block).
        for (m, a) in q_block.iter() {
            let d = m.exponent(pivot) as i64;
            let cof = rem.entry(d).or_default();
            let stripped = m.mul(&Monomial::from_pairs([(pivot, -(d as i32))]));
            cof.add_term(&-a.clone(), &stripped);
            if cof.is_zero() {
                rem.remove(&d);
            }
        }
        quot = &quot + &q_block;
    }
    let unshift = ScaledMonomial::from_monomial(Monomial::from_pairs([(pivot, -shift)]));
    Some(quot.mul_unit(&unshift))
}

/// Long division of `n` by `d` viewed as polynomials in `pivot` (both must
/// have nonnegative pivot degrees): `n = q*d + r` with the pivot degree of
/// `r` strictly below that of `d`. Requires the leading pivot block of `d`
/// to be a single term, so each quotient step stays in the Laurent ring.
pub(crate) fn poly_div_rem(
    n: &LaurentPolynomial,
    d: &LaurentPolynomial,
    pivot: Symbol,
) -> Option<(LaurentPolynomial, LaurentPolynomial)> {
    let (d_lo, d_top) = d.degree_range(pivot)?;
    assert!(d_lo >= 0, "divisor must be a polynomial in the pivot");
    let lead = block_at(d, pivot, d_top);
    let lead_inv = lead.as_unit()?.pow(-1);
    let mut quot = LaurentPolynomial::zero();
    let mut rem = n.clone();
    while let Some((r_lo, r_top)) = rem.degree_range(pivot) {
        debug_assert!(r_lo >= 0);
        if r_top < d_top {
            break;
        }
        // Blocks keep the pivot, so this quotient block already sits at
        // degree r_top - d_top.
        let q_block = block_at(&rem, pivot, r_top).mul_unit(&lead_inv);
        rem = &rem - &(&q_block * d);
        quot = &quot + &q_block;
    }
    Some((quot, rem))
}

/// Terms of `p` whose pivot exponent equals `deg`, pivot included.
fn block_at(p: &LaurentPolynomial, pivot: Symbol, deg: i64) -> LaurentPolynomial {
    let mut out = LaurentPolynomial::zero();
    for (m, c) in p.iter() {
        if m.exponent(pivot) as i64 == deg {
            out.add_term(c, m);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use num::traits::One;

    fn rat(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    fn poly(terms: &[(i64, &[(&str, i32)])]) -> LaurentPolynomial {
        let mut out = LaurentPolynomial::zero();
        for &(c, mono) in terms {
            out.add_term(&rat(c), &Monomial::from_pairs(mono.iter().copied()));
        }
        out
    }

    #[test]
    fn reduce_defining_relation() {
        // l^3 mod <1 - x*l^2>  ->  x^{-1} * l
        let p = poly(&[(1, &[("l", 3)])]);
        let got = reduce_mod_binomial(&p, &BigRational::one(), &Monomial::from_pairs([("x", 1), ("l", 2)]), Symbol::new("l"));
        assert_eq!(got, poly(&[(1, &[("x", -1), ("l", 1)])]));
    }

    #[test]
    fn reduce_negative_exponent_floor() {
        // l^{-1} mod <1 - x*l>  ->  x
        let p = poly(&[(1, &[("l", -1)])]);
        let got = reduce_mod_binomial(&p, &BigRational::one(), &Monomial::from_pairs([("x", 1), ("l", 1)]), Symbol::new("l"));
        assert_eq!(got, poly(&[(1, &[("x", 1)])]));
    }

    #[test]
    fn exact_division_round_trip() {
        // (1 - x*l) * (1 + l + l^2) divided back
        let f_c = rat(1);
        let f_m = Monomial::from_pairs([("x", 1), ("l", 1)]);
        let factor = poly(&[(1, &[]), (-1, &[("x", 1), ("l", 1)])]);
        let q = poly(&[(1, &[]), (1, &[("l", 1)]), (1, &[("l", 2)])]);
        let prod = &factor * &q;
        let got = div_exact_binomial(&prod, &f_c, &f_m, Symbol::new("l")).unwrap();
        assert_eq!(got, q);
        assert!(div_exact_binomial(&poly(&[(1, &[("y", 1)])]), &f_c, &f_m, Symbol::new("l")).is_none());
    }

    #[test]
    fn long_division_invariant() {
        // n = (1 - x l)(1 - y l) * l^2 + (3 + l)
        let l = Symbol::new("l");
        let d = &poly(&[(1, &[]), (-1, &[("x", 1), ("l", 1)])])
            * &poly(&[(1, &[]), (-1, &[("y", 1), ("l", 1)])]);
        let n = &(&d * &poly(&[(1, &[("l", 2)])])) + &poly(&[(3, &[]), (1, &[("l", 1)])]);
        let (q, r) = poly_div_rem(&n, &d, l).unwrap();
        assert_eq!(&(&q * &d) + &r, n);
        assert_eq!(q, poly(&[(1, &[("l", 2)])]));
        assert!(r.degree_range(l).unwrap().1 < 2);
    }

    #[test]
    fn divisible_iff_reduces_to_zero() {
        let f_c = rat(2);
        let f_m = Monomial::from_pairs([("x", 1), ("l", 2)]);
        let factor = poly(&[(1, &[]), (-2, &[("x", 1), ("l", 2)])]);
        let q = poly(&[(3, &[("l", -1)]), (1, &[("y", 2), ("l", 4)])]);
        let prod = &factor * &q;
        let l = Symbol::new("l");
        assert!(reduce_mod_binomial(&prod, &f_c, &f_m, l).is_zero());
        assert_eq!(div_exact_binomial(&prod, &f_c, &f_m, l).unwrap(), q);
        let not_div = &prod + &LaurentPolynomial::one();
        assert!(!reduce_mod_binomial(&not_div, &f_c, &f_m, l).is_zero());
        assert!(div_exact_binomial(&not_div, &f_c, &f_m, l).is_none());
    }
}
