//! Sparse monomials with signed integer exponents.

use std::fmt;

use num::traits::{One, Zero};
use num::BigRational;

use super::symbol::Symbol;

/// A monomial in canonical sparse form: exponents sorted by symbol, no
/// stored zeros. Multiplication adds exponent vectors, inversion negates
/// them.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Monomial {
    exps: Vec<(Symbol, i32)>,
}

impl Monomial {
    /// The empty monomial (the unit 1).
    pub fn one() -> Monomial {
        Monomial { exps: Vec::new() }
    }

    /// A single variable to the first power.
    pub fn var(name: &str) -> Monomial {
        Monomial {
            exps: vec![(Symbol::new(name), 1)],
        }
    }

    /// Build from (variable, exponent) pairs; zero exponents are dropped
    /// and repeated variables accumulate.
    pub fn from_pairs<I, S>(pairs: I) -> Monomial
    where
        I: IntoIterator<Item = (S, i32)>,
        S: Into<Symbol>,
    {
        let mut exps: Vec<(Symbol, i32)> = Vec::new();
        for (s, e) in pairs {
            let sym = s.into();
            match exps.binary_search_by_key(&sym, |&(v, _)| v) {
                Ok(i) => exps[i].1 += e,
                Err(i) => exps.insert(i, (sym, e)),
            }
        }
        exps.retain(|&(_, e)| e != 0);
        Monomial { exps }
    }

    pub fn is_one(&self) -> bool {
        self.exps.is_empty()
    }

    /// Exponent of a variable (0 when absent).
    pub fn exponent(&self, var: Symbol) -> i32 {
        match self.exps.binary_search_by_key(&var, |&(v, _)| v) {
            Ok(i) => self.exps[i].1,
            Err(_) => 0,
        }
    }

    /// Iterate over the (variable, exponent) pairs.
    pub fn iter(&self) -> impl Iterator<Item = (Symbol, i32)> + '_ {
        self.exps.iter().copied()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut exps = Vec::with_capacity(self.exps.len() + other.exps.len());
        let (mut i, mut j) = (0, 0);
        while i < self.exps.len() && j < other.exps.len() {
            let (a, ea) = self.exps[i];
            let (b, eb) = other.exps[j];
            if a < b {
                exps.push((a, ea));
                i += 1;
            } else if b < a {
                exps.push((b, eb));
                j += 1;
            } else {
                if ea + eb != 0 {
                    exps.push((a, ea + eb));
                }
                i += 1;
                j += 1;
            }
        }
        exps.extend_from_slice(&self.exps[i..]);
        exps.extend_from_slice(&other.exps[j..]);
        Monomial { exps }
    }

    pub fn inv(&self) -> Monomial {
        Monomial {
            exps: self.exps.iter().map(|&(v, e)| (v, -e)).collect(),
        }
    }

    pub fn pow(&self, k: i32) -> Monomial {
        if k == 0 {
            return Monomial::one();
        }
        Monomial {
            exps: self.exps.iter().map(|&(v, e)| (v, e * k)).collect(),
        }
    }

    /// Signed total degree over the variables selected by `keep`.
    pub fn degree_where<F: Fn(Symbol) -> bool>(&self, keep: F) -> i64 {
        self.exps
            .iter()
            .filter(|&&(v, _)| keep(v))
            .map(|&(_, e)| e as i64)
            .sum()
    }

    /// First variable of `vars` with a nonzero exponent here.
    pub fn leading_in(&self, vars: &[Symbol]) -> Option<(Symbol, i32)> {
        vars.iter().find_map(|&v| {
            let e = self.exponent(v);
            (e != 0).then_some((v, e))
        })
    }

    /// Exponent vector under an explicit variable listing, for lexicographic
    /// comparisons and deterministic printing.
    pub fn exponent_vector(&self, vars: &[Symbol]) -> Vec<i32> {
        vars.iter().map(|&v| self.exponent(v)).collect()
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut named: Vec<(String, i32)> = self.exps.iter().map(|&(v, e)| (v.name(), e)).collect();
        named.sort();
        let parts: Vec<String> = named
            .into_iter()
            .map(|(n, e)| if e == 1 { n } else { format!("{n}^{e}") })
            .collect();
        write!(f, "{}", parts.join("*"))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// A nonzero rational multiple of a monomial; the value bound to a variable
/// by a substitution, and the shape of units that normalization moves
/// around.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ScaledMonomial {
    coeff: BigRational,
    mono: Monomial,
}

impl ScaledMonomial {
    /// Requires a nonzero coefficient.
    pub fn new(coeff: BigRational, mono: Monomial) -> crate::Result<ScaledMonomial> {
        if coeff.is_zero() {
            return Err(crate::Error::BadParameter(
                "scaled monomial must be nonzero".into(),
            ));
        }
        Ok(ScaledMonomial { coeff, mono })
    }

    pub fn from_monomial(mono: Monomial) -> ScaledMonomial {
        ScaledMonomial {
            coeff: BigRational::one(),
            mono,
        }
    }

    pub fn one() -> ScaledMonomial {
        ScaledMonomial::from_monomial(Monomial::one())
    }

    pub fn coeff(&self) -> &BigRational {
        &self.coeff
    }

    pub fn monomial(&self) -> &Monomial {
        &self.mono
    }

    pub fn mul(&self, other: &ScaledMonomial) -> ScaledMonomial {
        ScaledMonomial {
            coeff: &self.coeff * &other.coeff,
            mono: self.mono.mul(&other.mono),
        }
    }

    pub fn pow(&self, k: i64) -> ScaledMonomial {
        ScaledMonomial {
            coeff: super::rat_pow(&self.coeff, k),
            mono: self.mono.pow(k as i32),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(pairs: &[(&str, i32)]) -> Monomial {
        Monomial::from_pairs(pairs.iter().copied())
    }

    #[test]
    fn multiplication_adds_exponents() {
        let a = m(&[("x", 2), ("y", -1)]);
        let b = m(&[("y", 1), ("z", 3)]);
        let ab = a.mul(&b);
        assert_eq!(ab.exponent(Symbol::new("x")), 2);
        assert_eq!(ab.exponent(Symbol::new("y")), 0);
        assert_eq!(ab.exponent(Symbol::new("z")), 3);
    }

    #[test]
    fn inverse_negates() {
        let a = m(&[("x", 2), ("y", -1)]);
        assert!(a.mul(&a.inv()).is_one());
    }

    #[test]
    fn canonical_form_drops_zeros() {
        let a = m(&[("x", 1), ("x", -1), ("y", 2)]);
        assert_eq!(a, m(&[("y", 2)]));
    }
}
