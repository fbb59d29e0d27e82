//! Sparse multivariate Laurent polynomials with exact rational coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::traits::{One, Signed, Zero};
use num::BigRational;

use super::monomial::{Monomial, ScaledMonomial};
use super::symbol::Symbol;

/// A simultaneous variable substitution; every image is a nonzero rational
/// multiple of a monomial.
pub type Substitution = BTreeMap<Symbol, ScaledMonomial>;

/// A finite sum of terms, at most one per monomial, no zero coefficients.
/// Addition and multiplication restore canonical form, so ring arithmetic
/// can be chained freely.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct LaurentPolynomial {
    terms: BTreeMap<Monomial, BigRational>,
}

impl LaurentPolynomial {
    pub fn zero() -> LaurentPolynomial {
        LaurentPolynomial::default()
    }

    pub fn one() -> LaurentPolynomial {
        LaurentPolynomial::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> LaurentPolynomial {
        LaurentPolynomial::term(c, Monomial::one())
    }

    /// Convenience integer constant.
    pub fn int(n: i64) -> LaurentPolynomial {
        LaurentPolynomial::constant(BigRational::from_integer(n.into()))
    }

    pub fn var(name: &str) -> LaurentPolynomial {
        LaurentPolynomial::term(BigRational::one(), Monomial::var(name))
    }

    pub fn term(coeff: BigRational, mono: Monomial) -> LaurentPolynomial {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(mono, coeff);
        }
        LaurentPolynomial { terms }
    }

    pub fn from_unit(u: &ScaledMonomial) -> LaurentPolynomial {
        LaurentPolynomial::term(u.coeff().clone(), u.monomial().clone())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .get(&Monomial::one())
                .map_or(false, |c| c.is_one())
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Monomial, &BigRational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, mono: &Monomial) -> BigRational {
        self.terms.get(mono).cloned().unwrap_or_else(BigRational::zero)
    }

    /// The polynomial as a single scaled monomial, when it has exactly one
    /// term.
    pub fn as_unit(&self) -> Option<ScaledMonomial> {
        if self.terms.len() != 1 {
            return None;
        }
        let (m, c) = self.terms.iter().next().unwrap();
        Some(ScaledMonomial::new(c.clone(), m.clone()).expect("stored coefficients are nonzero"))
    }

    /// The polynomial as a rational constant, when it is one.
    pub fn as_constant(&self) -> Option<BigRational> {
        if self.is_zero() {
            return Some(BigRational::zero());
        }
        if self.terms.len() == 1 {
            if let Some(c) = self.terms.get(&Monomial::one()) {
                return Some(c.clone());
            }
        }
        None
    }

    pub(crate) fn add_term(&mut self, coeff: &BigRational, mono: &Monomial) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.get_mut(mono) {
            Some(c) => {
                *c += coeff;
                if c.is_zero() {
                    self.terms.remove(mono);
                }
            }
            None => {
                self.terms.insert(mono.clone(), coeff.clone());
            }
        }
    }

    pub fn scale(&self, c: &BigRational) -> LaurentPolynomial {
        if c.is_zero() {
            return LaurentPolynomial::zero();
        }
        LaurentPolynomial {
            terms: self
                .terms
                .iter()
                .map(|(m, a)| (m.clone(), a * c))
                .collect(),
        }
    }

    /// Multiply by a single scaled monomial.
    pub fn mul_unit(&self, u: &ScaledMonomial) -> LaurentPolynomial {
        LaurentPolynomial {
            terms: self
                .terms
                .iter()
                .map(|(m, a)| (m.mul(u.monomial()), a * u.coeff()))
                .collect(),
        }
    }

    pub fn pow(&self, mut k: u32) -> LaurentPolynomial {
        let mut acc = LaurentPolynomial::one();
        let mut base = self.clone();
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Replace every bound variable by its image; exponents compose
    /// multiplicatively.
    pub fn substitute(&self, subst: &Substitution) -> LaurentPolynomial {
        if subst.is_empty() {
            return self.clone();
        }
        let mut out = LaurentPolynomial::zero();
        for (mono, coeff) in &self.terms {
            let mut unit = ScaledMonomial::new(coeff.clone(), Monomial::one()).unwrap();
            for (v, e) in mono.iter() {
                match subst.get(&v) {
                    Some(image) => unit = unit.mul(&image.pow(e as i64)),
                    None => {
                        unit = unit.mul(&ScaledMonomial::from_monomial(
                            Monomial::from_pairs([(v, e)]),
                        ))
                    }
                }
            }
            out.add_term(unit.coeff(), unit.monomial());
        }
        out
    }

    /// Exponent range of `var` across the terms, `None` for the zero
    /// polynomial.
    pub fn degree_range(&self, var: Symbol) -> Option<(i64, i64)> {
        let mut range: Option<(i64, i64)> = None;
        for m in self.terms.keys() {
            let e = m.exponent(var) as i64;
            range = Some(match range {
                None => (e, e),
                Some((lo, hi)) => (lo.min(e), hi.max(e)),
            });
        }
        range
    }

    /// View as a univariate Laurent polynomial in `var`: exponent of `var`
    /// mapped to the `var`-free cofactor polynomial.
    pub fn by_degree(&self, var: Symbol) -> BTreeMap<i64, LaurentPolynomial> {
        let mut out: BTreeMap<i64, LaurentPolynomial> = BTreeMap::new();
        for (m, c) in &self.terms {
            let e = m.exponent(var) as i64;
            let rest = m.mul(&Monomial::from_pairs([(var, -(e as i32))]));
            out.entry(e).or_default().add_term(c, &rest);
        }
        out
    }

    /// Minimum signed total degree over the variables selected by `keep`,
    /// `None` for zero.
    pub fn min_degree_where<F: Fn(Symbol) -> bool>(&self, keep: F) -> Option<i64> {
        self.terms
            .keys()
            .map(|m| m.degree_where(&keep))
            .min()
    }

    /// Terms sorted ascending by exponent vector under `vars`, for
    /// deterministic printing.
    pub fn sorted_terms(&self, vars: &[Symbol]) -> Vec<(Monomial, BigRational)> {
        let mut terms: Vec<(Monomial, BigRational)> =
            self.terms.iter().map(|(m, c)| (m.clone(), c.clone())).collect();
        terms.sort_by(|(a, _), (b, _)| {
            a.exponent_vector(vars)
                .cmp(&b.exponent_vector(vars))
                .then_with(|| a.cmp(b))
        });
        terms
    }
}

impl Add for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn add(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        let (big, small) = if self.terms.len() >= rhs.terms.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut out = big.clone();
        for (m, c) in &small.terms {
            out.add_term(c, m);
        }
        out
    }
}

impl Sub for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn sub(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(&-c.clone(), m);
        }
        out
    }
}

impl Neg for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn neg(self) -> LaurentPolynomial {
        LaurentPolynomial {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), -c.clone()))
                .collect(),
        }
    }
}

impl Mul for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn mul(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return LaurentPolynomial::zero();
        }
        let (big, small) = if self.terms.len() >= rhs.terms.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut out = LaurentPolynomial::zero();
        for (m, c) in &small.terms {
            for (n, d) in &big.terms {
                out.add_term(&(c * d), &m.mul(n));
            }
        }
        out
    }
}

impl fmt::Display for LaurentPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        // Name-alphabetical variable listing keeps Display deterministic
        // without an explicit order.
        let mut vars: Vec<(String, Symbol)> = Vec::new();
        for m in self.terms.keys() {
            for (v, _) in m.iter() {
                if !vars.iter().any(|(_, w)| *w == v) {
                    vars.push((v.name(), v));
                }
            }
        }
        vars.sort();
        let listing: Vec<Symbol> = vars.into_iter().map(|(_, v)| v).collect();
        let mut first = true;
        for (m, c) in self.sorted_terms(&listing) {
            let neg = c.is_negative();
            let abs = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
                first = false;
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if m.is_one() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{abs}*{m}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
