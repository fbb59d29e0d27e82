//! Elliott rational functions: a Laurent-polynomial numerator over a
//! product of binomial factors `(1 - c*M)^m`.
//!
//! This is the representation the whole elimination engine works on. Two
//! values are equal when their cross-multiplied expansions agree, so a
//! function has many admissible factored shapes; [`ElliottRational::reduce`]
//! cancels denominator factors that divide the numerator, and
//! [`ElliottRational::canonicalized`] picks a deterministic shape for
//! printing.

use std::fmt;

use num::traits::{One, Signed, Zero};
use num::BigRational;

use crate::algebra::division::{div_exact_binomial, reduce_mod_binomial};
use crate::algebra::{
    is_small, LaurentPolynomial, Monomial, ScaledMonomial, Substitution, Symbol, VariableOrder,
};
use crate::{Error, Result};

/// A denominator factor `(1 - coeff * mono)^mult`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Factor {
    coeff: BigRational,
    mono: Monomial,
    mult: u32,
}

impl Factor {
    /// Requires `coeff != 0`, `mono != 1` and `mult >= 1`.
    pub fn new(coeff: BigRational, mono: Monomial, mult: u32) -> Result<Factor> {
        if coeff.is_zero() {
            return Err(Error::BadParameter("factor coefficient must be nonzero".into()));
        }
        if mono.is_one() {
            return Err(Error::BadParameter(
                "factor monomial must not be the unit".into(),
            ));
        }
        if mult == 0 {
            return Err(Error::BadParameter("factor multiplicity must be >= 1".into()));
        }
        Ok(Factor { coeff, mono, mult })
    }

    /// The factor `1 - mono`.
    pub fn from_monomial(mono: Monomial) -> Result<Factor> {
        Factor::new(BigRational::one(), mono, 1)
    }

    pub fn coeff(&self) -> &BigRational {
        &self.coeff
    }

    pub fn monomial(&self) -> &Monomial {
        &self.mono
    }

    pub fn mult(&self) -> u32 {
        self.mult
    }

    pub fn with_mult(&self, mult: u32) -> Factor {
        assert!(mult >= 1);
        Factor {
            coeff: self.coeff.clone(),
            mono: self.mono.clone(),
            mult,
        }
    }

    /// Merging key: factors with equal key differ only in multiplicity.
    pub fn key(&self) -> (Monomial, BigRational) {
        (self.mono.clone(), self.coeff.clone())
    }

    /// Exponent of `lam` in the factor monomial.
    pub fn exponent_of(&self, lam: Symbol) -> i32 {
        self.mono.exponent(lam)
    }

    /// `1 - coeff * mono`, ignoring multiplicity.
    pub fn base_poly(&self) -> LaurentPolynomial {
        &LaurentPolynomial::one() - &LaurentPolynomial::term(self.coeff.clone(), self.mono.clone())
    }

    /// `(1 - coeff * mono)^mult` fully expanded.
    pub fn expand(&self) -> LaurentPolynomial {
        self.base_poly().pow(self.mult)
    }

    /// `coeff * mono` as a unit.
    pub fn ratio(&self) -> ScaledMonomial {
        ScaledMonomial::new(self.coeff.clone(), self.mono.clone()).expect("factor coeff nonzero")
    }
}

impl fmt::Display for Factor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = &self.coeff;
        let body = if c.is_one() {
            format!("1 - {}", self.mono)
        } else if (-c).is_one() {
            format!("1 + {}", self.mono)
        } else if c.is_negative() {
            format!("1 + {}*{}", -c, self.mono)
        } else {
            format!("1 - {}*{}", c, self.mono)
        };
        if self.mult == 1 {
            write!(f, "({body})")
        } else {
            write!(f, "({body})^{}", self.mult)
        }
    }
}

/// One row of the per-lambda classification table: the factors that
/// contain the variable, split by whether its exponent there is positive
/// (contributing) or negative (dually contributing).
#[derive(Clone, Debug)]
pub struct ClassificationRow {
    pub lambda: Symbol,
    pub contributing: Vec<Factor>,
    pub dually_contributing: Vec<Factor>,
    /// (min, max) exponent of the variable across the numerator.
    pub numerator_degrees: (i64, i64),
}

impl ClassificationRow {
    pub fn c_num(&self) -> usize {
        self.contributing.len()
    }

    pub fn dc_num(&self) -> usize {
        self.dually_contributing.len()
    }
}

/// A rational function `num / prod (1 - c_i M_i)^{m_i}` tied to a variable
/// order. Denominator factors are kept merged: no two entries share the
/// same `(coeff, monomial)` pair. A zero numerator short-circuits to the
/// zero function with an empty denominator.
#[derive(Clone, Debug)]
pub struct ElliottRational {
    num: LaurentPolynomial,
    den: Vec<Factor>,
    order: VariableOrder,
}

impl ElliottRational {
    pub fn new(num: LaurentPolynomial, den: Vec<Factor>, order: VariableOrder) -> ElliottRational {
        let mut out = ElliottRational {
            num,
            den: Vec::new(),
            order,
        };
        if out.num.is_zero() {
            return out;
        }
        for f in den {
            out.push_factor(f);
        }
        out
    }

    pub fn from_poly(num: LaurentPolynomial, order: VariableOrder) -> ElliottRational {
        ElliottRational::new(num, Vec::new(), order)
    }

    pub fn zero(order: VariableOrder) -> ElliottRational {
        ElliottRational::from_poly(LaurentPolynomial::zero(), order)
    }

    pub fn one(order: VariableOrder) -> ElliottRational {
        ElliottRational::from_poly(LaurentPolynomial::one(), order)
    }

    pub fn numerator(&self) -> &LaurentPolynomial {
        &self.num
    }

    pub fn denominator(&self) -> &[Factor] {
        &self.den
    }

    pub fn order(&self) -> &VariableOrder {
        &self.order
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// The expanded denominator product.
    pub fn denominator_poly(&self) -> LaurentPolynomial {
        let mut out = LaurentPolynomial::one();
        for f in &self.den {
            out = &out * &f.expand();
        }
        out
    }

    fn push_factor(&mut self, f: Factor) {
        match self.den.iter_mut().find(|g| g.mono == f.mono && g.coeff == f.coeff) {
            Some(g) => g.mult += f.mult,
            None => {
                self.den.push(f);
                self.den.sort_by(|a, b| a.key().cmp(&b.key()));
            }
        }
    }

    /// Divide by `(1 - c M)^m`: append to the denominator.
    pub fn div_factor(&self, f: Factor) -> ElliottRational {
        if self.is_zero() {
            return self.clone();
        }
        let mut out = self.clone();
        out.push_factor(f);
        out
    }

    /// Remove one denominator entry wholesale, returning it.
    pub(crate) fn without_factor(&self, idx: usize) -> (ElliottRational, Factor) {
        let mut out = self.clone();
        let f = out.den.remove(idx);
        (out, f)
    }

    pub fn mul_unit(&self, u: &ScaledMonomial) -> ElliottRational {
        ElliottRational {
            num: self.num.mul_unit(u),
            den: self.den.clone(),
            order: self.order.clone(),
        }
    }

    pub fn mul_poly(&self, p: &LaurentPolynomial) -> ElliottRational {
        ElliottRational::new(&self.num * p, self.den.clone(), self.order.clone())
    }

    pub fn scale(&self, c: &BigRational) -> ElliottRational {
        ElliottRational::new(self.num.scale(c), self.den.clone(), self.order.clone())
    }

    pub fn neg(&self) -> ElliottRational {
        ElliottRational {
            num: -&self.num,
            den: self.den.clone(),
            order: self.order.clone(),
        }
    }

    pub fn mul(&self, other: &ElliottRational) -> ElliottRational {
        let mut den = self.den.clone();
        den.extend(other.den.iter().cloned());
        ElliottRational::new(&self.num * &other.num, den, self.order.clone())
    }

    /// Sum over the least common denominator (per-key maximum
    /// multiplicity).
    pub fn add(&self, other: &ElliottRational) -> ElliottRational {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        let mut union: Vec<Factor> = self.den.clone();
        for f in &other.den {
            match union
                .iter_mut()
                .find(|g| g.mono == f.mono && g.coeff == f.coeff)
            {
                Some(g) => g.mult = g.mult.max(f.mult),
                None => union.push(f.clone()),
            }
        }
        let cofactor = |den: &[Factor]| {
            let mut p = LaurentPolynomial::one();
            for u in &union {
                let have = den
                    .iter()
                    .find(|g| g.mono == u.mono && g.coeff == u.coeff)
                    .map_or(0, |g| g.mult);
                if u.mult > have {
                    p = &p * &u.with_mult(u.mult - have).expand();
                }
            }
            p
        };
        let num = &(&self.num * &cofactor(&self.den)) + &(&other.num * &cofactor(&other.den));
        ElliottRational::new(num, union, self.order.clone())
    }

    pub fn sub(&self, other: &ElliottRational) -> ElliottRational {
        self.add(&other.neg())
    }

    /// Exact equality as rational functions: cross-multiplied expansions
    /// agree. Shared denominator factors are cancelled first.
    pub fn rational_equal(&self, other: &ElliottRational) -> bool {
        if self.is_zero() || other.is_zero() {
            return self.is_zero() && other.is_zero();
        }
        let mut mine: Vec<Factor> = Vec::new();
        let mut theirs: Vec<Factor> = other.den.clone();
        for f in &self.den {
            match theirs
                .iter_mut()
                .position(|g| g.mono == f.mono && g.coeff == f.coeff)
            {
                Some(i) => {
                    let common = f.mult.min(theirs[i].mult);
                    if f.mult > common {
                        mine.push(f.with_mult(f.mult - common));
                    }
                    if theirs[i].mult > common {
                        theirs[i].mult -= common;
                    } else {
                        theirs.remove(i);
                    }
                }
                None => mine.push(f.clone()),
            }
        }
        let mut lhs = self.num.clone();
        for f in &theirs {
            lhs = &lhs * &f.expand();
        }
        let mut rhs = other.num.clone();
        for f in &mine {
            rhs = &rhs * &f.expand();
        }
        lhs == rhs
    }

    /// Cancel denominator factors that divide the numerator exactly.
    pub fn reduce(&self) -> ElliottRational {
        if self.is_zero() {
            return self.clone();
        }
        let mut num = self.num.clone();
        let mut den = Vec::new();
        for f in &self.den {
            let pivot = f
                .mono
                .iter()
                .next()
                .map(|(v, _)| v)
                .expect("factor monomial is not the unit");
            let mut left = f.mult;
            while left > 0 && reduce_mod_binomial(&num, &f.coeff, &f.mono, pivot).is_zero() {
                num = div_exact_binomial(&num, &f.coeff, &f.mono, pivot)
                    .expect("zero residue implies exact divisibility");
                left -= 1;
            }
            if left > 0 {
                den.push(f.with_mult(left));
            }
        }
        ElliottRational::new(num, den, self.order.clone())
    }

    /// Apply a simultaneous substitution. Factors whose monomial collapses
    /// to 1 with coefficient `c != 1` turn into the constant `(1 - c)` and
    /// are absorbed into the numerator; a collapse with `c = 1` is a pole.
    /// Parameter variables introduced by the images are appended to the
    /// order.
    pub fn substitute(&self, subst: &Substitution) -> Result<ElliottRational> {
        let num = self.num.substitute(subst);
        let mut scale = BigRational::one();
        let mut den = Vec::new();
        for f in &self.den {
            let mut image = ScaledMonomial::new(f.coeff.clone(), Monomial::one()).unwrap();
            for (v, e) in f.mono.iter() {
                match subst.get(&v) {
                    Some(s) => image = image.mul(&s.pow(e as i64)),
                    None => {
                        image = image.mul(&ScaledMonomial::from_monomial(Monomial::from_pairs([
                            (v, e),
                        ])))
                    }
                }
            }
            if image.monomial().is_one() {
                let c = image.coeff();
                if c.is_one() {
                    return Err(Error::PoleUnderSubstitution {
                        factor: f.to_string(),
                    });
                }
                let unit = BigRational::one() - c;
                scale *= crate::algebra::rat_pow(&unit, -(f.mult as i64));
            } else {
                den.push(Factor::new(
                    image.coeff().clone(),
                    image.monomial().clone(),
                    f.mult,
                )?);
            }
        }
        let order = self.order_extended_for(&num, &den)?;
        Ok(ElliottRational::new(num.scale(&scale), den, order))
    }

    /// Extend the order with any new parameter variables that a
    /// substitution introduced.
    fn order_extended_for(
        &self,
        num: &LaurentPolynomial,
        den: &[Factor],
    ) -> Result<VariableOrder> {
        let mut fresh: Vec<(String, Symbol)> = Vec::new();
        let mut note = |m: &Monomial| {
            for (v, _) in m.iter() {
                if !self.order.contains(v) && !fresh.iter().any(|(_, w)| *w == v) {
                    fresh.push((v.name(), v));
                }
            }
        };
        for (m, _) in num.iter() {
            note(m);
        }
        for f in den {
            note(&f.mono);
        }
        if fresh.is_empty() {
            return Ok(self.order.clone());
        }
        fresh.sort();
        let mut vars = self.order.vars().to_vec();
        vars.extend(fresh.into_iter().map(|(_, v)| v));
        VariableOrder::from_vars(vars, self.order.lambdas().to_vec())
    }

    /// The same value over a different (usually larger) variable order.
    pub fn with_order(&self, order: VariableOrder) -> Result<ElliottRational> {
        let check = |m: &Monomial| -> Result<()> {
            for (v, _) in m.iter() {
                if !order.contains(v) {
                    return Err(Error::UnknownVariable(v.name()));
                }
            }
            Ok(())
        };
        for (m, _) in self.num.iter() {
            check(m)?;
        }
        for f in &self.den {
            check(&f.mono)?;
        }
        Ok(ElliottRational {
            num: self.num.clone(),
            den: self.den.clone(),
            order,
        })
    }

    /// Evaluate at `lam = 1`.
    pub fn eval_at_one(&self, lam: Symbol) -> Result<ElliottRational> {
        let mut s = Substitution::new();
        s.insert(lam, ScaledMonomial::one());
        self.substitute(&s)
    }

    /// Rewrite so every denominator factor carries a nonnegative exponent
    /// of `lam`; flipped units are absorbed into the numerator. The value
    /// is unchanged.
    pub fn normalize_in(&self, lam: Symbol) -> ElliottRational {
        let mut num = self.num.clone();
        let mut den = Vec::new();
        for f in &self.den {
            let e = f.exponent_of(lam);
            if e >= 0 {
                den.push(f.clone());
                continue;
            }
            // 1 - cM = (-cM)(1 - c^{-1} M^{-1})
            let unit = ScaledMonomial::new(-f.coeff.clone(), f.mono.clone())
                .expect("factor coeff nonzero")
                .pow(-(f.mult as i64));
            num = num.mul_unit(&unit);
            den.push(Factor {
                coeff: f.coeff.recip(),
                mono: f.mono.inv(),
                mult: f.mult,
            });
        }
        ElliottRational::new(num, den, self.order.clone())
    }

    /// Lambda variables that occur anywhere in the value, in order.
    pub fn lambdas_present(&self) -> Vec<Symbol> {
        self.order
            .lambdas()
            .iter()
            .copied()
            .filter(|&l| self.uses_var(l))
            .collect()
    }

    pub fn uses_var(&self, v: Symbol) -> bool {
        self.num.iter().any(|(m, _)| m.exponent(v) != 0)
            || self.den.iter().any(|f| f.exponent_of(v) != 0)
    }

    /// Per-lambda classification table. A factor containing the variable
    /// is contributing when its monomial is small in the order with that
    /// variable promoted to the front, i.e. when the variable's exponent
    /// in it is positive.
    pub fn classify(&self) -> Vec<ClassificationRow> {
        let mut rows = Vec::new();
        for &lam in self.order.lambdas() {
            if !self.uses_var(lam) {
                continue;
            }
            rows.push(self.classify_for(lam));
        }
        rows
    }

    pub(crate) fn classify_for(&self, lam: Symbol) -> ClassificationRow {
        let mut contributing = Vec::new();
        let mut dually = Vec::new();
        for f in &self.den {
            let e = f.exponent_of(lam);
            if e == 0 {
                continue;
            }
            // Smallness is tested on the lambda-normalized monomial, so it
            // does not depend on how the factor happens to be written.
            let normalized = if e < 0 { f.mono.inv() } else { f.mono.clone() };
            if self
                .order
                .is_small_in_field(&normalized)
                .expect("factor monomial is not the unit")
            {
                contributing.push(f.clone());
            } else {
                dually.push(f.clone());
            }
        }
        ClassificationRow {
            lambda: lam,
            contributing,
            dually_contributing: dually,
            numerator_degrees: self.num.degree_range(lam).unwrap_or((0, 0)),
        }
    }

    /// Deterministic shape for printing: factors whose monomial is large
    /// under the order are flipped to small ones (units absorbed into the
    /// numerator), and factors are sorted by exponent vector.
    pub fn canonicalized(&self) -> ElliottRational {
        if self.is_zero() {
            return self.clone();
        }
        let mut num = self.num.clone();
        let mut den = Vec::new();
        for f in &self.den {
            if is_small(&f.mono, &self.order).expect("factor monomial is not the unit") {
                den.push(f.clone());
            } else {
                let unit = ScaledMonomial::new(-f.coeff.clone(), f.mono.clone())
                    .expect("factor coeff nonzero")
                    .pow(-(f.mult as i64));
                num = num.mul_unit(&unit);
                den.push(Factor {
                    coeff: f.coeff.recip(),
                    mono: f.mono.inv(),
                    mult: f.mult,
                });
            }
        }
        let mut out = ElliottRational::new(num, den, self.order.clone());
        let vars = out.order.vars().to_vec();
        out.den.sort_by(|a, b| {
            a.mono
                .exponent_vector(&vars)
                .cmp(&b.mono.exponent_vector(&vars))
                .then_with(|| a.coeff.cmp(&b.coeff))
        });
        out
    }
}

impl fmt::Display for ElliottRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_empty() {
            return write!(f, "{}", self.num);
        }
        let parts: Vec<String> = self.den.iter().map(|x| x.to_string()).collect();
        let num = self.num.to_string();
        if self.num.num_terms() > 1 {
            write!(f, "({num}) / ({})", parts.join("*"))
        } else {
            write!(f, "{num} / ({})", parts.join("*"))
        }
    }
}

/// Sum a sequence of values, cancelling after every step to keep the
/// representation near its reduced size.
pub fn sum_reduced<I>(order: &VariableOrder, terms: I) -> ElliottRational
where
    I: IntoIterator<Item = ElliottRational>,
{
    let mut acc = ElliottRational::zero(order.clone());
    for t in terms {
        acc = acc.add(&t).reduce();
    }
    acc
}
