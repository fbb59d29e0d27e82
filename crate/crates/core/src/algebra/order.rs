//! The total order on monomials induced by an iterated-Laurent-series field.
//!
//! A variable listing `v1, v2, ..., vn` fixes the field; a monomial other
//! than 1 is *small* (expands with nonnegative powers) exactly when the
//! first listed variable it contains carries a positive exponent. The
//! lambda-role variables are the ones an elimination may remove; by
//! convention they precede the parameter variables in the listing.

use std::cmp::Ordering;
use std::fmt;

use super::monomial::Monomial;
use super::symbol::Symbol;
use crate::{Error, Result};

/// An ordered list of distinct variables together with the subset flagged
/// as eliminable (lambda-role).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct VariableOrder {
    vars: Vec<Symbol>,
    lambdas: Vec<Symbol>,
}

impl VariableOrder {
    /// Build an order from the lambda-role variables followed by the
    /// parameter variables.
    pub fn new<S: Into<Symbol> + Clone>(lambdas: &[S], params: &[S]) -> Result<VariableOrder> {
        let l: Vec<Symbol> = lambdas.iter().cloned().map(Into::into).collect();
        let mut vars = l.clone();
        vars.extend(params.iter().cloned().map(Into::into));
        Self::from_vars(vars, l)
    }

    /// Build from an explicit full listing and the lambda subset.
    pub fn from_vars(vars: Vec<Symbol>, lambdas: Vec<Symbol>) -> Result<VariableOrder> {
        for (i, v) in vars.iter().enumerate() {
            if vars[i + 1..].contains(v) {
                return Err(Error::BadParameter(format!("duplicate variable `{v}`")));
            }
        }
        for l in &lambdas {
            if !vars.contains(l) {
                return Err(Error::UnknownVariable(l.name()));
            }
        }
        Ok(VariableOrder { vars, lambdas })
    }

    pub fn vars(&self) -> &[Symbol] {
        &self.vars
    }

    pub fn lambdas(&self) -> &[Symbol] {
        &self.lambdas
    }

    /// Parameter (non-lambda) variables, in order.
    pub fn params(&self) -> Vec<Symbol> {
        self.vars
            .iter()
            .copied()
            .filter(|v| !self.is_lambda(*v))
            .collect()
    }

    pub fn contains(&self, v: Symbol) -> bool {
        self.vars.contains(&v)
    }

    pub fn is_lambda(&self, v: Symbol) -> bool {
        self.lambdas.contains(&v)
    }

    pub fn position(&self, v: Symbol) -> Option<usize> {
        self.vars.iter().position(|&w| w == v)
    }

    /// The same field with one lambda promoted to the front, the order an
    /// elimination in that variable works in.
    pub fn with_lambda_first(&self, lam: Symbol) -> VariableOrder {
        let mut vars = vec![lam];
        vars.extend(self.vars.iter().copied().filter(|&v| v != lam));
        VariableOrder {
            vars,
            lambdas: self.lambdas.clone(),
        }
    }

    /// Signed total degree of a monomial over the parameter variables.
    /// Variables outside this order count as parameters.
    pub fn x_degree(&self, m: &Monomial) -> i64 {
        m.degree_where(|v| !self.is_lambda(v))
    }

    /// The priority listing of the working field itself: the parameter
    /// variables decide first, from the last adjoined (outermost) to the
    /// first, then the lambdas in order. Smallness in this listing is the
    /// representation-independent test that drives classification.
    pub fn field_priority(&self) -> Vec<Symbol> {
        let mut listing: Vec<Symbol> = self.params().into_iter().rev().collect();
        listing.extend(self.lambdas.iter().copied());
        listing
    }

    /// Smallness of a monomial in the working field (see
    /// [`Self::field_priority`]).
    pub fn is_small_in_field(&self, m: &Monomial) -> Result<bool> {
        if m.is_one() {
            return Err(Error::UnitMonomial);
        }
        match m.leading_in(&self.field_priority()) {
            Some((_, e)) => Ok(e > 0),
            None => {
                let mut named: Vec<(String, i32)> = m.iter().map(|(v, e)| (v.name(), e)).collect();
                named.sort();
                Ok(named[0].1 > 0)
            }
        }
    }

    /// Lexicographic comparison of exponent vectors under this order, used
    /// for canonical term ordering in printed output.
    pub fn cmp_monomials(&self, a: &Monomial, b: &Monomial) -> Ordering {
        let va = a.exponent_vector(&self.vars);
        let vb = b.exponent_vector(&self.vars);
        va.cmp(&vb).then_with(|| a.cmp(b))
    }
}

impl fmt::Display for VariableOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = self.vars.iter().map(|v| v.name()).collect();
        write!(f, "{}", names.join(","))
    }
}

/// Whether a monomial is small (less than 1) in the field fixed by `ord`:
/// the first variable in the order with a nonzero exponent decides by its
/// sign. The unit monomial is comparable to nothing.
pub fn is_small(m: &Monomial, ord: &VariableOrder) -> Result<bool> {
    if m.is_one() {
        return Err(Error::UnitMonomial);
    }
    match m.leading_in(ord.vars()) {
        Some((_, e)) => Ok(e > 0),
        // Variables unknown to the order sort after all known ones; fall
        // back to the first nonzero exponent in name order.
        None => {
            let mut named: Vec<(String, i32)> = m.iter().map(|(v, e)| (v.name(), e)).collect();
            named.sort();
            Ok(named[0].1 > 0)
        }
    }
}
