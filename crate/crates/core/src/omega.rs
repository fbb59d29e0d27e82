//! The elimination engine.
//!
//! To remove one lambda variable from an Elliott rational function the
//! engine normalizes every denominator factor to a nonnegative lambda
//! exponent, splits the function by partial fractions in lambda, and keeps
//! exactly the pieces whose series expansion carries nonnegative lambda
//! powers:
//!
//! - the polynomial part, evaluated at lambda = 1;
//! - for every contributing factor `(1 - c u l^a)^m` (one whose lambda
//!   exponent was positive as written), the residues `A_j(1) / (1 - c u)^j`.
//!
//! The dual route instead evaluates the whole function at lambda = 1 and
//! subtracts the residue evaluations of the dually contributing factors;
//! both routes agree whenever the dual preconditions (no pole at lambda = 0
//! and a finite value at lambda = 1) hold. Residues live in the quotient
//! ring modulo `1 - c u l^a`, where every other denominator factor reduces
//! to a binomial and is inverted by a terminating geometric identity.

use std::fmt;

use num::traits::One;
use num::BigRational;

use crate::algebra::division::{div_exact_binomial, poly_div_rem, reduce_mod_binomial};
use crate::algebra::{rat_pow, LaurentPolynomial, Monomial, ScaledMonomial, Symbol, VariableOrder};
use crate::elliott::{ElliottRational, Factor};
use crate::{Error, Result};

/// Which elimination formula to use for each variable.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub enum Mode {
    /// Polynomial part plus contributions of the contributing factors.
    Direct,
    /// Value at lambda = 1 minus contributions of the dually contributing
    /// factors; falls back to direct when its preconditions fail.
    Dual,
    /// Pick per variable: dual when there are strictly fewer dually
    /// contributing factors and its preconditions hold.
    #[default]
    Auto,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Mode::Direct => write!(f, "direct"),
            Mode::Dual => write!(f, "dual"),
            Mode::Auto => write!(f, "auto"),
        }
    }
}

/// Elimination plan: a formula mode and an optional explicit variable
/// order (`None` lets the per-step heuristic choose).
#[derive(Clone, Debug, Default)]
pub struct EliminationStrategy {
    pub mode: Mode,
    pub lambda_order: Option<Vec<Symbol>>,
}

impl EliminationStrategy {
    pub fn auto() -> EliminationStrategy {
        EliminationStrategy::default()
    }

    pub fn with_mode(mode: Mode) -> EliminationStrategy {
        EliminationStrategy {
            mode,
            lambda_order: None,
        }
    }

    pub fn with_order(mode: Mode, order: Vec<Symbol>) -> EliminationStrategy {
        EliminationStrategy {
            mode,
            lambda_order: Some(order),
        }
    }
}

/// One residue of a partial fraction decomposition: the numerator of
/// `value / (1 - c u l^a)^level`. The value's numerator has lambda degree
/// below `a` and its denominator factors are lambda-free.
#[derive(Clone, Debug)]
pub struct Residue {
    pub factor: Factor,
    pub level: u32,
    pub value: ElliottRational,
}

/// Partial fraction decomposition of an Elliott rational function with
/// respect to one lambda: polynomial part, pole part at lambda = 0, and
/// residues for every lambda-containing denominator factor.
#[derive(Clone, Debug)]
pub struct PartialFractionResult {
    pub lambda: Symbol,
    /// Lambda-polynomial part, over the lambda-free denominator factors.
    pub poly_part: ElliottRational,
    /// `(p, s)`: the pole part is `p / lambda^s` with `deg p < s`.
    pub pole_part: (ElliottRational, i64),
    pub residues: Vec<Residue>,
}

impl PartialFractionResult {
    /// Recombine all parts; equals the decomposed input as a rational
    /// function.
    pub fn reassemble(&self) -> ElliottRational {
        let mut total = self.poly_part.clone();
        let (p, s) = &self.pole_part;
        if !p.is_zero() {
            let shift = ScaledMonomial::from_monomial(Monomial::from_pairs([(
                self.lambda,
                -(*s as i32),
            )]));
            total = total.add(&p.mul_unit(&shift));
        }
        for r in &self.residues {
            total = total.add(&r.value.div_factor(r.factor.with_mult(r.level)));
        }
        total
    }
}

/// One elimination step of the driver.
#[derive(Clone, Debug)]
pub struct TraceStep {
    pub lambda: Symbol,
    /// The formula actually used (never `Auto`).
    pub mode: Mode,
    /// Factors whose residues entered the sum.
    pub processed: Vec<Factor>,
    /// The value after this step.
    pub result: ElliottRational,
}

/// The ordered record of a full elimination.
#[derive(Clone, Debug, Default)]
pub struct TraceLog {
    pub steps: Vec<TraceStep>,
}

/// Canonical representative of `p` modulo the ideal generated by the base
/// binomial of `f`, with lambda degrees confined to `[0, a)`. Multiplicity
/// is ignored. `f` must carry a positive exponent of `lam`.
pub fn reduce_mod(p: &LaurentPolynomial, f: &Factor, lam: Symbol) -> LaurentPolynomial {
    assert!(f.exponent_of(lam) > 0, "factor must be normalized in lambda");
    reduce_mod_binomial(p, f.coeff(), f.monomial(), lam)
}

/// Inverse of `g` in the quotient ring modulo the base binomial of `f`,
/// for the shapes elimination produces: a constant, a single term, or a
/// difference of two terms. The inverse is a lambda-polynomial over
/// lambda-free denominator factors, hence an [`ElliottRational`].
pub fn invert_mod(
    g: &LaurentPolynomial,
    f: &Factor,
    lam: Symbol,
    order: &VariableOrder,
) -> Result<ElliottRational> {
    let a = f.exponent_of(lam);
    assert!(a > 0, "modulus must be normalized in lambda");
    if g.is_zero() {
        return Err(Error::HiddenCommonRoot {
            factor: "0".into(),
            modulus: f.to_string(),
        });
    }
    if let Some(c) = g.as_constant() {
        return Ok(ElliottRational::from_poly(
            LaurentPolynomial::constant(c.recip()),
            order.clone(),
        ));
    }
    if let Some(u) = g.as_unit() {
        let inv = reduce_mod(&LaurentPolynomial::from_unit(&u.pow(-1)), f, lam);
        return Ok(ElliottRational::from_poly(inv, order.clone()));
    }
    if g.num_terms() == 2 {
        // g = A - B = A (1 - B/A); pick A with the smaller lambda degree
        // so the ratio has a nonnegative lambda exponent.
        let mut terms: Vec<ScaledMonomial> = g
            .iter()
            .map(|(m, c)| ScaledMonomial::new(c.clone(), m.clone()).unwrap())
            .collect();
        terms.sort_by(|s, t| {
            s.monomial()
                .exponent(lam)
                .cmp(&t.monomial().exponent(lam))
                .then_with(|| s.monomial().cmp(t.monomial()))
        });
        let (a_term, b_term) = (terms[0].clone(), terms[1].clone());
        let ratio = b_term.mul(&a_term.pow(-1));
        let r_coeff = -ratio.coeff().clone();
        let r_mono = ratio.monomial().clone();
        let b = r_mono.exponent(lam);
        debug_assert!(b >= 0);
        let a_inv = a_term.pow(-1);

        if b == 0 {
            // Lambda-free binomial 1 - r_coeff * r_mono; the monomial is
            // not 1 because the two terms of g are distinct.
            let base = ElliottRational::from_poly(
                reduce_mod(&LaurentPolynomial::from_unit(&a_inv), f, lam),
                order.clone(),
            );
            return Ok(base.div_factor(Factor::new(r_coeff, r_mono, 1)?));
        }

        // Geometric inversion: (1 - w)(1 + w + ... + w^{N-1}) = 1 - w^N,
        // with N chosen so w^N is lambda-free after reduction.
        let n = (a / gcd(a, b)) as i64;
        let w = ScaledMonomial::new(r_coeff, r_mono).expect("ratio is nonzero");
        let mut geom = LaurentPolynomial::zero();
        for t in 0..n {
            let pw = w.pow(t);
            geom.add_term(pw.coeff(), pw.monomial());
        }
        let geom = reduce_mod(&geom.mul_unit(&a_inv), f, lam);
        let wn_red = reduce_mod(&LaurentPolynomial::from_unit(&w.pow(n)), f, lam)
            .as_unit()
            .expect("a power of a unit is a unit");
        debug_assert_eq!(wn_red.monomial().exponent(lam), 0);
        if wn_red.monomial().is_one() {
            if wn_red.coeff().is_one() {
                return Err(Error::HiddenCommonRoot {
                    factor: g.to_string(),
                    modulus: f.to_string(),
                });
            }
            let scale = (BigRational::one() - wn_red.coeff()).recip();
            return Ok(ElliottRational::from_poly(
                geom.scale(&scale),
                order.clone(),
            ));
        }
        let den = Factor::new(wn_red.coeff().clone(), wn_red.monomial().clone(), 1)?;
        return Ok(ElliottRational::new(geom, vec![den], order.clone()));
    }
    Err(Error::NotAUnit(g.to_string()))
}

fn gcd(a: i32, b: i32) -> i32 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// All residues of `e` for the denominator factor at `idx`, levels
/// `mult, mult-1, ..., 1`. The top level is the reduction of the rest of
/// the function; lower levels peel by subtracting and dividing by the
/// factor once.
fn residues_for_factor(e: &ElliottRational, lam: Symbol, idx: usize) -> Result<Vec<Residue>> {
    let (rest, f) = e.without_factor(idx);
    debug_assert!(f.exponent_of(lam) > 0);
    let order = e.order().clone();
    let mut g = rest;
    let mut out = Vec::new();
    for level in (1..=f.mult()).rev() {
        let mut value =
            ElliottRational::from_poly(reduce_mod(g.numerator(), &f, lam), order.clone());
        for h in g.denominator() {
            let h_red = reduce_mod(&h.base_poly(), &f, lam);
            let inv = invert_mod(&h_red, &f, lam, &order).map_err(|err| match err {
                Error::HiddenCommonRoot { .. } => Error::HiddenCommonRoot {
                    factor: h.to_string(),
                    modulus: f.to_string(),
                },
                other => other,
            })?;
            for _ in 0..h.mult() {
                let prod = value.mul(&inv);
                value = ElliottRational::new(
                    reduce_mod(prod.numerator(), &f, lam),
                    prod.denominator().to_vec(),
                    order.clone(),
                );
            }
        }
        out.push(Residue {
            factor: f.clone(),
            level,
            value: value.clone(),
        });
        if level > 1 {
            let diff = g.sub(&value);
            let num = div_exact_binomial(diff.numerator(), f.coeff(), f.monomial(), lam)
                .expect("difference with the residue is divisible by the factor");
            g = ElliottRational::new(num, diff.denominator().to_vec(), order.clone());
        }
    }
    Ok(out)
}

/// Split `e` (normalized in `lam`) into polynomial part and pole part:
/// the `P` and `(p, s)` of `P + p/lam^s + sum A_ij / f_i^j`.
fn poly_and_pole_parts(
    e: &ElliottRational,
    lam: Symbol,
) -> (ElliottRational, ElliottRational, i64) {
    let order = e.order().clone();
    if e.is_zero() {
        let zero = ElliottRational::zero(order.clone());
        return (zero.clone(), zero, 0);
    }
    let free: Vec<Factor> = e
        .denominator()
        .iter()
        .filter(|f| f.exponent_of(lam) == 0)
        .cloned()
        .collect();

    let min_deg = e.numerator().degree_range(lam).map_or(0, |(lo, _)| lo);
    let s = (-min_deg).max(0);
    let shift = ScaledMonomial::from_monomial(Monomial::from_pairs([(lam, s as i32)]));
    let n_poly = e.numerator().mul_unit(&shift);

    let mut f_poly = LaurentPolynomial::one();
    for f in e.denominator() {
        if f.exponent_of(lam) > 0 {
            f_poly = &f_poly * &f.expand();
        }
    }
    let divisor = f_poly.mul_unit(&shift);
    let (q, r) = poly_div_rem(&n_poly, &divisor, lam).expect("divisor has a unit leading block");
    let poly_part = ElliottRational::new(q, free.clone(), order.clone());

    let pole_num = if s == 0 {
        LaurentPolynomial::zero()
    } else {
        // p = r * f_poly^{-1} mod lam^s, via the Neumann series of
        // (1 - f_poly), which has positive lambda order.
        let t = &LaurentPolynomial::one() - &f_poly;
        let mut inv = LaurentPolynomial::one();
        let mut pw = LaurentPolynomial::one();
        for _ in 1..s {
            pw = truncate_window(&(&pw * &t), lam, s);
            if pw.is_zero() {
                break;
            }
            inv = &inv + &pw;
        }
        truncate_window(&(&r * &inv), lam, s)
    };
    let pole_part = ElliottRational::new(pole_num, free, order);
    (poly_part, pole_part, s)
}

/// Keep only terms with lambda degree in `[0, bound)`.
fn truncate_window(p: &LaurentPolynomial, lam: Symbol, bound: i64) -> LaurentPolynomial {
    let mut out = LaurentPolynomial::zero();
    for (m, c) in p.iter() {
        if (0..bound).contains(&(m.exponent(lam) as i64)) {
            out.add_term(c, m);
        }
    }
    out
}

/// Full partial fraction decomposition of `e` with respect to `lam`. The
/// input is normalized in `lam` first, a value-preserving rewrite.
pub fn partial_fractions(e: &ElliottRational, lam: Symbol) -> Result<PartialFractionResult> {
    let e = e.normalize_in(lam);
    let (poly_part, pole, s) = poly_and_pole_parts(&e, lam);
    let mut residues = Vec::new();
    for (idx, f) in e.denominator().iter().enumerate() {
        if f.exponent_of(lam) > 0 {
            residues.extend(residues_for_factor(&e, lam, idx)?);
        }
    }
    Ok(PartialFractionResult {
        lambda: lam,
        poly_part,
        pole_part: (pole, s),
        residues,
    })
}

/// Operator value of one residue: `A(1) / (1 - c u)^level`. Zero when
/// `A(1)` vanishes; divergent when `c u = 1` and it does not.
fn residue_contribution(r: &Residue, lam: Symbol) -> Result<ElliottRational> {
    let at_one = r.value.eval_at_one(lam)?;
    if at_one.is_zero() {
        return Ok(at_one);
    }
    let a = r.factor.exponent_of(lam);
    let u = r.factor.monomial().mul(&Monomial::from_pairs([(lam, -a)]));
    let c = r.factor.coeff();
    if u.is_one() {
        if c.is_one() {
            return Err(Error::Divergent {
                factor: r.factor.to_string(),
            });
        }
        let scale = rat_pow(&(BigRational::one() - c), -(r.level as i64));
        return Ok(at_one.scale(&scale));
    }
    Ok(at_one.div_factor(Factor::new(c.clone(), u, r.level)?))
}

struct StepOutcome {
    result: ElliottRational,
    mode: Mode,
    processed: Vec<Factor>,
}

fn eliminate_one_inner(e: &ElliottRational, lam: Symbol, mode: Mode) -> Result<StepOutcome> {
    if e.is_zero() {
        return Ok(StepOutcome {
            result: e.clone(),
            mode: Mode::Direct,
            processed: Vec::new(),
        });
    }

    let norm = e.normalize_in(lam);

    // Classify every normalized lambda factor by smallness in the working
    // field; the test is representation-independent.
    let mut small = Vec::new();
    for (idx, f) in norm.denominator().iter().enumerate() {
        if f.exponent_of(lam) > 0 {
            small.push((idx, norm.order().is_small_in_field(f.monomial())?));
        }
    }
    let c_num = small.iter().filter(|(_, s)| *s).count();
    let dc_num = small.len() - c_num;

    let s = norm
        .numerator()
        .degree_range(lam)
        .map_or(0, |(lo, _)| (-lo).max(0));
    let prefer_dual = match mode {
        Mode::Direct => false,
        Mode::Dual => true,
        Mode::Auto => dc_num < c_num,
    };
    let value_at_one = if prefer_dual && s == 0 {
        norm.eval_at_one(lam).ok()
    } else {
        None
    };

    match value_at_one {
        Some(e1) => {
            let mut total = e1;
            let mut processed = Vec::new();
            for &(idx, is_small) in &small {
                if is_small {
                    continue;
                }
                processed.push(norm.denominator()[idx].clone());
                for r in residues_for_factor(&norm, lam, idx)? {
                    total = total.sub(&residue_contribution(&r, lam)?).reduce();
                }
            }
            Ok(StepOutcome {
                result: total.reduce(),
                mode: Mode::Dual,
                processed,
            })
        }
        None => {
            let (poly_part, _, _) = poly_and_pole_parts(&norm, lam);
            let mut total = poly_part.eval_at_one(lam)?;
            let mut processed = Vec::new();
            for &(idx, is_small) in &small {
                if !is_small {
                    continue;
                }
                processed.push(norm.denominator()[idx].clone());
                for r in residues_for_factor(&norm, lam, idx)? {
                    total = total.add(&residue_contribution(&r, lam)?).reduce();
                }
            }
            Ok(StepOutcome {
                result: total.reduce(),
                mode: Mode::Direct,
                processed,
            })
        }
    }
}

/// Eliminate a single lambda variable: the result is free of `lam` and is
/// the nonnegative-`lam` part of the series of `e`, evaluated at 1.
pub fn eliminate_one(e: &ElliottRational, lam: Symbol, mode: Mode) -> Result<ElliottRational> {
    Ok(eliminate_one_inner(e, lam, mode)?.result)
}

/// Eliminate every lambda variable present, recording one trace step per
/// variable. With no explicit order, each step picks the variable with the
/// fewest factors on its cheaper side (ties broken by position in the
/// variable order).
pub fn eliminate_all(
    e: &ElliottRational,
    strategy: &EliminationStrategy,
) -> Result<(ElliottRational, TraceLog)> {
    let present = e.lambdas_present();
    if let Some(ref explicit) = strategy.lambda_order {
        let mut want = explicit.clone();
        want.sort();
        want.dedup();
        let mut have = present.clone();
        have.sort();
        if want != have {
            return Err(Error::BadEliminationOrder {
                given: explicit
                    .iter()
                    .map(|s| s.name())
                    .collect::<Vec<_>>()
                    .join(","),
                present: present
                    .iter()
                    .map(|s| s.name())
                    .collect::<Vec<_>>()
                    .join(","),
            });
        }
    }

    let mut cur = e.clone();
    let mut log = TraceLog::default();
    loop {
        let todo = cur.lambdas_present();
        if todo.is_empty() {
            break;
        }
        let lam = match &strategy.lambda_order {
            Some(explicit) => match explicit.iter().copied().find(|l| todo.contains(l)) {
                Some(l) => l,
                // Remaining lambdas vanished through cancellation.
                None => break,
            },
            None => {
                let mut best = todo[0];
                let mut best_cost = usize::MAX;
                for &l in &todo {
                    let row = cur.classify_for(l);
                    let cost = row.c_num().min(row.dc_num());
                    if cost < best_cost {
                        best = l;
                        best_cost = cost;
                    }
                }
                best
            }
        };
        let outcome = eliminate_one_inner(&cur, lam, strategy.mode)?;
        cur = outcome.result.clone();
        log.steps.push(TraceStep {
            lambda: lam,
            mode: outcome.mode,
            processed: outcome.processed,
            result: outcome.result,
        });
    }
    Ok((cur, log))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Substitution;

    fn rat(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    fn mono(pairs: &[(&str, i32)]) -> Monomial {
        Monomial::from_pairs(pairs.iter().copied())
    }

    fn poly(terms: &[(i64, &[(&str, i32)])]) -> LaurentPolynomial {
        let mut out = LaurentPolynomial::zero();
        for &(c, m) in terms {
            out.add_term(&rat(c), &mono(m));
        }
        out
    }

    fn factor(pairs: &[(&str, i32)]) -> Factor {
        Factor::from_monomial(mono(pairs)).unwrap()
    }

    fn ord(lams: &[&str], xs: &[&str]) -> VariableOrder {
        VariableOrder::new(lams, xs).unwrap()
    }

    fn l() -> Symbol {
        Symbol::new("l")
    }

    /// 1/((1-x l)(1-y l)(1-z/l))
    fn basic_example() -> ElliottRational {
        ElliottRational::new(
            LaurentPolynomial::one(),
            vec![
                factor(&[("x", 1), ("l", 1)]),
                factor(&[("y", 1), ("l", 1)]),
                factor(&[("z", 1), ("l", -1)]),
            ],
            ord(&["l"], &["x", "y", "z"]),
        )
    }

    /// (1-xyz)/((1-x)(1-y)(1-xz)(1-zy))
    fn basic_expected() -> ElliottRational {
        ElliottRational::new(
            poly(&[(1, &[]), (-1, &[("x", 1), ("y", 1), ("z", 1)])]),
            vec![
                factor(&[("x", 1)]),
                factor(&[("y", 1)]),
                factor(&[("x", 1), ("z", 1)]),
                factor(&[("y", 1), ("z", 1)]),
            ],
            ord(&["l"], &["x", "y", "z"]),
        )
    }

    #[test]
    fn reduce_mod_examples() {
        let f = factor(&[("x", 1), ("l", 1)]);
        let p = poly(&[(1, &[]), (-1, &[("y", 1), ("l", 1)])]);
        assert_eq!(
            reduce_mod(&p, &f, l()),
            poly(&[(1, &[]), (-1, &[("y", 1), ("x", -1)])])
        );
        let f2 = factor(&[("u", 1), ("l", 3)]);
        assert_eq!(
            reduce_mod(&poly(&[(1, &[("l", 3)])]), &f2, l()),
            poly(&[(1, &[("u", -1)])])
        );
        let f3 = factor(&[("x", 1), ("l", 2)]);
        assert_eq!(
            reduce_mod(&poly(&[(1, &[("l", 3)])]), &f3, l()),
            poly(&[(1, &[("x", -1), ("l", 1)])])
        );
    }

    #[test]
    fn invert_lambda_free_unit() {
        let o = ord(&["l"], &["x", "y"]);
        let f = factor(&[("x", 1), ("l", 1)]);
        let g = poly(&[(1, &[]), (-1, &[("y", 1), ("x", -1)])]);
        let inv = invert_mod(&g, &f, l(), &o).unwrap();
        let prod = inv.mul_poly(&g);
        assert!(prod.rational_equal(&ElliottRational::one(o)));
    }

    #[test]
    fn invert_reduced_factor() {
        // 1 - y l modulo 1 - x l inverts to 1/(1 - y/x):
        // g * inv.num must reduce to inv's denominator polynomial.
        let o = ord(&["l"], &["x", "y"]);
        let f = factor(&[("x", 1), ("l", 1)]);
        let g = poly(&[(1, &[]), (-1, &[("y", 1), ("l", 1)])]);
        let inv = invert_mod(&g, &f, l(), &o).unwrap();
        let lhs = reduce_mod(&(&g * inv.numerator()), &f, l());
        assert_eq!(lhs, inv.denominator_poly());
        let expected_den = mono(&[("y", 1), ("x", -1)]);
        assert_eq!(inv.denominator()[0].monomial(), &expected_den);
    }

    #[test]
    fn invert_geometric_case() {
        // 1 - y l modulo 1 - x l^2: N = 2, denominator 1 - y^2/x.
        let o = ord(&["l"], &["x", "y"]);
        let f = factor(&[("x", 1), ("l", 2)]);
        let g = poly(&[(1, &[]), (-1, &[("y", 1), ("l", 1)])]);
        let inv = invert_mod(&g, &f, l(), &o).unwrap();
        let prod = reduce_mod(&(&g * inv.numerator()), &f, l());
        assert_eq!(prod, inv.denominator_poly());
    }

    #[test]
    fn invert_detects_hidden_common_root() {
        let o = ord(&["l"], &["y"]);
        let f = factor(&[("y", 2), ("l", 2)]);
        let g = poly(&[(1, &[]), (-1, &[("y", 1), ("l", 1)])]);
        assert!(matches!(
            invert_mod(&g, &f, l(), &o),
            Err(Error::HiddenCommonRoot { .. })
        ));
    }

    #[test]
    fn partial_fractions_reassembles_basic_example() {
        let e = basic_example();
        let pf = partial_fractions(&e, l()).unwrap();
        assert_eq!(pf.residues.len(), 3);
        assert!(pf.reassemble().rational_equal(&e));
    }

    #[test]
    fn partial_fractions_residue_matches_known_value() {
        // The residue at (1-x l), evaluated at 1 over (1-x), is
        // 1/((1-x)(1-x^{-1}y)(1-xz)).
        let e = basic_example();
        let pf = partial_fractions(&e, l()).unwrap();
        let rx: Vec<&Residue> = pf
            .residues
            .iter()
            .filter(|r| r.factor.monomial() == &mono(&[("x", 1), ("l", 1)]))
            .collect();
        assert_eq!(rx.len(), 1);
        let contrib = rx[0]
            .value
            .eval_at_one(l())
            .unwrap()
            .div_factor(factor(&[("x", 1)]));
        let expected = ElliottRational::new(
            LaurentPolynomial::one(),
            vec![
                factor(&[("x", 1)]),
                factor(&[("x", -1), ("y", 1)]),
                factor(&[("x", 1), ("z", 1)]),
            ],
            e.order().clone(),
        );
        assert!(contrib.rational_equal(&expected));
    }

    #[test]
    fn partial_fractions_of_lambda_free_value() {
        let o = ord(&["l"], &["x"]);
        let e = ElliottRational::new(
            poly(&[(1, &[]), (2, &[("x", 1)])]),
            vec![factor(&[("x", 1)])],
            o,
        );
        let pf = partial_fractions(&e, l()).unwrap();
        assert!(pf.residues.is_empty());
        assert!(pf.pole_part.0.is_zero());
        assert!(pf.poly_part.rational_equal(&e));
    }

    #[test]
    fn partial_fractions_repeated_factor_levels() {
        // 1/(1-x l)^2: A_{1,2} = 1, A_{1,1} = 0.
        let o = ord(&["l"], &["x"]);
        let e = ElliottRational::new(
            LaurentPolynomial::one(),
            vec![factor(&[("x", 1), ("l", 1)]).with_mult(2)],
            o,
        );
        let pf = partial_fractions(&e, l()).unwrap();
        assert_eq!(pf.residues.len(), 2);
        let lvl2 = pf.residues.iter().find(|r| r.level == 2).unwrap();
        let lvl1 = pf.residues.iter().find(|r| r.level == 1).unwrap();
        assert!(lvl2.value.numerator().is_one());
        assert!(lvl1.value.is_zero());
        assert!(pf.reassemble().rational_equal(&e));
    }

    #[test]
    fn partial_fractions_with_pole_part() {
        // (1 + l^{-2}) / (1 - x l): nonzero p over lambda^2.
        let o = ord(&["l"], &["x"]);
        let e = ElliottRational::new(
            poly(&[(1, &[]), (1, &[("l", -2)])]),
            vec![factor(&[("x", 1), ("l", 1)])],
            o,
        );
        let pf = partial_fractions(&e, l()).unwrap();
        assert_eq!(pf.pole_part.1, 2);
        assert!(!pf.pole_part.0.is_zero());
        assert!(pf.reassemble().rational_equal(&e));
    }

    #[test]
    fn eliminate_basic_example_both_modes() {
        let e = basic_example();
        let expected = basic_expected();
        let direct = eliminate_one(&e, l(), Mode::Direct).unwrap();
        let dual = eliminate_one(&e, l(), Mode::Dual).unwrap();
        assert!(direct.rational_equal(&expected));
        assert!(dual.rational_equal(&expected));
    }

    #[test]
    fn eliminate_lambda_free_value_is_identity() {
        let o = ord(&["l"], &["x"]);
        let e = ElliottRational::new(LaurentPolynomial::one(), vec![factor(&[("x", 1)])], o);
        let got = eliminate_one(&e, l(), Mode::Auto).unwrap();
        assert!(got.rational_equal(&e));
    }

    #[test]
    fn eliminate_square_lambda_two_duals() {
        // 1/((1-l^2 x)(1-y/l)(1-z/l)) -> (1+xy+xz+xyz)/((1-x)(1-xy^2)(1-xz^2))
        let o = ord(&["l"], &["x", "y", "z"]);
        let e = ElliottRational::new(
            LaurentPolynomial::one(),
            vec![
                factor(&[("x", 1), ("l", 2)]),
                factor(&[("y", 1), ("l", -1)]),
                factor(&[("z", 1), ("l", -1)]),
            ],
            o.clone(),
        );
        let expected = ElliottRational::new(
            poly(&[
                (1, &[]),
                (1, &[("x", 1), ("y", 1)]),
                (1, &[("x", 1), ("z", 1)]),
                (1, &[("x", 1), ("y", 1), ("z", 1)]),
            ]),
            vec![
                factor(&[("x", 1)]),
                factor(&[("x", 1), ("y", 2)]),
                factor(&[("x", 1), ("z", 2)]),
            ],
            o,
        );
        for mode in [Mode::Direct, Mode::Dual, Mode::Auto] {
            let got = eliminate_one(&e, l(), mode).unwrap();
            assert!(got.rational_equal(&expected), "mode {mode}");
        }
    }

    #[test]
    fn eliminate_numerator_only_lambda() {
        // l + x/l + 3: keep nonnegative powers of l, set l = 1.
        let o = ord(&["l"], &["x"]);
        let e = ElliottRational::from_poly(
            poly(&[(1, &[("l", 1)]), (1, &[("x", 1), ("l", -1)]), (3, &[])]),
            o.clone(),
        );
        let got = eliminate_one(&e, l(), Mode::Auto).unwrap();
        assert!(got.rational_equal(&ElliottRational::from_poly(poly(&[(4, &[])]), o)));
    }

    #[test]
    fn divergent_sum_is_an_error() {
        let o = ord(&["l"], &["x"]);
        let e = ElliottRational::new(LaurentPolynomial::one(), vec![factor(&[("l", 1)])], o);
        assert!(matches!(
            eliminate_one(&e, l(), Mode::Direct),
            Err(Error::Divergent { .. })
        ));
    }

    #[test]
    fn repeated_large_factor() {
        // 1/((1-x l)(1-z/l)^2) -> 1/((1-x)(1-xz)^2)
        let o = ord(&["l"], &["x", "z"]);
        let e = ElliottRational::new(
            LaurentPolynomial::one(),
            vec![
                factor(&[("x", 1), ("l", 1)]),
                factor(&[("z", 1), ("l", -1)]).with_mult(2),
            ],
            o.clone(),
        );
        let direct = eliminate_one(&e, l(), Mode::Direct).unwrap();
        let dual = eliminate_one(&e, l(), Mode::Dual).unwrap();
        let expected = ElliottRational::new(
            LaurentPolynomial::one(),
            vec![
                factor(&[("x", 1)]),
                factor(&[("x", 1), ("z", 1)]).with_mult(2),
            ],
            o,
        );
        assert!(direct.rational_equal(&expected));
        assert!(dual.rational_equal(&expected));
    }

    #[test]
    fn eliminate_all_tracks_steps_and_is_order_invariant() {
        // 1/((1-a l1)(1-b l2)(1-c/(l1 l2)))
        let o = ord(&["l1", "l2"], &["a", "b", "c"]);
        let e = ElliottRational::new(
            LaurentPolynomial::one(),
            vec![
                factor(&[("a", 1), ("l1", 1)]),
                factor(&[("b", 1), ("l2", 1)]),
                factor(&[("c", 1), ("l1", -1), ("l2", -1)]),
            ],
            o,
        );
        let (auto_res, log) = eliminate_all(&e, &EliminationStrategy::auto()).unwrap();
        assert_eq!(log.steps.len(), 2);
        let (l1, l2) = (Symbol::new("l1"), Symbol::new("l2"));
        let (r12, _) = eliminate_all(
            &e,
            &EliminationStrategy::with_order(Mode::Auto, vec![l1, l2]),
        )
        .unwrap();
        let (r21, _) = eliminate_all(
            &e,
            &EliminationStrategy::with_order(Mode::Auto, vec![l2, l1]),
        )
        .unwrap();
        assert!(auto_res.rational_equal(&r12));
        assert!(r12.rational_equal(&r21));
        assert!(auto_res.lambdas_present().is_empty());
    }

    #[test]
    fn eliminate_all_on_lambda_free_input() {
        let o = ord(&["l"], &["x"]);
        let e = ElliottRational::new(LaurentPolynomial::one(), vec![factor(&[("x", 1)])], o);
        let (res, log) = eliminate_all(&e, &EliminationStrategy::auto()).unwrap();
        assert!(log.steps.is_empty());
        assert!(res.rational_equal(&e));
    }

    #[test]
    fn explicit_order_must_cover_present_lambdas() {
        let o = ord(&["l1", "l2"], &["x"]);
        let e = ElliottRational::new(
            LaurentPolynomial::one(),
            vec![factor(&[("x", 1), ("l1", 1), ("l2", -1)])],
            o,
        );
        let err = eliminate_all(
            &e,
            &EliminationStrategy::with_order(Mode::Auto, vec![Symbol::new("l1")]),
        );
        assert!(matches!(err, Err(Error::BadEliminationOrder { .. })));
    }

    #[test]
    fn linearity_of_the_operator() {
        let o = ord(&["l"], &["x", "y"]);
        let e1 = ElliottRational::new(
            LaurentPolynomial::one(),
            vec![
                factor(&[("x", 1), ("l", 1)]),
                factor(&[("y", 1), ("l", -1)]),
            ],
            o.clone(),
        );
        let e2 = ElliottRational::new(
            poly(&[(1, &[("l", 1)]), (1, &[])]),
            vec![factor(&[("x", 1), ("l", 2)])],
            o,
        );
        let alpha = rat(3);
        let beta = -(rat(2) / rat(5));
        let combo = e1.scale(&alpha).add(&e2.scale(&beta));
        let lhs = eliminate_one(&combo, l(), Mode::Auto).unwrap();
        let r1 = eliminate_one(&e1, l(), Mode::Auto).unwrap();
        let r2 = eliminate_one(&e2, l(), Mode::Auto).unwrap();
        let rhs = r1.scale(&alpha).add(&r2.scale(&beta));
        assert!(lhs.rational_equal(&rhs));
    }

    #[test]
    fn dual_falls_back_when_pole_at_zero() {
        // Numerator 1/l forces s > 0; dual must fall back to direct.
        let o = ord(&["l"], &["x", "z"]);
        let e = ElliottRational::new(
            poly(&[(1, &[("l", -1)])]),
            vec![
                factor(&[("x", 1), ("l", 1)]),
                factor(&[("z", 1), ("l", -1)]),
            ],
            o,
        );
        let dual = eliminate_one(&e, l(), Mode::Dual).unwrap();
        let direct = eliminate_one(&e, l(), Mode::Direct).unwrap();
        assert!(dual.rational_equal(&direct));
    }

    #[test]
    fn substitution_commutes_with_elimination_result() {
        let e = basic_example();
        let res = eliminate_one(&e, l(), Mode::Auto).unwrap();
        let mut s = Substitution::new();
        s.insert(
            Symbol::new("x"),
            ScaledMonomial::from_monomial(mono(&[("q", 2)])),
        );
        let sub = res.substitute(&s).unwrap();
        let expected = basic_expected().substitute(&s).unwrap();
        assert!(sub.rational_equal(&expected));
    }
}
