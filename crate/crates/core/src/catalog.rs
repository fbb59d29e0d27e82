//! Builders and closed forms for the classical identities the engine
//! reproduces, shared by the test suite and the `catalog` command.
//!
//! Sources are the classical partition-analysis literature: MacMahon's
//! fundamental evaluations and his five-factor example, Han's general
//! evaluation formula, and the Andrews-Paule-Riese families (k-gon
//! partitions, the two-sided bounded pairs, nested chain pairs, and the
//! triangular-support transforms).

use std::time::Instant;

use num::traits::One;
use num::BigRational;

use crate::algebra::{
    LaurentPolynomial, Monomial, ScaledMonomial, Substitution, Symbol, VariableOrder,
};
use crate::elliott::{sum_reduced, ElliottRational, Factor};
use crate::omega::{eliminate_all, EliminationStrategy};
use crate::oracle::verify;
use crate::{Error, Result};

/// A named identity: an elimination input and the expected lambda-free
/// value, with the parameters it was instantiated at.
#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub id: String,
    pub provenance: String,
    pub params: Vec<(String, i64)>,
    pub input: ElliottRational,
    pub expected: ElliottRational,
}

/// Result of running one entry: exact symbolic comparison and the
/// truncated-series cross-check.
#[derive(Clone, Debug)]
pub struct EntryOutcome {
    pub id: String,
    pub symbolic_ok: bool,
    pub oracle_ok: bool,
    pub millis: u128,
}

impl EntryOutcome {
    pub fn passed(&self) -> bool {
        self.symbolic_ok && self.oracle_ok
    }
}

/// Eliminate the entry's input and compare against the expected value,
/// both symbolically and through the series oracle at `degree`.
pub fn run_entry(entry: &CatalogEntry, degree: i64) -> Result<EntryOutcome> {
    let start = Instant::now();
    let (result, _) = eliminate_all(&entry.input, &EliminationStrategy::auto())?;
    let symbolic_ok = result.rational_equal(&entry.expected);
    let oracle_ok = verify(&entry.input, &entry.expected, degree)?.ok;
    Ok(EntryOutcome {
        id: entry.id.clone(),
        symbolic_ok,
        oracle_ok,
        millis: start.elapsed().as_millis(),
    })
}

// ---- small construction helpers ----

fn rat(n: i64) -> BigRational {
    BigRational::from_integer(n.into())
}

fn mono(pairs: &[(&str, i32)]) -> Monomial {
    Monomial::from_pairs(pairs.iter().copied())
}

fn fac(pairs: &[(&str, i32)]) -> Factor {
    Factor::from_monomial(mono(pairs)).expect("nontrivial monomial")
}

fn poly(terms: &[(i64, &[(&str, i32)])]) -> LaurentPolynomial {
    let mut out = LaurentPolynomial::zero();
    for &(c, m) in terms {
        out.add_term(&rat(c), &mono(m));
    }
    out
}

fn elliott(
    num: LaurentPolynomial,
    den: Vec<Factor>,
    lams: &[&str],
    xs: &[&str],
) -> ElliottRational {
    let order = VariableOrder::new(lams, xs).expect("valid order");
    ElliottRational::new(num, den, order)
}

/// `1 - mono` to the power `m`.
#[allow(dead_code)]
fn fac_m(pairs: &[(&str, i32)], m: u32) -> Factor {
    fac(pairs).with_mult(m)
}

/// The geometric partial sum `1 + t + ... + t^{n-1}` of a scaled monomial.
fn geometric_sum(t: &ScaledMonomial, n: i64) -> LaurentPolynomial {
    let mut out = LaurentPolynomial::zero();
    for k in 0..n {
        let pw = t.pow(k);
        out.add_term(pw.coeff(), pw.monomial());
    }
    out
}

/// The product `(1 - a)(1 - a q) ... (1 - a q^{n-1})` as factors, the
/// q-shifted factorial `(a; q)_n`. `n = 0` is the empty product.
fn q_shifted(a: &ScaledMonomial, q: &Monomial, n: u32) -> Result<Vec<Factor>> {
    let mut out = Vec::new();
    for t in 0..n {
        let term = a.mul(&ScaledMonomial::from_monomial(q.pow(t as i32)));
        out.push(Factor::new(
            term.coeff().clone(),
            term.monomial().clone(),
            1,
        )?);
    }
    Ok(out)
}

// ---- the nine fundamental evaluations ----

/// The nine classical single-lambda evaluations, with the two
/// `s`-parameterized ones instantiated at the given `s >= 1`.
pub fn fundamentals(s: u32) -> Result<Vec<CatalogEntry>> {
    if s == 0 {
        return Err(Error::BadParameter("fundamentals need s >= 1".into()));
    }
    let provenance = "MacMahon's fundamental evaluations".to_string();
    let si = s as i32;
    let mut entries = Vec::new();
    let mut push = |id: &str, with_s: bool, input: ElliottRational, expected: ElliottRational| {
        entries.push(CatalogEntry {
            id: id.into(),
            provenance: provenance.clone(),
            params: if with_s {
                vec![("s".into(), s as i64)]
            } else {
                Vec::new()
            },
            input,
            expected,
        });
    };

    // 1: 1/((1-l x)(1-y/l^s)) -> 1/((1-x)(1-x^s y))
    push(
        "fund-1",
        true,
        elliott(
            LaurentPolynomial::one(),
            vec![fac(&[("x", 1), ("l", 1)]), fac(&[("y", 1), ("l", -si)])],
            &["l"],
            &["x", "y"],
        ),
        elliott(
            LaurentPolynomial::one(),
            vec![fac(&[("x", 1)]), fac(&[("x", si), ("y", 1)])],
            &["l"],
            &["x", "y"],
        ),
    );

    // 2: 1/((1-l^s x)(1-y/l)) -> (1 + x y (1-y^{s-1})/(1-y)) / ((1-x)(1-y^s x))
    let mut num2 = LaurentPolynomial::one();
    let y_unit = ScaledMonomial::from_monomial(mono(&[("y", 1)]));
    let xy = geometric_sum(&y_unit, (s as i64) - 1);
    num2 = &num2 + &(&poly(&[(1, &[("x", 1), ("y", 1)])]) * &xy);
    push(
        "fund-2",
        true,
        elliott(
            LaurentPolynomial::one(),
            vec![fac(&[("x", 1), ("l", si)]), fac(&[("y", 1), ("l", -1)])],
            &["l"],
            &["x", "y"],
        ),
        elliott(
            num2,
            vec![fac(&[("x", 1)]), fac(&[("y", si), ("x", 1)])],
            &["l"],
            &["x", "y"],
        ),
    );

    // 3: 1/((1-l x)(1-y/l)(1-z/l)) -> 1/((1-x)(1-xy)(1-xz))
    push(
        "fund-3",
        false,
        elliott(
            LaurentPolynomial::one(),
            vec![
                fac(&[("x", 1), ("l", 1)]),
                fac(&[("y", 1), ("l", -1)]),
                fac(&[("z", 1), ("l", -1)]),
            ],
            &["l"],
            &["x", "y", "z"],
        ),
        elliott(
            LaurentPolynomial::one(),
            vec![
                fac(&[("x", 1)]),
                fac(&[("x", 1), ("y", 1)]),
                fac(&[("x", 1), ("z", 1)]),
            ],
            &["l"],
            &["x", "y", "z"],
        ),
    );

    // 4: 1/((1-l x)(1-l y)(1-z/l)) -> (1-xyz)/((1-x)(1-y)(1-xz)(1-zy))
    push(
        "fund-4",
        false,
        elliott(
            LaurentPolynomial::one(),
            vec![
                fac(&[("x", 1), ("l", 1)]),
                fac(&[("y", 1), ("l", 1)]),
                fac(&[("z", 1), ("l", -1)]),
            ],
            &["l"],
            &["x", "y", "z"],
        ),
        elliott(
            poly(&[(1, &[]), (-1, &[("x", 1), ("y", 1), ("z", 1)])]),
            vec![
                fac(&[("x", 1)]),
                fac(&[("y", 1)]),
                fac(&[("x", 1), ("z", 1)]),
                fac(&[("y", 1), ("z", 1)]),
            ],
            &["l"],
            &["x", "y", "z"],
        ),
    );

    // 5: 1/((1-l x)(1-l y)(1-z/l^2))
    //    -> (1+xyz-x^2yz-xy^2z)/((1-x)(1-y)(1-zx^2)(1-zy^2))
    push(
        "fund-5",
        false,
        elliott(
            LaurentPolynomial::one(),
            vec![
                fac(&[("x", 1), ("l", 1)]),
                fac(&[("y", 1), ("l", 1)]),
                fac(&[("z", 1), ("l", -2)]),
            ],
            &["l"],
            &["x", "y", "z"],
        ),
        elliott(
            poly(&[
                (1, &[]),
                (1, &[("x", 1), ("y", 1), ("z", 1)]),
                (-1, &[("x", 2), ("y", 1), ("z", 1)]),
                (-1, &[("x", 1), ("y", 2), ("z", 1)]),
            ]),
            vec![
                fac(&[("x", 1)]),
                fac(&[("y", 1)]),
                fac(&[("z", 1), ("x", 2)]),
                fac(&[("z", 1), ("y", 2)]),
            ],
            &["l"],
            &["x", "y", "z"],
        ),
    );

    // 6: 1/((1-l^2 x)(1-y/l)(1-z/l))
    //    -> (1+xy+xz+xyz)/((1-x)(1-xy^2)(1-xz^2))
    push(
        "fund-6",
        false,
        elliott(
            LaurentPolynomial::one(),
            vec![
                fac(&[("x", 1), ("l", 2)]),
                fac(&[("y", 1), ("l", -1)]),
                fac(&[("z", 1), ("l", -1)]),
            ],
            &["l"],
            &["x", "y", "z"],
        ),
        elliott(
            poly(&[
                (1, &[]),
                (1, &[("x", 1), ("y", 1)]),
                (1, &[("x", 1), ("z", 1)]),
                (1, &[("x", 1), ("y", 1), ("z", 1)]),
            ]),
            vec![
                fac(&[("x", 1)]),
                fac(&[("x", 1), ("y", 2)]),
                fac(&[("x", 1), ("z", 2)]),
            ],
            &["l"],
            &["x", "y", "z"],
        ),
    );

    // 7: 1/((1-l^2 x)(1-l y)(1-z/l))
    //    -> (1+xz-xyz-xyz^2)/((1-x)(1-y)(1-yz)(1-xz^2))
    push(
        "fund-7",
        false,
        elliott(
            LaurentPolynomial::one(),
            vec![
                fac(&[("x", 1), ("l", 2)]),
                fac(&[("y", 1), ("l", 1)]),
                fac(&[("z", 1), ("l", -1)]),
            ],
            &["l"],
            &["x", "y", "z"],
        ),
        elliott(
            poly(&[
                (1, &[]),
                (1, &[("x", 1), ("z", 1)]),
                (-1, &[("x", 1), ("y", 1), ("z", 1)]),
                (-1, &[("x", 1), ("y", 1), ("z", 2)]),
            ]),
            vec![
                fac(&[("x", 1)]),
                fac(&[("y", 1)]),
                fac(&[("y", 1), ("z", 1)]),
                fac(&[("x", 1), ("z", 2)]),
            ],
            &["l"],
            &["x", "y", "z"],
        ),
    );

    // 8: 1/((1-l x)(1-l y)(1-l z)(1-w/l))
    //    -> (1-xyw-xzw-yzw+xyzw+xyzw^2)
    //       /((1-x)(1-y)(1-z)(1-wx)(1-wy)(1-wz))
    push(
        "fund-8",
        false,
        elliott(
            LaurentPolynomial::one(),
            vec![
                fac(&[("x", 1), ("l", 1)]),
                fac(&[("y", 1), ("l", 1)]),
                fac(&[("z", 1), ("l", 1)]),
                fac(&[("w", 1), ("l", -1)]),
            ],
            &["l"],
            &["x", "y", "z", "w"],
        ),
        elliott(
            poly(&[
                (1, &[]),
                (-1, &[("x", 1), ("y", 1), ("w", 1)]),
                (-1, &[("x", 1), ("z", 1), ("w", 1)]),
                (-1, &[("y", 1), ("z", 1), ("w", 1)]),
                (1, &[("x", 1), ("y", 1), ("z", 1), ("w", 1)]),
                (1, &[("x", 1), ("y", 1), ("z", 1), ("w", 2)]),
            ]),
            vec![
                fac(&[("x", 1)]),
                fac(&[("y", 1)]),
                fac(&[("z", 1)]),
                fac(&[("w", 1), ("x", 1)]),
                fac(&[("w", 1), ("y", 1)]),
                fac(&[("w", 1), ("z", 1)]),
            ],
            &["l"],
            &["x", "y", "z", "w"],
        ),
    );

    // 9: 1/((1-l x)(1-l y)(1-z/l)(1-w/l))
    //    -> (1-xyz-xyw-xyzw+xy^2zw+x^2yzw)
    //       /((1-x)(1-y)(1-xz)(1-xw)(1-yz)(1-yw))
    push(
        "fund-9",
        false,
        elliott(
            LaurentPolynomial::one(),
            vec![
                fac(&[("x", 1), ("l", 1)]),
                fac(&[("y", 1), ("l", 1)]),
                fac(&[("z", 1), ("l", -1)]),
                fac(&[("w", 1), ("l", -1)]),
            ],
            &["l"],
            &["x", "y", "z", "w"],
        ),
        elliott(
            poly(&[
                (1, &[]),
                (-1, &[("x", 1), ("y", 1), ("z", 1)]),
                (-1, &[("x", 1), ("y", 1), ("w", 1)]),
                (-1, &[("x", 1), ("y", 1), ("z", 1), ("w", 1)]),
                (1, &[("x", 1), ("y", 2), ("z", 1), ("w", 1)]),
                (1, &[("x", 2), ("y", 1), ("z", 1), ("w", 1)]),
            ]),
            vec![
                fac(&[("x", 1)]),
                fac(&[("y", 1)]),
                fac(&[("x", 1), ("z", 1)]),
                fac(&[("x", 1), ("w", 1)]),
                fac(&[("y", 1), ("z", 1)]),
                fac(&[("y", 1), ("w", 1)]),
            ],
            &["l"],
            &["x", "y", "z", "w"],
        ),
    );

    Ok(entries)
}

// ---- fixed multi-lambda entries ----

/// Two eliminations over five factors with a binomial numerator:
/// `(1-ab l1 l2) / ((1-a l1)(1-b l2)(1-c l1 l2)(1-d l1 l2)(1-e/(l1 l2)))`
/// evaluates to `(1-ab)(1-cde) / ((1-a)(1-b)(1-c)(1-d)(1-ce)(1-de))`.
pub fn two_lambda_entry() -> CatalogEntry {
    let lams: &[&str] = &["l1", "l2"];
    let xs: &[&str] = &["a", "b", "c", "d", "e"];
    let input = elliott(
        poly(&[
            (1, &[]),
            (-1, &[("a", 1), ("b", 1), ("l1", 1), ("l2", 1)]),
        ]),
        vec![
            fac(&[("a", 1), ("l1", 1)]),
            fac(&[("b", 1), ("l2", 1)]),
            fac(&[("c", 1), ("l1", 1), ("l2", 1)]),
            fac(&[("d", 1), ("l1", 1), ("l2", 1)]),
            fac(&[("e", 1), ("l1", -1), ("l2", -1)]),
        ],
        lams,
        xs,
    );
    let num = &poly(&[(1, &[]), (-1, &[("a", 1), ("b", 1)])])
        * &poly(&[(1, &[]), (-1, &[("c", 1), ("d", 1), ("e", 1)])]);
    let expected = elliott(
        num,
        vec![
            fac(&[("a", 1)]),
            fac(&[("b", 1)]),
            fac(&[("c", 1)]),
            fac(&[("d", 1)]),
            fac(&[("c", 1), ("e", 1)]),
            fac(&[("d", 1), ("e", 1)]),
        ],
        lams,
        xs,
    );
    CatalogEntry {
        id: "two-lambda".into(),
        provenance: "Andrews-Paule-Riese two-elimination lemma".into(),
        params: Vec::new(),
        input,
        expected,
    }
}

/// Four eliminations:
/// `1/((1-x1 l1 l2)(1-x2 l3/l1)(1-x3 l4/l2)(1-x4/(l3 l4)))` evaluates to
/// `(1-x1^2 x2 x3)/((1-x1)(1-x1x2)(1-x1x3)(1-x1x2x3)(1-x1x2x3x4))`.
pub fn four_lambda_entry() -> CatalogEntry {
    let lams: &[&str] = &["l1", "l2", "l3", "l4"];
    let xs: &[&str] = &["x1", "x2", "x3", "x4"];
    let input = elliott(
        LaurentPolynomial::one(),
        vec![
            fac(&[("x1", 1), ("l1", 1), ("l2", 1)]),
            fac(&[("x2", 1), ("l3", 1), ("l1", -1)]),
            fac(&[("x3", 1), ("l4", 1), ("l2", -1)]),
            fac(&[("x4", 1), ("l3", -1), ("l4", -1)]),
        ],
        lams,
        xs,
    );
    let expected = elliott(
        poly(&[(1, &[]), (-1, &[("x1", 2), ("x2", 1), ("x3", 1)])]),
        vec![
            fac(&[("x1", 1)]),
            fac(&[("x1", 1), ("x2", 1)]),
            fac(&[("x1", 1), ("x3", 1)]),
            fac(&[("x1", 1), ("x2", 1), ("x3", 1)]),
            fac(&[("x1", 1), ("x2", 1), ("x3", 1), ("x4", 1)]),
        ],
        lams,
        xs,
    );
    CatalogEntry {
        id: "four-lambda".into(),
        provenance: "MacMahon, Combinatory Analysis, p. 183".into(),
        params: Vec::new(),
        input,
        expected,
    }
}

// ---- Han's formula ----

/// `U(l) / (prod_i (1 - x_i l) * prod_j (1 - y_j / l))` over the given
/// order; `u` is a Laurent polynomial in `lam`.
pub fn han_input(
    u: &LaurentPolynomial,
    xs: &[Monomial],
    ys: &[Monomial],
    order: &VariableOrder,
    lam: Symbol,
) -> Result<ElliottRational> {
    let mut den = Vec::new();
    for x in xs {
        den.push(Factor::from_monomial(x.mul(&Monomial::from_pairs([(lam, 1)])))?);
    }
    for y in ys {
        den.push(Factor::from_monomial(y.mul(&Monomial::from_pairs([(lam, -1)])))?);
    }
    Ok(ElliottRational::new(u.clone(), den, order.clone()))
}

/// The interpolation closed form
/// `sum_i U(1/x_i) / ((1-x_i) * prod_j (1-y_j x_i) * prod_{j!=i} (1-x_j/x_i))`,
/// equal to the elimination of [`han_input`] when the `x_i` are pairwise
/// distinct, none is 1, and no `x_i y_j` is 1.
pub fn han_closed_form(
    u: &LaurentPolynomial,
    xs: &[Monomial],
    ys: &[Monomial],
    order: &VariableOrder,
    lam: Symbol,
) -> Result<ElliottRational> {
    for (i, x) in xs.iter().enumerate() {
        if x.is_one() {
            return Err(Error::BadParameter("interpolation node x_i = 1".into()));
        }
        if xs[i + 1..].contains(x) {
            return Err(Error::RepeatedNode(x.to_string()));
        }
    }
    let mut terms = Vec::new();
    for (i, x) in xs.iter().enumerate() {
        let mut subst = Substitution::new();
        subst.insert(lam, ScaledMonomial::from_monomial(x.inv()));
        let num = u.substitute(&subst);
        let mut den = vec![Factor::from_monomial(x.clone())?];
        for y in ys {
            den.push(Factor::from_monomial(y.mul(x))?);
        }
        for (j, other) in xs.iter().enumerate() {
            if j != i {
                den.push(Factor::from_monomial(other.mul(&x.inv()))?);
            }
        }
        terms.push(ElliottRational::new(num, den, order.clone()));
    }
    Ok(sum_reduced(order, terms))
}

// ---- k-gon partitions ----

fn kgon_order(k: usize) -> VariableOrder {
    let lams: Vec<Symbol> = (1..=k).map(|i| Symbol::new(&format!("l{i}"))).collect();
    let mut vars = lams.clone();
    vars.extend((1..=k).map(|i| Symbol::new(&format!("x{i}"))));
    VariableOrder::from_vars(vars, lams).expect("valid order")
}

/// Product of `x_from ... x_to` (inclusive, 1-based).
fn x_range(from: usize, to: usize) -> Monomial {
    Monomial::from_pairs((from..=to).map(|i| (Symbol::new(&format!("x{i}")), 1)))
}

/// The crude generating-function form for weakly increasing positive
/// `k`-tuples whose first `k-1` entries outweigh the last:
/// `x1/l1 / ((1-x1 lk/l1)(1-x2 l1 lk/l2)...(1-x_{k-1} l_{k-2} lk/l_{k-1})(1-x_k l_{k-1}/lk))`.
pub fn kgon_input(k: usize) -> Result<ElliottRational> {
    if k < 3 {
        return Err(Error::BadParameter("k-gon needs k >= 3".into()));
    }
    let order = kgon_order(k);
    let lk = format!("l{k}");
    let num = poly(&[(1, &[("x1", 1), ("l1", -1)])]);
    let mut den = vec![fac(&[("x1", 1), (&lk, 1), ("l1", -1)])];
    for i in 2..k {
        den.push(fac(&[
            (&format!("x{i}"), 1),
            (&format!("l{}", i - 1), 1),
            (&lk, 1),
            (&format!("l{i}"), -1),
        ]));
    }
    den.push(fac(&[
        (&format!("x{k}"), 1),
        (&format!("l{}", k - 1), 1),
        (&lk, -1),
    ]));
    Ok(ElliottRational::new(num, den, order))
}

/// The closed form: suffix-product staircase minus the correction term.
pub fn kgon_closed(k: usize) -> Result<ElliottRational> {
    if k < 3 {
        return Err(Error::BadParameter("k-gon needs k >= 3".into()));
    }
    let order = kgon_order(k);
    // x1...xk / prod_{j=1..k} (1 - x_j ... x_k)
    let first = ElliottRational::new(
        LaurentPolynomial::term(BigRational::one(), x_range(1, k)),
        (1..=k)
            .map(|j| Factor::from_monomial(x_range(j, k)))
            .collect::<Result<Vec<_>>>()?,
        order.clone(),
    );
    // x1...x_{k-1} x_k^{k-1}
    //   / ((1-x_k) prod_{j=1..k-1} (1 - x_j..x_{k-1} x_k^{k-j}))
    let xk = Symbol::new(&format!("x{k}"));
    let second_num = x_range(1, k - 1).mul(&Monomial::from_pairs([(xk, (k - 1) as i32)]));
    let mut second_den = vec![Factor::from_monomial(Monomial::from_pairs([(xk, 1)]))?];
    for j in 1..k {
        let m = x_range(j, k - 1).mul(&Monomial::from_pairs([(xk, (k - j) as i32)]));
        second_den.push(Factor::from_monomial(m)?);
    }
    let second = ElliottRational::new(
        LaurentPolynomial::term(BigRational::one(), second_num),
        second_den,
        order,
    );
    Ok(first.sub(&second))
}

/// Counting series of the k-gon family under `x_i -> q`:
/// `q^k/((1-q)...(1-q^k)) - q^{2k-2}/((1-q)(1-q^2)(1-q^4)...(1-q^{2k-2}))`.
pub fn tk_closed(k: usize) -> Result<ElliottRational> {
    if k < 3 {
        return Err(Error::BadParameter("k-gon needs k >= 3".into()));
    }
    let order = VariableOrder::new::<&str>(&[], &["q"]).unwrap();
    let first = ElliottRational::new(
        poly(&[(1, &[("q", k as i32)])]),
        (1..=k)
            .map(|j| Factor::from_monomial(mono(&[("q", j as i32)])))
            .collect::<Result<Vec<_>>>()?,
        order.clone(),
    );
    let mut second_den = vec![Factor::from_monomial(mono(&[("q", 1)]))?];
    for j in 1..k {
        second_den.push(Factor::from_monomial(mono(&[("q", 2 * j as i32)]))?);
    }
    let second = ElliottRational::new(
        poly(&[(1, &[("q", (2 * k - 2) as i32)])]),
        second_den,
        order,
    );
    Ok(first.sub(&second))
}

/// Substitution sending every `x_i` (1-based up to `k`) to `q`.
pub fn xs_to_q(k: usize) -> Substitution {
    let mut s = Substitution::new();
    for i in 1..=k {
        s.insert(
            Symbol::new(&format!("x{i}")),
            ScaledMonomial::from_monomial(Monomial::var("q")),
        );
    }
    s
}

// ---- the two-sided bounded pairs ----

/// `1/((1 - x l1^K / l2)(1 - y l2^L / l1))`, the generating function of
/// pairs `(m, n)` with `K m >= n` and `L n >= m`.
pub fn two_dim_input(k_bound: u32, l_bound: u32) -> Result<ElliottRational> {
    if k_bound < 2 || l_bound < 2 {
        return Err(Error::BadParameter("two-dim family needs K, L >= 2".into()));
    }
    Ok(elliott(
        LaurentPolynomial::one(),
        vec![
            fac(&[("x", 1), ("l1", k_bound as i32), ("l2", -1)]),
            fac(&[("y", 1), ("l2", l_bound as i32), ("l1", -1)]),
        ],
        &["l1", "l2"],
        &["x", "y"],
    ))
}

/// Closed form
/// `(1 + xy (1-x^L)(1-y^K)/((1-x)(1-y)) - x y^K - x^L y) / ((1-x y^K)(1-x^L y))`.
pub fn two_dim_closed(k_bound: u32, l_bound: u32) -> Result<ElliottRational> {
    if k_bound < 2 || l_bound < 2 {
        return Err(Error::BadParameter("two-dim family needs K, L >= 2".into()));
    }
    let (kb, lb) = (k_bound as i32, l_bound as i32);
    let x_sum = geometric_sum(&ScaledMonomial::from_monomial(mono(&[("x", 1)])), lb as i64);
    let y_sum = geometric_sum(&ScaledMonomial::from_monomial(mono(&[("y", 1)])), kb as i64);
    let mut num = LaurentPolynomial::one();
    num = &num + &(&poly(&[(1, &[("x", 1), ("y", 1)])]) * &(&x_sum * &y_sum));
    num = &num - &poly(&[(1, &[("x", 1), ("y", kb)])]);
    num = &num - &poly(&[(1, &[("x", lb), ("y", 1)])]);
    Ok(elliott(
        num,
        vec![fac(&[("x", 1), ("y", kb)]), fac(&[("x", lb), ("y", 1)])],
        &["l1", "l2"],
        &["x", "y"],
    ))
}

// ---- nested chain pairs ----

fn chains_order() -> VariableOrder {
    VariableOrder::new(&["l"], &["x", "y", "t", "z", "q"]).unwrap()
}

/// The single-lambda product for the pair of nested chains, with the
/// chain markers `t` and `z` kept symbolic:
/// `1/((1-x)(1-x t l)(1-x y t l)(1-x y t q l)...(1-x y t q^r l)
///    (1-z/l)(1-z q/l)...(1-z q^{k-1}/l))`.
pub fn nested_chains_input(k: u32, r: u32) -> Result<ElliottRational> {
    if k < 1 {
        return Err(Error::BadParameter("nested chains need k >= 1".into()));
    }
    let mut den = vec![fac(&[("x", 1)]), fac(&[("x", 1), ("t", 1), ("l", 1)])];
    for i in 0..=r as i32 {
        den.push(fac(&[("x", 1), ("y", 1), ("t", 1), ("q", i), ("l", 1)]));
    }
    for i in 0..k as i32 {
        den.push(fac(&[("z", 1), ("q", i), ("l", -1)]));
    }
    Ok(ElliottRational::new(
        LaurentPolynomial::one(),
        den,
        chains_order(),
    ))
}

/// Substitution `t -> q, z -> q`.
pub fn tz_to_q() -> Substitution {
    let mut s = Substitution::new();
    s.insert(
        Symbol::new("t"),
        ScaledMonomial::from_monomial(Monomial::var("q")),
    );
    s.insert(
        Symbol::new("z"),
        ScaledMonomial::from_monomial(Monomial::var("q")),
    );
    s
}

/// The closed form after `t = z = q`:
/// `1/((y;q)_{r+1} (x;q)_{k+2})
///  + sum_{i=0}^{r} (-1)^{i+1} y q^{i(i+3)/2}
///    / ((1-x)(1-y q^i)(q;q)_i (q;q)_{r-i} (x y q^{i+1}; q)_{k+1})`.
pub fn nested_chains_closed(k: u32, r: u32) -> Result<ElliottRational> {
    if k < 1 {
        return Err(Error::BadParameter("nested chains need k >= 1".into()));
    }
    let order = chains_order();
    let q = Monomial::var("q");
    let one = BigRational::one;

    let y_unit = ScaledMonomial::new(one(), mono(&[("y", 1)])).unwrap();
    let x_unit = ScaledMonomial::new(one(), mono(&[("x", 1)])).unwrap();
    let q_unit = ScaledMonomial::new(one(), q.clone()).unwrap();

    let mut head_den = q_shifted(&y_unit, &q, r + 1)?;
    head_den.extend(q_shifted(&x_unit, &q, k + 2)?);
    let head = ElliottRational::new(LaurentPolynomial::one(), head_den, order.clone());

    let mut terms = vec![head];
    for i in 0..=r {
        let sign = if (i + 1) % 2 == 0 { 1 } else { -1 };
        let exp = (i * (i + 3) / 2) as i32;
        let num = poly(&[(sign, &[("y", 1), ("q", exp)])]);
        let mut den = vec![fac(&[("x", 1)]), fac(&[("y", 1), ("q", i as i32)])];
        den.extend(q_shifted(&q_unit, &q, i)?);
        den.extend(q_shifted(&q_unit, &q, r - i)?);
        let xyq = ScaledMonomial::new(one(), mono(&[("x", 1), ("y", 1), ("q", i as i32 + 1)]))
            .unwrap();
        den.extend(q_shifted(&xyq, &q, k + 1)?);
        terms.push(ElliottRational::new(num, den, order.clone()));
    }
    Ok(sum_reduced(&order, terms))
}

// ---- triangular-support transforms ----

/// Both sides of the two transform identities for a series
/// `F(x, y) = sum_{i >= j >= 0} a_ij x^i y^j` given as a concrete
/// rational function in the variables `x, y`.
#[derive(Clone, Debug)]
pub struct TransformSides {
    pub eliminated: ElliottRational,
    pub closed: ElliottRational,
}

fn subst2(f: &ElliottRational, x_img: ScaledMonomial, y_img: ScaledMonomial) -> Result<ElliottRational> {
    let mut s = Substitution::new();
    s.insert(Symbol::new("x"), x_img);
    s.insert(Symbol::new("y"), y_img);
    f.substitute(&s)
}

fn sm(pairs: &[(&str, i32)]) -> ScaledMonomial {
    ScaledMonomial::from_monomial(mono(pairs))
}

/// First transform: insert an upper bound `m >= i` and a middle index
/// `i >= l >= j`, marking them by `x` and `y` and the old indices by `z`.
/// Identity: the elimination of
/// `F(z l2/l1, z/l3) / ((1-x l1)(1-y l3/l2))` over `l1, l2, l3` equals
/// `(F(xz, yz) - y F(xyz, z)) / ((1-x)(1-y))`.
pub fn g1_transform_sides(f: &ElliottRational) -> Result<TransformSides> {
    let order = VariableOrder::new(&["l1", "l2", "l3"], &["x", "y", "z"])?;
    let f_full = f.with_order(order.clone())?;
    let inner = subst2(
        &f_full,
        sm(&[("z", 1), ("l2", 1), ("l1", -1)]),
        sm(&[("z", 1), ("l3", -1)]),
    )?;
    let input = inner
        .div_factor(fac(&[("x", 1), ("l1", 1)]))
        .div_factor(fac(&[("y", 1), ("l3", 1), ("l2", -1)]));
    let (eliminated, _) = eliminate_all(&input, &EliminationStrategy::auto())?;

    let f_xz_yz = subst2(&f_full, sm(&[("x", 1), ("z", 1)]), sm(&[("y", 1), ("z", 1)]))?;
    let f_xyz_z = subst2(
        &f_full,
        sm(&[("x", 1), ("y", 1), ("z", 1)]),
        sm(&[("z", 1)]),
    )?;
    let closed = f_xz_yz
        .sub(&f_xyz_z.mul_unit(&sm(&[("y", 1)])))
        .div_factor(fac(&[("x", 1)]))
        .div_factor(fac(&[("y", 1)]))
        .reduce();
    Ok(TransformSides { eliminated, closed })
}

/// Second transform: keep only the middle index, marked by `x`.
/// Identity: the elimination of `F(z l1, z/l2) / (1 - x l2/l1)` over
/// `l1, l2` equals `(F(z, xz) - x F(xz, z)) / (1-x)`.
pub fn g2_transform_sides(f: &ElliottRational) -> Result<TransformSides> {
    let order = VariableOrder::new(&["l1", "l2"], &["x", "y", "z"])?;
    let f_full = f.with_order(order.clone())?;
    let inner = subst2(
        &f_full,
        sm(&[("z", 1), ("l1", 1)]),
        sm(&[("z", 1), ("l2", -1)]),
    )?;
    let input = inner.div_factor(fac(&[("x", 1), ("l2", 1), ("l1", -1)]));
    let (eliminated, _) = eliminate_all(&input, &EliminationStrategy::auto())?;

    let f_z_xz = subst2(&f_full, sm(&[("z", 1)]), sm(&[("x", 1), ("z", 1)]))?;
    let f_xz_z = subst2(&f_full, sm(&[("x", 1), ("z", 1)]), sm(&[("z", 1)]))?;
    let closed = f_z_xz
        .sub(&f_xz_z.mul_unit(&sm(&[("x", 1)])))
        .div_factor(fac(&[("x", 1)]))
        .reduce();
    Ok(TransformSides { eliminated, closed })
}

// ---- the two single-factor evaluation rules ----

/// Rule for a contributing factor: with `A != 1` free of `lam` and `F`
/// expandable in nonnegative powers of its variable `t`, the elimination
/// of `F(1/lam) / (1 - A lam)` equals `F(A) / (1 - A)`. Returns both
/// sides.
pub fn small_factor_rule_sides(
    f: &ElliottRational,
    t: Symbol,
    lam: Symbol,
    a: &Monomial,
) -> Result<(ElliottRational, ElliottRational)> {
    if a.is_one() {
        return Err(Error::BadParameter("rule needs A != 1".into()));
    }
    let mut to_inv_lam = Substitution::new();
    to_inv_lam.insert(t, ScaledMonomial::from_monomial(Monomial::from_pairs([(lam, -1)])));
    let input = f
        .substitute(&to_inv_lam)?
        .div_factor(Factor::from_monomial(a.mul(&Monomial::from_pairs([(lam, 1)])))?);
    let (lhs, _) = eliminate_all(&input, &EliminationStrategy::auto())?;

    let mut to_a = Substitution::new();
    to_a.insert(t, ScaledMonomial::from_monomial(a.clone()));
    let rhs = f
        .substitute(&to_a)?
        .div_factor(Factor::from_monomial(a.clone())?);
    Ok((lhs, rhs))
}

/// Rule for a dually contributing factor: the elimination of
/// `F(lam) / (1 - A/lam)` equals `(F(1) - A F(A)) / (1 - A)`.
pub fn large_factor_rule_sides(
    f: &ElliottRational,
    t: Symbol,
    lam: Symbol,
    a: &Monomial,
) -> Result<(ElliottRational, ElliottRational)> {
    if a.is_one() {
        return Err(Error::BadParameter("rule needs A != 1".into()));
    }
    let mut to_lam = Substitution::new();
    to_lam.insert(t, ScaledMonomial::from_monomial(Monomial::from_pairs([(lam, 1)])));
    let input = f
        .substitute(&to_lam)?
        .div_factor(Factor::from_monomial(a.mul(&Monomial::from_pairs([(lam, -1)])))?);
    let (lhs, _) = eliminate_all(&input, &EliminationStrategy::auto())?;

    let mut to_one = Substitution::new();
    to_one.insert(t, ScaledMonomial::one());
    let mut to_a = Substitution::new();
    to_a.insert(t, ScaledMonomial::from_monomial(a.clone()));
    let f_one = f.substitute(&to_one)?;
    let f_a = f.substitute(&to_a)?.mul_unit(&ScaledMonomial::from_monomial(a.clone()));
    let rhs = f_one
        .sub(&f_a)
        .div_factor(Factor::from_monomial(a.clone())?)
        .reduce();
    Ok((lhs, rhs))
}

// ---- the default corpus ----

/// The entries the `catalog` command runs by default.
pub fn default_entries() -> Result<Vec<CatalogEntry>> {
    let mut entries = fundamentals(2)?;
    entries.push(two_lambda_entry());
    entries.push(four_lambda_entry());

    for k in 3..=5 {
        entries.push(CatalogEntry {
            id: format!("kgon-{k}"),
            provenance: "non-degenerate k-gon partitions (Andrews-Paule-Riese)".into(),
            params: vec![("k".into(), k as i64)],
            input: kgon_input(k)?,
            expected: kgon_closed(k)?,
        });
    }
    for k in 3..=4 {
        entries.push(CatalogEntry {
            id: format!("tk-{k}"),
            provenance: "k-gon partition counting series".into(),
            params: vec![("k".into(), k as i64)],
            input: kgon_input(k)?.substitute(&xs_to_q(k))?,
            expected: tk_closed(k)?,
        });
    }
    for (kb, lb) in [(2, 2), (3, 2)] {
        entries.push(CatalogEntry {
            id: format!("two-dim-{kb}-{lb}"),
            provenance: "two-sided bounded pairs (Andrews-Paule-Riese)".into(),
            params: vec![("K".into(), kb as i64), ("L".into(), lb as i64)],
            input: two_dim_input(kb, lb)?,
            expected: two_dim_closed(kb, lb)?,
        });
    }
    for (k, r) in [(1, 0), (2, 1)] {
        entries.push(CatalogEntry {
            id: format!("chains-{k}-{r}"),
            provenance: "nested chain pairs".into(),
            params: vec![("k".into(), k as i64), ("r".into(), r as i64)],
            input: nested_chains_input(k, r)?.substitute(&tz_to_q())?,
            expected: nested_chains_closed(k, r)?,
        });
    }

    // One interpolation-formula instance.
    {
        let order = VariableOrder::new(&["l"], &["x1", "x2", "y1"])?;
        let lam = Symbol::new("l");
        let xs = vec![Monomial::var("x1"), Monomial::var("x2")];
        let ys = vec![Monomial::var("y1")];
        let u = LaurentPolynomial::one();
        entries.push(CatalogEntry {
            id: "han-2-1".into(),
            provenance: "Han's evaluation formula".into(),
            params: vec![("n".into(), 2), ("m".into(), 1)],
            input: han_input(&u, &xs, &ys, &order, lam)?,
            expected: han_closed_form(&u, &xs, &ys, &order, lam)?,
        });
    }

    // Both transforms on F = 1/((1-x)(1-xy)).
    {
        let f = elliott(
            LaurentPolynomial::one(),
            vec![fac(&[("x", 1)]), fac(&[("x", 1), ("y", 1)])],
            &[],
            &["x", "y"],
        );
        let g1 = g1_transform_sides(&f)?;
        let g2 = g2_transform_sides(&f)?;
        // Entries hold the already-eliminated side as input with no
        // lambdas left, so re-running elimination is the identity; store
        // the original inputs instead for a real exercise.
        entries.push(CatalogEntry {
            id: "transform-g1".into(),
            provenance: "triangular-support series transforms".into(),
            params: Vec::new(),
            input: g1_input_for(&f)?,
            expected: g1.closed,
        });
        entries.push(CatalogEntry {
            id: "transform-g2".into(),
            provenance: "triangular-support series transforms".into(),
            params: Vec::new(),
            input: g2_input_for(&f)?,
            expected: g2.closed,
        });
    }

    Ok(entries)
}

/// The raw elimination input of the first transform for `f`.
pub fn g1_input_for(f: &ElliottRational) -> Result<ElliottRational> {
    let order = VariableOrder::new(&["l1", "l2", "l3"], &["x", "y", "z"])?;
    let f_full = f.with_order(order)?;
    let inner = subst2(
        &f_full,
        sm(&[("z", 1), ("l2", 1), ("l1", -1)]),
        sm(&[("z", 1), ("l3", -1)]),
    )?;
    Ok(inner
        .div_factor(fac(&[("x", 1), ("l1", 1)]))
        .div_factor(fac(&[("y", 1), ("l3", 1), ("l2", -1)])))
}

/// The raw elimination input of the second transform for `f`.
pub fn g2_input_for(f: &ElliottRational) -> Result<ElliottRational> {
    let order = VariableOrder::new(&["l1", "l2"], &["x", "y", "z"])?;
    let f_full = f.with_order(order)?;
    let inner = subst2(
        &f_full,
        sm(&[("z", 1), ("l1", 1)]),
        sm(&[("z", 1), ("l2", -1)]),
    )?;
    Ok(inner.div_factor(fac(&[("x", 1), ("l2", 1), ("l1", -1)])))
}
