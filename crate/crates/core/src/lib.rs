//! Exact partition analysis: MacMahon's Omega operator on Elliott rational
//! functions.
//!
//! The crate evaluates the operator that keeps only the terms of a formal
//! Laurent series whose designated (lambda) variables all carry nonnegative
//! exponents and then sets those variables to one. Elimination is done
//! symbolically, one lambda at a time, through partial fraction decomposition
//! over the field of iterated Laurent series; every step is exact rational
//! arithmetic.
//!
//! Module layout:
//!
//! - [`algebra`]: variables, monomials, Laurent polynomials, the monomial
//!   order of the working field
//! - [`elliott`]: the factored rational-function representation and its
//!   normalization, classification and equality tests
//! - [`omega`]: quotient-ring reduction, partial fractions, the direct and
//!   dual elimination formulas, the multi-lambda driver
//! - [`oracle`]: truncated-series evaluation of the operator by definition,
//!   plus direct lattice-point enumerations
//! - [`catalog`]: builders for the classical identities used as a regression
//!   corpus

pub mod algebra;
pub mod catalog;
pub mod elliott;
pub mod error;
pub mod omega;
pub mod oracle;

pub use algebra::{is_small, LaurentPolynomial, Monomial, ScaledMonomial, Symbol, VariableOrder};
pub use elliott::{ClassificationRow, ElliottRational, Factor};
pub use error::Error;
pub use omega::{
    eliminate_all, eliminate_one, EliminationStrategy, Mode, PartialFractionResult, TraceLog,
    TraceStep,
};
pub use oracle::{expand, omega_by_definition, verify, SeriesTable};

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
