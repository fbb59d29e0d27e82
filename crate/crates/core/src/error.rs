//! Error type shared by the whole crate.

use thiserror::Error;

/// Errors raised by algebra, elimination and oracle operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// The empty monomial cannot be compared against 1.
    #[error("unit monomial is neither small nor large")]
    UnitMonomial,

    /// A variable was used that the active order does not know about.
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),

    /// A substitution sent a denominator factor to exactly zero.
    #[error("pole under substitution: factor {factor} collapses to 1 - 1")]
    PoleUnderSubstitution { factor: String },

    /// Two denominator factors share a root, so the quotient-ring inverse
    /// of one modulo the other does not exist.
    #[error("hidden common root between denominator factors: {factor} is a zero divisor modulo {modulus}")]
    HiddenCommonRoot { factor: String, modulus: String },

    /// The nonnegative-power part of the series is an infinite sum with
    /// ratio one; the operator has no rational value.
    #[error("divergent omega sum: contributing factor {factor} has ratio 1 at lambda = 1")]
    Divergent { factor: String },

    /// Series expansion needs every denominator monomial to move in the
    /// x-grading; a factor with x-degree zero cannot be truncated.
    #[error("oracle requires x-graded denominators: monomial {monomial} has total x-degree 0")]
    UngradedDenominator { monomial: String },

    /// An explicit elimination order must cover exactly the lambda
    /// variables present in the input.
    #[error("elimination order [{given}] does not match lambda variables present [{present}]")]
    BadEliminationOrder { given: String, present: String },

    /// Quotient-ring inversion was asked for an element whose shape it does
    /// not support.
    #[error("cannot invert `{0}` in the quotient ring: not a recognized unit shape")]
    NotAUnit(String),

    /// Interpolation-style closed forms need pairwise distinct nodes.
    #[error("repeated node `{0}`: denominator of the closed form vanishes")]
    RepeatedNode(String),

    /// A closed-form builder was called outside its parameter range.
    #[error("parameter out of range: {0}")]
    BadParameter(String),
}
