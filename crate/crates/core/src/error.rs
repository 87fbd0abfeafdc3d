use thiserror::Error;

use crate::algebra::{Var, VarSet};

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("variable sets differ: {lhs} vs {rhs}")]
    VarSetMismatch { lhs: VarSet, rhs: VarSet },

    #[error("negative exponent {exponent} on {var} in a non-Laurent polynomial")]
    NegativeExponent { var: Var, exponent: i32 },

    #[error("monomial has {got} exponents, variable set {varset} needs {expected}")]
    MonomialLength {
        varset: VarSet,
        expected: usize,
        got: usize,
    },

    #[error("variable {0} has no counterpart in the target variable set")]
    UnboundVariable(Var),

    #[error("cannot invert {0} to substitute a negative power")]
    NotInvertible(Var),

    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("invalid flag type: {0}")]
    InvalidFlag(String),

    #[error("weight violates the block-constancy condition: {0}")]
    WeightNotBlockConstant(String),

    #[error("weight has length {got}, rank is {expected}")]
    WeightLength { expected: usize, got: usize },

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("polynomial is not weighted-homogeneous{}", .0.as_ref().map(|d| format!(" of degree {d}")).unwrap_or_default())]
    NotHomogeneous(Option<i64>),

    #[error("degree out of range: {0}")]
    DegreeOutOfRange(String),

    #[error("polynomial is not symmetric: swapping {0} and {1} changes it")]
    NotSymmetric(Var, Var),

    #[error("{0}")]
    Contract(String),

    #[error("internal inconsistency: {0}")]
    Internal(String),
}
