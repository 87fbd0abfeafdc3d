//! Exact rationals and sparse multivariate (Laurent) polynomials with a
//! weighted grading.

mod format;
mod monomial;
pub mod parse;
mod poly;
pub mod rational;
mod varset;

pub use monomial::Monomial;
pub use parse::{parse_poly, parse_poly_in};
pub use poly::{vandermonde, SparsePoly};
pub use rational::Rational;
pub use varset::{Var, VarKind, VarSet};

pub(crate) use format::latex_rational;
