//! Exact Gysin push-forwards of characteristic classes from flag bundles.
//!
//! A class on a flag bundle `F_ρ(E) → X` written as a polynomial in the first
//! Chern classes of its tautological line bundles is pushed down to `X` as a
//! universal polynomial in the Segre classes of `E`. The result is converted
//! to the Chern and Schur bases, where membership in the cone spanned by
//! Schur polynomials can be read off.
//!
//! ```
//! use gysin::combinatorics::{FlagType, WeightVector};
//! use gysin::gysin::PushforwardRequest;
//!
//! // c_1(Q)^5 on the bundle of lines in a rank-3 bundle
//! let flag: FlagType = "0,1,3".parse().unwrap();
//! let weight = WeightVector::validate(&flag, &[1, 1, 0]).unwrap();
//! let result = PushforwardRequest::weight(flag, weight, 5, 3).run().unwrap();
//! assert_eq!(result.chern.to_string(), "4*c1^3 - 3*c1*c2 - c3");
//! assert!(result.schur.is_positive());
//! ```

pub mod algebra;
pub mod charclasses;
pub mod cli;
pub mod combinatorics;
pub mod error;
pub mod gysin;
pub mod oracle;
pub mod render;
pub mod tables;
pub mod verify;

pub use error::{Error, Result};
