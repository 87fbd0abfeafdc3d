//! Chern, Segre and Schur bases for classes of a vector bundle.

mod charpoly;
mod convert;
mod linsolve;
mod roots;
mod schur;

pub use charpoly::{Basis, CharPoly};
pub use convert::is_zero_class;
pub use convert::{
    chern_in_segre, same_class, segre_chern_convert, segre_in_chern, to_chern, to_segre,
};
pub(crate) use linsolve::determinant;
pub use linsolve::solve_exact;
pub use roots::{asymmetry_witness, elementary_symmetric, roots_to_chern};
pub use schur::{
    schur_basis, schur_expand, schur_polynomial, schur_polynomial_general, SchurExpansion,
};
