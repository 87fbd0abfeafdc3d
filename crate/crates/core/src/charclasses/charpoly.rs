use std::fmt;

use crate::algebra::{SparsePoly, VarKind, VarSet};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Basis {
    /// Polynomials in `c1..c_rank`.
    Chern { rank: u32 },
    /// Polynomials in `s1..s_n`.
    Segre { n: u32 },
}

impl Basis {
    pub fn varset(self) -> VarSet {
        match self {
            Basis::Chern { rank } => VarSet::chern(rank),
            Basis::Segre { n } => VarSet::segre(n),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Basis::Chern { .. } => "chern",
            Basis::Segre { .. } => "segre",
        }
    }
}

/// A weighted-homogeneous characteristic polynomial in one basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CharPoly {
    basis: Basis,
    degree: u32,
    poly: SparsePoly,
}

impl CharPoly {
    pub fn new(basis: Basis, degree: u32, poly: SparsePoly) -> Result<Self> {
        if poly.varset() != &basis.varset() {
            return Err(Error::VarSetMismatch {
                lhs: poly.varset().clone(),
                rhs: basis.varset(),
            });
        }
        if poly.is_laurent() && poly.terms().any(|(m, _)| m.has_negative()) {
            return Err(Error::Contract(
                "characteristic polynomials have no negative powers".into(),
            ));
        }
        if !poly.is_homogeneous_of(i64::from(degree)) {
            return Err(Error::NotHomogeneous(Some(i64::from(degree))));
        }
        Ok(CharPoly {
            basis,
            degree,
            poly,
        })
    }

    /// Wraps a Chern or Segre polynomial, reading its degree off the terms.
    pub fn from_poly(poly: SparsePoly) -> Result<Self> {
        let basis = match (poly.varset().kind(), poly.varset().len() as u32) {
            (Some(VarKind::Chern), rank) => Basis::Chern { rank },
            (Some(VarKind::Segre), n) => Basis::Segre { n },
            _ => {
                return Err(Error::Contract(format!(
                    "{} is neither a Chern nor a Segre variable set",
                    poly.varset()
                )))
            }
        };
        let degree = poly.homogeneous_degree()?.unwrap_or(0);
        let degree = u32::try_from(degree)
            .map_err(|_| Error::DegreeOutOfRange(format!("negative degree {degree}")))?;
        CharPoly::new(basis, degree, poly)
    }

    pub fn zero(basis: Basis, degree: u32) -> Self {
        CharPoly {
            basis,
            degree,
            poly: SparsePoly::zero(basis.varset()),
        }
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn poly(&self) -> &SparsePoly {
        &self.poly
    }

    pub fn into_poly(self) -> SparsePoly {
        self.poly
    }

    pub fn is_zero(&self) -> bool {
        self.poly.is_zero()
    }
}

impl fmt::Display for CharPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.poly.fmt(f)
    }
}
