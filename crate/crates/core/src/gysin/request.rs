use std::fmt;

use crate::algebra::SparsePoly;
use crate::charclasses::{schur_expand, to_chern, CharPoly, SchurExpansion};
use crate::combinatorics::{FlagType, WeightVector};
use crate::error::{Error, Result};

use super::dp::dp_segre;
use super::ftilde::{build_ftilde_general, build_ftilde_weight};
use super::grassmannian::grassmannian_segre;

/// Which formula produced a result.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Provenance {
    /// Coefficient extraction for an arbitrary flag.
    DpGeneral,
    /// The tableau sum for Grassmannian bundles.
    GrassmannianClosedForm,
}

impl Provenance {
    pub fn as_str(self) -> &'static str {
        match self {
            Provenance::DpGeneral => "dp-general",
            Provenance::GrassmannianClosedForm => "grassmannian-closed-form",
        }
    }
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone)]
pub enum Source {
    /// `c_1(Q^a)^power` for a block-constant weight.
    Weight { weight: WeightVector, power: u32 },
    /// A homogeneous polynomial in `u_1..u_m`, one variable per block.
    General(SparsePoly),
}

#[derive(Debug, Clone)]
pub struct PushforwardRequest {
    pub flag: FlagType,
    pub source: Source,
    /// Number of Segre variables available on the base.
    pub n: u32,
}

impl PushforwardRequest {
    pub fn weight(flag: FlagType, weight: WeightVector, power: u32, n: u32) -> Self {
        PushforwardRequest {
            flag,
            source: Source::Weight { weight, power },
            n,
        }
    }

    pub fn general(flag: FlagType, f: SparsePoly, n: u32) -> Self {
        PushforwardRequest {
            flag,
            source: Source::General(f),
            n,
        }
    }

    pub fn ftilde(&self) -> Result<SparsePoly> {
        match &self.source {
            Source::Weight { weight, power } => build_ftilde_weight(&self.flag, weight, *power),
            Source::General(f) => build_ftilde_general(&self.flag, f),
        }
    }

    pub fn run(&self) -> Result<PushforwardResult> {
        dp_pushforward(&self.flag, &self.ftilde()?, self.n)
    }
}

/// One push-forward in all three bases.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PushforwardResult {
    pub rank: u32,
    pub segre: CharPoly,
    pub chern: CharPoly,
    pub schur: SchurExpansion,
    pub provenance: Provenance,
}

impl PushforwardResult {
    pub fn from_segre(segre: CharPoly, rank: u32, provenance: Provenance) -> Result<Self> {
        let chern = to_chern(&segre, rank)?;
        let schur = schur_expand(&chern, rank)?;
        Ok(PushforwardResult {
            rank,
            segre,
            chern,
            schur,
            provenance,
        })
    }

    pub fn degree(&self) -> u32 {
        self.segre.degree()
    }

    pub fn is_zero(&self) -> bool {
        self.chern.is_zero()
    }
}

pub fn dp_pushforward(flag: &FlagType, ftilde: &SparsePoly, n: u32) -> Result<PushforwardResult> {
    let segre = dp_segre(flag, ftilde, n)?;
    PushforwardResult::from_segre(segre, flag.rank(), Provenance::DpGeneral)
}

pub fn grassmannian_pushforward(r: u32, d: u32, big_n: u32, n: u32) -> Result<PushforwardResult> {
    if d == 0 || d >= r {
        return Err(Error::InvalidFlag(format!(
            "need 1 <= d < r, got d={d}, r={r}"
        )));
    }
    let segre = grassmannian_segre(r, d, big_n, n)?;
    PushforwardResult::from_segre(segre, r, Provenance::GrassmannianClosedForm)
}
