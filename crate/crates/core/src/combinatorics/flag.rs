use std::fmt;
use std::ops::Range;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A dimension sequence `0 = ρ_0 < ρ_1 < … < ρ_m = r` with its derived data.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FlagType {
    rho: Vec<u32>,
    block_sizes: Vec<u32>,
    s: Vec<u32>,
    relative_dim: u32,
    ell: Vec<u32>,
}

impl FlagType {
    pub fn new(rho: Vec<u32>) -> Result<Self> {
        if rho.first() != Some(&0) {
            return Err(Error::InvalidFlag(format!("{rho:?} must start at 0")));
        }
        if rho.len() < 2 {
            return Err(Error::InvalidFlag(format!("{rho:?} needs a positive rank")));
        }
        if rho.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidFlag(format!(
                "{rho:?} is not strictly increasing"
            )));
        }
        let m = rho.len() - 1;
        let r = rho[m];
        let block_sizes: Vec<u32> = rho.windows(2).map(|w| w[1] - w[0]).collect();
        let s: Vec<u32> = (0..=m).map(|j| r - rho[m - j]).collect();

        let mut relative_dim = 0;
        for i in 0..m {
            for j in i + 1..m {
                relative_dim += block_sizes[i] * block_sizes[j];
            }
        }

        // For r − ρ_k < j ≤ r − ρ_{k−1}, writing j = r − ρ_k + i, ℓ_j = r − i.
        let mut ell = vec![0; r as usize];
        for k in 1..=m {
            for i in 1..=block_sizes[k - 1] {
                let j = r - rho[k] + i;
                ell[j as usize - 1] = r - i;
            }
        }

        Ok(FlagType {
            rho,
            block_sizes,
            s,
            relative_dim,
            ell,
        })
    }

    pub fn complete(rank: u32) -> Self {
        FlagType::new((0..=rank).collect()).expect("complete flag is valid")
    }

    /// `(0, r−d, r)`: the Grassmannian bundle with a rank-`d` universal quotient.
    pub fn grassmannian(rank: u32, d: u32) -> Result<Self> {
        if d == 0 || d >= rank {
            return Err(Error::InvalidFlag(format!(
                "Grassmannian needs 1 <= d < r, got d={d}, r={rank}"
            )));
        }
        FlagType::new(vec![0, rank - d, rank])
    }

    pub fn rho(&self) -> &[u32] {
        &self.rho
    }

    pub fn rank(&self) -> u32 {
        *self.rho.last().expect("nonempty")
    }

    /// Number of blocks `m`.
    pub fn blocks(&self) -> usize {
        self.block_sizes.len()
    }

    /// `b_j = ρ_j − ρ_{j−1}`, for `j = 1..=m`.
    pub fn block_sizes(&self) -> &[u32] {
        &self.block_sizes
    }

    /// `s_0 = 0 < s_1 < … < s_m = r` with `s_j = r − ρ_{m−j}`.
    pub fn s(&self) -> &[u32] {
        &self.s
    }

    /// Complex dimension of the fibre, `Σ_{i<j} b_i b_j`.
    pub fn relative_dim(&self) -> u32 {
        self.relative_dim
    }

    /// Exponent vector `ℓ` of the coefficient extraction.
    pub fn ell(&self) -> &[u32] {
        &self.ell
    }

    pub fn is_complete(&self) -> bool {
        self.blocks() == self.rank() as usize
    }

    /// 0-based root indices `s_{j−1} .. s_j` of the `j`-th tautological
    /// line bundle (`j` is 1-based).
    pub fn root_block(&self, j: usize) -> Range<usize> {
        self.s[j - 1] as usize..self.s[j] as usize
    }

    pub fn root_blocks(&self) -> impl Iterator<Item = Range<usize>> + '_ {
        (1..=self.blocks()).map(|j| self.root_block(j))
    }

    /// Every flag type of the given rank: one per composition of `r`.
    pub fn all_of_rank(rank: u32) -> Vec<FlagType> {
        if rank == 0 {
            return vec![];
        }
        // Interior points of ρ are the subsets of {1, …, r−1}.
        let interior = rank - 1;
        (0u32..1 << interior)
            .map(|mask| {
                let mut rho = vec![0];
                rho.extend((1..rank).filter(|i| mask & (1 << (i - 1)) != 0));
                rho.push(rank);
                FlagType::new(rho).expect("valid by construction")
            })
            .collect()
    }
}

impl fmt::Display for FlagType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.rho.iter().map(u32::to_string).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl FromStr for FlagType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let rho = s
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<u32>()
                    .map_err(|_| Error::InvalidFlag(format!("bad entry {p:?} in {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        FlagType::new(rho)
    }
}
