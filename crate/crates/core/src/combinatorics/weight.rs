use std::fmt;

use super::flag::FlagType;
use crate::error::{Error, Result};

/// A multi-index `a ∈ ℤ^r` checked against a flag type.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WeightVector {
    a: Vec<i64>,
    block_constant: bool,
    strictly_decreasing: bool,
    nonnegative: bool,
}

impl WeightVector {
    /// Computes the validity flags. Only a length mismatch is an error.
    pub fn validate(flag: &FlagType, a: &[i64]) -> Result<Self> {
        let r = flag.rank() as usize;
        if a.len() != r {
            return Err(Error::WeightLength {
                expected: r,
                got: a.len(),
            });
        }
        let block_constant = flag
            .root_blocks()
            .all(|block| a[block.clone()].iter().all(|&x| x == a[block.end - 1]));
        let heads: Vec<i64> = flag.s()[1..].iter().map(|&s| a[s as usize - 1]).collect();
        let strictly_decreasing = heads.windows(2).all(|w| w[0] > w[1]);
        let nonnegative = a.iter().all(|&x| x >= 0);
        Ok(WeightVector {
            a: a.to_vec(),
            block_constant,
            strictly_decreasing,
            nonnegative,
        })
    }

    /// The block-constant weight taking value `values[j−1]` on the `j`-th block.
    pub fn from_block_values(flag: &FlagType, values: &[i64]) -> Result<Self> {
        if values.len() != flag.blocks() {
            return Err(Error::Contract(format!(
                "flag {flag} has {} blocks, got {} values",
                flag.blocks(),
                values.len()
            )));
        }
        let mut a = vec![0; flag.rank() as usize];
        for (block, &v) in flag.root_blocks().zip(values) {
            a[block].fill(v);
        }
        WeightVector::validate(flag, &a)
    }

    pub fn entries(&self) -> &[i64] {
        &self.a
    }

    /// Constant on each block of root indices `(s_{j−1}, s_j]`.
    pub fn is_block_constant(&self) -> bool {
        self.block_constant
    }

    /// `a_{s_1} > a_{s_2} > … > a_{s_m}`.
    pub fn is_strictly_decreasing(&self) -> bool {
        self.strictly_decreasing
    }

    pub fn is_nonnegative(&self) -> bool {
        self.nonnegative
    }

    /// All three conditions hold.
    pub fn is_strict(&self) -> bool {
        self.block_constant && self.strictly_decreasing && self.nonnegative
    }

    /// Non-increasing along the whole vector.
    pub fn is_nonincreasing(&self) -> bool {
        self.a.windows(2).all(|w| w[0] >= w[1])
    }

    /// `a_{s_j}`, the exponent of the `j`-th tautological line bundle.
    pub fn block_value(&self, flag: &FlagType, j: usize) -> i64 {
        self.a[flag.s()[j] as usize - 1]
    }

    pub fn scaled(&self, flag: &FlagType, factor: i64) -> WeightVector {
        let a: Vec<i64> = self.a.iter().map(|x| x * factor).collect();
        WeightVector::validate(flag, &a).expect("same length")
    }
}

impl fmt::Display for WeightVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.a.iter().map(i64::to_string).collect();
        write!(f, "{}", parts.join(","))
    }
}

/// Parses a comma-separated integer list such as `3,2,0`.
pub fn parse_int_list(text: &str) -> Result<Vec<i64>> {
    text.split(',')
        .map(|p| {
            p.trim().parse::<i64>().map_err(|_| Error::Parse {
                pos: 0,
                msg: format!("bad integer {p:?} in {text:?}"),
            })
        })
        .collect()
}

/// Block-constant weights with block values drawn from `0..=max_entry`,
/// split into those satisfying the strict-decrease condition and the
/// non-increasing ones with at least one tie between consecutive blocks.
pub fn weight_grid(flag: &FlagType, max_entry: i64) -> (Vec<WeightVector>, Vec<WeightVector>) {
    let m = flag.blocks();
    let mut strict = Vec::new();
    let mut tied = Vec::new();
    let mut values = vec![0i64; m];
    loop {
        if values.windows(2).all(|w| w[0] >= w[1]) {
            let w = WeightVector::from_block_values(flag, &values).expect("sizes match");
            if w.is_strict() {
                strict.push(w);
            } else {
                tied.push(w);
            }
        }
        // odometer over {0..=max_entry}^m
        let mut i = m;
        loop {
            if i == 0 {
                return (strict, tied);
            }
            i -= 1;
            if values[i] < max_entry {
                values[i] += 1;
                values[i + 1..].fill(0);
                break;
            }
        }
    }
}
