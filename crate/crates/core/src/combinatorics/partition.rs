use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::str::FromStr;

use crate::error::{Error, Result};

/// Weakly decreasing tuple of nonnegative integers.
///
/// Parts may carry trailing zeros (padding); equality, ordering and hashing
/// ignore them, so `(2,1)` and `(2,1,0)` are the same partition.
#[derive(Debug, Clone)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!(
                "{parts:?} is not weakly decreasing"
            )));
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: vec![] }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Parts without trailing zeros.
    pub fn trimmed(&self) -> &[u32] {
        let n = self
            .parts
            .iter()
            .rposition(|&p| p != 0)
            .map_or(0, |i| i + 1);
        &self.parts[..n]
    }

    /// Number of nonzero parts.
    pub fn length(&self) -> usize {
        self.trimmed().len()
    }

    pub fn weight(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn largest(&self) -> u32 {
        self.parts.first().copied().unwrap_or(0)
    }

    /// The `i`-th part (0-based), zero past the end.
    pub fn part(&self, i: usize) -> u32 {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// Zero-pads (or trims zeros) to exactly `len` parts.
    pub fn padded(&self, len: usize) -> Result<Partition> {
        if self.length() > len {
            return Err(Error::InvalidPartition(format!(
                "{self} has more than {len} nonzero parts"
            )));
        }
        let mut parts = self.trimmed().to_vec();
        parts.resize(len, 0);
        Ok(Partition { parts })
    }

    /// Transpose of the Young diagram.
    pub fn conjugate(&self) -> Partition {
        let parts = (1..=self.largest())
            .map(|j| self.parts.iter().filter(|&&p| p >= j).count() as u32)
            .collect();
        Partition { parts }
    }
}

impl PartialEq for Partition {
    fn eq(&self, other: &Self) -> bool {
        self.trimmed() == other.trimmed()
    }
}

impl Eq for Partition {}

impl Hash for Partition {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.trimmed().hash(state);
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.trimmed().cmp(other.trimmed())
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.parts.iter().map(u32::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().trim_start_matches('(').trim_end_matches(')');
        if s.trim().is_empty() {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<u32>()
                    .map_err(|_| Error::InvalidPartition(format!("bad part {p:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

/// Partitions of `k` with every part at most `max_part` and at most
/// `max_len` nonzero parts, in reverse lexicographic order, padded to
/// `max_len`.
pub fn bounded_partitions(k: u32, max_part: u32, max_len: usize) -> Vec<Partition> {
    fn go(rest: u32, cap: u32, slots: usize, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if rest == 0 {
            out.push(cur.clone());
            return;
        }
        if slots == 0 {
            return;
        }
        for p in (1..=cap.min(rest)).rev() {
            cur.push(p);
            go(rest - p, p, slots - 1, cur, out);
            cur.pop();
        }
    }
    let mut raw = Vec::new();
    go(k, max_part, max_len, &mut Vec::new(), &mut raw);
    raw.into_iter()
        .map(|mut parts| {
            parts.resize(max_len.max(parts.len()), 0);
            Partition { parts }
        })
        .collect()
}

/// `Λ(k, r)`: partitions `r ≥ σ_1 ≥ … ≥ σ_r ≥ 0` with `|σ| = k`, padded to
/// length `r`, in reverse lexicographic order.
pub fn enumerate_partitions(k: u32, r: u32) -> Vec<Partition> {
    bounded_partitions(k, r, r as usize)
}
