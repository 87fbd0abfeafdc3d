use num_traits::Zero;

use crate::algebra::{Rational, SparsePoly, Var, VarSet};
use crate::charclasses::{determinant, Basis, CharPoly};
use crate::combinatorics::{bounded_partitions, syt_count_padded, FlagType, WeightVector};
use crate::error::{Error, Result};

/// The flag `(0, r−d, r)` and weight `1^{d|r−d}` whose tautological class is
/// `c_1` of the rank-`d` universal quotient.
pub fn grassmannian_source(r: u32, d: u32) -> Result<(FlagType, WeightVector)> {
    let flag = FlagType::grassmannian(r, d)?;
    let weight = WeightVector::from_block_values(&flag, &[1, 0])?;
    Ok((flag, weight))
}

/// `π_* c_1(Q)^N` on the Grassmannian bundle of `(r−d)`-planes, by the
/// tableau formula
/// `Σ_{|λ| = N − d(r−d)} f^{λ+ε} det((−1)^{λ_i+j−i} s_{λ_i+j−i})_{d×d}`.
pub fn grassmannian_segre(r: u32, d: u32, big_n: u32, n: u32) -> Result<CharPoly> {
    if d == 0 || d >= r {
        return Err(Error::InvalidFlag(format!(
            "need 1 <= d < r, got d={d}, r={r}"
        )));
    }
    let basis = Basis::Segre { n };
    let base = d * (r - d);
    if big_n < base {
        return Ok(CharPoly::zero(basis, 0));
    }
    let k = big_n - base;
    if k > n {
        return Err(Error::DegreeOutOfRange(format!(
            "push-forward has degree {k} but only s1..s{n} are available"
        )));
    }
    let vs = VarSet::segre(n);
    let signed_segre = |j: i64| -> Option<SparsePoly> {
        match j {
            0 => Some(SparsePoly::one(vs.clone())),
            j if j < 0 || j > i64::from(n) => None,
            j => {
                let s = SparsePoly::var(vs.clone(), Var::segre(j as u32)).expect("in range");
                Some(if j % 2 == 0 { s } else { -s })
            }
        }
    };

    let mut total = SparsePoly::zero(vs.clone());
    for lambda in bounded_partitions(k, k, d as usize) {
        let matrix: Vec<Vec<Option<SparsePoly>>> = (0..d as usize)
            .map(|i| {
                (0..d as usize)
                    .map(|j| signed_segre(i64::from(lambda.part(i)) + j as i64 - i as i64))
                    .collect()
            })
            .collect();
        let det = determinant(&matrix, &vs);
        if det.is_zero() {
            continue;
        }
        let f = Rational::from_integer(syt_count_padded(&lambda, d, r)?);
        if !f.is_zero() {
            total = &total + &det.scale(&f);
        }
    }
    CharPoly::new(basis, k, total)
}
