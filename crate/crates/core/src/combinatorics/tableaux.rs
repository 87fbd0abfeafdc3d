use num_bigint::BigInt;
use num_traits::Zero;

use super::partition::Partition;
use crate::algebra::rational::factorial;
use crate::error::{Error, Result};

/// Number of standard Young tableaux of shape `λ + ε`, `ε = (r−d)^d`, for a
/// partition `λ` with at most `d` parts:
///
/// `f = N! ∏_{i<j} (λ_i − λ_j − i + j) / ∏_i (r + λ_i − i)!`, `N = |λ| + d(r−d)`.
pub fn syt_count_padded(lambda: &Partition, d: u32, r: u32) -> Result<BigInt> {
    if d == 0 || r < d {
        return Err(Error::Contract(format!(
            "need 1 <= d <= r, got d={d}, r={r}"
        )));
    }
    let lambda = lambda.padded(d as usize)?;
    let l: Vec<i64> = lambda.parts().iter().map(|&p| i64::from(p)).collect();
    let (d, r) = (i64::from(d), i64::from(r));
    let n = l.iter().sum::<i64>() + d * (r - d);

    let mut num = factorial(n as u64);
    for i in 0..d as usize {
        for j in i + 1..d as usize {
            num *= BigInt::from(l[i] - l[j] - i as i64 + j as i64);
        }
    }
    let mut den = BigInt::from(1);
    for (i, &li) in l.iter().enumerate() {
        den *= factorial((r + li - (i as i64 + 1)) as u64);
    }
    let (q, rem) = (&num / &den, &num % &den);
    if !rem.is_zero() {
        return Err(Error::Internal(format!(
            "tableau count for {lambda} is not integral"
        )));
    }
    Ok(q)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::partition::bounded_partitions;

    /// Counts standard fillings by placing 1, 2, … in cells whose upper and
    /// left neighbours are already filled.
    fn brute_force_syt(shape: &[u32]) -> u64 {
        fn go(shape: &[u32], filled: &mut Vec<u32>, left: u32) -> u64 {
            if left == 0 {
                return 1;
            }
            let mut total = 0;
            for row in 0..shape.len() {
                let col = filled[row];
                if col < shape[row] && (row == 0 || filled[row - 1] > col) {
                    filled[row] += 1;
                    total += go(shape, filled, left - 1);
                    filled[row] -= 1;
                }
            }
            total
        }
        let cells = shape.iter().sum();
        go(shape, &mut vec![0; shape.len()], cells)
    }

    #[test]
    fn spec_examples() {
        let two_by_two = syt_count_padded(&"0,0".parse().unwrap(), 2, 4).unwrap();
        assert_eq!(two_by_two, BigInt::from(brute_force_syt(&[2, 2])));
        assert_eq!(two_by_two, BigInt::from(2));
        let three_two = syt_count_padded(&"1,0".parse().unwrap(), 2, 4).unwrap();
        assert_eq!(three_two, BigInt::from(brute_force_syt(&[3, 2])));
        assert_eq!(three_two, BigInt::from(5));
        assert_eq!(
            syt_count_padded(&"0".parse().unwrap(), 1, 2).unwrap(),
            BigInt::from(1)
        );
    }

    #[test]
    fn too_many_parts() {
        assert!(syt_count_padded(&"1,1,1".parse().unwrap(), 2, 4).is_err());
        assert!(syt_count_padded(&"1".parse().unwrap(), 3, 2).is_err());
    }

    #[test]
    fn agrees_with_enumeration_up_to_eight_cells() {
        let mut checked = 0;
        for r in 1..=8u32 {
            for d in 1..=r {
                let base = d * (r - d);
                for extra in 0..=8u32.saturating_sub(base) {
                    if base + extra > 8 {
                        continue;
                    }
                    for lambda in bounded_partitions(extra, extra.max(1), d as usize) {
                        let shape: Vec<u32> = lambda.parts().iter().map(|&p| p + r - d).collect();
                        let expected = brute_force_syt(&shape);
                        assert_eq!(
                            syt_count_padded(&lambda, d, r).unwrap(),
                            BigInt::from(expected),
                            "lambda={lambda}, d={d}, r={r}"
                        );
                        checked += 1;
                    }
                }
            }
        }
        assert!(checked > 50);
    }
}
