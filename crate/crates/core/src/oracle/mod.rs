//! Independent push-forwards through the Jacobi symmetrizer over Chern roots,
//! and evaluation on split bundles.

use std::collections::HashMap;

use num_traits::Zero;

use crate::algebra::rational::rat;
use crate::algebra::{vandermonde, Monomial, Rational, SparsePoly, VarKind, VarSet};
use crate::charclasses::{roots_to_chern, to_chern, to_segre, Basis, CharPoly};
use crate::combinatorics::FlagType;
use crate::error::{Error, Result};

/// Every permutation of `0..r` with its sign, in lexicographic order.
pub fn signed_permutations(r: usize) -> Vec<(Vec<usize>, i64)> {
    fn go(cur: &mut Vec<usize>, free: &mut Vec<bool>, out: &mut Vec<(Vec<usize>, i64)>) {
        if cur.len() == free.len() {
            let inversions = (0..cur.len())
                .flat_map(|i| (i + 1..cur.len()).map(move |j| (i, j)))
                .filter(|&(i, j)| cur[i] > cur[j])
                .count();
            out.push((cur.clone(), if inversions % 2 == 0 { 1 } else { -1 }));
            return;
        }
        for v in 0..free.len() {
            if free[v] {
                free[v] = false;
                cur.push(v);
                go(cur, free, out);
                cur.pop();
                free[v] = true;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut vec![true; r], &mut out);
    out
}

/// `Σ_w sgn(w) w(F̃) / ∏_{i<j} (ξ_j − ξ_i)` as a class in the Chern basis.
///
/// The roots are those of the dual bundle, so the symmetric quotient is read
/// with `c_j(E) = (−1)^j e_j(ξ)`.
pub fn symmetrizer_chern(ftilde: &SparsePoly, r: u32) -> Result<CharPoly> {
    let expected = VarSet::roots(r);
    if ftilde.varset() != &expected {
        return Err(Error::VarSetMismatch {
            lhs: ftilde.varset().clone(),
            rhs: expected,
        });
    }
    let top = r * r.saturating_sub(1) / 2;
    let basis = Basis::Chern { rank: r };
    let degree = match ftilde.homogeneous_degree()? {
        Some(d) if d >= i64::from(top) => d,
        _ => return Ok(CharPoly::zero(basis, 0)),
    };
    let k = (degree - i64::from(top)) as u32;

    let mut acc: HashMap<Vec<i32>, Rational> = HashMap::new();
    for (perm, sign) in signed_permutations(r as usize) {
        let sign = rat(sign);
        for (m, c) in ftilde.terms() {
            let mut exps = vec![0i32; r as usize];
            for (i, &p) in perm.iter().enumerate() {
                exps[p] = m[i];
            }
            *acc.entry(exps).or_insert_with(Rational::zero) += c * &sign;
        }
    }
    let numerator = SparsePoly::from_terms(
        expected.clone(),
        false,
        acc.into_iter()
            .filter(|(_, c)| !c.is_zero())
            .map(|(e, c)| (Monomial::new(e), c)),
    )?;

    // ∏_{i<j} (ξ_j − ξ_i) = (−1)^{r(r−1)/2} ∏_{i<j} (ξ_i − ξ_j)
    let mut denominator = vandermonde(r);
    if top % 2 == 1 {
        denominator = -denominator;
    }
    let (quotient, remainder) = numerator.div_rem(&denominator)?;
    if !remainder.is_zero() {
        return Err(Error::Internal(
            "antisymmetrised numerator is not divisible by the Vandermonde".into(),
        ));
    }
    let chern = roots_to_chern(&quotient).map_err(|e| match e {
        Error::NotSymmetric(a, b) => Error::Internal(format!(
            "symmetrizer quotient is not symmetric under ({a} {b})"
        )),
        other => other,
    })?;
    let dual = if k % 2 == 1 { -chern } else { chern };
    CharPoly::new(basis, k, dual)
}

/// The symmetrizer push-forward in the Segre basis with `n = max(k, 1)`.
pub fn symmetrizer_pushforward(ftilde: &SparsePoly, r: u32) -> Result<CharPoly> {
    to_segre(&symmetrizer_chern(ftilde, r)?, r)
}

/// `∏_j ξ_{p+2}^1 ξ_{p+3}^2 ⋯ ξ_{p+b_j}^{b_j−1}` over the root blocks
/// (`p = s_{j−1}`), a fiberwise point class of the partial flag manifold
/// pulled back to the complete flag bundle.
pub fn staircase_class(flag: &FlagType) -> SparsePoly {
    let r = flag.rank();
    let mut exps = vec![0i32; r as usize];
    for block in flag.root_blocks() {
        for (step, idx) in block.enumerate() {
            exps[idx] = step as i32;
        }
    }
    SparsePoly::monomial(VarSet::roots(r), exps, rat(1)).expect("valid monomial")
}

/// Push-forward from a partial flag bundle through the complete flag bundle:
/// the symmetrizer applied to `F̃ · staircase`. Chern basis.
pub fn oracle_chern(flag: &FlagType, ftilde: &SparsePoly) -> Result<CharPoly> {
    let lifted = ftilde.checked_mul(&staircase_class(flag))?;
    symmetrizer_chern(&lifted, flag.rank())
}

/// [`oracle_chern`] in the Segre basis with `n = max(k, 1)`.
pub fn oracle_pushforward(flag: &FlagType, ftilde: &SparsePoly) -> Result<CharPoly> {
    to_segre(&oracle_chern(flag, ftilde)?, flag.rank())
}

/// Value of a class on the split bundle with Chern roots `m_1..m_r`:
/// `c_j ↦ e_j(m)`. Segre input is converted first.
pub fn split_bundle_eval(p: &CharPoly, m: &[i64]) -> Result<Rational> {
    split_eval(to_chern(p, m.len() as u32)?.poly(), m)
}

/// [`split_bundle_eval`] for any polynomial in `c_1..c_r`, `r = m.len()`.
pub fn split_eval(p: &SparsePoly, m: &[i64]) -> Result<Rational> {
    // e_j(m) from ∏ (1 + m_i x)
    let mut e = vec![rat(1)];
    for &mi in m {
        let mut next = e.clone();
        next.push(rat(0));
        for j in 1..next.len() {
            next[j] += &e[j - 1] * rat(mi);
        }
        e = next;
    }
    p.evaluate(&e[1..])
}

/// Checks that `p` is symmetric in the root variables; used by callers that
/// build their own root polynomials.
pub fn is_symmetric(p: &SparsePoly) -> bool {
    p.varset().kind() == Some(VarKind::Root) && crate::charclasses::asymmetry_witness(p).is_none()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::parse_poly_in;
    use crate::charclasses::same_class;
    use crate::combinatorics::WeightVector;
    use crate::gysin::{build_ftilde_weight, dp_segre};

    fn roots(text: &str, r: u32) -> SparsePoly {
        parse_poly_in(text, &VarSet::roots(r)).unwrap()
    }

    fn segre(text: &str, n: u32) -> CharPoly {
        CharPoly::from_poly(parse_poly_in(text, &VarSet::segre(n)).unwrap()).unwrap()
    }

    fn chern(text: &str, r: u32) -> CharPoly {
        CharPoly::from_poly(parse_poly_in(text, &VarSet::chern(r)).unwrap()).unwrap()
    }

    #[test]
    fn permutations_and_signs() {
        let perms = signed_permutations(3);
        assert_eq!(perms.len(), 6);
        assert_eq!(perms.iter().map(|(_, s)| s).sum::<i64>(), 0);
        assert_eq!(perms[1], (vec![0, 2, 1], -1));
    }

    #[test]
    fn rank_two_anchor() {
        let p = symmetrizer_pushforward(&roots("-t1", 2), 2).unwrap();
        assert_eq!(p, segre("1", 1));
    }

    #[test]
    fn rank_three_degree_zero_formula() {
        for (a, b, c) in [(3i64, 2, 0), (2, 1, 0), (5, 3, 1), (4, 4, 1)] {
            let ft = roots(&format!("(-({a}*t1 + {b}*t2 + {c}*t3))^3"), 3);
            let got = symmetrizer_chern(&ft, 3).unwrap();
            let expected =
                3 * (a * a * b - a * b * b - a * a * c + a * c * c + b * b * c - b * c * c);
            assert_eq!(got, chern(&expected.to_string(), 3), "({a},{b},{c})");
        }
    }

    #[test]
    fn degree_deficient_input_is_zero() {
        assert!(symmetrizer_pushforward(&roots("1", 2), 2)
            .unwrap()
            .is_zero());
        assert!(
            oracle_pushforward(&FlagType::complete(3), &SparsePoly::zero(VarSet::roots(3)))
                .unwrap()
                .is_zero()
        );
    }

    #[test]
    fn staircases() {
        assert_eq!(staircase_class(&FlagType::complete(3)), roots("1", 3));
        assert_eq!(staircase_class(&"0,1,3".parse().unwrap()), roots("t2", 3));
        assert_eq!(
            staircase_class(&"0,2,4".parse().unwrap()),
            roots("t2*t4", 4)
        );
        assert_eq!(
            staircase_class(&"0,4".parse().unwrap()),
            roots("t2*t3^2*t4^3", 4)
        );
    }

    #[test]
    fn projective_bundle_through_the_oracle() {
        let flag: FlagType = "0,1,3".parse().unwrap();
        let p = oracle_pushforward(&flag, &roots("(-(t1 + t2))^5", 3)).unwrap();
        assert_eq!(p, segre("s3 - 5*s1*s2", 3));
    }

    #[test]
    fn rank_four_complete_flag() {
        let flag = FlagType::complete(4);
        let w = WeightVector::validate(&flag, &[4, 3, 2, 0]).unwrap();
        let ft = build_ftilde_weight(&flag, &w, 9).unwrap();
        let p = oracle_pushforward(&flag, &ft).unwrap();
        assert_eq!(p, segre("181440*(-8*s1^3 - 12*s1*s2 + s3)", 3));
    }

    #[test]
    fn agrees_with_extraction_on_all_rank_three_flags() {
        for flag in FlagType::all_of_rank(3) {
            for values in [[3i64, 1, 0], [4, 2, 1]] {
                let w = WeightVector::from_block_values(&flag, &values[..flag.blocks()]).unwrap();
                for k in 0..=3 {
                    let ft = build_ftilde_weight(&flag, &w, flag.relative_dim() + k).unwrap();
                    let dp = dp_segre(&flag, &ft, k.max(1)).unwrap();
                    let oracle = oracle_chern(&flag, &ft).unwrap();
                    assert!(same_class(&dp, &oracle, 3).unwrap(), "{flag} {w} k={k}");
                }
            }
        }
    }

    #[test]
    fn split_bundles() {
        assert_eq!(
            split_bundle_eval(&chern("c1^2", 2), &[1, 1]).unwrap(),
            rat(4)
        );
        assert_eq!(
            split_bundle_eval(&chern("c1*c2 - c3", 3), &[1, 2, 3]).unwrap(),
            rat(60)
        );
        assert_eq!(
            split_bundle_eval(&CharPoly::zero(Basis::Chern { rank: 2 }, 3), &[2, 5]).unwrap(),
            rat(0)
        );
        // s1 = −c1
        assert_eq!(
            split_bundle_eval(&segre("s1", 1), &[2, 5]).unwrap(),
            rat(-7)
        );
        assert!(is_symmetric(&roots("t1*t2", 2)));
        assert!(!is_symmetric(&roots("t1", 2)));
    }
}
