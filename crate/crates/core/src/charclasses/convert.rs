use std::collections::BTreeMap;

use super::charpoly::{Basis, CharPoly};
use crate::algebra::{SparsePoly, Var, VarSet};
use crate::error::{Error, Result};

/// `s_1..s_n` as polynomials in `c_1..c_r`, from `s(E)·c(E) = 1`:
/// `s_j = −Σ_{i=1}^{min(j,r)} c_i s_{j−i}`.
pub fn segre_in_chern(n: u32, rank: u32) -> Vec<SparsePoly> {
    let vs = VarSet::chern(rank);
    let c: Vec<SparsePoly> = (1..=rank)
        .map(|i| SparsePoly::var(vs.clone(), Var::chern(i)).expect("in range"))
        .collect();
    let mut s = vec![SparsePoly::one(vs.clone())];
    for j in 1..=n as usize {
        let mut acc = SparsePoly::zero(vs.clone());
        for i in 1..=j.min(rank as usize) {
            acc = &acc - &(&c[i - 1] * &s[j - i]);
        }
        s.push(acc);
    }
    s.remove(0);
    s
}

/// `c_1..c_m` as polynomials in `s_1..s_n` (`m ≤ n`), by the same recursion
/// with the roles exchanged.
pub fn chern_in_segre(m: u32, n: u32) -> Vec<SparsePoly> {
    assert!(m <= n, "c_{m} needs s_1..s_{m}");
    let vs = VarSet::segre(n);
    let s: Vec<SparsePoly> = (1..=n)
        .map(|i| SparsePoly::var(vs.clone(), Var::segre(i)).expect("in range"))
        .collect();
    let mut c = vec![SparsePoly::one(vs.clone())];
    for j in 1..=m as usize {
        let mut acc = SparsePoly::zero(vs.clone());
        for i in 1..=j {
            acc = &acc - &(&s[i - 1] * &c[j - i]);
        }
        c.push(acc);
    }
    c.remove(0);
    c
}

/// Rewrites `p` in the `target` basis. `rank` is the bundle rank and `n` the
/// number of Segre variables; a Chern polynomial of degree `k` needs `n ≥ k`.
pub fn segre_chern_convert(p: &CharPoly, target: Basis, rank: u32, n: u32) -> Result<CharPoly> {
    let k = p.degree();
    match (p.basis(), target) {
        (Basis::Chern { rank: pr }, Basis::Chern { rank: tr }) => {
            check_rank(pr, rank)?;
            check_rank(tr, rank)?;
            Ok(p.clone())
        }
        (Basis::Segre { n: pn }, Basis::Segre { n: tn }) => {
            if pn == tn {
                return Ok(p.clone());
            }
            if tn < k {
                return Err(degree_error(k, tn));
            }
            let mut bindings = BTreeMap::new();
            for j in 1..=pn {
                let image = if j <= tn {
                    SparsePoly::var(VarSet::segre(tn), Var::segre(j))?
                } else {
                    // s_j with j > k cannot occur in a degree-k polynomial
                    SparsePoly::zero(VarSet::segre(tn))
                };
                bindings.insert(Var::segre(j), image);
            }
            let poly = p.poly().substitute(&bindings, &VarSet::segre(tn))?;
            CharPoly::new(Basis::Segre { n: tn }, k, poly)
        }
        (Basis::Segre { .. }, Basis::Chern { rank: tr }) => {
            check_rank(tr, rank)?;
            let Basis::Segre { n: pn } = p.basis() else {
                unreachable!()
            };
            let images = segre_in_chern(pn, rank);
            let bindings: BTreeMap<Var, SparsePoly> = images
                .into_iter()
                .enumerate()
                .map(|(i, img)| (Var::segre(i as u32 + 1), img))
                .collect();
            let poly = p.poly().substitute(&bindings, &VarSet::chern(rank))?;
            CharPoly::new(Basis::Chern { rank }, k, poly)
        }
        (Basis::Chern { rank: pr }, Basis::Segre { n: tn }) => {
            check_rank(pr, rank)?;
            if tn != n {
                return Err(Error::Contract(format!(
                    "target basis has {tn} Segre variables, n = {n}"
                )));
            }
            if n < k {
                return Err(degree_error(k, n));
            }
            let usable = rank.min(n);
            let images = chern_in_segre(usable, n);
            let mut bindings = BTreeMap::new();
            for j in 1..=rank {
                let image = match images.get(j as usize - 1) {
                    Some(img) => img.clone(),
                    // c_j with j > n ≥ k cannot occur in a degree-k polynomial
                    None => SparsePoly::zero(VarSet::segre(n)),
                };
                bindings.insert(Var::chern(j), image);
            }
            let poly = p.poly().substitute(&bindings, &VarSet::segre(n))?;
            CharPoly::new(Basis::Segre { n }, k, poly)
        }
    }
}

fn check_rank(basis_rank: u32, rank: u32) -> Result<()> {
    if basis_rank != rank {
        return Err(Error::Contract(format!(
            "Chern basis of rank {basis_rank} used with rank {rank}"
        )));
    }
    Ok(())
}

fn degree_error(k: u32, n: u32) -> Error {
    Error::DegreeOutOfRange(format!(
        "degree {k} exceeds the {n} available Segre variables"
    ))
}

/// Converts to the Chern basis of the given rank.
pub fn to_chern(p: &CharPoly, rank: u32) -> Result<CharPoly> {
    segre_chern_convert(p, Basis::Chern { rank }, rank, p.degree().max(1))
}

/// Converts to the Segre basis with `n = max(degree, 1)` variables, or keeps
/// the existing Segre basis.
pub fn to_segre(p: &CharPoly, rank: u32) -> Result<CharPoly> {
    match p.basis() {
        Basis::Segre { .. } => Ok(p.clone()),
        Basis::Chern { .. } => {
            let n = p.degree().max(1);
            segre_chern_convert(p, Basis::Segre { n }, rank, n)
        }
    }
}

/// Equal as classes of a rank-`rank` bundle (compared in the Chern basis,
/// where the variables are algebraically independent).
pub fn same_class(a: &CharPoly, b: &CharPoly, rank: u32) -> Result<bool> {
    if a.is_zero() && b.is_zero() {
        return Ok(true);
    }
    let (ca, cb) = (to_chern(a, rank)?, to_chern(b, rank)?);
    if ca.is_zero() && cb.is_zero() {
        return Ok(true);
    }
    Ok(ca.degree() == cb.degree() && ca.poly().checked_sub(cb.poly())?.is_zero())
}

/// Whether a class vanishes as a polynomial in `c_1..c_r`.
pub fn is_zero_class(p: &CharPoly, rank: u32) -> Result<bool> {
    Ok(p.is_zero() || to_chern(p, rank)?.is_zero())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::parse_poly_in;

    fn chern(text: &str, r: u32) -> CharPoly {
        CharPoly::from_poly(parse_poly_in(text, &VarSet::chern(r)).unwrap()).unwrap()
    }

    fn segre(text: &str, n: u32) -> CharPoly {
        CharPoly::from_poly(parse_poly_in(text, &VarSet::segre(n)).unwrap()).unwrap()
    }

    #[test]
    fn low_degree_segre_classes() {
        let s = segre_in_chern(3, 3);
        let vs = VarSet::chern(3);
        assert_eq!(s[0], parse_poly_in("-c1", &vs).unwrap());
        assert_eq!(s[1], parse_poly_in("c1^2 - c2", &vs).unwrap());
        assert_eq!(s[2], parse_poly_in("-c1^3 + 2*c1*c2 - c3", &vs).unwrap());
    }

    #[test]
    fn projective_golden_identity() {
        let p = segre("s3 - 5*s1*s2", 3);
        let c = segre_chern_convert(&p, Basis::Chern { rank: 3 }, 3, 3).unwrap();
        assert_eq!(c, chern("4*c1^3 - 3*c1*c2 - c3", 3));
        let back = segre_chern_convert(&c, Basis::Segre { n: 3 }, 3, 3).unwrap();
        assert_eq!(back, p);
    }

    #[test]
    fn first_chern_class_is_minus_s1() {
        let c1 = chern("c1", 2);
        let s = segre_chern_convert(&c1, Basis::Segre { n: 1 }, 2, 1).unwrap();
        assert_eq!(s, segre("-s1", 1));
    }

    #[test]
    fn truncation_too_small_is_rejected() {
        let p = chern("c1^2", 2);
        let err = segre_chern_convert(&p, Basis::Segre { n: 1 }, 2, 1);
        assert!(matches!(err, Err(Error::DegreeOutOfRange(_))));
    }

    #[test]
    fn rank_one_segre_powers_collapse() {
        // for a line bundle s_2 = s_1^2 as classes
        let a = segre("s2", 2);
        let b = segre("s1^2", 2);
        assert!(same_class(&a, &b, 1).unwrap());
        assert!(!same_class(&a, &b, 2).unwrap());
        assert!(is_zero_class(&CharPoly::zero(Basis::Segre { n: 2 }, 2), 2).unwrap());
    }
}
