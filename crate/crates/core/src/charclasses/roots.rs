use crate::algebra::rational::rat;
use crate::algebra::{Monomial, SparsePoly, Var, VarKind, VarSet};
use crate::error::{Error, Result};

/// `e_j(t_1, …, t_r)`.
pub fn elementary_symmetric(r: u32, j: u32) -> SparsePoly {
    let vs = VarSet::roots(r);
    if j > r {
        return SparsePoly::zero(vs);
    }
    let mut terms = Vec::new();
    let mut pick = vec![0i32; r as usize];
    subsets(r as usize, j as usize, 0, &mut pick, &mut |m| {
        terms.push((Monomial::new(m.to_vec()), rat(1)));
    });
    SparsePoly::from_terms(vs, false, terms).expect("valid monomials")
}

fn subsets(n: usize, k: usize, from: usize, cur: &mut [i32], f: &mut impl FnMut(&[i32])) {
    if k == 0 {
        f(cur);
        return;
    }
    for i in from..=n - k {
        cur[i] = 1;
        subsets(n, k - 1, i + 1, cur, f);
        cur[i] = 0;
    }
}

/// First adjacent transposition `(t_i, t_{i+1})` that changes `p`, if any.
pub fn asymmetry_witness(p: &SparsePoly) -> Option<(Var, Var)> {
    let r = p.varset().count(VarKind::Root);
    (0..r.saturating_sub(1) as usize).find_map(|i| {
        let mut perm: Vec<usize> = (0..r as usize).collect();
        perm.swap(i, i + 1);
        (p.permute_block(VarKind::Root, &perm) != *p)
            .then(|| (Var::root(i as u32 + 1), Var::root(i as u32 + 2)))
    })
}

/// Rewrites a symmetric polynomial in `t_1..t_r` as a polynomial in the
/// Chern classes `c_j = e_j(t)`.
///
/// Repeatedly removes the leading term `a·t^α` (α is weakly decreasing for a
/// symmetric polynomial) by subtracting `a ∏ e_j^{α_j − α_{j+1}}`.
pub fn roots_to_chern(p: &SparsePoly) -> Result<SparsePoly> {
    let r = match (p.varset().kind(), p.varset().len()) {
        (Some(VarKind::Root), r) => r as u32,
        _ if p.varset().is_empty() => 0,
        _ => {
            return Err(Error::Contract(format!(
                "{} is not a root variable set",
                p.varset()
            )))
        }
    };
    if p.is_laurent() && p.terms().any(|(m, _)| m.has_negative()) {
        return Err(Error::NegativeExponent {
            var: Var::root(1),
            exponent: -1,
        });
    }
    if let Some((a, b)) = asymmetry_witness(p) {
        return Err(Error::NotSymmetric(a, b));
    }
    let target = VarSet::chern(r);
    let e: Vec<SparsePoly> = (1..=r).map(|j| elementary_symmetric(r, j)).collect();
    let p = SparsePoly::from_terms(
        p.varset().clone(),
        false,
        p.terms().map(|(m, c)| (m.clone(), c.clone())),
    )?;

    let mut rest = p;
    let mut out = SparsePoly::zero(target.clone());
    while let Some((lead, coeff)) = rest.terms().last().map(|(m, c)| (m.clone(), c.clone())) {
        let alpha = lead.exponents();
        let gaps: Vec<i32> = (0..r as usize)
            .map(|j| alpha[j] - alpha.get(j + 1).copied().unwrap_or(0))
            .collect();
        if gaps.iter().any(|&g| g < 0) {
            return Err(Error::Internal(format!(
                "leading exponent {alpha:?} of a symmetric polynomial is not decreasing"
            )));
        }
        let mut image = SparsePoly::constant(VarSet::roots(r), coeff.clone());
        for (j, &g) in gaps.iter().enumerate() {
            if g > 0 {
                image = &image * &e[j].pow(g as u32);
            }
        }
        rest = &rest - &image;
        out = &out + &SparsePoly::monomial(target.clone(), gaps, coeff)?;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::parse_poly_in;

    fn roots(text: &str, r: u32) -> SparsePoly {
        parse_poly_in(text, &VarSet::roots(r)).unwrap()
    }

    fn chern(text: &str, r: u32) -> SparsePoly {
        parse_poly_in(text, &VarSet::chern(r)).unwrap()
    }

    #[test]
    fn elementary_polynomials() {
        assert_eq!(
            elementary_symmetric(3, 2),
            roots("t1*t2 + t1*t3 + t2*t3", 3)
        );
        assert_eq!(elementary_symmetric(2, 0), roots("1", 2));
        assert!(elementary_symmetric(2, 3).is_zero());
    }

    #[test]
    fn difference_of_squares_is_four_c2() {
        let p = roots("(t1 + t2)^2 - (t1 - t2)^2", 2);
        assert_eq!(roots_to_chern(&p).unwrap(), chern("4*c2", 2));
    }

    #[test]
    fn power_sums() {
        assert_eq!(
            roots_to_chern(&roots("t1^2 + t2^2 + t3^2", 3)).unwrap(),
            chern("c1^2 - 2*c2", 3)
        );
        assert_eq!(
            roots_to_chern(&roots("t1^3 + t2^3", 2)).unwrap(),
            chern("c1^3 - 3*c1*c2", 2)
        );
    }

    #[test]
    fn asymmetric_input_names_a_transposition() {
        let err = roots_to_chern(&roots("t1^2 + t2", 3)).unwrap_err();
        assert!(matches!(err, Error::NotSymmetric(a, b) if a == Var::root(1) && b == Var::root(2)));
        let err = roots_to_chern(&roots("t1 + t2", 3)).unwrap_err();
        assert!(matches!(err, Error::NotSymmetric(a, b) if a == Var::root(2) && b == Var::root(3)));
    }

    #[test]
    fn constants_pass_through() {
        assert_eq!(roots_to_chern(&roots("7", 2)).unwrap(), chern("7", 2));
        assert!(roots_to_chern(&SparsePoly::zero(VarSet::roots(2)))
            .unwrap()
            .is_zero());
    }
}
