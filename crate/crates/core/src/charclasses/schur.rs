use std::collections::BTreeMap;
use std::fmt;

use num_traits::{Signed, Zero};

use super::charpoly::{Basis, CharPoly};
use super::convert::to_chern;
use super::linsolve::{determinant, solve_exact};
use crate::algebra::{latex_rational, Monomial, Rational, SparsePoly, Var, VarSet};
use crate::combinatorics::{bounded_partitions, Partition};
use crate::error::{Error, Result};

/// Schur polynomial `S_σ(E) = det(c_{σ_i − i + j})` of a rank-`r` bundle for
/// `σ ∈ Λ(|σ|, r)`.
pub fn schur_polynomial(sigma: &Partition, r: u32) -> Result<CharPoly> {
    if sigma.length() > r as usize {
        return Err(Error::InvalidPartition(format!(
            "{sigma} has more than {r} nonzero parts"
        )));
    }
    schur_polynomial_general(sigma, r)
}

/// Jacobi–Trudi determinant for any partition with parts at most `r`; the
/// matrix has size `max(r, length)`.
pub fn schur_polynomial_general(sigma: &Partition, r: u32) -> Result<CharPoly> {
    if sigma.largest() > r {
        return Err(Error::InvalidPartition(format!(
            "{sigma} has a part larger than the rank {r}"
        )));
    }
    let size = (r as usize).max(sigma.length());
    let vs = VarSet::chern(r);
    let entry = |i: usize, j: usize| -> Option<SparsePoly> {
        let e = i64::from(sigma.part(i)) - i as i64 + j as i64;
        match e {
            0 => Some(SparsePoly::one(vs.clone())),
            e if e < 0 || e > i64::from(r) => None,
            e => Some(SparsePoly::var(vs.clone(), Var::chern(e as u32)).expect("in range")),
        }
    };
    let matrix: Vec<Vec<Option<SparsePoly>>> = (0..size)
        .map(|i| (0..size).map(|j| entry(i, j)).collect())
        .collect();
    let det = determinant(&matrix, &vs);
    CharPoly::new(Basis::Chern { rank: r }, sigma.weight(), det)
}

/// Index set of the Schur basis in degree `k`: partitions of `k` with parts
/// at most `r`, padded to `max(r, length)`. For `k ≤ r` this is `Λ(k, r)`.
pub fn schur_basis(k: u32, r: u32) -> Vec<Partition> {
    bounded_partitions(k, r, k.max(r) as usize)
        .into_iter()
        .map(|p| {
            let len = (r as usize).max(p.length());
            p.padded(len).expect("length fits")
        })
        .collect()
}

/// Coefficients of a class in the Schur basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SchurExpansion {
    rank: u32,
    degree: u32,
    terms: Vec<(Partition, Rational)>,
}

impl SchurExpansion {
    /// An expansion with the given coefficients, put in basis order with
    /// zeros dropped. Every partition must index the degree-`k` basis.
    pub fn from_coefficients(
        rank: u32,
        degree: u32,
        coeffs: &[(Partition, Rational)],
    ) -> Result<Self> {
        let basis = schur_basis(degree, rank);
        if let Some((p, _)) = coeffs.iter().find(|(p, _)| !basis.contains(p)) {
            return Err(Error::InvalidPartition(format!(
                "{p} is not in the degree-{degree} Schur basis for rank {rank}"
            )));
        }
        let terms = basis
            .into_iter()
            .filter_map(|sigma| {
                let c = coeffs.iter().find(|(p, _)| *p == sigma)?.1.clone();
                (!c.is_zero()).then_some((sigma, c))
            })
            .collect();
        Ok(SchurExpansion {
            rank,
            degree,
            terms,
        })
    }

    pub fn rank(&self) -> u32 {
        self.rank
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    /// Nonzero coefficients in basis order.
    pub fn terms(&self) -> &[(Partition, Rational)] {
        &self.terms
    }

    pub fn coeff(&self, sigma: &Partition) -> Rational {
        self.terms
            .iter()
            .find(|(p, _)| p == sigma)
            .map_or_else(Rational::zero, |(_, c)| c.clone())
    }

    /// Every coefficient is nonnegative.
    pub fn is_positive(&self) -> bool {
        self.terms.iter().all(|(_, c)| !c.is_negative())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// `Σ a_σ S_σ` back in the Chern basis.
    pub fn reconstruct(&self) -> Result<CharPoly> {
        let mut acc = SparsePoly::zero(VarSet::chern(self.rank));
        for (sigma, c) in &self.terms {
            let s = schur_polynomial_general(sigma, self.rank)?;
            acc = &acc + &s.poly().scale(c);
        }
        CharPoly::new(Basis::Chern { rank: self.rank }, self.degree, acc)
    }

    pub fn to_latex(&self) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut out = String::new();
        for (i, (sigma, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            match (i, neg) {
                (0, true) => out.push('-'),
                (0, false) => {}
                (_, true) => out.push_str(" - "),
                (_, false) => out.push_str(" + "),
            }
            let abs = c.abs();
            if abs != Rational::from_integer(1.into()) {
                out.push_str(&latex_rational(&abs));
                out.push(' ');
            }
            out.push_str(&format!("S_{{{sigma}}}"));
        }
        out
    }
}

impl fmt::Display for SchurExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (sigma, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            match (i, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let abs = c.abs();
            if abs != Rational::from_integer(1.into()) {
                write!(f, "{abs}*")?;
            }
            write!(f, "S{sigma}")?;
        }
        Ok(())
    }
}

/// Expands a class of a rank-`r` bundle in Schur polynomials.
///
/// Segre input is converted to the Chern basis first. The coefficients are
/// found by exact elimination and checked by reconstruction.
pub fn schur_expand(p: &CharPoly, r: u32) -> Result<SchurExpansion> {
    let p = to_chern(p, r)?;
    let k = p.degree();
    let basis = schur_basis(k, r);
    let images: Vec<CharPoly> = basis
        .iter()
        .map(|sigma| schur_polynomial_general(sigma, r))
        .collect::<Result<_>>()?;

    let mut rows: BTreeMap<Monomial, usize> = BTreeMap::new();
    for m in images
        .iter()
        .flat_map(|s| s.poly().terms().map(|(m, _)| m))
        .chain(p.poly().terms().map(|(m, _)| m))
    {
        let next = rows.len();
        rows.entry(m.clone()).or_insert(next);
    }
    let mut a = vec![vec![Rational::zero(); basis.len()]; rows.len()];
    for (col, s) in images.iter().enumerate() {
        for (m, c) in s.poly().terms() {
            a[rows[m]][col] = c.clone();
        }
    }
    let mut b = vec![Rational::zero(); rows.len()];
    for (m, c) in p.poly().terms() {
        b[rows[m]] = c.clone();
    }

    let coeffs = if basis.is_empty() {
        vec![]
    } else {
        solve_exact(&a, &b)
            .ok_or_else(|| Error::Internal(format!("degree-{k} class is not in the Schur span")))?
    };
    let terms = basis
        .into_iter()
        .zip(coeffs)
        .filter(|(_, c)| !c.is_zero())
        .collect();
    let expansion = SchurExpansion {
        rank: r,
        degree: k,
        terms,
    };
    if expansion.reconstruct()? != p {
        return Err(Error::Internal(
            "Schur expansion does not reconstruct".into(),
        ));
    }
    Ok(expansion)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::parse_poly_in;
    use crate::algebra::rational::rat;
    use crate::combinatorics::enumerate_partitions;

    fn chern(text: &str, r: u32) -> CharPoly {
        CharPoly::from_poly(parse_poly_in(text, &VarSet::chern(r)).unwrap()).unwrap()
    }

    fn part(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn single_row_is_a_chern_class() {
        for r in 1..=4 {
            for k in 1..=r {
                let mut parts = vec![k];
                parts.resize(r as usize, 0);
                let s = schur_polynomial(&Partition::new(parts).unwrap(), r).unwrap();
                assert_eq!(s, chern(&format!("c{k}"), r));
            }
        }
    }

    #[test]
    fn rank_three_table() {
        let cases = [
            ("1,0,0", "c1"),
            ("2,0,0", "c2"),
            ("1,1,0", "c1^2 - c2"),
            ("3,0,0", "c3"),
            ("2,1,0", "c1*c2 - c3"),
            ("1,1,1", "c1^3 - 2*c1*c2 + c3"),
        ];
        for (sigma, expected) in cases {
            assert_eq!(
                schur_polynomial(&part(sigma), 3).unwrap(),
                chern(expected, 3)
            );
        }
        assert_eq!(schur_polynomial(&part("0,0,0"), 3).unwrap(), chern("1", 3));
    }

    #[test]
    fn membership_is_checked() {
        assert!(schur_polynomial(&part("3"), 2).is_err());
        assert!(schur_polynomial(&part("1,1,1"), 2).is_err());
        assert!(schur_polynomial_general(&part("1,1,1"), 2).is_ok());
    }

    #[test]
    fn grassmannian_degree_two_expansion() {
        let e = schur_expand(&chern("9*c1^2 - 4*c2", 4), 4).unwrap();
        assert_eq!(e.coeff(&part("2")), rat(5));
        assert_eq!(e.coeff(&part("1,1")), rat(9));
        assert_eq!(e.terms().len(), 2);
        assert!(e.is_positive());
        assert_eq!(e.to_string(), "5*S(2,0,0,0) + 9*S(1,1,0,0)");
    }

    #[test]
    fn complete_flag_rank_three_expansion() {
        let segre =
            CharPoly::from_poly(parse_poly_in("-2700*s1*s2 + 360*s3", &VarSet::segre(3)).unwrap())
                .unwrap();
        let e = schur_expand(&segre, 3).unwrap();
        assert_eq!(e.coeff(&part("2,1")), rat(2700));
        assert_eq!(e.coeff(&part("1,1,1")), rat(2340));
        assert_eq!(e.coeff(&part("3")), rat(0));
        assert_eq!(e.to_latex(), "2700 S_{(2,1,0)} + 2340 S_{(1,1,1)}");
    }

    #[test]
    fn basis_beyond_rank() {
        let basis = schur_basis(3, 2);
        let shown: Vec<String> = basis.iter().map(ToString::to_string).collect();
        assert_eq!(shown, ["(2,1)", "(1,1,1)"]);
        // c1^3 for rank 2: both shapes are needed
        let e = schur_expand(&chern("c1^3", 2), 2).unwrap();
        assert_eq!(e.reconstruct().unwrap(), chern("c1^3", 2));
    }

    #[test]
    fn basis_is_lambda_in_range() {
        for r in 1..=4 {
            for k in 0..=r {
                assert_eq!(schur_basis(k, r), enumerate_partitions(k, r));
            }
        }
    }

    #[test]
    fn each_basis_element_expands_to_itself() {
        for r in 1..=4u32 {
            for k in 0..=r + 1 {
                for sigma in schur_basis(k, r) {
                    let s = schur_polynomial_general(&sigma, r).unwrap();
                    let e = schur_expand(&s, r).unwrap();
                    assert_eq!(e.terms(), &[(sigma.clone(), rat(1))], "{sigma} r={r}");
                }
            }
        }
    }

    #[test]
    fn zero_expands_to_nothing() {
        let e = schur_expand(&CharPoly::zero(Basis::Chern { rank: 3 }, 2), 3).unwrap();
        assert!(e.is_zero());
        assert!(e.is_positive());
        assert_eq!(e.to_string(), "0");
    }
}
