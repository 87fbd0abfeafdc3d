use std::collections::HashMap;

use num_traits::Zero;

use crate::algebra::{vandermonde, Monomial, Rational, SparsePoly, VarKind, VarSet};
use crate::charclasses::{Basis, CharPoly};
use crate::combinatorics::FlagType;
use crate::error::{Error, Result};

/// Checks that `ftilde` is a homogeneous root polynomial for `flag` and
/// returns `Some(k)` with `deg F̃ = d_ρ + k`, or `None` when the push-forward
/// vanishes for degree reasons (including `F̃ = 0`).
pub(crate) fn offset_degree(flag: &FlagType, ftilde: &SparsePoly, n: u32) -> Result<Option<u32>> {
    let expected = VarSet::roots(flag.rank());
    if ftilde.varset() != &expected {
        return Err(Error::VarSetMismatch {
            lhs: ftilde.varset().clone(),
            rhs: expected,
        });
    }
    if ftilde.terms().any(|(m, _)| m.has_negative()) {
        return Err(Error::Contract("F̃ must be an ordinary polynomial".into()));
    }
    let Some(degree) = ftilde.homogeneous_degree()? else {
        return Ok(None);
    };
    let k = degree - i64::from(flag.relative_dim());
    if k < 0 {
        return Ok(None);
    }
    if k > i64::from(n) {
        return Err(Error::DegreeOutOfRange(format!(
            "push-forward has degree {k} but only s1..s{n} are available"
        )));
    }
    Ok(Some(k as u32))
}

/// `[t^ℓ]( F̃(t) · ∏_i (1 + Σ_{j=1}^n s_j t_i^{−j}) · ∏_{i<j} (t_i − t_j) )`
/// as a polynomial in `s_1..s_n`.
///
/// Only `F̃ · ∏(t_i − t_j)` is expanded. A monomial `t^μ` of it meets `t^ℓ`
/// by taking `s_{μ_i − ℓ_i} t_i^{ℓ_i − μ_i}` from the `i`-th series factor,
/// which is possible exactly when every `μ_i − ℓ_i` lies in `0..=n`.
pub fn dp_segre(flag: &FlagType, ftilde: &SparsePoly, n: u32) -> Result<CharPoly> {
    let basis = Basis::Segre { n };
    let Some(k) = offset_degree(flag, ftilde, n)? else {
        return Ok(CharPoly::zero(basis, 0));
    };
    let product = ftilde.checked_mul(&vandermonde(flag.rank()))?;
    let ell = flag.ell();

    let mut acc: HashMap<Vec<i32>, Rational> = HashMap::new();
    'terms: for (mu, c) in product.terms() {
        let mut segre = vec![0i32; n as usize];
        for (&m, &l) in mu.exponents().iter().zip(ell) {
            let e = m - l as i32;
            if e < 0 || e > n as i32 {
                continue 'terms;
            }
            if e > 0 {
                segre[e as usize - 1] += 1;
            }
        }
        *acc.entry(segre).or_insert_with(Rational::zero) += c;
    }
    let terms = acc
        .into_iter()
        .filter(|(_, c)| !c.is_zero())
        .map(|(e, c)| (Monomial::new(e), c));
    let poly = SparsePoly::from_terms(VarSet::segre(n), false, terms)?;
    CharPoly::new(basis, k, poly)
}

/// The same coefficient read off the fully expanded Laurent product. Much
/// slower; kept as an independent check of the factorised extraction.
pub fn dp_segre_direct(flag: &FlagType, ftilde: &SparsePoly, n: u32) -> Result<CharPoly> {
    let basis = Basis::Segre { n };
    let Some(k) = offset_degree(flag, ftilde, n)? else {
        return Ok(CharPoly::zero(basis, 0));
    };
    let r = flag.rank();
    let vs = VarSet::roots(r).union(&VarSet::segre(n))?;
    let root_range = vs.block_range(VarKind::Root).expect("roots present");
    let segre_range = vs.block_range(VarKind::Segre);

    let mut product = ftilde
        .embed(&vs)?
        .checked_mul(&vandermonde(r).embed(&vs)?)?;
    for i in 0..r as usize {
        let mut series = vec![(Monomial::one(vs.len()), Rational::from_integer(1.into()))];
        for j in 1..=n as usize {
            let mut exps = vec![0i32; vs.len()];
            exps[root_range.start + i] = -(j as i32);
            if let Some(range) = &segre_range {
                exps[range.start + j - 1] = 1;
            }
            series.push((Monomial::new(exps), Rational::from_integer(1.into())));
        }
        let series = SparsePoly::from_terms(vs.clone(), true, series)?;
        product = product.checked_mul(&series)?;
    }
    let ell: Vec<i32> = flag.ell().iter().map(|&l| l as i32).collect();
    let coefficient = product.coefficient_of(VarKind::Root, &ell)?;
    let poly = SparsePoly::from_terms(VarSet::segre(n), false, coefficient.into_terms())?;
    CharPoly::new(basis, k, poly)
}
