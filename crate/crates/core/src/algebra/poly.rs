use std::collections::btree_map::Entry;
use std::collections::{hash_map, BTreeMap, HashMap};
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::monomial::Monomial;
use super::rational::Rational;
use super::varset::{Var, VarKind, VarSet};
use crate::error::{Error, Result};

/// Sparse multivariate polynomial with exact rational coefficients.
///
/// Terms are keyed by exponent vector; zero coefficients are never stored.
/// When `laurent` is set, negative exponents are allowed. Equality ignores
/// the flag and compares variable sets and terms.
#[derive(Debug, Clone)]
pub struct SparsePoly {
    varset: VarSet,
    laurent: bool,
    terms: BTreeMap<Monomial, Rational>,
}

impl SparsePoly {
    pub fn zero(varset: VarSet) -> Self {
        SparsePoly {
            varset,
            laurent: false,
            terms: BTreeMap::new(),
        }
    }

    pub fn zero_laurent(varset: VarSet) -> Self {
        SparsePoly {
            laurent: true,
            ..SparsePoly::zero(varset)
        }
    }

    pub fn constant(varset: VarSet, c: Rational) -> Self {
        let mut p = SparsePoly::zero(varset);
        if !c.is_zero() {
            let one = Monomial::one(p.varset.len());
            p.terms.insert(one, c);
        }
        p
    }

    pub fn one(varset: VarSet) -> Self {
        SparsePoly::constant(varset, Rational::one())
    }

    pub fn var(varset: VarSet, var: Var) -> Result<Self> {
        let pos = varset.position(var).ok_or(Error::UnboundVariable(var))?;
        let mut exps = vec![0; varset.len()];
        exps[pos] = 1;
        SparsePoly::monomial(varset, exps, Rational::one())
    }

    pub fn monomial(varset: VarSet, exponents: Vec<i32>, coeff: Rational) -> Result<Self> {
        let laurent = exponents.iter().any(|&e| e < 0);
        SparsePoly::from_terms(varset, laurent, [(Monomial::new(exponents), coeff)])
    }

    /// Collects terms, summing duplicates and dropping zeros.
    pub fn from_terms(
        varset: VarSet,
        laurent: bool,
        terms: impl IntoIterator<Item = (Monomial, Rational)>,
    ) -> Result<Self> {
        let mut p = SparsePoly {
            varset,
            laurent,
            terms: BTreeMap::new(),
        };
        for (m, c) in terms {
            p.check_monomial(&m)?;
            p.add_term(m, c);
        }
        Ok(p)
    }

    fn check_monomial(&self, m: &Monomial) -> Result<()> {
        if m.len() != self.varset.len() {
            return Err(Error::MonomialLength {
                varset: self.varset.clone(),
                expected: self.varset.len(),
                got: m.len(),
            });
        }
        if !self.laurent {
            if let Some(pos) = m.exponents().iter().position(|&e| e < 0) {
                return Err(Error::NegativeExponent {
                    var: self.varset.var_at(pos),
                    exponent: m[pos],
                });
            }
        }
        Ok(())
    }

    pub(crate) fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn varset(&self) -> &VarSet {
        &self.varset
    }

    pub fn is_laurent(&self) -> bool {
        self.laurent
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn into_terms(self) -> impl Iterator<Item = (Monomial, Rational)> {
        self.terms.into_iter()
    }

    pub fn coeff(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    /// The value of a constant polynomial (zero included).
    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => {
                let (m, c) = self.terms.iter().next()?;
                m.is_one().then(|| c.clone())
            }
            _ => None,
        }
    }

    /// Largest weighted degree among the terms; `None` for zero.
    pub fn weighted_degree(&self) -> Option<i64> {
        let w = self.varset.weights();
        self.terms.keys().map(|m| m.weighted_degree(&w)).max()
    }

    /// Degree shared by every term. `Ok(None)` for the zero polynomial.
    pub fn homogeneous_degree(&self) -> Result<Option<i64>> {
        let w = self.varset.weights();
        let mut degrees = self.terms.keys().map(|m| m.weighted_degree(&w));
        let Some(first) = degrees.next() else {
            return Ok(None);
        };
        if degrees.all(|d| d == first) {
            Ok(Some(first))
        } else {
            Err(Error::NotHomogeneous(None))
        }
    }

    pub fn is_homogeneous_of(&self, degree: i64) -> bool {
        let w = self.varset.weights();
        self.terms.keys().all(|m| m.weighted_degree(&w) == degree)
    }

    fn check_same_varset(&self, other: &SparsePoly) -> Result<()> {
        if self.varset != other.varset {
            return Err(Error::VarSetMismatch {
                lhs: self.varset.clone(),
                rhs: other.varset.clone(),
            });
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &SparsePoly) -> Result<SparsePoly> {
        self.check_same_varset(other)?;
        let mut out = self.clone();
        out.laurent |= other.laurent;
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &SparsePoly) -> Result<SparsePoly> {
        self.checked_add(&-other)
    }

    pub fn checked_mul(&self, other: &SparsePoly) -> Result<SparsePoly> {
        self.check_same_varset(other)?;
        Ok(self.mul_filtered(other, |_| true))
    }

    /// Product that drops every monomial whose weighted degree in the `kind`
    /// block exceeds `max_weight`. Used to truncate Segre series eagerly.
    pub fn mul_truncated(
        &self,
        other: &SparsePoly,
        kind: VarKind,
        max_weight: i64,
    ) -> Result<SparsePoly> {
        self.check_same_varset(other)?;
        let Some(range) = self.varset.block_range(kind) else {
            return Ok(self.mul_filtered(other, |_| true));
        };
        let weights = self.varset.weights();
        Ok(self.mul_filtered(other, |m| {
            range
                .clone()
                .map(|i| i64::from(m[i]) * weights[i])
                .sum::<i64>()
                <= max_weight
        }))
    }

    fn mul_filtered(&self, other: &SparsePoly, keep: impl Fn(&Monomial) -> bool) -> SparsePoly {
        let mut acc: HashMap<Monomial, Rational> = HashMap::new();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let m = ma.mul(mb);
                if !keep(&m) {
                    continue;
                }
                let c = ca * cb;
                match acc.get_mut(&m) {
                    Some(v) => *v += c,
                    None => {
                        acc.insert(m, c);
                    }
                }
            }
        }
        SparsePoly {
            varset: self.varset.clone(),
            laurent: self.laurent || other.laurent,
            terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> SparsePoly {
        let mut result = SparsePoly::one(self.varset.clone());
        result.laurent = self.laurent;
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul_filtered(&base, |_| true);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul_filtered(&base, |_| true);
            }
        }
        result
    }

    pub fn scale(&self, c: &Rational) -> SparsePoly {
        if c.is_zero() {
            return SparsePoly {
                terms: BTreeMap::new(),
                ..self.clone()
            };
        }
        SparsePoly {
            varset: self.varset.clone(),
            laurent: self.laurent,
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        }
    }

    /// Coefficient of the exact monomial `exponents` in the `kind` variables.
    ///
    /// The result lives in the remaining variables of the set (which may be
    /// none, giving a constant).
    pub fn coefficient_of(&self, kind: VarKind, exponents: &[i32]) -> Result<SparsePoly> {
        let range = self.varset.block_range(kind).ok_or_else(|| {
            Error::Contract(format!("{} has no {:?} variables", self.varset, kind))
        })?;
        if exponents.len() != range.len() {
            return Err(Error::MonomialLength {
                varset: VarSet::single(kind, range.len() as u32),
                expected: range.len(),
                got: exponents.len(),
            });
        }
        let rest = self.varset.without(kind);
        let mut out = SparsePoly::zero(rest);
        for (m, c) in &self.terms {
            if &m.exponents()[range.clone()] != exponents {
                continue;
            }
            let exps: Vec<i32> = m
                .exponents()
                .iter()
                .enumerate()
                .filter(|(i, _)| !range.contains(i))
                .map(|(_, &e)| e)
                .collect();
            out.laurent |= exps.iter().any(|&e| e < 0);
            out.add_term(Monomial::new(exps), c.clone());
        }
        Ok(out)
    }

    /// Re-expresses the polynomial over a larger variable set.
    pub fn embed(&self, target: &VarSet) -> Result<SparsePoly> {
        let positions = self
            .varset
            .vars()
            .map(|v| target.position(v).ok_or(Error::UnboundVariable(v)))
            .collect::<Result<Vec<_>>>()?;
        let mut out = SparsePoly {
            varset: target.clone(),
            laurent: self.laurent,
            terms: BTreeMap::new(),
        };
        for (m, c) in &self.terms {
            let mut exps = vec![0; target.len()];
            for (i, &p) in positions.iter().enumerate() {
                exps[p] = m[i];
            }
            out.add_term(Monomial::new(exps), c.clone());
        }
        Ok(out)
    }

    /// Simultaneous substitution. Bound variables are replaced by their
    /// images (all living in `target`); unbound variables must exist in
    /// `target` and are carried over unchanged.
    pub fn substitute(
        &self,
        bindings: &BTreeMap<Var, SparsePoly>,
        target: &VarSet,
    ) -> Result<SparsePoly> {
        for (var, image) in bindings {
            if self.varset.position(*var).is_none() {
                return Err(Error::Contract(format!(
                    "binding for {var}, which is not a variable of {}",
                    self.varset
                )));
            }
            if image.varset() != target {
                return Err(Error::VarSetMismatch {
                    lhs: image.varset().clone(),
                    rhs: target.clone(),
                });
            }
        }
        let vars: Vec<Var> = self.varset.vars().collect();
        let mut passthrough = vec![None; vars.len()];
        for (i, v) in vars.iter().enumerate() {
            if !bindings.contains_key(v) {
                passthrough[i] = Some(target.position(*v).ok_or(Error::UnboundVariable(*v))?);
            }
        }

        let mut powers: HashMap<(usize, i32), SparsePoly> = HashMap::new();
        let mut out = SparsePoly::zero(target.clone());
        for (m, c) in &self.terms {
            let mut base_exps = vec![0; target.len()];
            let mut term = SparsePoly::one(target.clone());
            for (i, &e) in m.exponents().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                match passthrough[i] {
                    Some(p) => base_exps[p] += e,
                    None => {
                        let key = (i, e);
                        let factor = match powers.entry(key) {
                            hash_map::Entry::Occupied(slot) => slot.into_mut(),
                            hash_map::Entry::Vacant(slot) => {
                                let image = &bindings[&vars[i]];
                                slot.insert(
                                    power_of(image, e).ok_or(Error::NotInvertible(vars[i]))?,
                                )
                            }
                        };
                        term = term.mul_filtered(factor, |_| true);
                    }
                }
            }
            let shift = SparsePoly::monomial(target.clone(), base_exps, c.clone())?;
            let term = term.mul_filtered(&shift, |_| true);
            out = out.checked_add(&term)?;
        }
        Ok(out)
    }

    /// Permutes the variables of one block: variable `i` (0-based within the
    /// block) is renamed to variable `perm[i]`.
    pub fn permute_block(&self, kind: VarKind, perm: &[usize]) -> SparsePoly {
        let Some(range) = self.varset.block_range(kind) else {
            return self.clone();
        };
        assert_eq!(perm.len(), range.len(), "permutation size");
        let mut out = SparsePoly {
            varset: self.varset.clone(),
            laurent: self.laurent,
            terms: BTreeMap::new(),
        };
        for (m, c) in &self.terms {
            let mut m2 = m.clone();
            let exps = m2.exponents_mut();
            for (i, &p) in perm.iter().enumerate() {
                exps[range.start + p] = m[range.start + i];
            }
            out.add_term(m2, c.clone());
        }
        out
    }

    /// Exact division with remainder in lexicographic order:
    /// `self = q * divisor + r`, with no term of `r` divisible by the leading
    /// term of `divisor`. Only for ordinary (non-Laurent) polynomials.
    pub fn div_rem(&self, divisor: &SparsePoly) -> Result<(SparsePoly, SparsePoly)> {
        self.check_same_varset(divisor)?;
        if self.laurent || divisor.laurent {
            return Err(Error::Contract("division of Laurent polynomials".into()));
        }
        let (lead_m, lead_c) = divisor
            .terms
            .iter()
            .next_back()
            .ok_or_else(|| Error::Contract("division by zero polynomial".into()))?;
        let mut rest = self.clone();
        let mut quotient = SparsePoly::zero(self.varset.clone());
        let mut remainder = SparsePoly::zero(self.varset.clone());
        while let Some((m, c)) = rest.terms.iter().next_back() {
            let (m, c) = (m.clone(), c.clone());
            let divides = m
                .exponents()
                .iter()
                .zip(lead_m.exponents())
                .all(|(a, b)| a >= b);
            if divides {
                let exps = m
                    .exponents()
                    .iter()
                    .zip(lead_m.exponents())
                    .map(|(a, b)| a - b)
                    .collect();
                let q = SparsePoly {
                    varset: self.varset.clone(),
                    laurent: false,
                    terms: BTreeMap::from([(Monomial::new(exps), &c / lead_c)]),
                };
                rest = rest.checked_sub(&q.mul_filtered(divisor, |_| true))?;
                quotient = quotient.checked_add(&q)?;
            } else {
                rest.terms.remove(&m);
                remainder.add_term(m, c);
            }
        }
        Ok((quotient, remainder))
    }

    pub fn map_coeffs(&self, f: impl Fn(&Rational) -> Rational) -> SparsePoly {
        let mut out = SparsePoly {
            terms: BTreeMap::new(),
            ..self.clone()
        };
        for (m, c) in &self.terms {
            out.add_term(m.clone(), f(c));
        }
        out
    }

    /// Evaluates at rational values, one per variable in set order.
    pub fn evaluate(&self, values: &[Rational]) -> Result<Rational> {
        if values.len() != self.varset.len() {
            return Err(Error::MonomialLength {
                varset: self.varset.clone(),
                expected: self.varset.len(),
                got: values.len(),
            });
        }
        let mut total = Rational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (&e, v) in m.exponents().iter().zip(values) {
                if e < 0 {
                    if v.is_zero() {
                        return Err(Error::Contract("negative power of zero".into()));
                    }
                    t *= num_traits::pow(v.recip(), e.unsigned_abs() as usize);
                } else {
                    t *= num_traits::pow(v.clone(), e as usize);
                }
            }
            total += t;
        }
        Ok(total)
    }
}

/// `image^e`, inverting single-term images for negative `e`.
pub(crate) fn power_of(image: &SparsePoly, e: i32) -> Option<SparsePoly> {
    if e >= 0 {
        return Some(image.pow(e as u32));
    }
    if image.terms.len() != 1 {
        return None;
    }
    let (m, c) = image.terms.iter().next()?;
    let inv_exps = m.exponents().iter().map(|&x| -x).collect::<Vec<_>>();
    let inv = SparsePoly {
        varset: image.varset.clone(),
        laurent: true,
        terms: BTreeMap::from([(Monomial::new(inv_exps), c.recip())]),
    };
    Some(inv.pow(e.unsigned_abs()))
}

/// `∏_{i<j} (t_i − t_j)` over `t1..tr`.
pub fn vandermonde(rank: u32) -> SparsePoly {
    let vs = VarSet::roots(rank);
    let r = rank as usize;
    let mut acc = SparsePoly::one(vs.clone());
    for i in 0..r {
        for j in i + 1..r {
            let mut a = vec![0; r];
            a[i] = 1;
            let mut b = vec![0; r];
            b[j] = 1;
            let factor = SparsePoly {
                varset: vs.clone(),
                laurent: false,
                terms: BTreeMap::from([
                    (Monomial::new(a), Rational::one()),
                    (Monomial::new(b), -Rational::one()),
                ]),
            };
            acc = acc.mul_filtered(&factor, |_| true);
        }
    }
    acc
}

impl PartialEq for SparsePoly {
    fn eq(&self, other: &Self) -> bool {
        self.varset == other.varset && self.terms == other.terms
    }
}

impl Eq for SparsePoly {}

impl Neg for &SparsePoly {
    type Output = SparsePoly;

    fn neg(self) -> SparsePoly {
        SparsePoly {
            varset: self.varset.clone(),
            laurent: self.laurent,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl Neg for SparsePoly {
    type Output = SparsePoly;

    fn neg(self) -> SparsePoly {
        -&self
    }
}

macro_rules! binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl $trait<&SparsePoly> for &SparsePoly {
            type Output = SparsePoly;

            /// Panics when the variable sets differ; use the `checked_*` form to handle that.
            fn $method(self, rhs: &SparsePoly) -> SparsePoly {
                self.$checked(rhs)
                    .expect("polynomial operands over different variable sets")
            }
        }

        impl $trait<SparsePoly> for SparsePoly {
            type Output = SparsePoly;

            fn $method(self, rhs: SparsePoly) -> SparsePoly {
                (&self).$method(&rhs)
            }
        }
    };
}

binop!(Add, add, checked_add);
binop!(Sub, sub, checked_sub);
binop!(Mul, mul, checked_mul);
