use std::ops::Index;

/// An exponent vector laid out according to a [`super::VarSet`].
///
/// The derived `Ord` is plain lexicographic order on the exponent vector;
/// it is what `SparsePoly` uses as its map key order.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial(Vec<i32>);

impl Monomial {
    pub fn new(exponents: Vec<i32>) -> Self {
        Monomial(exponents)
    }

    pub fn one(len: usize) -> Self {
        Monomial(vec![0; len])
    }

    pub fn exponents(&self) -> &[i32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn has_negative(&self) -> bool {
        self.0.iter().any(|&e| e < 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.len(), other.len());
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn weighted_degree(&self, weights: &[i64]) -> i64 {
        self.0
            .iter()
            .zip(weights)
            .map(|(&e, &w)| i64::from(e) * w)
            .sum()
    }

    pub(crate) fn exponents_mut(&mut self) -> &mut Vec<i32> {
        &mut self.0
    }
}

impl Index<usize> for Monomial {
    type Output = i32;

    fn index(&self, i: usize) -> &i32 {
        &self.0[i]
    }
}

impl From<Vec<i32>> for Monomial {
    fn from(exponents: Vec<i32>) -> Self {
        Monomial(exponents)
    }
}
