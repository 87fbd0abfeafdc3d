use std::collections::HashMap;

use num_traits::Zero;

use crate::algebra::{Rational, SparsePoly, VarSet};

/// Solves `A x = b` over ℚ by Gauss–Jordan elimination.
///
/// `a` is row-major with one row per equation. Returns `None` when the system
/// is inconsistent or the solution is not unique.
pub fn solve_exact(a: &[Vec<Rational>], b: &[Rational]) -> Option<Vec<Rational>> {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    assert_eq!(rows, b.len());
    let mut m: Vec<Vec<Rational>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();

    let mut pivot_row = 0;
    for col in 0..cols {
        let found = (pivot_row..rows).find(|&r| !m[r][col].is_zero())?;
        m.swap(pivot_row, found);
        let inv = m[pivot_row][col].recip();
        for entry in &mut m[pivot_row][col..] {
            *entry *= &inv;
        }
        for r in 0..rows {
            if r != pivot_row && !m[r][col].is_zero() {
                let factor = m[r][col].clone();
                let pivot = m[pivot_row].clone();
                for (entry, p) in m[r][col..].iter_mut().zip(&pivot[col..]) {
                    *entry -= &factor * p;
                }
            }
        }
        pivot_row += 1;
    }
    if m[pivot_row..].iter().any(|row| !row[cols].is_zero()) {
        return None;
    }
    Some(m[..cols].iter().map(|row| row[cols].clone()).collect())
}

/// Determinant of a square matrix of polynomials (`None` entries are zero),
/// by Laplace expansion along rows memoised on the set of used columns.
pub(crate) fn determinant(m: &[Vec<Option<SparsePoly>>], vs: &VarSet) -> SparsePoly {
    fn go(
        m: &[Vec<Option<SparsePoly>>],
        used: u32,
        vs: &VarSet,
        memo: &mut HashMap<u32, SparsePoly>,
    ) -> SparsePoly {
        let row = used.count_ones() as usize;
        if row == m.len() {
            return SparsePoly::one(vs.clone());
        }
        if let Some(hit) = memo.get(&used) {
            return hit.clone();
        }
        let mut acc = SparsePoly::zero(vs.clone());
        let mut sign_flip = false;
        for col in 0..m.len() {
            if used & (1 << col) != 0 {
                continue;
            }
            if let Some(a) = &m[row][col] {
                let minor = go(m, used | (1 << col), vs, memo);
                let term = a * &minor;
                acc = if sign_flip {
                    &acc - &term
                } else {
                    &acc + &term
                };
            }
            sign_flip = !sign_flip;
        }
        memo.insert(used, acc.clone());
        acc
    }
    go(m, 0, vs, &mut HashMap::new())
}
