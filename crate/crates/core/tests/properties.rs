use std::collections::BTreeMap;

use proptest::prelude::*;

use gysin::algebra::rational::rat;
use gysin::algebra::{vandermonde, Monomial, Rational, SparsePoly, Var, VarKind, VarSet};
use gysin::charclasses::same_class;
use gysin::charclasses::{schur_expand, to_chern, to_segre, CharPoly};
use gysin::combinatorics::{FlagType, WeightVector};
use gysin::gysin::{build_ftilde_weight, dp_segre, dp_segre_direct};
use gysin::oracle::oracle_chern;

fn poly_in(vs: VarSet, terms: Vec<(Vec<i32>, i64)>) -> SparsePoly {
    SparsePoly::from_terms(
        vs,
        false,
        terms.into_iter().map(|(e, c)| (Monomial::new(e), rat(c))),
    )
    .unwrap()
}

fn roots_poly(r: usize) -> impl Strategy<Value = SparsePoly> {
    prop::collection::vec((prop::collection::vec(0i32..4, r), -6i64..7), 0..6)
        .prop_map(move |t| poly_in(VarSet::roots(r as u32), t))
}

/// Exponent vectors of the Chern monomials of weighted degree `k` in rank `r`.
fn chern_monomials(k: u32, r: u32) -> Vec<Vec<i32>> {
    fn go(j: u32, left: u32, cur: &mut Vec<i32>, out: &mut Vec<Vec<i32>>) {
        if j == 0 {
            if left == 0 {
                out.push(cur.clone());
            }
            return;
        }
        for e in 0..=left / j {
            cur[j as usize - 1] = e as i32;
            go(j - 1, left - e * j, cur, out);
        }
        cur[j as usize - 1] = 0;
    }
    let mut out = Vec::new();
    go(r, k, &mut vec![0; r as usize], &mut out);
    out
}

/// A homogeneous class of degree `k` in `c_1..c_r` with small coefficients.
fn chern_class() -> impl Strategy<Value = CharPoly> {
    (1u32..=4, 0u32..=4)
        .prop_flat_map(|(r, k)| {
            let monos = chern_monomials(k, r);
            let n = monos.len();
            (
                Just(r),
                Just(k),
                Just(monos),
                prop::collection::vec(-5i64..6, n),
            )
        })
        .prop_map(|(r, k, monos, coeffs)| {
            let p = poly_in(VarSet::chern(r), monos.into_iter().zip(coeffs).collect());
            CharPoly::new(gysin::charclasses::Basis::Chern { rank: r }, k, p).unwrap()
        })
}

/// A flag of rank ≤ 4 with a strict weight.
fn flag_and_weight(max_rank: u32) -> impl Strategy<Value = (FlagType, WeightVector)> {
    (1..=max_rank)
        .prop_flat_map(|r| prop::sample::select(FlagType::all_of_rank(r)))
        .prop_flat_map(|flag| {
            let m = flag.blocks();
            (Just(flag), prop::collection::btree_set(0i64..=6, m))
        })
        .prop_map(|(flag, values)| {
            let values: Vec<i64> = values.into_iter().rev().collect();
            let w = WeightVector::from_block_values(&flag, &values).unwrap();
            (flag, w)
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_laws(a in roots_poly(3), b in roots_poly(3), c in roots_poly(3)) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
        prop_assert_eq!(&a * &SparsePoly::one(VarSet::roots(3)), a.clone());
    }

    #[test]
    fn products_add_degrees(a in roots_poly(2), b in roots_poly(2)) {
        let prod = &a * &b;
        if let (Some(da), Some(db)) = (a.weighted_degree(), b.weighted_degree()) {
            prop_assert_eq!(prod.weighted_degree(), Some(da + db));
        }
        let (ha, hb) = (a.homogeneous_degree(), b.homogeneous_degree());
        if let (Ok(Some(da)), Ok(Some(db))) = (ha, hb) {
            prop_assert_eq!(prod.homogeneous_degree().unwrap(), Some(da + db));
        }
    }

    #[test]
    fn coefficient_extraction_is_linear(
        a in roots_poly(3),
        b in roots_poly(3),
        lambda in -4i64..5,
        exps in prop::collection::vec(0i32..4, 3),
    ) {
        let combo = &a.scale(&rat(lambda)) + &b;
        let lhs = combo.coefficient_of(VarKind::Root, &exps).unwrap();
        let rhs = &a.coefficient_of(VarKind::Root, &exps).unwrap().scale(&rat(lambda))
            + &b.coefficient_of(VarKind::Root, &exps).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn substitution_is_a_ring_map(
        a in roots_poly(2),
        b in roots_poly(2),
        img1 in roots_poly(3),
        img2 in roots_poly(3),
    ) {
        let bindings: BTreeMap<Var, SparsePoly> =
            [(Var::root(1), img1), (Var::root(2), img2)].into_iter().collect();
        let target = VarSet::roots(3);
        let sub = |p: &SparsePoly| p.substitute(&bindings, &target).unwrap();
        prop_assert_eq!(sub(&(&a * &b)), &sub(&a) * &sub(&b));
        prop_assert_eq!(sub(&(&a + &b)), &sub(&a) + &sub(&b));
    }

    #[test]
    fn vandermonde_is_antisymmetric(r in 2u32..=4, i in 0usize..3) {
        let i = i % (r as usize - 1);
        let mut perm: Vec<usize> = (0..r as usize).collect();
        perm.swap(i, i + 1);
        let v = vandermonde(r);
        prop_assert_eq!(v.permute_block(VarKind::Root, &perm), -v);
    }

    #[test]
    fn chern_segre_round_trip(p in chern_class()) {
        let r = match p.basis() { gysin::charclasses::Basis::Chern { rank } => rank, _ => unreachable!() };
        prop_assume!(p.degree() <= r);
        let s = to_segre(&p, r).unwrap();
        prop_assert_eq!(to_chern(&s, r).unwrap(), p);
    }

    #[test]
    fn schur_expansion_reconstructs(p in chern_class()) {
        let r = match p.basis() { gysin::charclasses::Basis::Chern { rank } => rank, _ => unreachable!() };
        let e = schur_expand(&p, r).unwrap();
        prop_assert_eq!(e.reconstruct().unwrap(), p);
    }

    #[test]
    fn extraction_is_independent_of_method((flag, w) in flag_and_weight(4), k in 0u32..=3) {
        let ft = build_ftilde_weight(&flag, &w, flag.relative_dim() + k).unwrap();
        let n = k.max(1);
        prop_assert_eq!(dp_segre(&flag, &ft, n).unwrap(), dp_segre_direct(&flag, &ft, n).unwrap());
    }

    #[test]
    fn extraction_matches_oracle((flag, w) in flag_and_weight(3), k in 0u32..=3) {
        let ft = build_ftilde_weight(&flag, &w, flag.relative_dim() + k).unwrap();
        let dp = dp_segre(&flag, &ft, k.max(1)).unwrap();
        prop_assert!(same_class(&dp, &oracle_chern(&flag, &ft).unwrap(), flag.rank()).unwrap());
    }

    #[test]
    fn strict_weights_are_schur_positive((flag, w) in flag_and_weight(4), k in 0u32..=3) {
        let ft = build_ftilde_weight(&flag, &w, flag.relative_dim() + k).unwrap();
        let s = dp_segre(&flag, &ft, k.max(1)).unwrap();
        let e = schur_expand(&s, flag.rank()).unwrap();
        prop_assert!(e.is_positive(), "{} {} k={}: {}", flag, w, k, e);
    }

    #[test]
    fn scaling_the_weight_scales_the_class((flag, w) in flag_and_weight(3), k in 0u32..=2, t in 1i64..4) {
        let power = flag.relative_dim() + k;
        let base = dp_segre(&flag, &build_ftilde_weight(&flag, &w, power).unwrap(), k.max(1)).unwrap();
        let scaled = dp_segre(&flag, &build_ftilde_weight(&flag, &w.scaled(&flag, t), power).unwrap(), k.max(1)).unwrap();
        let factor: Rational = rat(t.pow(power));
        prop_assert_eq!(scaled.poly(), &base.poly().scale(&factor));
    }
}
