use std::collections::BTreeMap;

use num_traits::Zero;

use crate::algebra::rational::rat;
use crate::algebra::{SparsePoly, Var, VarKind, VarSet};
use crate::combinatorics::{FlagType, WeightVector};
use crate::error::{Error, Result};

/// `−(t_{s_{j−1}+1} + … + t_{s_j})`, the first Chern class of the `j`-th
/// tautological quotient written in roots (1-based `j`).
pub fn block_class(flag: &FlagType, j: usize) -> SparsePoly {
    let vs = VarSet::roots(flag.rank());
    let mut out = SparsePoly::zero(vs.clone());
    for i in flag.root_block(j) {
        out = &out - &SparsePoly::var(vs.clone(), Var::root(i as u32 + 1)).expect("in range");
    }
    out
}

/// `F̃(t) = (−Σ_j a_{s_j} Σ_{λ ∈ block j} t_λ)^power` for a block-constant weight.
pub fn build_ftilde_weight(flag: &FlagType, a: &WeightVector, power: u32) -> Result<SparsePoly> {
    if a.entries().len() != flag.rank() as usize {
        return Err(Error::WeightLength {
            expected: flag.rank() as usize,
            got: a.entries().len(),
        });
    }
    if !a.is_block_constant() {
        return Err(Error::WeightNotBlockConstant(format!(
            "weight {a} is not constant on the blocks of flag {flag}"
        )));
    }
    let vs = VarSet::roots(flag.rank());
    let mut linear = SparsePoly::zero(vs);
    for j in 1..=flag.blocks() {
        let value = rat(a.block_value(flag, j));
        if !value.is_zero() {
            linear = &linear + &block_class(flag, j).scale(&value);
        }
    }
    Ok(linear.pow(power))
}

/// Substitutes `u_j ↦ −(t_{s_{j−1}+1} + … + t_{s_j})` into a homogeneous
/// polynomial in `u_1..u_m`, `m` the number of blocks.
pub fn build_ftilde_general(flag: &FlagType, f: &SparsePoly) -> Result<SparsePoly> {
    let m = flag.blocks() as u32;
    let expected = VarSet::formal(m);
    let vs = f.varset();
    let formal_only = vs.blocks().iter().all(|&(kind, _)| kind == VarKind::Formal);
    if !formal_only || vs.count(VarKind::Formal) > m {
        return Err(Error::VarSetMismatch {
            lhs: vs.clone(),
            rhs: expected,
        });
    }
    f.homogeneous_degree()?;
    let f = f.embed(&expected)?;
    let bindings: BTreeMap<Var, SparsePoly> = (1..=flag.blocks())
        .map(|j| (Var::formal(j as u32), block_class(flag, j)))
        .collect();
    f.substitute(&bindings, &VarSet::roots(flag.rank()))
}
