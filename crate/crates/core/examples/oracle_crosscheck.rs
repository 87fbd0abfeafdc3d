// Coefficient extraction against the symmetrizer over Chern roots, for
// every flag type of rank 3 and a spread of degrees.

use gysin::charclasses::same_class;
use gysin::combinatorics::{FlagType, WeightVector};
use gysin::gysin::{build_ftilde_weight, dp_segre};
use gysin::oracle::{oracle_chern, split_bundle_eval};

pub fn run_example() -> Result<Vec<String>, Box<dyn std::error::Error>> {
    let mut lines = Vec::new();
    for flag in FlagType::all_of_rank(3) {
        let values: Vec<i64> = [3, 1, 0][3 - flag.blocks()..].to_vec();
        let weight = WeightVector::from_block_values(&flag, &values)?;
        for k in 0..=3 {
            let ftilde = build_ftilde_weight(&flag, &weight, flag.relative_dim() + k)?;
            let dp = dp_segre(&flag, &ftilde, k.max(1))?;
            let oracle = oracle_chern(&flag, &ftilde)?;
            if !same_class(&dp, &oracle, 3)? {
                return Err(format!("flag {flag} k={k}: {dp} vs {oracle}").into());
            }
            let on_split = split_bundle_eval(&oracle, &[1, 2, 3])?;
            lines.push(format!(
                "flag ({flag}) k={k}: {oracle}  [on O(1)+O(2)+O(3): {on_split}]"
            ));
        }
    }
    Ok(lines)
}

fn main() {
    for line in run_example().expect("oracle example") {
        println!("{line}");
    }
}
