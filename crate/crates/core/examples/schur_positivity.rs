// Schur expansions of push-forwards over every partial flag type of a
// rank-4 bundle, and of two classes that are not positive.

use gysin::algebra::{parse_poly_in, VarSet};
use gysin::charclasses::schur_expand;
use gysin::combinatorics::{FlagType, WeightVector};
use gysin::gysin::PushforwardRequest;

pub fn run_example() -> Result<Vec<String>, Box<dyn std::error::Error>> {
    let mut lines = Vec::new();
    for flag in FlagType::all_of_rank(4) {
        // strictly decreasing block values 0 < 1 < 2 < ... read from the right
        let values: Vec<i64> = (0..flag.blocks() as i64).rev().collect();
        let weight = WeightVector::from_block_values(&flag, &values)?;
        let k = 2;
        let power = flag.relative_dim() + k;
        let result = PushforwardRequest::weight(flag.clone(), weight, power, k).run()?;
        if !result.schur.is_positive() {
            return Err(format!("flag {flag}: {}", result.schur).into());
        }
        lines.push(format!("flag ({flag}) k={k}: {}", result.schur));
    }
    for text in ["c2 - c1^2", "c1*c2 - 2*c3"] {
        let p = parse_poly_in(text, &VarSet::chern(3))?;
        let e = schur_expand(&gysin::charclasses::CharPoly::from_poly(p)?, 3)?;
        lines.push(format!("{text} = {}  (positive: {})", e, e.is_positive()));
    }
    Ok(lines)
}

fn main() {
    for line in run_example().expect("positivity example") {
        println!("{line}");
    }
}
