// Complete flags of a rank-3 bundle: the Schur expansions for a few
// weights and degrees, compared with the general formulas.

use gysin::combinatorics::{FlagType, WeightVector};
use gysin::gysin::PushforwardRequest;
use gysin::tables::{matches_coefficients, rank3_formula};

pub fn run_example() -> Result<Vec<String>, Box<dyn std::error::Error>> {
    let flag = FlagType::complete(3);
    let mut lines = Vec::new();
    for abc in [[3i64, 2, 0], [2, 1, 0], [5, 2, 1]] {
        let weight = WeightVector::validate(&flag, &abc)?;
        for k in 0..=3 {
            let result =
                PushforwardRequest::weight(flag.clone(), weight.clone(), 3 + k, k).run()?;
            if !matches_coefficients(&result.schur, &rank3_formula(k, abc)?) {
                return Err(format!("{weight} k={k}: {}", result.schur).into());
            }
            lines.push(format!("a=({weight}) k={k}: {}", result.schur));
        }
    }
    Ok(lines)
}

fn main() {
    for line in run_example().expect("rank-3 example") {
        println!("{line}");
    }
}
