// Push-forwards of powers of `c_1(Q)` from the bundle of lines in `E`,
// for rank 3 and rank 4.

use gysin::combinatorics::{FlagType, WeightVector};
use gysin::gysin::PushforwardRequest;

pub fn run_example() -> Result<Vec<String>, Box<dyn std::error::Error>> {
    let mut lines = Vec::new();
    for (r, power) in [(3u32, 5u32), (4, 6)] {
        let flag = FlagType::new(vec![0, 1, r])?;
        // weight 1 on the rank r−1 quotient, 0 on the line
        let mut a = vec![1; r as usize];
        a[r as usize - 1] = 0;
        let weight = WeightVector::validate(&flag, &a)?;
        let k = power - flag.relative_dim();
        let result = PushforwardRequest::weight(flag, weight, power, k).run()?;
        lines.push(format!(
            "rank {r}, N={power}: {} = {}  (Schur-positive: {})",
            result.segre,
            result.chern,
            result.schur.is_positive()
        ));
    }
    Ok(lines)
}

fn main() {
    for line in run_example().expect("projective bundle example") {
        println!("{line}");
    }
}
