// Complete flags of a rank-4 bundle, printed with the integer content
// factored out.

use gysin::combinatorics::{FlagType, WeightVector};
use gysin::gysin::PushforwardRequest;

pub fn run_example() -> Result<Vec<String>, Box<dyn std::error::Error>> {
    let flag = FlagType::complete(4);
    let mut lines = Vec::new();
    for a in [[3i64, 2, 1, 0], [4, 3, 2, 0]] {
        let weight = WeightVector::validate(&flag, &a)?;
        for power in [9u32, 10] {
            let k = power - flag.relative_dim();
            let result =
                PushforwardRequest::weight(flag.clone(), weight.clone(), power, k).run()?;
            lines.push(format!(
                "a=({weight}) N={power}: {}",
                result.segre.poly().to_content_form()
            ));
        }
    }
    Ok(lines)
}

fn main() {
    for line in run_example().expect("rank-4 example") {
        println!("{line}");
    }
}
