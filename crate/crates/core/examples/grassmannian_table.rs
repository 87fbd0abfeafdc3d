// The table for `G_2(E)` with `E` of rank 4, computed twice: by the
// Grassmannian closed form and by general coefficient extraction.

use gysin::gysin::{
    build_ftilde_weight, dp_pushforward, grassmannian_pushforward, grassmannian_source,
};

pub fn run_example() -> Result<Vec<String>, Box<dyn std::error::Error>> {
    let (flag, weight) = grassmannian_source(4, 2)?;
    let mut lines = Vec::new();
    for big_n in 4..=8u32 {
        let n = (big_n - 4).max(1);
        let closed = grassmannian_pushforward(4, 2, big_n, n)?;
        let general = dp_pushforward(&flag, &build_ftilde_weight(&flag, &weight, big_n)?, n)?;
        if closed.segre != general.segre {
            return Err(format!("N={big_n}: {} vs {}", closed.segre, general.segre).into());
        }
        lines.push(format!(
            "N={big_n}  {:<44}  {}",
            closed.chern.to_string(),
            closed.segre
        ));
    }
    Ok(lines)
}

fn main() {
    for line in run_example().expect("grassmannian example") {
        println!("{line}");
    }
}
