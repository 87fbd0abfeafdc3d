// Parsing, arithmetic and basis changes for characteristic-class
// polynomials.

use gysin::algebra::{parse_poly, vandermonde};
use gysin::charclasses::{schur_polynomial, to_chern, to_segre, CharPoly};
use gysin::combinatorics::Partition;

pub fn run_example() -> Result<Vec<String>, Box<dyn std::error::Error>> {
    let mut lines = Vec::new();

    let p = parse_poly("(c1 + c2)^2 - c1^2")?;
    lines.push(format!("(c1 + c2)^2 - c1^2 = {p}"));

    let s3 = CharPoly::from_poly(parse_poly("s3")?)?;
    let c = to_chern(&s3, 3)?;
    lines.push(format!("s3 = {c}"));
    lines.push(format!("and back: {}", to_segre(&c, 3)?));

    let sigma: Partition = "2,1,0".parse()?;
    lines.push(format!("S(2,1,0) = {}", schur_polynomial(&sigma, 3)?));

    lines.push(format!("vandermonde(3) = {}", vandermonde(3)));
    Ok(lines)
}

fn main() {
    for line in run_example().expect("basics example") {
        println!("{line}");
    }
}
