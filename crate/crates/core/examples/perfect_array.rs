// Build multiplication matrices and check their periodic autocorrelation.
//
// Run with `cargo run --example perfect_array`.

use szccs::construct::{multiplication_matrix, multiplication_matrix_unchecked, MultMatrixParams};
use szccs::correlate::pacf2d;
use szccs::verify::verify_perfect_array;

pub fn run_example() -> szccs::Result<Vec<(usize, i64, bool)>> {
    let mut results = Vec::new();
    for (m, s) in [(3, 1), (4, 3), (5, 2)] {
        let code = multiplication_matrix(MultMatrixParams::new(m, s, 0)?);
        let verdict = verify_perfect_array(&code);
        println!("M={m} s={s}\n{code}\n{}", verdict.summary());
        results.push((m, s, verdict.passed));
    }

    // gcd(4, 2) = 2: the checked constructor refuses, the raw one shows why.
    if let Err(e) = MultMatrixParams::new(4, 2, 0) {
        println!("rejected: {e}");
    }
    let raw = multiplication_matrix_unchecked(4, 2, 0)?;
    println!("pacf(0,2) of M(4,2) = {}", pacf2d(&raw).get(0, 2));
    results.push((4, 2, verify_perfect_array(&raw).passed));
    Ok(results)
}

#[allow(dead_code)]
fn main() -> szccs::Result<()> {
    run_example().map(|_| ())
}
