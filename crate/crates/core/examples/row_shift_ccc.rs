// A complete complementary code from cyclic row shifts of a perfect array.
//
// Run with `cargo run --example row_shift_ccc`.

use szccs::construct::{mult_matrix_ccc, MultMatrixParams};
use szccs::correlate::Correlator;
use szccs::verify::verify_ccc;
use szccs::Verdict;

pub fn run_example() -> szccs::Result<Verdict> {
    let set = mult_matrix_ccc(MultMatrixParams::new(4, 1, 0)?);
    for (u, code) in set.iter().enumerate() {
        println!("C{u}:\n{code}\n");
    }

    let corr = Correlator::new(set.codes())?;
    let tol = corr.tolerance();
    for tau in -3..=3 {
        let row: Vec<String> = (0..set.len())
            .map(|y| format!("{:>5.2}", corr.accf(0, y, tau).value.norm()))
            .collect();
        let zero = (1..set.len()).all(|y| corr.accf(0, y, tau).is_zero(tol));
        println!(
            "tau={tau:>2}  |accf(C0, .)| = {}  cross zero: {zero}",
            row.join(" ")
        );
    }

    let verdict = verify_ccc(&set);
    println!("{}", verdict.summary());
    Ok(verdict)
}

#[allow(dead_code)]
fn main() -> szccs::Result<()> {
    run_example().map(|_| ())
}
