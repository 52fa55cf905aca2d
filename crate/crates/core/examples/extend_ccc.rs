// Lengthen a CCC by concatenating permuted seed codes under sign rows.
//
// Run with `cargo run --example extend_ccc`.

use szccs::construct::{extend_ccc, mos_dft, mos_hadamard};
use szccs::io::fixtures;
use szccs::verify::verify_ccc;
use szccs::{CodeSet, Permutation};

pub fn run_example() -> szccs::Result<Vec<CodeSet>> {
    let seed = fixtures::example1_seed();
    let pi = Permutation::from_one_based(&[2, 4, 1, 3])?;
    let mut out = Vec::new();
    for (name, p, mos) in [
        ("dft", 2, mos_dft(2)?),
        ("hadamard", 4, mos_hadamard(4)?),
        ("dft", 4, mos_dft(4)?),
    ] {
        let set = extend_ccc(&seed, p, &mos, &pi)?;
        let (m, n) = set.dims();
        println!(
            "P={p} {name} pi={pi}: {} codes of {m}x{n}, {}",
            set.len(),
            verify_ccc(&set).summary()
        );
        out.push(set);
    }
    println!("\nfirst code for P=2:\n{}", out[0][0]);
    Ok(out)
}

#[allow(dead_code)]
fn main() -> szccs::Result<()> {
    run_example().map(|_| ())
}
