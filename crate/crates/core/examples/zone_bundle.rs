// The (8,4,6,2) symmetrical ZCCS built from the bundled (4,3) seed.
//
// Run with `cargo run --example zone_bundle`.

use szccs::construct::{build_mccc_szccs, SzccsBundle};
use szccs::io::fixtures;
use szccs::verify::{measure_symmetric_zone, verify_mccc, verify_szccs};

pub fn run_example() -> szccs::Result<SzccsBundle> {
    let bundle = build_mccc_szccs(
        &fixtures::example1_seed(),
        2,
        &fixtures::example1_mos(),
        &fixtures::example1_perms()?,
        "example1",
    )?;
    for (k, code) in bundle.flatten().iter().enumerate() {
        println!("B{}:\n{code}\n", k + 1);
    }

    let flat = bundle.flatten();
    let z = bundle.zone.width();
    println!("{}", verify_szccs(&flat, z)?.summary());
    println!("{}", verify_mccc(&bundle.sets, z + 1)?.summary());
    println!("measured zone: {}", measure_symmetric_zone(&flat));
    Ok(bundle)
}

#[allow(dead_code)]
fn main() -> szccs::Result<()> {
    run_example().map(|_| ())
}
