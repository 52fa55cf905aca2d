// Supplying your own sign rows and permutations, and what happens when
// the permutations collide.
//
// Run with `cargo run --example custom_families`.

use szccs::construct::{build_mccc_szccs, default_permutation_family};
use szccs::io::fixtures;
use szccs::verify::{verify_mos, verify_permutation_family};
use szccs::{Error, MosFamily, Permutation, PermutationFamily};

pub fn run_example() -> szccs::Result<(bool, Option<Error>)> {
    let mos = MosFamily::from_signs(&["++", "+-"])?;
    println!("{}", verify_mos(&mos).summary());

    let cyclic = default_permutation_family(4, 2)?;
    println!(
        "default family {:?}",
        cyclic
            .perms()
            .iter()
            .map(ToString::to_string)
            .collect::<Vec<_>>()
    );
    println!("{}", verify_permutation_family(&cyclic).summary());

    let clash = PermutationFamily::new(
        vec![
            Permutation::from_one_based(&[1, 2, 3, 4])?,
            Permutation::from_one_based(&[3, 2, 1, 4])?,
        ],
        2,
    )?;
    if let Some(c) = clash.find_clash() {
        println!("clash: {c:?}");
    }

    let seed = fixtures::example1_seed();
    let ok = build_mccc_szccs(&seed, 2, &mos, &cyclic, "example1").is_ok();
    let err = build_mccc_szccs(&seed, 2, &mos, &clash, "example1").err();
    if let Some(e) = &err {
        println!("rejected: {e}");
    }
    Ok((ok, err))
}

#[allow(dead_code)]
fn main() -> szccs::Result<()> {
    run_example().map(|_| ())
}
