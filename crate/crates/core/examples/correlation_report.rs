// Write correlation tables as CSV.
//
// Run with `cargo run --example correlation_report`.

use szccs::construct::{multiplication_matrix, MultMatrixParams};
use szccs::correlate::{aacf, accf_vector, pacf2d};
use szccs::io::{fixtures, write_accf_csv, write_pacf_csv};

pub fn run_example() -> szccs::Result<(String, String, String)> {
    let m3 = multiplication_matrix(MultMatrixParams::new(3, 1, 0)?);
    let mut pacf = Vec::new();
    write_pacf_csv(&pacf2d(&m3), &mut pacf)?;

    let seed = fixtures::example1_seed();
    let mut cross = Vec::new();
    write_accf_csv(&accf_vector(&seed[0], &seed[1])?, &mut cross)?;
    let mut auto = Vec::new();
    write_accf_csv(&aacf(&seed[0]), &mut auto)?;

    let text = |b: Vec<u8>| String::from_utf8(b).expect("csv is utf-8");
    let (pacf, cross, auto) = (text(pacf), text(cross), text(auto));
    println!("pacf of M(3,1,0):\n{pacf}");
    println!("accf of C1 vs C2:\n{cross}");
    println!("aacf of C1:\n{auto}");
    Ok((pacf, cross, auto))
}

#[allow(dead_code)]
fn main() -> szccs::Result<()> {
    run_example().map(|_| ())
}
