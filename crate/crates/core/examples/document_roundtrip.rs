// Save a bundle as JSON and as sign text, then load both back.
//
// Run with `cargo run --example document_roundtrip`.

use szccs::construct::{build_mccc_szccs, default_permutation_family, mos_dft};
use szccs::io::{fixtures, CodeSetDocument, Provenance};
use szccs::verify::verify_szccs;

pub fn run_example() -> szccs::Result<CodeSetDocument> {
    let seed = fixtures::example1_seed();
    let bundle = build_mccc_szccs(
        &seed,
        2,
        &mos_dft(2)?,
        &default_permutation_family(4, 2)?,
        "example1",
    )?;
    let mut doc = CodeSetDocument::from_bundle(&bundle, Provenance::new("szccs").with("p", 2));
    doc.verdicts
        .push(verify_szccs(&bundle.flatten(), bundle.zone.width())?);

    let dir = std::env::temp_dir().join(format!("szccs-example-{}", std::process::id()));
    std::fs::create_dir_all(&dir)?;
    let json_path = dir.join("bundle.json");
    let txt_path = dir.join("bundle.txt");
    std::fs::write(&json_path, doc.to_json()?)?;
    std::fs::write(&txt_path, doc.to_sign_text()?)?;

    let from_json = CodeSetDocument::parse(&std::fs::read_to_string(&json_path)?)?;
    let from_txt = CodeSetDocument::parse(&std::fs::read_to_string(&txt_path)?)?;
    println!("json round trip identical: {}", from_json == doc);
    println!(
        "text keeps codes: {}, sets from json: {}",
        from_txt.to_code_set()? == doc.to_code_set()?,
        from_json.to_sets()?.len()
    );
    std::fs::remove_dir_all(&dir)?;
    Ok(from_json)
}

#[allow(dead_code)]
fn main() -> szccs::Result<()> {
    run_example().map(|_| ())
}
