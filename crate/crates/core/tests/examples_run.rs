mod perfect_array {
    include!(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/examples/perfect_array.rs"
    ));
}
mod row_shift_ccc {
    include!(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/examples/row_shift_ccc.rs"
    ));
}
mod extend_ccc {
    include!(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/examples/extend_ccc.rs"
    ));
}
mod zone_bundle {
    include!(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/examples/zone_bundle.rs"
    ));
}
mod correlation_report {
    include!(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/examples/correlation_report.rs"
    ));
}
mod custom_families {
    include!(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/examples/custom_families.rs"
    ));
}
mod document_roundtrip {
    include!(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/examples/document_roundtrip.rs"
    ));
}

use szccs::io::fixtures;

#[test]
fn perfect_array_runs() {
    let r = perfect_array::run_example().unwrap();
    assert_eq!(
        r,
        vec![(3, 1, true), (4, 3, true), (5, 2, true), (4, 2, false)]
    );
}

#[test]
fn row_shift_ccc_runs() {
    assert!(row_shift_ccc::run_example().unwrap().passed);
}

#[test]
fn extend_ccc_runs() {
    let sets = extend_ccc::run_example().unwrap();
    let dims: Vec<_> = sets.iter().map(|s| s.dims()).collect();
    assert_eq!(dims, vec![(4, 6), (4, 12), (4, 12)]);
}

#[test]
fn zone_bundle_runs() {
    let bundle = zone_bundle::run_example().unwrap();
    assert_eq!(bundle.flatten(), fixtures::example1_szccs());
}

#[test]
fn correlation_report_runs() {
    let (pacf, cross, auto) = correlation_report::run_example().unwrap();
    assert_eq!(pacf.lines().count(), 10);
    assert!(pacf.contains("\n0,0,9,0,9\n"));
    assert_eq!(cross.lines().count(), 6);
    assert!(auto.contains("\n0,12,0,12\n"));
}

#[test]
fn custom_families_runs() {
    let (ok, err) = custom_families::run_example().unwrap();
    assert!(ok);
    assert!(matches!(err, Some(szccs::Error::PermutationClash { .. })));
}

#[test]
fn document_roundtrip_runs() {
    let doc = document_roundtrip::run_example().unwrap();
    assert_eq!(doc.sets, Some(2));
    assert!(doc.verdicts[0].passed);
}
