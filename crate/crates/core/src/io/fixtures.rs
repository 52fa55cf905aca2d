//! Bundled binary fixtures: the (4,3)-CCC seed and the eight 4×6 codes it
//! yields with `P = 2`, `b¹ = (−,−)`, `b² = (+,−)`, `π₁ = (1,2,3,4)` and
//! `π₂ = (2,1,4,3)`.

use crate::code::CodeSet;
use crate::error::Result;
use crate::family::{MosFamily, Permutation, PermutationFamily};
use crate::io::text::parse_sign_blocks;

pub const EXAMPLE1_SEED: &str = include_str!("../../data/example1_seed.txt");
pub const EXAMPLE1_SZCCS: &str = include_str!("../../data/example1_szccs.txt");

/// Names accepted by [`bundled`].
pub const NAMES: [&str; 2] = ["example1_seed", "example1_szccs"];

pub fn bundled(name: &str) -> Option<&'static str> {
    match name {
        "example1_seed" => Some(EXAMPLE1_SEED),
        "example1_szccs" => Some(EXAMPLE1_SZCCS),
        _ => None,
    }
}

/// The four 4×3 seed codes `C₁..C₄`.
pub fn example1_seed() -> CodeSet {
    CodeSet::new(parse_sign_blocks(EXAMPLE1_SEED).expect("bundled fixture parses"))
        .expect("bundled fixture is homogeneous")
}

/// The eight 4×6 codes `B₁..B₈`, set-major.
pub fn example1_szccs() -> CodeSet {
    CodeSet::new(parse_sign_blocks(EXAMPLE1_SZCCS).expect("bundled fixture parses"))
        .expect("bundled fixture is homogeneous")
}

/// `B₁..B₈` split into the two (4,6)-CCCs.
pub fn example1_sets() -> Vec<CodeSet> {
    example1_szccs()
        .codes()
        .chunks(4)
        .map(|c| CodeSet::new(c.to_vec()).expect("homogeneous"))
        .collect()
}

/// `b¹ = (−,−)`, `b² = (+,−)`.
pub fn example1_mos() -> MosFamily {
    MosFamily::from_signs(&["--", "+-"]).expect("valid signs")
}

/// `π₁ = (1,2,3,4)`, `π₂ = (2,1,4,3)`.
pub fn example1_perms() -> Result<PermutationFamily> {
    PermutationFamily::new(
        vec![
            Permutation::from_one_based(&[1, 2, 3, 4])?,
            Permutation::from_one_based(&[2, 1, 4, 3])?,
        ],
        2,
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::code::code_from_signs;

    #[test]
    fn seed_matches_sign_matrices() {
        let seed = example1_seed();
        assert_eq!(seed.len(), 4);
        assert_eq!(seed[0], code_from_signs("+++/++-/++-/-+-").unwrap());
        assert_eq!(seed[3], code_from_signs("+--/+-+/+++/-++").unwrap());
    }

    #[test]
    fn bundle_shape() {
        assert_eq!(example1_szccs().len(), 8);
        assert_eq!(example1_szccs().dims(), (4, 6));
        assert_eq!(example1_sets().len(), 2);
        assert!(bundled("nope").is_none());
    }
}
