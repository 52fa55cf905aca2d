//! Constructions and exhaustive verification of 2D perfect arrays, complete
//! complementary codes (CCCs), multiple CCCs, and optimal symmetrical
//! Z-complementary code sets (SZCCSs).
//!
//! Codes are `M×N` arrays of roots of unity stored as exact integer phases.
//! The constructions are:
//!
//! - [`construct::multiplication_matrix`]: an `M×M` perfect array,
//! - [`construct::mult_matrix_ccc`]: its `M` cyclic row shifts, an `(M, M)`-CCC,
//! - [`construct::extend_ccc`]: an `(M, N)`-CCC stretched to `(M, PN)` with
//!   `P` mutually orthogonal sign sequences,
//! - [`construct::build_mccc_szccs`]: `P` such extensions under a
//!   column-disjoint permutation family, jointly a `(P, M, PN, N)`-MCCC and an
//!   optimal symmetrical `(PM, M, PN, N-1)`-ZCCS.
//!
//! Every claim is checkable with the certifiers in [`verify`], which scan all
//! shifts of all code pairs.
//!
//! ```
//! use szccs::construct::{build_mccc_szccs, mos_dft, default_permutation_family};
//! use szccs::io::fixtures;
//! use szccs::verify::verify_szccs;
//!
//! let seed = fixtures::example1_seed();
//! let bundle = build_mccc_szccs(
//!     &seed, 2, &mos_dft(2)?, &default_permutation_family(4, 2)?, "example1",
//! )?;
//! let verdict = verify_szccs(&bundle.flatten(), 2)?;
//! assert!(verdict.passed);
//! assert_eq!(verdict.parameters.optimal, Some(true));
//! # Ok::<(), szccs::Error>(())
//! ```

pub mod cli;
pub mod code;
pub mod construct;
pub mod correlate;
pub mod error;
pub mod family;
pub mod io;
pub mod phase;
pub mod verify;

pub use code::{code_from_signs, Code, CodeSet, PhaseSequence};
pub use error::{Error, Result};
pub use family::{MosFamily, Permutation, PermutationFamily, ZoneSpec};
pub use phase::{root_of_unity_sum, PhaseAlphabet};
pub use verify::{Property, Verdict, Violation};
