//! File formats, bundled fixtures, and report emission.

pub mod document;
pub mod fixtures;
pub mod report;
pub mod text;

pub use document::{CodeSetDocument, DocumentKind, Provenance, FORMAT_VERSION};
pub use report::{write_accf_csv, write_pacf_csv};
pub use text::{emit_sign_blocks, parse_sign_blocks};
