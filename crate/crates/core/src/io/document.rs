//! JSON document holding a code, a code set, or an SZCCS bundle, together
//! with its provenance and any verdicts computed when it was generated.

use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

use crate::code::{Code, CodeSet};
use crate::construct::SzccsBundle;
use crate::error::{Error, Result};
use crate::io::text::{emit_sign_blocks, parse_sign_blocks};
use crate::phase::PhaseAlphabet;
use crate::verify::Verdict;

pub const FORMAT_VERSION: &str = "1.0";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DocumentKind {
    Code,
    CodeSet,
    SzccsBundle,
}

#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct Provenance {
    pub construction: String,
    #[serde(default)]
    pub parameters: BTreeMap<String, String>,
}

impl Provenance {
    pub fn new(construction: &str) -> Self {
        Provenance {
            construction: construction.to_string(),
            parameters: BTreeMap::new(),
        }
    }

    pub fn with(mut self, key: &str, value: impl ToString) -> Self {
        self.parameters.insert(key.to_string(), value.to_string());
        self
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CodeSetDocument {
    pub format_version: String,
    pub kind: DocumentKind,
    pub m: usize,
    pub n: usize,
    pub k: usize,
    pub root_order: u32,
    /// Number of sets in an SZCCS bundle; codes are stored set-major.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sets: Option<usize>,
    /// `codes[k][i][j]` is the phase of entry `(i, j)` of code `k`.
    pub codes: Vec<Vec<Vec<u32>>>,
    pub provenance: Provenance,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub verdicts: Vec<Verdict>,
}

impl CodeSetDocument {
    fn from_codes(kind: DocumentKind, codes: &[Code], provenance: Provenance) -> Self {
        let (m, n) = codes[0].dims();
        CodeSetDocument {
            format_version: FORMAT_VERSION.to_string(),
            kind,
            m,
            n,
            k: codes.len(),
            root_order: codes[0].alphabet().root_order(),
            sets: None,
            codes: codes.iter().map(Code::to_rows).collect(),
            provenance,
            verdicts: Vec::new(),
        }
    }

    pub fn from_code(code: &Code, provenance: Provenance) -> Self {
        Self::from_codes(DocumentKind::Code, std::slice::from_ref(code), provenance)
    }

    pub fn from_set(set: &CodeSet, provenance: Provenance) -> Self {
        Self::from_codes(DocumentKind::CodeSet, set.codes(), provenance)
    }

    pub fn from_bundle(bundle: &SzccsBundle, provenance: Provenance) -> Self {
        let flat = bundle.flatten();
        let mut doc = Self::from_codes(DocumentKind::SzccsBundle, flat.codes(), provenance);
        doc.sets = Some(bundle.set_count());
        doc
    }

    /// Structural checks: version, declared sizes, and phase range.
    pub fn validate(&self) -> Result<()> {
        let invalid = |msg: String| Err(Error::InvalidParameter(msg));
        if self.format_version != FORMAT_VERSION {
            return invalid(format!(
                "unsupported format version {:?}",
                self.format_version
            ));
        }
        PhaseAlphabet::new(self.root_order)?;
        if self.k != self.codes.len() || self.k == 0 {
            return invalid(format!(
                "declared k = {} but {} codes present",
                self.k,
                self.codes.len()
            ));
        }
        if self.kind == DocumentKind::Code && self.k != 1 {
            return invalid("a code document holds exactly one code".into());
        }
        match (self.kind, self.sets) {
            (DocumentKind::SzccsBundle, Some(s)) if s > 0 && self.k.is_multiple_of(s) => {}
            (DocumentKind::SzccsBundle, _) => {
                return invalid("bundle needs a set count dividing k".into())
            }
            (_, Some(_)) => return invalid("only bundles carry a set count".into()),
            _ => {}
        }
        for (idx, code) in self.codes.iter().enumerate() {
            if code.len() != self.m || code.iter().any(|r| r.len() != self.n) {
                return invalid(format!("code {idx} is not {}x{}", self.m, self.n));
            }
            if code.iter().flatten().any(|&p| p >= self.root_order) {
                return invalid(format!(
                    "code {idx} has a phase outside [0, {})",
                    self.root_order
                ));
            }
        }
        Ok(())
    }

    pub fn alphabet(&self) -> Result<PhaseAlphabet> {
        PhaseAlphabet::new(self.root_order)
    }

    pub fn to_codes(&self) -> Result<Vec<Code>> {
        self.validate()?;
        let a = self.alphabet()?;
        self.codes
            .iter()
            .map(|rows| Code::from_rows(a, rows.clone()))
            .collect()
    }

    pub fn to_code_set(&self) -> Result<CodeSet> {
        CodeSet::new(self.to_codes()?)
    }

    /// Split into sets. Bundles use their stored set count; other documents
    /// are split into consecutive groups of `M` codes (the size of a CCC).
    pub fn to_sets(&self) -> Result<Vec<CodeSet>> {
        let codes = self.to_codes()?;
        let size = match self.sets {
            Some(s) => self.k / s,
            None => self.m,
        };
        if !self.k.is_multiple_of(size) {
            return Err(Error::InvalidParameter(format!(
                "{} codes cannot be split into sets of {size}",
                self.k
            )));
        }
        codes
            .chunks(size)
            .map(|c| CodeSet::new(c.to_vec()))
            .collect()
    }

    pub fn to_json(&self) -> Result<String> {
        let mut s = serde_json::to_string_pretty(self)?;
        s.push('\n');
        Ok(s)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let doc: CodeSetDocument = serde_json::from_str(text)?;
        doc.validate()?;
        Ok(doc)
    }

    /// Sign-text rendering (binary alphabets only); set structure and
    /// provenance are not carried.
    pub fn to_sign_text(&self) -> Result<String> {
        emit_sign_blocks(&self.to_codes()?)
    }

    pub fn from_sign_text(text: &str, provenance: Provenance) -> Result<Self> {
        let codes = parse_sign_blocks(text)?;
        let kind = if codes.len() == 1 {
            DocumentKind::Code
        } else {
            DocumentKind::CodeSet
        };
        Ok(Self::from_codes(kind, &codes, provenance))
    }

    /// Parse either format, choosing JSON when the first non-blank character
    /// is `{`.
    pub fn parse(text: &str) -> Result<Self> {
        if text.trim_start().starts_with('{') {
            Self::from_json(text)
        } else {
            Self::from_sign_text(text, Provenance::new("text"))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::code::code_from_signs;

    #[test]
    fn json_round_trip_with_provenance() {
        let c = code_from_signs("++/+-").unwrap();
        let doc = CodeSetDocument::from_code(&c, Provenance::new("perfect").with("m", 2));
        let back = CodeSetDocument::parse(&doc.to_json().unwrap()).unwrap();
        assert_eq!(back, doc);
        assert_eq!(back.to_codes().unwrap(), vec![c]);
    }

    #[test]
    fn validation_catches_bad_documents() {
        let c = code_from_signs("++/+-").unwrap();
        let mut doc = CodeSetDocument::from_code(&c, Provenance::default());
        doc.codes[0][1][1] = 2;
        assert!(doc.validate().is_err());

        let mut doc = CodeSetDocument::from_code(&c, Provenance::default());
        doc.k = 2;
        assert!(doc.validate().is_err());

        let mut doc = CodeSetDocument::from_code(&c, Provenance::default());
        doc.format_version = "0.1".into();
        assert!(doc.validate().is_err());

        assert!(CodeSetDocument::parse("{\"kind\": 1}").is_err());
    }

    #[test]
    fn text_documents() {
        let doc = CodeSetDocument::parse("++\n+-\n\n+-\n++\n").unwrap();
        assert_eq!(doc.kind, DocumentKind::CodeSet);
        assert_eq!((doc.m, doc.n, doc.k), (2, 2, 2));
        assert_eq!(doc.to_sets().unwrap().len(), 1);
        assert_eq!(doc.to_sign_text().unwrap(), "++\n+-\n\n+-\n++\n");
    }
}
