//! Codes (M×N arrays over a phase alphabet), code sets, and phase sequences.

use num_complex::{Complex, Complex64};
use std::fmt;

use crate::error::{Error, Result};
use crate::phase::PhaseAlphabet;

/// An `M×N` array of unit-magnitude entries stored as exponents over a
/// [`PhaseAlphabet`]. Row `i` is the sequence sent on the `i`-th carrier.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Code {
    rows: usize,
    cols: usize,
    alphabet: PhaseAlphabet,
    phases: Vec<u32>,
}

impl Code {
    /// Build from row-major exponents already reduced into `[0, q)`.
    pub fn new(
        rows: usize,
        cols: usize,
        alphabet: PhaseAlphabet,
        phases: Vec<u32>,
    ) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::InvalidParameter(format!(
                "code dimensions must be positive, got {rows}x{cols}"
            )));
        }
        if phases.len() != rows * cols {
            return Err(Error::InvalidParameter(format!(
                "expected {} phases for a {rows}x{cols} code, got {}",
                rows * cols,
                phases.len()
            )));
        }
        let q = alphabet.root_order();
        if let Some(bad) = phases.iter().find(|&&p| p >= q) {
            return Err(Error::InvalidParameter(format!(
                "phase {bad} outside [0, {q})"
            )));
        }
        Ok(Code {
            rows,
            cols,
            alphabet,
            phases,
        })
    }

    pub fn from_rows(alphabet: PhaseAlphabet, rows: Vec<Vec<u32>>) -> Result<Self> {
        let m = rows.len();
        let n = rows.first().map_or(0, Vec::len);
        if let Some(r) = rows.iter().find(|r| r.len() != n) {
            return Err(Error::InvalidParameter(format!(
                "ragged rows: expected length {n}, found {}",
                r.len()
            )));
        }
        Code::new(m, n, alphabet, rows.into_iter().flatten().collect())
    }

    /// Build from a generator of unreduced exponents.
    pub fn from_fn(
        rows: usize,
        cols: usize,
        alphabet: PhaseAlphabet,
        mut f: impl FnMut(usize, usize) -> i64,
    ) -> Result<Self> {
        let mut phases = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                phases.push(alphabet.reduce(f(i, j)));
            }
        }
        Code::new(rows, cols, alphabet, phases)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn dims(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn alphabet(&self) -> PhaseAlphabet {
        self.alphabet
    }

    pub fn phase(&self, i: usize, j: usize) -> u32 {
        self.phases[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[u32] {
        &self.phases[i * self.cols..(i + 1) * self.cols]
    }

    /// Row-major exponents.
    pub fn phases(&self) -> &[u32] {
        &self.phases
    }

    pub fn to_rows(&self) -> Vec<Vec<u32>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn entry(&self, i: usize, j: usize) -> Complex64 {
        self.alphabet.evaluate(self.phase(i, j) as i64)
    }

    /// Complex matrix of the code, entry `(i, j) = exp(2πi·phase/q)`.
    pub fn evaluate(&self) -> Vec<Vec<Complex64>> {
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self.entry(i, j)).collect())
            .collect()
    }

    /// Row-major complex entries.
    pub fn evaluate_flat(&self) -> Vec<Complex64> {
        self.phases
            .iter()
            .map(|&p| self.alphabet.evaluate(p as i64))
            .collect()
    }

    /// Row-major Gaussian-integer entries, when the alphabet divides 4.
    pub fn evaluate_exact(&self) -> Option<Vec<Complex<i64>>> {
        self.phases
            .iter()
            .map(|&p| self.alphabet.evaluate_exact(p as i64))
            .collect()
    }

    /// The same code expressed over a larger alphabet.
    pub fn rescaled(&self, target: PhaseAlphabet) -> Result<Code> {
        let factor = self.alphabet.scale_into(target)?;
        Ok(Code {
            rows: self.rows,
            cols: self.cols,
            alphabet: target,
            phases: self.phases.iter().map(|&p| p * factor).collect(),
        })
    }

    /// Every entry multiplied by the root of unity with exponent `phase`.
    pub fn rotated(&self, phase: i64) -> Code {
        let a = self.alphabet;
        Code {
            phases: self
                .phases
                .iter()
                .map(|&p| a.reduce(p as i64 + phase))
                .collect(),
            ..self.clone()
        }
    }

    /// `+`/`-` rendering, one row per line. `None` unless the alphabet is binary.
    pub fn to_sign_text(&self) -> Option<String> {
        if !self.alphabet.is_binary() {
            return None;
        }
        let mut out = String::with_capacity(self.rows * (self.cols + 1));
        for i in 0..self.rows {
            out.extend(self.row(i).iter().map(|&p| if p == 0 { '+' } else { '-' }));
            out.push('\n');
        }
        Some(out)
    }
}

impl fmt::Display for Code {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(text) = self.to_sign_text() {
            return f.write_str(&text);
        }
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(u32::to_string).collect();
            writeln!(f, "{}", row.join(" "))?;
        }
        Ok(())
    }
}

/// Parse a binary code from `+`/`-` rows.
///
/// Rows are separated by newlines or `/`; whitespace inside a row is ignored,
/// as are blank rows. `+` maps to phase 0 and `-` to phase 1 over `q = 2`.
pub fn code_from_signs(text: &str) -> Result<Code> {
    let mut rows: Vec<Vec<u32>> = Vec::new();
    for (line_no, line) in text.split(['\n', '/']).enumerate() {
        let mut row = Vec::new();
        for ch in line.chars().filter(|c| !c.is_whitespace()) {
            match ch {
                '+' => row.push(0),
                '-' => row.push(1),
                other => {
                    return Err(Error::Parse {
                        line: line_no + 1,
                        message: format!("unexpected character {other:?} in sign row"),
                    })
                }
            }
        }
        if row.is_empty() {
            continue;
        }
        if let Some(first) = rows.first() {
            if first.len() != row.len() {
                return Err(Error::Parse {
                    line: line_no + 1,
                    message: format!(
                        "ragged rows: expected {} symbols, found {}",
                        first.len(),
                        row.len()
                    ),
                });
            }
        }
        rows.push(row);
    }
    if rows.is_empty() {
        return Err(Error::Parse {
            line: 1,
            message: "no sign rows".into(),
        });
    }
    Code::from_rows(PhaseAlphabet::BINARY, rows)
}

/// An ordered, dimension-homogeneous collection of codes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CodeSet {
    codes: Vec<Code>,
}

impl CodeSet {
    pub fn new(codes: Vec<Code>) -> Result<Self> {
        let first = codes
            .first()
            .ok_or_else(|| Error::InvalidParameter("a code set needs at least one code".into()))?;
        let dims = first.dims();
        let alphabet = first.alphabet();
        for c in &codes[1..] {
            if c.dims() != dims {
                return Err(Error::DimensionMismatch {
                    expected: dims,
                    found: c.dims(),
                });
            }
            if c.alphabet() != alphabet {
                return Err(Error::InvalidParameter(format!(
                    "mixed alphabets in code set: {alphabet} and {}",
                    c.alphabet()
                )));
            }
        }
        Ok(CodeSet { codes })
    }

    /// Number of codes, `K`.
    pub fn len(&self) -> usize {
        self.codes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.codes.is_empty()
    }

    /// `(M, N)` shared by every member.
    pub fn dims(&self) -> (usize, usize) {
        self.codes[0].dims()
    }

    pub fn alphabet(&self) -> PhaseAlphabet {
        self.codes[0].alphabet()
    }

    pub fn codes(&self) -> &[Code] {
        &self.codes
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Code> {
        self.codes.iter()
    }

    pub fn into_codes(self) -> Vec<Code> {
        self.codes
    }

    pub fn rescaled(&self, target: PhaseAlphabet) -> Result<CodeSet> {
        Ok(CodeSet {
            codes: self
                .codes
                .iter()
                .map(|c| c.rescaled(target))
                .collect::<Result<_>>()?,
        })
    }
}

impl std::ops::Index<usize> for CodeSet {
    type Output = Code;

    fn index(&self, k: usize) -> &Code {
        &self.codes[k]
    }
}

impl<'a> IntoIterator for &'a CodeSet {
    type Item = &'a Code;
    type IntoIter = std::slice::Iter<'a, Code>;

    fn into_iter(self) -> Self::IntoIter {
        self.codes.iter()
    }
}

/// A 1D sequence of roots of unity, used as block signs by the
/// concatenation operator.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PhaseSequence {
    alphabet: PhaseAlphabet,
    phases: Vec<u32>,
}

impl PhaseSequence {
    pub fn new(alphabet: PhaseAlphabet, phases: Vec<u32>) -> Result<Self> {
        let q = alphabet.root_order();
        if let Some(bad) = phases.iter().find(|&&p| p >= q) {
            return Err(Error::InvalidParameter(format!(
                "phase {bad} outside [0, {q})"
            )));
        }
        Ok(PhaseSequence { alphabet, phases })
    }

    /// Binary sequence from `+`/`-` symbols; whitespace is ignored.
    pub fn from_signs(text: &str) -> Result<Self> {
        let code = code_from_signs(text)?;
        if code.rows() != 1 {
            return Err(Error::Parse {
                line: 2,
                message: "a sign sequence must be a single row".into(),
            });
        }
        PhaseSequence::new(PhaseAlphabet::BINARY, code.phases().to_vec())
    }

    pub fn alphabet(&self) -> PhaseAlphabet {
        self.alphabet
    }

    pub fn phases(&self) -> &[u32] {
        &self.phases
    }

    pub fn len(&self) -> usize {
        self.phases.len()
    }

    pub fn is_empty(&self) -> bool {
        self.phases.is_empty()
    }

    pub fn evaluate(&self) -> Vec<Complex64> {
        self.phases
            .iter()
            .map(|&p| self.alphabet.evaluate(p as i64))
            .collect()
    }

    pub fn rescaled(&self, target: PhaseAlphabet) -> Result<PhaseSequence> {
        let factor = self.alphabet.scale_into(target)?;
        Ok(PhaseSequence {
            alphabet: target,
            phases: self.phases.iter().map(|&p| p * factor).collect(),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn signs_example_one_first_code() {
        let c = code_from_signs("+++ / ++- / ++- / -+-").unwrap();
        assert_eq!(c.dims(), (4, 3));
        assert_eq!(
            c.to_rows(),
            vec![vec![0, 0, 0], vec![0, 0, 1], vec![0, 0, 1], vec![1, 0, 1]]
        );
    }

    #[test]
    fn signs_singleton_and_two_by_two() {
        let one = code_from_signs("+").unwrap();
        assert_eq!(one.evaluate(), vec![vec![Complex64::new(1.0, 0.0)]]);
        let two = code_from_signs("+-\n-+\n").unwrap();
        assert_eq!(two.to_rows(), vec![vec![0, 1], vec![1, 0]]);
    }

    #[test]
    fn signs_errors() {
        assert!(matches!(
            code_from_signs("++\n+"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(matches!(code_from_signs("+x"), Err(Error::Parse { .. })));
        assert!(code_from_signs("  \n").is_err());
    }

    #[test]
    fn evaluate_examples() {
        let q2 = PhaseAlphabet::new(2).unwrap();
        let c = Code::from_rows(q2, vec![vec![0, 1], vec![1, 0]]).unwrap();
        let one = Complex64::new(1.0, 0.0);
        assert_eq!(c.evaluate(), vec![vec![one, -one], vec![-one, one]]);

        let q1 = PhaseAlphabet::new(1).unwrap();
        assert_eq!(
            Code::from_rows(q1, vec![vec![0]]).unwrap().evaluate(),
            vec![vec![one]]
        );

        let q4 = PhaseAlphabet::new(4).unwrap();
        let i = Complex64::new(0.0, 1.0);
        let c = Code::from_rows(q4, vec![vec![0, 1], vec![0, 3]]).unwrap();
        assert_eq!(c.evaluate(), vec![vec![one, i], vec![one, -i]]);
    }

    #[test]
    fn rejects_out_of_range_phase() {
        let q2 = PhaseAlphabet::new(2).unwrap();
        assert!(Code::new(1, 2, q2, vec![0, 2]).is_err());
        assert!(Code::new(0, 2, q2, vec![]).is_err());
    }

    #[test]
    fn code_set_homogeneity() {
        let a = code_from_signs("++/+-").unwrap();
        let b = code_from_signs("+++").unwrap();
        assert!(matches!(
            CodeSet::new(vec![a.clone(), b]),
            Err(Error::DimensionMismatch { .. })
        ));
        assert!(CodeSet::new(vec![]).is_err());
        let q4 = PhaseAlphabet::new(4).unwrap();
        assert!(CodeSet::new(vec![a.clone(), a.rescaled(q4).unwrap()]).is_err());
    }

    #[test]
    fn sign_text_round_trip() {
        let c = code_from_signs("+-+\n--+").unwrap();
        assert_eq!(c.to_sign_text().unwrap(), "+-+\n--+\n");
        assert_eq!(code_from_signs(&c.to_sign_text().unwrap()).unwrap(), c);
        let q4 = PhaseAlphabet::new(4).unwrap();
        assert!(c.rescaled(q4).unwrap().to_sign_text().is_none());
    }

    #[test]
    fn rotation_negates_binary() {
        let c = code_from_signs("+-").unwrap();
        assert_eq!(c.rotated(1), code_from_signs("-+").unwrap());
    }
}
