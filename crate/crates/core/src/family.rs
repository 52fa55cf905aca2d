//! Auxiliary families used by the constructions: mutually orthogonal
//! sequences, permutation families, and symmetric zero-correlation zones.

use num_complex::{Complex, Complex64};
use std::fmt;

use crate::code::PhaseSequence;
use crate::error::{Error, Result};
use crate::phase::PhaseAlphabet;

/// `P` sequences of length `P` over a phase alphabet, intended to be pairwise
/// orthogonal. Construction only checks shape; orthogonality is a verified
/// property (see [`crate::verify::verify_mos`]) and is enforced by the
/// constructions that consume the family.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MosFamily {
    alphabet: PhaseAlphabet,
    sequences: Vec<Vec<u32>>,
}

impl MosFamily {
    pub fn new(alphabet: PhaseAlphabet, sequences: Vec<Vec<u32>>) -> Result<Self> {
        let p = sequences.len();
        if p == 0 {
            return Err(Error::InvalidParameter("empty sequence family".into()));
        }
        let q = alphabet.root_order();
        for (j, s) in sequences.iter().enumerate() {
            if s.len() != p {
                return Err(Error::InvalidParameter(format!(
                    "sequence {j} has length {}, expected {p}",
                    s.len()
                )));
            }
            if let Some(bad) = s.iter().find(|&&x| x >= q) {
                return Err(Error::InvalidParameter(format!(
                    "phase {bad} outside [0, {q}) in sequence {j}"
                )));
            }
        }
        Ok(MosFamily {
            alphabet,
            sequences,
        })
    }

    /// Family from `+`/`-` rows, e.g. `["--", "+-"]`.
    pub fn from_signs<S: AsRef<str>>(rows: &[S]) -> Result<Self> {
        let sequences = rows
            .iter()
            .map(|r| PhaseSequence::from_signs(r.as_ref()).map(|s| s.phases().to_vec()))
            .collect::<Result<_>>()?;
        MosFamily::new(PhaseAlphabet::BINARY, sequences)
    }

    /// Sequence length and count, `P`.
    pub fn len(&self) -> usize {
        self.sequences.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sequences.is_empty()
    }

    pub fn alphabet(&self) -> PhaseAlphabet {
        self.alphabet
    }

    pub fn sequences(&self) -> &[Vec<u32>] {
        &self.sequences
    }

    pub fn sequence(&self, j: usize) -> PhaseSequence {
        PhaseSequence::new(self.alphabet, self.sequences[j].clone())
            .expect("family phases are range-checked")
    }

    /// `Σ_α b^{j1}_α · conj(b^{j2}_α)`.
    pub fn inner_product(&self, j1: usize, j2: usize) -> Complex64 {
        let a = self.alphabet;
        self.sequences[j1]
            .iter()
            .zip(&self.sequences[j2])
            .map(|(&x, &y)| a.evaluate(x as i64 - y as i64))
            .sum()
    }

    pub fn inner_product_exact(&self, j1: usize, j2: usize) -> Option<Complex<i64>> {
        let a = self.alphabet;
        self.sequences[j1]
            .iter()
            .zip(&self.sequences[j2])
            .map(|(&x, &y)| a.evaluate_exact(x as i64 - y as i64))
            .sum()
    }

    pub fn rescaled(&self, target: PhaseAlphabet) -> Result<MosFamily> {
        let f = self.alphabet.scale_into(target)?;
        Ok(MosFamily {
            alphabet: target,
            sequences: self
                .sequences
                .iter()
                .map(|s| s.iter().map(|&x| x * f).collect())
                .collect(),
        })
    }
}

/// A permutation of `{0, .., M-1}`. Displayed and parsed 1-based.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn identity(m: usize) -> Self {
        Permutation((0..m).collect())
    }

    pub fn from_zero_based(images: Vec<usize>) -> Result<Self> {
        let m = images.len();
        let mut seen = vec![false; m];
        for &x in &images {
            if x >= m || std::mem::replace(&mut seen[x], true) {
                return Err(Error::InvalidParameter(format!(
                    "not a permutation of 1..{m}: {}",
                    one_based(&images)
                )));
            }
        }
        Ok(Permutation(images))
    }

    pub fn from_one_based(images: &[usize]) -> Result<Self> {
        if images.contains(&0) {
            return Err(Error::InvalidParameter(
                "1-based permutation contains 0".into(),
            ));
        }
        Permutation::from_zero_based(images.iter().map(|x| x - 1).collect())
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    /// Image of the 0-based point `x`.
    pub fn apply(&self, x: usize) -> usize {
        self.0[x]
    }

    pub fn images(&self) -> &[usize] {
        &self.0
    }

    pub fn to_one_based(&self) -> Vec<usize> {
        self.0.iter().map(|x| x + 1).collect()
    }
}

fn one_based(images: &[usize]) -> String {
    let parts: Vec<String> = images.iter().map(|x| (x + 1).to_string()).collect();
    format!("({})", parts.join(","))
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&one_based(&self.0))
    }
}

/// One offending tuple of the column-disjointness constraint:
/// `π_{k1}(i1·P + j) = π_{k2}(i2·P + j)` with `k1 != k2`.
///
/// `k`, `i` are 0-based, `j` and `value` are 1-based, matching the
/// `π_k(iP + j)` indexing of the construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PermutationClash {
    pub k1: usize,
    pub k2: usize,
    pub i1: usize,
    pub i2: usize,
    pub j: usize,
    pub value: usize,
}

impl From<PermutationClash> for Error {
    fn from(c: PermutationClash) -> Self {
        Error::PermutationClash {
            k1: c.k1,
            k2: c.k2,
            i1: c.i1,
            i2: c.i2,
            j: c.j,
            value: c.value,
        }
    }
}

/// `P` permutations of `{1..M}` viewed as `S = M/P` blocks of width `P`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PermutationFamily {
    perms: Vec<Permutation>,
    block_width: usize,
}

impl PermutationFamily {
    /// Checks that there are exactly `block_width` permutations of a common
    /// degree divisible by `block_width`. Column-disjointness is checked
    /// separately by [`PermutationFamily::find_clash`].
    pub fn new(perms: Vec<Permutation>, block_width: usize) -> Result<Self> {
        let m = perms.first().map_or(0, Permutation::degree);
        if block_width == 0 || m == 0 || !m.is_multiple_of(block_width) {
            return Err(Error::InvalidParameter(format!(
                "block width {block_width} must be a positive divisor of the degree {m}"
            )));
        }
        if perms.len() != block_width {
            return Err(Error::InvalidParameter(format!(
                "expected {block_width} permutations, got {}",
                perms.len()
            )));
        }
        if let Some(p) = perms.iter().find(|p| p.degree() != m) {
            return Err(Error::InvalidParameter(format!(
                "permutation {p} has degree {}, expected {m}",
                p.degree()
            )));
        }
        Ok(PermutationFamily { perms, block_width })
    }

    pub fn perms(&self) -> &[Permutation] {
        &self.perms
    }

    /// `M`.
    pub fn degree(&self) -> usize {
        self.perms[0].degree()
    }

    /// `P`.
    pub fn block_width(&self) -> usize {
        self.block_width
    }

    /// `S = M / P`.
    pub fn block_count(&self) -> usize {
        self.degree() / self.block_width
    }

    /// Every violation of column-disjointness, each reported against the
    /// first permutation that produced the value in that column.
    ///
    /// For each column position `j` every value may be produced by one
    /// permutation only, so a single pass per column with an owner table
    /// suffices.
    pub fn clashes(&self) -> Vec<PermutationClash> {
        let (p, s, m) = (self.block_width, self.block_count(), self.degree());
        let mut out = Vec::new();
        for j in 0..p {
            let mut owner: Vec<Option<(usize, usize)>> = vec![None; m];
            for (k, perm) in self.perms.iter().enumerate() {
                for i in 0..s {
                    let v = perm.apply(i * p + j);
                    match owner[v] {
                        Some((k0, i0)) if k0 != k => out.push(PermutationClash {
                            k1: k0,
                            k2: k,
                            i1: i0,
                            i2: i,
                            j: j + 1,
                            value: v + 1,
                        }),
                        Some(_) => {}
                        None => owner[v] = Some((k, i)),
                    }
                }
            }
        }
        out
    }

    /// First violation of column-disjointness, if any.
    pub fn find_clash(&self) -> Option<PermutationClash> {
        self.clashes().into_iter().next()
    }

    pub fn is_column_disjoint(&self) -> bool {
        self.find_clash().is_none()
    }
}

/// Symmetric zero-correlation zone `T1 ∪ T2` for codes of length `N`:
/// `T1 = {1..Z}` and `T2 = {N-Z..N-1}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ZoneSpec {
    z: usize,
    n: usize,
}

impl ZoneSpec {
    pub fn new(z: usize, n: usize) -> Result<Self> {
        if z >= n {
            return Err(Error::InvalidParameter(format!(
                "zone width {z} must be below the code length {n}"
            )));
        }
        Ok(ZoneSpec { z, n })
    }

    pub fn width(&self) -> usize {
        self.z
    }

    pub fn code_length(&self) -> usize {
        self.n
    }

    pub fn front(&self) -> std::ops::RangeInclusive<usize> {
        1..=self.z
    }

    pub fn tail(&self) -> std::ops::Range<usize> {
        self.n - self.z..self.n
    }

    /// Whether `|τ|` lies in `T1 ∪ T2`.
    pub fn contains(&self, abs_shift: usize) -> bool {
        self.front().contains(&abs_shift) || self.tail().contains(&abs_shift)
    }
}
