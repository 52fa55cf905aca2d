//! Generative procedures: multiplication matrices, row-shift CCCs, the block
//! concatenation operator, CCC length extension, and MCCC / symmetrical ZCCS
//! assembly, plus generators for orthogonal sign families and permutation
//! families.

use num_integer::Integer;

use crate::code::{Code, CodeSet, PhaseSequence};
use crate::error::{Error, Result};
use crate::family::{MosFamily, Permutation, PermutationFamily, ZoneSpec};
use crate::phase::PhaseAlphabet;
use crate::verify::{verify_ccc, verify_mos};

/// Parameters `(M, s, x)` of a multiplication matrix. Requires
/// `gcd(M, s) = 1`; any weaker condition such as `M ∤ s` admits matrices with
/// nonzero off-peak periodic correlation (e.g. `M = 4, s = 2`).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MultMatrixParams {
    m: usize,
    s: i64,
    x: i64,
}

impl MultMatrixParams {
    pub fn new(m: usize, s: i64, x: i64) -> Result<Self> {
        if m < 2 {
            return Err(Error::InvalidParameter(format!(
                "multiplication matrix order must be at least 2, got {m}"
            )));
        }
        let gcd = (m as i64).gcd(&s) as usize;
        if gcd != 1 {
            // The sum over rows collapses for τ2 = M/gcd, leaving M² at (0, M/gcd).
            return Err(Error::NotCoprime {
                m,
                s,
                gcd,
                tau1: 0,
                tau2: m / gcd,
                peak: m * m,
            });
        }
        Ok(MultMatrixParams { m, s, x })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn s(&self) -> i64 {
        self.s
    }

    pub fn x(&self) -> i64 {
        self.x
    }
}

/// Multiplication matrix with raw parameters and no coprimality check.
/// Entry `(i, j)` (0-based) has phase `x + s·i·j` over the `M`-th roots of unity.
pub fn multiplication_matrix_unchecked(m: usize, s: i64, x: i64) -> Result<Code> {
    let alphabet = PhaseAlphabet::new(m as u32)?;
    Code::from_fn(m, m, alphabet, |i, j| x + s * (i as i64) * (j as i64))
}

/// The `M×M` multiplication matrix, a perfect array.
pub fn multiplication_matrix(params: MultMatrixParams) -> Code {
    multiplication_matrix_unchecked(params.m, params.s, params.x)
        .expect("validated parameters give a valid code")
}

/// Output row `i` is input row `(i + u) mod M`.
pub fn cyclic_row_shift(code: &Code, u: usize) -> Result<Code> {
    let m = code.rows();
    if u >= m {
        return Err(Error::InvalidParameter(format!(
            "row shift {u} out of range for {m} rows"
        )));
    }
    let phases = (0..m)
        .flat_map(|i| code.row((i + u) % m).iter().copied())
        .collect();
    Code::new(m, code.cols(), code.alphabet(), phases)
}

/// `{ℳ^u : u = 0..M-1}`, an `(M, M)`-CCC.
pub fn mult_matrix_ccc(params: MultMatrixParams) -> CodeSet {
    let base = multiplication_matrix(params);
    let codes = (0..params.m)
        .map(|u| cyclic_row_shift(&base, u).expect("u < M"))
        .collect();
    CodeSet::new(codes).expect("shifts share dimensions")
}

/// Concatenation operator `R(C_1, .., C_P; b) = [b_1·C_1 ‖ .. ‖ b_P·C_P]`.
///
/// The output alphabet is the join of the code and sign alphabets.
pub fn r_concat(codes: &[Code], b: &PhaseSequence) -> Result<Code> {
    let first = codes
        .first()
        .ok_or_else(|| Error::InvalidParameter("R needs at least one code".into()))?;
    if b.len() != codes.len() {
        return Err(Error::InvalidParameter(format!(
            "sign sequence length {} does not match {} codes",
            b.len(),
            codes.len()
        )));
    }
    let (m, n) = first.dims();
    let mut alphabet = b.alphabet();
    for c in codes {
        if c.dims() != (m, n) {
            return Err(Error::DimensionMismatch {
                expected: (m, n),
                found: c.dims(),
            });
        }
        alphabet = alphabet.join(c.alphabet());
    }
    let b = b.rescaled(alphabet)?;
    let blocks: Vec<Code> = codes
        .iter()
        .zip(b.phases())
        .map(|(c, &sign)| Ok(c.rescaled(alphabet)?.rotated(sign as i64)))
        .collect::<Result<_>>()?;
    let p = blocks.len();
    Code::from_fn(m, p * n, alphabet, |i, col| {
        blocks[col / n].phase(i, col % n) as i64
    })
}

fn ensure_ccc(seed: &CodeSet) -> Result<()> {
    let verdict = verify_ccc(seed);
    if !verdict.passed {
        return Err(Error::VerificationFailed {
            property: "seed CCC".into(),
            detail: verdict.summary(),
        });
    }
    Ok(())
}

fn ensure_mos(mos: &MosFamily, p: usize) -> Result<()> {
    if mos.len() != p {
        return Err(Error::InvalidParameter(format!(
            "need {p} orthogonal sequences of length {p}, got {}",
            mos.len()
        )));
    }
    let verdict = verify_mos(mos);
    if !verdict.passed {
        return Err(Error::InvalidParameter(format!(
            "sign sequences are not mutually orthogonal: {}",
            verdict.summary()
        )));
    }
    Ok(())
}

fn check_block_width(m: usize, p: usize) -> Result<()> {
    if p == 0 || !m.is_multiple_of(p) {
        return Err(Error::InvalidParameter(format!(
            "P = {p} must be a positive divisor of the set size M = {m}"
        )));
    }
    Ok(())
}

/// Codes `B_{iP+j} = R(C_{π(iP+1)}, .., C_{π(iP+P)}; b^j)` in `(i, j)` order.
fn extend_unchecked(seed: &CodeSet, mos: &MosFamily, pi: &Permutation) -> Result<Vec<Code>> {
    let p = mos.len();
    let s = seed.len() / p;
    let mut out = Vec::with_capacity(seed.len());
    for i in 0..s {
        let group: Vec<Code> = (0..p)
            .map(|alpha| seed[pi.apply(i * p + alpha)].clone())
            .collect();
        for j in 0..p {
            out.push(r_concat(&group, &mos.sequence(j))?);
        }
    }
    Ok(out)
}

/// Extends an `(M, N)`-CCC to an `(M, N·P)`-CCC with `P` mutually orthogonal
/// sign sequences and a permutation `π` of the seed codes.
pub fn extend_ccc(seed: &CodeSet, p: usize, mos: &MosFamily, pi: &Permutation) -> Result<CodeSet> {
    let m = seed.len();
    check_block_width(m, p)?;
    if p < 2 {
        return Err(Error::InvalidParameter(format!(
            "length extension needs 1 < P <= M, got P = {p}"
        )));
    }
    if pi.degree() != m {
        return Err(Error::InvalidParameter(format!(
            "permutation {pi} does not act on {m} codes"
        )));
    }
    ensure_mos(mos, p)?;
    ensure_ccc(seed)?;
    CodeSet::new(extend_unchecked(seed, mos, pi)?)
}

/// Provenance of a bundle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BundleProvenance {
    pub seed: String,
    pub mos: MosFamily,
    pub perms: PermutationFamily,
}

/// `P` code sets, each an `(M, PN)`-CCC, whose union is a symmetrical
/// `(PM, M, PN, N-1)`-ZCCS.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SzccsBundle {
    pub sets: Vec<CodeSet>,
    pub zone: ZoneSpec,
    pub provenance: BundleProvenance,
}

impl SzccsBundle {
    /// All codes, set-major.
    pub fn flatten(&self) -> CodeSet {
        CodeSet::new(self.sets.iter().flat_map(|s| s.iter().cloned()).collect())
            .expect("bundle sets share dimensions")
    }

    pub fn set_count(&self) -> usize {
        self.sets.len()
    }

    /// Total number of codes, `K = P·M`.
    pub fn code_count(&self) -> usize {
        self.sets.iter().map(CodeSet::len).sum()
    }
}

/// Builds `P` extended CCCs, one per permutation of a column-disjoint family.
///
/// Set `k` holds `B_{kM+iP+j} = R(C_{π_k(iP+1)}, .., C_{π_k(iP+P)}; b^j)`.
/// With `P = 1` the seed is returned as the only set.
pub fn build_mccc_szccs(
    seed: &CodeSet,
    p: usize,
    mos: &MosFamily,
    perms: &PermutationFamily,
    seed_name: &str,
) -> Result<SzccsBundle> {
    let (_, n) = seed.dims();
    let m = seed.len();
    check_block_width(m, p)?;
    if perms.degree() != m || perms.block_width() != p {
        return Err(Error::InvalidParameter(format!(
            "permutation family acts on {} points in blocks of {}, expected {m} and {p}",
            perms.degree(),
            perms.block_width()
        )));
    }
    ensure_mos(mos, p)?;
    if let Some(clash) = perms.find_clash() {
        return Err(clash.into());
    }
    ensure_ccc(seed)?;
    let sets = if p == 1 {
        vec![seed.clone()]
    } else {
        perms
            .perms()
            .iter()
            .map(|pi| CodeSet::new(extend_unchecked(seed, mos, pi)?))
            .collect::<Result<_>>()?
    };
    Ok(SzccsBundle {
        sets,
        zone: ZoneSpec::new(n - 1, p * n)?,
        provenance: BundleProvenance {
            seed: seed_name.to_string(),
            mos: mos.clone(),
            perms: perms.clone(),
        },
    })
}

/// Rows of the order-`P` DFT matrix: `b^j_α = exp(2πi·j·α/P)`.
pub fn mos_dft(p: usize) -> Result<MosFamily> {
    if p == 0 {
        return Err(Error::InvalidParameter("P must be at least 1".into()));
    }
    let alphabet = PhaseAlphabet::new(p as u32)?;
    let rows = (0..p)
        .map(|j| (0..p).map(|a| ((j * a) % p) as u32).collect())
        .collect();
    MosFamily::new(alphabet, rows)
}

/// Rows of the Sylvester Hadamard matrix of order `P` (a power of two).
pub fn mos_hadamard(p: usize) -> Result<MosFamily> {
    if !p.is_power_of_two() {
        return Err(Error::InvalidParameter(format!(
            "Sylvester construction needs a power of two, got {p}"
        )));
    }
    let rows = (0..p)
        .map(|j| (0..p).map(|a| (j & a).count_ones() % 2).collect())
        .collect();
    MosFamily::new(PhaseAlphabet::BINARY, rows)
}

/// Cyclic family `π_k(x) = x + k mod M`, `k = 0..P-1`.
///
/// Column-disjoint because `(i1 - i2)·P ≡ k2 - k1 (mod M)` has no solution
/// when `0 < |k2 - k1| < P`.
pub fn default_permutation_family(m: usize, p: usize) -> Result<PermutationFamily> {
    check_block_width(m, p)?;
    let perms = (0..p)
        .map(|k| Permutation::from_zero_based((0..m).map(|x| (x + k) % m).collect()))
        .collect::<Result<_>>()?;
    PermutationFamily::new(perms, p)
}
