//! Exhaustive certifiers for perfect arrays, Golay complementary sets, CCCs,
//! symmetrical ZCCSs, MCCCs, orthogonal sign families and permutation
//! families.
//!
//! Each certifier scans every relevant (code pair, shift) and returns a
//! [`Verdict`] listing the violating shifts with their values.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use std::fmt;

use crate::code::{Code, CodeSet};
use crate::correlate::{pacf2d, zero_tolerance, Correlator, Measurement};
use crate::error::{Error, Result};
use crate::family::{MosFamily, PermutationFamily, ZoneSpec};

/// At most this many violations are listed; `violation_count` keeps the total.
pub const MAX_LISTED_VIOLATIONS: usize = 256;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Property {
    PerfectArray,
    Gcs,
    Ccc,
    Szccs,
    Mccc,
    Mos,
    PermFamily,
}

impl fmt::Display for Property {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Property::PerfectArray => "perfect array",
            Property::Gcs => "GCS",
            Property::Ccc => "CCC",
            Property::Szccs => "symmetrical ZCCS",
            Property::Mccc => "MCCC",
            Property::Mos => "mutually orthogonal sequences",
            Property::PermFamily => "permutation family",
        })
    }
}

/// One failed condition.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Violation {
    /// Off-peak (or wrong peak) periodic autocorrelation value.
    Pacf {
        code: usize,
        tau1: usize,
        tau2: usize,
        re: f64,
        im: f64,
        magnitude: f64,
    },
    /// Aperiodic correlation between codes `codes[0]` and `codes[1]` at `tau`.
    Accf {
        codes: [usize; 2],
        tau: i64,
        re: f64,
        im: f64,
        magnitude: f64,
    },
    /// Nonzero inner product of two sign sequences.
    Orthogonality {
        sequences: [usize; 2],
        re: f64,
        im: f64,
        magnitude: f64,
    },
    /// `π_{k1}(i1·P + j) = π_{k2}(i2·P + j) = value`.
    PermutationClash {
        k1: usize,
        k2: usize,
        i1: usize,
        i2: usize,
        j: usize,
        value: usize,
    },
    /// Structural parameter mismatch, e.g. set size differing from flock size.
    Parameter {
        name: String,
        expected: String,
        found: String,
    },
}

impl Violation {
    fn accf(x: usize, y: usize, tau: i64, v: Complex64) -> Self {
        Violation::Accf {
            codes: [x, y],
            tau,
            re: v.re,
            im: v.im,
            magnitude: v.norm(),
        }
    }

    /// Complex value carried by a correlation or orthogonality violation.
    pub fn value(&self) -> Option<Complex64> {
        match *self {
            Violation::Pacf { re, im, .. }
            | Violation::Accf { re, im, .. }
            | Violation::Orthogonality { re, im, .. } => Some(Complex64::new(re, im)),
            _ => None,
        }
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::Pacf {
                code,
                tau1,
                tau2,
                re,
                im,
                ..
            } => write!(f, "PACF(C{code})({tau1},{tau2}) = {re}{im:+}i"),
            Violation::Accf {
                codes, tau, re, im, ..
            } => write!(f, "ACCF(C{},C{})({tau}) = {re}{im:+}i", codes[0], codes[1]),
            Violation::Orthogonality {
                sequences, re, im, ..
            } => write!(f, "<b{}, b{}> = {re}{im:+}i", sequences[0], sequences[1]),
            Violation::PermutationClash {
                k1,
                k2,
                i1,
                i2,
                j,
                value,
            } => write!(f, "pi_{k1}({i1}*P+{j}) = pi_{k2}({i2}*P+{j}) = {value}"),
            Violation::Parameter {
                name,
                expected,
                found,
            } => write!(f, "{name}: expected {expected}, found {found}"),
        }
    }
}

/// Parameters of the object under test, plus measured quantities.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct Parameters {
    /// Number of codes (or sets, for an MCCC; sequences, for a MOS family).
    pub k: usize,
    pub m: usize,
    pub n: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub z: Option<usize>,
    /// `K = ⌊MN/(Z+1)⌋` for a symmetrical ZCCS.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub optimal: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub measured_zone: Option<i64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Verdict {
    pub property: Property,
    pub passed: bool,
    pub parameters: Parameters,
    pub violation_count: usize,
    pub violations: Vec<Violation>,
}

impl Verdict {
    fn new(property: Property, parameters: Parameters) -> Self {
        Verdict {
            property,
            passed: true,
            parameters,
            violation_count: 0,
            violations: Vec::new(),
        }
    }

    fn push(&mut self, v: Violation) {
        self.passed = false;
        self.violation_count += 1;
        if self.violations.len() < MAX_LISTED_VIOLATIONS {
            self.violations.push(v);
        }
    }

    /// One-line human summary.
    pub fn summary(&self) -> String {
        if self.passed {
            return format!("{} passed", self.property);
        }
        let first = self
            .violations
            .first()
            .map(ToString::to_string)
            .unwrap_or_default();
        format!(
            "{} failed with {} violation(s); first: {first}",
            self.property, self.violation_count
        )
    }
}

fn off(m: &Measurement, tol: f64) -> bool {
    !m.is_zero(tol)
}

/// Perfect array: PACF equals `MN` at `(0, 0)` and vanishes elsewhere.
pub fn verify_perfect_array(code: &Code) -> Verdict {
    let (m, n) = code.dims();
    let tol = zero_tolerance(m, n);
    let grid = pacf2d(code);
    let mut verdict = Verdict::new(
        Property::PerfectArray,
        Parameters {
            k: 1,
            m,
            n,
            ..Default::default()
        },
    );
    let peak = (m * n) as f64;
    for t1 in 0..m {
        for t2 in 0..n {
            let meas = grid.measurement(t1 as i64, t2 as i64);
            let bad = if (t1, t2) == (0, 0) {
                match meas.exact {
                    Some(e) => e.re != (m * n) as i64 || e.im != 0,
                    None => (meas.value - peak).norm() > tol,
                }
            } else {
                off(&meas, tol)
            };
            if bad {
                let v = meas.value;
                verdict.push(Violation::Pacf {
                    code: 0,
                    tau1: t1,
                    tau2: t2,
                    re: v.re,
                    im: v.im,
                    magnitude: v.norm(),
                });
            }
        }
    }
    verdict
}

/// Aperiodic autocorrelation of code `x` must vanish at every `τ` with
/// `0 < τ < N` satisfying `keep(τ)`. Negative shifts mirror positive ones.
fn scan_auto(c: &Correlator, x: usize, keep: impl Fn(usize) -> bool, v: &mut Verdict) {
    let tol = c.tolerance();
    let n = c.dims().1;
    for t in (1..n).filter(|&t| keep(t)) {
        let meas = c.accf(x, x, t as i64);
        if off(&meas, tol) {
            v.push(Violation::accf(x, x, t as i64, meas.value));
        }
    }
}

/// Cross-correlation of `x` and `y` must vanish at every `τ` with
/// `keep(|τ|)`, both signs.
fn scan_cross(
    c: &Correlator,
    (x, y): (usize, usize),
    labels: (usize, usize),
    keep: impl Fn(usize) -> bool,
    v: &mut Verdict,
) {
    let tol = c.tolerance();
    let n = c.dims().1 as i64;
    for t in (-(n - 1)..n).filter(|t| keep(t.unsigned_abs() as usize)) {
        let meas = c.accf(x, y, t);
        if off(&meas, tol) {
            v.push(Violation::accf(labels.0, labels.1, t, meas.value));
        }
    }
}

/// Golay complementary set: the summed row autocorrelation of a code vanishes
/// at every nonzero shift.
pub fn verify_gcs(code: &Code) -> Verdict {
    let (m, n) = code.dims();
    let c = Correlator::new(std::slice::from_ref(code)).expect("single code");
    let mut verdict = Verdict::new(
        Property::Gcs,
        Parameters {
            k: 1,
            m,
            n,
            ..Default::default()
        },
    );
    scan_auto(&c, 0, |_| true, &mut verdict);
    verdict
}

fn ccc_scan(c: &Correlator, offset: usize, verdict: &mut Verdict) {
    let k = c.len();
    for x in 0..k {
        scan_auto(c, x, |_| true, verdict);
        for y in x + 1..k {
            scan_cross(c, (x, y), (offset + x, offset + y), |_| true, verdict);
        }
    }
}

/// `(M, N)`-CCC: `M` codes of `M` rows, each a GCS, pairwise complementary
/// mates at every shift.
///
/// Shifts are scanned over unordered pairs; the mirrored ordered pair at
/// `-τ` is the conjugate and carries no new information.
pub fn verify_ccc(set: &CodeSet) -> Verdict {
    let (m, n) = set.dims();
    let mut verdict = Verdict::new(
        Property::Ccc,
        Parameters {
            k: set.len(),
            m,
            n,
            ..Default::default()
        },
    );
    if set.len() != m {
        verdict.push(Violation::Parameter {
            name: "set size K (must equal flock size M)".into(),
            expected: m.to_string(),
            found: set.len().to_string(),
        });
    }
    let c = Correlator::new(set.codes()).expect("code sets are homogeneous");
    ccc_scan(&c, 0, &mut verdict);
    verdict
}

/// Symmetrical `(K, M, N, Z)`-ZCCS: autocorrelations vanish for
/// `|τ| ∈ T1 ∪ T2` and cross-correlations for `|τ| ∈ T1 ∪ T2 ∪ {0}`.
/// The verdict also records whether `K = ⌊MN/(Z+1)⌋`.
pub fn verify_szccs(set: &CodeSet, z: usize) -> Result<Verdict> {
    let (m, n) = set.dims();
    let zone = ZoneSpec::new(z, n)?;
    let k = set.len();
    let mut verdict = Verdict::new(
        Property::Szccs,
        Parameters {
            k,
            m,
            n,
            z: Some(z),
            optimal: Some(k == m * n / (z + 1)),
            measured_zone: None,
        },
    );
    let c = Correlator::new(set.codes())?;
    for x in 0..k {
        scan_auto(&c, x, |t| zone.contains(t), &mut verdict);
        for y in x + 1..k {
            scan_cross(
                &c,
                (x, y),
                (x, y),
                |t| t == 0 || zone.contains(t),
                &mut verdict,
            );
        }
    }
    Ok(verdict)
}

/// `(K, M, N, Z)`-MCCC: every set is an `(M, N)`-CCC and codes from distinct
/// sets have zero cross-correlation for `|τ| < Z`.
///
/// Code indices in violations are positions in the set-major concatenation.
pub fn verify_mccc(sets: &[CodeSet], z: usize) -> Result<Verdict> {
    if sets.len() < 2 {
        return Err(Error::InvalidParameter(format!(
            "an MCCC needs at least two sets, got {}",
            sets.len()
        )));
    }
    let all: Vec<Code> = sets.iter().flat_map(|s| s.iter().cloned()).collect();
    let c = Correlator::new(&all)?;
    let (m, n) = c.dims();
    let mut verdict = Verdict::new(
        Property::Mccc,
        Parameters {
            k: sets.len(),
            m,
            n,
            z: Some(z),
            ..Default::default()
        },
    );
    let mut starts = Vec::with_capacity(sets.len());
    let mut offset = 0;
    for (idx, set) in sets.iter().enumerate() {
        if set.len() != m {
            verdict.push(Violation::Parameter {
                name: format!("size of set {idx} (must equal flock size M)"),
                expected: m.to_string(),
                found: set.len().to_string(),
            });
        }
        let local = Correlator::new(set.codes())?;
        ccc_scan(&local, offset, &mut verdict);
        starts.push(offset);
        offset += set.len();
    }
    for (a, sa) in sets.iter().enumerate() {
        for (b, sb) in sets.iter().enumerate().skip(a + 1) {
            for x in 0..sa.len() {
                for y in 0..sb.len() {
                    let (gx, gy) = (starts[a] + x, starts[b] + y);
                    scan_cross(&c, (gx, gy), (gx, gy), |t| t < z, &mut verdict);
                }
            }
        }
    }
    Ok(verdict)
}

/// Largest `Z ∈ [0, N-1]` for which the set is a symmetrical ZCCS, or `-1`
/// when some pair already correlates at `τ = 0`.
pub fn measure_symmetric_zone(set: &CodeSet) -> i64 {
    let (_, n) = set.dims();
    let c = Correlator::new(set.codes()).expect("code sets are homogeneous");
    let tol = c.tolerance();
    let k = set.len();
    // dirty[t]: some correlation required to vanish at |τ| = t does not.
    let mut dirty = vec![false; n];
    for x in 0..k {
        for (t, d) in dirty.iter_mut().enumerate().skip(1) {
            *d |= off(&c.accf(x, x, t as i64), tol);
        }
        for y in x + 1..k {
            for t in -(n as i64 - 1)..n as i64 {
                let a = t.unsigned_abs() as usize;
                if !dirty[a] {
                    dirty[a] = off(&c.accf(x, y, t), tol);
                }
            }
        }
    }
    if dirty[0] {
        return -1;
    }
    let mut best = 0;
    for z in 1..n {
        let zone = ZoneSpec::new(z, n).expect("z < n");
        if (1..n).any(|t| zone.contains(t) && dirty[t]) {
            break;
        }
        best = z;
    }
    best as i64
}

/// Pairwise orthogonality of a sign family.
pub fn verify_mos(mos: &MosFamily) -> Verdict {
    let p = mos.len();
    let tol = zero_tolerance(1, p);
    let mut verdict = Verdict::new(
        Property::Mos,
        Parameters {
            k: p,
            m: 1,
            n: p,
            ..Default::default()
        },
    );
    for j1 in 0..p {
        for j2 in j1 + 1..p {
            let meas = Measurement {
                value: mos.inner_product(j1, j2),
                exact: mos.inner_product_exact(j1, j2),
            };
            if off(&meas, tol) {
                verdict.push(Violation::Orthogonality {
                    sequences: [j1, j2],
                    re: meas.value.re,
                    im: meas.value.im,
                    magnitude: meas.value.norm(),
                });
            }
        }
    }
    verdict
}

/// Column-disjointness of a permutation family.
pub fn verify_permutation_family(family: &PermutationFamily) -> Verdict {
    let mut verdict = Verdict::new(
        Property::PermFamily,
        Parameters {
            k: family.perms().len(),
            m: family.degree(),
            n: family.block_width(),
            ..Default::default()
        },
    );
    for c in family.clashes() {
        verdict.push(Violation::PermutationClash {
            k1: c.k1,
            k2: c.k2,
            i1: c.i1,
            i2: c.i2,
            j: c.j,
            value: c.value,
        });
    }
    verdict
}
