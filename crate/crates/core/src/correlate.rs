//! Exhaustive correlation sums: the 2D periodic autocorrelation of a code and
//! the aperiodic cross-correlation sum (ACCF) of two equally sized codes.
//!
//! All shifts are 0-based. For the ACCF a positive shift `τ` pairs column `j`
//! of the first code with column `j + τ` of the second; a negative shift pairs
//! column `j + |τ|` of the first with column `j` of the second, so that
//! `accf(a, b, -τ) = conj(accf(b, a, τ))`.
//!
//! Values are accumulated in `f64`. When both alphabets divide 4 the same sums
//! are also accumulated over the Gaussian integers and zero tests use the
//! exact value.

use num_complex::{Complex, Complex64};
use num_traits::Num;
use std::ops::Neg;

use crate::code::{Code, PhaseSequence};
use crate::construct::r_concat;
use crate::error::{Error, Result};

/// Relative zero threshold: a value counts as zero iff `|v| <= 1e-9 · M · N`.
pub const ZERO_TOLERANCE: f64 = 1e-9;

/// Absolute zero threshold for codes with `m·n` entries.
pub fn zero_tolerance(m: usize, n: usize) -> f64 {
    ZERO_TOLERANCE * (m * n) as f64
}

/// A correlation value together with its exact Gaussian-integer counterpart
/// when the alphabet allows one.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Measurement {
    pub value: Complex64,
    pub exact: Option<Complex<i64>>,
}

impl Measurement {
    pub fn is_zero(&self, tolerance: f64) -> bool {
        match self.exact {
            Some(e) => e.re == 0 && e.im == 0,
            None => self.value.norm() <= tolerance,
        }
    }
}

fn pacf_at<T>(c: &[Complex<T>], m: usize, n: usize, t1: usize, t2: usize) -> Complex<T>
where
    T: Clone + Num + Neg<Output = T>,
{
    let mut acc = Complex::new(T::zero(), T::zero());
    for i in 0..m {
        let ii = (i + t1) % m;
        for j in 0..n {
            let jj = (j + t2) % n;
            acc = acc + c[i * n + j].clone() * c[ii * n + jj].conj();
        }
    }
    acc
}

fn accf_at<T>(a: &[Complex<T>], b: &[Complex<T>], m: usize, n: usize, tau: i64) -> Complex<T>
where
    T: Clone + Num + Neg<Output = T>,
{
    let shift = tau.unsigned_abs() as usize;
    let (da, db) = if tau >= 0 { (0, shift) } else { (shift, 0) };
    let mut acc = Complex::new(T::zero(), T::zero());
    for i in 0..m {
        let row = i * n;
        for j in 0..n - shift {
            acc = acc + a[row + j + da].clone() * b[row + j + db].conj();
        }
    }
    acc
}

/// Full 2D periodic autocorrelation grid, indexed by `(τ1 mod M, τ2 mod N)`.
#[derive(Debug, Clone, PartialEq)]
pub struct PacfGrid {
    rows: usize,
    cols: usize,
    values: Vec<Complex64>,
    exact: Option<Vec<Complex<i64>>>,
}

impl PacfGrid {
    pub fn dims(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    fn index(&self, t1: i64, t2: i64) -> usize {
        let r = t1.rem_euclid(self.rows as i64) as usize;
        let c = t2.rem_euclid(self.cols as i64) as usize;
        r * self.cols + c
    }

    /// Value at a (possibly negative or out-of-range) shift, wrapped.
    pub fn get(&self, t1: i64, t2: i64) -> Complex64 {
        self.values[self.index(t1, t2)]
    }

    pub fn measurement(&self, t1: i64, t2: i64) -> Measurement {
        let k = self.index(t1, t2);
        Measurement {
            value: self.values[k],
            exact: self.exact.as_ref().map(|e| e[k]),
        }
    }

    /// `(τ1, τ2, value)` in row-major shift order.
    pub fn iter(&self) -> impl Iterator<Item = (usize, usize, Complex64)> + '_ {
        self.values
            .iter()
            .enumerate()
            .map(move |(k, &v)| (k / self.cols, k % self.cols, v))
    }
}

/// 2D periodic autocorrelation over all `M·N` shifts.
pub fn pacf2d(code: &Code) -> PacfGrid {
    let (m, n) = code.dims();
    let flat = code.evaluate_flat();
    let exact = code.evaluate_exact();
    let mut values = Vec::with_capacity(m * n);
    let mut exact_values = exact.as_ref().map(|_| Vec::with_capacity(m * n));
    for t1 in 0..m {
        for t2 in 0..n {
            values.push(pacf_at(&flat, m, n, t1, t2));
            if let (Some(e), Some(out)) = (&exact, exact_values.as_mut()) {
                out.push(pacf_at(e, m, n, t1, t2));
            }
        }
    }
    PacfGrid {
        rows: m,
        cols: n,
        values,
        exact: exact_values,
    }
}

/// ACCF values for every shift `τ ∈ (-N, N)`.
#[derive(Debug, Clone, PartialEq)]
pub struct AccfVector {
    len: usize,
    values: Vec<Complex64>,
    exact: Option<Vec<Complex<i64>>>,
}

impl AccfVector {
    /// Code length `N`; shifts run over `-(N-1)..=N-1`.
    pub fn code_length(&self) -> usize {
        self.len
    }

    pub fn shifts(&self) -> std::ops::RangeInclusive<i64> {
        let n = self.len as i64;
        -(n - 1)..=n - 1
    }

    pub fn get(&self, tau: i64) -> Option<Complex64> {
        self.slot(tau).map(|k| self.values[k])
    }

    pub fn measurement(&self, tau: i64) -> Option<Measurement> {
        self.slot(tau).map(|k| Measurement {
            value: self.values[k],
            exact: self.exact.as_ref().map(|e| e[k]),
        })
    }

    fn slot(&self, tau: i64) -> Option<usize> {
        let n = self.len as i64;
        (tau.abs() < n).then(|| (tau + n - 1) as usize)
    }

    pub fn values(&self) -> &[Complex64] {
        &self.values
    }

    /// `(τ, value)` in increasing shift order.
    pub fn iter(&self) -> impl Iterator<Item = (i64, Complex64)> + '_ {
        self.shifts().zip(self.values.iter().copied())
    }
}

fn check_pair(a: &Code, b: &Code) -> Result<()> {
    if a.dims() != b.dims() {
        return Err(Error::DimensionMismatch {
            expected: a.dims(),
            found: b.dims(),
        });
    }
    Ok(())
}

fn check_shift(tau: i64, n: usize) -> Result<()> {
    if tau.unsigned_abs() as usize >= n {
        return Err(Error::ShiftOutOfRange { shift: tau, len: n });
    }
    Ok(())
}

/// Aperiodic cross-correlation sum of `a` and `b` at shift `tau`.
pub fn accf(a: &Code, b: &Code, tau: i64) -> Result<Complex64> {
    check_pair(a, b)?;
    check_shift(tau, a.cols())?;
    let (m, n) = a.dims();
    Ok(accf_at(&a.evaluate_flat(), &b.evaluate_flat(), m, n, tau))
}

/// [`accf`] accumulated over the Gaussian integers. `Ok(None)` when either
/// alphabet is not a divisor of 4.
pub fn accf_exact(a: &Code, b: &Code, tau: i64) -> Result<Option<Complex<i64>>> {
    check_pair(a, b)?;
    check_shift(tau, a.cols())?;
    let (m, n) = a.dims();
    Ok(match (a.evaluate_exact(), b.evaluate_exact()) {
        (Some(ea), Some(eb)) => Some(accf_at(&ea, &eb, m, n, tau)),
        _ => None,
    })
}

/// ACCF of `a` and `b` at every shift.
pub fn accf_vector(a: &Code, b: &Code) -> Result<AccfVector> {
    check_pair(a, b)?;
    Ok(Correlator::new(&[a.clone(), b.clone()])?.accf_vector(0, 1))
}

/// Aperiodic autocorrelation of `a` at every shift.
pub fn aacf(a: &Code) -> AccfVector {
    Correlator::new(std::slice::from_ref(a))
        .expect("single code")
        .accf_vector(0, 0)
}

/// Correlation engine over a fixed list of equally sized codes, evaluating
/// each code once.
#[derive(Debug, Clone)]
pub struct Correlator {
    rows: usize,
    cols: usize,
    float: Vec<Vec<Complex64>>,
    exact: Option<Vec<Vec<Complex<i64>>>>,
}

impl Correlator {
    pub fn new(codes: &[Code]) -> Result<Self> {
        let first = codes
            .first()
            .ok_or_else(|| Error::InvalidParameter("no codes to correlate".into()))?;
        for c in codes {
            check_pair(first, c)?;
        }
        Ok(Correlator {
            rows: first.rows(),
            cols: first.cols(),
            float: codes.iter().map(Code::evaluate_flat).collect(),
            exact: codes.iter().map(Code::evaluate_exact).collect(),
        })
    }

    pub fn len(&self) -> usize {
        self.float.len()
    }

    pub fn is_empty(&self) -> bool {
        self.float.is_empty()
    }

    pub fn dims(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn tolerance(&self) -> f64 {
        zero_tolerance(self.rows, self.cols)
    }

    /// ACCF of codes `x` and `y` at `tau`. Panics if `|tau| >= N`.
    pub fn accf(&self, x: usize, y: usize, tau: i64) -> Measurement {
        assert!(
            (tau.unsigned_abs() as usize) < self.cols,
            "shift out of range"
        );
        let (m, n) = (self.rows, self.cols);
        Measurement {
            value: accf_at(&self.float[x], &self.float[y], m, n, tau),
            exact: self
                .exact
                .as_ref()
                .map(|e| accf_at(&e[x], &e[y], m, n, tau)),
        }
    }

    pub fn accf_vector(&self, x: usize, y: usize) -> AccfVector {
        let n = self.cols as i64;
        let shifts = -(n - 1)..=n - 1;
        let ms: Vec<Measurement> = shifts.map(|t| self.accf(x, y, t)).collect();
        AccfVector {
            len: self.cols,
            values: ms.iter().map(|m| m.value).collect(),
            exact: ms.iter().map(|m| m.exact).collect(),
        }
    }
}

/// Checks the block decomposition of the ACCF of two concatenated codes.
///
/// With `B1 = R(A_1..A_P; b1)` and `B2 = R(C_1..C_P; b2)`, every shift
/// `τ = uN + v` (`-P <= u < P`, `0 <= v < N`, `|τ| < PN`) must satisfy
///
/// ```text
/// ACCF(B1,B2)(uN+v) = Σ_α b1_α conj(b2_{α+u})   ACCF(A_α, C_{α+u})(v)
///                   + Σ_α b1_α conj(b2_{α+u+1}) ACCF(A_α, C_{α+u+1})(v-N)
/// ```
///
/// where each sum runs over the `α` whose partner block exists and an ACCF
/// at shift `-N` is empty. The left side is the direct correlation of the
/// concatenated codes; the right side only touches the component codes.
pub fn accf_decomposition_check(
    codes_a: &[Code],
    codes_b: &[Code],
    b1: &PhaseSequence,
    b2: &PhaseSequence,
) -> Result<bool> {
    let p = codes_a.len();
    if p == 0 || codes_b.len() != p || b1.len() != p || b2.len() != p {
        return Err(Error::InvalidParameter(format!(
            "decomposition needs P codes and length-P sequences on both sides, got {}/{} codes and {}/{} signs",
            codes_a.len(),
            codes_b.len(),
            b1.len(),
            b2.len()
        )));
    }
    let all: Vec<Code> = codes_a.iter().chain(codes_b).cloned().collect();
    let components = Correlator::new(&all)?;
    let (m, n) = components.dims();

    let left = Correlator::new(&[r_concat(codes_a, b1)?, r_concat(codes_b, b2)?])?;
    let w1 = b1.evaluate();
    let w2 = b2.evaluate();
    let tol = zero_tolerance(m, n * p);

    let (pi, ni) = (p as i64, n as i64);
    for u in -pi..pi {
        for v in 0..ni {
            let tau = u * ni + v;
            if tau.abs() >= pi * ni {
                continue;
            }
            let lhs = left.accf(0, 1, tau).value;
            let mut rhs = Complex64::new(0.0, 0.0);
            for alpha in 0..pi {
                let same = alpha + u;
                if (0..pi).contains(&same) {
                    let c = components.accf(alpha as usize, p + same as usize, v).value;
                    rhs += w1[alpha as usize] * w2[same as usize].conj() * c;
                }
                let next = alpha + u + 1;
                if v > 0 && (0..pi).contains(&next) {
                    let c = components
                        .accf(alpha as usize, p + next as usize, v - ni)
                        .value;
                    rhs += w1[alpha as usize] * w2[next as usize].conj() * c;
                }
            }
            if (lhs - rhs).norm() > tol {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
