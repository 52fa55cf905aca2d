//! Phase alphabets: the q-th roots of unity addressed by integer exponents.
//!
//! Every code in this crate stores exponents `k` rather than complex values.
//! The entry `k` over an alphabet of order `q` stands for `exp(2πi·k/q)`, so
//! multiplying entries is adding exponents and conjugation is negation, both
//! exact modulo `q`.

use num_complex::{Complex, Complex64};
use serde::{Deserialize, Serialize};
use std::f64::consts::TAU;

use crate::error::{Error, Result};

/// The alphabet of q-th roots of unity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct PhaseAlphabet(u32);

impl PhaseAlphabet {
    pub const BINARY: PhaseAlphabet = PhaseAlphabet(2);

    pub fn new(root_order: u32) -> Result<Self> {
        if root_order == 0 {
            return Err(Error::InvalidParameter(
                "root order must be at least 1".into(),
            ));
        }
        Ok(PhaseAlphabet(root_order))
    }

    pub fn root_order(self) -> u32 {
        self.0
    }

    pub fn is_binary(self) -> bool {
        self.0 == 2
    }

    /// Reduce an arbitrary integer exponent into `[0, q)`.
    pub fn reduce(self, phase: i64) -> u32 {
        phase.rem_euclid(self.0 as i64) as u32
    }

    /// `exp(2πi·phase/q)`.
    pub fn evaluate(self, phase: i64) -> Complex64 {
        let k = self.reduce(phase);
        // Snap the axis points so that q in {1, 2, 4} evaluates exactly.
        let q = self.0;
        if (4 * k).is_multiple_of(q) {
            return match (4 * k / q) % 4 {
                0 => Complex64::new(1.0, 0.0),
                1 => Complex64::new(0.0, 1.0),
                2 => Complex64::new(-1.0, 0.0),
                _ => Complex64::new(0.0, -1.0),
            };
        }
        Complex64::from_polar(1.0, TAU * k as f64 / q as f64)
    }

    /// Exact Gaussian-integer value of an exponent, available when every
    /// element of the alphabet is a power of `i` (that is, `q` divides 4).
    pub fn evaluate_exact(self, phase: i64) -> Option<Complex<i64>> {
        if 4 % self.0 != 0 {
            return None;
        }
        let quarter = (self.reduce(phase) * (4 / self.0)) % 4;
        Some(match quarter {
            0 => Complex::new(1, 0),
            1 => Complex::new(0, 1),
            2 => Complex::new(-1, 0),
            _ => Complex::new(0, -1),
        })
    }

    pub fn is_exact(self) -> bool {
        4 % self.0 == 0
    }

    /// The smallest alphabet containing both `self` and `other`.
    pub fn join(self, other: PhaseAlphabet) -> PhaseAlphabet {
        PhaseAlphabet(num_integer::lcm(self.0, other.0))
    }

    /// Factor that maps exponents over `self` onto exponents over `target`.
    /// Fails if `target` does not contain `self`.
    pub fn scale_into(self, target: PhaseAlphabet) -> Result<u32> {
        if !target.0.is_multiple_of(self.0) {
            return Err(Error::InvalidParameter(format!(
                "alphabet of order {} does not embed into order {}",
                self.0, target.0
            )));
        }
        Ok(target.0 / self.0)
    }
}

impl std::fmt::Display for PhaseAlphabet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "q={}", self.0)
    }
}

/// `Σ_{i=1}^{m} ζ^{s·i}` with `ζ = exp(2πi/m)`.
///
/// The sum vanishes whenever `m` does not divide `s` and equals `m` otherwise.
pub fn root_of_unity_sum(m: u32, s: i64) -> Result<Complex64> {
    if m < 2 {
        return Err(Error::InvalidParameter(format!(
            "root-of-unity sum needs m >= 2, got {m}"
        )));
    }
    let alphabet = PhaseAlphabet(m);
    Ok((1..=m as i64).map(|i| alphabet.evaluate(s * i)).sum())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn root_sums_small_cases() {
        assert!(root_of_unity_sum(2, 1).unwrap().norm() < 1e-12);
        assert_eq!(root_of_unity_sum(4, 4).unwrap(), Complex64::new(4.0, 0.0));
        assert!(root_of_unity_sum(5, 3).unwrap().norm() < 1e-12);
    }

    #[test]
    fn root_sum_rejects_m_below_two() {
        assert!(root_of_unity_sum(1, 1).is_err());
        assert!(root_of_unity_sum(0, 0).is_err());
    }

    #[test]
    fn evaluation_is_periodic() {
        let a = PhaseAlphabet::new(7).unwrap();
        for k in -20..20 {
            let d = a.evaluate(k) - a.evaluate(k.rem_euclid(7));
            assert!(d.norm() < 1e-15);
            assert!((a.evaluate(k).norm() - 1.0).abs() < 1e-15);
        }
    }

    #[test]
    fn exact_alphabets() {
        let q4 = PhaseAlphabet::new(4).unwrap();
        assert_eq!(q4.evaluate_exact(3), Some(Complex::new(0, -1)));
        assert_eq!(q4.evaluate(1), Complex64::new(0.0, 1.0));
        assert_eq!(PhaseAlphabet::new(3).unwrap().evaluate_exact(1), None);
        assert_eq!(
            PhaseAlphabet::new(1).unwrap().evaluate_exact(5),
            Some(Complex::new(1, 0))
        );
    }

    #[test]
    fn join_and_scale() {
        let a = PhaseAlphabet::new(4).unwrap();
        let b = PhaseAlphabet::new(6).unwrap();
        let j = a.join(b);
        assert_eq!(j.root_order(), 12);
        assert_eq!(a.scale_into(j).unwrap(), 3);
        assert!(j.scale_into(a).is_err());
        assert!(PhaseAlphabet::new(0).is_err());
    }
}
