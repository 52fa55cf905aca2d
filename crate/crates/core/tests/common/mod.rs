//! Brute-force correlation oracles built straight from the definitions.
//! They read phases only and never call into the correlation engine.
#![allow(dead_code)]

use num_complex::Complex64;
use std::f64::consts::PI;

use szccs::Code;

pub fn value(phase: u32, q: u32) -> Complex64 {
    let angle = 2.0 * PI * phase as f64 / q as f64;
    Complex64::new(angle.cos(), angle.sin())
}

pub fn matrix(c: &Code) -> Vec<Vec<Complex64>> {
    let q = c.alphabet().root_order();
    (0..c.rows())
        .map(|i| (0..c.cols()).map(|j| value(c.phase(i, j), q)).collect())
        .collect()
}

/// Aperiodic cross-correlation: sum every pair `(j, j + τ)` that lands
/// inside both rows.
pub fn accf(a: &Code, b: &Code, tau: i64) -> Complex64 {
    let (ma, mb) = (matrix(a), matrix(b));
    let n = a.cols() as i64;
    let mut acc = Complex64::new(0.0, 0.0);
    for i in 0..a.rows() {
        for j in 0..n {
            let k = j + tau;
            if (0..n).contains(&k) {
                acc += ma[i][j as usize] * mb[i][k as usize].conj();
            }
        }
    }
    acc
}

/// 2D periodic autocorrelation at one shift.
pub fn pacf(c: &Code, t1: usize, t2: usize) -> Complex64 {
    let m = matrix(c);
    let (rows, cols) = c.dims();
    let mut acc = Complex64::new(0.0, 0.0);
    for i in 0..rows {
        for j in 0..cols {
            acc += m[i][j] * m[(i + t1) % rows][(j + t2) % cols].conj();
        }
    }
    acc
}

/// Exhaustive CCC check from the definition.
pub fn is_ccc(codes: &[Code]) -> bool {
    let (m, n) = codes[0].dims();
    let tol = 1e-9 * (m * n) as f64;
    for (x, a) in codes.iter().enumerate() {
        for (y, b) in codes.iter().enumerate() {
            for tau in -(n as i64 - 1)..n as i64 {
                let expect = if x == y && tau == 0 {
                    (m * n) as f64
                } else {
                    0.0
                };
                if (accf(a, b, tau) - expect).norm() > tol {
                    return false;
                }
            }
        }
    }
    codes.len() == m
}

/// Column-disjointness scanned over every `(k1, k2, i1, i2, j)` tuple.
pub fn column_disjoint(perms: &[Vec<usize>], p: usize) -> bool {
    let s = perms[0].len() / p;
    for k1 in 0..perms.len() {
        for k2 in 0..perms.len() {
            if k1 == k2 {
                continue;
            }
            for i1 in 0..s {
                for i2 in 0..s {
                    for j in 0..p {
                        if perms[k1][i1 * p + j] == perms[k2][i2 * p + j] {
                            return false;
                        }
                    }
                }
            }
        }
    }
    true
}

pub fn random_code<R: rand::Rng>(rng: &mut R, m: usize, n: usize, q: u32) -> Code {
    let a = szccs::PhaseAlphabet::new(q).unwrap();
    let phases = (0..m * n).map(|_| rng.random_range(0..q)).collect();
    Code::new(m, n, a, phases).unwrap()
}
