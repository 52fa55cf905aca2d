//! Per-operation examples, checked against the brute-force oracles in
//! `common` or against values frozen from them.

mod common;

use num_complex::Complex64;
use rand::{rngs::StdRng, seq::SliceRandom, SeedableRng};

use szccs::construct::{
    build_mccc_szccs, default_permutation_family, extend_ccc, mos_dft, mos_hadamard,
    mult_matrix_ccc, multiplication_matrix, multiplication_matrix_unchecked, r_concat,
    MultMatrixParams,
};
use szccs::correlate::{aacf, accf, accf_decomposition_check, pacf2d};
use szccs::io::fixtures;
use szccs::verify::{
    measure_symmetric_zone, verify_ccc, verify_mccc, verify_perfect_array, verify_szccs, Violation,
};
use szccs::{
    code_from_signs, root_of_unity_sum, CodeSet, Permutation, PermutationFamily, PhaseSequence,
};

fn params(m: usize, s: i64, x: i64) -> MultMatrixParams {
    MultMatrixParams::new(m, s, x).unwrap()
}

#[test]
fn root_sum_prime_order() {
    let direct: Complex64 = (1..=5).map(|i| common::value((3 * i) % 5, 5)).sum();
    assert!(direct.norm() < 1e-12);
    assert!(root_of_unity_sum(5, 3).unwrap().norm() < 1e-12);
}

#[test]
fn pacf_small_matrices() {
    let m2 = multiplication_matrix(params(2, 1, 0));
    let g = pacf2d(&m2);
    assert_eq!(g.get(0, 0), Complex64::new(4.0, 0.0));
    assert_eq!(common::pacf(&m2, 1, 1), Complex64::new(0.0, 0.0));
    assert!(g.get(1, 1).norm() < 1e-12);

    // gcd(4, 2) = 2: nonzero at every (even, even) shift
    let bad = multiplication_matrix_unchecked(4, 2, 0).unwrap();
    let g = pacf2d(&bad);
    for (t1, t2) in [(0, 0), (0, 2), (2, 0), (2, 2)] {
        assert!((common::pacf(&bad, t1, t2) - 16.0).norm() < 1e-9);
        assert!((g.get(t1 as i64, t2 as i64) - 16.0).norm() < 1e-9);
    }
    let v = verify_perfect_array(&bad);
    assert!(!v.passed);
    assert!(v.violations.iter().any(|x| matches!(
        x,
        Violation::Pacf { tau1: 0, tau2: 2, re, .. } if (re - 16.0).abs() < 1e-9
    )));
}

#[test]
fn prime_order_matrix_against_oracle() {
    let c = multiplication_matrix(params(5, 2, 3));
    let g = pacf2d(&c);
    for t1 in 0..5 {
        for t2 in 0..5 {
            let o = common::pacf(&c, t1, t2);
            assert!((g.get(t1 as i64, t2 as i64) - o).norm() < 1e-9);
            if (t1, t2) == (0, 0) {
                assert!((o - 25.0).norm() < 1e-9);
            } else {
                assert!(o.norm() < 1e-9 * 25.0);
            }
        }
    }
    assert!(verify_perfect_array(&multiplication_matrix(params(5, 2, 0))).passed);
}

#[test]
fn example_seed_accf() {
    let seed = fixtures::example1_seed();
    assert_eq!(
        accf(&seed[0], &seed[0], 0).unwrap(),
        Complex64::new(12.0, 0.0)
    );
    assert_eq!(
        accf(&seed[0], &seed[1], 0).unwrap(),
        Complex64::new(0.0, 0.0)
    );
    let v = aacf(&seed[0]);
    let frozen = [0.0, 0.0, 12.0, 0.0, 0.0];
    for ((tau, got), want) in v.iter().zip(frozen) {
        assert_eq!(got, Complex64::new(want, 0.0));
        assert!((common::accf(&seed[0], &seed[0], tau) - got).norm() < 1e-9);
    }
}

#[test]
fn decomposition_on_example_inputs() {
    let seed = fixtures::example1_seed();
    let mos = fixtures::example1_mos();
    let (b1, b2) = (mos.sequence(0), mos.sequence(1));
    let a = [seed[0].clone(), seed[1].clone()];
    let c = [seed[2].clone(), seed[3].clone()];
    assert!(accf_decomposition_check(&a, &c, &b1, &b2).unwrap());
    assert!(accf_decomposition_check(&a, &a, &b2, &b1).unwrap());
}

#[test]
fn decomposition_random_small() {
    let mut rng = StdRng::seed_from_u64(7);
    for _ in 0..20 {
        let codes: Vec<_> = (0..4)
            .map(|_| common::random_code(&mut rng, 2, 3, 5))
            .collect();
        let b1 = PhaseSequence::from_signs(if rand::Rng::random(&mut rng) {
            "+-"
        } else {
            "--"
        })
        .unwrap();
        let b2 = PhaseSequence::from_signs("++").unwrap();
        assert!(accf_decomposition_check(&codes[..2], &codes[2..], &b1, &b2).unwrap());
    }
}

#[test]
fn decomposition_degenerate_and_length_errors() {
    let c = code_from_signs("+-/-+").unwrap();
    let one = PhaseSequence::from_signs("+").unwrap();
    let cs = std::slice::from_ref(&c);
    assert!(accf_decomposition_check(cs, cs, &one, &one).unwrap());
    let two = PhaseSequence::from_signs("++").unwrap();
    assert!(accf_decomposition_check(cs, cs, &two, &one).is_err());
}

#[test]
fn row_shift_cccs() {
    let two = mult_matrix_ccc(params(2, 1, 0));
    assert_eq!(two[0], code_from_signs("++/+-").unwrap());
    assert_eq!(two[1], code_from_signs("+-/++").unwrap());
    assert!(common::is_ccc(two.codes()));
    assert!(verify_ccc(&two).passed);

    let four = mult_matrix_ccc(params(4, 1, 0));
    assert!(common::is_ccc(four.codes()));
    assert!(verify_ccc(&four).passed);

    assert!(MultMatrixParams::new(4, 2, 0).is_err());
}

#[test]
fn concatenation_matches_frozen_row() {
    let seed = fixtures::example1_seed();
    let b = PhaseSequence::from_signs("--").unwrap();
    let b1 = r_concat(&[seed[0].clone(), seed[1].clone()], &b).unwrap();
    assert_eq!(b1.to_sign_text().unwrap().lines().next(), Some("----+-"));
    assert_eq!(b1, fixtures::example1_szccs()[0]);
}

#[test]
fn extension_examples() {
    let seed = fixtures::example1_seed();
    let ext = extend_ccc(
        &seed,
        2,
        &fixtures::example1_mos(),
        &Permutation::identity(4),
    )
    .unwrap();
    assert_eq!(ext.codes(), &fixtures::example1_szccs().codes()[..4]);
    assert!(verify_ccc(&ext).passed);

    let full = extend_ccc(&seed, 4, &mos_dft(4).unwrap(), &Permutation::identity(4)).unwrap();
    assert_eq!(full.dims(), (4, 12));
    assert!(common::is_ccc(full.codes()));

    let three = mult_matrix_ccc(params(3, 1, 0));
    let ext3 = extend_ccc(&three, 3, &mos_dft(3).unwrap(), &Permutation::identity(3)).unwrap();
    assert_eq!(ext3.dims(), (3, 9));
    assert!(common::is_ccc(ext3.codes()));
}

#[test]
fn extension_errors() {
    let seed = fixtures::example1_seed();
    let id = Permutation::identity(4);
    assert!(extend_ccc(&seed, 3, &mos_dft(3).unwrap(), &id).is_err());
    assert!(extend_ccc(&seed, 2, &mos_dft(4).unwrap(), &id).is_err());
    let not_orth = szccs::MosFamily::from_signs(&["++", "++"]).unwrap();
    assert!(extend_ccc(&seed, 2, &not_orth, &id).is_err());
    let dup = CodeSet::new(vec![seed[0].clone(); 4]).unwrap();
    assert!(matches!(
        extend_ccc(&dup, 2, &mos_dft(2).unwrap(), &id),
        Err(szccs::Error::VerificationFailed { .. })
    ));
}

#[test]
fn bundle_examples() {
    let seed = fixtures::example1_seed();
    let bundle = build_mccc_szccs(
        &seed,
        2,
        &fixtures::example1_mos(),
        &fixtures::example1_perms().unwrap(),
        "example1",
    )
    .unwrap();
    assert_eq!(bundle.flatten(), fixtures::example1_szccs());

    let single = build_mccc_szccs(
        &seed,
        1,
        &mos_dft(1).unwrap(),
        &default_permutation_family(4, 1).unwrap(),
        "example1",
    )
    .unwrap();
    assert_eq!(single.sets, vec![seed.clone()]);

    let m4 = mult_matrix_ccc(params(4, 1, 0));
    let b = build_mccc_szccs(
        &m4,
        2,
        &mos_dft(2).unwrap(),
        &default_permutation_family(4, 2).unwrap(),
        "m4",
    )
    .unwrap();
    let flat = b.flatten();
    assert_eq!((flat.len(), flat.dims()), (8, (4, 8)));
    let v = verify_szccs(&flat, 3).unwrap();
    assert!(v.passed);
    assert_eq!(v.parameters.optimal, Some(true));
}

#[test]
fn bundle_rejects_clashing_family() {
    let seed = fixtures::example1_seed();
    let clash = PermutationFamily::new(
        vec![
            Permutation::from_one_based(&[1, 2, 3, 4]).unwrap(),
            Permutation::from_one_based(&[3, 2, 1, 4]).unwrap(),
        ],
        2,
    )
    .unwrap();
    let err = build_mccc_szccs(&seed, 2, &mos_dft(2).unwrap(), &clash, "x").unwrap_err();
    assert!(matches!(
        err,
        szccs::Error::PermutationClash {
            k1: 0,
            k2: 1,
            j: 1,
            value: 3,
            ..
        }
    ));
}

#[test]
fn sign_families() {
    let d3 = mos_dft(3).unwrap();
    for j1 in 0..3 {
        for j2 in 0..3 {
            let ip: Complex64 = (0..3)
                .map(|a| {
                    common::value(d3.sequences()[j1][a], 3)
                        * common::value(d3.sequences()[j2][a], 3).conj()
                })
                .sum();
            let want = if j1 == j2 { 3.0 } else { 0.0 };
            assert!((ip - want).norm() < 1e-12);
        }
    }
    let h4 = mos_hadamard(4).unwrap();
    for j1 in 0..4 {
        for j2 in j1 + 1..4 {
            let dot: i32 = (0..4)
                .map(|a| {
                    if h4.sequences()[j1][a] == h4.sequences()[j2][a] {
                        1
                    } else {
                        -1
                    }
                })
                .sum();
            assert_eq!(dot, 0);
        }
    }
}

#[test]
fn cyclic_families_against_brute_force() {
    for (m, p) in [(4, 2), (6, 3), (6, 2), (8, 4), (5, 1)] {
        let f = default_permutation_family(m, p).unwrap();
        let raw: Vec<Vec<usize>> = f.perms().iter().map(|x| x.images().to_vec()).collect();
        assert!(common::column_disjoint(&raw, p));
        assert!(f.is_column_disjoint());
    }
    let f = default_permutation_family(4, 2).unwrap();
    assert_eq!(f.perms()[1].to_one_based(), vec![2, 3, 4, 1]);
}

#[test]
fn random_families_agree_with_brute_force() {
    let mut rng = StdRng::seed_from_u64(11);
    for _ in 0..300 {
        let p = [2, 3][rand::Rng::random_range(&mut rng, 0..2)];
        let m = p * rand::Rng::random_range(&mut rng, 1..4);
        let perms: Vec<Vec<usize>> = (0..p)
            .map(|_| {
                let mut v: Vec<usize> = (0..m).collect();
                v.shuffle(&mut rng);
                v
            })
            .collect();
        let fam = PermutationFamily::new(
            perms
                .iter()
                .map(|v| Permutation::from_zero_based(v.clone()).unwrap())
                .collect(),
            p,
        )
        .unwrap();
        assert_eq!(fam.is_column_disjoint(), common::column_disjoint(&perms, p));
    }
}

#[test]
fn bundle_verdicts() {
    let all = fixtures::example1_szccs();
    let v2 = verify_szccs(&all, 2).unwrap();
    assert!(v2.passed);
    assert_eq!(v2.parameters.optimal, Some(true));

    let v3 = verify_szccs(&all, 3).unwrap();
    assert!(!v3.passed);
    assert!(v3
        .violations
        .iter()
        .all(|v| matches!(v, Violation::Accf { tau, .. } if tau.abs() == 3)));

    assert_eq!(measure_symmetric_zone(&all), 2);
    assert_eq!(measure_symmetric_zone(&fixtures::example1_seed()), 2);

    let sets = fixtures::example1_sets();
    assert!(verify_mccc(&sets, 3).unwrap().passed);
    let v4 = verify_mccc(&sets, 4).unwrap();
    assert!(!v4.passed);
    assert!(v4
        .violations
        .iter()
        .all(|v| matches!(v, Violation::Accf { tau, .. } if tau.abs() == 3)));
    let same = verify_mccc(&[sets[0].clone(), sets[0].clone()], 1).unwrap();
    assert!(same
        .violations
        .iter()
        .any(|v| matches!(v, Violation::Accf { tau: 0, .. })));
}

#[test]
fn cross_set_values_frozen() {
    let all = fixtures::example1_szccs();
    // values from an independent summation
    let cases = [
        (0, 4, -3, 12.0),
        (0, 4, 3, 12.0),
        (1, 4, -3, 12.0),
        (1, 4, 3, -12.0),
        (3, 7, 3, -12.0),
    ];
    for (x, y, tau, want) in cases {
        assert_eq!(
            accf(&all[x], &all[y], tau).unwrap(),
            Complex64::new(want, 0.0)
        );
        assert!((common::accf(&all[x], &all[y], tau) - want).norm() < 1e-9);
    }
}
