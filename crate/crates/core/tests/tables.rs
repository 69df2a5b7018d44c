//! Multiplicity tables below the stabilization threshold, including the
//! adjoint rows of every rank and the rank-two exceptional family. These
//! pin the Weyl-character pipeline on cases where no permutation oracle
//! exists.

use csp_lab_core::liechar::{frobenius_invariants, CartanType, RootSystem};
use csp_lab_core::qpoly::IntPolynomial;
use csp_lab_core::symfunc::Partition;
use std::collections::BTreeMap;

fn mults(entries: &[(&[usize], i64)]) -> BTreeMap<Partition, i64> {
    entries
        .iter()
        .map(|(p, m)| (Partition::new(p.to_vec()).unwrap(), *m))
        .collect()
}

fn poly(coeffs: &[i64]) -> IntPolynomial {
    IntPolynomial::from_coeffs(coeffs.to_vec())
}

#[test]
fn adjoint_rows_below_stabilization_at_r6() {
    let expected: [(usize, &[(&[usize], i64)]); 3] = [
        (
            2,
            &[
                (&[6], 2),
                (&[4, 2], 3),
                (&[3, 3], 1),
                (&[4, 1, 1], 2),
                (&[3, 2, 1], 2),
                (&[2, 2, 2], 3),
                (&[3, 1, 1, 1], 3),
                (&[2, 2, 1, 1], 1),
                (&[2, 1, 1, 1, 1], 1),
            ],
        ),
        (
            3,
            &[
                (&[6], 3),
                (&[5, 1], 1),
                (&[4, 2], 5),
                (&[3, 3], 1),
                (&[4, 1, 1], 3),
                (&[3, 2, 1], 4),
                (&[2, 2, 2], 5),
                (&[3, 1, 1, 1], 4),
                (&[2, 2, 1, 1], 2),
                (&[2, 1, 1, 1, 1], 2),
            ],
        ),
        (
            4,
            &[
                (&[6], 3),
                (&[5, 1], 1),
                (&[4, 2], 6),
                (&[3, 3], 1),
                (&[4, 1, 1], 4),
                (&[3, 2, 1], 4),
                (&[2, 2, 2], 5),
                (&[3, 1, 1, 1], 4),
                (&[2, 2, 1, 1], 2),
                (&[2, 1, 1, 1, 1], 2),
            ],
        ),
    ];
    for (rank, entries) in expected {
        let rs = RootSystem::new(CartanType::A(rank)).unwrap();
        let inv = frobenius_invariants(&rs, &rs.adjoint_weight(), 6).unwrap();
        assert_eq!(inv.schur, mults(entries), "rank {rank}");
    }
}

#[test]
fn adjoint_rows_below_stabilization_at_r5() {
    let expected: [(usize, &[(&[usize], i64)]); 2] = [
        (
            2,
            &[
                (&[5], 1),
                (&[4, 1], 1),
                (&[3, 2], 1),
                (&[3, 1, 1], 2),
                (&[2, 2, 1], 1),
                (&[2, 1, 1, 1], 1),
                (&[1, 1, 1, 1, 1], 1),
            ],
        ),
        (
            3,
            &[
                (&[5], 1),
                (&[4, 1], 1),
                (&[3, 2], 2),
                (&[3, 1, 1], 3),
                (&[2, 2, 1], 1),
                (&[2, 1, 1, 1], 1),
                (&[1, 1, 1, 1, 1], 1),
            ],
        ),
    ];
    for (rank, entries) in expected {
        let rs = RootSystem::new(CartanType::A(rank)).unwrap();
        let inv = frobenius_invariants(&rs, &rs.adjoint_weight(), 5).unwrap();
        assert_eq!(inv.schur, mults(entries), "rank {rank}");
    }
}

#[test]
fn g2_adjoint_rows() {
    let g2 = RootSystem::new(CartanType::G2).unwrap();
    let inv5 = frobenius_invariants(&g2, &g2.adjoint_weight(), 5).unwrap();
    assert_eq!(
        inv5.schur,
        mults(&[(&[3, 1, 1], 2), (&[2, 1, 1, 1], 1)])
    );
    let p5 = inv5.fake_degree();
    assert_eq!(p5, poly(&[0, 0, 0, 2, 2, 4, 3, 3, 1, 1]));
    assert_eq!(p5.reduce_cyclic(5).unwrap(), poly(&[4, 3, 3, 3, 3]));

    let inv6 = frobenius_invariants(&g2, &g2.adjoint_weight(), 6).unwrap();
    assert_eq!(
        inv6.schur,
        mults(&[
            (&[6], 2),
            (&[4, 2], 3),
            (&[3, 2, 1], 1),
            (&[3, 1, 1, 1], 1),
            (&[2, 2, 2], 4),
            (&[2, 1, 1, 1, 1], 1),
        ])
    );
    let p6 = inv6.fake_degree();
    assert_eq!(
        p6,
        poly(&[2, 0, 3, 3, 7, 5, 13, 7, 12, 8, 9, 3, 6, 1, 1])
    );
    assert_eq!(
        p6.reduce_cyclic(6).unwrap(),
        poly(&[21, 8, 16, 11, 16, 8])
    );
}

#[test]
fn symplectic_vector_invariants_at_r4() {
    for cartan in [CartanType::C(2), CartanType::C(3)] {
        let rs = RootSystem::new(cartan).unwrap();
        let w = rs.fundamental_weight(1).unwrap();
        let inv = frobenius_invariants(&rs, &w, 4).unwrap();
        assert_eq!(
            inv.schur,
            mults(&[(&[2, 2], 1), (&[1, 1, 1, 1], 1)]),
            "{}",
            cartan.label()
        );
        assert!(!inv.parity_even(), "{}", cartan.label());
    }
}

#[test]
fn g2_vector_seventh_power_dimension() {
    let g2 = RootSystem::new(CartanType::G2).unwrap();
    let inv = frobenius_invariants(&g2, &g2.fundamental_weight(1).unwrap(), 7).unwrap();
    assert_eq!(inv.invariants_dimension(), 120);
    assert!(inv.schur.values().all(|&m| m == 1));
    assert_eq!(inv.schur.len(), 7);
}
