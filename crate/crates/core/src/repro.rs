//! Reproduction suite: one row per published table, shared by the
//! `csp-lab repro` subcommand and the acceptance tests.
//!
//! Every expected value below is pinned exactly; rows fail on the first
//! coefficient that differs and report both sides.

use crate::crystal::{builtin, Builtin};
use crate::csp::{verify_csp, FiniteAction};
use crate::diagrams::{
    all_tl_diagrams, conj_long_cycle, derangement_conjugation_character, derangements_enumerate,
    jdt_promote, matchings_cycle_type_character, matchings_enumerate, rotate_matching, rotate_tl,
    tl_long_cycle_matrix, tl_to_word, RectTableau,
};
use crate::liechar::{frobenius_invariants, CartanType, RootSystem};
use crate::qpoly::{q_factorial, IntPolynomial};
use crate::symfunc::{
    dim_partition, fake_degree, fake_degree_maj, fake_degree_module, matchings_schur_sum,
    partitions_of, q_rencontre, rencontre_series, Basis, Partition, SymFunc,
};
use std::collections::BTreeMap;
use std::time::{Duration, Instant};

pub struct ReproRow {
    pub key: &'static str,
    pub title: &'static str,
    pub pass: bool,
    pub details: Vec<String>,
    pub failures: Vec<String>,
    pub elapsed: Duration,
    pub limit: Duration,
}

impl ReproRow {
    /// Status line with the measured runtime, for interactive runs.
    pub fn status_line(&self) -> String {
        format!(
            "{} ({:.2}s)",
            self.status_line_untimed(),
            self.elapsed.as_secs_f64()
        )
    }

    /// Status line without timing; report files must be reproducible
    /// byte for byte.
    pub fn status_line_untimed(&self) -> String {
        format!(
            "{}  {:22} {}",
            if self.pass { "PASS" } else { "FAIL" },
            self.key,
            self.title,
        )
    }
}

#[derive(Default)]
struct Check {
    details: Vec<String>,
    failures: Vec<String>,
}

impl Check {
    fn eq<T: PartialEq + std::fmt::Debug>(&mut self, label: &str, got: T, want: T) {
        if got == want {
            self.details.push(format!("{label}: ok"));
        } else {
            self.failures
                .push(format!("{label}: got {got:?}, expected {want:?}"));
        }
    }

    fn assert(&mut self, label: &str, cond: bool) {
        if cond {
            self.details.push(format!("{label}: ok"));
        } else {
            self.failures.push(format!("{label}: failed"));
        }
    }

    fn note(&mut self, line: String) {
        self.details.push(line);
    }

    fn error(&mut self, label: &str, err: impl std::fmt::Display) {
        self.failures.push(format!("{label}: error: {err}"));
    }
}

fn poly(coeffs: &[i64]) -> IntPolynomial {
    IntPolynomial::from_coeffs(coeffs.to_vec())
}

fn pt(parts: &[usize]) -> Partition {
    Partition::new(parts.to_vec()).expect("valid partition literal")
}

fn mults(entries: &[(&[usize], i64)]) -> BTreeMap<Partition, i64> {
    entries.iter().map(|(p, m)| (pt(p), *m)).collect()
}

fn counts(entries: &[(usize, usize)]) -> BTreeMap<usize, usize> {
    entries.iter().copied().collect()
}

/// Rotation action on Temperley-Lieb diagrams, order `2r`.
pub fn tl_rotation_action(r: usize) -> Result<FiniteAction, String> {
    FiniteAction::from_step(all_tl_diagrams(r), rotate_tl, 2 * r, |d| d.to_string())
        .map_err(|e| e.to_string())
}

/// Rotation action on perfect matchings, order `2r`.
pub fn matchings_rotation_action(r: usize) -> Result<FiniteAction, String> {
    let items = matchings_enumerate(r).map_err(|e| e.to_string())?;
    FiniteAction::from_step(items, rotate_matching, 2 * r, |m| m.to_string())
        .map_err(|e| e.to_string())
}

/// Conjugation by the long cycle on derangements, order `n`.
pub fn derangements_conjugation_action(n: usize) -> Result<FiniteAction, String> {
    let items = derangements_enumerate(n).map_err(|e| e.to_string())?;
    FiniteAction::from_step(items, conj_long_cycle, n, |p| p.to_string()).map_err(|e| e.to_string())
}

/// Partitions of `r` into at most three parts whose zero-padding to three
/// parts has uniform parity: the conjectured Frobenius support of the
/// three-dimensional module's invariants.
pub fn riordan_support(r: usize) -> BTreeMap<Partition, i64> {
    partitions_of(r)
        .into_iter()
        .filter(|p| {
            if p.len() > 3 {
                return false;
            }
            let mut padded = p.parts().to_vec();
            padded.resize(3, 0);
            padded.iter().all(|x| x % 2 == 0) || padded.iter().all(|x| x % 2 == 1)
        })
        .map(|p| (p, 1))
        .collect()
}

/// Printed adjoint multiplicity rows, stabilized at `n >= r`.
pub fn adjoint_stabilized_mults(r: usize) -> Option<BTreeMap<Partition, i64>> {
    match r {
        2 => Some(mults(&[(&[2], 1)])),
        3 => Some(mults(&[(&[3], 1), (&[1, 1, 1], 1)])),
        4 => Some(mults(&[(&[4], 2), (&[2, 2], 2), (&[2, 1, 1], 1)])),
        5 => Some(mults(&[
            (&[5], 2),
            (&[4, 1], 1),
            (&[3, 2], 2),
            (&[3, 1, 1], 3),
            (&[2, 2, 1], 1),
            (&[2, 1, 1, 1], 1),
            (&[1, 1, 1, 1, 1], 1),
        ])),
        6 => Some(mults(&[
            (&[6], 4),
            (&[5, 1], 1),
            (&[4, 2], 6),
            (&[3, 3], 1),
            (&[4, 1, 1], 4),
            (&[3, 2, 1], 4),
            (&[2, 2, 2], 5),
            (&[3, 1, 1, 1], 4),
            (&[2, 2, 1, 1], 2),
            (&[2, 1, 1, 1, 1], 2),
        ])),
        _ => None,
    }
}

/// Printed multiplicity tables for the seven-dimensional module.
pub fn g2_vector_mults(r: usize) -> Option<BTreeMap<Partition, i64>> {
    match r {
        2 => Some(mults(&[(&[2], 1)])),
        3 => Some(mults(&[(&[1, 1, 1], 1)])),
        4 => Some(mults(&[(&[4], 1), (&[2, 2], 1), (&[1, 1, 1, 1], 1)])),
        5 => Some(mults(&[(&[3, 1, 1], 1), (&[2, 1, 1, 1], 1)])),
        6 => Some(mults(&[
            (&[6], 1),
            (&[4, 2], 1),
            (&[3, 1, 1, 1], 1),
            (&[2, 2, 2], 2),
            (&[2, 1, 1, 1, 1], 1),
        ])),
        _ => None,
    }
}

/// Printed multiplicity table for the spin module at `r = 6`.
pub fn spin_mults_r6() -> BTreeMap<Partition, i64> {
    mults(&[
        (&[6], 1),
        (&[4, 2], 1),
        (&[3, 1, 1, 1], 1),
        (&[2, 2, 2], 1),
        (&[2, 1, 1, 1, 1], 1),
    ])
}

fn row_tl_fakedeg(c: &mut Check) {
    let polys: [&[i64]; 4] = [
        &[1],
        &[1],
        &[0, 0, 1, 0, 1],
        &[0, 0, 0, 0, 0, 0, 1, 0, 1, 1, 1, 0, 1],
    ];
    // the r = 3 reduction is recomputed: the orbit structure (one orbit of
    // order two, one of order three) pins the constant term at 2
    let reductions: [&[i64]; 4] = [&[1], &[1], &[1, 0, 1], &[2, 0, 1, 1, 1]];
    for r in 0..=3usize {
        let shape = Partition::new(vec![2; r]).expect("column of twos");
        let f = fake_degree(&shape);
        c.eq(&format!("fake degree of 2^{r}"), f.clone(), poly(polys[r]));
        let n = (2 * r).max(1);
        c.eq(
            &format!("reduction mod q^{n}-1 at r={r}"),
            f.reduce_cyclic(n).expect("n >= 1"),
            poly(reductions[r]),
        );
    }
}

fn row_tl_csp(c: &mut Check) {
    for r in 1..=6usize {
        let shape = Partition::new(vec![2; r]).expect("column of twos");
        let p = fake_degree(&shape);
        match tl_rotation_action(r) {
            Ok(action) => match verify_csp(&action, &p) {
                Ok(v) => {
                    c.assert(&format!("csp for rotation at r={r}"), v.pass);
                    if r == 3 {
                        c.eq(
                            "orbit structure at r=3",
                            v.report.counts().clone(),
                            counts(&[(3, 1), (2, 1)]),
                        );
                    }
                }
                Err(e) => c.error(&format!("verify at r={r}"), e),
            },
            Err(e) => c.error(&format!("action at r={r}"), e),
        }
    }
}

fn row_riordan_counts(c: &mut Check, budget: u64) {
    let expected = [1usize, 0, 1, 1, 3, 6, 15, 36, 91, 232];
    match builtin(Builtin::Sl2(2)) {
        Ok(x) => {
            for (r, &n) in expected.iter().enumerate() {
                match x.enumerate_invariants(r, budget) {
                    Ok(words) => c.eq(&format!("invariant count at r={r}"), words.len(), n),
                    Err(e) => c.error(&format!("enumeration at r={r}"), e),
                }
            }
        }
        Err(e) => c.error("sl2(2) crystal", e),
    }
}

fn row_riordan_conjecture(c: &mut Check, budget: u64) {
    let a1 = match RootSystem::new(CartanType::A(1)) {
        Ok(rs) => rs,
        Err(e) => return c.error("root system A1", e),
    };
    let crystal = match builtin(Builtin::Sl2(2)) {
        Ok(x) => x,
        Err(e) => return c.error("sl2(2) crystal", e),
    };
    for r in 1..=5usize {
        let inv = match frobenius_invariants(&a1, &vec![2, 0], r) {
            Ok(inv) => inv,
            Err(e) => {
                c.error(&format!("invariants at r={r}"), e);
                continue;
            }
        };
        c.eq(
            &format!("Frobenius support at r={r}"),
            inv.schur.clone(),
            riordan_support(r),
        );
        c.assert(&format!("untwisted parity at r={r}"), inv.parity_even());
        let p = inv.fake_degree();
        match crystal.promotion_action(r, budget) {
            Ok(action) => match verify_csp(&action, &p) {
                Ok(v) => {
                    c.assert(&format!("csp for promotion at r={r}"), v.pass);
                    if v.pass {
                        c.note(format!("CONJECTURE-CONFIRMED r={r}: P = {p}"));
                    }
                }
                Err(e) => c.error(&format!("verify at r={r}"), e),
            },
            Err(e) => c.error(&format!("promotion action at r={r}"), e),
        }
    }
}

fn matchings_polynomial(r: usize) -> IntPolynomial {
    let mut acc = IntPolynomial::zero();
    for mu in partitions_of(r) {
        acc = acc.add(&fake_degree(&mu.doubled()));
    }
    acc
}

fn row_matchings(c: &mut Check) {
    let expected_poly: [(usize, &[i64]); 3] = [
        (2, &[1, 0, 1, 0, 1]),
        (3, &[1, 0, 1, 1, 2, 1, 3, 1, 2, 1, 1, 0, 1]),
        (
            4,
            &[
                1, 0, 1, 1, 3, 2, 5, 4, 8, 6, 9, 7, 11, 7, 9, 6, 8, 4, 5, 2, 3, 1, 1, 0, 1,
            ],
        ),
    ];
    let expected_reduction: [&[i64]; 3] = [
        &[2, 0, 1],
        &[5, 1, 3, 2, 3, 1],
        &[18, 10, 15, 10, 17, 10, 15, 10],
    ];
    let expected_counts: [&[(usize, usize)]; 3] = [
        &[(2, 1), (1, 1)],
        &[(6, 1), (3, 2), (2, 1), (1, 1)],
        &[(8, 10), (4, 5), (2, 2), (1, 1)],
    ];
    for (idx, (r, coeffs)) in expected_poly.iter().enumerate() {
        let r = *r;
        let p = matchings_polynomial(r);
        c.eq(
            &format!("matchings polynomial P({r})"),
            p.clone(),
            poly(coeffs),
        );
        c.eq(
            &format!("reduction mod q^{}-1", 2 * r),
            p.reduce_cyclic(2 * r).expect("2r >= 1"),
            poly(expected_reduction[idx]),
        );
        match matchings_rotation_action(r) {
            Ok(action) => {
                if r == 4 {
                    c.eq("matching count at r=4", action.size(), 105);
                }
                match verify_csp(&action, &p) {
                    Ok(v) => {
                        c.assert(&format!("csp for matchings at r={r}"), v.pass);
                        c.eq(
                            &format!("orbit counts at r={r}"),
                            v.report.counts().clone(),
                            counts(expected_counts[idx]),
                        );
                        if r == 3 {
                            let fixed: Vec<&str> = v
                                .report
                                .representatives()
                                .iter()
                                .filter(|(_, s)| *s == 1)
                                .map(|(rep, _)| rep.as_str())
                                .collect();
                            c.eq("fixed matching at r=3", fixed, vec!["(1,4)(2,5)(3,6)"]);
                        }
                    }
                    Err(e) => c.error(&format!("verify at r={r}"), e),
                }
            }
            Err(e) => c.error(&format!("action at r={r}"), e),
        }
    }
}

fn row_matchings_character(c: &mut Check) {
    for r in 1..=4usize {
        match matchings_cycle_type_character(r) {
            Ok(chi) => match chi.to_schur() {
                Ok(schur) => c.eq(
                    &format!("matchings character at r={r}"),
                    schur,
                    matchings_schur_sum(r).terms().clone(),
                ),
                Err(e) => c.error(&format!("Schur expansion at r={r}"), e),
            },
            Err(e) => c.error(&format!("character at r={r}"), e),
        }
    }
    let b3 = match RootSystem::new(CartanType::B3) {
        Ok(rs) => rs,
        Err(e) => return c.error("root system B3", e),
    };
    let vector = match b3.fundamental_weight(1) {
        Ok(w) => w,
        Err(e) => return c.error("vector weight", e),
    };
    for r in 1..=3usize {
        match frobenius_invariants(&b3, &vector, 2 * r) {
            Ok(inv) => c.eq(
                &format!("so(7) vector invariants at 2r={}", 2 * r),
                inv.schur.clone(),
                matchings_schur_sum(r).terms().clone(),
            ),
            Err(e) => c.error(&format!("invariants at 2r={}", 2 * r), e),
        }
    }
}

fn row_adjoint(c: &mut Check) {
    let derangement_numbers = [1i64, 0, 1, 2, 9, 44, 265];
    let expected_reductions: [(usize, &[i64]); 5] = [
        (2, &[1]),
        (3, &[2]),
        (4, &[5, 1, 2, 1]),
        (5, &[12, 8, 8, 8, 8]),
        // recomputed; the printed row sums to 246 instead of D_6 = 265
        (6, &[55, 38, 46, 42, 46, 38]),
    ];
    let expected_polys: [(usize, &[i64]); 5] = [
        (2, &[1]),
        (3, &[1, 0, 0, 1]),
        (4, &[2, 0, 2, 1, 3, 1]),
        (5, &[2, 1, 3, 6, 7, 9, 7, 5, 2, 1, 1]),
        (6, &[4, 1, 7, 12, 21, 24, 38, 33, 37, 30, 25, 14, 13, 4, 2]),
    ];
    for r in 2..=6usize {
        let rs = match RootSystem::new(CartanType::A(r - 1)) {
            Ok(rs) => rs,
            Err(e) => {
                c.error(&format!("root system A{}", r - 1), e);
                continue;
            }
        };
        let inv = match frobenius_invariants(&rs, &rs.adjoint_weight(), r) {
            Ok(inv) => inv,
            Err(e) => {
                c.error(&format!("adjoint invariants at r={r}"), e);
                continue;
            }
        };
        let table = adjoint_stabilized_mults(r).expect("rows 2..=6");
        c.eq(
            &format!("stabilized multiplicities at r={r}"),
            inv.schur.clone(),
            table,
        );
        let total: i64 = inv
            .schur
            .iter()
            .map(|(p, m)| m * dim_partition(p) as i64)
            .sum();
        c.eq(&format!("dimension D_{r}"), total, derangement_numbers[r]);
        c.assert(&format!("untwisted parity at r={r}"), inv.parity_even());
        let p = inv.fake_degree();
        c.eq(
            &format!("adjoint polynomial at r={r}"),
            p.clone(),
            poly(expected_polys[r - 2].1),
        );
        c.eq(
            &format!("reduction mod q^{r}-1"),
            p.reduce_cyclic(r).expect("r >= 1"),
            poly(expected_reductions[r - 2].1),
        );
        match derangements_conjugation_action(r) {
            Ok(action) => match verify_csp(&action, &p) {
                Ok(v) => c.assert(&format!("csp for conjugation at r={r}"), v.pass),
                Err(e) => c.error(&format!("verify at r={r}"), e),
            },
            Err(e) => c.error(&format!("action at r={r}"), e),
        }
    }
    // the unstabilized sl3 row of the r = 4 table
    match RootSystem::new(CartanType::A(2)) {
        Ok(a2) => match frobenius_invariants(&a2, &a2.adjoint_weight(), 4) {
            Ok(inv) => c.eq(
                "sl3 adjoint row at r=4",
                inv.schur.clone(),
                mults(&[(&[4], 1), (&[2, 2], 2), (&[2, 1, 1], 1)]),
            ),
            Err(e) => c.error("sl3 adjoint invariants", e),
        },
        Err(e) => c.error("root system A2", e),
    }
}

fn row_rencontre(c: &mut Check) {
    let f = rencontre_series(8);
    let h = |entries: &[(&[usize], i64)], degree: usize| {
        SymFunc::from_terms(Basis::Homogeneous, degree, mults(entries)).expect("table entry")
    };
    c.eq("F_{2,0}", f[2][0].clone(), h(&[(&[2], 1)], 2));
    c.eq("F_{3,0}", f[3][0].clone(), h(&[(&[3], 2)], 3));
    c.eq("F_{4,0}", f[4][0].clone(), h(&[(&[4], 3), (&[2, 2], 1)], 4));
    c.eq("F_{5,0}", f[5][0].clone(), h(&[(&[5], 4), (&[3, 2], 4)], 5));
    c.assert("F_{1,0} vanishes", f[1][0].is_zero());
    let schur_rows: [(usize, &[(&[usize], i64)]); 4] = [
        (2, &[(&[2], 1)]),
        (3, &[(&[3], 2)]),
        (4, &[(&[4], 4), (&[3, 1], 1), (&[2, 2], 1)]),
        (5, &[(&[5], 8), (&[4, 1], 4), (&[3, 2], 4)]),
    ];
    for (n, entries) in schur_rows {
        match f[n][0].to_schur() {
            Ok(s) => c.eq(
                &format!("Schur form of F_{{{n},0}}"),
                s.terms().clone(),
                mults(entries),
            ),
            Err(e) => c.error(&format!("Schur form of F_{{{n},0}}"), e),
        }
    }
    let mut column_relation = true;
    for n in 0..=8usize {
        for k in 0..=n {
            let rhs = SymFunc::h(k)
                .hmul(&f[n - k][0])
                .expect("homogeneous product");
            if f[n][k] != rhs {
                column_relation = false;
                c.failures
                    .push(format!("F_{{{n},{k}}} != h_{k} F_{{{},0}}", n - k));
            }
        }
    }
    c.assert(
        "column relation F_{n,k} = h_k F_{n-k,0} for n <= 8",
        column_relation,
    );
    let derangement_numbers = [1i64, 0, 1, 2, 9, 44, 265, 1854, 14833];
    let mut rencontre_ok = true;
    for n in 0..=8usize {
        for k in 0..=n {
            let got = match q_rencontre(n, k) {
                Ok(p) => p.eval_one(),
                Err(e) => {
                    c.error(&format!("q-rencontre ({n},{k})"), e);
                    continue;
                }
            };
            let mut binom = 1i64;
            for i in 0..k {
                binom = binom * (n - i) as i64 / (i + 1) as i64;
            }
            if got != num::BigInt::from(binom * derangement_numbers[n - k]) {
                rencontre_ok = false;
                c.failures
                    .push(format!("D_{{{n},{k}}}(1) != binom({n},{k}) D_{}", n - k));
            }
        }
    }
    c.assert("q-rencontre dimensions for n <= 8", rencontre_ok);
}

fn g2_csp_at(
    c: &mut Check,
    crystal: &crate::crystal::CrystalGraph,
    r: usize,
    budget: u64,
    table: &BTreeMap<Partition, i64>,
    inv_schur: &BTreeMap<Partition, i64>,
    p: &IntPolynomial,
) {
    c.eq(
        &format!("multiplicity table at r={r}"),
        inv_schur.clone(),
        table.clone(),
    );
    let p_table = match fake_degree_module(table, false) {
        Ok(p) => p,
        Err(e) => return c.error(&format!("table polynomial at r={r}"), e),
    };
    c.eq(
        &format!("table vs computed polynomial at r={r}"),
        p.clone(),
        p_table.clone(),
    );
    match crystal.promotion_action(r, budget) {
        Ok(action) => {
            for (tag, candidate) in [("computed", p), ("printed-table", &p_table)] {
                match verify_csp(&action, candidate) {
                    Ok(v) => c.assert(&format!("csp ({tag}) at r={r}"), v.pass),
                    Err(e) => c.error(&format!("verify ({tag}) at r={r}"), e),
                }
            }
        }
        Err(e) => c.error(&format!("promotion action at r={r}"), e),
    }
}

fn row_g2(c: &mut Check, budget: u64) {
    let crystal = match builtin(Builtin::G2Fund7) {
        Ok(x) => x,
        Err(e) => return c.error("g2 crystal", e),
    };
    let expected_counts = [1usize, 0, 1, 1, 4, 10, 35, 120];
    for (r, &n) in expected_counts.iter().enumerate() {
        match crystal.enumerate_invariants(r, budget) {
            Ok(words) => c.eq(&format!("invariant count at r={r}"), words.len(), n),
            Err(e) => c.error(&format!("enumeration at r={r}"), e),
        }
    }
    let orbit_expectations: [(usize, &[(usize, usize)]); 3] = [
        (4, &[(2, 2)]),
        (5, &[(5, 2)]),
        (6, &[(6, 3), (3, 4), (2, 2), (1, 1)]),
    ];
    for (r, expected) in orbit_expectations {
        match crystal.promotion_orbits(r, budget) {
            Ok(rep) => c.eq(
                &format!("orbit counts at r={r}"),
                rep.counts().clone(),
                counts(expected),
            ),
            Err(e) => c.error(&format!("orbits at r={r}"), e),
        }
    }
    let g2 = match RootSystem::new(CartanType::G2) {
        Ok(rs) => rs,
        Err(e) => return c.error("root system G2", e),
    };
    let vector = match g2.fundamental_weight(1) {
        Ok(w) => w,
        Err(e) => return c.error("vector weight", e),
    };
    for r in 2..=6usize {
        let inv = match frobenius_invariants(&g2, &vector, r) {
            Ok(inv) => inv,
            Err(e) => {
                c.error(&format!("vector invariants at r={r}"), e);
                continue;
            }
        };
        c.assert(&format!("untwisted parity at r={r}"), inv.parity_even());
        let p = inv.fake_degree();
        g2_csp_at(
            c,
            &crystal,
            r,
            budget,
            &g2_vector_mults(r).expect("rows 2..=6"),
            &inv.schur,
            &p,
        );
        match r {
            4 => c.eq(
                "reduction at r=4",
                p.reduce_cyclic(4).expect("n >= 1"),
                poly(&[2, 0, 2]),
            ),
            6 => c.eq(
                "reduction at r=6",
                p.reduce_cyclic(6).expect("n >= 1"),
                poly(&[10, 3, 7, 5, 7, 3]),
            ),
            _ => {}
        }
    }
    // adjoint rows, r <= 4
    match frobenius_invariants(&g2, &g2.adjoint_weight(), 4) {
        Ok(inv) => {
            c.eq(
                "adjoint multiplicities at r=4",
                inv.schur.clone(),
                mults(&[(&[4], 1), (&[2, 2], 2)]),
            );
            let p = inv.fake_degree();
            c.eq(
                "adjoint polynomial at r=4",
                p.clone(),
                poly(&[1, 0, 2, 0, 2]),
            );
            c.eq(
                "adjoint reduction at r=4",
                p.reduce_cyclic(4).expect("n >= 1"),
                poly(&[3, 0, 2]),
            );
        }
        Err(e) => c.error("adjoint invariants at r=4", e),
    }
    for r in 2..=3usize {
        match frobenius_invariants(&g2, &g2.adjoint_weight(), r) {
            Ok(inv) => c.eq(
                &format!("adjoint multiplicities at r={r}"),
                inv.schur.clone(),
                g2_vector_mults(r).expect("shared small rows"),
            ),
            Err(e) => c.error(&format!("adjoint invariants at r={r}"), e),
        }
    }
}

fn row_spin(c: &mut Check, budget: u64) {
    let crystal = match builtin(Builtin::B3Spin) {
        Ok(x) => x,
        Err(e) => return c.error("spin crystal", e),
    };
    for r in [1usize, 3, 5] {
        match crystal.enumerate_invariants(r, budget) {
            Ok(words) => c.eq(&format!("no invariants at odd r={r}"), words.len(), 0),
            Err(e) => c.error(&format!("enumeration at r={r}"), e),
        }
    }
    let b3 = match RootSystem::new(CartanType::B3) {
        Ok(rs) => rs,
        Err(e) => return c.error("root system B3", e),
    };
    let spin = match b3.fundamental_weight(3) {
        Ok(w) => w,
        Err(e) => return c.error("spin weight", e),
    };
    let orbit_expectations: [(usize, &[(usize, usize)], &[i64]); 3] = [
        (2, &[(1, 1)], &[1]),
        (4, &[(2, 2)], &[2, 0, 2]),
        (6, &[(6, 3), (3, 3), (2, 1), (1, 1)], &[8, 3, 6, 4, 6, 3]),
    ];
    for (r, expected, reduction) in orbit_expectations {
        let inv = match frobenius_invariants(&b3, &spin, r) {
            Ok(inv) => inv,
            Err(e) => {
                c.error(&format!("spin invariants at r={r}"), e);
                continue;
            }
        };
        c.assert(&format!("untwisted parity at r={r}"), inv.parity_even());
        if r == 4 {
            c.eq(
                "multiplicities at r=4",
                inv.schur.clone(),
                mults(&[(&[4], 1), (&[2, 2], 1), (&[1, 1, 1, 1], 1)]),
            );
            c.eq(
                "polynomial at r=4",
                inv.fake_degree(),
                poly(&[1, 0, 1, 0, 1, 0, 1]),
            );
        }
        if r == 6 {
            c.eq("multiplicities at r=6", inv.schur.clone(), spin_mults_r6());
            c.eq(
                "polynomial at r=6",
                inv.fake_degree(),
                poly(&[1, 0, 1, 1, 2, 1, 4, 2, 4, 3, 4, 2, 3, 1, 1]),
            );
        }
        let p = inv.fake_degree();
        c.eq(
            &format!("reduction mod q^{r}-1"),
            p.reduce_cyclic(r).expect("r >= 1"),
            poly(reduction),
        );
        match crystal.promotion_orbits(r, budget) {
            Ok(rep) => c.eq(
                &format!("orbit counts at r={r}"),
                rep.counts().clone(),
                counts(expected),
            ),
            Err(e) => c.error(&format!("orbits at r={r}"), e),
        }
        match crystal.promotion_action(r, budget) {
            Ok(action) => match verify_csp(&action, &p) {
                Ok(v) => c.assert(&format!("csp at r={r}"), v.pass),
                Err(e) => c.error(&format!("verify at r={r}"), e),
            },
            Err(e) => c.error(&format!("promotion action at r={r}"), e),
        }
    }
}

fn row_promotion_properties(c: &mut Check, budget: u64) {
    // the two worked rectangular examples
    let t1 = RectTableau::new(vec![vec![1, 2, 3], vec![4, 5, 7], vec![6, 8, 9]])
        .expect("worked example");
    c.eq(
        "3x3 worked example",
        jdt_promote(&t1).rows().to_vec(),
        vec![vec![1, 2, 6], vec![3, 4, 8], vec![5, 7, 9]],
    );
    let t2 = RectTableau::new(vec![
        vec![1, 4, 6],
        vec![2, 5, 7],
        vec![3, 9, 11],
        vec![8, 10, 12],
    ])
    .expect("worked example");
    c.eq(
        "4x3 worked example",
        jdt_promote(&t2).rows().to_vec(),
        vec![
            vec![1, 3, 5],
            vec![2, 4, 6],
            vec![7, 8, 10],
            vec![9, 11, 12],
        ],
    );
    // sliding promotion equals crystal promotion on k^n
    let mut agree = true;
    let mut order_ok = true;
    for n in 2..=4usize {
        let x = match builtin(Builtin::TypeAVector(n)) {
            Ok(x) => x,
            Err(e) => {
                c.error("typeA crystal", e);
                continue;
            }
        };
        for k in 1..=3usize {
            let words = match x.enumerate_invariants(n * k, budget) {
                Ok(w) => w,
                Err(e) => {
                    c.error(&format!("enumeration n={n} k={k}"), e);
                    continue;
                }
            };
            for w in words {
                let tab = RectTableau::from_word(&w, n).expect("lattice word");
                let promoted = jdt_promote(&tab);
                match x.promote(&w) {
                    Ok(pw) => {
                        if promoted.word() != pw {
                            agree = false;
                        }
                    }
                    Err(e) => c.error(&format!("promotion n={n} k={k}"), e),
                }
                let mut cur = tab.clone();
                for _ in 0..n * k {
                    cur = jdt_promote(&cur);
                }
                if cur != tab {
                    order_ok = false;
                }
            }
        }
    }
    c.assert(
        "sliding equals crystal promotion on k^n, n <= 4, k <= 3",
        agree,
    );
    c.assert("promotion order divides nk on rectangles", order_ok);
    // the long cycle of the skein action is the rotation matrix
    let mut skein_ok = true;
    for r in 1..=4usize {
        let basis = all_tl_diagrams(r);
        match tl_long_cycle_matrix(r) {
            Ok(matrix) => {
                for (j, d) in basis.iter().enumerate() {
                    let rot = rotate_tl(d);
                    for (i, row) in matrix.iter().enumerate() {
                        let expected = if basis[i] == rot { 1 } else { 0 };
                        if row[j] != expected {
                            skein_ok = false;
                        }
                    }
                }
            }
            Err(e) => c.error(&format!("long cycle at r={r}"), e),
        }
    }
    c.assert("skein long cycle equals rotation for r <= 4", skein_ok);
    // hook-length fake degrees match the maj statistic
    let mut maj_ok = true;
    for n in 1..=10usize {
        for lambda in partitions_of(n) {
            match fake_degree_maj(&lambda) {
                Ok(viamaj) => {
                    if viamaj != fake_degree(&lambda) {
                        maj_ok = false;
                        c.failures.push(format!("maj mismatch at {lambda}"));
                    }
                }
                Err(e) => c.error(&format!("maj at {lambda}"), e),
            }
        }
    }
    c.assert(
        "fake degree equals maj generating function for |shape| <= 10",
        maj_ok,
    );
    // graded dimension identity
    let mut factorial_ok = true;
    for r in 1..=8usize {
        let mut acc = IntPolynomial::zero();
        for lambda in partitions_of(r) {
            acc = acc.add(&fake_degree(&lambda).scaled(dim_partition(&lambda) as i64));
        }
        if acc != q_factorial(r) {
            factorial_ok = false;
        }
    }
    c.assert(
        "sum of dim * fake degree is the q-factorial for r <= 8",
        factorial_ok,
    );
    // word promotion traces the TL rotation orbit backwards
    let mut rotation_ok = true;
    for r in 1..=6usize {
        for d in all_tl_diagrams(r) {
            let w = tl_to_word(&d);
            match crate::diagrams::tl_word_promote(&w) {
                Ok(pw) => match crate::diagrams::word_to_tl(&pw) {
                    Ok(promoted) => {
                        if rotate_tl(&promoted) != d {
                            rotation_ok = false;
                        }
                    }
                    Err(e) => c.error("promoted word decode", e),
                },
                Err(e) => c.error("word promotion", e),
            }
        }
    }
    c.assert("word promotion inverts rotation for r <= 6", rotation_ok);
}

fn derangement_character_cross_check(c: &mut Check) {
    // conjugation character of derangements matches the adjoint rows
    for r in 2..=5usize {
        match derangement_conjugation_character(r) {
            Ok(chi) => match chi.to_schur() {
                Ok(schur) => c.eq(
                    &format!("derangement character at r={r}"),
                    schur,
                    adjoint_stabilized_mults(r).expect("rows 2..=6"),
                ),
                Err(e) => c.error(&format!("expansion at r={r}"), e),
            },
            Err(e) => c.error(&format!("character at r={r}"), e),
        }
    }
}

struct RowSpec {
    key: &'static str,
    title: &'static str,
    limit: Duration,
    run: fn(&mut Check, u64),
}

fn specs() -> Vec<RowSpec> {
    vec![
        RowSpec {
            key: "tl-fakedeg",
            title: "two-row fake degrees and cyclic reductions",
            limit: Duration::from_secs(1),
            run: |c, _| row_tl_fakedeg(c),
        },
        RowSpec {
            key: "tl-csp",
            title: "cyclic sieving for rotation of TL diagrams, r <= 6",
            limit: Duration::from_secs(1),
            run: |c, _| row_tl_csp(c),
        },
        RowSpec {
            key: "riordan-counts",
            title: "invariant counts of the three-dimensional module",
            limit: Duration::from_secs(5),
            run: row_riordan_counts,
        },
        RowSpec {
            key: "riordan-conjecture",
            title: "parity-support conjecture and promotion sieving, r <= 5",
            limit: Duration::from_secs(30),
            run: row_riordan_conjecture,
        },
        RowSpec {
            key: "matchings",
            title: "perfect matchings under rotation, r = 2..4",
            limit: Duration::from_secs(5),
            run: |c, _| row_matchings(c),
        },
        RowSpec {
            key: "matchings-character",
            title: "matchings character vs doubled-shape Schur sum",
            limit: Duration::from_secs(30),
            run: |c, _| row_matchings_character(c),
        },
        RowSpec {
            key: "adjoint",
            title: "adjoint invariants, derangements and sieving, r = 2..6",
            limit: Duration::from_secs(120),
            run: |c, _| {
                row_adjoint(c);
                derangement_character_cross_check(c);
            },
        },
        RowSpec {
            key: "rencontre",
            title: "fixed-point symmetric functions and q-rencontre numbers",
            limit: Duration::from_secs(5),
            run: |c, _| row_rencontre(c),
        },
        RowSpec {
            key: "g2",
            title: "seven-dimensional module: counts, orbits and sieving",
            limit: Duration::from_secs(120),
            run: row_g2,
        },
        RowSpec {
            key: "spin",
            title: "spin module of so(7): counts, orbits and sieving",
            limit: Duration::from_secs(180),
            run: row_spin,
        },
        RowSpec {
            key: "promotion-properties",
            title: "promotion equivalences and fake-degree identities",
            limit: Duration::from_secs(60),
            run: row_promotion_properties,
        },
    ]
}

pub fn row_keys() -> Vec<&'static str> {
    specs().iter().map(|s| s.key).collect()
}

/// Runs the rows whose key contains `filter` (all rows when `None`); an
/// exact key match selects that row alone.
pub fn run_rows(filter: Option<&str>, budget: u64) -> Vec<ReproRow> {
    let all = specs();
    let exact = filter.map_or(false, |f| all.iter().any(|s| s.key == f));
    all.into_iter()
        .filter(|s| filter.map_or(true, |f| if exact { s.key == f } else { s.key.contains(f) }))
        .map(|s| {
            let mut check = Check::default();
            let start = Instant::now();
            (s.run)(&mut check, budget);
            let elapsed = start.elapsed();
            let mut failures = check.failures;
            if elapsed > s.limit {
                failures.push(format!(
                    "runtime {:.2}s exceeded the {:.0}s budget",
                    elapsed.as_secs_f64(),
                    s.limit.as_secs_f64()
                ));
            }
            ReproRow {
                key: s.key,
                title: s.title,
                pass: failures.is_empty(),
                details: check.details,
                failures,
                elapsed,
                limit: s.limit,
            }
        })
        .collect()
}
