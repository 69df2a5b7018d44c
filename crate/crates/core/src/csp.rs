//! Orbit analysis of finite cyclic actions and the cyclic sieving verdict.
//!
//! The root-of-unity condition is never evaluated with complex numbers.
//! The verdict checks the equivalent integral statement: reduced modulo
//! `q^n - 1`, the candidate polynomial must count orbits by stabilizer
//! divisibility, and the orbit sizes must reproduce the fixed-point counts
//! of every power of the generator.

use crate::qpoly::IntPolynomial;
use num::BigInt;
use std::collections::BTreeMap;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CspError {
    #[error("generator is not a bijection on {0} elements")]
    NotBijection(usize),
    #[error(
        "generator has an orbit of size {size}, which does not divide the declared order {order}"
    )]
    OrderViolation { size: usize, order: usize },
    #[error("element list and generator lengths differ: {elements} vs {generator}")]
    LengthMismatch { elements: usize, generator: usize },
    #[error("declared order must be at least 1")]
    ZeroOrder,
    #[error("polynomial has a negative coefficient at q^{0}")]
    NegativeCoefficient(usize),
    #[error("P(1) = {p1} differs from |X| = {size}")]
    SizeMismatch { p1: BigInt, size: usize },
}

/// A cyclic action on a finite set: canonical element encodings in a fixed
/// order, the generator as an index permutation, and the declared order of
/// the cyclic group.
pub struct FiniteAction {
    elements: Vec<String>,
    generator: Vec<usize>,
    order: usize,
}

impl FiniteAction {
    pub fn new(
        elements: Vec<String>,
        generator: Vec<usize>,
        order: usize,
    ) -> Result<Self, CspError> {
        if order == 0 {
            return Err(CspError::ZeroOrder);
        }
        if elements.len() != generator.len() {
            return Err(CspError::LengthMismatch {
                elements: elements.len(),
                generator: generator.len(),
            });
        }
        let n = generator.len();
        let mut seen = vec![false; n];
        for &img in &generator {
            if img >= n || seen[img] {
                return Err(CspError::NotBijection(n));
            }
            seen[img] = true;
        }
        Ok(FiniteAction {
            elements,
            generator,
            order,
        })
    }

    /// Builds the action from a sorted list of elements and one application
    /// of the generator.
    pub fn from_step<T: Ord + Clone>(
        mut items: Vec<T>,
        step: impl Fn(&T) -> T,
        order: usize,
        render: impl Fn(&T) -> String,
    ) -> Result<Self, CspError> {
        items.sort();
        items.dedup();
        let generator = items
            .iter()
            .map(|x| {
                items
                    .binary_search(&step(x))
                    .map_err(|_| CspError::NotBijection(items.len()))
            })
            .collect::<Result<Vec<_>, _>>()?;
        FiniteAction::new(items.iter().map(render).collect(), generator, order)
    }

    pub fn size(&self) -> usize {
        self.elements.len()
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// Decomposes the generator into cycles.
    pub fn orbits(&self) -> Result<OrbitReport, CspError> {
        let n = self.elements.len();
        let mut seen = vec![false; n];
        let mut counts: BTreeMap<usize, usize> = BTreeMap::new();
        let mut representatives: Vec<(String, usize)> = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut size = 0usize;
            let mut cur = start;
            loop {
                seen[cur] = true;
                size += 1;
                cur = self.generator[cur];
                if cur == start {
                    break;
                }
                if seen[cur] {
                    return Err(CspError::NotBijection(n));
                }
            }
            if self.order % size != 0 {
                return Err(CspError::OrderViolation {
                    size,
                    order: self.order,
                });
            }
            // start is the least index of the orbit in the canonical order
            representatives.push((self.elements[start].clone(), size));
            *counts.entry(size).or_insert(0) += 1;
        }
        let fix = (0..self.order)
            .map(|d| {
                if d == 0 {
                    n
                } else {
                    counts
                        .iter()
                        .filter(|(s, _)| d % **s == 0)
                        .map(|(s, c)| s * c)
                        .sum()
                }
            })
            .collect();
        Ok(OrbitReport {
            set_size: n,
            order: self.order,
            counts,
            representatives,
            fix,
        })
    }

    /// Fixed points of the d-th power of the generator, counted directly.
    pub fn fixed_points_of_power(&self, d: usize) -> usize {
        let n = self.elements.len();
        (0..n)
            .filter(|&start| {
                let mut cur = start;
                for _ in 0..d {
                    cur = self.generator[cur];
                }
                cur == start
            })
            .count()
    }
}

/// Orbit decomposition of a finite cyclic action.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitReport {
    set_size: usize,
    order: usize,
    counts: BTreeMap<usize, usize>,
    representatives: Vec<(String, usize)>,
    fix: Vec<usize>,
}

impl OrbitReport {
    pub fn set_size(&self) -> usize {
        self.set_size
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// Orbit count by orbit size.
    pub fn counts(&self) -> &BTreeMap<usize, usize> {
        &self.counts
    }

    pub fn orbit_count(&self) -> usize {
        self.counts.values().sum()
    }

    /// Lexicographically least element of each orbit, with the orbit size.
    pub fn representatives(&self) -> &[(String, usize)] {
        &self.representatives
    }

    /// `fix(c^d)` for `d = 0..order`.
    pub fn fix_vector(&self) -> &[usize] {
        &self.fix
    }

    pub fn to_json(&self) -> serde_json::Value {
        let counts: BTreeMap<String, usize> = self
            .counts
            .iter()
            .map(|(s, c)| (s.to_string(), *c))
            .collect();
        serde_json::json!({
            "size": self.set_size,
            "order": self.order,
            "orbit_counts": counts,
            "representatives": self
                .representatives
                .iter()
                .map(|(r, s)| serde_json::json!({"element": r, "orbit_size": s}))
                .collect::<Vec<_>>(),
            "fixed_points": self.fix,
        })
    }
}

/// `sum a_l q^l` where `a_l` counts the orbits whose stabilizer order
/// `order/size` divides `l`; every order divides zero.
pub fn csp_polynomial(report: &OrbitReport, order: usize) -> IntPolynomial {
    let mut coeffs = vec![0i64; order];
    for (size, count) in report.counts() {
        let stab = order / size;
        for (l, c) in coeffs.iter_mut().enumerate() {
            if l % stab == 0 {
                *c += *count as i64;
            }
        }
    }
    IntPolynomial::from_coeffs(coeffs)
}

/// First coefficient difference between two polynomials.
fn first_mismatch(a: &IntPolynomial, b: &IntPolynomial) -> Option<(usize, BigInt, BigInt)> {
    let top = a.degree().unwrap_or(0).max(b.degree().unwrap_or(0));
    (0..=top)
        .map(|i| (i, a.coeff(i), b.coeff(i)))
        .find(|(_, x, y)| x != y)
}

#[derive(Debug, Clone)]
pub struct Verdict {
    pub pass: bool,
    pub set_size: usize,
    pub order: usize,
    pub report: OrbitReport,
    pub polynomial: IntPolynomial,
    pub reduced: IntPolynomial,
    pub expected: IntPolynomial,
    /// `(exponent, reduced coefficient, orbit-count coefficient)`.
    pub mismatch: Option<(usize, BigInt, BigInt)>,
    pub fixed_points_ok: bool,
}

impl Verdict {
    pub fn to_json(&self) -> serde_json::Value {
        let counts: BTreeMap<String, usize> = self
            .report
            .counts()
            .iter()
            .map(|(s, c)| (s.to_string(), *c))
            .collect();
        serde_json::json!({
            "size": self.set_size,
            "order": self.order,
            "orbit_counts": counts,
            "polynomial": self.polynomial.to_i64_coeffs().ok(),
            "reduced": self.reduced.to_i64_coeffs().ok(),
            "csp": self.pass,
            "mismatch": self.mismatch.as_ref().map(|(e, got, want)| {
                serde_json::json!({
                    "exponent": e,
                    "reduced_coefficient": got.to_string(),
                    "orbit_coefficient": want.to_string(),
                })
            }),
            "fixed_points_ok": self.fixed_points_ok,
        })
    }
}

/// Checks the cyclic sieving phenomenon for the action and the candidate
/// polynomial. `P` must have nonnegative coefficients with `P(1) = |X|`;
/// violations are rejected before any orbit analysis.
pub fn verify_csp(action: &FiniteAction, p: &IntPolynomial) -> Result<Verdict, CspError> {
    for (i, c) in p.coeffs().iter().enumerate() {
        if num::Signed::is_negative(c) {
            return Err(CspError::NegativeCoefficient(i));
        }
    }
    let p1 = p.eval_one();
    if p1 != BigInt::from(action.size()) {
        return Err(CspError::SizeMismatch {
            p1,
            size: action.size(),
        });
    }
    let report = action.orbits()?;
    let n = action.order();
    let reduced = p.reduce_cyclic(n).expect("order >= 1");
    let expected = csp_polynomial(&report, n);
    let mismatch = first_mismatch(&reduced, &expected);
    // cross-check the fixed-point identity against the raw permutation
    let fixed_points_ok = (0..n).all(|d| action.fixed_points_of_power(d) == report.fix_vector()[d]);
    Ok(Verdict {
        pass: mismatch.is_none() && fixed_points_ok,
        set_size: action.size(),
        order: n,
        report,
        polynomial: p.clone(),
        reduced,
        expected,
        mismatch,
        fixed_points_ok,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(coeffs: &[i64]) -> IntPolynomial {
        IntPolynomial::from_coeffs(coeffs.to_vec())
    }

    #[test]
    fn singleton_identity() {
        let a = FiniteAction::new(vec!["x".into()], vec![0], 1).unwrap();
        let rep = a.orbits().unwrap();
        assert_eq!(rep.orbit_count(), 1);
        assert_eq!(rep.counts()[&1], 1);
        assert_eq!(rep.fix_vector(), &[1]);
    }

    #[test]
    fn rejects_non_bijections_and_bad_orders() {
        assert!(FiniteAction::new(vec!["a".into(), "b".into()], vec![0, 0], 2).is_err());
        assert!(FiniteAction::new(vec!["a".into()], vec![0], 0).is_err());
        // 3-cycle declared order 4
        let a =
            FiniteAction::new(vec!["a".into(), "b".into(), "c".into()], vec![1, 2, 0], 4).unwrap();
        assert!(matches!(
            a.orbits(),
            Err(CspError::OrderViolation { size: 3, order: 4 })
        ));
    }

    #[test]
    fn csp_polynomial_from_counts() {
        // one free orbit of size 2
        let a = FiniteAction::new(vec!["a".into(), "b".into()], vec![1, 0], 2).unwrap();
        let rep = a.orbits().unwrap();
        assert_eq!(csp_polynomial(&rep, 2), poly(&[1, 1]));
    }

    #[test]
    fn matchings_like_report() {
        // orbit sizes 6, 3, 3, 2, 1 under an order-6 action
        let mut elements = Vec::new();
        let mut generator = Vec::new();
        let mut base = 0usize;
        for (size, copies) in [(6usize, 1usize), (3, 2), (2, 1), (1, 1)] {
            for _ in 0..copies {
                for k in 0..size {
                    elements.push(format!("e{}", base + k));
                    generator.push(base + (k + 1) % size);
                }
                base += size;
            }
        }
        let a = FiniteAction::new(elements, generator, 6).unwrap();
        let rep = a.orbits().unwrap();
        assert_eq!(
            rep.counts(),
            &[(6usize, 1usize), (3, 2), (2, 1), (1, 1)]
                .into_iter()
                .collect()
        );
        assert_eq!(csp_polynomial(&rep, 6), poly(&[5, 1, 3, 2, 3, 1]));
        // d=3 fixes the two 3-orbits and the fixed point: 3+3+1
        assert_eq!(rep.fix_vector(), &[15, 1, 3, 7, 3, 1]);
        for d in 0..6 {
            assert_eq!(a.fixed_points_of_power(d), rep.fix_vector()[d]);
        }
    }

    #[test]
    fn verdict_passes_and_fails() {
        // free orbit of size 2 with P = 1 + q
        let a = FiniteAction::new(vec!["a".into(), "b".into()], vec![1, 0], 2).unwrap();
        let v = verify_csp(&a, &poly(&[1, 1])).unwrap();
        assert!(v.pass);
        // the singleton with P = q: P(1) = 1 = |X| but a_0 mismatches
        let a = FiniteAction::new(vec!["a".into()], vec![0], 2).unwrap();
        let v = verify_csp(&a, &poly(&[0, 1])).unwrap();
        assert!(!v.pass);
        let (e, got, want) = v.mismatch.unwrap();
        assert_eq!(e, 0);
        assert_eq!(got, BigInt::from(0));
        assert_eq!(want, BigInt::from(1));
        // preconditions
        assert!(verify_csp(&a, &poly(&[2])).is_err());
        assert!(verify_csp(&a, &poly(&[2, -1])).is_err());
    }

    #[test]
    fn verdict_is_stable_under_relabeling() {
        let run = |names: [&str; 4]| {
            let a = FiniteAction::from_step(
                names.to_vec(),
                |x| {
                    let idx = names.iter().position(|n| n == x).unwrap();
                    names[(idx + 1) % 2 + (idx / 2) * 2]
                },
                2,
                |x| x.to_string(),
            )
            .unwrap();
            verify_csp(&a, &poly(&[2, 2])).unwrap()
        };
        // two free orbits of size 2, under two different labelings
        let v1 = run(["a", "b", "c", "d"]);
        let v2 = run(["w", "x", "y", "z"]);
        assert_eq!(v1.pass, v2.pass);
        assert_eq!(v1.reduced, v2.reduced);
        assert_eq!(v1.report.counts(), v2.report.counts());
    }

    #[test]
    fn json_shape() {
        let a = FiniteAction::new(vec!["a".into(), "b".into()], vec![1, 0], 2).unwrap();
        let v = verify_csp(&a, &poly(&[1, 1])).unwrap();
        let j = v.to_json();
        assert_eq!(j["size"], 2);
        assert_eq!(j["order"], 2);
        assert_eq!(j["csp"], true);
        assert!(j["mismatch"].is_null());
        assert_eq!(j["polynomial"][0], 1);
    }
}
