//! Symmetric functions in the Schur and homogeneous bases, the fixed-point
//! symmetric-function series and the q-rencontre family.

use super::character::CycleTypeFunction;
use super::partition::{dim_partition, partitions_of, Partition};
use super::SymFuncError;
use crate::qpoly::{q_binomial, q_int, IntPolynomial};
use std::collections::BTreeMap;
use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Basis {
    Schur,
    Homogeneous,
}

impl Basis {
    fn name(self) -> &'static str {
        match self {
            Basis::Schur => "schur",
            Basis::Homogeneous => "homogeneous",
        }
    }
}

/// Homogeneous symmetric function of a fixed degree with integer
/// coefficients in either the Schur or the complete homogeneous basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymFunc {
    basis: Basis,
    degree: usize,
    terms: BTreeMap<Partition, i64>,
}

impl SymFunc {
    pub fn zero(basis: Basis, degree: usize) -> Self {
        SymFunc {
            basis,
            degree,
            terms: BTreeMap::new(),
        }
    }

    /// The constant function 1, i.e. the empty product in degree 0.
    pub fn one(basis: Basis) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(Partition::empty(), 1);
        SymFunc {
            basis,
            degree: 0,
            terms,
        }
    }

    /// `h_n` as a homogeneous-basis element.
    pub fn h(n: usize) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(
            if n == 0 {
                Partition::empty()
            } else {
                Partition::new(vec![n]).expect("single part")
            },
            1,
        );
        SymFunc {
            basis: Basis::Homogeneous,
            degree: n,
            terms,
        }
    }

    pub fn from_terms(
        basis: Basis,
        degree: usize,
        terms: BTreeMap<Partition, i64>,
    ) -> Result<Self, SymFuncError> {
        for p in terms.keys() {
            if p.size() != degree {
                return Err(SymFuncError::DegreeMismatch(p.size(), degree));
            }
        }
        let terms = terms.into_iter().filter(|(_, c)| *c != 0).collect();
        Ok(SymFunc {
            basis,
            degree,
            terms,
        })
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn terms(&self) -> &BTreeMap<Partition, i64> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &Self) -> Result<Self, SymFuncError> {
        if self.basis != other.basis {
            return Err(SymFuncError::BasisMismatch {
                expected: self.basis.name(),
                got: other.basis.name(),
            });
        }
        if self.degree != other.degree {
            return Err(SymFuncError::DegreeMismatch(self.degree, other.degree));
        }
        let mut terms = self.terms.clone();
        for (p, c) in &other.terms {
            let e = terms.entry(p.clone()).or_insert(0);
            *e += c;
            if *e == 0 {
                terms.remove(p);
            }
        }
        Ok(SymFunc {
            basis: self.basis,
            degree: self.degree,
            terms,
        })
    }

    pub fn scaled(&self, c: i64) -> Self {
        if c == 0 {
            return SymFunc::zero(self.basis, self.degree);
        }
        SymFunc {
            basis: self.basis,
            degree: self.degree,
            terms: self.terms.iter().map(|(p, m)| (p.clone(), m * c)).collect(),
        }
    }

    /// Product in the homogeneous basis: monomials multiply by merging
    /// their part multisets.
    pub fn hmul(&self, other: &Self) -> Result<Self, SymFuncError> {
        if self.basis != Basis::Homogeneous || other.basis != Basis::Homogeneous {
            return Err(SymFuncError::BasisMismatch {
                expected: "homogeneous",
                got: if self.basis != Basis::Homogeneous {
                    self.basis.name()
                } else {
                    other.basis.name()
                },
            });
        }
        let mut terms: BTreeMap<Partition, i64> = BTreeMap::new();
        for (p, a) in &self.terms {
            for (q, b) in &other.terms {
                let mut parts = p.parts().to_vec();
                parts.extend_from_slice(q.parts());
                let key = Partition::from_unsorted(parts);
                let e = terms.entry(key).or_insert(0);
                *e += a * b;
            }
        }
        terms.retain(|_, c| *c != 0);
        Ok(SymFunc {
            basis: Basis::Homogeneous,
            degree: self.degree + other.degree,
            terms,
        })
    }

    /// The class function whose Frobenius image is this symmetric function.
    pub fn to_cycle_values(&self) -> CycleTypeFunction {
        match self.basis {
            Basis::Schur => CycleTypeFunction::from_schur_terms(self.degree, &self.terms),
            Basis::Homogeneous => {
                let mut acc = CycleTypeFunction::tabulate(self.degree, |_| 0);
                for (mu, &c) in &self.terms {
                    let mut prod = CycleTypeFunction::homogeneous(0);
                    for &part in mu.parts() {
                        prod = prod.induction_product(&CycleTypeFunction::homogeneous(part));
                    }
                    let scaled = CycleTypeFunction::tabulate(self.degree, |nu| c * prod.value(nu));
                    acc = CycleTypeFunction::tabulate(self.degree, |nu| {
                        acc.value(nu) + scaled.value(nu)
                    });
                }
                acc
            }
        }
    }

    pub fn to_schur(&self) -> Result<SymFunc, SymFuncError> {
        match self.basis {
            Basis::Schur => Ok(self.clone()),
            Basis::Homogeneous => {
                let terms = self.to_cycle_values().to_schur()?;
                SymFunc::from_terms(Basis::Schur, self.degree, terms)
            }
        }
    }

    /// Rewrites into the homogeneous basis by back substitution along the
    /// unitriangular expansion of `h_mu` into Schur functions.
    pub fn to_homogeneous(&self) -> Result<SymFunc, SymFuncError> {
        if self.basis == Basis::Homogeneous {
            return Ok(self.clone());
        }
        let mut remainder = self.terms.clone();
        let mut out: BTreeMap<Partition, i64> = BTreeMap::new();
        // dominance-increasing order: (1^n) first, (n) last
        for mu in partitions_of(self.degree).into_iter().rev() {
            let Some(&c) = remainder.get(&mu) else {
                continue;
            };
            if c == 0 {
                continue;
            }
            out.insert(mu.clone(), c);
            let h_mu = SymFunc::from_terms(
                Basis::Homogeneous,
                self.degree,
                [(mu, 1)].into_iter().collect(),
            )?;
            for (lambda, m) in h_mu.to_schur()?.terms {
                let e = remainder.entry(lambda).or_insert(0);
                *e -= c * m;
            }
            remainder.retain(|_, v| *v != 0);
        }
        if !remainder.is_empty() {
            let offending = remainder.keys().next().expect("nonempty");
            return Err(SymFuncError::NonIntegerCoefficient(
                offending.parts().to_vec(),
            ));
        }
        SymFunc::from_terms(Basis::Homogeneous, self.degree, out)
    }

    /// Dimension of the underlying module.
    pub fn dimension(&self) -> i64 {
        match self.basis {
            Basis::Schur => self
                .terms
                .iter()
                .map(|(p, c)| c * dim_partition(p) as i64)
                .sum(),
            Basis::Homogeneous => self
                .terms
                .iter()
                .map(|(p, c)| {
                    // multinomial n! / prod(part!)
                    let mut v: i128 = 1;
                    for k in 1..=self.degree as i128 {
                        v *= k;
                    }
                    for &part in p.parts() {
                        for k in 1..=part as i128 {
                            v /= k;
                        }
                    }
                    c * i64::try_from(v).expect("multinomial fits")
                })
                .sum(),
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        let terms: Vec<serde_json::Value> = self
            .terms
            .iter()
            .map(|(p, c)| {
                serde_json::json!({
                    "partition": p.parts(),
                    "coeff": c,
                })
            })
            .collect();
        serde_json::json!({
            "basis": self.basis.name(),
            "terms": terms,
        })
    }
}

impl fmt::Display for SymFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let tag = match self.basis {
            Basis::Schur => "s",
            Basis::Homogeneous => "h",
        };
        let mut first = true;
        for (p, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if *c != 1 {
                write!(f, "{c}")?;
            }
            write!(f, "{tag}{p}")?;
        }
        Ok(())
    }
}

/// `sum over partitions mu of r of s_{2 mu}`, the Frobenius character of
/// the permutation module on perfect matchings.
pub fn matchings_schur_sum(r: usize) -> SymFunc {
    let terms = partitions_of(r)
        .into_iter()
        .map(|mu| (mu.doubled(), 1))
        .collect();
    SymFunc::from_terms(Basis::Schur, 2 * r, terms).expect("doubled partitions of 2r")
}

/// Table `F[n][k]` for `n <= max_n`: the symmetric functions of permutations
/// with `k` fixed points, from the series `H(tz) / (1 - sum (n-1) h_n z^n)`.
pub fn rencontre_series(max_n: usize) -> Vec<Vec<SymFunc>> {
    // G_n: coefficient of z^n in 1 / (1 - sum_{j >= 2} (j-1) h_j z^j)
    let mut g: Vec<SymFunc> = Vec::with_capacity(max_n + 1);
    g.push(SymFunc::one(Basis::Homogeneous));
    for n in 1..=max_n {
        let mut acc = SymFunc::zero(Basis::Homogeneous, n);
        for j in 2..=n {
            let term = SymFunc::h(j)
                .hmul(&g[n - j])
                .expect("homogeneous product")
                .scaled((j - 1) as i64);
            acc = acc.add(&term).expect("same degree");
        }
        g.push(acc);
    }
    (0..=max_n)
        .map(|n| {
            (0..=n)
                .map(|k| SymFunc::h(k).hmul(&g[n - k]).expect("homogeneous product"))
                .collect()
        })
        .collect()
}

/// Major-index generating function over derangements of `n` letters:
/// `[n]! sum_k (-1)^k q^binom(k,2) / [k]!`, cleared of denominators.
pub fn q_derangement(n: usize) -> IntPolynomial {
    let mut acc = IntPolynomial::zero();
    // suffix product [n]!/[k]! built downward from k = n
    let mut suffix = IntPolynomial::one();
    for k in (0..=n).rev() {
        let term = suffix.shifted(k * k.saturating_sub(1) / 2);
        if k % 2 == 0 {
            acc = acc.add(&term);
        } else {
            acc = acc.sub(&term);
        }
        if k > 0 {
            suffix = suffix.mul(&q_int(k));
        }
    }
    acc
}

/// `D_{n,k}(q) = qbinom(n,k) D_{n-k,0}(q)`.
pub fn q_rencontre(n: usize, k: usize) -> Result<IntPolynomial, SymFuncError> {
    let binom = q_binomial(n, k).map_err(|e| SymFuncError::OutOfRange(e.to_string()))?;
    Ok(binom.mul(&q_derangement(n - k)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qpoly::q_factorial;

    fn pt(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn matchings_sum_small() {
        let s1 = matchings_schur_sum(1);
        assert_eq!(s1.terms().len(), 1);
        assert_eq!(s1.terms()[&pt(&[2])], 1);
        let s2 = matchings_schur_sum(2);
        let expected: BTreeMap<Partition, i64> =
            [(pt(&[4]), 1), (pt(&[2, 2]), 1)].into_iter().collect();
        assert_eq!(s2.terms(), &expected);
        let s3 = matchings_schur_sum(3);
        let expected: BTreeMap<Partition, i64> =
            [(pt(&[6]), 1), (pt(&[4, 2]), 1), (pt(&[2, 2, 2]), 1)]
                .into_iter()
                .collect();
        assert_eq!(s3.terms(), &expected);
        // double factorial dimensions
        assert_eq!(s3.dimension(), 15);
        assert_eq!(matchings_schur_sum(4).dimension(), 105);
    }

    #[test]
    fn rencontre_table_matches_known_columns() {
        let f = rencontre_series(5);
        assert!(f[1][0].is_zero());
        assert_eq!(f[2][0], SymFunc::h(2));
        assert_eq!(f[3][0], SymFunc::h(3).scaled(2));
        let f40: BTreeMap<Partition, i64> = [(pt(&[4]), 3), (pt(&[2, 2]), 1)].into_iter().collect();
        assert_eq!(f[4][0].terms(), &f40);
        let f50: BTreeMap<Partition, i64> = [(pt(&[5]), 4), (pt(&[3, 2]), 4)].into_iter().collect();
        assert_eq!(f[5][0].terms(), &f50);
    }

    #[test]
    fn rencontre_schur_forms() {
        let f = rencontre_series(5);
        let s40: BTreeMap<Partition, i64> = [(pt(&[4]), 4), (pt(&[3, 1]), 1), (pt(&[2, 2]), 1)]
            .into_iter()
            .collect();
        assert_eq!(f[4][0].to_schur().unwrap().terms(), &s40);
        let s50: BTreeMap<Partition, i64> = [(pt(&[5]), 8), (pt(&[4, 1]), 4), (pt(&[3, 2]), 4)]
            .into_iter()
            .collect();
        assert_eq!(f[5][0].to_schur().unwrap().terms(), &s50);
    }

    #[test]
    fn rencontre_column_relation_and_total_dimension() {
        let f = rencontre_series(6);
        for n in 0..=6 {
            for k in 0..=n {
                assert_eq!(f[n][k], SymFunc::h(k).hmul(&f[n - k][0]).unwrap());
            }
            let total: i64 = (0..=n).map(|k| f[n][k].dimension()).sum();
            let fact: i64 = (1..=n as i64).product();
            assert_eq!(total, fact.max(1), "n={n}");
        }
    }

    #[test]
    fn basis_round_trip() {
        for n in 1..=7 {
            for mu in partitions_of(n) {
                let h = SymFunc::from_terms(
                    Basis::Homogeneous,
                    n,
                    [(mu.clone(), 1)].into_iter().collect(),
                )
                .unwrap();
                let back = h.to_schur().unwrap().to_homogeneous().unwrap();
                assert_eq!(back, h, "mu = {mu}");
            }
        }
    }

    #[test]
    fn json_shape() {
        let f = matchings_schur_sum(2);
        let j = f.to_json();
        assert_eq!(j["basis"], "schur");
        assert_eq!(j["terms"][0]["partition"], serde_json::json!([4]));
        assert_eq!(j["terms"][0]["coeff"], 1);
        assert_eq!(j["terms"][1]["partition"], serde_json::json!([2, 2]));
    }

    #[test]
    fn q_derangement_small() {
        assert_eq!(q_derangement(0), IntPolynomial::one());
        assert!(q_derangement(1).is_zero());
        assert_eq!(q_derangement(2), IntPolynomial::monomial(1, 1));
        // derangement numbers at q = 1
        let d = [1i64, 0, 1, 2, 9, 44, 265, 1854, 14833];
        for (n, &dn) in d.iter().enumerate() {
            let p = q_derangement(n);
            assert!(p.has_nonnegative_coeffs(), "n={n}");
            assert_eq!(p.eval_one(), num::BigInt::from(dn), "n={n}");
        }
    }

    /// Independent oracle: major index summed over the derangements of S(n)
    /// produced by filtering all permutations.
    fn q_derangement_by_enumeration(n: usize) -> IntPolynomial {
        fn permutations(n: usize) -> Vec<Vec<usize>> {
            if n == 0 {
                return vec![vec![]];
            }
            let mut out = Vec::new();
            for p in permutations(n - 1) {
                for slot in 0..=p.len() {
                    let mut q = p.clone();
                    q.insert(slot, n);
                    out.push(q);
                }
            }
            out
        }
        let mut coeffs = vec![0i64; n * (n + 1) / 2 + 1];
        for p in permutations(n) {
            if p.iter().enumerate().any(|(i, &v)| v == i + 1) {
                continue;
            }
            let maj: usize = (0..n.saturating_sub(1))
                .filter(|&i| p[i] > p[i + 1])
                .map(|i| i + 1)
                .sum();
            coeffs[maj] += 1;
        }
        IntPolynomial::from_coeffs(coeffs)
    }

    #[test]
    fn q_derangement_matches_maj_enumeration() {
        for n in 0..=7 {
            assert_eq!(q_derangement(n), q_derangement_by_enumeration(n), "n={n}");
        }
    }

    #[test]
    fn q_rencontre_values() {
        for n in 0..=8usize {
            // identity permutation only
            assert_eq!(q_rencontre(n, n).unwrap(), IntPolynomial::one());
            if n > 0 {
                assert!(q_rencontre(n, n - 1).unwrap().is_zero());
            }
            let mut total = IntPolynomial::zero();
            for k in 0..=n {
                let p = q_rencontre(n, k).unwrap();
                // binom(n,k) * D_{n-k} at q = 1
                let mut binom: i64 = 1;
                for i in 0..k {
                    binom = binom * (n - i) as i64 / (i + 1) as i64;
                }
                let d = [1i64, 0, 1, 2, 9, 44, 265, 1854, 14833][n - k];
                assert_eq!(p.eval_one(), num::BigInt::from(binom * d));
                total = total.add(&p);
            }
            let fact: i64 = (1..=n as i64).product();
            assert_eq!(total.eval_one(), num::BigInt::from(fact.max(1)));
        }
        assert!(q_rencontre(2, 3).is_err());
    }

    #[test]
    fn q_rencontre_by_direct_maj_count() {
        // permutations of S(4) with exactly 2 fixed points
        let expected = q_binomial(4, 2).unwrap().mul(&q_derangement(2));
        assert_eq!(q_rencontre(4, 2).unwrap(), expected);
        let perms = {
            fn permutations(n: usize) -> Vec<Vec<usize>> {
                if n == 0 {
                    return vec![vec![]];
                }
                let mut out = Vec::new();
                for p in permutations(n - 1) {
                    for slot in 0..=p.len() {
                        let mut q = p.clone();
                        q.insert(slot, n);
                        out.push(q);
                    }
                }
                out
            }
            permutations(4)
        };
        let mut coeffs = vec![0i64; 7];
        for p in perms {
            let fixed = p.iter().enumerate().filter(|(i, &v)| v == i + 1).count();
            if fixed != 2 {
                continue;
            }
            let maj: usize = (0..3).filter(|&i| p[i] > p[i + 1]).map(|i| i + 1).sum();
            coeffs[maj] += 1;
        }
        assert_eq!(IntPolynomial::from_coeffs(coeffs), expected);
    }

    #[test]
    fn q_factorial_consistency() {
        // sum over k of qbinom(n,k) D_{n-k} recovers [n]! at the level of
        // dimensions only; the polynomial identity needs the maj statistic
        // of all permutations, checked here for n = 4
        let mut total = IntPolynomial::zero();
        for k in 0..=4 {
            total = total.add(&q_rencontre(4, k).unwrap());
        }
        assert_eq!(total.eval_one(), q_factorial(4).eval_one());
    }
}
