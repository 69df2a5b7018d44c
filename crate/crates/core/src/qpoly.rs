//! Exact arithmetic for integer polynomials in the variable `q`, together
//! with the q-integer, q-factorial and Gauss binomial primitives.
//!
//! Coefficients are arbitrary-precision integers. The zero polynomial is the
//! empty coefficient vector and every stored polynomial keeps its last
//! coefficient nonzero, so equality is structural.

use num::bigint::BigInt;
use num::{Integer, One, Signed, Zero};
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum QPolyError {
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("division left a nonzero remainder")]
    InexactDivision,
    #[error("cyclic reduction needs a modulus n >= 1")]
    ZeroModulus,
    #[error("q-binomial out of range: k = {k} must lie in 0..={n}")]
    BinomialRange { n: usize, k: usize },
    #[error("coefficient {0} does not fit in a JSON-safe integer")]
    CoefficientRange(String),
}

/// Integer-coefficient polynomial in `q`. Index `i` of the coefficient
/// vector holds the coefficient of `q^i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn zero() -> Self {
        IntPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        IntPolynomial::constant(1)
    }

    pub fn constant<T: Into<BigInt>>(c: T) -> Self {
        IntPolynomial::from_coeffs(vec![c.into()])
    }

    /// `c * q^exp`.
    pub fn monomial<T: Into<BigInt>>(exp: usize, c: T) -> Self {
        let c = c.into();
        if c.is_zero() {
            return IntPolynomial::zero();
        }
        let mut coeffs = vec![BigInt::zero(); exp + 1];
        coeffs[exp] = c;
        IntPolynomial { coeffs }
    }

    pub fn from_coeffs<T: Into<BigInt>>(coeffs: Vec<T>) -> Self {
        let mut p = IntPolynomial {
            coeffs: coeffs.into_iter().map(Into::into).collect(),
        };
        p.normalize();
        p
    }

    fn normalize(&mut self) {
        while self.coeffs.last().map_or(false, |c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree of the polynomial; the zero polynomial has no degree.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn eval_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    /// Multiply by `q^k`.
    pub fn shifted(&self, k: usize) -> Self {
        if self.is_zero() {
            return IntPolynomial::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        IntPolynomial { coeffs }
    }

    pub fn scaled<T: Into<BigInt>>(&self, c: T) -> Self {
        let c = c.into();
        IntPolynomial::from_coeffs(self.coeffs.iter().map(|a| a * &c).collect::<Vec<_>>())
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            coeffs.push(self.coeff(i) + other.coeff(i));
        }
        IntPolynomial::from_coeffs(coeffs)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        IntPolynomial {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return IntPolynomial::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        IntPolynomial { coeffs }
    }

    /// Exact division; fails if `other` does not divide `self` over the
    /// integers.
    pub fn exact_div(&self, other: &Self) -> Result<Self, QPolyError> {
        if other.is_zero() {
            return Err(QPolyError::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(IntPolynomial::zero());
        }
        let dn = self.degree().unwrap();
        let dd = other.degree().unwrap();
        if dn < dd {
            return Err(QPolyError::InexactDivision);
        }
        let lead = other.coeffs.last().unwrap();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); dn - dd + 1];
        for k in (0..=dn - dd).rev() {
            let top = std::mem::take(&mut rem[k + dd]);
            if top.is_zero() {
                continue;
            }
            let (c, r) = top.div_rem(lead);
            if !r.is_zero() {
                return Err(QPolyError::InexactDivision);
            }
            for (j, b) in other.coeffs.iter().enumerate().take(dd) {
                rem[k + j] -= &c * b;
            }
            quot[k] = c;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return Err(QPolyError::InexactDivision);
        }
        Ok(IntPolynomial::from_coeffs(quot))
    }

    /// Representative of `self` modulo `q^n - 1` with all exponents below
    /// `n`: exponents fold mod `n` and coefficients add up.
    pub fn reduce_cyclic(&self, n: usize) -> Result<Self, QPolyError> {
        if n == 0 {
            return Err(QPolyError::ZeroModulus);
        }
        let mut coeffs = vec![BigInt::zero(); n];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i % n] += c;
        }
        Ok(IntPolynomial::from_coeffs(coeffs))
    }

    /// Greatest common divisor of all coefficients, nonnegative.
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
        }
        g
    }

    pub fn leading_coeff(&self) -> BigInt {
        self.coeffs.last().cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn has_nonnegative_coeffs(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_negative())
    }

    /// Coefficients as `i64`, for JSON reports.
    pub fn to_i64_coeffs(&self) -> Result<Vec<i64>, QPolyError> {
        self.coeffs
            .iter()
            .map(|c| {
                i64::try_from(c.clone()).map_err(|_| QPolyError::CoefficientRange(c.to_string()))
            })
            .collect()
    }

    pub fn to_json(&self) -> Result<serde_json::Value, QPolyError> {
        Ok(serde_json::Value::from(self.to_i64_coeffs()?))
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            match i {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{mag}")?;
                    }
                    if i == 1 {
                        write!(f, "q")?;
                    } else {
                        write!(f, "q^{i}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

/// `[n] = 1 + q + ... + q^(n-1)`; `[0]` is the zero polynomial.
pub fn q_int(n: usize) -> IntPolynomial {
    IntPolynomial::from_coeffs(vec![BigInt::one(); n])
}

/// `[n]! = [n][n-1]...[1]`; `[0]! = 1`.
pub fn q_factorial(n: usize) -> IntPolynomial {
    let mut acc = IntPolynomial::one();
    for k in 1..=n {
        acc = acc.mul(&q_int(k));
    }
    acc
}

/// Gauss binomial coefficient `[n]! / ([k]! [n-k]!)`.
pub fn q_binomial(n: usize, k: usize) -> Result<IntPolynomial, QPolyError> {
    if k > n {
        return Err(QPolyError::BinomialRange { n, k });
    }
    let num = q_factorial(n);
    let den = q_factorial(k).mul(&q_factorial(n - k));
    num.exact_div(&den)
}

/// Exact quotient `f / g`; the division must leave no remainder.
pub fn poly_exact_div(f: &IntPolynomial, g: &IntPolynomial) -> Result<IntPolynomial, QPolyError> {
    f.exact_div(g)
}

/// Cyclic reduction of `f` modulo `q^n - 1`.
pub fn reduce_cyclic(f: &IntPolynomial, n: usize) -> Result<IntPolynomial, QPolyError> {
    f.reduce_cyclic(n)
}

/// Coefficients `1/[n]!` of `exp_q(z)` for `n = 0..=max_order`.
pub fn exp_q_truncated(max_order: usize) -> Vec<RationalQ> {
    (0..=max_order)
        .map(|n| RationalQ::new(IntPolynomial::one(), q_factorial(n)).expect("nonzero factorial"))
        .collect()
}

fn primitive_part(p: &IntPolynomial) -> IntPolynomial {
    if p.is_zero() {
        return IntPolynomial::zero();
    }
    let c = p.content();
    p.exact_div(&IntPolynomial::constant(c))
        .expect("content divides")
}

fn pseudo_rem(a: &IntPolynomial, b: &IntPolynomial) -> IntPolynomial {
    let da = a.degree().unwrap();
    let db = b.degree().unwrap();
    debug_assert!(da >= db);
    let lead = b.leading_coeff();
    let mut rem = a.clone();
    for k in (0..=da - db).rev() {
        let Some(dr) = rem.degree() else { break };
        if dr < k + db {
            continue;
        }
        let top = rem.coeff(k + db);
        if top.is_zero() {
            continue;
        }
        rem = rem.scaled(lead.clone()).sub(&b.shifted(k).scaled(top));
    }
    rem
}

/// Polynomial gcd over the integers, normalized to a positive leading
/// coefficient. Primitive pseudo-remainder sequence.
pub fn poly_gcd(a: &IntPolynomial, b: &IntPolynomial) -> IntPolynomial {
    if a.is_zero() {
        return normalize_sign(b);
    }
    if b.is_zero() {
        return normalize_sign(a);
    }
    let content = a.content().gcd(&b.content());
    let mut x = primitive_part(a);
    let mut y = primitive_part(b);
    if x.degree() < y.degree() {
        std::mem::swap(&mut x, &mut y);
    }
    while !y.is_zero() {
        let r = primitive_part(&pseudo_rem(&x, &y));
        x = y;
        y = r;
    }
    normalize_sign(&x.scaled(content))
}

fn normalize_sign(p: &IntPolynomial) -> IntPolynomial {
    if p.leading_coeff().is_negative() {
        p.neg()
    } else {
        p.clone()
    }
}

/// Reduced fraction of integer polynomials in `q`. The denominator keeps a
/// positive leading coefficient and shares no common factor (content or
/// polynomial) with the numerator.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalQ {
    numer: IntPolynomial,
    denom: IntPolynomial,
}

impl RationalQ {
    pub fn new(numer: IntPolynomial, denom: IntPolynomial) -> Result<Self, QPolyError> {
        if denom.is_zero() {
            return Err(QPolyError::DivisionByZero);
        }
        let mut r = RationalQ { numer, denom };
        r.reduce();
        Ok(r)
    }

    pub fn from_poly(p: IntPolynomial) -> Self {
        RationalQ {
            numer: p,
            denom: IntPolynomial::one(),
        }
    }

    pub fn numer(&self) -> &IntPolynomial {
        &self.numer
    }

    pub fn denom(&self) -> &IntPolynomial {
        &self.denom
    }

    pub fn is_zero(&self) -> bool {
        self.numer.is_zero()
    }

    fn reduce(&mut self) {
        if self.numer.is_zero() {
            self.denom = IntPolynomial::one();
            return;
        }
        let g = poly_gcd(&self.numer, &self.denom);
        self.numer = self.numer.exact_div(&g).expect("gcd divides numerator");
        self.denom = self.denom.exact_div(&g).expect("gcd divides denominator");
        if self.denom.leading_coeff().is_negative() {
            self.numer = self.numer.neg();
            self.denom = self.denom.neg();
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let numer = self
            .numer
            .mul(&other.denom)
            .add(&other.numer.mul(&self.denom));
        let denom = self.denom.mul(&other.denom);
        RationalQ::new(numer, denom).expect("denominator product nonzero")
    }

    pub fn mul(&self, other: &Self) -> Self {
        RationalQ::new(self.numer.mul(&other.numer), self.denom.mul(&other.denom))
            .expect("denominator product nonzero")
    }

    pub fn neg(&self) -> Self {
        RationalQ {
            numer: self.numer.neg(),
            denom: self.denom.clone(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }
}

impl fmt::Display for RationalQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.denom == IntPolynomial::one() {
            write!(f, "{}", self.numer)
        } else {
            write!(f, "({}) / ({})", self.numer, self.denom)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(coeffs: &[i64]) -> IntPolynomial {
        IntPolynomial::from_coeffs(coeffs.to_vec())
    }

    #[test]
    fn q_int_basics() {
        assert!(q_int(0).is_zero());
        assert_eq!(q_int(1), IntPolynomial::one());
        assert_eq!(q_int(4), p(&[1, 1, 1, 1]));
        assert_eq!(q_int(7).eval_one(), BigInt::from(7));
    }

    #[test]
    fn q_factorial_small() {
        assert_eq!(q_factorial(0), IntPolynomial::one());
        assert_eq!(q_factorial(2), p(&[1, 1]));
        // (1+q)(1+q+q^2) multiplied out by hand
        assert_eq!(q_factorial(3), p(&[1, 2, 2, 1]));
    }

    /// Independent oracle: the q-Pascal recursion
    /// [n,k] = [n-1,k-1] + q^k [n-1,k].
    fn q_binomial_pascal(n: usize, k: usize) -> IntPolynomial {
        if k > n {
            return IntPolynomial::zero();
        }
        if k == 0 || k == n {
            return IntPolynomial::one();
        }
        q_binomial_pascal(n - 1, k - 1).add(&q_binomial_pascal(n - 1, k).shifted(k))
    }

    #[test]
    fn q_binomial_against_pascal_oracle() {
        assert_eq!(q_binomial(4, 2).unwrap(), p(&[1, 1, 2, 1, 1]));
        for n in 0..=8 {
            for k in 0..=n {
                assert_eq!(
                    q_binomial(n, k).unwrap(),
                    q_binomial_pascal(n, k),
                    "n={n} k={k}"
                );
            }
        }
        assert!(q_binomial(2, 3).is_err());
    }

    #[test]
    fn q_binomial_symmetry_and_eval() {
        for n in 0..=9 {
            for k in 0..=n {
                let a = q_binomial(n, k).unwrap();
                assert_eq!(a, q_binomial(n, n - k).unwrap());
                assert!(a.has_nonnegative_coeffs());
                let mut ordinary = BigInt::one();
                for i in 0..k {
                    ordinary = ordinary * BigInt::from(n - i) / BigInt::from(i + 1);
                }
                assert_eq!(a.eval_one(), ordinary);
            }
        }
    }

    #[test]
    fn tl_fake_degree_from_binomial() {
        // q^{r(r-1)} [2r choose r] / [r+1] at r = 2
        let r = 2;
        let poly = q_binomial(2 * r, r)
            .unwrap()
            .shifted(r * (r - 1))
            .exact_div(&q_int(r + 1))
            .unwrap();
        assert_eq!(poly, p(&[0, 0, 1, 0, 1]));
    }

    #[test]
    fn exact_division() {
        assert_eq!(p(&[-1, 0, 1]).exact_div(&p(&[-1, 1])).unwrap(), p(&[1, 1]));
        assert_eq!(
            IntPolynomial::monomial(3, 1)
                .exact_div(&IntPolynomial::monomial(1, 1))
                .unwrap(),
            IntPolynomial::monomial(2, 1)
        );
        assert!(p(&[1, 1]).exact_div(&p(&[0, 1])).is_err());
        assert!(p(&[1]).exact_div(&IntPolynomial::zero()).is_err());
        // long-division oracle target: [6][5]/([3][2])
        let num = q_int(6).mul(&q_int(5));
        let den = q_int(3).mul(&q_int(2));
        assert_eq!(num.exact_div(&den).unwrap(), p(&[1, 0, 1, 1, 1, 0, 1]));
        // same value out of [6]! / ([4][3][3][2][2])
        let den2 = q_int(4)
            .mul(&q_int(3))
            .mul(&q_int(3))
            .mul(&q_int(2))
            .mul(&q_int(2));
        assert_eq!(
            q_factorial(6).exact_div(&den2).unwrap(),
            p(&[1, 0, 1, 1, 1, 0, 1])
        );
    }

    #[test]
    fn cyclic_reduction() {
        assert_eq!(p(&[0, 0, 1, 0, 1]).reduce_cyclic(4).unwrap(), p(&[1, 0, 1]));
        // q^12+q^10+q^9+q^8+q^6 mod q^6-1; constant term 2 agrees with the
        // two rotation orbits on the five diagrams.
        assert_eq!(
            IntPolynomial::from_coeffs(vec![0, 0, 0, 0, 0, 0, 1, 0, 1, 1, 1, 0, 1])
                .reduce_cyclic(6)
                .unwrap(),
            p(&[2, 0, 1, 1, 1])
        );
        assert_eq!(p(&[1, 2, 3]).reduce_cyclic(5).unwrap(), p(&[1, 2, 3]));
        assert!(p(&[1]).reduce_cyclic(0).is_err());
    }

    #[test]
    fn exp_q_coefficients() {
        let c = exp_q_truncated(3);
        assert_eq!(c.len(), 4);
        assert_eq!(c[0], RationalQ::from_poly(IntPolynomial::one()));
        assert_eq!(c[1], RationalQ::from_poly(IntPolynomial::one()));
        assert_eq!(
            c[2],
            RationalQ::new(IntPolynomial::one(), p(&[1, 1])).unwrap()
        );
        assert_eq!(
            c[3],
            RationalQ::new(IntPolynomial::one(), p(&[1, 2, 2, 1])).unwrap()
        );
    }

    #[test]
    fn rational_reduction_normalizes_sign() {
        let r = RationalQ::new(p(&[0, 2]), p(&[-2, 2])).unwrap();
        assert_eq!(r.numer(), &p(&[0, 1]));
        assert_eq!(r.denom(), &p(&[-1, 1]));
        let s = RationalQ::new(p(&[1]), p(&[1, -1])).unwrap();
        assert_eq!(s.denom(), &p(&[-1, 1]));
        assert_eq!(s.numer(), &p(&[-1]));
    }

    #[test]
    fn display_format() {
        assert_eq!(p(&[2, 1, 3]).to_string(), "2 + q + 3q^2");
        assert_eq!(p(&[0, 0, 1, 0, 1]).to_string(), "q^2 + q^4");
        assert_eq!(p(&[-1, -2]).to_string(), "-1 - 2q");
        assert_eq!(IntPolynomial::zero().to_string(), "0");
    }

    proptest::proptest! {
        #[test]
        fn mul_degree_additive(a in proptest::collection::vec(-4i64..5, 1..6),
                               b in proptest::collection::vec(-4i64..5, 1..6)) {
            let pa = IntPolynomial::from_coeffs(a);
            let pb = IntPolynomial::from_coeffs(b);
            let prod = pa.mul(&pb);
            if pa.is_zero() || pb.is_zero() {
                proptest::prop_assert!(prod.is_zero());
            } else {
                proptest::prop_assert_eq!(prod.degree(), Some(pa.degree().unwrap() + pb.degree().unwrap()));
            }
            proptest::prop_assert_eq!(pa.mul(&pb), pb.mul(&pa));
        }

        #[test]
        fn reduce_cyclic_preserves_eval_one(a in proptest::collection::vec(-9i64..10, 0..12),
                                            n in 1usize..8) {
            let pa = IntPolynomial::from_coeffs(a);
            let red = pa.reduce_cyclic(n).unwrap();
            proptest::prop_assert_eq!(pa.eval_one(), red.eval_one());
            proptest::prop_assert!(red.degree().map_or(true, |d| d < n));
        }

        #[test]
        fn rational_sum_cross_multiplies(an in proptest::collection::vec(-3i64..4, 1..4),
                                         ad in proptest::collection::vec(-3i64..4, 1..4),
                                         bn in proptest::collection::vec(-3i64..4, 1..4),
                                         bd in proptest::collection::vec(-3i64..4, 1..4)) {
            let ad = IntPolynomial::from_coeffs(ad);
            let bd = IntPolynomial::from_coeffs(bd);
            proptest::prop_assume!(!ad.is_zero() && !bd.is_zero());
            let a = RationalQ::new(IntPolynomial::from_coeffs(an), ad).unwrap();
            let b = RationalQ::new(IntPolynomial::from_coeffs(bn), bd).unwrap();
            let s = a.add(&b);
            // a/b + c/d = s  <=>  (ad + cb) * denom(s) = s_num * bd
            let lhs = a.numer().mul(b.denom()).add(&b.numer().mul(a.denom())).mul(s.denom());
            let rhs = s.numer().mul(&a.denom().mul(b.denom()));
            proptest::prop_assert_eq!(lhs, rhs);
        }
    }
}
