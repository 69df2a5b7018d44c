//! Partitions, standard tableaux and fake-degree polynomials.

use super::SymFuncError;
use crate::qpoly::{q_factorial, q_int, IntPolynomial};
use std::cmp::Ordering;
use std::fmt;

/// Bound on `|lambda|` for operations that enumerate standard tableaux.
pub const TABLEAU_ENUMERATION_BOUND: usize = 12;

/// Weakly decreasing sequence of positive integers. The empty partition is
/// allowed and has size zero.
///
/// Partitions order reverse-lexicographically, so iteration over a
/// `BTreeMap<Partition, _>` visits `(n)` first and `(1^n)` last, matching
/// the usual way multiplicity tables are printed.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self, SymFuncError> {
        let ok = parts.iter().all(|&p| p > 0) && parts.windows(2).all(|w| w[0] >= w[1]);
        if ok {
            Ok(Partition(parts))
        } else {
            Err(SymFuncError::InvalidPartition(parts))
        }
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// Sorts the given parts and drops zeros.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Partition with every part doubled.
    pub fn doubled(&self) -> Partition {
        Partition(self.0.iter().map(|&p| 2 * p).collect())
    }

    pub fn conjugate(&self) -> Partition {
        if self.0.is_empty() {
            return Partition::empty();
        }
        let cols = self.0[0];
        let parts = (1..=cols)
            .map(|j| self.0.iter().filter(|&&p| p >= j).count())
            .collect();
        Partition(parts)
    }

    /// Hook lengths of every cell, row by row.
    pub fn hooks(&self) -> Vec<usize> {
        let conj = self.conjugate();
        let mut hooks = Vec::with_capacity(self.size());
        for (i, &row) in self.0.iter().enumerate() {
            for j in 0..row {
                let arm = row - j - 1;
                let leg = conj.0[j] - i - 1;
                hooks.push(arm + leg + 1);
            }
        }
        hooks
    }
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        other.0.cmp(&self.0)
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]")
    }
}

/// All partitions of `n`, largest first.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fn rec(remaining: usize, max_part: usize, current: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition(current.clone()));
            return;
        }
        for part in (1..=remaining.min(max_part)).rev() {
            current.push(part);
            rec(remaining - part, part, current, out);
            current.pop();
        }
    }
    rec(n, n.max(1), &mut current, &mut out);
    out
}

pub fn conjugate(lambda: &Partition) -> Partition {
    lambda.conjugate()
}

/// `b(lambda) = sum (i-1) lambda_i`.
pub fn b_statistic(lambda: &Partition) -> usize {
    lambda.parts().iter().enumerate().map(|(i, &p)| i * p).sum()
}

/// Number of standard tableaux of shape `lambda`, by the hook length
/// formula.
pub fn dim_partition(lambda: &Partition) -> u64 {
    let n = lambda.size();
    let mut num: u128 = 1;
    for k in 1..=n as u128 {
        num *= k;
    }
    for h in lambda.hooks() {
        num /= h as u128;
    }
    u64::try_from(num).expect("tableau count fits in u64")
}

/// All standard tableaux of shape `lambda` as row-major fillings.
pub fn standard_tableaux(lambda: &Partition) -> Result<Vec<Vec<Vec<usize>>>, SymFuncError> {
    let n = lambda.size();
    if n > TABLEAU_ENUMERATION_BOUND {
        return Err(SymFuncError::SizeOverBound {
            size: n,
            bound: TABLEAU_ENUMERATION_BOUND,
        });
    }
    let shape = lambda.parts();
    let mut rows: Vec<Vec<usize>> = shape.iter().map(|&r| Vec::with_capacity(r)).collect();
    let mut out = Vec::new();
    fn rec(
        value: usize,
        n: usize,
        shape: &[usize],
        rows: &mut Vec<Vec<usize>>,
        out: &mut Vec<Vec<Vec<usize>>>,
    ) {
        if value > n {
            out.push(rows.clone());
            return;
        }
        for i in 0..shape.len() {
            let filled = rows[i].len();
            if filled < shape[i] && (i == 0 || rows[i - 1].len() > filled) {
                rows[i].push(value);
                rec(value + 1, n, shape, rows, out);
                rows[i].pop();
            }
        }
    }
    rec(1, n, shape, &mut rows, &mut out);
    Ok(out)
}

/// Major index of a standard filling: the sum of all `i` whose successor
/// `i + 1` sits in a strictly lower row.
pub fn tableau_maj(rows: &[Vec<usize>]) -> usize {
    let mut row_of = std::collections::HashMap::new();
    for (i, row) in rows.iter().enumerate() {
        for &v in row {
            row_of.insert(v, i);
        }
    }
    let n = row_of.len();
    (1..n).filter(|i| row_of[&(i + 1)] > row_of[i]).sum()
}

/// Fake-degree polynomial `q^{b(lambda)} [n]! / prod [h(i,j)]`.
pub fn fake_degree(lambda: &Partition) -> IntPolynomial {
    let n = lambda.size();
    let mut den = IntPolynomial::one();
    for h in lambda.hooks() {
        den = den.mul(&q_int(h));
    }
    q_factorial(n)
        .exact_div(&den)
        .expect("hook product divides the q-factorial")
        .shifted(b_statistic(lambda))
}

/// Fake degree as the maj generating function over standard tableaux.
pub fn fake_degree_maj(lambda: &Partition) -> Result<IntPolynomial, SymFuncError> {
    let n = lambda.size();
    let mut coeffs = vec![0i64; n * n.saturating_sub(1) / 2 + 1];
    for t in standard_tableaux(lambda)? {
        coeffs[tableau_maj(&t)] += 1;
    }
    Ok(IntPolynomial::from_coeffs(coeffs))
}

/// Fake degree of a module given by irreducible multiplicities; with
/// `conjugate_shapes` every shape is transposed first.
pub fn fake_degree_module(
    mults: &std::collections::BTreeMap<Partition, i64>,
    conjugate_shapes: bool,
) -> Result<IntPolynomial, SymFuncError> {
    let mut acc = IntPolynomial::zero();
    for (lambda, &m) in mults {
        if m < 0 {
            return Err(SymFuncError::NegativeMultiplicity {
                partition: lambda.parts().to_vec(),
                mult: m,
            });
        }
        let shape = if conjugate_shapes {
            lambda.conjugate()
        } else {
            lambda.clone()
        };
        acc = acc.add(&fake_degree(&shape).scaled(m));
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pt(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn validation() {
        assert!(Partition::new(vec![3, 1, 2]).is_err());
        assert!(Partition::new(vec![2, 0]).is_err());
        assert!(Partition::new(vec![]).is_ok());
    }

    #[test]
    fn conjugation() {
        assert_eq!(pt(&[3, 3]).conjugate(), pt(&[2, 2, 2]));
        assert_eq!(pt(&[5]).conjugate(), pt(&[1, 1, 1, 1, 1]));
        assert_eq!(pt(&[4, 2]).conjugate(), pt(&[2, 2, 1, 1]));
    }

    #[test]
    fn ordering_is_reverse_lexicographic() {
        let got = partitions_of(4);
        let want = vec![
            pt(&[4]),
            pt(&[3, 1]),
            pt(&[2, 2]),
            pt(&[2, 1, 1]),
            pt(&[1, 1, 1, 1]),
        ];
        assert_eq!(got, want);
        let mut sorted = want.clone();
        sorted.reverse();
        sorted.sort();
        assert_eq!(sorted, want);
        assert_eq!(partitions_of(8).len(), 22);
    }

    #[test]
    fn dimensions_match_brute_force_enumeration() {
        assert_eq!(dim_partition(&pt(&[6])), 1);
        assert_eq!(dim_partition(&pt(&[3, 2])), 5);
        assert_eq!(dim_partition(&pt(&[2, 2, 2])), 5);
        for n in 1..=7 {
            for lambda in partitions_of(n) {
                let enumerated = standard_tableaux(&lambda).unwrap().len() as u64;
                assert_eq!(dim_partition(&lambda), enumerated, "{lambda}");
            }
        }
    }

    #[test]
    fn maj_counts_descents() {
        // rows (1,2),(3,4): the only descent is at 2
        assert_eq!(tableau_maj(&[vec![1, 2], vec![3, 4]]), 2);
        assert_eq!(tableau_maj(&[vec![1, 2, 3]]), 0);
        assert_eq!(tableau_maj(&[vec![1], vec![2], vec![3]]), 3);
    }

    #[test]
    fn fake_degree_values() {
        assert_eq!(fake_degree(&pt(&[1])), IntPolynomial::one());
        assert_eq!(fake_degree(&Partition::empty()), IntPolynomial::one());
        assert_eq!(
            fake_degree(&pt(&[2, 2])),
            IntPolynomial::from_coeffs(vec![0, 0, 1, 0, 1])
        );
        assert_eq!(
            fake_degree(&pt(&[2, 2, 2])),
            IntPolynomial::from_coeffs(vec![0, 0, 0, 0, 0, 0, 1, 0, 1, 1, 1, 0, 1])
        );
    }

    #[test]
    fn tableau_enumeration_respects_the_size_bound() {
        let big = Partition::new(vec![13]).unwrap();
        assert!(matches!(
            standard_tableaux(&big),
            Err(SymFuncError::SizeOverBound {
                size: 13,
                bound: 12
            })
        ));
        assert!(fake_degree_maj(&big).is_err());
    }

    #[test]
    fn fake_degree_agrees_with_maj_generating_function() {
        // the maj route: two tableaux of shape (2,2) with maj 2 and 4
        assert_eq!(
            fake_degree_maj(&pt(&[2, 2])).unwrap(),
            IntPolynomial::from_coeffs(vec![0, 0, 1, 0, 1])
        );
        for n in 1..=8 {
            for lambda in partitions_of(n) {
                assert_eq!(
                    fake_degree(&lambda),
                    fake_degree_maj(&lambda).unwrap(),
                    "{lambda}"
                );
            }
        }
    }

    #[test]
    fn single_row_and_column() {
        for n in 1..=8 {
            assert_eq!(fake_degree(&pt(&[n])), IntPolynomial::one());
            let col = Partition::new(vec![1; n]).unwrap();
            assert_eq!(
                fake_degree(&col),
                IntPolynomial::monomial(n * (n - 1) / 2, 1)
            );
        }
    }

    #[test]
    fn fake_degrees_sum_to_q_factorial() {
        for r in 1..=8 {
            let mut acc = IntPolynomial::zero();
            for lambda in partitions_of(r) {
                acc = acc.add(&fake_degree(&lambda).scaled(dim_partition(&lambda) as i64));
            }
            assert_eq!(acc, q_factorial(r), "r={r}");
        }
    }

    #[test]
    fn module_fake_degree() {
        let mut mults = std::collections::BTreeMap::new();
        mults.insert(pt(&[2, 2]), 1);
        assert_eq!(
            fake_degree_module(&mults, false).unwrap(),
            IntPolynomial::from_coeffs(vec![0, 0, 1, 0, 1])
        );
        // adjoint multiplicities stabilized at r = 4: 2, 2, 1
        let mut mults = std::collections::BTreeMap::new();
        mults.insert(pt(&[4]), 2);
        mults.insert(pt(&[2, 2]), 2);
        mults.insert(pt(&[2, 1, 1]), 1);
        let f = fake_degree_module(&mults, false).unwrap();
        assert_eq!(f, IntPolynomial::from_coeffs(vec![2, 0, 2, 1, 3, 1]));
        assert_eq!(
            f.reduce_cyclic(4).unwrap(),
            IntPolynomial::from_coeffs(vec![5, 1, 2, 1])
        );
        let mut bad = std::collections::BTreeMap::new();
        bad.insert(pt(&[1]), -1);
        assert!(fake_degree_module(&bad, false).is_err());
    }

    proptest::proptest! {
        #[test]
        fn conjugate_is_involutive(n in 0usize..10, seed in 0usize..50) {
            let all = partitions_of(n);
            if !all.is_empty() {
                let lambda = &all[seed % all.len()];
                proptest::prop_assert_eq!(lambda.conjugate().conjugate(), lambda.clone());
                proptest::prop_assert_eq!(lambda.conjugate().size(), lambda.size());
            }
        }
    }
}
