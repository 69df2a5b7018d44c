//! Symmetric-group characters via the Murnaghan-Nakayama rule and class
//! functions stored by cycle type.

use super::partition::{partitions_of, Partition};
use super::SymFuncError;
use std::collections::{BTreeMap, HashMap};

/// `z_mu = prod i^{m_i} m_i!`, the centralizer order of a permutation of
/// cycle type `mu`.
pub fn z_factor(mu: &Partition) -> i64 {
    let mut z: i64 = 1;
    let mut run = 0usize;
    let parts = mu.parts();
    for (i, &p) in parts.iter().enumerate() {
        run += 1;
        z *= p as i64;
        if i + 1 == parts.len() || parts[i + 1] != p {
            for k in 2..=run as i64 {
                z *= k;
            }
            run = 0;
        }
    }
    z
}

/// Size of the conjugacy class of cycle type `mu` in `S(|mu|)`.
pub fn class_size(mu: &Partition) -> i64 {
    let n = mu.size();
    let mut fact: i128 = 1;
    for k in 1..=n as i128 {
        fact *= k;
    }
    i64::try_from(fact / z_factor(mu) as i128).expect("class size fits in i64")
}

fn beta_set(lambda: &Partition) -> Vec<usize> {
    let l = lambda.len();
    lambda
        .parts()
        .iter()
        .enumerate()
        .map(|(i, &p)| p + (l - 1 - i))
        .collect()
}

fn partition_from_beta(mut beta: Vec<usize>) -> Partition {
    beta.sort_unstable_by(|a, b| b.cmp(a));
    let l = beta.len();
    let parts = beta
        .iter()
        .enumerate()
        .map(|(i, &b)| b - (l - 1 - i))
        .filter(|&p| p > 0)
        .collect();
    Partition::new(parts).expect("beta set yields a partition")
}

fn mn_recursive(
    lambda: &Partition,
    mu_rest: &[usize],
    memo: &mut HashMap<(Vec<usize>, Vec<usize>), i64>,
) -> i64 {
    if mu_rest.is_empty() {
        return 1;
    }
    let key = (lambda.parts().to_vec(), mu_rest.to_vec());
    if let Some(&v) = memo.get(&key) {
        return v;
    }
    let t = mu_rest[0];
    let beta = beta_set(lambda);
    let mut total = 0i64;
    for (idx, &b) in beta.iter().enumerate() {
        if b < t || beta.contains(&(b - t)) {
            continue;
        }
        // removing a border strip of size t: move b down to b - t; the sign
        // counts the beta entries jumped over
        let height = beta.iter().filter(|&&c| c > b - t && c < b).count();
        let sign = if height % 2 == 0 { 1 } else { -1 };
        let mut new_beta = beta.clone();
        new_beta[idx] = b - t;
        let smaller = partition_from_beta(new_beta);
        total += sign * mn_recursive(&smaller, &mu_rest[1..], memo);
    }
    memo.insert(key, total);
    total
}

/// Irreducible character value `chi^lambda(mu)`.
pub fn mn_character(lambda: &Partition, mu: &Partition) -> Result<i64, SymFuncError> {
    if lambda.size() != mu.size() {
        return Err(SymFuncError::SizeMismatch {
            lambda: lambda.size(),
            mu: mu.size(),
        });
    }
    let mut memo = HashMap::new();
    Ok(mn_recursive(lambda, mu.parts(), &mut memo))
}

/// Full character table of `S(r)`: rows indexed by the irreducible label,
/// columns by the cycle type, both in the `partitions_of` order.
pub struct CharTable {
    pub degree: usize,
    pub partitions: Vec<Partition>,
    values: Vec<Vec<i64>>,
}

impl CharTable {
    pub fn new(degree: usize) -> Self {
        let partitions = partitions_of(degree);
        let mut memo = HashMap::new();
        let values = partitions
            .iter()
            .map(|lambda| {
                partitions
                    .iter()
                    .map(|mu| mn_recursive(lambda, mu.parts(), &mut memo))
                    .collect()
            })
            .collect();
        CharTable {
            degree,
            partitions,
            values,
        }
    }

    pub fn index_of(&self, p: &Partition) -> Option<usize> {
        self.partitions.iter().position(|q| q == p)
    }

    pub fn value(&self, lambda_idx: usize, mu_idx: usize) -> i64 {
        self.values[lambda_idx][mu_idx]
    }
}

/// Integer class function of `S(r)` stored by cycle type, with a value for
/// every partition of `r`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleTypeFunction {
    degree: usize,
    values: BTreeMap<Partition, i64>,
}

impl CycleTypeFunction {
    pub fn new(degree: usize, values: BTreeMap<Partition, i64>) -> Result<Self, SymFuncError> {
        for mu in partitions_of(degree) {
            if !values.contains_key(&mu) {
                return Err(SymFuncError::IncompleteCycleFunction {
                    degree,
                    missing: mu.parts().to_vec(),
                });
            }
        }
        Ok(CycleTypeFunction { degree, values })
    }

    /// Builds the function by evaluating `f` on every cycle type.
    pub fn tabulate(degree: usize, mut f: impl FnMut(&Partition) -> i64) -> Self {
        let values = partitions_of(degree)
            .into_iter()
            .map(|mu| {
                let v = f(&mu);
                (mu, v)
            })
            .collect();
        CycleTypeFunction { degree, values }
    }

    /// The class function of the irreducible labeled by `lambda`.
    pub fn irreducible(lambda: &Partition) -> Self {
        let table = CharTable::new(lambda.size());
        let li = table.index_of(lambda).expect("partition of the degree");
        let values = table
            .partitions
            .iter()
            .enumerate()
            .map(|(mi, mu)| (mu.clone(), table.value(li, mi)))
            .collect();
        CycleTypeFunction {
            degree: lambda.size(),
            values,
        }
    }

    /// Class function of `sum m_lambda chi^lambda`.
    pub fn from_schur_terms(degree: usize, terms: &BTreeMap<Partition, i64>) -> Self {
        let table = CharTable::new(degree);
        let values = table
            .partitions
            .iter()
            .enumerate()
            .map(|(mi, mu)| {
                let v = terms
                    .iter()
                    .map(|(lambda, &c)| {
                        c * table.value(table.index_of(lambda).expect("degree match"), mi)
                    })
                    .sum();
                (mu.clone(), v)
            })
            .collect();
        CycleTypeFunction { degree, values }
    }

    /// The all-ones function, the character of the trivial module; its
    /// Frobenius image is the complete homogeneous function `h_degree`.
    pub fn homogeneous(degree: usize) -> Self {
        CycleTypeFunction::tabulate(degree, |_| 1)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn value(&self, mu: &Partition) -> i64 {
        *self.values.get(mu).expect("value for every cycle type")
    }

    pub fn values(&self) -> &BTreeMap<Partition, i64> {
        &self.values
    }

    /// Dimension of the underlying module: the value on the identity.
    pub fn dimension(&self) -> i64 {
        let ones = Partition::new(vec![1; self.degree]).expect("column shape");
        if self.degree == 0 {
            return *self.values.get(&Partition::empty()).unwrap_or(&0);
        }
        self.value(&ones)
    }

    /// Product of class functions corresponding to the product of the
    /// underlying symmetric functions (induction product).
    ///
    /// The cycle type of the product splits over the two factors, weighted
    /// by the multinomial count of ways to assign equal-length cycles.
    pub fn induction_product(&self, other: &Self) -> Self {
        let degree = self.degree + other.degree;
        let values = partitions_of(degree)
            .into_iter()
            .map(|nu| {
                let v = split_sum(&nu, self, other);
                (nu, v)
            })
            .collect();
        CycleTypeFunction { degree, values }
    }

    /// Schur expansion `m_lambda = <self, chi^lambda>`, requiring all
    /// coefficients to be integers.
    pub fn to_schur(&self) -> Result<BTreeMap<Partition, i64>, SymFuncError> {
        let table = CharTable::new(self.degree);
        let mut fact: i128 = 1;
        for k in 1..=self.degree as i128 {
            fact *= k;
        }
        let mut result = BTreeMap::new();
        for (li, lambda) in table.partitions.iter().enumerate() {
            let mut acc: i128 = 0;
            for (mi, mu) in table.partitions.iter().enumerate() {
                acc +=
                    class_size(mu) as i128 * self.value(mu) as i128 * table.value(li, mi) as i128;
            }
            if acc % fact != 0 {
                return Err(SymFuncError::NonIntegerCoefficient(lambda.parts().to_vec()));
            }
            let m = i64::try_from(acc / fact).expect("multiplicity fits in i64");
            if m != 0 {
                result.insert(lambda.clone(), m);
            }
        }
        Ok(result)
    }
}

/// Sum over splits of the cycles of `nu` between the two factors.
fn split_sum(nu: &Partition, f: &CycleTypeFunction, g: &CycleTypeFunction) -> i64 {
    // group the parts of nu: (part, multiplicity)
    let mut groups: Vec<(usize, usize)> = Vec::new();
    for &p in nu.parts() {
        match groups.last_mut() {
            Some((q, m)) if *q == p => *m += 1,
            _ => groups.push((p, 1)),
        }
    }
    fn binom(n: usize, k: usize) -> i64 {
        let mut r: i64 = 1;
        for i in 0..k {
            r = r * (n - i) as i64 / (i + 1) as i64;
        }
        r
    }
    fn rec(
        groups: &[(usize, usize)],
        idx: usize,
        remaining: usize,
        taken: &mut Vec<usize>,
        weight: i64,
        f: &CycleTypeFunction,
        g: &CycleTypeFunction,
        rest: &mut Vec<usize>,
        total: &mut i64,
    ) {
        if idx == groups.len() {
            if remaining != 0 {
                return;
            }
            let left = Partition::from_unsorted(taken.clone());
            let right = Partition::from_unsorted(rest.clone());
            *total += weight * f.value(&left) * g.value(&right);
            return;
        }
        let (part, mult) = groups[idx];
        for take in 0..=mult {
            if take * part > remaining {
                break;
            }
            let before_taken = taken.len();
            let before_rest = rest.len();
            taken.extend(std::iter::repeat(part).take(take));
            rest.extend(std::iter::repeat(part).take(mult - take));
            rec(
                groups,
                idx + 1,
                remaining - take * part,
                taken,
                weight * binom(mult, take),
                f,
                g,
                rest,
                total,
            );
            taken.truncate(before_taken);
            rest.truncate(before_rest);
        }
    }
    let mut total = 0i64;
    rec(
        &groups,
        0,
        f.degree(),
        &mut Vec::new(),
        1,
        f,
        g,
        &mut Vec::new(),
        &mut total,
    );
    total
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symfunc::partition::{dim_partition, standard_tableaux};

    fn pt(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn z_and_class_sizes() {
        assert_eq!(z_factor(&pt(&[1, 1, 1])), 6);
        assert_eq!(z_factor(&pt(&[3])), 3);
        assert_eq!(z_factor(&pt(&[2, 1])), 2);
        assert_eq!(class_size(&pt(&[2, 1])), 3);
        assert_eq!(class_size(&pt(&[4])), 6);
        for n in 1..=8 {
            let total: i64 = partitions_of(n).iter().map(class_size).sum();
            let fact: i64 = (1..=n as i64).product();
            assert_eq!(total, fact);
        }
    }

    #[test]
    fn trivial_and_sign_characters() {
        for n in 1..=7 {
            for mu in partitions_of(n) {
                assert_eq!(mn_character(&pt(&[n]), &mu).unwrap(), 1);
                let sign = if (n - mu.len()) % 2 == 0 { 1 } else { -1 };
                let col = Partition::new(vec![1; n]).unwrap();
                assert_eq!(mn_character(&col, &mu).unwrap(), sign);
            }
        }
    }

    #[test]
    fn identity_column_is_the_dimension() {
        // the brute-force tableau count is the independent oracle here
        for n in 1..=7 {
            let id = Partition::new(vec![1; n]).unwrap();
            for lambda in partitions_of(n) {
                let dim = standard_tableaux(&lambda).unwrap().len() as i64;
                assert_eq!(mn_character(&lambda, &id).unwrap(), dim);
                assert_eq!(dim_partition(&lambda) as i64, dim);
            }
        }
        assert_eq!(mn_character(&pt(&[2, 1]), &pt(&[1, 1, 1])).unwrap(), 2);
    }

    #[test]
    fn size_mismatch_rejected() {
        assert!(mn_character(&pt(&[2]), &pt(&[3])).is_err());
    }

    #[test]
    fn orthogonality() {
        for r in 1..=7 {
            let table = CharTable::new(r);
            let mut fact: i128 = 1;
            for k in 1..=r as i128 {
                fact *= k;
            }
            for a in 0..table.partitions.len() {
                for b in 0..table.partitions.len() {
                    let mut acc: i128 = 0;
                    for (mi, mu) in table.partitions.iter().enumerate() {
                        acc += class_size(mu) as i128
                            * table.value(a, mi) as i128
                            * table.value(b, mi) as i128;
                    }
                    let expected = if a == b { fact } else { 0 };
                    assert_eq!(acc, expected, "r={r} a={a} b={b}");
                }
            }
        }
    }

    #[test]
    fn schur_expansion_of_irreducibles_and_regular() {
        for r in 1..=6 {
            for lambda in partitions_of(r) {
                let f = CycleTypeFunction::irreducible(&lambda);
                let schur = f.to_schur().unwrap();
                assert_eq!(schur.len(), 1);
                assert_eq!(schur[&lambda], 1);
            }
            // regular character: r! at the identity, zero elsewhere
            let fact: i64 = (1..=r as i64).product();
            let regular = CycleTypeFunction::tabulate(r, |mu| if mu.len() == r { fact } else { 0 });
            let schur = regular.to_schur().unwrap();
            for lambda in partitions_of(r) {
                assert_eq!(schur[&lambda], dim_partition(&lambda) as i64);
            }
        }
    }

    #[test]
    fn non_integer_expansion_is_an_error() {
        let f = CycleTypeFunction::tabulate(2, |mu| if mu.len() == 2 { 1 } else { 0 });
        assert!(f.to_schur().is_err());
    }

    #[test]
    fn induction_product_of_homogeneous() {
        // h_2 expands to the single Schur function s_(2)
        let h2 = CycleTypeFunction::homogeneous(2);
        let schur = h2.to_schur().unwrap();
        assert_eq!(schur.len(), 1);
        assert_eq!(schur[&pt(&[2])], 1);
        // h_2 * h_2 = s_(4) + s_(3,1) + s_(2,2)
        let h22 = h2.induction_product(&h2);
        let schur = h22.to_schur().unwrap();
        let expected: BTreeMap<Partition, i64> =
            [(pt(&[4]), 1), (pt(&[3, 1]), 1), (pt(&[2, 2]), 1)]
                .into_iter()
                .collect();
        assert_eq!(schur, expected);
        // dimension of the degree-4 permutation module on pairs
        assert_eq!(h22.dimension(), 6);
    }
}
