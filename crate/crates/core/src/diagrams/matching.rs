//! Perfect matchings of `1..=2r` and their rotation and permutation
//! actions.

use super::perm::Permutation;
use super::DiagramError;
use crate::symfunc::CycleTypeFunction;
use std::fmt;

/// Partition of `1..=2r` into unordered pairs, stored canonically: each
/// pair `(a, b)` with `a < b`, sorted.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PerfectMatching {
    pairs: Vec<(usize, usize)>,
}

impl PerfectMatching {
    pub fn new(mut pairs: Vec<(usize, usize)>) -> Result<Self, DiagramError> {
        let n = 2 * pairs.len();
        for p in pairs.iter_mut() {
            if p.0 > p.1 {
                *p = (p.1, p.0);
            }
        }
        pairs.sort();
        let mut seen = vec![false; n + 1];
        for &(a, b) in &pairs {
            if a == 0 || b > n || a == b || seen[a] || seen[b] {
                return Err(DiagramError::BadMatching(n));
            }
            seen[a] = true;
            seen[b] = true;
        }
        Ok(PerfectMatching { pairs })
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    pub fn points(&self) -> usize {
        2 * self.pairs.len()
    }

    /// Image under a permutation of the points.
    pub fn apply(&self, sigma: &Permutation) -> PerfectMatching {
        let pairs = self
            .pairs
            .iter()
            .map(|&(a, b)| (sigma.image(a), sigma.image(b)))
            .collect();
        PerfectMatching::new(pairs).expect("permuting points keeps a matching")
    }
}

impl fmt::Display for PerfectMatching {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &(a, b) in &self.pairs {
            write!(f, "({a},{b})")?;
        }
        Ok(())
    }
}

/// All perfect matchings of `2r` points, sorted; there are `(2r-1)!!`.
pub fn matchings_enumerate(r: usize) -> Result<Vec<PerfectMatching>, DiagramError> {
    if r > 6 {
        return Err(DiagramError::Budget(format!(
            "matchings on {} points",
            2 * r
        )));
    }
    fn rec(free: &[usize], pairs: &mut Vec<(usize, usize)>, out: &mut Vec<PerfectMatching>) {
        if free.is_empty() {
            out.push(PerfectMatching::new(pairs.clone()).expect("constructed pairs"));
            return;
        }
        let a = free[0];
        for idx in 1..free.len() {
            let b = free[idx];
            let mut rest: Vec<usize> = free.to_vec();
            rest.remove(idx);
            rest.remove(0);
            pairs.push((a, b));
            rec(&rest, pairs, out);
            pairs.pop();
        }
    }
    let mut out = Vec::new();
    let all: Vec<usize> = (1..=2 * r).collect();
    rec(&all, &mut Vec::new(), &mut out);
    out.sort();
    Ok(out)
}

/// Rotation `i -> i + 1` modulo `2r`.
pub fn rotate_matching(m: &PerfectMatching) -> PerfectMatching {
    let n = m.points();
    let pairs = m
        .pairs
        .iter()
        .map(|&(a, b)| (a % n + 1, b % n + 1))
        .collect();
    PerfectMatching::new(pairs).expect("rotation keeps a matching")
}

/// Number of matchings on `2r` points fixed by `sigma`.
pub fn fixed_matchings(r: usize, sigma: &Permutation) -> Result<usize, DiagramError> {
    let all = matchings_enumerate(r)?;
    Ok(all.iter().filter(|m| &m.apply(sigma) == *m).count())
}

/// Permutation character of `S(2r)` acting on matchings, tabulated by
/// cycle type.
pub fn matchings_cycle_type_character(r: usize) -> Result<CycleTypeFunction, DiagramError> {
    let all = matchings_enumerate(r)?;
    let values = crate::symfunc::partitions_of(2 * r)
        .into_iter()
        .map(|mu| {
            let sigma = Permutation::with_cycle_type(&mu);
            let count = all.iter().filter(|m| &m.apply(&sigma) == *m).count() as i64;
            (mu, count)
        })
        .collect();
    Ok(CycleTypeFunction::new(2 * r, values).expect("all cycle types tabulated"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_are_double_factorials() {
        let sizes = [1usize, 1, 3, 15, 105, 945];
        for (r, &s) in sizes.iter().enumerate() {
            assert_eq!(matchings_enumerate(r).unwrap().len(), s, "r={r}");
        }
        assert!(matchings_enumerate(7).is_err());
    }

    #[test]
    fn rotation_and_fixed_points() {
        let fixed = PerfectMatching::new(vec![(1, 4), (2, 5), (3, 6)]).unwrap();
        assert_eq!(rotate_matching(&fixed), fixed);
        let m = PerfectMatching::new(vec![(1, 2), (3, 4)]).unwrap();
        assert_eq!(
            rotate_matching(&m),
            PerfectMatching::new(vec![(2, 3), (4, 1)]).unwrap()
        );
        // rotation-fixed count for r = 3 under one step
        let all = matchings_enumerate(3).unwrap();
        let fixed_count = all.iter().filter(|m| &rotate_matching(m) == *m).count();
        assert_eq!(fixed_count, 1);
    }

    #[test]
    fn identity_fixes_everything() {
        for r in 0..=4 {
            let id = Permutation::identity(2 * r);
            let expected = matchings_enumerate(r).unwrap().len();
            assert_eq!(fixed_matchings(r, &id).unwrap(), expected);
        }
    }

    #[test]
    fn fixed_count_depends_only_on_cycle_type() {
        // two different permutations of cycle type (2,2) on four points
        let a = Permutation::new(vec![2, 1, 4, 3]).unwrap();
        let b = Permutation::new(vec![3, 4, 1, 2]).unwrap();
        assert_eq!(a.cycle_type(), b.cycle_type());
        assert_eq!(
            fixed_matchings(2, &a).unwrap(),
            fixed_matchings(2, &b).unwrap()
        );
    }

    #[test]
    fn character_expands_to_doubled_partitions() {
        for r in 1..=4 {
            let chi = matchings_cycle_type_character(r).unwrap();
            let schur = chi.to_schur().unwrap();
            let expected = crate::symfunc::matchings_schur_sum(r);
            assert_eq!(&schur, expected.terms(), "r={r}");
        }
    }
}
