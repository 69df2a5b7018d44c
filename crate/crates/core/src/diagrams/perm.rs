//! Permutations, derangements and the conjugation action of the long cycle.

use super::DiagramError;
use crate::symfunc::{CycleTypeFunction, Partition};
use std::fmt;

/// Permutation of `1..=n` as an image sequence: `images[i-1]` is the image
/// of `i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self, DiagramError> {
        let n = images.len();
        let mut seen = vec![false; n + 1];
        for &v in &images {
            if v == 0 || v > n || seen[v] {
                return Err(DiagramError::BadPermutation(n));
            }
            seen[v] = true;
        }
        Ok(Permutation { images })
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (1..=n).collect(),
        }
    }

    /// Canonical permutation of the given cycle type: consecutive blocks,
    /// each cycled.
    pub fn with_cycle_type(mu: &Partition) -> Self {
        let n = mu.size();
        let mut images = vec![0usize; n];
        let mut base = 0usize;
        for &part in mu.parts() {
            for k in 0..part {
                images[base + k] = base + (k + 1) % part + 1;
            }
            base += part;
        }
        Permutation { images }
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn image(&self, i: usize) -> usize {
        self.images[i - 1]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.images.len()];
        for (i, &v) in self.images.iter().enumerate() {
            images[v - 1] = i + 1;
        }
        Permutation { images }
    }

    /// `self` after `other`: `(self . other)(i) = self(other(i))`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        let images = (1..=self.images.len())
            .map(|i| self.image(other.image(i)))
            .collect();
        Permutation { images }
    }

    pub fn fixed_points(&self) -> usize {
        self.images
            .iter()
            .enumerate()
            .filter(|(i, &v)| v == i + 1)
            .count()
    }

    pub fn is_derangement(&self) -> bool {
        self.fixed_points() == 0
    }

    pub fn cycle_type(&self) -> Partition {
        let n = self.images.len();
        let mut seen = vec![false; n];
        let mut parts = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut cur = start;
            while !seen[cur] {
                seen[cur] = true;
                len += 1;
                cur = self.images[cur] - 1;
            }
            parts.push(len);
        }
        Partition::from_unsorted(parts)
    }

    pub fn commutes_with(&self, other: &Permutation) -> bool {
        self.compose(other) == other.compose(self)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, v) in self.images.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, ")")
    }
}

/// The long cycle `(1 2 ... n)`, sending `i` to `i + 1`.
pub fn long_cycle(n: usize) -> Permutation {
    let images = (1..=n).map(|i| i % n + 1).collect();
    Permutation { images }
}

/// Conjugation by the long cycle: `c sigma c^{-1}`.
pub fn conj_long_cycle(sigma: &Permutation) -> Permutation {
    let c = long_cycle(sigma.degree());
    c.compose(sigma).compose(&c.inverse())
}

/// All fixed-point-free permutations of `1..=n`, sorted.
pub fn derangements_enumerate(n: usize) -> Result<Vec<Permutation>, DiagramError> {
    if n > 8 {
        return Err(DiagramError::Budget(format!("derangements of {n} letters")));
    }
    fn rec(
        n: usize,
        pos: usize,
        used: &mut Vec<bool>,
        cur: &mut Vec<usize>,
        out: &mut Vec<Permutation>,
    ) {
        if pos == n {
            out.push(Permutation {
                images: cur.clone(),
            });
            return;
        }
        for v in 1..=n {
            if used[v] || v == pos + 1 {
                continue;
            }
            used[v] = true;
            cur.push(v);
            rec(n, pos + 1, used, cur, out);
            cur.pop();
            used[v] = false;
        }
    }
    let mut out = Vec::new();
    rec(n, 0, &mut vec![false; n + 1], &mut Vec::new(), &mut out);
    out.sort();
    Ok(out)
}

/// Number of derangements of `n` letters commuting with `tau`, i.e. fixed
/// under conjugation by it.
pub fn fixed_derangements(n: usize, tau: &Permutation) -> Result<usize, DiagramError> {
    Ok(derangements_enumerate(n)?
        .iter()
        .filter(|d| d.commutes_with(tau))
        .count())
}

/// Conjugation character of `S(n)` on its derangements, by cycle type.
pub fn derangement_conjugation_character(n: usize) -> Result<CycleTypeFunction, DiagramError> {
    let all = derangements_enumerate(n)?;
    let values = crate::symfunc::partitions_of(n)
        .into_iter()
        .map(|mu| {
            let tau = Permutation::with_cycle_type(&mu);
            let count = all.iter().filter(|d| d.commutes_with(&tau)).count() as i64;
            (mu, count)
        })
        .collect();
    Ok(CycleTypeFunction::new(n, values).expect("all cycle types tabulated"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn derangement_counts() {
        let counts = [1usize, 0, 1, 2, 9, 44, 265];
        for (n, &c) in counts.iter().enumerate() {
            assert_eq!(derangements_enumerate(n).unwrap().len(), c, "n={n}");
        }
        assert!(derangements_enumerate(9).is_err());
    }

    #[test]
    fn three_letter_derangements() {
        let d = derangements_enumerate(3).unwrap();
        assert_eq!(
            d,
            vec![
                Permutation::new(vec![2, 3, 1]).unwrap(),
                Permutation::new(vec![3, 1, 2]).unwrap(),
            ]
        );
    }

    #[test]
    fn conjugation_by_long_cycle() {
        let swap = Permutation::new(vec![2, 1]).unwrap();
        assert_eq!(conj_long_cycle(&swap), swap);
        // conjugation preserves cycle type
        let sigma = Permutation::new(vec![2, 3, 1, 5, 4]).unwrap();
        assert_eq!(conj_long_cycle(&sigma).cycle_type(), sigma.cycle_type());
        // the long cycle itself is central in its own centralizer
        let c = long_cycle(5);
        assert_eq!(conj_long_cycle(&c), c);
    }

    #[test]
    fn cycle_types() {
        let p = Permutation::new(vec![2, 1, 4, 3]).unwrap();
        assert_eq!(p.cycle_type(), Partition::new(vec![2, 2]).unwrap());
        assert_eq!(long_cycle(6).cycle_type(), Partition::new(vec![6]).unwrap());
        assert_eq!(
            Permutation::with_cycle_type(&Partition::new(vec![3, 2, 1]).unwrap()).cycle_type(),
            Partition::new(vec![3, 2, 1]).unwrap()
        );
    }

    #[test]
    fn commuting_derangements_with_the_long_cycle() {
        // the centralizer of an n-cycle is the group it generates, so its
        // derangements are the nontrivial powers avoiding fixed points
        assert_eq!(fixed_derangements(4, &long_cycle(4)).unwrap(), 3);
        assert_eq!(fixed_derangements(5, &long_cycle(5)).unwrap(), 4);
        assert_eq!(fixed_derangements(6, &long_cycle(6)).unwrap(), 5);
    }

    #[test]
    fn bad_permutations_rejected() {
        assert!(Permutation::new(vec![1, 1]).is_err());
        assert!(Permutation::new(vec![0, 2]).is_err());
        assert!(Permutation::new(vec![3, 1]).is_err());
    }
}
