//! Weight-multiplicity characters: Freudenthal's recursion for the
//! irreducibles, tensor products as convolutions, Adams operations and the
//! multiplicity of the trivial module.

use super::root_system::{CartanType, RootSystem, Weight};
use super::LieCharError;
use num::BigInt;
use std::collections::{BTreeMap, HashMap, HashSet};
use std::sync::{Mutex, OnceLock};

/// Finite mapping weight -> integer multiplicity. Virtual characters are
/// allowed to carry negative multiplicities.
#[derive(Clone)]
pub struct Character {
    rs: RootSystem,
    mult: HashMap<Weight, i64>,
}

fn vec_add(a: &[i64], b: &[i64]) -> Weight {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

impl Character {
    pub fn from_multiplicities(rs: RootSystem, mult: HashMap<Weight, i64>) -> Self {
        let mut mult = mult;
        mult.retain(|_, m| *m != 0);
        Character { rs, mult }
    }

    /// Character of the trivial module.
    pub fn unit(rs: RootSystem) -> Self {
        let mut mult = HashMap::new();
        mult.insert(rs.zero_weight(), 1);
        Character { rs, mult }
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.rs
    }

    pub fn dimension(&self) -> i64 {
        self.mult.values().sum()
    }

    pub fn multiplicity(&self, w: &[i64]) -> i64 {
        self.mult.get(w).copied().unwrap_or(0)
    }

    pub fn support_size(&self) -> usize {
        self.mult.len()
    }

    /// Weights with nonzero multiplicity in sorted order.
    pub fn sorted_entries(&self) -> Vec<(Weight, i64)> {
        let mut v: Vec<(Weight, i64)> = self.mult.iter().map(|(w, m)| (w.clone(), *m)).collect();
        v.sort();
        v
    }

    /// Tensor product: convolution of multiplicity mappings.
    pub fn mul(&self, other: &Character) -> Result<Character, LieCharError> {
        if !self.rs.same_system(&other.rs) {
            return Err(LieCharError::RootSystemMismatch);
        }
        let (small, large) = if self.mult.len() <= other.mult.len() {
            (&self.mult, &other.mult)
        } else {
            (&other.mult, &self.mult)
        };
        let mut mult: HashMap<Weight, i64> =
            HashMap::with_capacity(large.len() * small.len().min(64));
        for (w1, m1) in large {
            for (w2, m2) in small {
                *mult.entry(vec_add(w1, w2)).or_insert(0) += m1 * m2;
            }
        }
        mult.retain(|_, m| *m != 0);
        Ok(Character {
            rs: self.rs.clone(),
            mult,
        })
    }

    /// Adams operation: scale every weight by `l`. Computes the power-sum
    /// plethysm `p_l[ch V]`.
    pub fn adams(&self, l: usize) -> Character {
        let l = l as i64;
        let mult = self
            .mult
            .iter()
            .map(|(w, m)| (w.iter().map(|x| x * l).collect(), *m))
            .collect();
        Character {
            rs: self.rs.clone(),
            mult,
        }
    }

    /// For `A`-type characters in gl coordinates all weights share one
    /// coordinate sum; the trivial sl-module sits at the uniform vector of
    /// that average, when it is integral.
    fn trivial_target(&self) -> Option<Weight> {
        match self.rs.cartan() {
            CartanType::A(n) => {
                let m = (n + 1) as i64;
                let s: i64 = self.mult.keys().next().map(|w| w.iter().sum()).unwrap_or(0);
                if s % m != 0 {
                    return None;
                }
                Some(vec![s / m; n + 1])
            }
            _ => Some(self.rs.zero_weight()),
        }
    }

    /// Multiplicity of the trivial module, by the alternating Weyl sum
    /// `sum_w (-1)^w m(nu + rho - w rho)`.
    pub fn trivial_multiplicity(&self) -> Result<i64, LieCharError> {
        self.spot_check_invariance()?;
        let Some(nu) = self.trivial_target() else {
            return Ok(0);
        };
        let mut total = 0i64;
        for (sign, delta) in self.rs.weyl_deltas() {
            let w = vec_add(&nu, delta);
            total += sign * self.multiplicity(&w);
        }
        #[cfg(debug_assertions)]
        {
            if self.support_size() <= 2000 {
                let decomposed = self.decompose()?;
                let direct = decomposed.get(&nu).copied().unwrap_or(0);
                debug_assert_eq!(total, direct, "alternating sum disagrees with extraction");
            }
        }
        Ok(total)
    }

    /// Sample check that the stored multiplicities are constant along
    /// simple reflections and on the dominant representative.
    fn spot_check_invariance(&self) -> Result<(), LieCharError> {
        for w in self.mult.keys().take(256) {
            let m = self.multiplicity(w);
            if self.multiplicity(&self.rs.dominantize(w)) != m {
                return Err(LieCharError::NotInvariant(w.clone()));
            }
            for i in 0..self.rs.rank() {
                if self.multiplicity(&self.rs.simple_reflection(i, w)) != m {
                    return Err(LieCharError::NotInvariant(w.clone()));
                }
            }
        }
        Ok(())
    }

    /// Full decomposition into irreducible multiplicities by iterated
    /// extraction of the highest dominant weight. Authoritative but slower
    /// than the alternating sum.
    pub fn decompose(&self) -> Result<BTreeMap<Weight, i64>, LieCharError> {
        let mut rem = self.mult.clone();
        rem.retain(|_, m| *m != 0);
        let mut out = BTreeMap::new();
        while !rem.is_empty() {
            let mut best: Option<(i64, Weight)> = None;
            for w in rem.keys() {
                if !self.rs.is_dominant(w) {
                    continue;
                }
                let key = self.rs.dot(w, self.rs.rho());
                let replace = match &best {
                    None => true,
                    Some((bk, bw)) => key > *bk || (key == *bk && w > bw),
                };
                if replace {
                    best = Some((key, w.clone()));
                }
            }
            let Some((_, top)) = best else {
                let w = rem.keys().min().expect("nonempty remainder").clone();
                return Err(LieCharError::NotInvariant(w));
            };
            let c = rem[&top];
            out.insert(top.clone(), c);
            let irr = irreducible_character(&self.rs, &top)?;
            for (w, m) in &irr.mult {
                let e = rem.entry(w.clone()).or_insert(0);
                *e -= c * m;
                if *e == 0 {
                    rem.remove(w);
                }
            }
        }
        Ok(out)
    }
}

fn freudenthal(rs: &RootSystem, lambda: &Weight) -> Result<HashMap<Weight, i64>, LieCharError> {
    if !rs.is_dominant(lambda) {
        return Err(LieCharError::NonDominant(lambda.clone()));
    }
    // Weight support: walk down by simple roots, keeping the weights whose
    // dominant representative stays under lambda in the root-coordinate
    // cone. Simple-root coordinates of lambda - v ride along.
    let rank = rs.rank();
    let mut coords: HashMap<Weight, Vec<i64>> = HashMap::new();
    coords.insert(lambda.clone(), vec![0; rank]);
    let mut queue = vec![lambda.clone()];
    while let Some(v) = queue.pop() {
        let c = coords[&v].clone();
        for i in 0..rank {
            let mut v2: Weight = v
                .iter()
                .zip(&rs.simple_roots()[i])
                .map(|(x, a)| x - a)
                .collect();
            let mut c2 = c.clone();
            c2[i] += 1;
            if coords.contains_key(&v2) {
                continue;
            }
            // membership: dominantize while tracking coordinates
            let member = {
                let mut w = v2.clone();
                let mut cw = c2.clone();
                loop {
                    let mut moved = false;
                    for (j, a) in rs.simple_roots().iter().enumerate() {
                        let p = rs.coroot_pairing(&w, a);
                        if p < 0 {
                            w = rs.reflect(a, &w);
                            cw[j] += p;
                            moved = true;
                        }
                    }
                    if !moved {
                        break;
                    }
                }
                cw.iter().all(|&x| x >= 0)
            };
            if member {
                coords.insert(v2.clone(), c2);
                queue.push(std::mem::take(&mut v2));
            }
        }
    }

    let support: HashSet<Weight> = coords.keys().cloned().collect();
    let mut dominants: Vec<(i64, Weight)> = coords
        .iter()
        .filter(|(w, _)| rs.is_dominant(w))
        .map(|(w, c)| (c.iter().sum::<i64>(), w.clone()))
        .collect();
    dominants.sort();

    let rho = rs.rho().clone();
    let top_norm = {
        let lr = vec_add(lambda, &rho);
        rs.dot(&lr, &lr)
    };
    let mut mult: HashMap<Weight, i64> = HashMap::new();
    mult.insert(lambda.clone(), 1);
    for (_, mu) in dominants.iter().skip_while(|(h, _)| *h == 0) {
        let mut sum: i64 = 0;
        for alpha in rs.positive_roots() {
            let mut k = 1i64;
            loop {
                let w: Weight = mu.iter().zip(alpha).map(|(x, a)| x + k * a).collect();
                if !support.contains(&w) {
                    break;
                }
                let m = mult[&rs.dominantize(&w)];
                sum += m * rs.dot(&w, alpha);
                k += 1;
            }
        }
        let mr = vec_add(mu, &rho);
        let denom = top_norm - rs.dot(&mr, &mr);
        debug_assert!(denom > 0);
        debug_assert_eq!((2 * sum) % denom, 0);
        mult.insert(mu.clone(), 2 * sum / denom);
    }

    // expand over Weyl orbits
    let mut full: HashMap<Weight, i64> = HashMap::new();
    for (_, mu) in &dominants {
        let m = mult[mu];
        for w in rs.orbit(mu) {
            full.insert(w, m);
        }
    }

    let total: BigInt = full.values().map(|&m| BigInt::from(m)).sum();
    let expected = rs.weyl_dimension(lambda);
    if total != expected {
        return Err(LieCharError::BadExpansion(format!(
            "character of {lambda:?} has dimension {total}, expected {expected}"
        )));
    }
    Ok(full)
}

type CharCache = Mutex<HashMap<(CartanType, Weight), HashMap<Weight, i64>>>;

fn char_cache() -> &'static CharCache {
    static CACHE: OnceLock<CharCache> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Weight multiplicities of the irreducible `V(lambda)`, cached per root
/// system and highest weight.
pub fn irreducible_character(rs: &RootSystem, lambda: &Weight) -> Result<Character, LieCharError> {
    let key = (rs.cartan(), lambda.clone());
    if let Some(mult) = char_cache().lock().unwrap().get(&key) {
        return Ok(Character {
            rs: rs.clone(),
            mult: mult.clone(),
        });
    }
    let mult = freudenthal(rs, lambda)?;
    char_cache().lock().unwrap().insert(key, mult.clone());
    Ok(Character {
        rs: rs.clone(),
        mult,
    })
}
