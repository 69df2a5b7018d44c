//! Root system data: simple and positive roots, fundamental weights, the
//! Weyl vector and the enumerated Weyl group.

use super::LieCharError;
use num::BigInt;
use std::collections::HashMap;
use std::sync::Arc;

/// Weight in the ambient integer lattice of its root system.
pub type Weight = Vec<i64>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CartanType {
    /// `A(n)` of rank `n <= 5`, realized in gl-style coordinates on `Z^(n+1)`.
    A(usize),
    /// `B3` in doubled coordinates on `Z^3`.
    B3,
    /// `C(n)` of rank 2 or 3 on `Z^n`.
    C(usize),
    /// `G2` inside the sum-zero sublattice of `Z^3`.
    G2,
}

impl CartanType {
    pub fn label(&self) -> String {
        match self {
            CartanType::A(n) => format!("A{n}"),
            CartanType::B3 => "B3".to_string(),
            CartanType::C(n) => format!("C{n}"),
            CartanType::G2 => "G2".to_string(),
        }
    }

    fn expected_weyl_order(&self) -> usize {
        match self {
            CartanType::A(n) => (1..=n + 1).product(),
            CartanType::B3 => 48,
            CartanType::C(n) => (1..=*n).product::<usize>() << n,
            CartanType::G2 => 12,
        }
    }
}

struct WeylElement {
    /// Simple-reflection word, applied left to right.
    word: Vec<usize>,
    sign: i64,
}

pub struct RootSystemData {
    cartan: CartanType,
    rank: usize,
    ambient: usize,
    simple_roots: Vec<Weight>,
    positive_roots: Vec<Weight>,
    fundamental_weights: Vec<Weight>,
    rho: Weight,
    weyl: Vec<WeylElement>,
    /// `(sign, rho - w rho)` for every Weyl element.
    deltas: Vec<(i64, Weight)>,
}

/// Shareable handle to immutable root-system data.
#[derive(Clone)]
pub struct RootSystem(Arc<RootSystemData>);

fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn add(a: &[i64], b: &[i64]) -> Weight {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

fn sub(a: &[i64], b: &[i64]) -> Weight {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

fn scale(a: &[i64], c: i64) -> Weight {
    a.iter().map(|x| x * c).collect()
}

impl RootSystem {
    pub fn new(cartan: CartanType) -> Result<Self, LieCharError> {
        let (rank, ambient, simple_roots, positive_roots, fundamental_weights, rho) = match cartan {
            CartanType::A(n) => {
                if n == 0 || n > 5 {
                    return Err(LieCharError::UnsupportedSystem(format!(
                        "A({n}); supported ranks are 1..=5"
                    )));
                }
                let m = n + 1;
                let unit = |i: usize| -> Weight {
                    let mut v = vec![0; m];
                    v[i] = 1;
                    v
                };
                let simple: Vec<Weight> = (0..n).map(|i| sub(&unit(i), &unit(i + 1))).collect();
                let mut positive = Vec::new();
                for i in 0..m {
                    for j in i + 1..m {
                        positive.push(sub(&unit(i), &unit(j)));
                    }
                }
                let fundamental: Vec<Weight> = (1..=n)
                    .map(|k| (0..m).map(|i| if i < k { 1 } else { 0 }).collect())
                    .collect();
                let rho: Weight = (0..m).map(|i| (m - 1 - i) as i64).collect();
                (n, m, simple, positive, fundamental, rho)
            }
            CartanType::B3 => {
                // doubled coordinates
                let simple = vec![vec![2, -2, 0], vec![0, 2, -2], vec![0, 0, 2]];
                let mut positive = Vec::new();
                for i in 0..3 {
                    for j in i + 1..3 {
                        let mut v = vec![0i64; 3];
                        v[i] = 2;
                        v[j] = -2;
                        positive.push(v.clone());
                        v[j] = 2;
                        positive.push(v);
                    }
                }
                for i in 0..3 {
                    let mut v = vec![0i64; 3];
                    v[i] = 2;
                    positive.push(v);
                }
                let fundamental = vec![vec![2, 0, 0], vec![2, 2, 0], vec![1, 1, 1]];
                let rho = vec![5, 3, 1];
                (3, 3, simple, positive, fundamental, rho)
            }
            CartanType::C(n) => {
                if n < 2 || n > 3 {
                    return Err(LieCharError::UnsupportedSystem(format!(
                        "C({n}); supported ranks are 2 and 3"
                    )));
                }
                let unit = |i: usize| -> Weight {
                    let mut v = vec![0; n];
                    v[i] = 1;
                    v
                };
                let mut simple: Vec<Weight> =
                    (0..n - 1).map(|i| sub(&unit(i), &unit(i + 1))).collect();
                simple.push(scale(&unit(n - 1), 2));
                let mut positive = Vec::new();
                for i in 0..n {
                    for j in i + 1..n {
                        positive.push(sub(&unit(i), &unit(j)));
                        positive.push(add(&unit(i), &unit(j)));
                    }
                }
                for i in 0..n {
                    positive.push(scale(&unit(i), 2));
                }
                let fundamental: Vec<Weight> = (1..=n)
                    .map(|k| (0..n).map(|i| if i < k { 1 } else { 0 }).collect())
                    .collect();
                let rho: Weight = (0..n).map(|i| (n - i) as i64).collect();
                (n, n, simple, positive, fundamental, rho)
            }
            CartanType::G2 => {
                let a1 = vec![1, -1, 0];
                let a2 = vec![-2, 1, 1];
                let positive = vec![
                    a1.clone(),
                    a2.clone(),
                    add(&a1, &a2),
                    add(&scale(&a1, 2), &a2),
                    add(&scale(&a1, 3), &a2),
                    add(&scale(&a1, 3), &scale(&a2, 2)),
                ];
                // short fundamental first, then the adjoint one
                let fundamental = vec![vec![0, -1, 1], vec![-1, -1, 2]];
                let rho = vec![-1, -2, 3];
                (2, 3, vec![a1, a2], positive, fundamental, rho)
            }
        };

        let mut data = RootSystemData {
            cartan,
            rank,
            ambient,
            simple_roots,
            positive_roots,
            fundamental_weights,
            rho,
            weyl: Vec::new(),
            deltas: Vec::new(),
        };
        data.enumerate_weyl();
        let rs = RootSystem(Arc::new(data));
        debug_assert_eq!(rs.weyl_order(), cartan.expected_weyl_order());
        if rs.weyl_order() != cartan.expected_weyl_order() {
            return Err(LieCharError::UnsupportedSystem(format!(
                "Weyl closure of {} has order {}, expected {}",
                cartan.label(),
                rs.weyl_order(),
                cartan.expected_weyl_order()
            )));
        }
        Ok(rs)
    }

    pub fn cartan(&self) -> CartanType {
        self.0.cartan
    }

    pub fn rank(&self) -> usize {
        self.0.rank
    }

    pub fn ambient_dim(&self) -> usize {
        self.0.ambient
    }

    pub fn same_system(&self, other: &RootSystem) -> bool {
        self.0.cartan == other.0.cartan
    }

    pub fn simple_roots(&self) -> &[Weight] {
        &self.0.simple_roots
    }

    pub fn positive_roots(&self) -> &[Weight] {
        &self.0.positive_roots
    }

    pub fn rho(&self) -> &Weight {
        &self.0.rho
    }

    pub fn zero_weight(&self) -> Weight {
        vec![0; self.0.ambient]
    }

    /// Fundamental weight, 1-based.
    pub fn fundamental_weight(&self, i: usize) -> Result<Weight, LieCharError> {
        self.0
            .fundamental_weights
            .get(i.wrapping_sub(1))
            .cloned()
            .ok_or_else(|| {
                LieCharError::UnsupportedSystem(format!(
                    "{} has no fundamental weight {i}",
                    self.0.cartan.label()
                ))
            })
    }

    /// Highest weight of the adjoint representation.
    pub fn adjoint_weight(&self) -> Weight {
        match self.0.cartan {
            CartanType::A(n) => {
                let mut v = vec![0; n + 1];
                v[0] = 1;
                v[n] = -1;
                v
            }
            CartanType::B3 => vec![2, 2, 0],
            CartanType::C(_) => {
                let mut v = self.zero_weight();
                v[0] = 2;
                v
            }
            CartanType::G2 => vec![-1, -1, 2],
        }
    }

    pub fn dot(&self, a: &[i64], b: &[i64]) -> i64 {
        dot(a, b)
    }

    /// `<v, alpha_check> = 2 (v, alpha) / (alpha, alpha)`.
    pub fn coroot_pairing(&self, v: &[i64], alpha: &[i64]) -> i64 {
        let num = 2 * dot(v, alpha);
        let den = dot(alpha, alpha);
        debug_assert!(den > 0);
        debug_assert_eq!(num % den, 0, "non-integral coroot pairing");
        num / den
    }

    pub fn reflect(&self, alpha: &[i64], v: &[i64]) -> Weight {
        let p = self.coroot_pairing(v, alpha);
        sub(v, &scale(alpha, p))
    }

    pub fn simple_reflection(&self, i: usize, v: &[i64]) -> Weight {
        self.reflect(&self.0.simple_roots[i], v)
    }

    pub fn is_dominant(&self, v: &[i64]) -> bool {
        self.0
            .simple_roots
            .iter()
            .all(|a| self.coroot_pairing(v, a) >= 0)
    }

    /// Dominant representative of the Weyl orbit of `v`.
    pub fn dominantize(&self, v: &[i64]) -> Weight {
        let mut w = v.to_vec();
        loop {
            let mut moved = false;
            for a in &self.0.simple_roots {
                if self.coroot_pairing(&w, a) < 0 {
                    w = self.reflect(a, &w);
                    moved = true;
                }
            }
            if !moved {
                return w;
            }
        }
    }

    pub fn weyl_order(&self) -> usize {
        self.0.weyl.len()
    }

    /// `(sign, rho - w rho)` over the whole Weyl group.
    pub fn weyl_deltas(&self) -> &[(i64, Weight)] {
        &self.0.deltas
    }

    pub fn apply_weyl(&self, index: usize, v: &[i64]) -> Weight {
        let mut w = v.to_vec();
        for &i in &self.0.weyl[index].word {
            w = self.simple_reflection(i, &w);
        }
        w
    }

    /// Full Weyl orbit of a weight.
    pub fn orbit(&self, v: &[i64]) -> Vec<Weight> {
        let mut seen: std::collections::HashSet<Weight> = std::collections::HashSet::new();
        seen.insert(v.to_vec());
        let mut stack = vec![v.to_vec()];
        while let Some(w) = stack.pop() {
            for i in 0..self.0.rank {
                let u = self.simple_reflection(i, &w);
                if seen.insert(u.clone()) {
                    stack.push(u);
                }
            }
        }
        seen.into_iter().collect()
    }

    /// Weyl dimension formula, exact.
    pub fn weyl_dimension(&self, lambda: &[i64]) -> BigInt {
        let lr = add(lambda, &self.0.rho);
        let mut num = BigInt::from(1);
        let mut den = BigInt::from(1);
        for a in &self.0.positive_roots {
            num *= BigInt::from(dot(&lr, a));
            den *= BigInt::from(dot(&self.0.rho, a));
        }
        let (q, r) = num::Integer::div_rem(&num, &den);
        debug_assert!(num::Zero::is_zero(&r));
        q
    }
}

impl RootSystemData {
    fn enumerate_weyl(&mut self) {
        let rho = self.rho.clone();
        let mut seen: HashMap<Weight, usize> = HashMap::new();
        seen.insert(rho.clone(), 0);
        self.weyl.push(WeylElement {
            word: Vec::new(),
            sign: 1,
        });
        let mut images = vec![rho.clone()];
        let mut head = 0;
        while head < self.weyl.len() {
            let (word, sign, image) = (
                self.weyl[head].word.clone(),
                self.weyl[head].sign,
                images[head].clone(),
            );
            for i in 0..self.rank {
                let p = {
                    let a = &self.simple_roots[i];
                    let num = 2 * dot(&image, a);
                    let den = dot(a, a);
                    debug_assert_eq!(num % den, 0);
                    num / den
                };
                let new_image = sub(&image, &scale(&self.simple_roots[i], p));
                if !seen.contains_key(&new_image) {
                    seen.insert(new_image.clone(), self.weyl.len());
                    let mut new_word = word.clone();
                    new_word.push(i);
                    self.weyl.push(WeylElement {
                        word: new_word,
                        sign: -sign,
                    });
                    images.push(new_image);
                }
            }
            head += 1;
        }
        self.deltas = self
            .weyl
            .iter()
            .zip(&images)
            .map(|(w, img)| (w.sign, sub(&rho, img)))
            .collect();
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn weyl_group_orders() {
        assert_eq!(RootSystem::new(CartanType::A(1)).unwrap().weyl_order(), 2);
        assert_eq!(RootSystem::new(CartanType::A(2)).unwrap().weyl_order(), 6);
        assert_eq!(RootSystem::new(CartanType::A(5)).unwrap().weyl_order(), 720);
        assert_eq!(RootSystem::new(CartanType::B3).unwrap().weyl_order(), 48);
        assert_eq!(RootSystem::new(CartanType::C(2)).unwrap().weyl_order(), 8);
        assert_eq!(RootSystem::new(CartanType::C(3)).unwrap().weyl_order(), 48);
        assert_eq!(RootSystem::new(CartanType::G2).unwrap().weyl_order(), 12);
        assert!(RootSystem::new(CartanType::A(6)).is_err());
        assert!(RootSystem::new(CartanType::C(4)).is_err());
    }

    #[test]
    fn rho_pairs_to_one_with_simple_coroots() {
        for cartan in [
            CartanType::A(3),
            CartanType::B3,
            CartanType::C(2),
            CartanType::C(3),
            CartanType::G2,
        ] {
            let rs = RootSystem::new(cartan).unwrap();
            for a in rs.simple_roots() {
                // for A-type the shifted rho pairs to 1 as well
                assert_eq!(rs.coroot_pairing(rs.rho(), a), 1, "{}", cartan.label());
            }
        }
    }

    #[test]
    fn positive_root_counts() {
        let counts = [
            (CartanType::A(3), 6),
            (CartanType::A(5), 15),
            (CartanType::B3, 9),
            (CartanType::C(2), 4),
            (CartanType::C(3), 9),
            (CartanType::G2, 6),
        ];
        for (cartan, n) in counts {
            let rs = RootSystem::new(cartan).unwrap();
            assert_eq!(rs.positive_roots().len(), n);
            // every positive root pairs positively with rho
            for a in rs.positive_roots() {
                assert!(rs.dot(rs.rho(), a) > 0);
            }
        }
    }

    #[test]
    fn dominantize_reaches_a_dominant_weight() {
        let rs = RootSystem::new(CartanType::G2).unwrap();
        let w = rs.fundamental_weight(1).unwrap();
        for idx in 0..rs.weyl_order() {
            let moved = rs.apply_weyl(idx, &w);
            assert_eq!(rs.dominantize(&moved), w);
        }
        assert_eq!(rs.orbit(&w).len(), 6);
    }

    #[test]
    fn weyl_dimensions() {
        let g2 = RootSystem::new(CartanType::G2).unwrap();
        assert_eq!(
            g2.weyl_dimension(&g2.fundamental_weight(1).unwrap()),
            BigInt::from(7)
        );
        assert_eq!(g2.weyl_dimension(&g2.adjoint_weight()), BigInt::from(14));
        let b3 = RootSystem::new(CartanType::B3).unwrap();
        assert_eq!(
            b3.weyl_dimension(&b3.fundamental_weight(3).unwrap()),
            BigInt::from(8)
        );
        assert_eq!(
            b3.weyl_dimension(&b3.fundamental_weight(1).unwrap()),
            BigInt::from(7)
        );
        let a2 = RootSystem::new(CartanType::A(2)).unwrap();
        assert_eq!(a2.weyl_dimension(&a2.adjoint_weight()), BigInt::from(8));
        assert_eq!(
            a2.weyl_dimension(&a2.fundamental_weight(1).unwrap()),
            BigInt::from(3)
        );
        let c2 = RootSystem::new(CartanType::C(2)).unwrap();
        assert_eq!(
            c2.weyl_dimension(&c2.fundamental_weight(1).unwrap()),
            BigInt::from(4)
        );
    }
}
