//! Temperley-Lieb diagrams, their UD-word and Dyck-path encodings, the
//! word-level promotion rule and the skein action of the symmetric group.

use super::DiagramError;
use std::collections::BTreeMap;
use std::fmt;

/// Noncrossing perfect matching of the points `1..=2r` on a line, arcs
/// drawn below. Canonical form: arcs `(a, b)` with `a < b`, sorted by the
/// opener `a`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TLDiagram {
    arcs: Vec<(usize, usize)>,
}

impl TLDiagram {
    pub fn new(mut arcs: Vec<(usize, usize)>) -> Result<Self, DiagramError> {
        for arc in arcs.iter_mut() {
            if arc.0 > arc.1 {
                *arc = (arc.1, arc.0);
            }
        }
        arcs.sort();
        let n = 2 * arcs.len();
        let mut seen = vec![false; n + 1];
        for &(a, b) in &arcs {
            if a == 0 || b > n || a == b {
                return Err(DiagramError::BadDiagram(format!(
                    "arc ({a},{b}) out of range"
                )));
            }
            for p in [a, b] {
                if seen[p] {
                    return Err(DiagramError::BadDiagram(format!("point {p} used twice")));
                }
                seen[p] = true;
            }
        }
        for &(a, b) in &arcs {
            for &(c, d) in &arcs {
                if a < c && c < b && b < d {
                    return Err(DiagramError::BadDiagram(format!(
                        "arcs ({a},{b}) and ({c},{d}) cross"
                    )));
                }
            }
        }
        Ok(TLDiagram { arcs })
    }

    pub fn arcs(&self) -> &[(usize, usize)] {
        &self.arcs
    }

    pub fn points(&self) -> usize {
        2 * self.arcs.len()
    }

    pub fn partner(&self, p: usize) -> usize {
        for &(a, b) in &self.arcs {
            if a == p {
                return b;
            }
            if b == p {
                return a;
            }
        }
        panic!("point {p} not in diagram");
    }
}

impl fmt::Display for TLDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &(a, b) in &self.arcs {
            write!(f, "({a},{b})")?;
        }
        Ok(())
    }
}

/// Lattice path of `+1`/`-1` steps with nonnegative partial sums returning
/// to zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DyckPath {
    steps: Vec<i8>,
}

impl DyckPath {
    pub fn new(steps: Vec<i8>) -> Result<Self, DiagramError> {
        let mut height = 0i64;
        for &s in &steps {
            if s != 1 && s != -1 {
                return Err(DiagramError::Unbalanced("steps must be +-1".into()));
            }
            height += s as i64;
            if height < 0 {
                return Err(DiagramError::Unbalanced("negative partial sum".into()));
            }
        }
        if height != 0 {
            return Err(DiagramError::Unbalanced(
                "path does not return to zero".into(),
            ));
        }
        Ok(DyckPath { steps })
    }

    pub fn steps(&self) -> &[i8] {
        &self.steps
    }

    /// Heights `a_0 = 0, ..., a_{2r} = 0`.
    pub fn heights(&self) -> Vec<i64> {
        let mut h = vec![0i64];
        for &s in &self.steps {
            h.push(h.last().unwrap() + s as i64);
        }
        h
    }
}

fn parse_ud(word: &str) -> Result<Vec<bool>, DiagramError> {
    word.chars()
        .map(|c| match c {
            'U' => Ok(true),
            'D' => Ok(false),
            other => Err(DiagramError::BadLetter(other)),
        })
        .collect()
}

fn check_balanced(letters: &[bool], word: &str) -> Result<(), DiagramError> {
    let mut height = 0i64;
    for &u in letters {
        height += if u { 1 } else { -1 };
        if height < 0 {
            return Err(DiagramError::Unbalanced(word.to_string()));
        }
    }
    if height != 0 {
        return Err(DiagramError::Unbalanced(word.to_string()));
    }
    Ok(())
}

/// Diagram of a balanced nonnegative UD-word: U opens an arc, D closes the
/// most recent open one.
pub fn word_to_tl(word: &str) -> Result<TLDiagram, DiagramError> {
    let letters = parse_ud(word)?;
    check_balanced(&letters, word)?;
    let mut stack = Vec::new();
    let mut arcs = Vec::new();
    for (i, &u) in letters.iter().enumerate() {
        if u {
            stack.push(i + 1);
        } else {
            let a = stack.pop().expect("balanced word");
            arcs.push((a, i + 1));
        }
    }
    TLDiagram::new(arcs)
}

/// Word of a diagram: position `i` reads U when its partner lies to the
/// right.
pub fn tl_to_word(d: &TLDiagram) -> String {
    let n = d.points();
    let mut letters = vec!['D'; n];
    for &(a, _) in d.arcs() {
        letters[a - 1] = 'U';
    }
    letters.into_iter().collect()
}

pub fn word_to_dyck(word: &str) -> Result<DyckPath, DiagramError> {
    let letters = parse_ud(word)?;
    check_balanced(&letters, word)?;
    DyckPath::new(letters.iter().map(|&u| if u { 1 } else { -1 }).collect())
}

pub fn dyck_to_word(path: &DyckPath) -> String {
    path.steps()
        .iter()
        .map(|&s| if s == 1 { 'U' } else { 'D' })
        .collect()
}

/// Rotation `i -> i + 1` modulo `2r` with representatives `1..=2r`.
pub fn rotate_tl(d: &TLDiagram) -> TLDiagram {
    let n = d.points();
    let arcs = d
        .arcs()
        .iter()
        .map(|&(a, b)| (a % n + 1, b % n + 1))
        .collect();
    TLDiagram::new(arcs).expect("rotation preserves noncrossing")
}

/// All Temperley-Lieb diagrams on `2r` points, ordered by their arc lists.
pub fn all_tl_diagrams(r: usize) -> Vec<TLDiagram> {
    fn rec(word: &mut Vec<bool>, open: usize, remaining: usize, out: &mut Vec<String>) {
        if remaining == 0 {
            if open == 0 {
                out.push(word.iter().map(|&u| if u { 'U' } else { 'D' }).collect());
            }
            return;
        }
        if open < remaining {
            word.push(true);
            rec(word, open + 1, remaining - 1, out);
            word.pop();
        }
        if open > 0 {
            word.push(false);
            rec(word, open - 1, remaining - 1, out);
            word.pop();
        }
    }
    let mut words = Vec::new();
    rec(&mut Vec::new(), 0, 2 * r, &mut words);
    let mut diagrams: Vec<TLDiagram> = words
        .iter()
        .map(|w| word_to_tl(w).expect("generated words are balanced"))
        .collect();
    diagrams.sort();
    diagrams
}

/// Word-level promotion: drop the leading U, turn the last D whose prefix
/// is itself a diagram word back into a U, and append a D.
pub fn tl_word_promote(word: &str) -> Result<String, DiagramError> {
    let letters = parse_ud(word)?;
    check_balanced(&letters, word)?;
    if letters.is_empty() {
        return Ok(String::new());
    }
    let rest = &letters[1..];
    // The last D whose prefix is itself a diagram word. A prefix must stay
    // nonnegative, and a D at height zero immediately dips below, so the
    // candidate is the first D met at height zero.
    let mut flip_at = None;
    let mut height = 0i64;
    for (i, &u) in rest.iter().enumerate() {
        if !u && height == 0 {
            flip_at = Some(i);
            break;
        }
        height += if u { 1 } else { -1 };
    }
    let flip_at = flip_at.ok_or_else(|| DiagramError::Unbalanced(word.to_string()))?;
    let mut out: Vec<char> = rest
        .iter()
        .enumerate()
        .map(|(i, &u)| if u || i == flip_at { 'U' } else { 'D' })
        .collect();
    out.push('D');
    Ok(out.into_iter().collect())
}

/// Integer combination of Temperley-Lieb diagrams.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TLLinearCombo {
    terms: BTreeMap<TLDiagram, i64>,
}

impl TLLinearCombo {
    pub fn zero() -> Self {
        TLLinearCombo {
            terms: BTreeMap::new(),
        }
    }

    pub fn single(d: TLDiagram, c: i64) -> Self {
        let mut terms = BTreeMap::new();
        if c != 0 {
            terms.insert(d, c);
        }
        TLLinearCombo { terms }
    }

    pub fn terms(&self) -> &BTreeMap<TLDiagram, i64> {
        &self.terms
    }

    pub fn add_term(&mut self, d: TLDiagram, c: i64) {
        let e = self.terms.entry(d.clone()).or_insert(0);
        *e += c;
        if *e == 0 {
            self.terms.remove(&d);
        }
    }
}

/// Cup-cap generator at positions `(i, i+1)` applied on top of a diagram:
/// a closed loop contributes the factor -2.
fn cupcap(i: usize, d: &TLDiagram) -> (i64, TLDiagram) {
    let a = d.partner(i);
    let b = d.partner(i + 1);
    if a == i + 1 {
        // arc (i, i+1) closes a loop
        return (-2, d.clone());
    }
    let mut arcs: Vec<(usize, usize)> = d
        .arcs()
        .iter()
        .copied()
        .filter(|&(x, y)| x != i && y != i && x != i + 1 && y != i + 1)
        .collect();
    arcs.push((a.min(b), a.max(b)));
    arcs.push((i, i + 1));
    (
        1,
        TLDiagram::new(arcs).expect("cup-cap keeps arcs noncrossing"),
    )
}

/// Simple transposition `s_i` acting on a diagram through the skein
/// relations: a crossing resolves to minus the identity minus the cup-cap,
/// and closed loops count -2.
pub fn tl_skein_transposition(
    r: usize,
    i: usize,
    d: &TLDiagram,
) -> Result<TLLinearCombo, DiagramError> {
    if i == 0 || i >= 2 * r {
        return Err(DiagramError::TranspositionRange { i, max: 2 * r });
    }
    let mut combo = TLLinearCombo::zero();
    combo.add_term(d.clone(), -1);
    let (c, e) = cupcap(i, d);
    combo.add_term(e, -c);
    Ok(combo)
}

fn apply_transposition_combo(
    r: usize,
    i: usize,
    combo: &TLLinearCombo,
) -> Result<TLLinearCombo, DiagramError> {
    let mut out = TLLinearCombo::zero();
    for (d, &c) in combo.terms() {
        for (e, &k) in tl_skein_transposition(r, i, d)?.terms() {
            out.add_term(e.clone(), c * k);
        }
    }
    Ok(out)
}

/// Matrix of the long cycle `s_1 s_2 ... s_{2r-1}` on the diagram basis,
/// columns indexed by `all_tl_diagrams(r)`. Equals the permutation matrix
/// of rotation.
pub fn tl_long_cycle_matrix(r: usize) -> Result<Vec<Vec<i64>>, DiagramError> {
    let basis = all_tl_diagrams(r);
    let index: BTreeMap<&TLDiagram, usize> =
        basis.iter().enumerate().map(|(i, d)| (d, i)).collect();
    let mut matrix = vec![vec![0i64; basis.len()]; basis.len()];
    for (j, d) in basis.iter().enumerate() {
        // rightmost factor acts first
        let mut combo = TLLinearCombo::single(d.clone(), 1);
        for i in (1..2 * r).rev() {
            combo = apply_transposition_combo(r, i, &combo)?;
        }
        for (e, &c) in combo.terms() {
            matrix[index[e]][j] = c;
        }
    }
    Ok(matrix)
}

/// Diagrams on `k*n` points with no arc inside a block `{k*i+1..k*(i+1)}`.
pub fn block_tl_subset(k: usize, n: usize) -> Result<Vec<TLDiagram>, DiagramError> {
    let points = k * n;
    if points % 2 != 0 {
        return Ok(Vec::new());
    }
    if points > 18 {
        return Err(DiagramError::Budget(format!(
            "block subset on {points} points"
        )));
    }
    let all = all_tl_diagrams(points / 2);
    Ok(all
        .into_iter()
        .filter(|d| d.arcs().iter().all(|&(a, b)| (a - 1) / k != (b - 1) / k))
        .collect())
}
