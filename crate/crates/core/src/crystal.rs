//! Crystal graphs, tensor-word string statistics and the promotion map.
//!
//! A crystal is a finite labelled digraph whose edges `(a, i, b)` are the
//! lowering moves `f_i(a) = b`. Validation enforces the string axioms: per
//! label every vertex has at most one incoming and one outgoing edge, the
//! lowering relation is acyclic, the graph is connected, and there is
//! exactly one source (no raising moves anywhere) and one sink.
//!
//! The string data of a word is folded left to right with the tensor rule:
//! with `H` counting available raising moves and `D` available lowering
//! moves,
//!
//! ```text
//! H(AB) = H(A) + max(0, H(B) - D(A))      D(AB) = D(B) + max(0, D(A) - H(B))
//! ```
//!
//! so `H` never decreases when letters are appended: every prefix of an
//! invariant word has `H = 0`, which is what makes enumeration cheap.

use crate::csp::{FiniteAction, OrbitReport};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CrystalError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("crystal axiom violated: {0}")]
    Axiom(String),
    #[error("unknown builtin crystal: {0}")]
    UnknownBuiltin(String),
    #[error("word contains vertex {0}, outside 1..={1}")]
    BadVertex(usize, usize),
    #[error("word is not invariant: H = {h:?}, D = {d:?}")]
    NotInvariant { h: Vec<u32>, d: Vec<u32> },
    #[error("promotion step e_{label} undefined on {word:?}; crystal data is corrupt")]
    PromotionStep { label: usize, word: Vec<usize> },
    #[error("enumeration budget of {0} partial states exceeded")]
    BudgetExceeded(u64),
    #[error("promotion orbits need r >= 1")]
    EmptyPower,
    #[error("promotion is not closed on the invariant words: {0:?} maps outside the set")]
    NotClosed(Vec<usize>),
    #[error(transparent)]
    Orbit(#[from] crate::csp::CspError),
}

/// Word in the vertices of a crystal, 1-based.
pub type Word = Vec<usize>;

/// Validated crystal graph with precomputed string data.
#[derive(Debug)]
pub struct CrystalGraph {
    name: String,
    rank: usize,
    m: usize,
    /// `f_edge[v][i] = Some(w)` when the lowering move `i` sends `v+1` to `w`.
    f_edge: Vec<Vec<Option<usize>>>,
    e_edge: Vec<Vec<Option<usize>>>,
    /// String lengths per vertex and label.
    h: Vec<Vec<u32>>,
    d: Vec<Vec<u32>>,
    max_h: Vec<u32>,
    source: usize,
    sink: usize,
    /// Labels of one fixed lowering path from source to sink,
    /// lexicographically smallest.
    path_labels: Vec<usize>,
}

impl CrystalGraph {
    /// Builds and validates a crystal from its lowering edges.
    pub fn new(
        name: impl Into<String>,
        rank: usize,
        m: usize,
        edges: &[(usize, usize, usize)],
    ) -> Result<Self, CrystalError> {
        if m == 0 {
            return Err(CrystalError::Axiom(
                "crystal needs at least one vertex".into(),
            ));
        }
        if rank == 0 {
            return Err(CrystalError::Axiom(
                "crystal needs at least one label".into(),
            ));
        }
        let mut f_edge = vec![vec![None; rank]; m];
        let mut e_edge = vec![vec![None; rank]; m];
        for &(a, i, b) in edges {
            if a == 0 || a > m || b == 0 || b > m {
                return Err(CrystalError::Axiom(format!(
                    "edge {a} -{i}-> {b} leaves the vertex range 1..={m}"
                )));
            }
            if i == 0 || i > rank {
                return Err(CrystalError::Axiom(format!(
                    "edge {a} -{i}-> {b} uses a label outside 1..={rank}"
                )));
            }
            if f_edge[a - 1][i - 1].replace(b).is_some() {
                return Err(CrystalError::Axiom(format!(
                    "vertex {a} has two outgoing {i}-edges"
                )));
            }
            if e_edge[b - 1][i - 1].replace(a).is_some() {
                return Err(CrystalError::Axiom(format!(
                    "vertex {b} has two incoming {i}-edges"
                )));
            }
        }

        // connectivity, ignoring directions
        let mut seen = vec![false; m];
        let mut stack = vec![0usize];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for i in 0..rank {
                for u in [f_edge[v][i], e_edge[v][i]].into_iter().flatten() {
                    if !seen[u - 1] {
                        seen[u - 1] = true;
                        stack.push(u - 1);
                    }
                }
            }
        }
        if let Some(v) = seen.iter().position(|s| !s) {
            return Err(CrystalError::Axiom(format!(
                "vertex {} is disconnected from vertex 1",
                v + 1
            )));
        }

        // the lowering relation must be acyclic
        let mut outdeg: Vec<usize> = f_edge
            .iter()
            .map(|row| row.iter().flatten().count())
            .collect();
        let mut removed = 0usize;
        let mut frontier: Vec<usize> = (0..m).filter(|&v| outdeg[v] == 0).collect();
        while let Some(v) = frontier.pop() {
            removed += 1;
            for i in 0..rank {
                if let Some(u) = e_edge[v][i] {
                    outdeg[u - 1] -= 1;
                    if outdeg[u - 1] == 0 {
                        frontier.push(u - 1);
                    }
                }
            }
        }
        if removed != m {
            return Err(CrystalError::Axiom(
                "the lowering edges contain a cycle".into(),
            ));
        }

        // string lengths, walking each i-string
        let mut h = vec![vec![0u32; rank]; m];
        let mut d = vec![vec![0u32; rank]; m];
        for v in 0..m {
            for i in 0..rank {
                let mut up = 0u32;
                let mut cur = v;
                while let Some(u) = e_edge[cur][i] {
                    up += 1;
                    cur = u - 1;
                    if up as usize > m {
                        return Err(CrystalError::Axiom(format!(
                            "label {} string through vertex {} cycles",
                            i + 1,
                            v + 1
                        )));
                    }
                }
                h[v][i] = up;
                let mut down = 0u32;
                let mut cur = v;
                while let Some(u) = f_edge[cur][i] {
                    down += 1;
                    cur = u - 1;
                    if down as usize > m {
                        return Err(CrystalError::Axiom(format!(
                            "label {} string through vertex {} cycles",
                            i + 1,
                            v + 1
                        )));
                    }
                }
                d[v][i] = down;
            }
        }

        let sources: Vec<usize> = (0..m)
            .filter(|&v| h[v].iter().all(|&x| x == 0))
            .map(|v| v + 1)
            .collect();
        let sinks: Vec<usize> = (0..m)
            .filter(|&v| d[v].iter().all(|&x| x == 0))
            .map(|v| v + 1)
            .collect();
        if sources.len() != 1 {
            return Err(CrystalError::Axiom(format!(
                "expected one source, found {sources:?}"
            )));
        }
        if sinks.len() != 1 {
            return Err(CrystalError::Axiom(format!(
                "expected one sink, found {sinks:?}"
            )));
        }
        let (source, sink) = (sources[0], sinks[0]);

        // lexicographically smallest maximal lowering path; every non-sink
        // vertex has an outgoing edge, so it ends at the sink
        let mut path_labels = Vec::new();
        let mut cur = source - 1;
        while cur != sink - 1 {
            let (label, next) = (0..rank)
                .find_map(|i| f_edge[cur][i].map(|u| (i + 1, u - 1)))
                .expect("non-sink vertex has a lowering move");
            path_labels.push(label);
            cur = next;
            if path_labels.len() > m {
                return Err(CrystalError::Axiom("lowering path does not close".into()));
            }
        }

        let max_h = (0..rank)
            .map(|i| (0..m).map(|v| h[v][i]).max().unwrap_or(0))
            .collect();

        Ok(CrystalGraph {
            name: name.into(),
            rank,
            m,
            f_edge,
            e_edge,
            h,
            d,
            max_h,
            source,
            sink,
            path_labels,
        })
    }

    /// Parses the line-oriented crystal file format:
    /// `name <id>`, `labels <rank>`, `vertices <m>`, one `edge <a> <i> <b>`
    /// per lowering edge, `#` comments.
    pub fn load(text: &str) -> Result<Self, CrystalError> {
        let mut name: Option<String> = None;
        let mut rank: Option<usize> = None;
        let mut m: Option<usize> = None;
        let mut edges: Vec<(usize, usize, usize)> = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let content = raw.split('#').next().unwrap_or("").trim();
            if content.is_empty() {
                continue;
            }
            let mut it = content.split_whitespace();
            let key = it.next().expect("nonempty line");
            let parse = |tok: Option<&str>, what: &str| -> Result<usize, CrystalError> {
                tok.ok_or_else(|| CrystalError::Parse {
                    line,
                    message: format!("missing {what}"),
                })?
                .parse()
                .map_err(|_| CrystalError::Parse {
                    line,
                    message: format!("{what} is not a number"),
                })
            };
            match key {
                "name" => {
                    name = Some(
                        it.next()
                            .ok_or_else(|| CrystalError::Parse {
                                line,
                                message: "missing crystal name".into(),
                            })?
                            .to_string(),
                    );
                }
                "labels" => rank = Some(parse(it.next(), "label count")?),
                "vertices" => m = Some(parse(it.next(), "vertex count")?),
                "edge" => {
                    let a = parse(it.next(), "edge source")?;
                    let i = parse(it.next(), "edge label")?;
                    let b = parse(it.next(), "edge target")?;
                    edges.push((a, i, b));
                }
                other => {
                    return Err(CrystalError::Parse {
                        line,
                        message: format!("unknown directive '{other}'"),
                    })
                }
            }
            if it.next().is_some() {
                return Err(CrystalError::Parse {
                    line,
                    message: "trailing tokens".into(),
                });
            }
        }
        let name = name.ok_or(CrystalError::Parse {
            line: 0,
            message: "missing 'name' directive".into(),
        })?;
        let rank = rank.ok_or(CrystalError::Parse {
            line: 0,
            message: "missing 'labels' directive".into(),
        })?;
        let m = m.ok_or(CrystalError::Parse {
            line: 0,
            message: "missing 'vertices' directive".into(),
        })?;
        CrystalGraph::new(name, rank, m, &edges)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn vertex_count(&self) -> usize {
        self.m
    }

    pub fn source(&self) -> usize {
        self.source
    }

    pub fn sink(&self) -> usize {
        self.sink
    }

    pub fn path_labels(&self) -> &[usize] {
        &self.path_labels
    }

    fn check_word(&self, word: &[usize]) -> Result<(), CrystalError> {
        for &v in word {
            if v == 0 || v > self.m {
                return Err(CrystalError::BadVertex(v, self.m));
            }
        }
        Ok(())
    }

    /// Left fold of the tensor rule over the word; the empty word is the
    /// unit crystal with `H = D = 0`.
    pub fn string_data(&self, word: &[usize]) -> (Vec<u32>, Vec<u32>) {
        let mut h_acc = vec![0u32; self.rank];
        let mut d_acc = vec![0u32; self.rank];
        for &v in word {
            for i in 0..self.rank {
                let hb = self.h[v - 1][i];
                let db = self.d[v - 1][i];
                if hb >= d_acc[i] {
                    h_acc[i] += hb - d_acc[i];
                    d_acc[i] = db;
                } else {
                    d_acc[i] = db + d_acc[i] - hb;
                }
            }
        }
        (h_acc, d_acc)
    }

    /// Prefix lowering counts `D(w[0..p])` for `p = 0..=len`, one label.
    fn prefix_d(&self, word: &[usize], label: usize) -> Vec<u32> {
        let i = label - 1;
        let mut out = Vec::with_capacity(word.len() + 1);
        let mut d_acc = 0u32;
        out.push(0);
        for &v in word {
            let hb = self.h[v - 1][i];
            let db = self.d[v - 1][i];
            d_acc = db + d_acc.saturating_sub(hb);
            out.push(d_acc);
        }
        out
    }

    /// Raising move on a word; `None` when `H(word) = 0` for this label.
    pub fn apply_e(&self, word: &[usize], label: usize) -> Option<Word> {
        self.check_word(word).ok()?;
        let i = label - 1;
        let pre = self.prefix_d(word, label);
        for p in (0..word.len()).rev() {
            let v = word[p] - 1;
            if self.h[v][i] > pre[p] {
                let up = self.e_edge[v][i].expect("H > 0 vertex has a raising move");
                let mut out = word.to_vec();
                out[p] = up;
                return Some(out);
            }
        }
        None
    }

    /// Lowering move on a word; `None` when `D(word) = 0` for this label.
    pub fn apply_f(&self, word: &[usize], label: usize) -> Option<Word> {
        self.check_word(word).ok()?;
        let i = label - 1;
        let (_, d) = self.string_data(word);
        if d[i] == 0 {
            return None;
        }
        let pre = self.prefix_d(word, label);
        for p in (0..word.len()).rev() {
            let v = word[p] - 1;
            if self.h[v][i] >= pre[p] {
                let down = self.f_edge[v][i].expect("selected vertex has a lowering move");
                let mut out = word.to_vec();
                out[p] = down;
                return Some(out);
            }
        }
        unreachable!("D > 0 word always selects a letter");
    }

    pub fn is_invariant(&self, word: &[usize]) -> bool {
        let (h, d) = self.string_data(word);
        h.iter().all(|&x| x == 0) && d.iter().all(|&x| x == 0)
    }

    /// All words of length `r` with `H = D = 0`, lexicographically ordered.
    ///
    /// Prefixes of invariant words have `H = 0` exactly, so the search only
    /// appends letters whose raising string is absorbed by the running `D`,
    /// and prunes when `D` outgrows what the remaining letters can cancel.
    pub fn enumerate_invariants(&self, r: usize, budget: u64) -> Result<Vec<Word>, CrystalError> {
        let mut out = Vec::new();
        let mut word: Word = Vec::with_capacity(r);
        let mut d_acc = vec![0u32; self.rank];
        let mut visited: u64 = 0;
        self.enumerate_rec(r, budget, &mut visited, &mut word, &mut d_acc, &mut out)?;
        Ok(out)
    }

    fn enumerate_rec(
        &self,
        r: usize,
        budget: u64,
        visited: &mut u64,
        word: &mut Word,
        d_acc: &mut Vec<u32>,
        out: &mut Vec<Word>,
    ) -> Result<(), CrystalError> {
        *visited += 1;
        if *visited > budget {
            return Err(CrystalError::BudgetExceeded(budget));
        }
        if word.len() == r {
            if d_acc.iter().all(|&x| x == 0) {
                out.push(word.clone());
            }
            return Ok(());
        }
        let remaining = (r - word.len() - 1) as u32;
        'next: for v in 0..self.m {
            let mut new_d = vec![0u32; self.rank];
            for i in 0..self.rank {
                let hb = self.h[v][i];
                if hb > d_acc[i] {
                    continue 'next; // H would become positive
                }
                new_d[i] = self.d[v][i] + (d_acc[i] - hb);
                if new_d[i] > remaining.saturating_mul(self.max_h[i]) {
                    continue 'next; // not enough letters left to cancel D
                }
            }
            word.push(v + 1);
            let saved = std::mem::replace(d_acc, new_d);
            self.enumerate_rec(r, budget, visited, word, d_acc, out)?;
            *d_acc = saved;
            word.pop();
        }
        Ok(())
    }

    /// Promotion: drop the leading source letter, raise the remainder to
    /// the top of its component, append the sink.
    ///
    /// The dropped word sits at the bottom of a component whose unique top
    /// is the promotion image before the final letter, so any maximal chain
    /// of raising moves reaches it; the smallest available label is taken
    /// at each step to make traces reproducible. The number of moves always
    /// equals the length of a lowering path through the crystal.
    pub fn promote(&self, word: &[usize]) -> Result<Word, CrystalError> {
        self.check_word(word)?;
        let (h, d) = self.string_data(word);
        if h.iter().any(|&x| x != 0) || d.iter().any(|&x| x != 0) || word.is_empty() {
            return Err(CrystalError::NotInvariant { h, d });
        }
        debug_assert_eq!(word[0], self.source);
        debug_assert_eq!(*word.last().expect("nonempty"), self.sink);
        let mut w: Word = word[1..].to_vec();
        let moves = self.path_labels.len();
        for _ in 0..moves {
            let (hw, _) = self.string_data(&w);
            let Some(label) = hw.iter().position(|&x| x > 0).map(|i| i + 1) else {
                break;
            };
            w = self.apply_e(&w, label).ok_or(CrystalError::PromotionStep {
                label,
                word: w.clone(),
            })?;
        }
        let (hw, _) = self.string_data(&w);
        if hw.iter().any(|&x| x > 0) {
            return Err(CrystalError::PromotionStep {
                label: 0,
                word: w.clone(),
            });
        }
        w.push(self.sink);
        debug_assert!(self.is_invariant(&w));
        Ok(w)
    }

    /// Orbit report of promotion on the invariant words of length `r`;
    /// orbit sizes must divide `r`, so `promote^r = id` is checked along
    /// the way.
    pub fn promotion_orbits(&self, r: usize, budget: u64) -> Result<OrbitReport, CrystalError> {
        Ok(self.promotion_action(r, budget)?.orbits()?)
    }

    /// The promotion action on invariant words, for CSP verdicts.
    pub fn promotion_action(&self, r: usize, budget: u64) -> Result<FiniteAction, CrystalError> {
        if r == 0 {
            return Err(CrystalError::EmptyPower);
        }
        let words = self.enumerate_invariants(r, budget)?;
        let mut images = Vec::with_capacity(words.len());
        for w in &words {
            let img = self.promote(w)?;
            let idx = words
                .binary_search(&img)
                .map_err(|_| CrystalError::NotClosed(img.clone()))?;
            images.push(idx);
        }
        Ok(FiniteAction::new(
            words.iter().map(render_word).collect(),
            images,
            r,
        )?)
    }
}

pub fn render_word(w: &Word) -> String {
    w.iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

/// Builtin crystals.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Builtin {
    /// Chain `1 -> 2 -> ... -> n` with labels `1..n-1`: the defining
    /// crystal of `sl(n)`, `n <= 6`.
    TypeAVector(usize),
    /// Chain of `k+1` vertices, all edges labelled 1: the `(k+1)`-dimensional
    /// crystal of `sl(2)`, `k <= 6`.
    Sl2(usize),
    /// Seven-vertex chain with labels 1,2,1,1,2,1.
    G2Fund7,
    /// Eight-vertex spin crystal of `so(7)`.
    B3Spin,
    /// Seven-vertex chain with labels 1,2,3,3,2,1: the vector crystal of
    /// `so(7)`.
    SoVector7,
}

pub fn builtin(which: Builtin) -> Result<CrystalGraph, CrystalError> {
    match which {
        Builtin::TypeAVector(n) => {
            if n < 2 || n > 6 {
                return Err(CrystalError::UnknownBuiltin(format!(
                    "typeA_vector({n}); supported 2..=6"
                )));
            }
            let edges: Vec<(usize, usize, usize)> = (1..n).map(|i| (i, i, i + 1)).collect();
            CrystalGraph::new(format!("typeA_vector_{n}"), n - 1, n, &edges)
        }
        Builtin::Sl2(k) => {
            if k < 1 || k > 6 {
                return Err(CrystalError::UnknownBuiltin(format!(
                    "sl2({k}); supported 1..=6"
                )));
            }
            let edges: Vec<(usize, usize, usize)> = (1..=k).map(|i| (i, 1, i + 1)).collect();
            CrystalGraph::new(format!("sl2_{k}"), 1, k + 1, &edges)
        }
        Builtin::G2Fund7 => CrystalGraph::new(
            "g2_fund7",
            2,
            7,
            &[
                (1, 1, 2),
                (2, 2, 3),
                (3, 1, 4),
                (4, 1, 5),
                (5, 2, 6),
                (6, 1, 7),
            ],
        ),
        Builtin::B3Spin => CrystalGraph::new(
            "b3_spin",
            3,
            8,
            &[
                (1, 3, 2),
                (2, 2, 3),
                (3, 1, 5),
                (3, 3, 4),
                (4, 1, 6),
                (5, 3, 6),
                (6, 2, 7),
                (7, 3, 8),
            ],
        ),
        Builtin::SoVector7 => CrystalGraph::new(
            "so7_vector",
            3,
            7,
            &[
                (1, 1, 2),
                (2, 2, 3),
                (3, 3, 4),
                (4, 3, 5),
                (5, 2, 6),
                (6, 1, 7),
            ],
        ),
    }
}

/// Parses a builtin name as used on the command line.
pub fn builtin_by_name(name: &str, param: Option<usize>) -> Result<CrystalGraph, CrystalError> {
    match (name, param) {
        ("typeA_vector", Some(n)) => builtin(Builtin::TypeAVector(n)),
        ("sl2", Some(k)) => builtin(Builtin::Sl2(k)),
        ("g2_fund7", _) => builtin(Builtin::G2Fund7),
        ("b3_spin", _) => builtin(Builtin::B3Spin),
        ("so_vector", _) => builtin(Builtin::SoVector7),
        _ => Err(CrystalError::UnknownBuiltin(name.to_string())),
    }
}
