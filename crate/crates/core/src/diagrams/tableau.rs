//! Rectangular standard tableaux and jeu-de-taquin promotion.

use super::tl::{tl_to_word, word_to_tl, TLDiagram};
use super::DiagramError;
use std::fmt;

/// Standard tableau of rectangular shape `k^n`, stored row-major.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RectTableau {
    rows: Vec<Vec<usize>>,
}

impl RectTableau {
    pub fn new(rows: Vec<Vec<usize>>) -> Result<Self, DiagramError> {
        if rows.is_empty() || rows[0].is_empty() {
            return Err(DiagramError::NotRectangular);
        }
        let k = rows[0].len();
        if rows.iter().any(|r| r.len() != k) {
            return Err(DiagramError::NotRectangular);
        }
        let n = rows.len();
        let total = n * k;
        let mut seen = vec![false; total + 1];
        for row in &rows {
            for &v in row {
                if v == 0 || v > total || seen[v] {
                    return Err(DiagramError::BadTableau(format!(
                        "entries must be a bijection with 1..={total}"
                    )));
                }
                seen[v] = true;
            }
        }
        for (i, row) in rows.iter().enumerate() {
            for j in 0..k {
                if j + 1 < k && row[j] >= row[j + 1] {
                    return Err(DiagramError::BadTableau(format!(
                        "row {} is not increasing",
                        i + 1
                    )));
                }
                if i + 1 < n && row[j] >= rows[i + 1][j] {
                    return Err(DiagramError::BadTableau(format!(
                        "column {} is not increasing",
                        j + 1
                    )));
                }
            }
        }
        Ok(RectTableau { rows })
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn n_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn n_cols(&self) -> usize {
        self.rows[0].len()
    }

    pub fn size(&self) -> usize {
        self.n_rows() * self.n_cols()
    }

    /// Reading word: position `v` holds the row index (1-based) of the
    /// value `v`. For rectangles this is a lattice word.
    pub fn word(&self) -> Vec<usize> {
        let mut out = vec![0; self.size()];
        for (i, row) in self.rows.iter().enumerate() {
            for &v in row {
                out[v - 1] = i + 1;
            }
        }
        out
    }

    /// Rebuilds the tableau from a lattice word with letters `1..=n_rows`.
    pub fn from_word(word: &[usize], n_rows: usize) -> Result<Self, DiagramError> {
        let mut rows = vec![Vec::new(); n_rows];
        for (v, &row) in word.iter().enumerate() {
            if row == 0 || row > n_rows {
                return Err(DiagramError::BadTableau(format!(
                    "letter {row} outside 1..={n_rows}"
                )));
            }
            rows[row - 1].push(v + 1);
        }
        RectTableau::new(rows)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!(self.rows)
    }
}

impl fmt::Display for RectTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.rows.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            let cells: Vec<String> = row.iter().map(|v| v.to_string()).collect();
            write!(f, "{}", cells.join(" "))?;
        }
        Ok(())
    }
}

/// Jeu-de-taquin promotion: delete 1, decrement everything, slide the hole
/// from the top-left to the bottom-right corner moving the smaller of the
/// right and below neighbours, then write the largest entry in the corner.
pub fn jdt_promote(t: &RectTableau) -> RectTableau {
    let n = t.n_rows();
    let k = t.n_cols();
    let total = n * k;
    let mut grid: Vec<Vec<usize>> = t
        .rows
        .iter()
        .map(|row| row.iter().map(|&v| v - 1).collect())
        .collect();
    // hole at (0,0) after removing the former 1
    let (mut r, mut c) = (0usize, 0usize);
    loop {
        let right = (c + 1 < k).then(|| grid[r][c + 1]);
        let below = (r + 1 < n).then(|| grid[r + 1][c]);
        match (right, below) {
            (Some(x), Some(y)) => {
                if x < y {
                    grid[r][c] = x;
                    c += 1;
                } else {
                    grid[r][c] = y;
                    r += 1;
                }
            }
            (Some(x), None) => {
                grid[r][c] = x;
                c += 1;
            }
            (None, Some(y)) => {
                grid[r][c] = y;
                r += 1;
            }
            (None, None) => break,
        }
    }
    debug_assert_eq!((r, c), (n - 1, k - 1));
    grid[r][c] = total;
    RectTableau::new(grid).expect("sliding preserves standardness")
}

/// Major index: sum of all `i` whose successor lies in a strictly lower row.
pub fn tableau_maj(t: &RectTableau) -> usize {
    crate::symfunc::tableau_maj(t.rows())
}

/// Two-row tableau of a diagram word: U positions fill the top row.
pub fn word_to_tableau(word: &str) -> Result<RectTableau, DiagramError> {
    let d = word_to_tl(word)?;
    let n = d.points();
    let mut top = Vec::new();
    let mut bottom = Vec::new();
    let letters = tl_to_word_letters(&d);
    for i in 1..=n {
        if letters[i - 1] {
            top.push(i);
        } else {
            bottom.push(i);
        }
    }
    RectTableau::new(vec![top, bottom])
}

pub fn tableau_to_word(t: &RectTableau) -> Result<String, DiagramError> {
    if t.n_rows() != 2 {
        return Err(DiagramError::BadTableau(
            "UD-words encode two-row tableaux".into(),
        ));
    }
    Ok(t.word()
        .iter()
        .map(|&row| if row == 1 { 'U' } else { 'D' })
        .collect())
}

fn tl_to_word_letters(d: &TLDiagram) -> Vec<bool> {
    tl_to_word(d).chars().map(|c| c == 'U').collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::crystal::{builtin, Builtin};

    fn t(rows: &[&[usize]]) -> RectTableau {
        RectTableau::new(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    #[test]
    fn validation() {
        assert!(RectTableau::new(vec![vec![1, 2], vec![3]]).is_err());
        assert!(RectTableau::new(vec![vec![1, 3], vec![2, 3]]).is_err());
        assert!(RectTableau::new(vec![vec![2, 1], vec![3, 4]]).is_err());
        assert!(RectTableau::new(vec![vec![1, 4], vec![2, 3]]).is_err());
    }

    #[test]
    fn three_by_three_worked_example() {
        let start = t(&[&[1, 2, 3], &[4, 5, 7], &[6, 8, 9]]);
        let end = t(&[&[1, 2, 6], &[3, 4, 8], &[5, 7, 9]]);
        assert_eq!(jdt_promote(&start), end);
        assert_eq!(start.word(), vec![1, 1, 1, 2, 2, 3, 2, 3, 3]);
        assert_eq!(end.word(), vec![1, 1, 2, 2, 3, 1, 3, 2, 3]);
    }

    #[test]
    fn four_by_three_worked_example() {
        let start = t(&[&[1, 4, 6], &[2, 5, 7], &[3, 9, 11], &[8, 10, 12]]);
        let end = t(&[&[1, 3, 5], &[2, 4, 6], &[7, 8, 10], &[9, 11, 12]]);
        assert_eq!(jdt_promote(&start), end);
        assert_eq!(start.word(), vec![1, 2, 3, 1, 2, 1, 2, 4, 3, 4, 3, 4]);
        assert_eq!(end.word(), vec![1, 2, 1, 2, 1, 2, 3, 3, 4, 3, 4, 4]);
    }

    #[test]
    fn single_column_is_fixed() {
        let col = t(&[&[1], &[2], &[3], &[4]]);
        assert_eq!(jdt_promote(&col), col);
    }

    #[test]
    fn maj_examples() {
        assert_eq!(tableau_maj(&t(&[&[1, 2], &[3, 4]])), 2);
        assert_eq!(tableau_maj(&t(&[&[1, 2, 3, 4]])), 0);
        assert_eq!(tableau_maj(&t(&[&[1], &[2], &[3], &[4]])), 6);
    }

    #[test]
    fn two_row_word_bijection() {
        let tab = word_to_tableau("UUUDDUDD").unwrap();
        assert_eq!(tab.rows(), &[vec![1, 2, 3, 6], vec![4, 5, 7, 8]]);
        assert_eq!(tableau_to_word(&tab).unwrap(), "UUUDDUDD");
    }

    #[test]
    fn jdt_agrees_with_word_promotion_on_two_rows() {
        use super::super::tl::{all_tl_diagrams, tl_to_word, tl_word_promote};
        for r in 1..=6 {
            for d in all_tl_diagrams(r) {
                let w = tl_to_word(&d);
                let tab = word_to_tableau(&w).unwrap();
                let promoted = jdt_promote(&tab);
                assert_eq!(
                    tableau_to_word(&promoted).unwrap(),
                    tl_word_promote(&w).unwrap(),
                    "word {w}"
                );
            }
        }
    }

    #[test]
    fn jdt_agrees_with_crystal_promotion() {
        for n in 2..=4usize {
            let x = builtin(Builtin::TypeAVector(n)).unwrap();
            for k in 1..=3usize {
                let words = x.enumerate_invariants(n * k, 1_000_000).unwrap();
                for w in words {
                    let tab = RectTableau::from_word(&w, n).unwrap();
                    let promoted = jdt_promote(&tab);
                    assert_eq!(
                        promoted.word(),
                        x.promote(&w).unwrap(),
                        "n={n} k={k} word {w:?}"
                    );
                }
            }
        }
    }

    #[test]
    fn jdt_has_order_dividing_the_size() {
        for (n, k) in [(2usize, 3usize), (3, 2), (3, 3), (4, 2)] {
            let x = builtin(Builtin::TypeAVector(n)).unwrap();
            for w in x.enumerate_invariants(n * k, 1_000_000).unwrap() {
                let start = RectTableau::from_word(&w, n).unwrap();
                let mut cur = start.clone();
                for _ in 0..n * k {
                    cur = jdt_promote(&cur);
                }
                assert_eq!(cur, start);
            }
        }
    }
}
