//! Standard (skew) immaculate tableaux.
//!
//! A filling of `α/β` by `1..=n` is a standard immaculate tableau when every
//! row increases left to right and the cells of the first column of the full
//! diagram (rows with `β_j = 0`) increase bottom to top. Rows that start to
//! the right of column one carry no column condition.

use std::fmt;

use serde::Serialize;

use crate::composition::{comp_of, SkewShape, Subset};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Tableau {
    #[serde(skip)]
    shape: SkewShape,
    /// Bottom row first.
    rows: Vec<Vec<usize>>,
}

impl Tableau {
    /// Wraps a filling without validating it; see [`is_valid_sit`].
    pub fn new(shape: SkewShape, rows: Vec<Vec<usize>>) -> Self {
        Tableau { shape, rows }
    }

    pub fn shape(&self) -> &SkewShape {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn size(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    /// Row index (0-based, bottom = 0) of every value, indexed by value.
    fn row_of(&self) -> Vec<usize> {
        let mut at = vec![0; self.size() + 1];
        for (j, row) in self.rows.iter().enumerate() {
            for &v in row {
                if v < at.len() {
                    at[v] = j;
                }
            }
        }
        at
    }

    /// `{i : i+1 lies in a strictly higher row than i}`.
    pub fn descent_set(&self) -> Subset {
        let at = self.row_of();
        (1..self.size()).filter(|&i| at[i + 1] > at[i]).collect()
    }

    /// Rows as a JSON list, bottom row first.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(&self.rows).expect("rows serialize")
    }
}

/// Renders top row first, with `.` for cells of the inner shape.
impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let width = self.size().max(1).to_string().len();
        for (j, row) in self.rows.iter().enumerate().rev() {
            let offset = self.shape.inner().part(j + 1);
            let cells: Vec<String> = std::iter::repeat_n(".".to_string(), offset)
                .chain(row.iter().map(|v| v.to_string()))
                .map(|c| format!("{c:>width$}"))
                .collect();
            writeln!(f, "{}", cells.join(" ").trim_end())?;
        }
        Ok(())
    }
}

pub fn descent_set(t: &Tableau) -> Subset {
    t.descent_set()
}

pub fn is_valid_sit(t: &Tableau) -> bool {
    let shape = &t.shape;
    let k = shape.outer().len();
    if t.rows.len() != k {
        return false;
    }
    if (1..=k).any(|j| t.rows[j - 1].len() != shape.row_len(j)) {
        return false;
    }
    let n = shape.size();
    let mut seen = vec![false; n + 1];
    for &v in t.rows.iter().flatten() {
        if v == 0 || v > n || seen[v] {
            return false;
        }
        seen[v] = true;
    }
    if t.rows.iter().any(|r| r.windows(2).any(|w| w[0] >= w[1])) {
        return false;
    }
    let first_column: Vec<usize> = (1..=k)
        .filter(|&j| shape.inner().part(j) == 0 && !t.rows[j - 1].is_empty())
        .map(|j| t.rows[j - 1][0])
        .collect();
    first_column.windows(2).all(|w| w[0] < w[1])
}

/// All standard immaculate tableaux of `shape`.
///
/// Values are placed in increasing order; each value goes to the next free
/// cell of some row, rows tried bottom to top.
pub fn enumerate_sit(shape: &SkewShape) -> Vec<Tableau> {
    let k = shape.outer().len();
    let lens: Vec<usize> = (1..=k).map(|j| shape.row_len(j)).collect();
    let anchored: Vec<bool> = (1..=k).map(|j| shape.inner().part(j) == 0).collect();
    let mut rows: Vec<Vec<usize>> = lens.iter().map(|&l| Vec::with_capacity(l)).collect();
    let mut out = Vec::new();
    place(
        1,
        shape.size(),
        &lens,
        &anchored,
        &mut rows,
        shape,
        &mut out,
    );
    out
}

fn place(
    value: usize,
    n: usize,
    lens: &[usize],
    anchored: &[bool],
    rows: &mut Vec<Vec<usize>>,
    shape: &SkewShape,
    out: &mut Vec<Tableau>,
) {
    if value > n {
        out.push(Tableau::new(shape.clone(), rows.clone()));
        return;
    }
    for j in 0..lens.len() {
        if rows[j].len() == lens[j] {
            continue;
        }
        // starting an anchored row needs every lower anchored row started
        if rows[j].is_empty()
            && anchored[j]
            && (0..j).any(|i| anchored[i] && lens[i] > 0 && rows[i].is_empty())
        {
            continue;
        }
        rows[j].push(value);
        place(value + 1, n, lens, anchored, rows, shape, out);
        rows[j].pop();
    }
}

/// `comp(Des(T))` for a tableau of size `n`.
pub fn descent_composition(t: &Tableau) -> crate::composition::Composition {
    comp_of(&t.descent_set(), t.size()).expect("descents lie in 1..n-1")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::comp;
    use crate::composition::Composition;

    fn shape(outer: Composition, inner: Composition) -> SkewShape {
        SkewShape::new(outer, inner).unwrap()
    }

    fn example_tableau() -> Tableau {
        Tableau::new(
            shape(comp![3, 4, 1], comp![1]),
            vec![vec![1, 5], vec![2, 3, 4, 6], vec![7]],
        )
    }

    #[test]
    fn worked_tableau() {
        let t = example_tableau();
        assert!(is_valid_sit(&t));
        assert_eq!(t.descent_set(), [1, 5, 6].into_iter().collect());
        assert!(enumerate_sit(t.shape()).contains(&t));
    }

    #[test]
    fn swapping_breaks_first_column() {
        let t = Tableau::new(
            shape(comp![3, 4, 1], comp![1]),
            vec![vec![1, 5], vec![7, 3, 4, 6], vec![2]],
        );
        assert!(!is_valid_sit(&t));
    }

    #[test]
    fn decreasing_row_is_invalid() {
        let t = Tableau::new(SkewShape::straight(comp![2]), vec![vec![2, 1]]);
        assert!(!is_valid_sit(&t));
    }

    #[test]
    fn small_counts() {
        assert_eq!(enumerate_sit(&SkewShape::straight(comp![4])).len(), 1);
        assert_eq!(enumerate_sit(&SkewShape::straight(comp![1, 1, 1])).len(), 1);
        assert_eq!(enumerate_sit(&SkewShape::straight(comp![2, 1])).len(), 2);
        let empty = enumerate_sit(&SkewShape::straight(comp![]));
        assert_eq!(empty.len(), 1);
        assert_eq!(empty[0].size(), 0);
    }

    #[test]
    fn simple_descents() {
        let row = &enumerate_sit(&SkewShape::straight(comp![3]))[0];
        assert!(row.descent_set().is_empty());
        let col = &enumerate_sit(&SkewShape::straight(comp![1, 1, 1]))[0];
        assert_eq!(col.descent_set(), [1, 2].into_iter().collect());
    }

    #[test]
    fn renders_top_row_first() {
        let text = example_tableau().to_string();
        assert_eq!(text, "7\n2 3 4 6\n. 1 5\n");
        assert_eq!(
            example_tableau().to_json(),
            serde_json::json!([[1, 5], [2, 3, 4, 6], [7]])
        );
    }
}
