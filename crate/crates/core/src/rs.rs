//! Robinson–Schensted row insertion over any totally ordered alphabet.

use crate::tableau::StandardTableau;

/// Insertion tableau over the input alphabet, as rows.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InsertionTableau<T> {
    pub rows: Vec<Vec<T>>,
}

impl<T: Ord + Clone> InsertionTableau<T> {
    fn new() -> Self {
        InsertionTableau { rows: Vec::new() }
    }

    /// Row-inserts `x`; returns the row where the new cell appeared.
    fn insert(&mut self, mut x: T) -> usize {
        for (r, row) in self.rows.iter_mut().enumerate() {
            // leftmost entry strictly greater than x
            match row.iter().position(|y| y > &x) {
                Some(pos) => x = std::mem::replace(&mut row[pos], x),
                None => {
                    row.push(x);
                    return r;
                }
            }
        }
        self.rows.push(vec![x]);
        self.rows.len() - 1
    }
}

/// `(P, Q)` for a sequence: row insertion bumping the leftmost strictly larger
/// entry; `Q` records where each new cell appeared.
pub fn rs_correspondence<T: Ord + Clone>(letters: &[T]) -> (InsertionTableau<T>, StandardTableau) {
    let (p, q) = insert_all(letters);
    let q = StandardTableau::new(q).expect("recording tableau is standard");
    (p, q)
}

/// Recording tableau rows only, without building a validated [`StandardTableau`].
pub(crate) fn recording_rows<T: Ord + Clone>(letters: &[T]) -> Vec<Vec<u32>> {
    insert_all(letters).1
}

fn insert_all<T: Ord + Clone>(letters: &[T]) -> (InsertionTableau<T>, Vec<Vec<u32>>) {
    let mut p = InsertionTableau::new();
    let mut q: Vec<Vec<u32>> = Vec::new();
    for (i, x) in letters.iter().enumerate() {
        let r = p.insert(x.clone());
        if r == q.len() {
            q.push(Vec::new());
        }
        q[r].push(i as u32 + 1);
    }
    (p, q)
}

/// Reverse row insertion: rebuilds the sequence from `(P, Q)`.
pub fn rs_inverse<T: Ord + Clone>(p: &InsertionTableau<T>, q: &StandardTableau) -> Vec<T> {
    let mut rows = p.rows.clone();
    let row_of = q.row_of_values();
    let mut out = Vec::with_capacity(row_of.len());
    for v in (0..row_of.len()).rev() {
        let r = row_of[v];
        let mut x = rows[r].pop().expect("cell present");
        for above in (0..r).rev() {
            // rightmost entry strictly smaller than x
            let pos = rows[above]
                .iter()
                .rposition(|y| y < &x)
                .expect("bumped entry exists");
            x = std::mem::replace(&mut rows[above][pos], x);
        }
        if rows.last().is_some_and(Vec::is_empty) {
            rows.pop();
        }
        out.push(x);
    }
    out.reverse();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tableau::maj_standard;
    use crate::word::{maj_slice, words_with_weight};

    #[test]
    fn worked_example() {
        let w = [1u32, 2, 1, 4, 2];
        let (p, q) = rs_correspondence(&w);
        assert_eq!(p.rows, vec![vec![1, 1, 2], vec![2, 4]]);
        assert_eq!(q.rows(), &[vec![1, 2, 4], vec![3, 5]]);
        assert_eq!(maj_standard(&q), 6);
        assert_eq!(maj_slice(&w), 6);
    }

    #[test]
    fn increasing_input_gives_one_row() {
        let (_, q) = rs_correspondence(&[1u32, 1, 2, 5, 5]);
        assert_eq!(q.rows().len(), 1);
    }

    #[test]
    fn maj_is_preserved_and_inverse_roundtrips() {
        // all words of length <= 6 over an alphabet of size <= 4 (as weights)
        for n in 0..=6 {
            for comp in crate::partition::enumerate_compositions(n, Some(4)) {
                for w in words_with_weight(comp.parts()) {
                    let (p, q) = rs_correspondence(w.letters());
                    assert_eq!(maj_standard(&q), maj_slice(w.letters()));
                    assert_eq!(rs_inverse(&p, &q), w.letters());
                }
            }
        }
    }
}
