//! Young diagrams, semistandard and standard tableaux, and the total order
//! on tableaux of a fixed shape given by comparing reading words.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, ParseError, Result};
use crate::partition::{Composition, Partition};
use crate::word::Word;

/// A cell of a Young diagram, 0-indexed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cell {
    pub row: usize,
    pub col: usize,
}

impl Cell {
    pub fn new(row: usize, col: usize) -> Self {
        Cell { row, col }
    }

    /// `col - row`.
    pub fn content(&self) -> i64 {
        self.col as i64 - self.row as i64
    }
}

/// Rows weakly increase, columns strictly increase, entries are positive.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SemistandardTableau {
    shape: Partition,
    rows: Vec<Vec<u32>>,
}

impl SemistandardTableau {
    pub fn new(rows: Vec<Vec<u32>>) -> Result<Self> {
        let shape = Partition::from_parts(rows.iter().map(Vec::len).collect())
            .map_err(|_| ParseError::BadTableau("row lengths must weakly decrease".into()))?;
        let t = SemistandardTableau { shape, rows };
        if !t.is_semistandard() {
            return Err(ParseError::BadTableau(format!("{t} is not semistandard")).into());
        }
        Ok(t)
    }

    /// Single-row tableau; `row` must be weakly increasing.
    pub fn single_row(row: &[u32]) -> Result<Self> {
        Self::new(vec![row.to_vec()])
    }

    fn is_semistandard(&self) -> bool {
        let rows_ok = self
            .rows
            .iter()
            .all(|r| r.iter().all(|&v| v >= 1) && r.windows(2).all(|w| w[0] <= w[1]));
        let cols_ok = self
            .rows
            .windows(2)
            .all(|pair| pair[1].iter().zip(&pair[0]).all(|(lo, hi)| lo > hi));
        rows_ok && cols_ok
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn get(&self, cell: Cell) -> Option<u32> {
        self.rows
            .get(cell.row)
            .and_then(|r| r.get(cell.col))
            .copied()
    }

    /// `(cell, entry)` in row-reading order.
    pub fn entries(&self) -> impl Iterator<Item = (Cell, u32)> + '_ {
        self.rows.iter().enumerate().flat_map(|(r, row)| {
            row.iter()
                .enumerate()
                .map(move |(c, &v)| (Cell::new(r, c), v))
        })
    }

    pub fn max_entry(&self) -> u32 {
        self.rows.iter().flatten().copied().max().unwrap_or(0)
    }

    /// `weight[k-1]` is the number of entries equal to `k`, for `k` up to `len`.
    pub fn weight_vec(&self, len: usize) -> Vec<usize> {
        let mut w = vec![0; len.max(self.max_entry() as usize)];
        for &v in self.rows.iter().flatten() {
            w[v as usize - 1] += 1;
        }
        w
    }
}

impl fmt::Display for SemistandardTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_rows(&self.rows))
    }
}

impl FromStr for SemistandardTableau {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        SemistandardTableau::new(parse_rows(s)?)
    }
}

/// A semistandard tableau containing each of `1..=n` exactly once.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct StandardTableau(SemistandardTableau);

impl StandardTableau {
    pub fn new(rows: Vec<Vec<u32>>) -> Result<Self> {
        let t = SemistandardTableau::new(rows)?;
        let n = t.shape.size();
        let mut seen = vec![false; n];
        for &v in t.rows.iter().flatten() {
            let idx = v as usize - 1;
            if idx >= n || seen[idx] {
                return Err(ParseError::BadTableau(format!("{t} is not standard")).into());
            }
            seen[idx] = true;
        }
        Ok(StandardTableau(t))
    }

    pub fn shape(&self) -> &Partition {
        &self.0.shape
    }

    pub fn size(&self) -> usize {
        self.0.shape.size()
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.0.rows
    }

    pub fn as_semistandard(&self) -> &SemistandardTableau {
        &self.0
    }

    /// Row index holding each value: `rows_of()[v-1]`.
    pub fn row_of_values(&self) -> Vec<usize> {
        let mut out = vec![0; self.size()];
        for (cell, v) in self.0.entries() {
            out[v as usize - 1] = cell.row;
        }
        out
    }

    /// Descents `i` (1-based): `i+1` sits in a strictly lower row than `i`.
    pub fn descents(&self) -> Vec<usize> {
        let rows = self.row_of_values();
        (1..rows.len()).filter(|&i| rows[i] > rows[i - 1]).collect()
    }
}

impl fmt::Display for StandardTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl FromStr for StandardTableau {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        StandardTableau::new(parse_rows(s)?)
    }
}

fn format_rows(rows: &[Vec<u32>]) -> String {
    rows.iter()
        .map(|r| {
            r.iter()
                .map(|v| v.to_string())
                .collect::<Vec<_>>()
                .join(",")
        })
        .collect::<Vec<_>>()
        .join("/")
}

/// Parses `"1,2/3"`: rows separated by `/`, entries by `,`.
fn parse_rows(s: &str) -> std::result::Result<Vec<Vec<u32>>, ParseError> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split('/')
        .map(|row| {
            row.split(',')
                .map(|tok| {
                    let tok = tok.trim();
                    tok.parse::<u32>()
                        .ok()
                        .filter(|&v| v >= 1)
                        .ok_or_else(|| ParseError::BadInteger(tok.to_string()))
                })
                .collect()
        })
        .collect()
}

/// Concatenation of the rows, top row first.
pub fn reading_word(t: &SemistandardTableau) -> Word {
    Word::new(t.rows.iter().flatten().copied().collect())
}

/// Lexicographic comparison of reading words (tableaux must share a shape).
pub fn tableau_compare(t: &SemistandardTableau, u: &SemistandardTableau) -> Result<Ordering> {
    if t.shape != u.shape {
        return Err(Error::ShapeMismatch(
            t.shape.to_string(),
            u.shape.to_string(),
        ));
    }
    Ok(t.rows.iter().flatten().cmp(u.rows.iter().flatten()))
}

/// Semistandard tableaux of `shape` with the given weight or with entries at
/// most `max_entry` (exactly one of the two), sorted by [`tableau_compare`].
pub fn enumerate_sstab(
    shape: &Partition,
    weight: Option<&Composition>,
    max_entry: Option<u32>,
) -> Result<Vec<SemistandardTableau>> {
    let (bound, mut counts) = match (weight, max_entry) {
        (Some(w), None) => {
            if w.size() != shape.size() {
                return Err(Error::SizeMismatch {
                    expected: shape.size(),
                    actual: w.size(),
                });
            }
            (w.len() as u32, Some(w.parts().to_vec()))
        }
        (None, Some(m)) => (m, None),
        _ => return Err(Error::WeightOrBound),
    };
    let mut rows: Vec<Vec<u32>> = shape.parts().iter().map(|&len| vec![0; len]).collect();
    let cells: Vec<Cell> = shape.cells().collect();
    let mut out = Vec::new();
    fill_cells(
        &cells,
        0,
        bound,
        counts.as_deref_mut(),
        &mut rows,
        &mut |rows| {
            out.push(SemistandardTableau {
                shape: shape.clone(),
                rows: rows.to_vec(),
            })
        },
    );
    // Row-reading fill order with increasing values already yields lexicographic order.
    debug_assert!(out
        .windows(2)
        .all(|w| tableau_compare(&w[0], &w[1]).unwrap() == Ordering::Less));
    Ok(out)
}

fn fill_cells(
    cells: &[Cell],
    idx: usize,
    bound: u32,
    mut counts: Option<&mut [usize]>,
    rows: &mut [Vec<u32>],
    emit: &mut dyn FnMut(&[Vec<u32>]),
) {
    let Some(&cell) = cells.get(idx) else {
        emit(rows);
        return;
    };
    let left = if cell.col > 0 {
        rows[cell.row][cell.col - 1]
    } else {
        1
    };
    let above = if cell.row > 0 {
        rows[cell.row - 1][cell.col] + 1
    } else {
        1
    };
    let lo = left.max(above).max(1);
    for v in lo..=bound {
        if let Some(c) = counts.as_deref_mut() {
            if c[v as usize - 1] == 0 {
                continue;
            }
            c[v as usize - 1] -= 1;
        }
        rows[cell.row][cell.col] = v;
        fill_cells(cells, idx + 1, bound, counts.as_deref_mut(), rows, emit);
        if let Some(c) = counts.as_deref_mut() {
            c[v as usize - 1] += 1;
        }
    }
}

/// Standard tableaux of `shape`, sorted by reading word.
pub fn enumerate_standard(shape: &Partition) -> Vec<StandardTableau> {
    let ones = Composition::new(vec![1; shape.size()]);
    enumerate_sstab(shape, Some(&ones), None)
        .expect("weight size equals shape size")
        .into_iter()
        .map(StandardTableau)
        .collect()
}

/// Standard tableaux of every shape of size `n`, shapes in reverse-lex order.
pub fn enumerate_standard_all(n: usize) -> Vec<StandardTableau> {
    crate::partition::enumerate_partitions(n)
        .iter()
        .flat_map(enumerate_standard)
        .collect()
}

/// Sum of the descents of a standard tableau.
pub fn maj_standard(s: &StandardTableau) -> usize {
    s.descents().iter().sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(v: &[usize]) -> Partition {
        Partition::from_parts(v.to_vec()).unwrap()
    }

    fn comp(v: &[usize]) -> Composition {
        Composition::new(v.to_vec())
    }

    #[test]
    fn sstab_examples() {
        let two_one = enumerate_sstab(&part(&[2, 1]), Some(&comp(&[1, 1, 1])), None).unwrap();
        assert_eq!(two_one.len(), 2);
        let single = enumerate_sstab(&part(&[2]), Some(&comp(&[2])), None).unwrap();
        assert_eq!(single.len(), 1);
        assert_eq!(single[0].to_string(), "1,1");
        assert!(enumerate_sstab(&part(&[1, 1]), Some(&comp(&[2])), None)
            .unwrap()
            .is_empty());
        assert!(enumerate_sstab(&part(&[2]), Some(&comp(&[1])), None).is_err());
        assert!(enumerate_sstab(&part(&[2]), None, None).is_err());
        assert!(enumerate_sstab(&part(&[2]), Some(&comp(&[2])), Some(3)).is_err());
    }

    #[test]
    fn sstab_counts_match_hook_content() {
        // s_λ(1^N) = Π (N + c(u)) / h(u)
        for shape in crate::partition::partitions_up_to(5) {
            for n in 1..=4u32 {
                let conj = shape.conjugate();
                let (mut num, mut den) = (1i64, 1i64);
                for cell in shape.cells() {
                    num *= n as i64 + cell.content();
                    den *= (shape.part(cell.row) - cell.col + conj.part(cell.col) - cell.row - 1)
                        as i64;
                }
                let got = enumerate_sstab(&shape, None, Some(n)).unwrap().len() as i64;
                assert_eq!(got, num / den, "shape {shape} N={n}");
            }
        }
    }

    #[test]
    fn reading_words_and_order() {
        let t1 = SemistandardTableau::new(vec![vec![1, 1, 2, 3]]).unwrap();
        let t2 = SemistandardTableau::new(vec![vec![1, 1, 2, 4]]).unwrap();
        let t3 = SemistandardTableau::new(vec![vec![1, 2, 2, 2]]).unwrap();
        assert_eq!(reading_word(&t1).to_string(), "1123");
        assert_eq!(tableau_compare(&t1, &t2).unwrap(), Ordering::Less);
        assert_eq!(tableau_compare(&t2, &t3).unwrap(), Ordering::Less);
        assert_eq!(tableau_compare(&t1, &t1).unwrap(), Ordering::Equal);
        let five = SemistandardTableau::new(vec![vec![5]]).unwrap();
        assert_eq!(reading_word(&five).to_string(), "5");
        let sq = SemistandardTableau::new(vec![vec![1, 1], vec![2, 2]]).unwrap();
        assert_eq!(reading_word(&sq).to_string(), "1122");
        assert!(tableau_compare(&five, &sq).is_err());
    }

    #[test]
    fn rejects_invalid_tableaux() {
        assert!(SemistandardTableau::new(vec![vec![2, 1]]).is_err());
        assert!(SemistandardTableau::new(vec![vec![1, 2], vec![1]]).is_err());
        assert!(SemistandardTableau::new(vec![vec![1], vec![2, 3]]).is_err());
        assert!("1,2/2".parse::<StandardTableau>().is_err());
        assert!("1,3/2".parse::<StandardTableau>().is_ok());
    }

    #[test]
    fn standard_tableaux() {
        assert_eq!(enumerate_standard(&part(&[2, 1])).len(), 2);
        assert_eq!(enumerate_standard(&part(&[4])).len(), 1);
        assert_eq!(enumerate_standard(&part(&[2, 2])).len(), 2);
        for shape in crate::partition::partitions_up_to(7) {
            assert_eq!(
                enumerate_standard(&shape).len() as u128,
                shape.hook_length_count()
            );
        }
    }

    #[test]
    fn major_index_of_standard() {
        let s: StandardTableau = " 1, 2, 4 / 3, 5 ".parse().unwrap();
        assert_eq!(maj_standard(&s), 6);
        assert_eq!(maj_standard(&"1,2,3".parse().unwrap()), 0);
        assert_eq!(maj_standard(&"1,2/3".parse().unwrap()), 2);
        assert_eq!(maj_standard(&"1,3/2".parse().unwrap()), 1);
    }
}
