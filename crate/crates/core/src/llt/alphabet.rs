//! Tableaux of one shape with bounded entries, indexed in the total order,
//! with their weights and pairwise inversion counts precomputed.

use std::collections::HashMap;

use crate::partition::Partition;
use crate::tableau::{enumerate_sstab, SemistandardTableau};

/// Above this many tableaux the pair table is not materialised.
const PAIR_TABLE_LIMIT: usize = 6000;

pub(crate) struct Alphabet {
    pub tableaux: Vec<SemistandardTableau>,
    letters: usize,
    weights: Vec<u8>,
    /// Flattened entries in row-reading order, `|μ|` per tableau.
    fillings: Vec<u32>,
    cells: usize,
    same: Vec<(usize, usize)>,
    shifted: Vec<(usize, usize)>,
    table: Option<Vec<u8>>,
    by_weight: HashMap<Vec<u8>, Vec<u32>>,
}

impl Alphabet {
    /// All tableaux of `shape` with entries at most `letters`.
    pub fn new(shape: &Partition, letters: usize) -> Self {
        let tableaux = enumerate_sstab(shape, None, Some(letters as u32)).expect("bound given");
        let cells: Vec<_> = shape.cells().collect();
        let mut same = Vec::new();
        let mut shifted = Vec::new();
        for (i, u) in cells.iter().enumerate() {
            for (j, v) in cells.iter().enumerate() {
                if u.content() == v.content() {
                    same.push((i, j));
                } else if u.content() == v.content() - 1 {
                    shifted.push((i, j));
                }
            }
        }
        let mut weights = Vec::with_capacity(tableaux.len() * letters);
        let mut fillings = Vec::with_capacity(tableaux.len() * cells.len());
        let mut by_weight: HashMap<Vec<u8>, Vec<u32>> = HashMap::new();
        for (idx, t) in tableaux.iter().enumerate() {
            let w: Vec<u8> = t.weight_vec(letters).iter().map(|&c| c as u8).collect();
            weights.extend_from_slice(&w);
            fillings.extend(t.rows().iter().flatten().copied());
            by_weight.entry(w).or_default().push(idx as u32);
        }
        let mut alphabet = Alphabet {
            tableaux,
            letters,
            weights,
            fillings,
            cells: cells.len(),
            same,
            shifted,
            table: None,
            by_weight,
        };
        let a = alphabet.len();
        if a <= PAIR_TABLE_LIMIT {
            let mut table = vec![0u8; a * a];
            for i in 0..a {
                for j in 0..a {
                    table[i * a + j] = alphabet.pair_direct(i, j) as u8;
                }
            }
            alphabet.table = Some(table);
        }
        alphabet
    }

    pub fn len(&self) -> usize {
        self.tableaux.len()
    }

    pub fn letters(&self) -> usize {
        self.letters
    }

    pub fn weight(&self, idx: usize) -> &[u8] {
        &self.weights[idx * self.letters..(idx + 1) * self.letters]
    }

    fn filling(&self, idx: usize) -> &[u32] {
        &self.fillings[idx * self.cells..(idx + 1) * self.cells]
    }

    fn pair_direct(&self, i: usize, j: usize) -> usize {
        let (u, v) = (self.filling(i), self.filling(j));
        let same = self.same.iter().filter(|&&(a, b)| u[a] > v[b]).count();
        let shifted = self.shifted.iter().filter(|&&(a, b)| v[a] > u[b]).count();
        same + shifted
    }

    /// Inversions between component `i` (earlier) and component `j` (later).
    #[inline]
    pub fn pair(&self, i: usize, j: usize) -> usize {
        match &self.table {
            Some(t) => t[i * self.len() + j] as usize,
            None => self.pair_direct(i, j),
        }
    }

    pub fn inv(&self, tuple: &[u32]) -> usize {
        let mut total = 0;
        for (a, &x) in tuple.iter().enumerate() {
            for &y in &tuple[a + 1..] {
                total += self.pair(x as usize, y as usize);
            }
        }
        total
    }

    /// Indices of the tableaux with weight exactly `w`.
    pub fn with_weight(&self, w: &[u8]) -> &[u32] {
        self.by_weight.get(w).map_or(&[], Vec::as_slice)
    }

    /// Indices whose weight fits inside `rem`.
    pub fn fitting(&self, rem: &[u8]) -> Vec<u32> {
        (0..self.len() as u32)
            .filter(|&i| fits(self.weight(i as usize), rem))
            .collect()
    }
}

#[inline]
pub(crate) fn fits(w: &[u8], rem: &[u8]) -> bool {
    w.iter().zip(rem).all(|(a, b)| a <= b)
}
