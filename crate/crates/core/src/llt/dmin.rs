//! Searching for the minimum Inversion number directly.

use super::alphabet::Alphabet;
use super::LLTInstance;
use crate::par::Exec;

/// Which tuples [`d_min_search`] ranges over.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DMinSearch {
    /// Tuples `(T, ..., T)` with entries at most `|μ|`.
    Constant,
    /// Every tuple with entries at most `max_entry`, by branch and bound.
    Exhaustive { max_entry: u32 },
}

/// Minimum over constant tuples.
pub fn d_min_oracle(inst: &LLTInstance) -> usize {
    d_min_search(inst, DMinSearch::Constant, Exec::default())
}

pub fn d_min_search(inst: &LLTInstance, mode: DMinSearch, exec: Exec) -> usize {
    let n = inst.n();
    let pairs = n * (n - 1) / 2;
    match mode {
        DMinSearch::Constant => {
            let alphabet = Alphabet::new(inst.mu(), inst.mu().size().max(1));
            (0..alphabet.len())
                .map(|i| pairs * alphabet.pair(i, i))
                .min()
                .unwrap_or(0)
        }
        DMinSearch::Exhaustive { max_entry } => {
            let alphabet = Alphabet::new(inst.mu(), max_entry as usize);
            exhaustive(&alphabet, n, exec)
        }
    }
}

fn exhaustive(alphabet: &Alphabet, n: usize, exec: Exec) -> usize {
    let a = alphabet.len();
    if a == 0 || n < 2 {
        return 0;
    }
    // row_min[i]: fewest inversions tableau i can have against anything after it
    let row_min: Vec<usize> = exec.map_range(a, |i| {
        (0..a).map(|j| alphabet.pair(i, j)).min().unwrap_or(0)
    });
    let pair_min = row_min.iter().copied().min().unwrap_or(0);
    // a constant tuple is a valid start
    let seed = (0..a).map(|i| alphabet.pair(i, i)).min().unwrap_or(0) * n * (n - 1) / 2;
    let search = Search {
        alphabet,
        n,
        row_min: &row_min,
        pair_min,
    };
    let best = exec.map_range(a, |first| {
        let mut best = seed;
        let mut tuple = vec![first as u32];
        search.dfs(&mut tuple, 0, row_min[first], &mut best);
        best
    });
    best.into_iter().min().unwrap_or(seed)
}

struct Search<'a> {
    alphabet: &'a Alphabet,
    n: usize,
    row_min: &'a [usize],
    pair_min: usize,
}

impl Search<'_> {
    /// `partial`: inversions among `tuple`; `mins`: Σ row_min over `tuple`.
    fn dfs(&self, tuple: &mut Vec<u32>, partial: usize, mins: usize, best: &mut usize) {
        let r = self.n - tuple.len();
        if r == 0 {
            *best = (*best).min(partial);
            return;
        }
        if partial + r * mins + r * (r - 1) / 2 * self.pair_min >= *best {
            return;
        }
        for c in 0..self.alphabet.len() {
            let added: usize = tuple
                .iter()
                .map(|&t| self.alphabet.pair(t as usize, c))
                .sum();
            if partial + added >= *best {
                continue;
            }
            tuple.push(c as u32);
            self.dfs(tuple, partial + added, mins + self.row_min[c], best);
            tuple.pop();
        }
    }
}
