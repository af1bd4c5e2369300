//! Depth-first enumeration of tuples of alphabet indices with a fixed total
//! weight. The first component is distributed over [`Exec`]; partial results
//! are merged in first-component order.

use super::alphabet::{fits, Alphabet};
use crate::par::Exec;

/// Which tuples to visit.
#[derive(Clone, Copy, PartialEq, Eq)]
pub(crate) enum Order {
    All,
    WeaklyIncreasing,
}

#[allow(clippy::too_many_arguments)]
pub(crate) fn walk<A, I, V, M>(
    alphabet: &Alphabet,
    weight: &[u8],
    n: usize,
    order: Order,
    exec: Exec,
    init: I,
    visit: V,
    merge: M,
) -> A
where
    A: Send,
    I: Fn() -> A + Sync + Send,
    V: Fn(&mut A, &[u32]) + Sync + Send,
    M: Fn(&mut A, A),
{
    if weight.iter().skip(alphabet.letters()).any(|&c| c > 0) {
        return init();
    }
    let mut target = weight.to_vec();
    target.resize(alphabet.letters(), 0);
    if n == 1 {
        let mut acc = init();
        for &i in alphabet.with_weight(&target) {
            visit(&mut acc, &[i]);
        }
        return acc;
    }
    let first = alphabet.fitting(&target);
    let parts = exec.map(&first, |&a| {
        let mut acc = init();
        let mut state = State {
            alphabet,
            n,
            order,
            rem: target.clone(),
            tuple: Vec::with_capacity(n),
            visit: &visit,
        };
        state.enter(a);
        let cands = state.narrow(&first, a);
        state.descend(&cands, &mut acc);
        acc
    });
    let mut parts = parts.into_iter();
    let mut acc = parts.next().unwrap_or_else(&init);
    for p in parts {
        merge(&mut acc, p);
    }
    acc
}

struct State<'a, V> {
    alphabet: &'a Alphabet,
    n: usize,
    order: Order,
    rem: Vec<u8>,
    tuple: Vec<u32>,
    visit: &'a V,
}

impl<V> State<'_, V> {
    fn enter(&mut self, a: u32) {
        for (r, w) in self.rem.iter_mut().zip(self.alphabet.weight(a as usize)) {
            *r -= w;
        }
        self.tuple.push(a);
    }

    fn leave(&mut self) {
        let a = self.tuple.pop().expect("non-empty");
        for (r, w) in self.rem.iter_mut().zip(self.alphabet.weight(a as usize)) {
            *r += w;
        }
    }

    /// Candidates for the next slot after choosing `last`.
    fn narrow(&self, cands: &[u32], last: u32) -> Vec<u32> {
        cands
            .iter()
            .copied()
            .filter(|&c| self.order == Order::All || c >= last)
            .filter(|&c| fits(self.alphabet.weight(c as usize), &self.rem))
            .collect()
    }

    fn descend<A>(&mut self, cands: &[u32], acc: &mut A)
    where
        V: Fn(&mut A, &[u32]),
    {
        if self.tuple.len() + 1 == self.n {
            let last = *self.tuple.last().expect("non-empty");
            let alphabet = self.alphabet;
            for &c in alphabet.with_weight(&self.rem) {
                if self.order == Order::WeaklyIncreasing && c < last {
                    continue;
                }
                self.tuple.push(c);
                (self.visit)(acc, &self.tuple);
                self.tuple.pop();
            }
            return;
        }
        for &c in cands {
            self.enter(c);
            let next = self.narrow(cands, c);
            if !next.is_empty() {
                self.descend(&next, acc);
            }
            self.leave();
        }
    }
}
