//! Words over the positive integers and their Mahonian statistics.
//!
//! # Foata bijection
//!
//! [`foata`] is the classical first fundamental transformation, extended to
//! words with repeated letters. Reading the input `w = x_1 x_2 ... x_n` left
//! to right it maintains an image `v`, starting from `v = x_1`. To append the
//! next letter `a`:
//!
//! 1. If the last letter of `v` is `<= a`, cut `v` after every letter `<= a`;
//!    otherwise cut after every letter `> a`.
//! 2. Rotate each block by moving its last letter to the front.
//! 3. Append `a`.
//!
//! Each step raises `inv` by exactly the descent contribution of the new
//! position, so `inv(foata(w)) = maj(w)`. The first letter of a rotated image
//! tells which cut rule was applied, which makes the step reversible;
//! [`foata_inverse`] undoes the steps from the right.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, ParseError, Result};
use crate::partition::Composition;

/// A finite sequence of positive integers.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Word(Vec<u32>);

impl Word {
    pub fn new(letters: Vec<u32>) -> Self {
        debug_assert!(letters.iter().all(|&l| l >= 1), "letters are positive");
        Word(letters)
    }

    pub fn letters(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn max_letter(&self) -> u32 {
        self.0.iter().copied().max().unwrap_or(0)
    }

    /// `weight[k-1]` counts the letters equal to `k`; zeros are kept.
    pub fn weight(&self) -> Vec<usize> {
        let mut w = vec![0; self.max_letter() as usize];
        for &l in &self.0 {
            w[l as usize - 1] += 1;
        }
        w
    }

    /// Weakly increasing rearrangement.
    pub fn sorted(&self) -> Word {
        let mut v = self.0.clone();
        v.sort_unstable();
        Word(v)
    }

    pub fn is_binary(&self) -> bool {
        self.0.iter().all(|&l| l == 1 || l == 2)
    }
}

impl From<Vec<u32>> for Word {
    fn from(v: Vec<u32>) -> Self {
        Word::new(v)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.max_letter() <= 9 {
            for l in &self.0 {
                write!(f, "{l}")?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = self.0.iter().map(u32::to_string).collect();
            f.write_str(&parts.join(","))
        }
    }
}

impl FromStr for Word {
    type Err = ParseError;

    /// Digit strings (`"12142"`) or comma-separated letters (`"1,10,3"`).
    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        let s = s.trim();
        let letters: Vec<u32> = if s.contains(',') {
            s.split(',')
                .map(|t| {
                    t.trim()
                        .parse::<u32>()
                        .map_err(|_| ParseError::BadWord(s.to_string()))
                })
                .collect::<std::result::Result<_, _>>()?
        } else {
            s.chars()
                .map(|c| {
                    c.to_digit(10)
                        .ok_or_else(|| ParseError::BadWord(s.to_string()))
                })
                .collect::<std::result::Result<_, _>>()?
        };
        if letters.contains(&0) {
            return Err(ParseError::BadWord(s.to_string()));
        }
        Ok(Word(letters))
    }
}

/// Number of pairs `i < j` with `w_i > w_j`.
pub fn inv_word(w: &Word) -> usize {
    inv_slice(w.letters())
}

pub(crate) fn inv_slice<T: Ord>(w: &[T]) -> usize {
    let mut count = 0;
    for i in 0..w.len() {
        for j in i + 1..w.len() {
            if w[i] > w[j] {
                count += 1;
            }
        }
    }
    count
}

/// Sum of the descent positions `i` (1-based) with `w_i > w_{i+1}`.
pub fn maj_word(w: &Word) -> usize {
    maj_slice(w.letters())
}

/// Major index of any sequence over a totally ordered set.
pub fn maj_slice<T: Ord>(w: &[T]) -> usize {
    w.windows(2)
        .enumerate()
        .filter(|(_, p)| p[0] > p[1])
        .map(|(i, _)| i + 1)
        .sum()
}

pub fn foata(w: &Word) -> Word {
    let mut image: Vec<u32> = Vec::with_capacity(w.len());
    for &a in w.letters() {
        if let Some(&last) = image.last() {
            let small = last <= a;
            rotate_blocks_forward(&mut image, |x| (x <= a) == small);
        }
        image.push(a);
    }
    Word(image)
}

/// Cuts after each letter satisfying `is_cut`, then moves each block's last letter to its front.
fn rotate_blocks_forward(v: &mut [u32], is_cut: impl Fn(u32) -> bool) {
    let mut start = 0;
    for i in 0..v.len() {
        if is_cut(v[i]) {
            v[start..=i].rotate_right(1);
            start = i + 1;
        }
    }
}

/// Cuts before each letter satisfying `is_cut`, then moves each block's first letter to its end.
fn rotate_blocks_backward(v: &mut [u32], is_cut: impl Fn(u32) -> bool) {
    let mut end = v.len();
    for i in (0..v.len()).rev() {
        if is_cut(v[i]) {
            v[i..end].rotate_left(1);
            end = i;
        }
    }
}

pub fn foata_inverse(w: &Word) -> Word {
    let mut v = w.0.clone();
    let mut tail: Vec<u32> = Vec::with_capacity(v.len());
    while let Some(a) = v.pop() {
        if let Some(&first) = v.first() {
            let small = first <= a;
            rotate_blocks_backward(&mut v, |x| (x <= a) == small);
        }
        tail.push(a);
    }
    tail.reverse();
    Word(tail)
}

/// `γw = w_n w_1 ... w_{n-1}`.
pub fn rotate_gamma(w: &Word) -> Result<Word> {
    if w.is_empty() {
        return Err(Error::EmptyWord);
    }
    let mut v = w.0.clone();
    v.rotate_right(1);
    Ok(Word(v))
}

/// `(w', w'')`: `w'` drops every `1`; `w''` replaces every letter above `1` by `2`.
pub fn split_word(w: &Word) -> (Word, Word) {
    let prime = w.0.iter().copied().filter(|&l| l != 1).collect();
    let binary = w.0.iter().map(|&l| if l == 1 { 1 } else { 2 }).collect();
    (Word(prime), Word(binary))
}

/// Inverse of [`split_word`]: the 2s of `binary` are filled from `prime` in order.
pub fn merge_split(prime: &Word, binary: &Word) -> Word {
    let mut rest = prime.0.iter();
    Word(
        binary
            .0
            .iter()
            .map(|&l| {
                if l == 1 {
                    1
                } else {
                    *rest.next().expect("enough letters")
                }
            })
            .collect(),
    )
}

/// A sequence of adjacent transpositions `s_i = (i-1, i)` in application order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TranspositionSchedule {
    pub indices: Vec<usize>,
}

impl TranspositionSchedule {
    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }

    /// Applies the transpositions left to right.
    pub fn apply<T>(&self, items: &mut [T]) {
        for &i in &self.indices {
            items.swap(i - 1, i);
        }
    }
}

/// The sorting schedule: smallest letters first, leftmost occurrence first,
/// each moved left into place by adjacent transpositions.
pub fn sort_schedule(w: &Word) -> TranspositionSchedule {
    sort_schedule_slice(w.letters())
}

pub(crate) fn sort_schedule_slice<T: Ord + Clone>(w: &[T]) -> TranspositionSchedule {
    let mut cur = w.to_vec();
    let mut target = w.to_vec();
    target.sort();
    let mut indices = Vec::new();
    for pos in 0..cur.len() {
        let want = &target[pos];
        let found = (pos..cur.len())
            .find(|&j| &cur[j] == want)
            .expect("letter present");
        for j in (pos + 1..=found).rev() {
            cur.swap(j - 1, j);
            indices.push(j);
        }
    }
    TranspositionSchedule { indices }
}

/// Every word with the given weight (`weight[k-1]` copies of `k`), in lexicographic order.
pub fn words_with_weight(weight: &[usize]) -> Vec<Word> {
    let n: usize = weight.iter().sum();
    let mut counts = weight.to_vec();
    let mut cur = Vec::with_capacity(n);
    let mut out = Vec::new();
    fill_words(&mut counts, n, &mut cur, &mut out);
    out
}

fn fill_words(counts: &mut [usize], left: usize, cur: &mut Vec<u32>, out: &mut Vec<Word>) {
    if left == 0 {
        out.push(Word(cur.clone()));
        return;
    }
    for k in 0..counts.len() {
        if counts[k] == 0 {
            continue;
        }
        counts[k] -= 1;
        cur.push(k as u32 + 1);
        fill_words(counts, left - 1, cur, out);
        cur.pop();
        counts[k] += 1;
    }
}

/// Words of a composition weight.
pub fn words_of(weight: &Composition) -> Vec<Word> {
    words_with_weight(weight.parts())
}
