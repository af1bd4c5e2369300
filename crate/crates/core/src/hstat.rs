//! The `h_{k_1,...,k_m}` statistics on words and their major-index companion.
//!
//! For every composition `ν` of `n` and integers `k_1..k_m` these satisfy
//!
//! ```text
//! q^(k_1 ν_1 + ... + k_m ν_m) [n; ν]_q = Σ_{w ∈ Word(ν)} q^(n·h(w) + inv(w))
//! ```
//!
//! Only this generating function is canonical; the pointwise values come from
//! the fixed recursion implemented here.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::word::{foata, split_word, Word};

/// One integer per letter value; entries may be negative.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct KVector(pub Vec<i64>);

impl KVector {
    pub fn new(ks: Vec<i64>) -> Self {
        assert!(!ks.is_empty(), "k-vector needs at least one entry");
        KVector(ks)
    }

    pub fn zeros(m: usize) -> Self {
        KVector::new(vec![0; m])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `Σ k_i ν_i`.
    pub fn dot(&self, weight: &[usize]) -> i64 {
        self.0.iter().zip(weight).map(|(&k, &v)| k * v as i64).sum()
    }
}

/// Which second subscript the multi-letter recursion feeds to the binary step.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Scaling {
    /// `h_{k_1, h_{k_2..}(w')}(w'')`.
    Plain,
    /// `h_{k_1, (n - ν_1) h_{k_2..}(w')}(w'')`, as the recursion is sometimes written.
    Scaled,
}

/// Signed count of 2s in the last `k` (or first `|k|`) cyclic positions of a binary word.
///
/// Negative `k` counts with a minus sign: that is what makes
/// `Σ q^(n·h_{0,k} + inv) = q^(k·a) [n; a]_q` hold for `k < 0`.
pub fn h_0_k(w: &Word, k: i64) -> Result<i64> {
    if !w.is_binary() {
        return Err(Error::NotBinary);
    }
    Ok(h_0_k_unchecked(w.letters(), k))
}

fn h_0_k_unchecked(w: &[u32], k: i64) -> i64 {
    let n = w.len() as i64;
    if n == 0 || k == 0 {
        return 0;
    }
    let twos = w.iter().filter(|&&l| l == 2).count() as i64;
    let span = k.abs();
    let (full, rem) = (span / n, (span % n) as usize);
    let partial = if k > 0 {
        &w[w.len() - rem..]
    } else {
        &w[..rem]
    };
    let count = full * twos + partial.iter().filter(|&&l| l == 2).count() as i64;
    if k > 0 {
        count
    } else {
        -count
    }
}

/// `h_{k_1,k_2}(w) = k_1 + h_{0, k_2 - k_1}(w)` on binary words.
pub fn h_two(w: &Word, k1: i64, k2: i64) -> Result<i64> {
    if !w.is_binary() {
        return Err(Error::NotBinary);
    }
    Ok(k1 + h_0_k_unchecked(w.letters(), k2 - k1))
}

/// The general statistic, built recursively from [`split_word`].
pub fn h_general(w: &Word, kv: &KVector) -> Result<i64> {
    h_general_with(w, kv, Scaling::Plain)
}

/// [`h_general`] with an explicit choice of recursion scaling.
pub fn h_general_with(w: &Word, kv: &KVector, scaling: Scaling) -> Result<i64> {
    let max = w.max_letter();
    if max as usize > kv.len() {
        return Err(Error::KVectorTooShort {
            kv: kv.len(),
            letter: max,
        });
    }
    Ok(h_rec(w.letters(), &kv.0, scaling))
}

fn h_rec(w: &[u32], ks: &[i64], scaling: Scaling) -> i64 {
    if ks.len() == 1 {
        return ks[0];
    }
    let (prime, binary) = split_word(&Word::new(w.to_vec()));
    let shifted: Vec<u32> = prime.letters().iter().map(|&l| l - 1).collect();
    let inner = h_rec(&shifted, &ks[1..], scaling);
    let second = match scaling {
        Scaling::Plain => inner,
        Scaling::Scaled => shifted.len() as i64 * inner,
    };
    ks[0] + h_0_k_unchecked(binary.letters(), second - ks[0])
}

/// `α′(w) = h(foata(w))`, so `Σ q^(n·α′ + maj) = q^(Σ k_i ν_i) [n; ν]_q`.
pub fn alpha_prime(w: &Word, kv: &KVector) -> Result<i64> {
    h_general(&foata(w), kv)
}
