//! Equality blocks of a sorted tuple, the k-vector attached to them, and the
//! statistic `α`.

use serde::{Deserialize, Serialize};

use super::alphabet::Alphabet;
use super::{d1, d2, d_min_closed, inversion_number, pair_unchecked, LLTInstance, TableauTuple};
use crate::error::{Error, Result};
use crate::hstat::{alpha_prime, KVector};
use crate::partition::Composition;
use crate::tableau::SemistandardTableau;
use crate::word::Word;

/// Distinct components `U_1 < ... < U_m` of a sorted tuple with their
/// multiplicities and the k-vector with `Σ k_j ρ_j = Inv - d`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlockDecomposition {
    pub blocks: Vec<SemistandardTableau>,
    pub rho: Composition,
    pub k: KVector,
}

/// `k_j = Σ_{i<j} c_ij ρ_i - (Σ_{l>j} ρ_l)·D` where `c_ij` counts the
/// inversions between blocks `i` and `j` and `D = d₁ + d₂`.
fn k_entries(pair: impl Fn(usize, usize) -> usize, rho: &[usize], dsum: i64) -> Vec<i64> {
    let m = rho.len();
    let mut after: i64 = rho.iter().sum::<usize>() as i64;
    (0..m)
        .map(|j| {
            after -= rho[j] as i64;
            let cross: i64 = (0..j).map(|i| (pair(i, j) * rho[i]) as i64).sum();
            cross - after * dsum
        })
        .collect()
}

/// Distinct values of a sorted slice and how often each occurs.
pub(crate) fn runs<T: PartialEq + Clone>(sorted: &[T]) -> (Vec<T>, Vec<usize>) {
    let mut values: Vec<T> = Vec::new();
    let mut counts: Vec<usize> = Vec::new();
    for x in sorted {
        if values.last() == Some(x) {
            *counts.last_mut().expect("run present") += 1;
        } else {
            values.push(x.clone());
            counts.push(1);
        }
    }
    (values, counts)
}

/// Blocks, multiplicities and k-vector of a weakly increasing tuple.
pub fn canonical_k(sorted: &TableauTuple) -> Result<BlockDecomposition> {
    if !sorted.is_sorted() {
        return Err(Error::Unsorted);
    }
    let (blocks, rho) = runs(sorted.components());
    let shape = sorted.shape();
    let dsum = (d1(shape) + d2(shape)) as i64;
    let k = k_entries(|i, j| pair_unchecked(&blocks[i], &blocks[j]), &rho, dsum);
    let kv = KVector::new(k);
    let inst = LLTInstance::new(shape.clone(), sorted.n())?;
    let expect = inversion_number(sorted) as i64 - d_min_closed(&inst) as i64;
    assert_eq!(kv.dot(&rho), expect, "k-vector invariant");
    Ok(BlockDecomposition {
        blocks,
        rho: Composition::new(rho),
        k: kv,
    })
}

/// `α(T) = α′(w)` for the block-index word `w` of `T` under the canonical k-vector.
pub fn alpha_statistic(t: &TableauTuple) -> i64 {
    let bd = canonical_k(&t.sorted()).expect("sorted");
    let w: Vec<u32> = t
        .components()
        .iter()
        .map(|c| bd.blocks.binary_search(c).expect("component is a block") as u32 + 1)
        .collect();
    alpha_prime(&Word::new(w), &bd.k).expect("k covers every block")
}

/// [`alpha_statistic`] on alphabet indices; `dsum = d₁ + d₂`.
pub(crate) fn alpha_indices(alphabet: &Alphabet, t: &[u32], dsum: i64) -> i64 {
    let mut sorted = t.to_vec();
    sorted.sort_unstable();
    let (blocks, rho) = runs(&sorted);
    let k = k_entries(
        |i, j| alphabet.pair(blocks[i] as usize, blocks[j] as usize),
        &rho,
        dsum,
    );
    let w: Vec<u32> = t
        .iter()
        .map(|x| blocks.binary_search(x).expect("block present") as u32 + 1)
        .collect();
    alpha_prime(&Word::new(w), &KVector::new(k)).expect("k covers every block")
}
