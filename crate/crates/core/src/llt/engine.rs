//! LLT coefficients by enumeration, and the two expansions that must agree
//! with them.

use std::collections::{BTreeMap, HashMap};

use super::alphabet::Alphabet;
use super::blocks::{alpha_indices, runs};
use super::walk::{walk, Order};
use super::{d1, d2, d_min_closed, LLTInstance};
use crate::error::Result;
use crate::par::Exec;
use crate::partition::{enumerate_partitions, Composition, Partition};
use crate::qseries::{q_multinomial, residue_split, IntLaurentPoly};
use crate::symfun::WeightIndexedPoly;
use crate::word::maj_slice;

fn bump(hist: &mut Vec<u64>, e: usize) {
    if hist.len() <= e {
        hist.resize(e + 1, 0);
    }
    hist[e] += 1;
}

fn merge_hist(into: &mut Vec<u64>, from: Vec<u64>) {
    if into.len() < from.len() {
        into.resize(from.len(), 0);
    }
    for (a, b) in into.iter_mut().zip(from) {
        *a += b;
    }
}

fn merge_counts<K: Ord>(into: &mut BTreeMap<K, u64>, from: BTreeMap<K, u64>) {
    for (k, v) in from {
        *into.entry(k).or_insert(0) += v;
    }
}

pub(crate) fn coefficient_in(
    alphabet: &Alphabet,
    n: usize,
    weight: &[u8],
    exec: Exec,
) -> IntLaurentPoly {
    let hist = walk(
        alphabet,
        weight,
        n,
        Order::All,
        exec,
        Vec::new,
        |h, t| bump(h, alphabet.inv(t)),
        merge_hist,
    );
    IntLaurentPoly::from_histogram(&hist, 0)
}

/// `G_{μ^n, ν}(q)`: `q^Inv` summed over every tuple of weight `ν`.
pub fn llt_coefficient(inst: &LLTInstance, nu: &Partition) -> Result<IntLaurentPoly> {
    llt_coefficient_with(inst, nu.parts(), Exec::default())
}

/// [`llt_coefficient`] for any weight (a composition is allowed) and schedule.
pub fn llt_coefficient_with(
    inst: &LLTInstance,
    weight: &[usize],
    exec: Exec,
) -> Result<IntLaurentPoly> {
    let w = inst.check_weight(weight)?;
    let alphabet = Alphabet::new(inst.mu(), w.len());
    Ok(coefficient_in(&alphabet, inst.n(), &w, exec))
}

/// `G_{μ^n, ν}` for every partition `ν` of `n·|μ|`.
pub fn llt_polynomial(inst: &LLTInstance) -> WeightIndexedPoly {
    llt_polynomial_with(inst, Exec::default())
}

pub fn llt_polynomial_with(inst: &LLTInstance, exec: Exec) -> WeightIndexedPoly {
    let size = inst.total_size();
    let alphabet = Alphabet::new(inst.mu(), size);
    let mut out = WeightIndexedPoly::new();
    for nu in enumerate_partitions(size) {
        let w = inst
            .check_weight(nu.parts())
            .expect("partition of the right size");
        out.insert(nu, coefficient_in(&alphabet, inst.n(), &w, exec))
            .expect("one size");
    }
    out
}

/// Number of tuples of weight `ν`.
pub fn count_tuples(inst: &LLTInstance, nu: &Partition) -> Result<u64> {
    let w = inst.check_weight(nu.parts())?;
    let alphabet = Alphabet::new(inst.mu(), w.len());
    Ok(walk(
        &alphabet,
        &w,
        inst.n(),
        Order::All,
        Exec::default(),
        || 0u64,
        |c, _| *c += 1,
        |a, b| *a += b,
    ))
}

/// `Σ q^Inv(T)·[n; ρ(T)]_q` over weakly increasing tuples of weight `ν`,
/// where `ρ(T)` lists the multiplicities of the distinct components.
pub fn theorem_a_rhs(inst: &LLTInstance, nu: &Partition) -> Result<IntLaurentPoly> {
    theorem_a_rhs_with(inst, nu.parts(), Exec::default())
}

pub fn theorem_a_rhs_with(
    inst: &LLTInstance,
    weight: &[usize],
    exec: Exec,
) -> Result<IntLaurentPoly> {
    let w = inst.check_weight(weight)?;
    let alphabet = Alphabet::new(inst.mu(), w.len());
    let groups = walk(
        &alphabet,
        &w,
        inst.n(),
        Order::WeaklyIncreasing,
        exec,
        BTreeMap::new,
        |acc: &mut BTreeMap<(usize, Vec<usize>), u64>, t| {
            let (_, mut rho) = runs(t);
            rho.sort_unstable();
            *acc.entry((alphabet.inv(t), rho)).or_insert(0) += 1;
        },
        merge_counts,
    );
    let mut multinomials: HashMap<Vec<usize>, IntLaurentPoly> = HashMap::new();
    let mut total = IntLaurentPoly::zero();
    for ((inv, rho), count) in groups {
        let m = multinomials.entry(rho.clone()).or_insert_with(|| {
            q_multinomial(inst.n(), &Composition::new(rho)).expect("ρ sums to n")
        });
        total += m.shift(inv as i64).scale(&count.into());
    }
    Ok(total)
}

/// `Σ q^(n·α(T) + maj(T) + d)` over all tuples of weight `ν`.
pub fn theorem_b_rhs(inst: &LLTInstance, nu: &Partition) -> Result<IntLaurentPoly> {
    theorem_b_rhs_with(inst, nu.parts(), Exec::default())
}

pub fn theorem_b_rhs_with(
    inst: &LLTInstance,
    weight: &[usize],
    exec: Exec,
) -> Result<IntLaurentPoly> {
    let parts = alpha_maj_split(inst, weight, exec)?;
    Ok(parts.into_iter().sum())
}

/// Theorem B terms bucketed by `maj mod n`.
fn alpha_maj_split(
    inst: &LLTInstance,
    weight: &[usize],
    exec: Exec,
) -> Result<Vec<IntLaurentPoly>> {
    let w = inst.check_weight(weight)?;
    let alphabet = Alphabet::new(inst.mu(), w.len());
    let n = inst.n();
    let dsum = (d1(inst.mu()) + d2(inst.mu())) as i64;
    let d = d_min_closed(inst) as i64;
    let counts = walk(
        &alphabet,
        &w,
        n,
        Order::All,
        exec,
        BTreeMap::new,
        |acc: &mut BTreeMap<(usize, i64), u64>, t| {
            let maj = maj_slice(t);
            let e = n as i64 * alpha_indices(&alphabet, t, dsum) + maj as i64 + d;
            *acc.entry((maj % n, e)).or_insert(0) += 1;
        },
        merge_counts,
    );
    let mut out = vec![IntLaurentPoly::zero(); n];
    for ((i, e), c) in counts {
        out[i].add_term(e, c.into());
    }
    Ok(out)
}

/// `G^{(i)}`: the terms of `G` whose exponent is `i + d` modulo `n`.
pub fn component_split(inst: &LLTInstance, nu: &Partition) -> Result<Vec<IntLaurentPoly>> {
    let g = llt_coefficient(inst, nu)?;
    Ok(residue_split(&g, inst.n(), d_min_closed(inst) as i64))
}

/// The same components assembled from tuples with `maj ≡ i (mod n)`.
pub fn component_split_by_maj(inst: &LLTInstance, nu: &Partition) -> Result<Vec<IntLaurentPoly>> {
    alpha_maj_split(inst, nu.parts(), Exec::default())
}

/// `K^{(i)}`: tuples of weight `ν` with `maj ≡ i (mod n)`.
pub fn count_class_i(inst: &LLTInstance, nu: &Partition, i: usize) -> Result<u64> {
    let n = inst.n();
    if i >= n {
        return Err(crate::error::Error::Residue {
            residue: i,
            modulus: n,
        });
    }
    Ok(count_classes(inst, nu)?[i])
}

/// All of `K^{(0)}, ..., K^{(n-1)}`.
pub fn count_classes(inst: &LLTInstance, nu: &Partition) -> Result<Vec<u64>> {
    let w = inst.check_weight(nu.parts())?;
    let alphabet = Alphabet::new(inst.mu(), w.len());
    let n = inst.n();
    let counts = walk(
        &alphabet,
        &w,
        n,
        Order::All,
        Exec::default(),
        || vec![0u64; n],
        |acc, t| acc[maj_slice(t) % n] += 1,
        merge_hist,
    );
    Ok(counts)
}
