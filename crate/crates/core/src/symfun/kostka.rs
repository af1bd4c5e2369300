use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use super::WeightIndexedPoly;
use crate::error::{Error, Result};
use crate::partition::{enumerate_partitions, Composition, Partition};
use crate::qseries::IntLaurentPoly;
use crate::tableau::enumerate_sstab;

/// `K_{λ,ν}`: semistandard tableaux of shape `λ` and weight `ν`.
pub fn kostka(lambda: &Partition, nu: &Partition) -> Result<u64> {
    let w = Composition::from(nu);
    Ok(enumerate_sstab(lambda, Some(&w), None)?.len() as u64)
}

/// Kostka matrix of one size and its inverse, with partitions in
/// reverse-lexicographic order so both are upper unitriangular.
#[derive(Debug)]
pub struct KostkaMatrix {
    size: usize,
    parts: Vec<Partition>,
    index: HashMap<Partition, usize>,
    k: Vec<Vec<i64>>,
    inv: Vec<Vec<i64>>,
}

impl KostkaMatrix {
    fn build(size: usize) -> Self {
        let parts = enumerate_partitions(size);
        let index: HashMap<Partition, usize> = parts
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, p)| (p, i))
            .collect();
        let m = parts.len();
        let mut k = vec![vec![0i64; m]; m];
        for (j, nu) in parts.iter().enumerate() {
            for (lambda, count) in strip_counts(nu.parts()) {
                k[index[&lambda]][j] = count;
            }
        }
        let mut inv = vec![vec![0i64; m]; m];
        for j in 0..m {
            inv[j][j] = 1;
            for i in (0..j).rev() {
                let s: i64 = (i + 1..=j).map(|l| k[i][l] * inv[l][j]).sum();
                inv[i][j] = -s;
            }
        }
        KostkaMatrix {
            size,
            parts,
            index,
            k,
            inv,
        }
    }

    pub fn size(&self) -> usize {
        self.size
    }

    /// Index partitions in matrix order.
    pub fn partitions(&self) -> &[Partition] {
        &self.parts
    }

    pub fn entry(&self, lambda: &Partition, nu: &Partition) -> i64 {
        match (self.index.get(lambda), self.index.get(nu)) {
            (Some(&i), Some(&j)) => self.k[i][j],
            _ => 0,
        }
    }

    /// `K⁻¹_{λ,ν}`.
    pub fn inverse_entry(&self, lambda: &Partition, nu: &Partition) -> i64 {
        match (self.index.get(lambda), self.index.get(nu)) {
            (Some(&i), Some(&j)) => self.inv[i][j],
            _ => 0,
        }
    }

    pub fn matrix(&self) -> &[Vec<i64>] {
        &self.k
    }

    pub fn inverse_matrix(&self) -> &[Vec<i64>] {
        &self.inv
    }

    /// `(ρ, K⁻¹_{ρ,ν})` for the nonzero entries of column `ν`.
    pub fn inverse_column(&self, nu: &Partition) -> Vec<(Partition, i64)> {
        let Some(&j) = self.index.get(nu) else {
            return Vec::new();
        };
        (0..=j)
            .filter(|&i| self.inv[i][j] != 0)
            .map(|i| (self.parts[i].clone(), self.inv[i][j]))
            .collect()
    }
}

/// Shapes reachable from the empty shape by horizontal strips of sizes
/// `weight[0], weight[1], ...`, with the number of ways to reach each.
fn strip_counts(weight: &[usize]) -> HashMap<Partition, i64> {
    let mut layer: HashMap<Vec<usize>, i64> = HashMap::from([(Vec::new(), 1)]);
    for &w in weight {
        let mut next: HashMap<Vec<usize>, i64> = HashMap::new();
        for (shape, count) in &layer {
            let mut grown = shape.clone();
            grown.push(0);
            add_strips(shape, &mut grown, 0, w, &mut |s| {
                let key: Vec<usize> = s.iter().copied().filter(|&p| p > 0).collect();
                *next.entry(key).or_insert(0) += count;
            });
        }
        layer = next;
    }
    layer
        .into_iter()
        .map(|(p, c)| (Partition::new(p), c))
        .collect()
}

/// Adds `left` boxes to rows `row..` of `grown`, at most one per column:
/// row `r` may grow up to the old length of row `r - 1`.
fn add_strips(
    old: &[usize],
    grown: &mut Vec<usize>,
    row: usize,
    left: usize,
    emit: &mut impl FnMut(&[usize]),
) {
    if left == 0 {
        emit(grown);
        return;
    }
    if row == grown.len() {
        return;
    }
    let base = old.get(row).copied().unwrap_or(0);
    let cap = if row == 0 {
        left
    } else {
        (old[row - 1] - base).min(left)
    };
    for add in (0..=cap).rev() {
        grown[row] = base + add;
        add_strips(old, grown, row + 1, left - add, emit);
    }
    grown[row] = base;
}

fn cache() -> &'static Mutex<HashMap<usize, Arc<KostkaMatrix>>> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Arc<KostkaMatrix>>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// The Kostka matrix of size `n`, built once per process.
pub fn kostka_matrix(n: usize) -> Arc<KostkaMatrix> {
    if let Some(m) = cache().lock().expect("kostka cache").get(&n) {
        return Arc::clone(m);
    }
    let built = Arc::new(KostkaMatrix::build(n));
    let mut guard = cache().lock().expect("kostka cache");
    Arc::clone(guard.entry(n).or_insert(built))
}

/// `K⁻¹` for size `n`, rows and columns in [`KostkaMatrix::partitions`] order.
pub fn inverse_kostka(n: usize) -> Vec<Vec<i64>> {
    kostka_matrix(n).inverse_matrix().to_vec()
}

/// Schur coordinates `c_ν = Σ_ρ K⁻¹_{ρ,ν} f(ρ)` of a monomial-coordinate family.
pub fn schur_expand(f: &WeightIndexedPoly) -> Result<WeightIndexedPoly> {
    let Some(size) = f.size() else {
        return Ok(WeightIndexedPoly::new());
    };
    let km = kostka_matrix(size);
    let mut out = WeightIndexedPoly::new();
    for nu in km.partitions() {
        let mut c = IntLaurentPoly::zero();
        for (rho, k) in km.inverse_column(nu) {
            let g = f.get(&rho);
            if !g.is_zero() {
                c += g.scale(&k.into());
            }
        }
        out.insert(nu.clone(), c)?;
    }
    Ok(out)
}

pub(crate) fn check_size(expected: usize, actual: usize) -> Result<()> {
    if expected != actual {
        return Err(Error::SizeMismatch { expected, actual });
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec())
    }

    #[test]
    fn kostka_examples() {
        assert_eq!(kostka(&p(&[2, 1]), &p(&[2, 1])).unwrap(), 1);
        assert_eq!(kostka(&p(&[2, 1]), &p(&[1, 1, 1])).unwrap(), 2);
        assert_eq!(kostka(&p(&[1, 1]), &p(&[2])).unwrap(), 0);
        assert!(kostka(&p(&[1, 1]), &p(&[3])).is_err());
    }

    #[test]
    fn matrix_matches_enumeration_and_inverts() {
        for n in 0..=8 {
            let km = kostka_matrix(n);
            let parts = km.partitions();
            let m = parts.len();
            for (i, lambda) in parts.iter().enumerate() {
                for (j, nu) in parts.iter().enumerate() {
                    if n <= 6 {
                        assert_eq!(km.matrix()[i][j], kostka(lambda, nu).unwrap() as i64);
                    }
                    if km.matrix()[i][j] != 0 {
                        assert!(lambda.dominates(nu));
                    }
                    let prod: i64 = (0..m)
                        .map(|l| km.matrix()[i][l] * km.inverse_matrix()[l][j])
                        .sum();
                    assert_eq!(prod, (i == j) as i64);
                }
            }
        }
    }

    #[test]
    fn size_two_inverse() {
        let km = kostka_matrix(2);
        assert_eq!(km.inverse_entry(&p(&[2]), &p(&[2])), 1);
        assert_eq!(km.inverse_entry(&p(&[2]), &p(&[1, 1])), -1);
        assert_eq!(km.inverse_entry(&p(&[1, 1]), &p(&[1, 1])), 1);
    }

    #[test]
    fn expanding_a_schur_function_gives_its_indicator() {
        let km = kostka_matrix(4);
        for lambda in km.partitions() {
            let mut f = WeightIndexedPoly::new();
            for rho in km.partitions() {
                f.insert(
                    rho.clone(),
                    IntLaurentPoly::monomial(0, km.entry(lambda, rho)),
                )
                .unwrap();
            }
            let c = schur_expand(&f).unwrap();
            for nu in km.partitions() {
                let expect = if nu == lambda {
                    IntLaurentPoly::one()
                } else {
                    IntLaurentPoly::zero()
                };
                assert_eq!(c.get(nu), expect);
            }
        }
    }
}
