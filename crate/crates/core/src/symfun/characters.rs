//! Symmetric-group characters and the eigenspaces of a long cycle.

use super::kostka::check_size;
use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::tableau::{enumerate_standard, maj_standard};

/// `K_λ^{(i)}`: standard tableaux of shape `λ` with `maj ≡ i (mod |λ|)`.
pub fn k_lambda_i(lambda: &Partition, i: usize) -> Result<u64> {
    let n = lambda.size();
    if i >= n.max(1) {
        return Err(Error::Residue {
            residue: i,
            modulus: n,
        });
    }
    let hits = enumerate_standard(lambda)
        .iter()
        .filter(|s| n == 0 || maj_standard(s) % n == i)
        .count();
    Ok(hits as u64)
}

/// `χ^λ` at the class of cycle type `rho` (Murnaghan–Nakayama).
pub fn mn_character(lambda: &Partition, rho: &Partition) -> Result<i64> {
    check_size(lambda.size(), rho.size())?;
    let len = lambda.len();
    // beta numbers λ_i + (len - 1 - i), strictly decreasing
    let beads: Vec<usize> = lambda
        .parts()
        .iter()
        .enumerate()
        .map(|(i, &p)| p + len - 1 - i)
        .collect();
    Ok(mn_beads(&beads, rho.parts()))
}

fn mn_beads(beads: &[usize], cycles: &[usize]) -> i64 {
    let Some((&r, rest)) = cycles.split_first() else {
        return 1;
    };
    let mut total = 0;
    for (i, &b) in beads.iter().enumerate() {
        if b < r || beads.contains(&(b - r)) {
            continue;
        }
        let target = b - r;
        // beads strictly between the new and old position give the leg length
        let height = beads.iter().filter(|&&x| x > target && x < b).count();
        let mut moved = beads.to_vec();
        moved[i] = target;
        moved.sort_unstable_by(|a, b| b.cmp(a));
        let sign = if height % 2 == 0 { 1 } else { -1 };
        total += sign * mn_beads(&moved, rest);
    }
    total
}

fn mobius(mut n: usize) -> i64 {
    let mut result = 1;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            n /= p;
            if n.is_multiple_of(p) {
                return 0;
            }
            result = -result;
        }
        p += 1;
    }
    if n > 1 {
        result = -result;
    }
    result
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// `c_n(i) = Σ_{d | gcd(n,i)} μ(n/d)·d`, the sum of `ζ^(ij)` over `j` coprime to `n`.
pub fn ramanujan_sum(n: usize, i: i64) -> i64 {
    assert!(n >= 1, "modulus must be positive");
    let g = gcd(n, i.unsigned_abs() as usize);
    (1..=g)
        .filter(|d| g.is_multiple_of(*d))
        .map(|d| mobius(n / d) * d as i64)
        .sum()
}

/// Dimension of the `ζ^i` eigenspace of an `n`-cycle on the Specht module
/// `S^λ`, `n = |λ|`, from the character values on powers of the cycle.
pub fn cyclic_eigenspace_dim(lambda: &Partition, i: usize) -> Result<u64> {
    let n = lambda.size();
    if n == 0 || i >= n {
        return Err(Error::Residue {
            residue: i,
            modulus: n,
        });
    }
    let mut total = 0i64;
    for g in (1..=n).filter(|g| n.is_multiple_of(*g)) {
        let m = n / g;
        let cycle_type = Partition::new(vec![m; g]);
        total += mn_character(lambda, &cycle_type)? * ramanujan_sum(m, i as i64);
    }
    if total % n as i64 != 0 || total < 0 {
        return Err(Error::InexactDivision);
    }
    Ok((total / n as i64) as u64)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::enumerate_partitions;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec())
    }

    #[test]
    fn character_examples() {
        assert_eq!(mn_character(&p(&[2, 1]), &p(&[3])).unwrap(), -1);
        assert_eq!(mn_character(&p(&[2, 1]), &p(&[1, 1, 1])).unwrap(), 2);
        assert_eq!(mn_character(&p(&[3, 2]), &p(&[1; 5])).unwrap(), 5);
        for rho in enumerate_partitions(5) {
            assert_eq!(mn_character(&p(&[5]), &rho).unwrap(), 1);
        }
        assert!(mn_character(&p(&[2]), &p(&[1])).is_err());
    }

    #[test]
    fn column_orthogonality() {
        for n in 1..=6 {
            let parts = enumerate_partitions(n);
            let dim_sq: i64 = parts
                .iter()
                .map(|l| mn_character(l, &p(&vec![1; n])).unwrap().pow(2))
                .sum();
            let fact: i64 = (1..=n as i64).product();
            assert_eq!(dim_sq, fact);
        }
    }

    #[test]
    fn ramanujan_examples() {
        assert_eq!(ramanujan_sum(3, 0), 2);
        assert_eq!(ramanujan_sum(1, 7), 1);
        assert_eq!(ramanujan_sum(3, 1), -1);
        assert_eq!(ramanujan_sum(12, 0), 4);
        assert_eq!(ramanujan_sum(6, 3), -2);
    }

    #[test]
    fn k_lambda_examples() {
        let hook = p(&[2, 1]);
        assert_eq!(
            (0..3)
                .map(|i| k_lambda_i(&hook, i).unwrap())
                .collect::<Vec<_>>(),
            vec![0, 1, 1]
        );
        assert_eq!(k_lambda_i(&p(&[4]), 0).unwrap(), 1);
        assert_eq!(k_lambda_i(&p(&[4]), 2).unwrap(), 0);
        assert_eq!(cyclic_eigenspace_dim(&hook, 0).unwrap(), 0);
        assert_eq!(cyclic_eigenspace_dim(&p(&[4]), 0).unwrap(), 1);
    }
}
