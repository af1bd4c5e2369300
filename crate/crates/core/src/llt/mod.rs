//! The Inversion statistic on tuples of tableaux of one shape and the LLT
//! coefficients it generates.
//!
//! A tuple `T = (T_0, ..., T_{n-1})` of semistandard tableaux of shape `μ` has
//! an inversion for every pair of components `a < b` and cells `u`, `v` with
//! either `T_a(u) > T_b(v)` and `c(u) = c(v)`, or `T_b(u) > T_a(v)` and
//! `c(u) = c(v) - 1`. The LLT coefficient `G_{μ^n, ν}(q)` sums `q^Inv` over
//! tuples of total weight `ν`.

mod alphabet;
mod blocks;
mod classes;
mod dmin;
mod engine;
mod walk;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::tableau::SemistandardTableau;
use crate::word::maj_slice;

pub use blocks::{alpha_statistic, canonical_k, BlockDecomposition};
pub use classes::{class_counts, class_poly, class_polys, rs_class_tuples};
pub use dmin::{d_min_oracle, d_min_search, DMinSearch};
pub use engine::{
    component_split, component_split_by_maj, count_class_i, count_classes, count_tuples,
    llt_coefficient, llt_coefficient_with, llt_polynomial, llt_polynomial_with, theorem_a_rhs,
    theorem_a_rhs_with, theorem_b_rhs, theorem_b_rhs_with,
};

/// `n` copies of the shape `μ`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct LLTInstance {
    mu: Partition,
    n: usize,
}

impl LLTInstance {
    pub fn new(mu: Partition, n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::NoCopies);
        }
        Ok(LLTInstance { mu, n })
    }

    pub fn mu(&self) -> &Partition {
        &self.mu
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `n·|μ|`.
    pub fn total_size(&self) -> usize {
        self.n * self.mu.size()
    }

    /// `weight` as byte counts, after checking it has size `n·|μ|`.
    pub(crate) fn check_weight(&self, weight: &[usize]) -> Result<Vec<u8>> {
        let size: usize = weight.iter().sum();
        if size != self.total_size() {
            return Err(Error::SizeMismatch {
                expected: self.total_size(),
                actual: size,
            });
        }
        Ok(weight.iter().map(|&c| c as u8).collect())
    }
}

impl fmt::Display for LLTInstance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})^{}", self.mu, self.n)
    }
}

/// A non-empty sequence of tableaux sharing one shape.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct TableauTuple {
    components: Vec<SemistandardTableau>,
}

impl TableauTuple {
    pub fn new(components: Vec<SemistandardTableau>) -> Result<Self> {
        let first = components.first().ok_or(Error::NoCopies)?;
        if components.iter().any(|t| t.shape() != first.shape()) {
            return Err(Error::MixedShapes);
        }
        Ok(TableauTuple { components })
    }

    pub fn components(&self) -> &[SemistandardTableau] {
        &self.components
    }

    pub fn n(&self) -> usize {
        self.components.len()
    }

    pub fn shape(&self) -> &Partition {
        self.components[0].shape()
    }

    /// Total weight, padded to `len` letters.
    pub fn weight_vec(&self, len: usize) -> Vec<usize> {
        let max = self
            .components
            .iter()
            .map(|t| t.max_entry() as usize)
            .max()
            .unwrap_or(0);
        let mut w = vec![0; len.max(max)];
        for t in &self.components {
            for (i, c) in t.weight_vec(max).into_iter().enumerate() {
                w[i] += c;
            }
        }
        w
    }

    /// Weakly increasing in the total order.
    pub fn is_sorted(&self) -> bool {
        self.components.windows(2).all(|p| p[0] <= p[1])
    }

    pub fn sorted(&self) -> TableauTuple {
        let mut components = self.components.clone();
        components.sort();
        TableauTuple { components }
    }
}

impl fmt::Display for TableauTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.components.iter().map(|t| t.to_string()).collect();
        write!(f, "({})", parts.join("; "))
    }
}

/// Components separated by `;`, each in tableau notation (`"1,2/3; 1,1/2"`).
impl FromStr for TableauTuple {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().trim_start_matches('(').trim_end_matches(')');
        let components = s.split(';').map(str::parse).collect::<Result<Vec<_>>>()?;
        TableauTuple::new(components)
    }
}

/// Inversions contributed by an earlier component `u` and a later one `v`.
pub fn inversion_pair(u: &SemistandardTableau, v: &SemistandardTableau) -> Result<usize> {
    if u.shape() != v.shape() {
        return Err(Error::ShapeMismatch(
            u.shape().to_string(),
            v.shape().to_string(),
        ));
    }
    Ok(pair_unchecked(u, v))
}

fn pair_unchecked(u: &SemistandardTableau, v: &SemistandardTableau) -> usize {
    let cells: Vec<_> = u.shape().cells().collect();
    let at = |t: &SemistandardTableau, c| t.get(c).expect("cell of the shape");
    let mut count = 0;
    for &a in &cells {
        for &b in &cells {
            if a.content() == b.content() && at(u, a) > at(v, b) {
                count += 1;
            }
            if a.content() == b.content() - 1 && at(v, a) > at(u, b) {
                count += 1;
            }
        }
    }
    count
}

/// `Inv(T)`: the sum of [`inversion_pair`] over all pairs of components.
pub fn inversion_number(t: &TableauTuple) -> usize {
    let c = t.components();
    (0..c.len())
        .flat_map(|a| (a + 1..c.len()).map(move |b| (a, b)))
        .map(|(a, b)| pair_unchecked(&c[a], &c[b]))
        .sum()
}

/// Major index of the component sequence under the total order.
pub fn tuple_maj(t: &TableauTuple) -> usize {
    maj_slice(t.components())
}

/// `Σ min(row, col)` over the cells of `μ`.
pub fn d1(mu: &Partition) -> usize {
    mu.cells().map(|c| c.row.min(c.col)).sum()
}

/// `Σ min(row, col + 1)` over the cells of `μ`.
pub fn d2(mu: &Partition) -> usize {
    mu.cells().map(|c| c.row.min(c.col + 1)).sum()
}

/// The minimum Inversion number `C(n,2)·(d₁(μ) + d₂(μ))`.
pub fn d_min_closed(inst: &LLTInstance) -> usize {
    let n = inst.n();
    n * (n - 1) / 2 * (d1(inst.mu()) + d2(inst.mu()))
}
