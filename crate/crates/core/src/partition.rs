//! Integer partitions and compositions.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::ParseError;

/// A weakly decreasing sequence of positive integers.
///
/// The empty partition is legal and is the unique partition of zero.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Partition(Vec<usize>);

impl Partition {
    /// Builds a partition, sorting the parts and dropping zeros.
    pub fn new(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    /// Builds a partition from parts that must already be weakly decreasing and positive.
    pub fn from_parts(parts: Vec<usize>) -> Result<Self, ParseError> {
        if parts.contains(&0) {
            return Err(ParseError::NonPositive);
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(ParseError::NotDecreasing(format_parts(&parts)));
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// Part `i` (0-based), or zero past the end.
    pub fn part(&self, i: usize) -> usize {
        self.0.get(i).copied().unwrap_or(0)
    }

    /// Conjugate (transposed) partition.
    pub fn conjugate(&self) -> Partition {
        let width = self.part(0);
        let parts = (0..width)
            .map(|c| self.0.iter().take_while(|&&p| p > c).count())
            .collect();
        Partition(parts)
    }

    /// Dominance order: every partial sum of `self` is at least that of `other`.
    pub fn dominates(&self, other: &Partition) -> bool {
        if self.size() != other.size() {
            return false;
        }
        let len = self.len().max(other.len());
        let (mut a, mut b) = (0, 0);
        for i in 0..len {
            a += self.part(i);
            b += other.part(i);
            if a < b {
                return false;
            }
        }
        true
    }

    /// Cells of the Young diagram in row-reading order.
    pub fn cells(&self) -> impl Iterator<Item = crate::tableau::Cell> + '_ {
        self.0
            .iter()
            .enumerate()
            .flat_map(|(r, &len)| (0..len).map(move |c| crate::tableau::Cell::new(r, c)))
    }

    /// Number of standard tableaux, by the hook length formula.
    pub fn hook_length_count(&self) -> u128 {
        let conj = self.conjugate();
        let n = self.size() as u128;
        let mut num: u128 = (1..=n).product();
        let mut hooks: u128 = 1;
        for cell in self.cells() {
            let arm = self.part(cell.row) - cell.col - 1;
            let leg = conj.part(cell.col) - cell.row - 1;
            hooks *= (arm + leg + 1) as u128;
        }
        num /= hooks;
        num
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_parts(&self.0))
    }
}

impl FromStr for Partition {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Partition::from_parts(parse_parts(s)?)
    }
}

/// A finite sequence of positive integers; zero parts are dropped at construction.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Composition(Vec<usize>);

impl Composition {
    pub fn new(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        Composition(parts)
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// The partition obtained by sorting the parts.
    pub fn sorted(&self) -> Partition {
        Partition::new(self.0.clone())
    }
}

impl From<&Partition> for Composition {
    fn from(p: &Partition) -> Self {
        Composition(p.0.clone())
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_parts(&self.0))
    }
}

impl FromStr for Composition {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let parts = parse_parts(s)?;
        if parts.contains(&0) {
            return Err(ParseError::NonPositive);
        }
        Ok(Composition(parts))
    }
}

fn format_parts(parts: &[usize]) -> String {
    if parts.is_empty() {
        return "()".to_string();
    }
    parts
        .iter()
        .map(|p| p.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

/// Parses "4,2,1"; whitespace is tolerated around tokens. "" and "()" give the empty list.
pub(crate) fn parse_parts(s: &str) -> Result<Vec<usize>, ParseError> {
    let s = s.trim();
    if s.is_empty() || s == "()" {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|tok| {
            let tok = tok.trim();
            tok.parse::<usize>()
                .map_err(|_| ParseError::BadInteger(tok.to_string()))
        })
        .collect()
}

/// All partitions of `n` in reverse-lexicographic order.
pub fn enumerate_partitions(n: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fill_partitions(n, n, &mut current, &mut out);
    out
}

fn fill_partitions(rest: usize, max: usize, current: &mut Vec<usize>, out: &mut Vec<Partition>) {
    if rest == 0 {
        out.push(Partition(current.clone()));
        return;
    }
    for part in (1..=rest.min(max)).rev() {
        current.push(part);
        fill_partitions(rest - part, part, current, out);
        current.pop();
    }
}

/// All partitions of every size `1..=max_size`, ordered by size then reverse-lex.
pub fn partitions_up_to(max_size: usize) -> Vec<Partition> {
    (1..=max_size).flat_map(enumerate_partitions).collect()
}

/// All compositions of `n` with at most `max_parts` parts (unbounded when `None`).
pub fn enumerate_compositions(n: usize, max_parts: Option<usize>) -> Vec<Composition> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fill_compositions(n, max_parts.unwrap_or(n), &mut current, &mut out);
    out
}

fn fill_compositions(
    rest: usize,
    parts_left: usize,
    current: &mut Vec<usize>,
    out: &mut Vec<Composition>,
) {
    if rest == 0 {
        out.push(Composition(current.clone()));
        return;
    }
    if parts_left == 0 {
        return;
    }
    for part in 1..=rest {
        current.push(part);
        fill_compositions(rest - part, parts_left - 1, current, out);
        current.pop();
    }
}
