//! Splitting tuples by the recording tableau of Robinson–Schensted insertion
//! over the totally ordered alphabet of tableaux.

use std::collections::BTreeMap;

use super::alphabet::Alphabet;
use super::blocks::alpha_indices;
use super::walk::{walk, Order};
use super::{d1, d2, d_min_closed, LLTInstance, TableauTuple};
use crate::error::{Error, Result};
use crate::par::Exec;
use crate::partition::Partition;
use crate::qseries::IntLaurentPoly;
use crate::rs::recording_rows;
use crate::tableau::{maj_standard, StandardTableau};

fn check_size(s: &StandardTableau, inst: &LLTInstance) -> Result<()> {
    if s.size() != inst.n() {
        return Err(Error::SizeMismatch {
            expected: inst.n(),
            actual: s.size(),
        });
    }
    Ok(())
}

/// Tuples of weight `ν` whose recording tableau is `s`.
pub fn rs_class_tuples(
    s: &StandardTableau,
    inst: &LLTInstance,
    nu: &Partition,
) -> Result<Vec<TableauTuple>> {
    check_size(s, inst)?;
    let w = inst.check_weight(nu.parts())?;
    let alphabet = Alphabet::new(inst.mu(), w.len());
    let target = s.rows().to_vec();
    let found = walk(
        &alphabet,
        &w,
        inst.n(),
        Order::All,
        Exec::default(),
        Vec::new,
        |acc: &mut Vec<Vec<u32>>, t| {
            if recording_rows(t) == target {
                acc.push(t.to_vec());
            }
        },
        |a, b| a.extend(b),
    );
    Ok(found
        .into_iter()
        .map(|t| {
            let comps = t
                .iter()
                .map(|&i| alphabet.tableaux[i as usize].clone())
                .collect();
            TableauTuple::new(comps).expect("one shape")
        })
        .collect())
}

/// `Σ q^(n·α(T) + maj(s) + d)` over the class of `s`.
pub fn class_poly(
    s: &StandardTableau,
    inst: &LLTInstance,
    nu: &Partition,
) -> Result<IntLaurentPoly> {
    check_size(s, inst)?;
    Ok(class_polys(inst, nu)?
        .remove(s)
        .unwrap_or_else(IntLaurentPoly::zero))
}

/// [`class_poly`] for every recording tableau with a non-empty class.
pub fn class_polys(
    inst: &LLTInstance,
    nu: &Partition,
) -> Result<BTreeMap<StandardTableau, IntLaurentPoly>> {
    let w = inst.check_weight(nu.parts())?;
    let alphabet = Alphabet::new(inst.mu(), w.len());
    let n = inst.n() as i64;
    let dsum = (d1(inst.mu()) + d2(inst.mu())) as i64;
    let d = d_min_closed(inst) as i64;
    let counts = walk(
        &alphabet,
        &w,
        inst.n(),
        Order::All,
        Exec::default(),
        BTreeMap::new,
        |acc: &mut BTreeMap<(Vec<Vec<u32>>, i64), u64>, t| {
            *acc.entry((recording_rows(t), alpha_indices(&alphabet, t, dsum)))
                .or_insert(0) += 1;
        },
        |a, b| {
            for (k, v) in b {
                *a.entry(k).or_insert(0) += v;
            }
        },
    );
    let mut out: BTreeMap<StandardTableau, IntLaurentPoly> = BTreeMap::new();
    for ((rows, alpha), c) in counts {
        let s = StandardTableau::new(rows).expect("recording tableau");
        let e = n * alpha + maj_standard(&s) as i64 + d;
        out.entry(s)
            .or_insert_with(IntLaurentPoly::zero)
            .add_term(e, c.into());
    }
    Ok(out)
}

/// Size of every non-empty class.
pub fn class_counts(inst: &LLTInstance, nu: &Partition) -> Result<BTreeMap<StandardTableau, u64>> {
    let w = inst.check_weight(nu.parts())?;
    let alphabet = Alphabet::new(inst.mu(), w.len());
    let counts = walk(
        &alphabet,
        &w,
        inst.n(),
        Order::All,
        Exec::default(),
        BTreeMap::new,
        |acc: &mut BTreeMap<Vec<Vec<u32>>, u64>, t| *acc.entry(recording_rows(t)).or_insert(0) += 1,
        |a, b| {
            for (k, v) in b {
                *a.entry(k).or_insert(0) += v;
            }
        },
    );
    Ok(counts
        .into_iter()
        .map(|(rows, c)| (StandardTableau::new(rows).expect("recording tableau"), c))
        .collect())
}
