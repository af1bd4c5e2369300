//! Symmetric functions in monomial coordinates, their Schur expansions, and
//! the q-analogues of Littlewood–Richardson and plethysm multiplicities.

mod characters;
mod kostka;
mod lr;

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::qseries::IntLaurentPoly;

pub use characters::{cyclic_eigenspace_dim, k_lambda_i, mn_character, ramanujan_sum};
pub use kostka::{inverse_kostka, kostka, kostka_matrix, schur_expand, KostkaMatrix};
pub use lr::{
    a_q_plethysm, a_q_plethysm_table, negativity_scan, plethysm_multiplicity,
    q_littlewood_richardson, q_lr_component, q_lr_components_table, q_lr_table, revalidate_finding,
    Finding, NegativityReport, ResidueAggregate,
};

/// Polynomials indexed by partitions of one common size; absent entries are zero.
///
/// Serializes as a list of `{"nu": [...], "poly": {...}}` in reverse-lex order.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct WeightIndexedPoly {
    entries: BTreeMap<Partition, IntLaurentPoly>,
}

impl WeightIndexedPoly {
    pub fn new() -> Self {
        Self::default()
    }

    /// Sets the entry at `nu`; rejects a partition of a different size.
    pub fn insert(&mut self, nu: Partition, p: IntLaurentPoly) -> Result<()> {
        if let Some(size) = self.size() {
            if nu.size() != size {
                return Err(Error::SizeMismatch {
                    expected: size,
                    actual: nu.size(),
                });
            }
        }
        self.entries.insert(nu, p);
        Ok(())
    }

    pub fn get(&self, nu: &Partition) -> IntLaurentPoly {
        self.entries
            .get(nu)
            .cloned()
            .unwrap_or_else(IntLaurentPoly::zero)
    }

    /// Common size of the index partitions, if any entry exists.
    pub fn size(&self) -> Option<usize> {
        self.entries.keys().next().map(Partition::size)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Entries in reverse-lexicographic order of the index (`(n)` first).
    pub fn iter(&self) -> impl Iterator<Item = (&Partition, &IntLaurentPoly)> {
        self.entries.iter().rev()
    }

    /// Drops zero entries.
    pub fn trimmed(&self) -> Self {
        WeightIndexedPoly {
            entries: self
                .entries
                .iter()
                .filter(|(_, p)| !p.is_zero())
                .map(|(k, v)| (k.clone(), v.clone()))
                .collect(),
        }
    }
}

#[derive(Serialize, Deserialize)]
struct Entry {
    nu: Partition,
    poly: IntLaurentPoly,
}

impl Serialize for WeightIndexedPoly {
    fn serialize<S: serde::Serializer>(
        &self,
        serializer: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter().map(|(nu, poly)| Entry {
            nu: nu.clone(),
            poly: poly.clone(),
        }))
    }
}

impl<'de> Deserialize<'de> for WeightIndexedPoly {
    fn deserialize<D: serde::Deserializer<'de>>(
        deserializer: D,
    ) -> std::result::Result<Self, D::Error> {
        let entries = Vec::<Entry>::deserialize(deserializer)?;
        let mut out = WeightIndexedPoly::new();
        for e in entries {
            out.insert(e.nu, e.poly).map_err(serde::de::Error::custom)?;
        }
        Ok(out)
    }
}

/// CSV table: a `statistic,degree` prefix then one column per partition, one
/// row per (statistic, degree) pair with exact integer coefficients.
pub fn csv_table(tables: &[(String, &WeightIndexedPoly)]) -> Result<String> {
    let mut columns: Vec<Partition> = tables
        .iter()
        .flat_map(|(_, t)| t.iter().map(|(p, _)| p.clone()))
        .collect();
    columns.sort_by(|a, b| b.cmp(a));
    columns.dedup();
    let mut w = csv::Writer::from_writer(Vec::new());
    let mut header = vec!["statistic".to_string(), "degree".to_string()];
    header.extend(columns.iter().map(|p| p.to_string()));
    w.write_record(&header).map_err(csv_error)?;
    for (name, table) in tables {
        let exps: Vec<i64> = table
            .iter()
            .flat_map(|(_, p)| p.terms().map(|(e, _)| e))
            .collect();
        let (Some(&lo), Some(&hi)) = (exps.iter().min(), exps.iter().max()) else {
            continue;
        };
        for e in lo..=hi {
            let mut row = vec![name.clone(), e.to_string()];
            row.extend(columns.iter().map(|p| table.get(p).coeff(e).to_string()));
            w.write_record(&row).map_err(csv_error)?;
        }
    }
    let bytes = w.into_inner().map_err(|e| Error::Io(e.to_string()))?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

fn csv_error(e: csv::Error) -> Error {
    Error::Io(e.to_string())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn entries_share_a_size() {
        let mut f = WeightIndexedPoly::new();
        f.insert(Partition::new(vec![2]), IntLaurentPoly::one())
            .unwrap();
        assert!(f
            .insert(Partition::new(vec![2, 1]), IntLaurentPoly::one())
            .is_err());
        assert_eq!(f.get(&Partition::new(vec![1, 1])), IntLaurentPoly::zero());
    }

    #[test]
    fn csv_layout() {
        let mut f = WeightIndexedPoly::new();
        f.insert(Partition::new(vec![2]), IntLaurentPoly::one())
            .unwrap();
        f.insert(
            Partition::new(vec![1, 1]),
            IntLaurentPoly::from_terms([(1, 1)]),
        )
        .unwrap();
        let out = csv_table(&[("G".to_string(), &f)]).unwrap();
        assert_eq!(out, "statistic,degree,2,\"1,1\"\nG,0,1,0\nG,1,0,1\n");
    }

    #[test]
    fn json_roundtrip() {
        let mut f = WeightIndexedPoly::new();
        f.insert(Partition::new(vec![2]), IntLaurentPoly::one())
            .unwrap();
        f.insert(
            Partition::new(vec![1, 1]),
            IntLaurentPoly::from_terms([(1, 1)]),
        )
        .unwrap();
        let text = serde_json::to_string(&f).unwrap();
        assert_eq!(
            text,
            r#"[{"nu":[2],"poly":{"terms":[[0,1]]}},{"nu":[1,1],"poly":{"terms":[[1,1]]}}]"#
        );
        assert_eq!(serde_json::from_str::<WeightIndexedPoly>(&text).unwrap(), f);
    }
}
