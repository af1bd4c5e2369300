//! Schur expansions of LLT coefficients, their residue components, and the
//! recording-tableau classes behind plethysm multiplicities.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::kostka::{check_size, kostka_matrix, schur_expand};
use super::WeightIndexedPoly;
use crate::error::{Error, Result};
use crate::llt::{
    alpha_statistic, class_counts, class_polys, component_split, d_min_closed, llt_coefficient,
    llt_polynomial, rs_class_tuples, LLTInstance,
};
use crate::partition::{enumerate_partitions, Partition};
use crate::qseries::{residue_split, IntLaurentPoly};
use crate::tableau::{enumerate_standard, enumerate_standard_all, maj_standard, StandardTableau};

fn check_nu(inst: &LLTInstance, nu: &Partition) -> Result<()> {
    check_size(inst.total_size(), nu.size())
}

fn check_residue(inst: &LLTInstance, i: usize) -> Result<()> {
    if i >= inst.n() {
        return Err(Error::Residue {
            residue: i,
            modulus: inst.n(),
        });
    }
    Ok(())
}

/// `Σ_ρ K⁻¹_{ρ,ν}·f(ρ)` with `f` evaluated only where the inverse is nonzero.
fn expand_at(
    size: usize,
    nu: &Partition,
    mut f: impl FnMut(&Partition) -> Result<IntLaurentPoly>,
) -> Result<IntLaurentPoly> {
    let km = kostka_matrix(size);
    let mut total = IntLaurentPoly::zero();
    for (rho, k) in km.inverse_column(nu) {
        total += f(&rho)?.scale(&k.into());
    }
    Ok(total)
}

/// `LR~_ν(q) = Σ_ρ K⁻¹_{ρ,ν} G_{μ^n, ρ}(q)`.
pub fn q_littlewood_richardson(inst: &LLTInstance, nu: &Partition) -> Result<IntLaurentPoly> {
    check_nu(inst, nu)?;
    expand_at(inst.total_size(), nu, |rho| llt_coefficient(inst, rho))
}

/// `LR~^{(i)}_ν(q) = Σ_ρ K⁻¹_{ρ,ν} G^{(i)}_{μ^n, ρ}(q)`.
pub fn q_lr_component(inst: &LLTInstance, nu: &Partition, i: usize) -> Result<IntLaurentPoly> {
    check_nu(inst, nu)?;
    check_residue(inst, i)?;
    expand_at(inst.total_size(), nu, |rho| {
        Ok(component_split(inst, rho)?.swap_remove(i))
    })
}

/// [`q_littlewood_richardson`] for every `ν`.
pub fn q_lr_table(inst: &LLTInstance) -> WeightIndexedPoly {
    schur_expand(&llt_polynomial(inst)).expect("one size")
}

/// [`q_lr_component`] for every `ν`, one table per residue.
pub fn q_lr_components_table(inst: &LLTInstance) -> Vec<WeightIndexedPoly> {
    let g = llt_polynomial(inst);
    let d = d_min_closed(inst) as i64;
    let mut parts = vec![WeightIndexedPoly::new(); inst.n()];
    for (rho, p) in g.iter() {
        for (i, c) in residue_split(p, inst.n(), d).into_iter().enumerate() {
            parts[i].insert(rho.clone(), c).expect("one size");
        }
    }
    parts
        .iter()
        .map(|t| schur_expand(t).expect("one size"))
        .collect()
}

/// `a_{λ[μ]}^ν`, from the class sizes of one standard tableau of shape `λ`.
pub fn plethysm_multiplicity(lambda: &Partition, mu: &Partition, nu: &Partition) -> Result<i64> {
    let inst = LLTInstance::new(mu.clone(), lambda.size())?;
    check_nu(&inst, nu)?;
    let s = enumerate_standard(lambda)
        .into_iter()
        .next()
        .expect("every shape has a standard tableau");
    let p = expand_at(inst.total_size(), nu, |rho| {
        let c = class_counts(&inst, rho)?.get(&s).copied().unwrap_or(0);
        Ok(IntLaurentPoly::monomial(0, c))
    })?;
    Ok(i64::try_from(p.eval_one()).expect("multiplicity fits in i64"))
}

/// `a_{S[μ^n]}^ν(q) = Σ_ρ K⁻¹_{ρ,ν} G_{S[μ^n], ρ}(q)`.
pub fn a_q_plethysm(
    s: &StandardTableau,
    inst: &LLTInstance,
    nu: &Partition,
) -> Result<IntLaurentPoly> {
    check_nu(inst, nu)?;
    check_size(inst.n(), s.size())?;
    expand_at(inst.total_size(), nu, |rho| {
        Ok(class_polys(inst, rho)?
            .remove(s)
            .unwrap_or_else(IntLaurentPoly::zero))
    })
}

/// [`a_q_plethysm`] for every standard tableau of size `n` and every `ν`.
pub fn a_q_plethysm_table(inst: &LLTInstance) -> BTreeMap<StandardTableau, WeightIndexedPoly> {
    let size = inst.total_size();
    let shapes = enumerate_partitions(size);
    let mut monomial: BTreeMap<StandardTableau, WeightIndexedPoly> =
        enumerate_standard_all(inst.n())
            .into_iter()
            .map(|s| {
                let mut f = WeightIndexedPoly::new();
                for rho in &shapes {
                    f.insert(rho.clone(), IntLaurentPoly::zero())
                        .expect("one size");
                }
                (s, f)
            })
            .collect();
    for rho in &shapes {
        for (s, p) in class_polys(inst, rho).expect("partition of the right size") {
            monomial
                .get_mut(&s)
                .expect("standard tableau of size n")
                .insert(rho.clone(), p)
                .expect("one size");
        }
    }
    monomial
        .into_iter()
        .map(|(s, f)| (s, schur_expand(&f).expect("one size")))
        .collect()
}

/// An `a_{S[μ^n]}^ν(q)` with a negative coefficient.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Finding {
    pub tableau: StandardTableau,
    pub nu: Partition,
    pub poly: IntLaurentPoly,
}

/// `Σ_{S: maj(S) ≡ i} a_{S[μ^n]}^ν(q)` for one `ν` and residue `i`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResidueAggregate {
    pub nu: Partition,
    pub residue: usize,
    pub poly: IntLaurentPoly,
    pub nonnegative: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NegativityReport {
    pub mu: Partition,
    pub n: usize,
    /// Number of `(S, ν)` pairs examined.
    pub checked: usize,
    pub findings: Vec<Finding>,
    pub aggregates: Vec<ResidueAggregate>,
}

impl NegativityReport {
    pub fn aggregates_nonnegative(&self) -> bool {
        self.aggregates.iter().all(|a| a.nonnegative)
    }
}

/// Every `(S, ν)` with `ℓ(ν) ≤ max_parts` whose `a_{S[μ^n]}^ν(q)` has a
/// negative coefficient, plus the residue-class sums of the same data.
pub fn negativity_scan(inst: &LLTInstance, max_parts: Option<usize>) -> NegativityReport {
    let n = inst.n();
    let table = a_q_plethysm_table(inst);
    let keep = |nu: &Partition| max_parts.is_none_or(|m| nu.len() <= m);
    let mut findings = Vec::new();
    let mut checked = 0;
    let mut sums: BTreeMap<(Partition, usize), IntLaurentPoly> = BTreeMap::new();
    for (s, row) in &table {
        let residue = maj_standard(s) % n;
        for (nu, p) in row.iter().filter(|(nu, _)| keep(nu)) {
            checked += 1;
            if p.has_negative_coefficient() {
                findings.push(Finding {
                    tableau: s.clone(),
                    nu: nu.clone(),
                    poly: p.clone(),
                });
            }
            *sums
                .entry((nu.clone(), residue))
                .or_insert_with(IntLaurentPoly::zero) += p.clone();
        }
    }
    let mut aggregates: Vec<ResidueAggregate> = sums
        .into_iter()
        .map(|((nu, residue), poly)| ResidueAggregate {
            nonnegative: !poly.has_negative_coefficient(),
            nu,
            residue,
            poly,
        })
        .collect();
    aggregates.sort_by(|a, b| b.nu.cmp(&a.nu).then(a.residue.cmp(&b.residue)));
    NegativityReport {
        mu: inst.mu().clone(),
        n,
        checked,
        findings,
        aggregates,
    }
}

/// Recomputes a finding from explicit tuples and the tableau-level `α`;
/// true when the result matches and still has a negative coefficient.
pub fn revalidate_finding(inst: &LLTInstance, finding: &Finding) -> Result<bool> {
    let d = d_min_closed(inst) as i64;
    let n = inst.n() as i64;
    let maj = maj_standard(&finding.tableau) as i64;
    let p = expand_at(inst.total_size(), &finding.nu, |rho| {
        let tuples = rs_class_tuples(&finding.tableau, inst, rho)?;
        Ok(tuples
            .iter()
            .map(|t| IntLaurentPoly::monomial(n * alpha_statistic(t) + maj + d, 1))
            .sum())
    })?;
    Ok(p == finding.poly && p.has_negative_coefficient())
}
