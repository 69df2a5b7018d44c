//! Symmetric-group character of the invariant tensors in `V(lambda)^{(x) r}`
//! and the pairing that drives the conjugate twist of its fake degree.

use super::character::{irreducible_character, Character};
use super::root_system::{RootSystem, Weight};
use super::LieCharError;
use crate::qpoly::IntPolynomial;
use crate::symfunc::{fake_degree_module, CycleTypeFunction, Partition};
use std::collections::{BTreeMap, HashMap};

/// `<2 rho, lambda>` in the coroot normalization
/// `sum over positive roots of <lambda, alpha_check>`.
///
/// Anchors: odd for the defining weight of `A1`, even for every adjoint
/// weight. The parity decides whether fake degrees are taken at the
/// conjugate shape.
pub fn two_rho_pairing(rs: &RootSystem, lambda: &Weight) -> i64 {
    rs.positive_roots()
        .iter()
        .map(|a| rs.coroot_pairing(lambda, a))
        .sum()
}

/// Character of `S(r)` acting on the invariant tensors of the `r`-th tensor
/// power, stored by cycle type, with its Schur expansion and the twist
/// parity.
#[derive(Debug, Clone)]
pub struct InvariantsCharacter {
    pub degree: usize,
    pub values: CycleTypeFunction,
    pub schur: BTreeMap<Partition, i64>,
    pub two_rho: i64,
}

impl InvariantsCharacter {
    pub fn parity_even(&self) -> bool {
        self.two_rho % 2 == 0
    }

    pub fn invariants_dimension(&self) -> i64 {
        self.values.dimension()
    }

    /// Fake degree of the invariants module, conjugating every shape when
    /// the pairing is odd.
    pub fn fake_degree(&self) -> IntPolynomial {
        fake_degree_module(&self.schur, !self.parity_even()).expect("nonnegative multiplicities")
    }

    pub fn to_json(&self) -> serde_json::Value {
        let values: Vec<serde_json::Value> = self
            .values
            .values()
            .iter()
            .map(|(mu, v)| {
                serde_json::json!({
                    "cycle_type": mu.parts(),
                    "value": v,
                })
            })
            .collect();
        let schur: Vec<serde_json::Value> = self
            .schur
            .iter()
            .map(|(p, m)| {
                serde_json::json!({
                    "partition": p.parts(),
                    "mult": m,
                })
            })
            .collect();
        serde_json::json!({
            "degree": self.degree,
            "cycle_values": values,
            "schur": schur,
            "parity": if self.parity_even() { "even" } else { "odd" },
        })
    }
}

/// Value of the invariants character at each cycle type of `S(r)`:
/// the trivial multiplicity of the product over cycle lengths `l` of the
/// Adams operation `p_l` applied to `ch V(lambda)`.
pub fn frobenius_invariants(
    rs: &RootSystem,
    lambda: &Weight,
    r: usize,
) -> Result<InvariantsCharacter, LieCharError> {
    let base = irreducible_character(rs, lambda)?;
    let dim = base.dimension() as f64;
    if r > 12 || dim.powi(r as i32) > 1e10 {
        return Err(LieCharError::BudgetExceeded(format!(
            "tensor power {r} of a {}-dimensional module",
            base.dimension()
        )));
    }

    let mut adams_cache: HashMap<usize, Character> = HashMap::new();
    let mut product_cache: HashMap<Vec<usize>, Character> = HashMap::new();
    product_cache.insert(Vec::new(), Character::unit(rs.clone()));

    fn product_for(
        parts: &[usize],
        base: &Character,
        adams_cache: &mut HashMap<usize, Character>,
        product_cache: &mut HashMap<Vec<usize>, Character>,
    ) -> Result<Character, LieCharError> {
        if let Some(c) = product_cache.get(parts) {
            return Ok(c.clone());
        }
        let (head, tail) = parts.split_at(parts.len() - 1);
        let prefix = product_for(head, base, adams_cache, product_cache)?;
        let factor = adams_cache
            .entry(tail[0])
            .or_insert_with(|| base.adams(tail[0]))
            .clone();
        let prod = prefix.mul(&factor)?;
        product_cache.insert(parts.to_vec(), prod.clone());
        Ok(prod)
    }

    let mut values = BTreeMap::new();
    for mu in crate::symfunc::partitions_of(r) {
        let chi = product_for(mu.parts(), &base, &mut adams_cache, &mut product_cache)?;
        values.insert(mu, chi.trivial_multiplicity()?);
    }
    let values = CycleTypeFunction::new(r, values).expect("tabulated over all partitions");
    let schur = values
        .to_schur()
        .map_err(|e| LieCharError::BadExpansion(e.to_string()))?;
    for (p, &m) in &schur {
        if m < 0 {
            return Err(LieCharError::NegativeInvariantsMultiplicity {
                partition: p.parts().to_vec(),
                mult: m,
            });
        }
    }
    Ok(InvariantsCharacter {
        degree: r,
        values,
        schur,
        two_rho: two_rho_pairing(rs, lambda),
    })
}
