//! Choice-based theory change over a union-closed input family.
//!
//! A change operator maps a current set `K` and an input `S` to a new set
//! `K ⋄ S`. It is choice-based when every slice `K ⋄ ·` is a choice function
//! for some restricted choice structure whose realizable family contains `K`,
//! and linear when each slice comes from a `K`-minimal smooth linear order.
//! [`ChangeOperator::lcr_certify`] decides linearity through the LCR
//! postulates; [`ChangeOperator::reconstruct`] performs the converse
//! direction explicitly, recovering a witnessing order per slice from the
//! slice's own image.

use std::collections::{BTreeMap, BTreeSet};

use thiserror::Error;

use crate::axioms::AxiomReport;
use crate::structures::{
    AlternativeSet, ChoiceFunctionTable, LinearSetOrder, RestrictedChoiceStructure, StructureError,
    Universe,
};
use crate::synthesis::{self, SynthesisError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ChangeError {
    #[error("domain must be non-empty")]
    EmptyDomain,
    #[error("domain is not union-closed")]
    NotUnionClosed,
    #[error("domain contains a set outside the universe")]
    OutsideUniverse,
    #[error("family is invalid: {0}")]
    FamilyInvalid(String),
    #[error("set is outside the operator domain")]
    OutOfDomain,
    #[error(transparent)]
    Structure(#[from] StructureError),
    #[error(transparent)]
    Synthesis(#[from] SynthesisError),
}

impl ChangeError {
    pub fn kind(&self) -> &'static str {
        match self {
            ChangeError::EmptyDomain => "empty_domain",
            ChangeError::NotUnionClosed => "not_union_closed",
            ChangeError::OutsideUniverse => "outside_universe",
            ChangeError::FamilyInvalid(_) => "family_invalid",
            ChangeError::OutOfDomain => "out_of_domain",
            ChangeError::Structure(e) => e.kind(),
            ChangeError::Synthesis(e) => e.kind(),
        }
    }
}

/// One slice of the operator: the realizable family for `K`, the tabulated
/// values of `K ⋄ ·`, and the generating order when the slice was built from
/// one (mutating a value discards it).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilyEntry {
    realizable: BTreeSet<AlternativeSet>,
    values: BTreeMap<AlternativeSet, AlternativeSet>,
    order: Option<LinearSetOrder>,
}

impl FamilyEntry {
    pub fn realizable(&self) -> &BTreeSet<AlternativeSet> {
        &self.realizable
    }

    pub fn order(&self) -> Option<&LinearSetOrder> {
        self.order.as_ref()
    }
}

/// A change operator over a union-closed domain, stored extensionally with
/// one slice per current set `K`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChangeOperator {
    universe: Universe,
    domain: BTreeSet<AlternativeSet>,
    family: BTreeMap<AlternativeSet, FamilyEntry>,
}

impl ChangeOperator {
    /// Builds the operator from per-`K` orders: each slice is tabulated from
    /// its order with `K` as fallback. Every domain member needs an entry,
    /// every entry's realizable family must contain its `K` and lie inside
    /// the domain, and every order must range exactly over that family.
    pub fn from_orders<I>(
        universe: Universe,
        domain: BTreeSet<AlternativeSet>,
        family: I,
    ) -> Result<Self, ChangeError>
    where
        I: IntoIterator<Item = (AlternativeSet, BTreeSet<AlternativeSet>, LinearSetOrder)>,
    {
        let domain = validate_domain(&universe, domain)?;
        let mut slices = BTreeMap::new();
        for (k, realizable, order) in family {
            if !domain.contains(&k) {
                return Err(ChangeError::FamilyInvalid(
                    "family entry for a set outside the domain".into(),
                ));
            }
            if !realizable.contains(&k) {
                return Err(ChangeError::FamilyInvalid(
                    "realizable family does not contain its own K".into(),
                ));
            }
            if !realizable.is_subset(&domain) {
                return Err(ChangeError::FamilyInvalid(
                    "realizable family is not a subset of the domain".into(),
                ));
            }
            if order.carrier_sets() != realizable {
                return Err(ChangeError::FamilyInvalid(
                    "order carrier differs from the realizable family".into(),
                ));
            }
            let values = domain.iter().map(|&s| (s, order.evaluate(k, s))).collect();
            let entry = FamilyEntry {
                realizable,
                values,
                order: Some(order),
            };
            if slices.insert(k, entry).is_some() {
                return Err(ChangeError::FamilyInvalid("duplicate family entry".into()));
            }
        }
        for k in &domain {
            if !slices.contains_key(k) {
                return Err(ChangeError::FamilyInvalid(format!(
                    "no family entry for a domain member (missing {:?})",
                    k
                )));
            }
        }
        Ok(ChangeOperator {
            universe,
            domain,
            family: slices,
        })
    }

    /// Fits a linear operator to a realizable family: every slice gets the
    /// existence order on its family (canonical order with `K` swapped to
    /// the front), so the result always satisfies LCR1–LCR6.
    pub fn fit_family<I>(
        universe: Universe,
        domain: BTreeSet<AlternativeSet>,
        realizable_family: I,
    ) -> Result<Self, ChangeError>
    where
        I: IntoIterator<Item = (AlternativeSet, BTreeSet<AlternativeSet>)>,
    {
        let domain = validate_domain(&universe, domain)?;
        let mut with_orders = Vec::new();
        for (k, realizable) in realizable_family {
            if !realizable.contains(&k) {
                return Err(ChangeError::FamilyInvalid(
                    "realizable family does not contain its own K".into(),
                ));
            }
            if !realizable.is_subset(&domain) {
                return Err(ChangeError::FamilyInvalid(
                    "realizable family is not a subset of the domain".into(),
                ));
            }
            let structure = RestrictedChoiceStructure::new(
                universe.clone(),
                domain.iter().copied(),
                realizable.iter().copied(),
            )?;
            let order = synthesis::existence_order(&structure, k)?;
            with_orders.push((k, realizable, order));
        }
        ChangeOperator::from_orders(universe, domain, with_orders)
    }

    /// The trivial fit where every slice may only return its own `K`.
    pub fn constant(
        universe: Universe,
        domain: BTreeSet<AlternativeSet>,
    ) -> Result<Self, ChangeError> {
        let family: Vec<(AlternativeSet, BTreeSet<AlternativeSet>)> = domain
            .iter()
            .map(|&k| (k, [k].into_iter().collect()))
            .collect();
        ChangeOperator::fit_family(universe, domain, family)
    }

    pub fn universe(&self) -> &Universe {
        &self.universe
    }

    pub fn domain(&self) -> &BTreeSet<AlternativeSet> {
        &self.domain
    }

    pub fn family(&self) -> impl Iterator<Item = (AlternativeSet, &FamilyEntry)> {
        self.family.iter().map(|(k, e)| (*k, e))
    }

    /// `K ⋄ S`.
    pub fn revise(
        &self,
        k: AlternativeSet,
        s: AlternativeSet,
    ) -> Result<AlternativeSet, ChangeError> {
        if !self.domain.contains(&s) {
            return Err(ChangeError::OutOfDomain);
        }
        let entry = self.family.get(&k).ok_or(ChangeError::OutOfDomain)?;
        Ok(entry.values[&s])
    }

    /// Overwrites one tabulated value; the slice's generating order is
    /// discarded since it no longer matches. The new value must be a domain
    /// member. Intended for constructing postulate-violating operators.
    pub fn set_value(
        &mut self,
        k: AlternativeSet,
        s: AlternativeSet,
        value: AlternativeSet,
    ) -> Result<(), ChangeError> {
        if !self.domain.contains(&s) || !self.domain.contains(&value) {
            return Err(ChangeError::OutOfDomain);
        }
        let entry = self.family.get_mut(&k).ok_or(ChangeError::OutOfDomain)?;
        entry.values.insert(s, value);
        entry.realizable.insert(value);
        entry.order = None;
        Ok(())
    }

    /// The slice `K ⋄ ·` as a choice table over `⟨A, S, image ∪ {K}⟩` with
    /// fallback `K`; this is the structure used by the LCR checks and by the
    /// converse reconstruction.
    pub fn slice_table(&self, k: AlternativeSet) -> Result<ChoiceFunctionTable, ChangeError> {
        let entry = self.family.get(&k).ok_or(ChangeError::OutOfDomain)?;
        let mut realizable: BTreeSet<AlternativeSet> = entry.values.values().copied().collect();
        realizable.insert(k);
        let structure = RestrictedChoiceStructure::new(
            self.universe.clone(),
            self.domain.iter().copied(),
            realizable,
        )?;
        Ok(ChoiceFunctionTable::new(
            structure,
            k,
            entry.values.clone(),
        )?)
    }

    /// Runs LCR1–LCR6; the operator is linear choice-based exactly when all
    /// six hold. The slice tables are built once and swept per postulate, so
    /// each report carries the first violating `K` in canonical order,
    /// exactly as [`check_lcr`](crate::axioms::check_lcr) would find it.
    pub fn lcr_certify(&self) -> Vec<AxiomReport> {
        let slices: Vec<(AlternativeSet, ChoiceFunctionTable)> = self
            .domain
            .iter()
            .map(|&k| (k, self.slice_table(k).expect("operator domains are closed")))
            .collect();
        (1..=6)
            .map(|i| {
                let id = crate::axioms::AxiomId::Lcr(i);
                for (k, slice) in &slices {
                    let report = crate::axioms::check_table_as(slice, id);
                    if !report.holds {
                        let mut witness = Vec::with_capacity(report.witness.len() + 1);
                        witness.push(*k);
                        witness.extend(report.witness);
                        return AxiomReport {
                            axiom: id,
                            holds: false,
                            witness,
                        };
                    }
                }
                AxiomReport {
                    axiom: id,
                    holds: true,
                    witness: Vec::new(),
                }
            })
            .collect()
    }

    /// The converse direction of the LCR characterization: for every `K`,
    /// takes the slice's image as its realizable family and synthesizes a
    /// witnessing `K`-minimal linear order. The reconstructed operator
    /// tabulates identically to `self`.
    pub fn reconstruct(&self) -> Result<ChangeOperator, ChangeError> {
        let mut family = Vec::new();
        for &k in &self.domain {
            let slice = self.slice_table(k)?;
            let trace = synthesis::synthesize(&slice)?;
            let realizable = trace.final_order.carrier_sets();
            family.push((k, realizable, trace.final_order));
        }
        ChangeOperator::from_orders(self.universe.clone(), self.domain.clone(), family)
    }
}

fn validate_domain(
    universe: &Universe,
    domain: BTreeSet<AlternativeSet>,
) -> Result<BTreeSet<AlternativeSet>, ChangeError> {
    if domain.is_empty() {
        return Err(ChangeError::EmptyDomain);
    }
    if domain.iter().any(|&s| !universe.admits(s)) {
        return Err(ChangeError::OutsideUniverse);
    }
    for &s1 in &domain {
        for &s2 in &domain {
            if !domain.contains(&s1.union(s2)) {
                return Err(ChangeError::NotUnionClosed);
            }
        }
    }
    Ok(domain)
}
