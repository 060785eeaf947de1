//! Constructive synthesis of a witnessing linear order from a choice table.
//!
//! Any table satisfying SS0–SS4, SS5E and SS6E is induced by some
//! fallback-minimal smooth linear order over the realizable family. The
//! pipeline that recovers one is fully deterministic:
//!
//! 1. restrict attention to the image of the table (the sets actually
//!    chosen); under SS6E this is exactly the set of fixed points;
//! 2. [`encode`] the revealed preferences: `E1 ⊴ E2` when `E1` is the
//!    fallback or some input covering both resolves to `E1`;
//! 3. extend `⊴` to a total preorder with
//!    [`Relation::suzumura_extension`](crate::relations::Relation::suzumura_extension)
//!    (the encoding is consistent whenever the postulates hold);
//! 4. [`Relation::linearize`](crate::relations::Relation::linearize) the
//!    preorder, breaking ties by canonical carrier order;
//! 5. expand from the image to the full realizable family: image elements
//!    keep their order, everything else follows in canonical set order.
//!
//! Each stage preserves the per-input minima, so the final order reproduces
//! the table exactly; [`synthesize`] re-verifies this and every intermediate
//! compatibility condition, failing loudly on any internal mismatch. The
//! stages are retained in the returned [`SynthesisTrace`] so that each
//! preservation step can be asserted independently.

use std::collections::BTreeSet;

use thiserror::Error;

use crate::axioms::{self, AxiomReport};
use crate::relations::{Carrier, PropertyName, Relation};
use crate::structures::{
    table_from_order, AlternativeSet, ChoiceFunctionTable, LinearSetOrder,
    RestrictedChoiceStructure,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SynthesisError {
    #[error("table violates {}", .0.axiom)]
    AxiomViolation(AxiomReport),
    #[error("input family is not union-closed")]
    NotUnionClosed,
    #[error("fallback is not a realizable set")]
    FallbackNotRealizable,
    #[error("internal incompatibility at stage `{0}`: this is a bug")]
    InternalIncompatibility(&'static str),
}

impl SynthesisError {
    pub fn kind(&self) -> &'static str {
        match self {
            SynthesisError::AxiomViolation(_) => "axiom_violation",
            SynthesisError::NotUnionClosed => "not_union_closed",
            SynthesisError::FallbackNotRealizable => "fallback_not_realizable",
            SynthesisError::InternalIncompatibility(_) => "internal_incompatibility",
        }
    }
}

/// All intermediate stages of a successful synthesis.
#[derive(Clone, Debug)]
pub struct SynthesisTrace {
    /// The chosen sets, in canonical order (the carrier of the next three).
    pub image: Vec<AlternativeSet>,
    /// The revealed-preference encoding on the image.
    pub encoded: Relation,
    /// Its consistent extension to a total preorder.
    pub extended: Relation,
    /// The linearized preorder, still on the image.
    pub linear_carrier: Relation,
    /// The final order on the full realizable family.
    pub final_order: LinearSetOrder,
}

/// The sets actually chosen by the table, in canonical order.
///
/// When SS6E holds this equals the fixed points `{E | table(E) = E}`.
pub fn image(table: &ChoiceFunctionTable) -> Vec<AlternativeSet> {
    table.image()
}

/// The revealed-preference encoding `⊴` on the image of the table:
/// `E1 ⊴ E2` iff `E1` is the fallback, or some domain input covering
/// `E1 ∪ E2` resolves to `E1`.
pub fn encode(table: &ChoiceFunctionTable) -> Relation {
    let image = table.image();
    let carrier = Carrier::new(image.clone()).expect("image sets are distinct");
    let k = table.fallback();
    let mut pairs = BTreeSet::new();
    for (i, &e1) in image.iter().enumerate() {
        for (j, &e2) in image.iter().enumerate() {
            let related = e1 == k
                || table
                    .entries()
                    .any(|(s, v)| v == e1 && e1.union(e2).is_subset_of(s));
            if related {
                pairs.insert((i, j));
            }
        }
    }
    Relation::new(carrier, pairs).expect("indices index the image")
}

/// The union-closed fast path: `E1 ⊴ E2` iff the table resolves `E1 ∪ E2`
/// to `E1`. Only sound when the input family is union-closed; on other
/// structures the union of two chosen sets need not be an input at all.
pub fn encode_union_closed(table: &ChoiceFunctionTable) -> Result<Relation, SynthesisError> {
    if !table.structure().is_union_closed() {
        return Err(SynthesisError::NotUnionClosed);
    }
    let image = table.image();
    let carrier = Carrier::new(image.clone()).expect("image sets are distinct");
    let mut pairs = BTreeSet::new();
    for (i, &e1) in image.iter().enumerate() {
        for (j, &e2) in image.iter().enumerate() {
            if table.value(e1.union(e2)) == Some(e1) {
                pairs.insert((i, j));
            }
        }
    }
    Ok(Relation::new(carrier, pairs).expect("indices index the image"))
}

/// Whether `rel` is compatible with the table: reflexive, antisymmetric,
/// consistent, smooth for the table's structure, and its per-input minima
/// reproduce the table through the evaluation rule (unique minimum when one
/// exists, fallback otherwise).
pub fn verify_compatible(rel: &Relation, table: &ChoiceFunctionTable) -> bool {
    if !rel.has_property(PropertyName::Reflexive)
        || !rel.has_property(PropertyName::Antisymmetric)
        || !rel.has_property(PropertyName::Consistent)
    {
        return false;
    }
    let k = table.fallback();
    for (s, v) in table.entries() {
        let candidates: BTreeSet<usize> = (0..rel.carrier().len())
            .filter(|&i| rel.carrier().element(i).is_subset_of(s))
            .collect();
        let minima = rel.min_elements(&candidates);
        // smoothness: inputs with candidates must have minima
        if !candidates.is_empty() && minima.is_empty() {
            return false;
        }
        let expected = if minima.len() == 1 {
            rel.carrier().element(*minima.iter().next().unwrap())
        } else {
            k
        };
        if v != expected {
            return false;
        }
    }
    true
}

fn minima_of_input(rel: &Relation, s: AlternativeSet) -> BTreeSet<usize> {
    let candidates: BTreeSet<usize> = (0..rel.carrier().len())
        .filter(|&i| rel.carrier().element(i).is_subset_of(s))
        .collect();
    rel.min_elements(&candidates)
}

/// Runs the whole pipeline on `table`.
///
/// The prerequisite postulates are checked up front; the first violation is
/// returned with its witness. On success the final order is a smooth,
/// fallback-minimal linear order over the full realizable family whose
/// tabulation equals `table` exactly.
pub fn synthesize(table: &ChoiceFunctionTable) -> Result<SynthesisTrace, SynthesisError> {
    for report in axioms::general_suite(table) {
        if !report.holds {
            return Err(SynthesisError::AxiomViolation(report));
        }
    }

    let image = table.image();
    let encoded = encode(table);
    if !verify_compatible(&encoded, table) {
        return Err(SynthesisError::InternalIncompatibility("encode"));
    }

    let extended = encoded
        .suzumura_extension()
        .map_err(|_| SynthesisError::InternalIncompatibility("suzumura_extension"))?;
    let linear_carrier = extended
        .linearize()
        .map_err(|_| SynthesisError::InternalIncompatibility("linearize"))?;
    if !verify_compatible(&linear_carrier, table) {
        return Err(SynthesisError::InternalIncompatibility("linear_carrier"));
    }

    // expansion: image elements in linearized order, then the unchosen
    // realizable sets in canonical order, strictly above
    let carrier_order = LinearSetOrder::from_relation(&linear_carrier)
        .map_err(|_| SynthesisError::InternalIncompatibility("carrier_chain"))?;
    let image_set: BTreeSet<AlternativeSet> = image.iter().copied().collect();
    let mut chain: Vec<AlternativeSet> = carrier_order.chain().to_vec();
    chain.extend(
        table
            .structure()
            .realizable()
            .iter()
            .copied()
            .filter(|e| !image_set.contains(e)),
    );
    let final_order = LinearSetOrder::from_chain(chain)
        .map_err(|_| SynthesisError::InternalIncompatibility("expansion"))?;
    if !final_order.is_k_minimal(table.fallback()) {
        return Err(SynthesisError::InternalIncompatibility(
            "fallback_minimality",
        ));
    }

    let reproduced = table_from_order(&final_order, table.fallback(), table.structure())
        .map_err(|_| SynthesisError::InternalIncompatibility("tabulation"))?;
    if &reproduced != table {
        return Err(SynthesisError::InternalIncompatibility("round_trip"));
    }

    Ok(SynthesisTrace {
        image,
        encoded,
        extended,
        linear_carrier,
        final_order,
    })
}

impl SynthesisTrace {
    /// Per-input minima agree across the encoding, the extension and the
    /// linearization: the preservation argument behind the pipeline,
    /// re-checkable on any trace.
    pub fn minima_preserved(&self, table: &ChoiceFunctionTable) -> bool {
        table.structure().domain().iter().all(|&s| {
            let a = minima_of_input(&self.encoded, s);
            let b = minima_of_input(&self.extended, s);
            let c = minima_of_input(&self.linear_carrier, s);
            a == b && b == c
        })
    }
}

/// The existence construction: the canonical order on the realizable family
/// with `k` and the canonical minimum mutually substituted.
///
/// The result is always a `k`-minimal smooth linear order on the whole
/// realizable family, so its tabulation is a choice function with fallback
/// `k` for any structure sharing that family.
pub fn existence_order(
    structure: &RestrictedChoiceStructure,
    k: AlternativeSet,
) -> Result<LinearSetOrder, SynthesisError> {
    if !structure.realizable().contains(&k) {
        return Err(SynthesisError::FallbackNotRealizable);
    }
    let mut chain: Vec<AlternativeSet> = structure.realizable().iter().copied().collect();
    let pos = chain.iter().position(|&e| e == k).expect("k is realizable");
    chain.swap(0, pos);
    Ok(LinearSetOrder::from_chain(chain).expect("realizable sets are distinct"))
}
