//! Canonical JSON encodings for every file format the tools read and write.
//!
//! All formats carry `"format_version": 1`. Set literals are arrays of
//! alternative names; on output the names appear in universe declaration
//! order, and parsers reject unknown names. Collections are emitted in
//! canonical set order and relation pairs sorted lexicographically, so equal
//! values serialize to byte-identical documents.

use std::collections::{BTreeMap, BTreeSet};

use serde_json::{json, Map, Value};
use thiserror::Error;

use crate::argumentation::{ChoiceExtensionSemantics, ExtensionSemantics, RealizableSpec};
use crate::axioms::AxiomReport;
use crate::change::ChangeOperator;
use crate::oracle::SweepSummary;
use crate::relations::Relation;
use crate::structures::{
    AlternativeSet, ChoiceFunctionTable, LinearSetOrder, RestrictedChoiceStructure, StructureError,
    Universe,
};
use crate::synthesis::SynthesisTrace;

pub const FORMAT_VERSION: u64 = 1;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FormatError {
    #[error("invalid JSON: {0}")]
    Parse(String),
    #[error("missing field `{0}`")]
    MissingField(&'static str),
    #[error("field `{0}` has the wrong type")]
    WrongType(&'static str),
    #[error("unsupported format_version {0}")]
    UnsupportedVersion(u64),
    #[error(transparent)]
    Structure(#[from] StructureError),
}

impl FormatError {
    pub fn kind(&self) -> &'static str {
        match self {
            FormatError::Parse(_) => "invalid_json",
            FormatError::MissingField(_) => "missing_field",
            FormatError::WrongType(_) => "wrong_type",
            FormatError::UnsupportedVersion(_) => "unsupported_format_version",
            FormatError::Structure(e) => e.kind(),
        }
    }
}

fn parse_root(text: &str) -> Result<Map<String, Value>, FormatError> {
    let value: Value = serde_json::from_str(text).map_err(|e| FormatError::Parse(e.to_string()))?;
    let Value::Object(map) = value else {
        return Err(FormatError::WrongType("<root>"));
    };
    let version = map
        .get("format_version")
        .ok_or(FormatError::MissingField("format_version"))?
        .as_u64()
        .ok_or(FormatError::WrongType("format_version"))?;
    if version != FORMAT_VERSION {
        return Err(FormatError::UnsupportedVersion(version));
    }
    Ok(map)
}

fn field<'a>(map: &'a Map<String, Value>, name: &'static str) -> Result<&'a Value, FormatError> {
    map.get(name).ok_or(FormatError::MissingField(name))
}

fn as_array<'a>(value: &'a Value, name: &'static str) -> Result<&'a Vec<Value>, FormatError> {
    value.as_array().ok_or(FormatError::WrongType(name))
}

fn string_list(value: &Value, name: &'static str) -> Result<Vec<String>, FormatError> {
    as_array(value, name)?
        .iter()
        .map(|v| {
            v.as_str()
                .map(str::to_string)
                .ok_or(FormatError::WrongType(name))
        })
        .collect()
}

pub fn set_to_json(universe: &Universe, set: AlternativeSet) -> Value {
    Value::Array(
        universe
            .set_names(set)
            .into_iter()
            .map(|n| Value::String(n.to_string()))
            .collect(),
    )
}

pub fn set_from_json(
    universe: &Universe,
    value: &Value,
    name: &'static str,
) -> Result<AlternativeSet, FormatError> {
    let names = string_list(value, name)?;
    Ok(universe.set_of(names.iter().map(String::as_str))?)
}

fn sets_to_json<'a, I: IntoIterator<Item = &'a AlternativeSet>>(
    universe: &Universe,
    sets: I,
) -> Value {
    Value::Array(
        sets.into_iter()
            .map(|&s| set_to_json(universe, s))
            .collect(),
    )
}

fn sets_from_json(
    universe: &Universe,
    value: &Value,
    name: &'static str,
) -> Result<Vec<AlternativeSet>, FormatError> {
    as_array(value, name)?
        .iter()
        .map(|v| set_from_json(universe, v, name))
        .collect()
}

// --- structure ---------------------------------------------------------

pub fn structure_to_json(structure: &RestrictedChoiceStructure) -> Value {
    let u = structure.universe();
    json!({
        "format_version": FORMAT_VERSION,
        "alternatives": u.names(),
        "domain": sets_to_json(u, structure.domain()),
        "realizable": sets_to_json(u, structure.realizable()),
    })
}

pub fn structure_from_json(text: &str) -> Result<RestrictedChoiceStructure, FormatError> {
    let map = parse_root(text)?;
    let names = string_list(field(&map, "alternatives")?, "alternatives")?;
    let universe = Universe::new(names)?;
    let domain = sets_from_json(&universe, field(&map, "domain")?, "domain")?;
    let realizable = sets_from_json(&universe, field(&map, "realizable")?, "realizable")?;
    Ok(RestrictedChoiceStructure::new(
        universe, domain, realizable,
    )?)
}

// --- linear order ------------------------------------------------------

pub fn order_to_json(universe: &Universe, order: &LinearSetOrder) -> Value {
    json!({
        "format_version": FORMAT_VERSION,
        "carrier_chain": Value::Array(
            order.chain().iter().map(|&s| set_to_json(universe, s)).collect()
        ),
    })
}

pub fn order_from_json(universe: &Universe, text: &str) -> Result<LinearSetOrder, FormatError> {
    let map = parse_root(text)?;
    let chain = sets_from_json(universe, field(&map, "carrier_chain")?, "carrier_chain")?;
    Ok(LinearSetOrder::from_chain(chain)?)
}

// --- choice table ------------------------------------------------------

pub fn table_to_json(table: &ChoiceFunctionTable) -> Value {
    let u = table.structure().universe();
    let entries: Vec<Value> = table
        .entries()
        .map(|(s, v)| json!({"in": set_to_json(u, s), "out": set_to_json(u, v)}))
        .collect();
    json!({
        "format_version": FORMAT_VERSION,
        "fallback": set_to_json(u, table.fallback()),
        "map": entries,
    })
}

pub fn table_from_json(
    structure: &RestrictedChoiceStructure,
    text: &str,
) -> Result<ChoiceFunctionTable, FormatError> {
    let map = parse_root(text)?;
    let u = structure.universe();
    let fallback = set_from_json(u, field(&map, "fallback")?, "fallback")?;
    let mut assignments = BTreeMap::new();
    for entry in as_array(field(&map, "map")?, "map")? {
        let Value::Object(obj) = entry else {
            return Err(FormatError::WrongType("map"));
        };
        let input = set_from_json(u, field(obj, "in")?, "in")?;
        let output = set_from_json(u, field(obj, "out")?, "out")?;
        if assignments.insert(input, output).is_some() {
            return Err(FormatError::Parse("duplicate table input".into()));
        }
    }
    Ok(ChoiceFunctionTable::new(
        structure.clone(),
        fallback,
        assignments,
    )?)
}

// --- relation ----------------------------------------------------------

pub fn relation_to_json(universe: &Universe, relation: &Relation) -> Value {
    json!({
        "carrier": Value::Array(
            relation.carrier().elements().iter().map(|&s| set_to_json(universe, s)).collect()
        ),
        "pairs": Value::Array(
            relation.pairs().iter().map(|&(i, j)| json!([i, j])).collect()
        ),
    })
}

// --- axiom reports -----------------------------------------------------

pub fn report_to_json(universe: &Universe, report: &AxiomReport) -> Value {
    json!({
        "axiom": report.axiom.to_string(),
        "holds": report.holds,
        "witness": sets_to_json(universe, &report.witness),
    })
}

pub fn reports_to_json(universe: &Universe, reports: &[AxiomReport]) -> Value {
    json!({
        "format_version": FORMAT_VERSION,
        "reports": Value::Array(reports.iter().map(|r| report_to_json(universe, r)).collect()),
    })
}

// --- synthesis trace ---------------------------------------------------

pub fn trace_to_json(universe: &Universe, trace: &SynthesisTrace) -> Value {
    json!({
        "image": sets_to_json(universe, &trace.image),
        "encoded": relation_to_json(universe, &trace.encoded),
        "extended": relation_to_json(universe, &trace.extended),
        "linear_carrier": relation_to_json(universe, &trace.linear_carrier),
        "final": order_to_json(universe, &trace.final_order),
    })
}

// --- change operator ---------------------------------------------------

pub fn operator_to_json(op: &ChangeOperator) -> Result<Value, FormatError> {
    let u = op.universe();
    let mut family = Vec::new();
    for (k, entry) in op.family() {
        let order = entry.order().ok_or(FormatError::WrongType("family"))?;
        family.push(json!({
            "k": set_to_json(u, k),
            "realizable": sets_to_json(u, entry.realizable()),
            "chain": Value::Array(
                order.chain().iter().map(|&s| set_to_json(u, s)).collect()
            ),
        }));
    }
    Ok(json!({
        "format_version": FORMAT_VERSION,
        "alternatives": u.names(),
        "domain": sets_to_json(u, op.domain()),
        "family": family,
    }))
}

pub fn operator_from_json(text: &str) -> Result<ChangeOperator, FormatError> {
    let map = parse_root(text)?;
    let names = string_list(field(&map, "alternatives")?, "alternatives")?;
    let universe = Universe::new(names)?;
    let domain: BTreeSet<AlternativeSet> =
        sets_from_json(&universe, field(&map, "domain")?, "domain")?
            .into_iter()
            .collect();
    let mut family = Vec::new();
    for entry in as_array(field(&map, "family")?, "family")? {
        let Value::Object(obj) = entry else {
            return Err(FormatError::WrongType("family"));
        };
        let k = set_from_json(&universe, field(obj, "k")?, "k")?;
        let realizable: BTreeSet<AlternativeSet> =
            sets_from_json(&universe, field(obj, "realizable")?, "realizable")?
                .into_iter()
                .collect();
        let chain = sets_from_json(&universe, field(obj, "chain")?, "chain")?;
        let order = LinearSetOrder::from_chain(chain)?;
        family.push((k, realizable, order));
    }
    ChangeOperator::from_orders(universe, domain, family)
        .map_err(|e| FormatError::Parse(e.to_string()))
}

// --- semantics configuration -------------------------------------------

pub fn semantics_from_json(
    universe: &Universe,
    text: &str,
) -> Result<ChoiceExtensionSemantics, FormatError> {
    let map = parse_root(text)?;
    let realizable = match field(&map, "realizable")? {
        Value::String(s) => match s.as_str() {
            "conflict_free" => RealizableSpec::Generated(ExtensionSemantics::ConflictFree),
            "admissible" => RealizableSpec::Generated(ExtensionSemantics::Admissible),
            "stable" => RealizableSpec::Generated(ExtensionSemantics::Stable),
            _ => return Err(FormatError::WrongType("realizable")),
        },
        Value::Object(obj) => {
            let sets = sets_from_json(universe, field(obj, "explicit")?, "explicit")?;
            RealizableSpec::Explicit(sets.into_iter().collect())
        }
        _ => return Err(FormatError::WrongType("realizable")),
    };
    let fallback = set_from_json(universe, field(&map, "fallback")?, "fallback")?;
    let chain = match map.get("chain") {
        None | Some(Value::Null) => None,
        Some(v) => Some(sets_from_json(universe, v, "chain")?),
    };
    Ok(ChoiceExtensionSemantics::new(realizable, fallback, chain))
}

// --- oracle summary ----------------------------------------------------

pub fn sweep_summary_to_json(summary: &SweepSummary) -> Value {
    json!({
        "format_version": FORMAT_VERSION,
        "tables_checked": summary.tables_checked,
        "representable": summary.representable,
        "equivalence_violations": summary.equivalence_violations,
    })
}

/// The machine-readable error object every tool prints on domain errors.
pub fn error_to_json(kind: &str, detail: &str) -> Value {
    json!({"error": {"kind": kind, "detail": detail}})
}
