//! Restricted choice structures, linear set orders, and choice tables.
//!
//! The currency of every operation is the [`AlternativeSet`]: a subset of a
//! declared universe of at most [`MAX_UNIVERSE`] named alternatives, stored as
//! a machine word so that exhaustive desk-scale enumeration stays cheap. A
//! [`RestrictedChoiceStructure`] fixes the input family `S` and the realizable
//! family `E ⊆ S`; a [`LinearSetOrder`] ranks realizable sets from most to
//! least preferred; and a [`ChoiceFunctionTable`] is an extensional map from
//! inputs to outputs with a designated fallback.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use thiserror::Error;

use crate::relations::{Carrier, Relation};

/// Largest supported universe so that membership vectors fit one `u64`.
pub const MAX_UNIVERSE: usize = 63;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum StructureError {
    #[error("universe has {0} alternatives, maximum is {MAX_UNIVERSE}")]
    UniverseTooLarge(usize),
    #[error("duplicate alternative name `{0}`")]
    DuplicateAlternative(String),
    #[error("unknown alternative name `{0}`")]
    UnknownAlternative(String),
    #[error("set uses positions outside the declared universe")]
    OutsideUniverse,
    #[error("domain must be non-empty")]
    EmptyDomain,
    #[error("realizable family must be non-empty")]
    EmptyRealizable,
    #[error("realizable family must be a subset of the domain")]
    RealizableNotInDomain,
    #[error("relation is not a linear order")]
    NotLinearOrder,
    #[error("chain contains duplicate sets")]
    DuplicateChainElement,
    #[error("order carrier is not a subset of the realizable family")]
    CarrierNotRealizable,
    #[error("fallback is not a realizable set")]
    FallbackNotRealizable,
    #[error("table is not defined for every domain input")]
    TableNotTotal,
    #[error("table maps an input to a non-realizable set")]
    TableValueNotRealizable,
    #[error("table has an entry for a set outside the domain")]
    TableInputOutsideDomain,
}

impl StructureError {
    pub fn kind(&self) -> &'static str {
        match self {
            StructureError::UniverseTooLarge(_) => "universe_too_large",
            StructureError::DuplicateAlternative(_) => "duplicate_alternative",
            StructureError::UnknownAlternative(_) => "unknown_alternative",
            StructureError::OutsideUniverse => "outside_universe",
            StructureError::EmptyDomain => "empty_domain",
            StructureError::EmptyRealizable => "empty_realizable",
            StructureError::RealizableNotInDomain => "realizable_not_in_domain",
            StructureError::NotLinearOrder => "not_linear_order",
            StructureError::DuplicateChainElement => "duplicate_chain_element",
            StructureError::CarrierNotRealizable => "carrier_not_realizable",
            StructureError::FallbackNotRealizable => "fallback_not_realizable",
            StructureError::TableNotTotal => "table_not_total",
            StructureError::TableValueNotRealizable => "table_value_not_realizable",
            StructureError::TableInputOutsideDomain => "table_input_outside_domain",
        }
    }
}

/// A subset of the alternative universe, one bit per alternative.
///
/// Ordering is the canonical set order used everywhere a deterministic
/// tie-break is needed: the sorted lists of member positions are compared
/// lexicographically.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct AlternativeSet {
    bits: u64,
}

impl AlternativeSet {
    pub const EMPTY: AlternativeSet = AlternativeSet { bits: 0 };

    pub fn from_bits(bits: u64) -> Self {
        AlternativeSet { bits }
    }

    pub fn singleton(position: usize) -> Self {
        debug_assert!(position < 64);
        AlternativeSet {
            bits: 1 << position,
        }
    }

    pub fn from_positions<I: IntoIterator<Item = usize>>(positions: I) -> Self {
        let mut bits = 0u64;
        for p in positions {
            debug_assert!(p < 64);
            bits |= 1 << p;
        }
        AlternativeSet { bits }
    }

    pub fn bits(self) -> u64 {
        self.bits
    }

    pub fn contains(self, position: usize) -> bool {
        position < 64 && self.bits & (1 << position) != 0
    }

    pub fn union(self, other: AlternativeSet) -> AlternativeSet {
        AlternativeSet {
            bits: self.bits | other.bits,
        }
    }

    pub fn intersection(self, other: AlternativeSet) -> AlternativeSet {
        AlternativeSet {
            bits: self.bits & other.bits,
        }
    }

    pub fn difference(self, other: AlternativeSet) -> AlternativeSet {
        AlternativeSet {
            bits: self.bits & !other.bits,
        }
    }

    pub fn is_subset_of(self, other: AlternativeSet) -> bool {
        self.bits & !other.bits == 0
    }

    pub fn is_empty(self) -> bool {
        self.bits == 0
    }

    pub fn len(self) -> usize {
        self.bits.count_ones() as usize
    }

    /// Member positions in increasing order.
    pub fn positions(self) -> Positions {
        Positions { bits: self.bits }
    }
}

impl Ord for AlternativeSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.positions().cmp(other.positions())
    }
}

impl PartialOrd for AlternativeSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for AlternativeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (n, p) in self.positions().enumerate() {
            if n > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "}}")
    }
}

/// Iterator over the member positions of an [`AlternativeSet`].
pub struct Positions {
    bits: u64,
}

impl Iterator for Positions {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.bits == 0 {
            return None;
        }
        let p = self.bits.trailing_zeros() as usize;
        self.bits &= self.bits - 1;
        Some(p)
    }
}

/// The declared universe of alternatives: an ordered list of distinct names.
///
/// The declaration order fixes the bit position of each alternative and is
/// the canonical order used when printing set literals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Universe {
    names: Vec<String>,
}

impl Universe {
    pub fn new<I, T>(names: I) -> Result<Self, StructureError>
    where
        I: IntoIterator<Item = T>,
        T: Into<String>,
    {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        if names.len() > MAX_UNIVERSE {
            return Err(StructureError::UniverseTooLarge(names.len()));
        }
        let mut seen = BTreeSet::new();
        for n in &names {
            if !seen.insert(n.clone()) {
                return Err(StructureError::DuplicateAlternative(n.clone()));
            }
        }
        Ok(Universe { names })
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, position: usize) -> &str {
        &self.names[position]
    }

    pub fn position_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// The set containing every alternative.
    pub fn full_set(&self) -> AlternativeSet {
        if self.names.is_empty() {
            AlternativeSet::EMPTY
        } else {
            AlternativeSet::from_bits((1u64 << self.names.len()) - 1)
        }
    }

    /// Whether `set` only uses positions declared in this universe.
    pub fn admits(&self, set: AlternativeSet) -> bool {
        set.is_subset_of(self.full_set())
    }

    pub fn set_of<'a, I: IntoIterator<Item = &'a str>>(
        &self,
        names: I,
    ) -> Result<AlternativeSet, StructureError> {
        let mut bits = 0u64;
        for name in names {
            match self.position_of(name) {
                Some(p) => bits |= 1 << p,
                None => return Err(StructureError::UnknownAlternative(name.to_string())),
            }
        }
        Ok(AlternativeSet::from_bits(bits))
    }

    /// Parses a comma-separated list of names; the empty string is the empty set.
    pub fn parse_set(&self, text: &str) -> Result<AlternativeSet, StructureError> {
        let trimmed = text.trim();
        if trimmed.is_empty() {
            return Ok(AlternativeSet::EMPTY);
        }
        self.set_of(trimmed.split(',').map(str::trim))
    }

    /// Member names in declaration order.
    pub fn set_names(&self, set: AlternativeSet) -> Vec<&str> {
        set.positions().map(|p| self.name(p)).collect()
    }

    /// All subsets of the universe, in increasing bit-pattern order.
    ///
    /// Only sensible for small universes; callers guard the size.
    pub fn subsets(&self) -> impl Iterator<Item = AlternativeSet> {
        let n = self.names.len();
        (0u64..(1u64 << n)).map(AlternativeSet::from_bits)
    }
}

/// A restricted choice structure `⟨A, S, E⟩`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RestrictedChoiceStructure {
    universe: Universe,
    domain: BTreeSet<AlternativeSet>,
    realizable: BTreeSet<AlternativeSet>,
}

impl RestrictedChoiceStructure {
    pub fn new<D, R>(universe: Universe, domain: D, realizable: R) -> Result<Self, StructureError>
    where
        D: IntoIterator<Item = AlternativeSet>,
        R: IntoIterator<Item = AlternativeSet>,
    {
        let domain: BTreeSet<AlternativeSet> = domain.into_iter().collect();
        let realizable: BTreeSet<AlternativeSet> = realizable.into_iter().collect();
        if domain.is_empty() {
            return Err(StructureError::EmptyDomain);
        }
        if realizable.is_empty() {
            return Err(StructureError::EmptyRealizable);
        }
        if !realizable.is_subset(&domain) {
            return Err(StructureError::RealizableNotInDomain);
        }
        for s in domain.iter().chain(realizable.iter()) {
            if !universe.admits(*s) {
                return Err(StructureError::OutsideUniverse);
            }
        }
        Ok(RestrictedChoiceStructure {
            universe,
            domain,
            realizable,
        })
    }

    pub fn universe(&self) -> &Universe {
        &self.universe
    }

    pub fn domain(&self) -> &BTreeSet<AlternativeSet> {
        &self.domain
    }

    pub fn realizable(&self) -> &BTreeSet<AlternativeSet> {
        &self.realizable
    }

    pub fn contains_input(&self, s: AlternativeSet) -> bool {
        self.domain.contains(&s)
    }

    /// The realizable subsets of `s`, in canonical order.
    pub fn candidates(&self, s: AlternativeSet) -> Vec<AlternativeSet> {
        self.realizable
            .iter()
            .copied()
            .filter(|e| e.is_subset_of(s))
            .collect()
    }

    /// Whether the input family is closed under pairwise union.
    pub fn is_union_closed(&self) -> bool {
        for s1 in &self.domain {
            for s2 in &self.domain {
                if !self.domain.contains(&s1.union(*s2)) {
                    return false;
                }
            }
        }
        true
    }
}

/// A linear order over a carrier of realizable sets, stored as its chain from
/// least (most preferred) to greatest.
///
/// A linear order on a finite carrier is fully determined by its chain; the
/// extensional [`Relation`] view is materialized on demand.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearSetOrder {
    chain: Vec<AlternativeSet>,
}

impl LinearSetOrder {
    /// Builds the order whose chain is `chain` (least first).
    pub fn from_chain<I: IntoIterator<Item = AlternativeSet>>(
        chain: I,
    ) -> Result<Self, StructureError> {
        let chain: Vec<AlternativeSet> = chain.into_iter().collect();
        let distinct: BTreeSet<AlternativeSet> = chain.iter().copied().collect();
        if distinct.len() != chain.len() {
            return Err(StructureError::DuplicateChainElement);
        }
        Ok(LinearSetOrder { chain })
    }

    /// Validates that `relation` is a linear order and extracts its chain.
    pub fn from_relation(relation: &Relation) -> Result<Self, StructureError> {
        if !relation.is_linear_order() {
            return Err(StructureError::NotLinearOrder);
        }
        let n = relation.carrier().len();
        let mut indices: Vec<usize> = (0..n).collect();
        // for a linear order, the number of predecessors is the rank
        indices.sort_by_key(|&i| (0..n).filter(|&j| relation.contains(j, i)).count());
        let chain = indices
            .into_iter()
            .map(|i| relation.carrier().element(i))
            .collect();
        Ok(LinearSetOrder { chain })
    }

    pub fn chain(&self) -> &[AlternativeSet] {
        &self.chain
    }

    pub fn carrier_sets(&self) -> BTreeSet<AlternativeSet> {
        self.chain.iter().copied().collect()
    }

    pub fn len(&self) -> usize {
        self.chain.len()
    }

    pub fn is_empty(&self) -> bool {
        self.chain.is_empty()
    }

    /// The extensional relation view of the order.
    pub fn relation(&self) -> Relation {
        let carrier = Carrier::new(self.chain.clone()).expect("chain elements are distinct");
        let n = self.chain.len();
        let mut pairs = Vec::with_capacity(n * (n + 1) / 2);
        for i in 0..n {
            for j in i..n {
                pairs.push((i, j));
            }
        }
        Relation::new(carrier, pairs).expect("indices are in range")
    }

    /// The minimum among carrier elements that are subsets of `s`, or `None`
    /// when no carrier element fits inside `s`.
    ///
    /// On a linear order the minimum is unique whenever it exists, so the
    /// undefined case of the evaluation rule is exactly `None`.
    pub fn min_of_input(&self, s: AlternativeSet) -> Option<AlternativeSet> {
        self.chain.iter().copied().find(|e| e.is_subset_of(s))
    }

    /// The choice function induced by this order with fallback `fallback`:
    /// the unique minimal realizable subset of `s` when one exists, and the
    /// fallback otherwise.
    pub fn evaluate(&self, fallback: AlternativeSet, s: AlternativeSet) -> AlternativeSet {
        self.min_of_input(s).unwrap_or(fallback)
    }

    /// Whether the global minima of the order are exactly `{k}`.
    pub fn is_k_minimal(&self, k: AlternativeSet) -> bool {
        self.chain.first() == Some(&k)
    }

    /// Whether every input admitting some carrier subset has a minimal one.
    ///
    /// On a finite carrier a linear order always has minima, so this holds
    /// unconditionally; the quantifier is still swept literally so the
    /// operation doubles as a sanity assertion.
    pub fn is_smooth(&self, structure: &RestrictedChoiceStructure) -> bool {
        structure.domain().iter().all(|&s| {
            let has_candidate = self.chain.iter().any(|e| e.is_subset_of(s));
            !has_candidate || self.min_of_input(s).is_some()
        })
    }
}

/// An extensional choice function: a total map from the domain to realizable
/// sets, together with a designated fallback.
///
/// Construction validates the structural invariants (the fallback is
/// realizable, the map is total over the domain, every value is realizable).
/// Whether the table also satisfies the defining condition of a choice
/// function (a realizable subset of the input is returned whenever one
/// exists, and the fallback otherwise) is a separate, checkable property
/// ([`ChoiceFunctionTable::is_choice_function`]), so that violating tables can
/// be constructed and handed to the axiom checkers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChoiceFunctionTable {
    structure: RestrictedChoiceStructure,
    fallback: AlternativeSet,
    map: BTreeMap<AlternativeSet, AlternativeSet>,
}

impl ChoiceFunctionTable {
    pub fn new(
        structure: RestrictedChoiceStructure,
        fallback: AlternativeSet,
        map: BTreeMap<AlternativeSet, AlternativeSet>,
    ) -> Result<Self, StructureError> {
        if !structure.realizable().contains(&fallback) {
            return Err(StructureError::FallbackNotRealizable);
        }
        for s in map.keys() {
            if !structure.domain().contains(s) {
                return Err(StructureError::TableInputOutsideDomain);
            }
        }
        for s in structure.domain() {
            match map.get(s) {
                None => return Err(StructureError::TableNotTotal),
                Some(v) if !structure.realizable().contains(v) => {
                    return Err(StructureError::TableValueNotRealizable)
                }
                Some(_) => {}
            }
        }
        Ok(ChoiceFunctionTable {
            structure,
            fallback,
            map,
        })
    }

    pub fn structure(&self) -> &RestrictedChoiceStructure {
        &self.structure
    }

    pub fn fallback(&self) -> AlternativeSet {
        self.fallback
    }

    /// The value assigned to `s`, if `s` is in the domain.
    pub fn value(&self, s: AlternativeSet) -> Option<AlternativeSet> {
        self.map.get(&s).copied()
    }

    /// `(input, output)` entries in canonical input order.
    pub fn entries(&self) -> impl Iterator<Item = (AlternativeSet, AlternativeSet)> + '_ {
        self.map.iter().map(|(s, v)| (*s, *v))
    }

    pub fn map(&self) -> &BTreeMap<AlternativeSet, AlternativeSet> {
        &self.map
    }

    /// The distinct output values, in canonical order.
    pub fn image(&self) -> Vec<AlternativeSet> {
        let image: BTreeSet<AlternativeSet> = self.map.values().copied().collect();
        image.into_iter().collect()
    }

    /// First input violating the choice-function condition, if any: either a
    /// realizable subset of the input exists but the value is not one, or no
    /// realizable subset exists and the value differs from the fallback.
    pub fn choice_condition_violation(&self) -> Option<AlternativeSet> {
        for (&s, &v) in &self.map {
            let has_candidate = self
                .structure
                .realizable()
                .iter()
                .any(|e| e.is_subset_of(s));
            if has_candidate {
                if !v.is_subset_of(s) {
                    return Some(s);
                }
            } else if v != self.fallback {
                return Some(s);
            }
        }
        None
    }

    /// Whether the table is a choice function with this fallback.
    pub fn is_choice_function(&self) -> bool {
        self.choice_condition_violation().is_none()
    }
}

/// Tabulates the choice function induced by a linear order over the whole
/// domain of `structure`.
///
/// The order's carrier must consist of realizable sets and the fallback must
/// be realizable. With the carrier equal to the full realizable family, the
/// result is always a valid choice function with the given fallback.
pub fn table_from_order(
    order: &LinearSetOrder,
    fallback: AlternativeSet,
    structure: &RestrictedChoiceStructure,
) -> Result<ChoiceFunctionTable, StructureError> {
    if !order
        .chain()
        .iter()
        .all(|e| structure.realizable().contains(e))
    {
        return Err(StructureError::CarrierNotRealizable);
    }
    let map = structure
        .domain()
        .iter()
        .map(|&s| (s, order.evaluate(fallback, s)))
        .collect();
    ChoiceFunctionTable::new(structure.clone(), fallback, map)
}
