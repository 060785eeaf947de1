//! Finite binary relations over an indexed carrier of alternative sets.
//!
//! A [`Relation`] stores its pairs extensionally as index pairs into a
//! [`Carrier`], an ordered list of distinct sets. The carrier order is fixed
//! at construction and doubles as the canonical tie-break sequence for the
//! deterministic completion and linearization algorithms.
//!
//! Consistency here is the chain condition of Suzumura: no sequence of weak
//! preferences may be closed by a strict preference in the reverse direction.
//! On finite carriers this is decided through the transitive closure, and it
//! is exactly the condition under which [`Relation::suzumura_extension`]
//! succeeds in producing a total preorder that contains the relation and
//! preserves its strict part.

use std::collections::BTreeSet;

use thiserror::Error;

use crate::structures::AlternativeSet;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RelationError {
    #[error("carrier elements must be pairwise distinct")]
    DuplicateCarrierElement,
    #[error("pair ({0}, {1}) is out of carrier range")]
    IndexOutOfRange(usize, usize),
    #[error("relation is inconsistent: no strict-part-preserving total preorder extends it")]
    Inconsistent,
    #[error("relation is not a total preorder")]
    NotTotalPreorder,
}

impl RelationError {
    pub fn kind(&self) -> &'static str {
        match self {
            RelationError::DuplicateCarrierElement => "duplicate_carrier_element",
            RelationError::IndexOutOfRange(_, _) => "index_out_of_range",
            RelationError::Inconsistent => "inconsistent",
            RelationError::NotTotalPreorder => "not_total_preorder",
        }
    }
}

/// An ordered list of distinct alternative sets, the ground set of a relation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Carrier {
    elements: Vec<AlternativeSet>,
}

impl Carrier {
    pub fn new<I: IntoIterator<Item = AlternativeSet>>(elements: I) -> Result<Self, RelationError> {
        let elements: Vec<AlternativeSet> = elements.into_iter().collect();
        let distinct: BTreeSet<AlternativeSet> = elements.iter().copied().collect();
        if distinct.len() != elements.len() {
            return Err(RelationError::DuplicateCarrierElement);
        }
        Ok(Carrier { elements })
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[AlternativeSet] {
        &self.elements
    }

    pub fn element(&self, index: usize) -> AlternativeSet {
        self.elements[index]
    }

    pub fn index_of(&self, set: AlternativeSet) -> Option<usize> {
        self.elements.iter().position(|&e| e == set)
    }

    pub fn all_indices(&self) -> BTreeSet<usize> {
        (0..self.elements.len()).collect()
    }
}

/// The relation properties decided by [`Relation::has_property`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PropertyName {
    Reflexive,
    Total,
    Antisymmetric,
    Transitive,
    Consistent,
}

/// A binary relation stored as a set of ordered index pairs; `(i, j)` means
/// the `i`-th carrier element is weakly below the `j`-th.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relation {
    carrier: Carrier,
    pairs: BTreeSet<(usize, usize)>,
}

impl Relation {
    pub fn new<I: IntoIterator<Item = (usize, usize)>>(
        carrier: Carrier,
        pairs: I,
    ) -> Result<Self, RelationError> {
        let pairs: BTreeSet<(usize, usize)> = pairs.into_iter().collect();
        let n = carrier.len();
        for &(i, j) in &pairs {
            if i >= n || j >= n {
                return Err(RelationError::IndexOutOfRange(i, j));
            }
        }
        Ok(Relation { carrier, pairs })
    }

    pub fn empty(carrier: Carrier) -> Self {
        Relation {
            carrier,
            pairs: BTreeSet::new(),
        }
    }

    pub fn carrier(&self) -> &Carrier {
        &self.carrier
    }

    /// Pairs in lexicographic index order.
    pub fn pairs(&self) -> &BTreeSet<(usize, usize)> {
        &self.pairs
    }

    pub fn contains(&self, i: usize, j: usize) -> bool {
        self.pairs.contains(&(i, j))
    }

    /// The strict part: pairs whose reverse is absent.
    pub fn strict_part(&self) -> Relation {
        let pairs = self
            .pairs
            .iter()
            .copied()
            .filter(|&(i, j)| !self.contains(j, i))
            .collect();
        Relation {
            carrier: self.carrier.clone(),
            pairs,
        }
    }

    /// The equivalent part: pairs present in both directions.
    pub fn equivalent_part(&self) -> Relation {
        let pairs = self
            .pairs
            .iter()
            .copied()
            .filter(|&(i, j)| self.contains(j, i))
            .collect();
        Relation {
            carrier: self.carrier.clone(),
            pairs,
        }
    }

    pub fn has_property(&self, property: PropertyName) -> bool {
        let n = self.carrier.len();
        match property {
            PropertyName::Reflexive => (0..n).all(|i| self.contains(i, i)),
            PropertyName::Total => {
                (0..n).all(|i| (0..n).all(|j| self.contains(i, j) || self.contains(j, i)))
            }
            PropertyName::Antisymmetric => self
                .pairs
                .iter()
                .all(|&(i, j)| i == j || !self.contains(j, i)),
            PropertyName::Transitive => self.pairs.iter().all(|&(i, j)| {
                self.pairs
                    .range((j, 0)..(j + 1, 0))
                    .all(|&(_, k)| self.contains(i, k))
            }),
            PropertyName::Consistent => {
                // no pair of the closure may be reversed by a strict pair
                let closure = self.transitive_closure();
                let strict = self.strict_part();
                closure.pairs.iter().all(|&(i, j)| !strict.contains(j, i))
            }
        }
    }

    pub fn is_linear_order(&self) -> bool {
        self.has_property(PropertyName::Reflexive)
            && self.has_property(PropertyName::Total)
            && self.has_property(PropertyName::Antisymmetric)
            && self.has_property(PropertyName::Transitive)
    }

    pub fn is_total_preorder(&self) -> bool {
        self.has_property(PropertyName::Total) && self.has_property(PropertyName::Transitive)
    }

    /// The smallest transitive superset.
    pub fn transitive_closure(&self) -> Relation {
        let n = self.carrier.len();
        let mut reach = vec![false; n * n];
        for &(i, j) in &self.pairs {
            reach[i * n + j] = true;
        }
        for k in 0..n {
            for i in 0..n {
                if reach[i * n + k] {
                    for j in 0..n {
                        if reach[k * n + j] {
                            reach[i * n + j] = true;
                        }
                    }
                }
            }
        }
        let pairs = (0..n)
            .flat_map(|i| (0..n).map(move |j| (i, j)))
            .filter(|&(i, j)| reach[i * n + j])
            .collect();
        Relation {
            carrier: self.carrier.clone(),
            pairs,
        }
    }

    /// The elements of `m` with no strictly smaller element inside `m`:
    /// `{x ∈ m | ∀x' ∈ m: x' ⪯ x implies x ⪯ x'}`.
    pub fn min_elements(&self, m: &BTreeSet<usize>) -> BTreeSet<usize> {
        m.iter()
            .copied()
            .filter(|&x| {
                m.iter()
                    .all(|&y| !self.contains(y, x) || self.contains(x, y))
            })
            .collect()
    }

    /// Minima over the whole carrier.
    pub fn global_minima(&self) -> BTreeSet<usize> {
        self.min_elements(&self.carrier.all_indices())
    }

    /// Extends a consistent relation to a total preorder on the same carrier
    /// that contains every pair and keeps every strict pair strict.
    ///
    /// The completion is deterministic: starting from the transitive closure,
    /// incomparable pairs are merged into equivalences in canonical carrier
    /// index order, re-closing transitively after each step.
    pub fn suzumura_extension(&self) -> Result<Relation, RelationError> {
        if !self.has_property(PropertyName::Consistent) {
            return Err(RelationError::Inconsistent);
        }
        let n = self.carrier.len();
        let mut ext = self.transitive_closure();
        for i in 0..n {
            for j in i..n {
                if !ext.contains(i, j) && !ext.contains(j, i) {
                    ext.pairs.insert((i, j));
                    ext.pairs.insert((j, i));
                    ext = ext.transitive_closure();
                }
            }
        }
        debug_assert!(ext.is_total_preorder());
        debug_assert!(self.pairs.is_subset(&ext.pairs));
        debug_assert!({
            let strict = self.strict_part();
            let ext_strict = ext.strict_part();
            strict.pairs.is_subset(&ext_strict.pairs)
        });
        Ok(ext)
    }

    /// Refines a total preorder into a linear order preserving its strict
    /// part; ties are broken by canonical carrier index order.
    pub fn linearize(&self) -> Result<Relation, RelationError> {
        if !self.is_total_preorder() {
            return Err(RelationError::NotTotalPreorder);
        }
        let n = self.carrier.len();
        let mut pairs = BTreeSet::new();
        for i in 0..n {
            for j in 0..n {
                if self.contains(i, j) && (!self.contains(j, i) || i <= j) {
                    pairs.insert((i, j));
                }
            }
        }
        let linear = Relation {
            carrier: self.carrier.clone(),
            pairs,
        };
        debug_assert!(linear.is_linear_order());
        Ok(linear)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn carrier(n: usize) -> Carrier {
        Carrier::new((0..n).map(AlternativeSet::singleton)).unwrap()
    }

    fn relation(n: usize, pairs: &[(usize, usize)]) -> Relation {
        Relation::new(carrier(n), pairs.iter().copied()).unwrap()
    }

    /// Exhaustive reference for the extension theorem on tiny carriers: does
    /// any total preorder contain `r` and keep its strict part strict?
    fn extension_exists_brute_force(r: &Relation) -> bool {
        let n = r.carrier().len();
        let cells: Vec<(usize, usize)> = (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).collect();
        let strict = r.strict_part();
        'outer: for mask in 0u32..(1u32 << cells.len()) {
            let mut pairs = BTreeSet::new();
            for (b, &cell) in cells.iter().enumerate() {
                if mask & (1 << b) != 0 {
                    pairs.insert(cell);
                }
            }
            let candidate = Relation::new(carrier(n), pairs).unwrap();
            if !candidate.is_total_preorder() {
                continue;
            }
            if !r.pairs().is_subset(candidate.pairs()) {
                continue;
            }
            for &(i, j) in strict.pairs() {
                if candidate.contains(j, i) {
                    continue 'outer;
                }
            }
            return true;
        }
        false
    }

    #[test]
    fn strict_part_drops_symmetric_pairs() {
        let r = relation(3, &[(0, 1), (1, 0), (0, 2)]);
        assert_eq!(
            r.strict_part().pairs().iter().copied().collect::<Vec<_>>(),
            vec![(0, 2)]
        );
        assert!(relation(3, &[]).strict_part().pairs().is_empty());
    }

    #[test]
    fn strict_part_of_total_preorder() {
        // a ≃ b ≺ c
        let r = relation(3, &[(0, 0), (1, 1), (2, 2), (0, 1), (1, 0), (0, 2), (1, 2)]);
        let strict: Vec<_> = r.strict_part().pairs().iter().copied().collect();
        assert_eq!(strict, vec![(0, 2), (1, 2)]);
    }

    #[test]
    fn strict_and_equivalent_parts_partition() {
        let r = relation(4, &[(0, 1), (1, 0), (2, 3), (3, 3), (1, 2)]);
        let strict = r.strict_part();
        let equiv = r.equivalent_part();
        assert!(strict.pairs().is_disjoint(equiv.pairs()));
        let union: BTreeSet<_> = strict.pairs().union(equiv.pairs()).copied().collect();
        assert_eq!(&union, r.pairs());
    }

    #[test]
    fn property_checks() {
        let strict_cycle = relation(3, &[(0, 1), (1, 2), (2, 0)]);
        assert!(!strict_cycle.has_property(PropertyName::Consistent));

        let linear = relation(3, &[(0, 0), (1, 1), (2, 2), (0, 1), (0, 2), (1, 2)]);
        for p in [
            PropertyName::Reflexive,
            PropertyName::Total,
            PropertyName::Antisymmetric,
            PropertyName::Transitive,
            PropertyName::Consistent,
        ] {
            assert!(linear.has_property(p), "{p:?}");
        }
        assert!(linear.is_linear_order());
    }

    #[test]
    fn consistency_differs_from_transitivity() {
        // a ≃ b, b ≺ c, a ≺ c: closure demands (a,a) and (b,b), so the
        // relation is not transitive, yet no weak chain is closed by a
        // reverse strict edge.
        let r = relation(3, &[(0, 1), (1, 0), (1, 2), (0, 2)]);
        assert!(r.has_property(PropertyName::Consistent));
        assert!(!r.has_property(PropertyName::Transitive));
        assert!(extension_exists_brute_force(&r));
    }

    #[test]
    fn equivalence_chain_closed_by_strict_edge_is_inconsistent() {
        // a ≃ b, b ≃ c, a ≺ c: the chain c ⪯ b ⪯ a together with a ≺ c
        // violates the chain condition, and indeed no strict-part-preserving
        // total preorder exists.
        let r = relation(3, &[(0, 1), (1, 0), (1, 2), (2, 1), (0, 2)]);
        assert!(!r.has_property(PropertyName::Consistent));
        assert!(!r.has_property(PropertyName::Transitive));
        assert!(!extension_exists_brute_force(&r));
        assert_eq!(r.suzumura_extension(), Err(RelationError::Inconsistent));
    }

    #[test]
    fn transitive_closure_examples() {
        let r = relation(3, &[(0, 1), (1, 2)]);
        let tc = r.transitive_closure();
        assert_eq!(
            tc.pairs().iter().copied().collect::<Vec<_>>(),
            vec![(0, 1), (0, 2), (1, 2)]
        );

        let fixed = relation(3, &[(0, 1), (0, 2), (1, 2)]);
        assert_eq!(fixed.transitive_closure(), fixed);
    }

    #[test]
    fn closure_of_chain_has_all_forward_pairs() {
        // chain of 4 edges over 5 elements: closure is all 10 forward pairs
        let r = relation(5, &[(0, 1), (1, 2), (2, 3), (3, 4)]);
        let tc = r.transitive_closure();
        assert_eq!(tc.pairs().len(), 10);
        for i in 0..5 {
            for j in (i + 1)..5 {
                assert!(tc.contains(i, j));
            }
        }
    }

    #[test]
    fn min_elements_examples() {
        // linear order a ≪ b ≪ c, m = {b, c}
        let linear = relation(3, &[(0, 0), (1, 1), (2, 2), (0, 1), (0, 2), (1, 2)]);
        let m: BTreeSet<usize> = [1, 2].into_iter().collect();
        assert_eq!(linear.min_elements(&m), [1].into_iter().collect());

        // empty relation: everything is vacuously minimal
        let empty = relation(2, &[]);
        let m: BTreeSet<usize> = [0, 1].into_iter().collect();
        assert_eq!(empty.min_elements(&m), m);

        // single weak edge a ⪯ b
        let r = relation(2, &[(0, 1)]);
        let m: BTreeSet<usize> = [0, 1].into_iter().collect();
        assert_eq!(r.min_elements(&m), [0].into_iter().collect());
    }

    #[test]
    fn minima_of_linear_orders_are_singletons() {
        let linear = relation(3, &[(0, 0), (1, 1), (2, 2), (0, 1), (0, 2), (1, 2)]);
        for mask in 1u32..8 {
            let m: BTreeSet<usize> = (0..3).filter(|i| mask & (1 << i) != 0).collect();
            assert_eq!(linear.min_elements(&m).len(), 1);
        }
    }

    #[test]
    fn suzumura_extension_of_total_preorder_is_itself() {
        let tp = relation(3, &[(0, 0), (1, 1), (2, 2), (0, 1), (1, 0), (0, 2), (1, 2)]);
        let ext = tp.suzumura_extension().unwrap();
        assert_eq!(ext, tp);
    }

    #[test]
    fn suzumura_extension_contract_on_partial_input() {
        // single strict edge on a 3-element carrier; the third element is
        // merged by the deterministic completion
        let r = relation(3, &[(0, 1)]);
        let ext = r.suzumura_extension().unwrap();
        assert!(ext.is_total_preorder());
        assert!(r.pairs().is_subset(ext.pairs()));
        assert!(ext.strict_part().contains(0, 1));
    }

    #[test]
    fn linearize_examples() {
        // already linear: unchanged
        let linear = relation(3, &[(0, 0), (1, 1), (2, 2), (0, 1), (0, 2), (1, 2)]);
        assert_eq!(linear.linearize().unwrap(), linear);

        // all-equivalent: ties broken by carrier index
        let all_eq =
            Relation::new(carrier(3), (0..3).flat_map(|i| (0..3).map(move |j| (i, j)))).unwrap();
        let lin = all_eq.linearize().unwrap();
        assert!(lin.is_linear_order());
        assert!(lin.strict_part().contains(0, 1));
        assert!(lin.strict_part().contains(1, 2));

        // not a preorder
        let partial = relation(2, &[(0, 0)]);
        assert_eq!(partial.linearize(), Err(RelationError::NotTotalPreorder));
    }

    #[test]
    fn linearize_breaks_ties_by_carrier_position() {
        // carrier order b, a, c with a ≃ b ≺ c: the tie resolves to b ≪ a
        let sets = [
            AlternativeSet::singleton(1), // b first in the carrier
            AlternativeSet::singleton(0), // a second
            AlternativeSet::singleton(2), // c third
        ];
        let c = Carrier::new(sets).unwrap();
        let tp =
            Relation::new(c, [(0, 0), (1, 1), (2, 2), (0, 1), (1, 0), (0, 2), (1, 2)]).unwrap();
        let lin = tp.linearize().unwrap();
        assert!(lin.strict_part().contains(0, 1)); // b ≪ a
        assert!(lin.strict_part().contains(1, 2)); // a ≪ c
    }

    #[test]
    fn rejects_out_of_range_pairs() {
        assert!(matches!(
            Relation::new(carrier(2), [(0, 2)]),
            Err(RelationError::IndexOutOfRange(0, 2))
        ));
    }
}
