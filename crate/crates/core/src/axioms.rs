//! Decision procedures for the postulate families, with counterexample
//! witnesses.
//!
//! Every check returns an [`AxiomReport`]: the axiom, whether it holds, and,
//! on violation, the tuple of sets instantiating the violated antecedent.
//! Sweeps iterate the domain in canonical set order and stop at the first
//! violation, so reports are reproducible. Replaying a witness through the
//! literal quantifier body of its axiom ([`replay`]) always reproduces the
//! violation; this is what makes the reports trustworthy and is exercised by
//! the test suite.
//!
//! The chain postulates (`SS5`, `SS5E` and their LCR/LCA renamings) quantify
//! over arbitrarily long cyclic chains. They are decided as acyclicity of a
//! "beat" digraph over the chosen sets: an edge from `X` to `Y` records that
//! some admissible input containing both resolves to `X`. A directed cycle
//! through distinct vertices is exactly a violating chain, and the extracted
//! cycle is the reported witness.
//!
//! The LCR and LCA families are the same postulate shapes with the choice
//! function replaced by one slice of a change operator (additionally
//! quantified over the initial set `K`) or by the per-framework choice
//! function of an extension semantics.

use std::collections::BTreeMap;
use std::fmt;

use crate::argumentation::{ArgumentationError, ArgumentationFramework, ChoiceExtensionSemantics};
use crate::change::ChangeOperator;
use crate::structures::{AlternativeSet, ChoiceFunctionTable};

/// Identifier of a postulate across all three families.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AxiomId {
    Ss0,
    Ss1,
    Ss2,
    Ss3,
    Ss4,
    Ss5,
    Ss6,
    Ss5E,
    Ss6E,
    Lcr(u8),
    Lca(u8),
}

impl fmt::Display for AxiomId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AxiomId::Ss0 => write!(f, "SS0"),
            AxiomId::Ss1 => write!(f, "SS1"),
            AxiomId::Ss2 => write!(f, "SS2"),
            AxiomId::Ss3 => write!(f, "SS3"),
            AxiomId::Ss4 => write!(f, "SS4"),
            AxiomId::Ss5 => write!(f, "SS5"),
            AxiomId::Ss6 => write!(f, "SS6"),
            AxiomId::Ss5E => write!(f, "SS5E"),
            AxiomId::Ss6E => write!(f, "SS6E"),
            AxiomId::Lcr(i) => write!(f, "LCR{i}"),
            AxiomId::Lca(i) => write!(f, "LCA{i}"),
        }
    }
}

/// The postulates checkable directly against a choice table.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SsAxiom {
    Ss0,
    Ss1,
    Ss2,
    Ss3,
    Ss4,
    Ss5,
    Ss6,
}

/// The chain and union postulates in existential form, for structures whose
/// input family need not be union-closed.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SsExtAxiom {
    Ss5E,
    Ss6E,
}

/// LCR1–LCR6, the change-operator renaming of SS1–SS6.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LcrAxiom(pub u8);

/// LCA1–LCA6, the extension-semantics renaming of SS1–SS6.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LcaAxiom(pub u8);

/// Outcome of one axiom check. When `holds` is false, `witness` instantiates
/// the violated antecedent (for the LCR family its first element is `K`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomReport {
    pub axiom: AxiomId,
    pub holds: bool,
    pub witness: Vec<AlternativeSet>,
}

impl AxiomReport {
    fn holds(axiom: AxiomId) -> Self {
        AxiomReport {
            axiom,
            holds: true,
            witness: Vec::new(),
        }
    }

    fn violated(axiom: AxiomId, witness: Vec<AlternativeSet>) -> Self {
        AxiomReport {
            axiom,
            holds: false,
            witness,
        }
    }
}

/// The common postulate shapes shared by all three families.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Shape {
    S0,
    S1,
    S2,
    S3,
    S4,
    S5,
    S6,
    S5E,
    S6E,
}

impl SsAxiom {
    fn shape(self) -> Shape {
        match self {
            SsAxiom::Ss0 => Shape::S0,
            SsAxiom::Ss1 => Shape::S1,
            SsAxiom::Ss2 => Shape::S2,
            SsAxiom::Ss3 => Shape::S3,
            SsAxiom::Ss4 => Shape::S4,
            SsAxiom::Ss5 => Shape::S5,
            SsAxiom::Ss6 => Shape::S6,
        }
    }

    fn id(self) -> AxiomId {
        match self {
            SsAxiom::Ss0 => AxiomId::Ss0,
            SsAxiom::Ss1 => AxiomId::Ss1,
            SsAxiom::Ss2 => AxiomId::Ss2,
            SsAxiom::Ss3 => AxiomId::Ss3,
            SsAxiom::Ss4 => AxiomId::Ss4,
            SsAxiom::Ss5 => AxiomId::Ss5,
            SsAxiom::Ss6 => AxiomId::Ss6,
        }
    }
}

impl SsExtAxiom {
    fn shape(self) -> Shape {
        match self {
            SsExtAxiom::Ss5E => Shape::S5E,
            SsExtAxiom::Ss6E => Shape::S6E,
        }
    }

    fn id(self) -> AxiomId {
        match self {
            SsExtAxiom::Ss5E => AxiomId::Ss5E,
            SsExtAxiom::Ss6E => AxiomId::Ss6E,
        }
    }
}

fn lcr_shape(i: u8) -> Shape {
    match i {
        1 => Shape::S1,
        2 => Shape::S2,
        3 => Shape::S3,
        4 => Shape::S4,
        5 => Shape::S5,
        6 => Shape::S6,
        _ => panic!("LCR axioms are numbered 1..=6, got {i}"),
    }
}

/// Checks one of SS0–SS6 against a choice table.
pub fn check_ss(table: &ChoiceFunctionTable, axiom: SsAxiom) -> AxiomReport {
    match check_shape(table, axiom.shape()) {
        None => AxiomReport::holds(axiom.id()),
        Some(witness) => AxiomReport::violated(axiom.id(), witness),
    }
}

/// Checks SS5E or SS6E against a choice table.
pub fn check_ss_e(table: &ChoiceFunctionTable, axiom: SsExtAxiom) -> AxiomReport {
    match check_shape(table, axiom.shape()) {
        None => AxiomReport::holds(axiom.id()),
        Some(witness) => AxiomReport::violated(axiom.id(), witness),
    }
}

/// Checks one of LCR1–LCR6 against a change operator, quantifying over every
/// initial set `K` in its domain. A violation witness starts with the `K`
/// whose slice violates the postulate.
pub fn check_lcr(op: &ChangeOperator, axiom: LcrAxiom) -> AxiomReport {
    let id = AxiomId::Lcr(axiom.0);
    let shape = lcr_shape(axiom.0);
    for &k in op.domain() {
        let slice = op.slice_table(k).expect("operator domains are closed");
        if let Some(witness) = check_shape(&slice, shape) {
            let mut full = Vec::with_capacity(witness.len() + 1);
            full.push(k);
            full.extend(witness);
            return AxiomReport::violated(id, full);
        }
    }
    AxiomReport::holds(id)
}

/// Checks one postulate shape against an already-tabulated table, reporting
/// under the given identifier. Backs the certification entry points, which
/// tabulate once and sweep all six shapes.
pub(crate) fn check_table_as(table: &ChoiceFunctionTable, id: AxiomId) -> AxiomReport {
    let shape = match id {
        AxiomId::Ss0 => Shape::S0,
        AxiomId::Ss1 => Shape::S1,
        AxiomId::Ss2 => Shape::S2,
        AxiomId::Ss3 => Shape::S3,
        AxiomId::Ss4 => Shape::S4,
        AxiomId::Ss5 => Shape::S5,
        AxiomId::Ss6 => Shape::S6,
        AxiomId::Ss5E => Shape::S5E,
        AxiomId::Ss6E => Shape::S6E,
        AxiomId::Lcr(i) | AxiomId::Lca(i) => lcr_shape(i),
    };
    match check_shape(table, shape) {
        None => AxiomReport::holds(id),
        Some(witness) => AxiomReport::violated(id, witness),
    }
}

/// Checks one of LCA1–LCA6 against a choice-based extension semantics at a
/// framework, tabulating the per-framework choice function over the full
/// powerset of arguments first.
pub fn check_lca(
    semantics: &ChoiceExtensionSemantics,
    af: &ArgumentationFramework,
    axiom: LcaAxiom,
) -> Result<AxiomReport, ArgumentationError> {
    let table = semantics.tabulate(af)?;
    Ok(check_table_as(&table, AxiomId::Lca(axiom.0)))
}

/// SS0–SS6 in order.
pub fn ss_suite(table: &ChoiceFunctionTable) -> Vec<AxiomReport> {
    [
        SsAxiom::Ss0,
        SsAxiom::Ss1,
        SsAxiom::Ss2,
        SsAxiom::Ss3,
        SsAxiom::Ss4,
        SsAxiom::Ss5,
        SsAxiom::Ss6,
    ]
    .into_iter()
    .map(|a| check_ss(table, a))
    .collect()
}

/// SS0–SS4 plus SS5E and SS6E: the suite characterizing representability on
/// arbitrary (not necessarily union-closed) structures.
pub fn general_suite(table: &ChoiceFunctionTable) -> Vec<AxiomReport> {
    let mut reports: Vec<AxiomReport> = [
        SsAxiom::Ss0,
        SsAxiom::Ss1,
        SsAxiom::Ss2,
        SsAxiom::Ss3,
        SsAxiom::Ss4,
    ]
    .into_iter()
    .map(|a| check_ss(table, a))
    .collect();
    reports.push(check_ss_e(table, SsExtAxiom::Ss5E));
    reports.push(check_ss_e(table, SsExtAxiom::Ss6E));
    reports
}

pub fn all_hold(reports: &[AxiomReport]) -> bool {
    reports.iter().all(|r| r.holds)
}

/// Re-evaluates the literal quantifier body of an axiom on a witness tuple.
///
/// Returns true when the witness really violates the axiom on this table.
/// For the chain postulates the witness is a cycle of distinct sets; every
/// consecutive edge (and the closing edge) is re-verified from the postulate
/// text, independently of the digraph formulation used by the checker.
pub fn replay(table: &ChoiceFunctionTable, axiom: AxiomId, witness: &[AlternativeSet]) -> bool {
    let shape = match axiom {
        AxiomId::Ss0 => Shape::S0,
        AxiomId::Ss1 => Shape::S1,
        AxiomId::Ss2 => Shape::S2,
        AxiomId::Ss3 => Shape::S3,
        AxiomId::Ss4 => Shape::S4,
        AxiomId::Ss5 => Shape::S5,
        AxiomId::Ss6 => Shape::S6,
        AxiomId::Ss5E => Shape::S5E,
        AxiomId::Ss6E => Shape::S6E,
        AxiomId::Lcr(i) | AxiomId::Lca(i) => lcr_shape(i),
    };
    replay_shape(table, shape, witness)
}

fn value(table: &ChoiceFunctionTable, s: AlternativeSet) -> AlternativeSet {
    table.value(s).expect("input lies in the table domain")
}

/// Runs the sweep for one postulate shape; `None` means the postulate holds.
fn check_shape(table: &ChoiceFunctionTable, shape: Shape) -> Option<Vec<AlternativeSet>> {
    let domain = table.structure().domain();
    let k = table.fallback();
    match shape {
        Shape::S0 => domain
            .iter()
            .copied()
            .find(|&s| {
                let has_candidate = table
                    .structure()
                    .realizable()
                    .iter()
                    .any(|e| e.is_subset_of(s));
                has_candidate && !value(table, s).is_subset_of(s)
            })
            .map(|s| vec![s]),
        Shape::S1 => domain
            .iter()
            .copied()
            .find(|&s| {
                let v = value(table, s);
                !v.is_subset_of(s) && v != k
            })
            .map(|s| vec![s]),
        Shape::S2 => domain
            .iter()
            .copied()
            .find(|&s| k.is_subset_of(s) && value(table, s) != k)
            .map(|s| vec![s]),
        Shape::S3 => {
            for &s1 in domain {
                for &s2 in domain {
                    let v1 = value(table, s1);
                    let v2 = value(table, s2);
                    if v1.is_subset_of(s2) && v2.is_subset_of(s1) && v1 != v2 {
                        return Some(vec![s1, s2]);
                    }
                }
            }
            None
        }
        Shape::S4 => {
            for &s1 in domain {
                if !value(table, s1).is_subset_of(s1) {
                    continue;
                }
                for &s2 in domain {
                    if s1.is_subset_of(s2) && !value(table, s2).is_subset_of(s2) {
                        return Some(vec![s1, s2]);
                    }
                }
            }
            None
        }
        Shape::S5 | Shape::S5E => beat_cycle(table, shape),
        Shape::S6 | Shape::S6E => {
            for &s1 in domain {
                for &s2 in domain {
                    let union12 = s1.union(s2);
                    if !domain.contains(&union12) {
                        continue;
                    }
                    let s3 = value(table, union12);
                    let union13 = s1.union(s3);
                    if domain.contains(&union13) && value(table, union13) != s3 {
                        return Some(vec![s1, s2, s3]);
                    }
                }
            }
            None
        }
    }
}

/// The beat digraph over the chosen sets: an edge `x → y` records an
/// admissible input containing `x ∪ y` that resolves to `x`. For the
/// union-form postulate the input must be the union itself; for the
/// existential form any domain superset will do.
fn beat_edges(
    table: &ChoiceFunctionTable,
    shape: Shape,
) -> (
    Vec<AlternativeSet>,
    BTreeMap<AlternativeSet, Vec<AlternativeSet>>,
) {
    let domain = table.structure().domain();
    let vertices = table.image();
    // inputs resolving to each chosen set, for the existential edge test
    let mut resolving: BTreeMap<AlternativeSet, Vec<AlternativeSet>> = BTreeMap::new();
    for (s, v) in table.entries() {
        resolving.entry(v).or_default().push(s);
    }
    let mut edges: BTreeMap<AlternativeSet, Vec<AlternativeSet>> = BTreeMap::new();
    for &x in &vertices {
        let mut out = Vec::new();
        for &y in &vertices {
            if x == y {
                continue;
            }
            let u = x.union(y);
            let beaten = match shape {
                Shape::S5 => domain.contains(&u) && value(table, u) == x,
                Shape::S5E => resolving
                    .get(&x)
                    .is_some_and(|ins| ins.iter().any(|&w| u.is_subset_of(w))),
                _ => unreachable!("beat digraph is only built for the chain postulates"),
            };
            if beaten {
                out.push(y);
            }
        }
        edges.insert(x, out);
    }
    (vertices, edges)
}

/// Finds a directed cycle of distinct chosen sets in the beat digraph, which
/// is exactly a violating chain of the corresponding postulate.
fn beat_cycle(table: &ChoiceFunctionTable, shape: Shape) -> Option<Vec<AlternativeSet>> {
    let (vertices, edges) = beat_edges(table, shape);
    #[derive(Clone, Copy, PartialEq)]
    enum Color {
        White,
        Gray,
        Black,
    }
    let mut color: BTreeMap<AlternativeSet, Color> =
        vertices.iter().map(|&v| (v, Color::White)).collect();
    let mut stack: Vec<AlternativeSet> = Vec::new();

    fn dfs(
        v: AlternativeSet,
        edges: &BTreeMap<AlternativeSet, Vec<AlternativeSet>>,
        color: &mut BTreeMap<AlternativeSet, Color>,
        stack: &mut Vec<AlternativeSet>,
    ) -> Option<Vec<AlternativeSet>> {
        color.insert(v, Color::Gray);
        stack.push(v);
        for &w in &edges[&v] {
            match color[&w] {
                Color::Gray => {
                    let start = stack
                        .iter()
                        .position(|&u| u == w)
                        .expect("gray is on stack");
                    return Some(stack[start..].to_vec());
                }
                Color::White => {
                    if let Some(cycle) = dfs(w, edges, color, stack) {
                        return Some(cycle);
                    }
                }
                Color::Black => {}
            }
        }
        stack.pop();
        color.insert(v, Color::Black);
        None
    }

    for &v in &vertices {
        if color[&v] == Color::White {
            if let Some(cycle) = dfs(v, &edges, &mut color, &mut stack) {
                return Some(cycle);
            }
            stack.clear();
        }
    }
    None
}

fn replay_shape(table: &ChoiceFunctionTable, shape: Shape, witness: &[AlternativeSet]) -> bool {
    let domain = table.structure().domain();
    let k = table.fallback();
    match shape {
        Shape::S0 => {
            let [s] = *witness else { return false };
            let has_candidate = table
                .structure()
                .realizable()
                .iter()
                .any(|e| e.is_subset_of(s));
            domain.contains(&s) && has_candidate && !value(table, s).is_subset_of(s)
        }
        Shape::S1 => {
            let [s] = *witness else { return false };
            domain.contains(&s) && !value(table, s).is_subset_of(s) && value(table, s) != k
        }
        Shape::S2 => {
            let [s] = *witness else { return false };
            domain.contains(&s) && k.is_subset_of(s) && value(table, s) != k
        }
        Shape::S3 => {
            let [s1, s2] = *witness else { return false };
            if !domain.contains(&s1) || !domain.contains(&s2) {
                return false;
            }
            let (v1, v2) = (value(table, s1), value(table, s2));
            v1.is_subset_of(s2) && v2.is_subset_of(s1) && v1 != v2
        }
        Shape::S4 => {
            let [s1, s2] = *witness else { return false };
            domain.contains(&s1)
                && domain.contains(&s2)
                && value(table, s1).is_subset_of(s1)
                && s1.is_subset_of(s2)
                && !value(table, s2).is_subset_of(s2)
        }
        Shape::S5 | Shape::S5E => {
            // the witness is a cycle of distinct sets; every consecutive
            // edge, including the closing one, must be derivable from the
            // postulate text
            if witness.len() < 2 {
                return false;
            }
            let distinct: std::collections::BTreeSet<_> = witness.iter().collect();
            if distinct.len() != witness.len() {
                return false;
            }
            (0..witness.len()).all(|i| {
                let x = witness[i];
                let y = witness[(i + 1) % witness.len()];
                match shape {
                    Shape::S5 => {
                        let u = x.union(y);
                        domain.contains(&u) && value(table, u) == x
                    }
                    Shape::S5E => domain
                        .iter()
                        .any(|&w| x.union(y).is_subset_of(w) && value(table, w) == x),
                    _ => unreachable!(),
                }
            })
        }
        Shape::S6 | Shape::S6E => {
            let [s1, s2, s3] = *witness else { return false };
            if !domain.contains(&s1) || !domain.contains(&s2) {
                return false;
            }
            let union12 = s1.union(s2);
            let union13 = s1.union(s3);
            domain.contains(&union12)
                && value(table, union12) == s3
                && domain.contains(&union13)
                && value(table, union13) != s3
        }
    }
}
