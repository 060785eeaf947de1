//! Brute-force ground truth at desk scale.
//!
//! Everything here decides by exhaustion: all linear orders on the realizable
//! family (optionally those with a fixed least element), all feasible choice
//! tables, representability by trying every order. The guards keep the full
//! sweeps comfortably inside a test run; they are not soft limits, callers
//! get a hard error instead of an open-ended enumeration.

use thiserror::Error;

use crate::axioms::{all_hold, general_suite};
use crate::structures::{
    table_from_order, AlternativeSet, ChoiceFunctionTable, LinearSetOrder,
    RestrictedChoiceStructure,
};

/// Orders are enumerated only for realizable families up to this size (8! =
/// 40320 permutations).
pub const MAX_REALIZABLE: usize = 8;
/// Tables are enumerated only for domains up to this size.
pub const MAX_DOMAIN: usize = 20;
/// Hard cap on the number of tables a single enumeration may produce.
pub const MAX_TABLES: u64 = 2_000_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OracleError {
    #[error("instance too large for exhaustive search: {0}")]
    TooLarge(String),
    #[error("input family is not union-closed")]
    NotUnionClosed,
}

impl OracleError {
    pub fn kind(&self) -> &'static str {
        match self {
            OracleError::TooLarge(_) => "too_large",
            OracleError::NotUnionClosed => "not_union_closed",
        }
    }
}

/// Exhaustive verdict for one table: whether some order with the table's
/// fallback as least element reproduces it, and whether the postulate suite
/// holds. The two must agree on every instance.
#[derive(Clone, Debug)]
pub struct OracleVerdict {
    pub table: ChoiceFunctionTable,
    pub representable: bool,
    pub witness_order: Option<LinearSetOrder>,
    pub axioms_hold: bool,
}

/// Streams every linear order on the realizable family of `structure` as a
/// chain, in lexicographic order of the underlying permutation. With `least`
/// given, only orders whose minimum is that set are produced.
pub fn enumerate_orders(
    structure: &RestrictedChoiceStructure,
    least: Option<AlternativeSet>,
) -> Result<OrderEnumeration, OracleError> {
    let realizable: Vec<AlternativeSet> = structure.realizable().iter().copied().collect();
    if realizable.len() > MAX_REALIZABLE {
        return Err(OracleError::TooLarge(format!(
            "{} realizable sets, maximum is {MAX_REALIZABLE}",
            realizable.len()
        )));
    }
    let (head, tail) = match least {
        Some(k) => {
            let tail: Vec<AlternativeSet> =
                realizable.iter().copied().filter(|&e| e != k).collect();
            // a least element outside the family admits no orders at all
            if tail.len() == realizable.len() {
                return Ok(OrderEnumeration {
                    head: None,
                    tail,
                    exhausted: true,
                    first: false,
                });
            }
            (Some(k), tail)
        }
        None => (None, realizable),
    };
    Ok(OrderEnumeration {
        head,
        tail,
        exhausted: false,
        first: true,
    })
}

/// Iterator behind [`enumerate_orders`].
pub struct OrderEnumeration {
    head: Option<AlternativeSet>,
    tail: Vec<AlternativeSet>,
    exhausted: bool,
    first: bool,
}

impl OrderEnumeration {
    fn current(&self) -> LinearSetOrder {
        let mut chain = Vec::with_capacity(self.tail.len() + 1);
        if let Some(k) = self.head {
            chain.push(k);
        }
        chain.extend(self.tail.iter().copied());
        LinearSetOrder::from_chain(chain).expect("permutation elements are distinct")
    }

    /// Standard next-permutation step on the tail.
    fn advance(&mut self) -> bool {
        let n = self.tail.len();
        if n < 2 {
            return false;
        }
        let mut i = n - 1;
        while i > 0 && self.tail[i - 1] >= self.tail[i] {
            i -= 1;
        }
        if i == 0 {
            return false;
        }
        let mut j = n - 1;
        while self.tail[j] <= self.tail[i - 1] {
            j -= 1;
        }
        self.tail.swap(i - 1, j);
        self.tail[i..].reverse();
        true
    }
}

impl Iterator for OrderEnumeration {
    type Item = LinearSetOrder;

    fn next(&mut self) -> Option<LinearSetOrder> {
        if self.exhausted {
            return None;
        }
        if self.first {
            self.first = false;
            return Some(self.current());
        }
        if self.advance() {
            Some(self.current())
        } else {
            self.exhausted = true;
            None
        }
    }
}

/// Streams every feasible table for `structure` with the given fallback:
/// per input, any realizable subset when one exists, the fallback otherwise.
pub fn enumerate_tables(
    structure: &RestrictedChoiceStructure,
    fallback: AlternativeSet,
) -> Result<TableEnumeration, OracleError> {
    if structure.domain().len() > MAX_DOMAIN {
        return Err(OracleError::TooLarge(format!(
            "{} domain inputs, maximum is {MAX_DOMAIN}",
            structure.domain().len()
        )));
    }
    let inputs: Vec<AlternativeSet> = structure.domain().iter().copied().collect();
    let choices: Vec<Vec<AlternativeSet>> = inputs
        .iter()
        .map(|&s| {
            let candidates = structure.candidates(s);
            if candidates.is_empty() {
                vec![fallback]
            } else {
                candidates
            }
        })
        .collect();
    let mut count: u64 = 1;
    for c in &choices {
        count = count.saturating_mul(c.len() as u64);
        if count > MAX_TABLES {
            return Err(OracleError::TooLarge(format!(
                "more than {MAX_TABLES} feasible tables"
            )));
        }
    }
    Ok(TableEnumeration {
        structure: structure.clone(),
        fallback,
        inputs,
        choices,
        counters: None,
        done: false,
    })
}

/// Iterator behind [`enumerate_tables`].
pub struct TableEnumeration {
    structure: RestrictedChoiceStructure,
    fallback: AlternativeSet,
    inputs: Vec<AlternativeSet>,
    choices: Vec<Vec<AlternativeSet>>,
    counters: Option<Vec<usize>>,
    done: bool,
}

impl Iterator for TableEnumeration {
    type Item = ChoiceFunctionTable;

    fn next(&mut self) -> Option<ChoiceFunctionTable> {
        if self.done {
            return None;
        }
        match &mut self.counters {
            None => self.counters = Some(vec![0; self.inputs.len()]),
            Some(counters) => {
                let mut pos = 0;
                loop {
                    if pos == counters.len() {
                        self.done = true;
                        return None;
                    }
                    counters[pos] += 1;
                    if counters[pos] < self.choices[pos].len() {
                        break;
                    }
                    counters[pos] = 0;
                    pos += 1;
                }
            }
        }
        let counters = self.counters.as_ref().unwrap();
        let map = self
            .inputs
            .iter()
            .enumerate()
            .map(|(i, &s)| (s, self.choices[i][counters[i]]))
            .collect();
        Some(
            ChoiceFunctionTable::new(self.structure.clone(), self.fallback, map)
                .expect("enumerated tables are structurally valid"),
        )
    }
}

/// Decides by exhaustion whether some linear order with the table's fallback
/// as least element reproduces the table, and cross-records the postulate
/// suite's verdict.
pub fn decide_representable(table: &ChoiceFunctionTable) -> Result<OracleVerdict, OracleError> {
    let axioms_hold = all_hold(&general_suite(table));
    let mut witness_order = None;
    for order in enumerate_orders(table.structure(), Some(table.fallback()))? {
        let tabulated = table_from_order(&order, table.fallback(), table.structure())
            .expect("full-carrier orders always tabulate");
        if &tabulated == table {
            witness_order = Some(order);
            break;
        }
    }
    Ok(OracleVerdict {
        table: table.clone(),
        representable: witness_order.is_some(),
        witness_order,
        axioms_hold,
    })
}

/// Exhaustively verifies, over every feasible table and fallback of a
/// union-closed structure, that the union-form chain/union postulates hold
/// exactly when their existential forms do.
pub fn cross_check_prop4(structure: &RestrictedChoiceStructure) -> Result<bool, OracleError> {
    use crate::axioms::{check_ss, check_ss_e, SsAxiom, SsExtAxiom};
    if !structure.is_union_closed() {
        return Err(OracleError::NotUnionClosed);
    }
    for &fallback in structure.realizable() {
        for table in enumerate_tables(structure, fallback)? {
            let union_form =
                check_ss(&table, SsAxiom::Ss5).holds && check_ss(&table, SsAxiom::Ss6).holds;
            let existential_form = check_ss_e(&table, SsExtAxiom::Ss5E).holds
                && check_ss_e(&table, SsExtAxiom::Ss6E).holds;
            if union_form != existential_form {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Summary of a full oracle sweep, as reported by the command line.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SweepSummary {
    pub tables_checked: u64,
    pub representable: u64,
    pub equivalence_violations: u64,
}

/// Runs [`decide_representable`] over every feasible table of `structure`
/// (for one fallback, or all of them) and counts disagreements between
/// exhaustion and the postulate suite.
pub fn sweep(
    structure: &RestrictedChoiceStructure,
    fallback: Option<AlternativeSet>,
) -> Result<SweepSummary, OracleError> {
    let fallbacks: Vec<AlternativeSet> = match fallback {
        Some(k) => vec![k],
        None => structure.realizable().iter().copied().collect(),
    };
    let mut summary = SweepSummary::default();
    for k in fallbacks {
        for table in enumerate_tables(structure, k)? {
            let verdict = decide_representable(&table)?;
            summary.tables_checked += 1;
            if verdict.representable {
                summary.representable += 1;
            }
            if verdict.representable != verdict.axioms_hold {
                summary.equivalence_violations += 1;
            }
        }
    }
    Ok(summary)
}
