//! Shared fixtures: the snack-shopping scenario used across the golden and
//! acceptance suites.
#![allow(dead_code)] // not every binary uses every helper
//!
//! Universe: chocolate, nachos, pretzels, dips, chillies. Inputs are the sets
//! where nachos only appear together with dips; realizable outputs are the
//! sets where nachos, dips and chillies are bundled (all or none), excluding
//! the empty purchase. The reference order ranks the bundle-plus-pretzels set
//! first (the fallback), and induces the reference choice table.

use restricted_choice::structures::table_from_order;
use restricted_choice::{
    AlternativeSet, ChoiceFunctionTable, LinearSetOrder, RestrictedChoiceStructure, Universe,
};

pub struct SnackExample {
    pub universe: Universe,
    pub structure: RestrictedChoiceStructure,
    pub order: LinearSetOrder,
    pub fallback: AlternativeSet,
}

impl SnackExample {
    pub fn set(&self, names: &[&str]) -> AlternativeSet {
        self.universe.set_of(names.iter().copied()).unwrap()
    }

    pub fn table(&self) -> ChoiceFunctionTable {
        table_from_order(&self.order, self.fallback, &self.structure).unwrap()
    }
}

pub fn snack_example() -> SnackExample {
    let universe = Universe::new(["chocolate", "nachos", "pretzels", "dips", "chillies"]).unwrap();
    let set = |names: &[&str]| universe.set_of(names.iter().copied()).unwrap();

    let nachos = universe.position_of("nachos").unwrap();
    let dips = universe.position_of("dips").unwrap();
    let domain: Vec<AlternativeSet> = universe
        .subsets()
        .filter(|s| !s.contains(nachos) || s.contains(dips))
        .collect();

    let realizable = vec![
        set(&["pretzels"]),
        set(&["chocolate"]),
        set(&["pretzels", "chocolate"]),
        set(&["nachos", "dips", "chillies"]),
        set(&["pretzels", "nachos", "dips", "chillies"]),
        set(&["chocolate", "nachos", "dips", "chillies"]),
        universe.full_set(),
    ];

    let structure = RestrictedChoiceStructure::new(universe.clone(), domain, realizable).unwrap();

    let fallback = set(&["pretzels", "nachos", "dips", "chillies"]);
    let order = LinearSetOrder::from_chain([
        fallback,
        set(&["nachos", "dips", "chillies"]),
        set(&["pretzels", "chocolate"]),
        set(&["pretzels"]),
        set(&["chocolate"]),
        set(&["chocolate", "nachos", "dips", "chillies"]),
        universe.full_set(),
    ])
    .unwrap();

    SnackExample {
        universe,
        structure,
        order,
        fallback,
    }
}

/// The attack graph fitting the snack scenario, in APX form.
pub const SNACK_APX: &str = "\
arg(chocolate).
arg(nachos).
arg(pretzels).
arg(dips).
arg(chillies).
att(pretzels,nachos).
att(pretzels,dips).
att(dips,pretzels).
att(dips,chocolate).
att(chocolate,chillies).
";
