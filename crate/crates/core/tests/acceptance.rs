//! Acceptance suite: one test per criterion, each printing a pass line with
//! its measured runtime (visible with `--nocapture`) and enforcing the
//! stated bound. Exhaustive sweeps cover every structure with up to three
//! alternatives whose input and realizable families are the full non-empty
//! powerset, every fallback, and every fallback-minimal linear order or
//! feasible table over them.

mod common;

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use rand::prelude::*;
use rand::rngs::StdRng;

use common::{snack_example, SNACK_APX};
use restricted_choice::argumentation::{
    parse_apx, ChoiceExtensionSemantics, ExtensionSemantics, RealizableSpec,
};
use restricted_choice::axioms::{all_hold, general_suite, replay, ss_suite};
use restricted_choice::change::ChangeOperator;
use restricted_choice::oracle::{decide_representable, enumerate_orders, enumerate_tables};
use restricted_choice::relations::{Carrier, PropertyName, Relation};
use restricted_choice::structures::table_from_order;
use restricted_choice::synthesis::{existence_order, synthesize};
use restricted_choice::{
    AlternativeSet, ChoiceFunctionTable, LinearSetOrder, RestrictedChoiceStructure, Universe,
};

fn finish(criterion: &str, what: &str, started: Instant, bound: Duration) {
    let elapsed = started.elapsed();
    println!("ACCEPTANCE {criterion} PASS: {what} ({elapsed:.2?}, bound {bound:.2?})");
    assert!(
        elapsed < bound,
        "{criterion} exceeded its runtime bound: {elapsed:.2?} >= {bound:.2?}"
    );
}

fn powerset_structure(n: usize) -> RestrictedChoiceStructure {
    let names: Vec<String> = ["a", "b", "c"][..n].iter().map(|s| s.to_string()).collect();
    let u = Universe::new(names).unwrap();
    let nonempty: Vec<AlternativeSet> = u.subsets().filter(|s| !s.is_empty()).collect();
    RestrictedChoiceStructure::new(u, nonempty.clone(), nonempty).unwrap()
}

/// Every (fallback, feasible table) pair of the sweep instance space.
fn sweep_tables(structure: &RestrictedChoiceStructure) -> Vec<ChoiceFunctionTable> {
    structure
        .realizable()
        .iter()
        .flat_map(|&k| enumerate_tables(structure, k).unwrap())
        .collect()
}

#[test]
fn criterion_1_golden_snack_example() {
    let ex = snack_example();
    let salty = ex.set(&["nachos", "pretzels", "dips"]);
    let unbundled = ex.set(&["nachos", "dips"]);
    let pretzels = ex.set(&["pretzels"]);

    let started = Instant::now();
    let first = ex.order.evaluate(ex.fallback, salty);
    let second = ex.order.evaluate(ex.fallback, unbundled);
    let elapsed = started.elapsed();

    assert_eq!(first, pretzels);
    assert_eq!(second, ex.fallback);
    finish(
        "criterion 1",
        "snack example evaluations are exact",
        started,
        Duration::from_millis(1),
    );
    assert!(elapsed < Duration::from_millis(1));
}

#[test]
fn criterion_2_soundness_sweep() {
    let started = Instant::now();
    let mut orders_checked = 0u64;
    for n in 1..=3 {
        let structure = powerset_structure(n);
        for &k in structure.realizable() {
            for order in enumerate_orders(&structure, Some(k)).unwrap() {
                let table = table_from_order(&order, k, &structure).unwrap();
                let mut reports = ss_suite(&table);
                reports.extend(general_suite(&table));
                for report in &reports {
                    assert!(
                        report.holds,
                        "|A|={n}, K={k:?}: {} violated by an order-induced table",
                        report.axiom
                    );
                }
                orders_checked += 1;
            }
        }
    }
    assert_eq!(orders_checked, 1 + 3 * 2 + 7 * 720);
    finish(
        "criterion 2",
        "all order-induced tables satisfy every postulate",
        started,
        Duration::from_secs(30),
    );
}

#[test]
fn criterion_3_completeness_sweep() {
    let started = Instant::now();
    let mut synthesized = 0u64;
    for n in 1..=3 {
        let structure = powerset_structure(n);
        for table in sweep_tables(&structure) {
            if !all_hold(&general_suite(&table)) {
                continue;
            }
            let trace = synthesize(&table)
                .unwrap_or_else(|e| panic!("postulate-satisfying table failed to synthesize: {e}"));
            let back = table_from_order(&trace.final_order, table.fallback(), &structure).unwrap();
            assert_eq!(back, table, "round trip mismatch");
            assert!(trace.final_order.is_k_minimal(table.fallback()));
            synthesized += 1;
        }
    }
    assert!(synthesized > 0);
    finish(
        "criterion 3",
        "every postulate-satisfying table synthesizes and round-trips",
        started,
        Duration::from_secs(60),
    );
}

#[test]
fn criterion_4_oracle_equivalence() {
    let started = Instant::now();
    let mut checked = 0u64;
    for n in 1..=3 {
        let structure = powerset_structure(n);
        for table in sweep_tables(&structure) {
            let verdict = decide_representable(&table).unwrap();
            assert_eq!(
                verdict.representable, verdict.axioms_hold,
                "oracle and postulates disagree at |A|={n}"
            );
            if let Some(order) = &verdict.witness_order {
                let back = table_from_order(order, table.fallback(), &structure).unwrap();
                assert_eq!(back, table);
            }
            // the constructive pipeline succeeds exactly where exhaustion does
            assert_eq!(synthesize(&table).is_ok(), verdict.representable);
            checked += 1;
        }
    }
    assert_eq!(checked, 1 + 9 + 7 * 189);
    finish(
        "criterion 4",
        "brute-force representability equals the postulate verdict",
        started,
        Duration::from_secs(60),
    );
}

#[test]
fn criterion_5_union_form_equivalence() {
    use restricted_choice::oracle::cross_check_prop4;
    let started = Instant::now();
    for n in 1..=3 {
        assert!(cross_check_prop4(&powerset_structure(n)).unwrap());
    }
    // a union-closed structure that is not a full powerset
    let u = Universe::new(["a", "b", "c"]).unwrap();
    let a = u.set_of(["a"]).unwrap();
    let ab = u.set_of(["a", "b"]).unwrap();
    let ac = u.set_of(["a", "c"]).unwrap();
    let abc = u.full_set();
    let structure = RestrictedChoiceStructure::new(u, [a, ab, ac, abc], [a, ab]).unwrap();
    assert!(structure.is_union_closed());
    assert!(cross_check_prop4(&structure).unwrap());
    finish(
        "criterion 5",
        "union and existential postulate forms coincide on union-closed structures",
        started,
        Duration::from_secs(60),
    );
}

#[test]
fn criterion_6_suzumura_extension_contract() {
    let started = Instant::now();
    let mut rng = StdRng::seed_from_u64(0xacce_9706);
    let mut successes = 0u32;
    let mut failures = 0u32;
    for round in 0..1000 {
        let n = rng.gen_range(1..=5);
        let carrier = Carrier::new((0..n).map(AlternativeSet::singleton)).unwrap();
        let density = [0.15, 0.3, 0.5, 0.7][round % 4];
        let pairs = (0..n)
            .flat_map(|i| (0..n).map(move |j| (i, j)))
            .filter(|_| rng.gen_bool(density));
        let relation = Relation::new(carrier, pairs).unwrap();
        let consistent = relation.has_property(PropertyName::Consistent);
        match relation.suzumura_extension() {
            Ok(ext) => {
                assert!(
                    consistent,
                    "extension succeeded on an inconsistent relation"
                );
                assert!(ext.is_total_preorder());
                assert!(relation.pairs().is_subset(ext.pairs()));
                let strict = relation.strict_part();
                let ext_strict = ext.strict_part();
                assert!(
                    strict.pairs().is_subset(ext_strict.pairs()),
                    "a strict pair collapsed"
                );
                successes += 1;
            }
            Err(_) => {
                assert!(!consistent, "extension failed on a consistent relation");
                failures += 1;
            }
        }
    }
    assert!(
        successes > 100 && failures > 100,
        "both branches must be exercised"
    );
    finish(
        "criterion 6",
        "extension succeeds exactly on consistent relations and preserves parts",
        started,
        Duration::from_secs(60),
    );
}

#[test]
fn criterion_7_existence_construction() {
    let started = Instant::now();
    let mut rng = StdRng::seed_from_u64(0xacce_9707);
    let names = ["a", "b", "c", "d"];
    for _ in 0..100 {
        let n = rng.gen_range(1..=4);
        let u = Universe::new(names[..n].iter().copied()).unwrap();
        let subsets: Vec<AlternativeSet> = u.subsets().collect();
        let mut domain: BTreeSet<AlternativeSet> = subsets
            .iter()
            .copied()
            .filter(|_| rng.gen_bool(0.6))
            .collect();
        if domain.is_empty() {
            domain.insert(*subsets.choose(&mut rng).unwrap());
        }
        let pool: Vec<AlternativeSet> = domain.iter().copied().collect();
        let mut realizable: BTreeSet<AlternativeSet> =
            pool.iter().copied().filter(|_| rng.gen_bool(0.5)).collect();
        if realizable.is_empty() {
            realizable.insert(*pool.choose(&mut rng).unwrap());
        }
        let k = *realizable
            .iter()
            .copied()
            .collect::<Vec<_>>()
            .choose(&mut rng)
            .unwrap();
        let structure = RestrictedChoiceStructure::new(u, domain, realizable).unwrap();

        let order = existence_order(&structure, k).unwrap();
        assert!(order.is_k_minimal(k));
        assert!(order.is_smooth(&structure));
        assert!(order.relation().is_linear_order());
        let table = table_from_order(&order, k, &structure).unwrap();
        assert!(table.is_choice_function());
        assert_eq!(table.fallback(), k);
    }
    finish(
        "criterion 7",
        "existence construction yields fallback-minimal linear choice functions",
        started,
        Duration::from_secs(60),
    );
}

#[test]
fn criterion_8_change_bridge() {
    let started = Instant::now();

    // exact revision values on the snack scenario
    let ex = snack_example();
    let domain: BTreeSet<AlternativeSet> = ex.structure.domain().iter().copied().collect();
    let family: Vec<(AlternativeSet, BTreeSet<AlternativeSet>, LinearSetOrder)> = domain
        .iter()
        .map(|&k| {
            if k == ex.fallback {
                (k, ex.structure.realizable().clone(), ex.order.clone())
            } else {
                (
                    k,
                    [k].into_iter().collect(),
                    LinearSetOrder::from_chain([k]).unwrap(),
                )
            }
        })
        .collect();
    let snack_op =
        ChangeOperator::from_orders(ex.universe.clone(), domain.clone(), family).unwrap();
    assert_eq!(
        snack_op
            .revise(ex.fallback, ex.set(&["nachos", "pretzels", "dips"]))
            .unwrap(),
        ex.set(&["pretzels"])
    );
    assert_eq!(
        snack_op
            .revise(ex.fallback, ex.set(&["nachos", "dips"]))
            .unwrap(),
        ex.fallback
    );
    assert!(all_hold(&snack_op.lcr_certify()));

    // every fitted operator passes; random union-closed domains and families
    let mut rng = StdRng::seed_from_u64(0xacce_9708);
    let names = ["a", "b", "c"];
    for _ in 0..10 {
        let n = rng.gen_range(1..=3);
        let u = Universe::new(names[..n].iter().copied()).unwrap();
        let subsets: Vec<AlternativeSet> = u.subsets().collect();
        let mut domain: BTreeSet<AlternativeSet> = subsets
            .iter()
            .copied()
            .filter(|_| rng.gen_bool(0.5))
            .collect();
        if domain.is_empty() {
            domain.insert(*subsets.choose(&mut rng).unwrap());
        }
        // close under union
        loop {
            let mut grown = domain.clone();
            for &s1 in &domain {
                for &s2 in &domain {
                    grown.insert(s1.union(s2));
                }
            }
            if grown == domain {
                break;
            }
            domain = grown;
        }
        let pool: Vec<AlternativeSet> = domain.iter().copied().collect();
        let family: Vec<(AlternativeSet, BTreeSet<AlternativeSet>)> = pool
            .iter()
            .map(|&k| {
                let mut r: BTreeSet<AlternativeSet> =
                    pool.iter().copied().filter(|_| rng.gen_bool(0.5)).collect();
                r.insert(k);
                (k, r)
            })
            .collect();
        let op = ChangeOperator::fit_family(u, domain, family).unwrap();
        assert!(
            all_hold(&op.lcr_certify()),
            "a fitted operator failed certification"
        );
    }

    // a deliberately mutated operator fails with a replayable witness
    let mut broken = snack_op.clone();
    let chocolate = ex.set(&["chocolate"]);
    // the fallback slice now answers {chocolate} on a salty input
    broken
        .set_value(
            ex.fallback,
            ex.set(&["nachos", "pretzels", "dips"]),
            chocolate,
        )
        .unwrap();
    let reports = broken.lcr_certify();
    let violated = reports
        .iter()
        .find(|r| !r.holds)
        .expect("mutation must violate LCR");
    let slice = broken.slice_table(violated.witness[0]).unwrap();
    assert!(
        replay(&slice, violated.axiom, &violated.witness[1..]),
        "witness for {} does not replay",
        violated.axiom
    );

    // a second mutation hits the idempotence postulate: an input covering
    // the current set no longer returns it
    let mut broken = snack_op;
    let full = ex.universe.full_set();
    broken
        .set_value(ex.fallback, full, ex.set(&["pretzels"]))
        .unwrap();
    let reports = broken.lcr_certify();
    let lcr2 = &reports[1];
    assert_eq!(lcr2.axiom.to_string(), "LCR2");
    assert!(!lcr2.holds);
    assert_eq!(lcr2.witness, vec![ex.fallback, full]);
    let slice = broken.slice_table(ex.fallback).unwrap();
    assert!(replay(&slice, lcr2.axiom, &lcr2.witness[1..]));

    finish(
        "criterion 8",
        "change operators certify, and mutations fail with replayable witnesses",
        started,
        Duration::from_secs(60),
    );
}

#[test]
fn criterion_9_argumentation_bridge() {
    let started = Instant::now();

    // the attack graph parses to exactly the five listed attacks
    let af = parse_apx(SNACK_APX).unwrap();
    assert_eq!(af.arguments().len(), 5);
    let mut attacks = af.attacks_named();
    attacks.sort();
    assert_eq!(
        attacks,
        vec![
            ("chocolate", "chillies"),
            ("dips", "chocolate"),
            ("dips", "pretzels"),
            ("pretzels", "dips"),
            ("pretzels", "nachos"),
        ]
    );

    // the choice-based semantics answers the two example queries
    let ex = snack_example();
    let sem = ChoiceExtensionSemantics::new(
        RealizableSpec::Explicit(ex.structure.realizable().clone()),
        ex.fallback,
        Some(ex.order.chain().to_vec()),
    );
    assert_eq!(
        sem.pi_evaluate(&af, ex.set(&["nachos", "pretzels", "dips"]))
            .unwrap(),
        ex.set(&["pretzels"])
    );
    assert_eq!(
        sem.pi_evaluate(&af, ex.set(&["nachos", "dips"])).unwrap(),
        ex.fallback
    );
    assert!(all_hold(&sem.lca_certify(&af).unwrap()));

    // the empty-fallback pathology: with the empty extension as minimum,
    // every query collapses to the empty set
    let degenerate = ChoiceExtensionSemantics::new(
        RealizableSpec::Generated(ExtensionSemantics::ConflictFree),
        AlternativeSet::EMPTY,
        None,
    );
    let resolved = degenerate.resolve(&af).unwrap();
    assert!(resolved.order.is_k_minimal(AlternativeSet::EMPTY));
    for e in af.arguments().subsets() {
        assert_eq!(
            degenerate.pi_evaluate(&af, e).unwrap(),
            AlternativeSet::EMPTY
        );
    }

    finish(
        "criterion 9",
        "attack graph, semantics queries, and the empty-fallback pathology",
        started,
        Duration::from_secs(60),
    );
}
