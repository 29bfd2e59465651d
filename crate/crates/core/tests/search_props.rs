mod common;

use std::time::{Duration, Instant};

use common::{formula, mode};
use proptest::prelude::*;
use twoint_core::kernel::{check, Judgment, Mode, ProofTree, RuleId};
use twoint_core::search::{search, CandidatePool, SearchConfig};
use twoint_core::Formula;

fn judgment() -> impl Strategy<Value = Judgment> {
    (
        prop::collection::vec(formula(1), 0..=2),
        prop::collection::vec(formula(1), 0..=2),
        mode(),
        formula(2),
    )
        .prop_map(|(g, d, m, goal)| Judgment::new(g, d, m, goal))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn returned_trees_check(j in judgment(), depth in 1usize..=4) {
        if let Some(t) = search(&j, &SearchConfig::with_depth(depth)) {
            let r = check(&t, &j);
            prop_assert!(r.valid(), "{}: {:?}", j, r.violations);
            prop_assert!(t.height() <= depth);
        }
    }

    #[test]
    fn success_is_monotone_in_depth(j in judgment(), depth in 1usize..=3) {
        if search(&j, &SearchConfig::with_depth(depth)).is_some() {
            prop_assert!(search(&j, &SearchConfig::with_depth(depth + 1)).is_some());
        }
    }

    #[test]
    fn search_is_deterministic(j in judgment()) {
        let cfg = SearchConfig::with_depth(3);
        prop_assert_eq!(search(&j, &cfg), search(&j, &cfg));
    }
}

#[test]
fn spec_examples() {
    let a = Formula::atom("a");
    let t = search(&Judgment::new([], [], Mode::Proof, Formula::imp(a.clone(), a.clone())), &SearchConfig::with_depth(3)).unwrap();
    assert_eq!(
        t,
        ProofTree::infer(RuleId::ImpIPos, Formula::imp(a.clone(), a.clone()), Mode::Proof, vec![ProofTree::discharged(a.clone(), Mode::Proof, 1)])
            .with_label(1)
    );
    let t = search(&Judgment::new([], [], Mode::Dual, Formula::Bot), &SearchConfig::with_depth(1)).unwrap();
    assert_eq!(t, ProofTree::infer(RuleId::BotINeg, Formula::Bot, Mode::Dual, vec![]));
}

#[test]
fn definiens_is_found_at_golden_height() {
    let a = Formula::atom("a");
    let j = Judgment::new([], [a.clone()], Mode::Proof, Formula::negation_definiens(&a));
    // The expansion of snotI+ has height 4.
    assert!(search(&j, &SearchConfig::with_depth(3)).is_none());
    let t = search(&j, &SearchConfig::with_depth(4)).unwrap();
    assert!(check(&t, &j).valid());
}

#[test]
fn exhaustive_failure_terminates_quickly() {
    let (a, b) = (Formula::atom("a"), Formula::atom("b"));
    let started = Instant::now();
    let j = Judgment::new([], [], Mode::Proof, Formula::or(Formula::imp(a.clone(), b.clone()), Formula::imp(b, a)));
    assert!(search(&j, &SearchConfig::with_depth(8)).is_none());
    assert!(started.elapsed() < Duration::from_secs(5));
}

#[test]
fn explicit_pool_is_respected() {
    let a = Formula::atom("a");
    let ab = Formula::and(a.clone(), Formula::atom("b"));
    let j = Judgment::new([ab.clone()], [], Mode::Proof, a);
    let none = SearchConfig { depth_bound: 3, candidate_pool: CandidatePool::Formulas(vec![]) };
    assert!(search(&j, &none).is_none());
    let some = SearchConfig { depth_bound: 3, candidate_pool: CandidatePool::Formulas(vec![ab]) };
    assert!(check(&search(&j, &some).unwrap(), &j).valid());
}
