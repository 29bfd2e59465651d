#![allow(dead_code)]

use std::path::PathBuf;

use proptest::prelude::*;
use twoint::{parse_script, ProofScript};
use twoint_core::kernel::{Inference, Judgment, Mode, ProofTree, Rule, RuleId};
use twoint_core::negation::{elaborate, DerivedRuleId};
use twoint_core::Formula;

pub fn golden_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests").join("golden")
}

pub fn golden(name: &str) -> ProofScript {
    let text = std::fs::read_to_string(golden_dir().join(name)).expect("golden script");
    parse_script(&text).unwrap_or_else(|e| panic!("{name}: {e}"))
}

/// The four worked derivations, by derived rule, with their undischarged
/// leaves (Γ, Δ) written as formula text.
pub const GOLDEN: [(&str, DerivedRuleId, &[&str], &[&str]); 4] = [
    ("snot_intro_proof.2int", DerivedRuleId::SnotIPos, &[], &["a"]),
    ("snot_intro_dual.2int", DerivedRuleId::SnotINeg, &["a"], &[]),
    ("snot_elim_proof.2int", DerivedRuleId::SnotEPos, &["(a & (a -> (a -< a))) | ((a -> a) -< a)"], &[]),
    ("snot_elim_dual.2int", DerivedRuleId::SnotENeg, &[], &["(a & (a -> (a -< a))) | ((a -> a) -< a)"]),
];

pub fn atom() -> impl Strategy<Value = Formula> {
    prop::sample::select(vec!["a", "b", "c", "p", "q2"]).prop_map(Formula::atom)
}

fn formula_with(depth: u32, snot: bool) -> BoxedStrategy<Formula> {
    let leaf = prop_oneof![4 => atom(), 1 => Just(Formula::Top), 1 => Just(Formula::Bot)];
    leaf.prop_recursive(depth, 64, 2, move |inner| {
        let binary = prop_oneof![
            (inner.clone(), inner.clone()).prop_map(|(l, r)| Formula::and(l, r)),
            (inner.clone(), inner.clone()).prop_map(|(l, r)| Formula::or(l, r)),
            (inner.clone(), inner.clone()).prop_map(|(l, r)| Formula::imp(l, r)),
            (inner.clone(), inner.clone()).prop_map(|(l, r)| Formula::coimp(l, r)),
        ];
        if snot {
            prop_oneof![4 => binary, 1 => inner.prop_map(Formula::snot)].boxed()
        } else {
            binary.boxed()
        }
    })
    .boxed()
}

/// Snot-free formulas of depth at most `depth`.
pub fn formula(depth: u32) -> BoxedStrategy<Formula> {
    formula_with(depth, false)
}

pub fn surface_formula(depth: u32) -> BoxedStrategy<Formula> {
    formula_with(depth, true)
}

pub fn mode() -> impl Strategy<Value = Mode> {
    prop_oneof![Just(Mode::Proof), Just(Mode::Dual)]
}

/// Applies derived rules to a starting leaf, one per step: an elimination
/// when the conclusion is a strong negation and `prefer_elim` says so,
/// otherwise an introduction.
fn derived_chain(start: Formula, start_mode: Mode, steps: &[bool]) -> ProofTree {
    let mut tree = ProofTree::hypothesis(start, start_mode);
    for &prefer_elim in steps {
        let (f, m) = (tree.conclusion().clone(), tree.mode());
        tree = match (&f, m, prefer_elim) {
            (Formula::Snot(inner), Mode::Proof, true) => {
                ProofTree::infer(DerivedRuleId::SnotEPos, (**inner).clone(), Mode::Dual, vec![tree])
            }
            (Formula::Snot(inner), Mode::Dual, true) => {
                ProofTree::infer(DerivedRuleId::SnotENeg, (**inner).clone(), Mode::Proof, vec![tree])
            }
            (_, Mode::Dual, _) => ProofTree::infer(DerivedRuleId::SnotIPos, Formula::snot(f), Mode::Proof, vec![tree]),
            (_, Mode::Proof, _) => ProofTree::infer(DerivedRuleId::SnotINeg, Formula::snot(f), Mode::Dual, vec![tree]),
        };
    }
    tree
}

/// A valid kernel tree with a judgment it establishes: a chain of one to
/// three derived strong-negation steps over a random leaf, elaborated.
pub fn valid_tree() -> impl Strategy<Value = (ProofTree, Judgment)> {
    (formula(2), mode(), prop::collection::vec(any::<bool>(), 1..=3)).prop_map(|(start, m, steps)| {
        let chain = derived_chain(start.clone(), m, &steps);
        let tree = elaborate(&chain).expect("chain is well-shaped");
        let (gamma, delta) = match m {
            Mode::Proof => (vec![start], vec![]),
            Mode::Dual => (vec![], vec![start]),
        };
        let goal = chain.conclusion().expand_strong_negation();
        (tree, Judgment::new(gamma, delta, chain.mode(), goal))
    })
}

fn kernel_rule() -> impl Strategy<Value = Rule> {
    prop::sample::select(RuleId::ALL.to_vec()).prop_map(Rule::Kernel)
}

/// Arbitrary kernel-rule trees, well-formed or not.
pub fn any_tree() -> impl Strategy<Value = ProofTree> {
    let leaf = prop_oneof![
        (formula(3), mode()).prop_map(|(f, m)| ProofTree::hypothesis(f, m)),
        (formula(3), mode(), 1u32..6).prop_map(|(f, m, l)| ProofTree::discharged(f, m, l)),
    ];
    leaf.prop_recursive(4, 40, 3, |inner| {
        (
            kernel_rule(),
            prop::option::of(mode()),
            formula(3),
            mode(),
            prop::option::of(1u32..6),
            prop::collection::vec(inner, 0..=3),
        )
            .prop_map(|(rule, dashed, conclusion, mode, label, premises)| {
                ProofTree::Node(Inference { rule, dashed, conclusion, mode, label, premises })
            })
    })
}
