#![allow(dead_code)]

use proptest::prelude::*;
use twoint_core::kernel::{Judgment, Mode, ProofTree};
use twoint_core::negation::{canonical_case, expand_rule, DerivedRuleId};
use twoint_core::Formula;

pub fn atom() -> impl Strategy<Value = Formula> {
    prop::sample::select(vec!["a", "b", "c", "p", "q_1"]).prop_map(Formula::atom)
}

fn formula_with(depth: u32, snot: bool) -> BoxedStrategy<Formula> {
    let leaf = prop_oneof![
        4 => atom(),
        1 => Just(Formula::Top),
        1 => Just(Formula::Bot),
    ];
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

/// Formulas that may contain strong negation.
pub fn surface_formula(depth: u32) -> BoxedStrategy<Formula> {
    formula_with(depth, true)
}

pub fn mode() -> impl Strategy<Value = Mode> {
    prop_oneof![Just(Mode::Proof), Just(Mode::Dual)]
}

pub fn derived_rule() -> impl Strategy<Value = DerivedRuleId> {
    prop::sample::select(DerivedRuleId::ALL.to_vec())
}

/// A valid kernel tree with its judgment: one of the four expansions over a
/// random parameter.
pub fn valid_tree() -> impl Strategy<Value = (ProofTree, Judgment)> {
    (derived_rule(), formula(2)).prop_map(|(id, a)| {
        let (premise, judgment) = canonical_case(id, &a);
        (expand_rule(id, &a, &premise).unwrap(), judgment)
    })
}
