mod common;

use common::{atom, formula, surface_formula};
use proptest::prelude::*;
use twoint_core::Formula;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn print_then_parse_is_identity(f in surface_formula(6)) {
        let text = f.to_string();
        prop_assert_eq!(Formula::parse(&text).unwrap(), f, "{}", text);
    }

    #[test]
    fn expansion_is_snot_free_and_idempotent(f in surface_formula(4)) {
        let e = f.expand_strong_negation();
        prop_assert!(e.is_snot_free());
        prop_assert_eq!(e.expand_strong_negation(), e);
    }

    #[test]
    fn expansion_fixes_snot_free_formulas(f in formula(5)) {
        prop_assert_eq!(f.expand_strong_negation(), f);
    }

    #[test]
    fn expansion_commutes_with_substitution(f in surface_formula(3), p in atom(), g in formula(2)) {
        let Formula::Atom(p) = p else { unreachable!() };
        prop_assert_eq!(
            f.substitute(&p, &g).expand_strong_negation(),
            f.expand_strong_negation().substitute(&p, &g.expand_strong_negation())
        );
    }

    #[test]
    fn substituting_an_absent_atom_is_identity(f in formula(4), g in formula(2)) {
        prop_assert_eq!(f.substitute("zz", &g), f);
    }
}

#[test]
fn unicode_and_ascii_agree() {
    let ascii = Formula::parse("~a & T -> F | (b -< c)").unwrap();
    let unicode = Formula::parse("∼a ∧ ⊤ → ⊥ ∨ (b ⤙ c)").unwrap();
    assert_eq!(ascii, unicode);
}

#[test]
fn nested_negation_expands_twice() {
    let a = Formula::atom("a");
    let once = Formula::negation_definiens(&a);
    let nested = Formula::parse("~~a").unwrap().expand_strong_negation();
    // Independent construction of the template applied to `once`.
    let expected = Formula::parse(&format!(
        "(({o}) & (({o}) -> (({o}) -< ({o})))) | ((({o}) -> ({o})) -< ({o}))",
        o = once
    ))
    .unwrap();
    assert_eq!(nested, expected);
}
