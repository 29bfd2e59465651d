//! Strong negation as a derived connective.
//!
//! `~A` abbreviates `def(A) = (A & (A -> (A -< A))) | ((A -> A) -< A)`, and the
//! four strong-negation rules are macro rules: each expands into a fixed
//! skeleton of primitive rules around its premise derivation.
//!
//! | rule     | premise            | conclusion          |
//! |----------|--------------------|---------------------|
//! | `snotI+` | dual proof of A    | proof of ~A         |
//! | `snotI-` | proof of A         | dual proof of ~A    |
//! | `snotE+` | proof of ~A        | dual proof of A     |
//! | `snotE-` | dual proof of ~A   | proof of A          |

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::formula::Formula;
use crate::kernel::{
    self, check_judgment_strictness, slot, CheckReport, Inference, Judgment, Line, Mode, Pattern,
    ProofTree, Rule, RuleDescriptor, RuleId, A,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum DerivedRuleId {
    SnotIPos,
    SnotINeg,
    SnotEPos,
    SnotENeg,
}

const SNOT_A: Pattern = Pattern::Snot(&A);
const P: Line = Line::Fixed(Mode::Proof);
const D: Line = Line::Fixed(Mode::Dual);

static DERIVED: [RuleDescriptor<DerivedRuleId>; 4] = [
    RuleDescriptor {
        id: DerivedRuleId::SnotIPos,
        premises: &[slot(A, D)],
        conclusion: slot(SNOT_A, P),
        discharges: &[],
    },
    RuleDescriptor {
        id: DerivedRuleId::SnotINeg,
        premises: &[slot(A, P)],
        conclusion: slot(SNOT_A, D),
        discharges: &[],
    },
    RuleDescriptor {
        id: DerivedRuleId::SnotEPos,
        premises: &[slot(SNOT_A, P)],
        conclusion: slot(A, D),
        discharges: &[],
    },
    RuleDescriptor {
        id: DerivedRuleId::SnotENeg,
        premises: &[slot(SNOT_A, D)],
        conclusion: slot(A, P),
        discharges: &[],
    },
];

impl DerivedRuleId {
    pub const ALL: [DerivedRuleId; 4] = [
        DerivedRuleId::SnotIPos,
        DerivedRuleId::SnotINeg,
        DerivedRuleId::SnotEPos,
        DerivedRuleId::SnotENeg,
    ];

    pub fn name(self) -> &'static str {
        match self {
            DerivedRuleId::SnotIPos => "snotI+",
            DerivedRuleId::SnotINeg => "snotI-",
            DerivedRuleId::SnotEPos => "snotE+",
            DerivedRuleId::SnotENeg => "snotE-",
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            DerivedRuleId::SnotIPos => "~I+",
            DerivedRuleId::SnotINeg => "~I-",
            DerivedRuleId::SnotEPos => "~E+",
            DerivedRuleId::SnotENeg => "~E-",
        }
    }

    pub fn from_name(name: &str) -> Option<DerivedRuleId> {
        DerivedRuleId::ALL.into_iter().find(|id| id.name() == name)
    }

    /// The rule with `~A` as a primitive connective.
    pub fn descriptor(self) -> &'static RuleDescriptor<DerivedRuleId> {
        &DERIVED[self as usize]
    }

    /// Premise of the expanded rule for parameter `a`: formula and mode.
    pub fn expanded_premise(self, a: &Formula) -> (Formula, Mode) {
        match self {
            DerivedRuleId::SnotIPos => (a.clone(), Mode::Dual),
            DerivedRuleId::SnotINeg => (a.clone(), Mode::Proof),
            DerivedRuleId::SnotEPos => (Formula::negation_definiens(a), Mode::Proof),
            DerivedRuleId::SnotENeg => (Formula::negation_definiens(a), Mode::Dual),
        }
    }

    /// Conclusion of the expanded rule for parameter `a`: formula and mode.
    pub fn expanded_conclusion(self, a: &Formula) -> (Formula, Mode) {
        match self {
            DerivedRuleId::SnotIPos => (Formula::negation_definiens(a), Mode::Proof),
            DerivedRuleId::SnotINeg => (Formula::negation_definiens(a), Mode::Dual),
            DerivedRuleId::SnotEPos => (a.clone(), Mode::Dual),
            DerivedRuleId::SnotENeg => (a.clone(), Mode::Proof),
        }
    }
}

impl fmt::Display for DerivedRuleId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A derived rule was applied to a premise (or claimed a conclusion) of the
/// wrong shape.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PremiseShapeMismatch {
    pub path: Vec<usize>,
    pub rule: DerivedRuleId,
    pub message: String,
}

impl fmt::Display for PremiseShapeMismatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PremiseShapeMismatch at {:?} ({}): {}", self.path, self.rule, self.message)
    }
}

impl core::error::Error for PremiseShapeMismatch {}

/// The primitive derivation a derived rule stands for, over the parameter
/// atom `A`. The premise derivation is plugged in at every hole.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExpansionTemplate {
    pub id: DerivedRuleId,
    /// Uses discharge labels `1..=labels` and has, as its only undischarged
    /// leaves, copies of the premise at `holes`.
    pub skeleton: ProofTree,
    pub holes: Vec<Vec<usize>>,
    pub labels: u32,
}

const PARAMETER: &str = "A";

fn node(rule: RuleId, conclusion: Formula, mode: Mode, premises: Vec<ProofTree>) -> ProofTree {
    ProofTree::infer(rule, conclusion, mode, premises)
}

impl ExpansionTemplate {
    pub fn of(id: DerivedRuleId) -> ExpansionTemplate {
        use Mode::{Dual, Proof};
        use RuleId::*;

        let a = Formula::atom(PARAMETER);
        let a_coimp_a = Formula::coimp(a.clone(), a.clone());
        let a_imp_a = Formula::imp(a.clone(), a.clone());
        let a_imp_coimp = Formula::imp(a.clone(), a_coimp_a.clone());
        // def(A) = left | right
        let left = Formula::and(a.clone(), a_imp_coimp.clone());
        let right = Formula::coimp(a_imp_a.clone(), a.clone());
        let def = Formula::or(left.clone(), right.clone());
        let (hole_formula, hole_mode) = id.expanded_premise(&a);
        let hole = || ProofTree::hypothesis(hole_formula.clone(), hole_mode);

        let (skeleton, labels) = match id {
            DerivedRuleId::SnotIPos => {
                let identity =
                    node(ImpIPos, a_imp_a.clone(), Proof, vec![ProofTree::discharged(a.clone(), Proof, 1)])
                        .with_label(1);
                let coimp = node(CoimpIPos, right.clone(), Proof, vec![identity, hole()]);
                (node(OrI2Pos, def, Proof, vec![coimp]), 1)
            }
            DerivedRuleId::SnotINeg => {
                let refute_coimp =
                    node(CoimpINeg, a_coimp_a.clone(), Dual, vec![ProofTree::discharged(a.clone(), Dual, 1)])
                        .with_label(1);
                let refute_imp = node(ImpINeg, a_imp_coimp.clone(), Dual, vec![hole(), refute_coimp]);
                let refute_left = node(AndI2Neg, left.clone(), Dual, vec![refute_imp]);
                let refute_identity =
                    node(ImpINeg, a_imp_a.clone(), Dual, vec![hole(), ProofTree::discharged(a.clone(), Dual, 2)]);
                let refute_right =
                    node(CoimpINeg, right.clone(), Dual, vec![refute_identity]).with_label(2);
                (node(OrINeg, def, Dual, vec![refute_left, refute_right]), 2)
            }
            DerivedRuleId::SnotEPos => {
                let assumed_left = || ProofTree::discharged(left.clone(), Proof, 1);
                let modus_ponens = node(
                    ImpEPos,
                    a_coimp_a.clone(),
                    Proof,
                    vec![
                        node(AndE2Pos, a_imp_coimp.clone(), Proof, vec![assumed_left()]),
                        node(AndE1Pos, a.clone(), Proof, vec![assumed_left()]),
                    ],
                );
                let left_branch = node(CoimpE2Pos, a.clone(), Dual, vec![modus_ponens]);
                let right_branch = node(
                    CoimpE2Pos,
                    a.clone(),
                    Dual,
                    vec![ProofTree::discharged(right.clone(), Proof, 1)],
                );
                let cases = node(OrEPos, a.clone(), Dual, vec![hole(), left_branch, right_branch])
                    .with_dashed(Dual)
                    .with_label(1);
                (cases, 1)
            }
            DerivedRuleId::SnotENeg => {
                let refuted_left = node(OrE1Neg, left.clone(), Dual, vec![hole()]);
                let refuted_right = node(OrE2Neg, right.clone(), Dual, vec![hole()]);
                let refuted_identity = node(
                    CoimpENeg,
                    a_imp_a.clone(),
                    Dual,
                    vec![refuted_right, ProofTree::discharged(a.clone(), Dual, 1)],
                );
                let first = node(ImpE1Neg, a.clone(), Proof, vec![refuted_identity]);
                let second = node(
                    ImpE1Neg,
                    a.clone(),
                    Proof,
                    vec![ProofTree::discharged(a_imp_coimp.clone(), Dual, 1)],
                );
                let cases = node(AndENeg, a.clone(), Proof, vec![refuted_left, first, second])
                    .with_dashed(Proof)
                    .with_label(1);
                (cases, 1)
            }
        };
        let holes = skeleton
            .paths()
            .into_iter()
            .filter(|p| matches!(skeleton.get(p), Some(ProofTree::Hypothesis { .. })))
            .collect();
        ExpansionTemplate { id, skeleton, holes, labels }
    }

    /// Instantiates the parameter with `a`, shifts labels to start at
    /// `first_label`, and plugs `premise` into every hole.
    pub fn instantiate(&self, a: &Formula, premise: &ProofTree, first_label: u32) -> ProofTree {
        let mut tree = self
            .skeleton
            .map_labels(&mut |l| l + first_label - 1)
            .map_formulas(&mut |f| f.substitute(PARAMETER, a));
        for hole in &self.holes {
            *tree.get_mut(hole).expect("hole path") = premise.clone();
        }
        tree
    }
}

fn expand_with_labels(
    id: DerivedRuleId,
    a: &Formula,
    premise: &ProofTree,
    first_label: u32,
    path: &[usize],
) -> Result<ProofTree, PremiseShapeMismatch> {
    let (formula, mode) = id.expanded_premise(a);
    if premise.conclusion() != &formula || premise.mode() != mode {
        return Err(PremiseShapeMismatch {
            path: path.to_vec(),
            rule: id,
            message: format!(
                "premise must be a {mode} of {formula}, found a {} of {}",
                premise.mode(),
                premise.conclusion()
            ),
        });
    }
    Ok(ExpansionTemplate::of(id).instantiate(a, premise, first_label))
}

/// Expands one application of a derived rule with parameter `a` (Snot-free)
/// into primitive rules. Template labels start above the premise's labels.
pub fn expand_rule(
    id: DerivedRuleId,
    a: &Formula,
    premise: &ProofTree,
) -> Result<ProofTree, PremiseShapeMismatch> {
    expand_with_labels(id, a, premise, premise.max_label() + 1, &[])
}

/// Replaces every derived-rule node, bottom-up, by its expansion and removes
/// strong negation from every formula.
pub fn elaborate(tree: &ProofTree) -> Result<ProofTree, PremiseShapeMismatch> {
    let mut next_label = tree.max_label() + 1;
    elaborate_at(tree, &mut Vec::new(), &mut next_label)
}

fn elaborate_at(
    tree: &ProofTree,
    path: &mut Vec<usize>,
    next_label: &mut u32,
) -> Result<ProofTree, PremiseShapeMismatch> {
    let n = match tree {
        ProofTree::Node(n) => n,
        _ => return Ok(tree.map_formulas(&mut Formula::expand_strong_negation)),
    };
    let mut premises = Vec::with_capacity(n.premises.len());
    for (i, p) in n.premises.iter().enumerate() {
        path.push(i);
        premises.push(elaborate_at(p, path, next_label)?);
        path.pop();
    }
    let id = match n.rule {
        Rule::Kernel(_) => {
            return Ok(ProofTree::Node(Inference {
                conclusion: n.conclusion.expand_strong_negation(),
                premises,
                ..n.clone()
            }))
        }
        Rule::Derived(id) => id,
    };
    let mismatch = |message: String| PremiseShapeMismatch { path: path.clone(), rule: id, message };
    let [premise] = <[ProofTree; 1]>::try_from(premises)
        .map_err(|ps| mismatch(format!("takes exactly one premise, found {}", ps.len())))?;
    let a = match (id, &n.conclusion) {
        (DerivedRuleId::SnotIPos | DerivedRuleId::SnotINeg, Formula::Snot(x)) => {
            x.expand_strong_negation()
        }
        (DerivedRuleId::SnotIPos | DerivedRuleId::SnotINeg, other) => {
            return Err(mismatch(format!("concludes a strong negation, not {other}")))
        }
        (_, other) => other.expand_strong_negation(),
    };
    let expected_mode = id.expanded_conclusion(&a).1;
    if n.mode != expected_mode || n.dashed.is_some() || n.label.is_some() {
        return Err(mismatch(format!("concludes a {expected_mode} with no label or dashed reading")));
    }
    let first = *next_label;
    let expanded = expand_with_labels(id, &a, &premise, first, path)?;
    *next_label += ExpansionTemplate::of(id).labels;
    Ok(expanded)
}

/// Checks a tree in which the four strong-negation rules and `~` may occur.
pub fn check_derived(tree: &ProofTree, judgment: &Judgment) -> CheckReport {
    kernel::check_with_derived(tree, judgment)
}

/// [`check_derived`] plus the requirement that all of Γ and Δ are used.
pub fn check_derived_strict(tree: &ProofTree, judgment: &Judgment) -> CheckReport {
    let mut report = kernel::check_with_derived(tree, judgment);
    kernel::add_unused(&mut report, judgment);
    report
}

/// Outcome of checking the expansion of one derived rule.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DefinabilityCase {
    pub rule: DerivedRuleId,
    pub judgment: Judgment,
    pub tree: Result<ProofTree, PremiseShapeMismatch>,
    pub report: CheckReport,
}

impl DefinabilityCase {
    pub fn passed(&self) -> bool {
        self.tree.is_ok() && self.report.valid()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DefinabilityReport {
    pub cases: Vec<DefinabilityCase>,
}

impl DefinabilityReport {
    /// True iff every derived rule's expansion checks.
    pub fn holds(&self) -> bool {
        self.cases.iter().all(DefinabilityCase::passed)
    }
}

/// The hypothesis premise and the judgment its expansion must establish:
/// `({};{a}) ⊢+ def(a)`, `({a};{}) ⊢− def(a)`, `({def(a)};{}) ⊢− a`,
/// `({};{def(a)}) ⊢+ a`.
pub fn canonical_case(id: DerivedRuleId, a: &Formula) -> (ProofTree, Judgment) {
    let (premise, premise_mode) = id.expanded_premise(a);
    let (goal, mode) = id.expanded_conclusion(a);
    let (gamma, delta) = match premise_mode {
        Mode::Proof => (vec![premise.clone()], vec![]),
        Mode::Dual => (vec![], vec![premise.clone()]),
    };
    (ProofTree::hypothesis(premise, premise_mode), Judgment::new(gamma, delta, mode, goal))
}

/// Expands all four derived rules over the atom `a` and checks each.
pub fn verify_definability() -> DefinabilityReport {
    verify_definability_for(&Formula::atom("a"))
}

pub fn verify_definability_for(a: &Formula) -> DefinabilityReport {
    verify_definability_with(a, expand_rule)
}

/// Like [`verify_definability_for`] with a caller-supplied expansion.
pub fn verify_definability_with(
    a: &Formula,
    expand: impl Fn(DerivedRuleId, &Formula, &ProofTree) -> Result<ProofTree, PremiseShapeMismatch>,
) -> DefinabilityReport {
    let cases = DerivedRuleId::ALL
        .into_iter()
        .map(|rule| {
            let (premise, judgment) = canonical_case(rule, a);
            let tree = expand(rule, a, &premise);
            let report = match &tree {
                Ok(t) => check_judgment_strictness(t, &judgment),
                Err(_) => CheckReport::default(),
            };
            DefinabilityCase { rule, judgment, tree, report }
        })
        .collect();
    DefinabilityReport { cases }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::{check, open_hypotheses};
    use alloc::collections::BTreeSet;

    fn a() -> Formula {
        Formula::atom("a")
    }

    #[test]
    fn four_rules_round_trip_names() {
        for id in DerivedRuleId::ALL {
            assert_eq!(DerivedRuleId::from_name(id.name()), Some(id));
            assert_eq!(id.descriptor().id, id);
        }
    }

    #[test]
    fn template_holes_match_premise_uses() {
        let holes: Vec<usize> =
            DerivedRuleId::ALL.iter().map(|id| ExpansionTemplate::of(*id).holes.len()).collect();
        assert_eq!(holes, [1, 2, 1, 2]);
    }

    #[test]
    fn templates_avoid_constants() {
        for id in DerivedRuleId::ALL {
            let t = ExpansionTemplate::of(id).skeleton;
            let mut seen = BTreeSet::new();
            t.map_formulas(&mut |f| {
                f.collect_subformulas(&mut seen);
                f.clone()
            });
            assert!(!seen.contains(&Formula::Top) && !seen.contains(&Formula::Bot), "{id}");
        }
    }

    #[test]
    fn snot_i_pos_expansion() {
        let t = expand_rule(DerivedRuleId::SnotIPos, &a(), &ProofTree::hypothesis(a(), Mode::Dual)).unwrap();
        let j = Judgment::new([], [a()], Mode::Proof, Formula::negation_definiens(&a()));
        assert!(check(&t, &j).valid(), "{:?}", check(&t, &j).violations);
        assert_eq!(t.height(), 4);
        assert_eq!(open_hypotheses(&t).unwrap(), (BTreeSet::new(), [a()].into_iter().collect()));
    }

    #[test]
    fn wrong_premise_is_rejected() {
        let err = expand_rule(DerivedRuleId::SnotIPos, &a(), &ProofTree::hypothesis(a(), Mode::Proof))
            .unwrap_err();
        assert_eq!(err.rule, DerivedRuleId::SnotIPos);
    }

    #[test]
    fn fresh_labels_sit_above_premise_labels() {
        let premise = ProofTree::infer(
            RuleId::ImpIPos,
            Formula::imp(a(), a()),
            Mode::Proof,
            vec![ProofTree::discharged(a(), Mode::Proof, 7)],
        )
        .with_label(7);
        let imp = Formula::imp(a(), a());
        let t = expand_rule(DerivedRuleId::SnotINeg, &imp, &premise).unwrap();
        assert_eq!(t.max_label(), 9);
        let j = Judgment::new([], [], Mode::Dual, Formula::negation_definiens(&imp));
        assert!(check(&t, &j).valid());
    }

    #[test]
    fn verify_definability_holds() {
        let report = verify_definability();
        assert_eq!(report.cases.len(), 4);
        assert!(report.holds());
    }

    #[test]
    fn elaborate_leaves_kernel_trees_alone() {
        let t = ExpansionTemplate::of(DerivedRuleId::SnotENeg).skeleton;
        assert_eq!(elaborate(&t).unwrap(), t);
    }

    #[test]
    fn elaborate_rejects_bad_conclusion() {
        let t = ProofTree::infer(DerivedRuleId::SnotIPos, a(), Mode::Proof, vec![ProofTree::hypothesis(a(), Mode::Dual)]);
        assert!(elaborate(&t).is_err());
    }
}
