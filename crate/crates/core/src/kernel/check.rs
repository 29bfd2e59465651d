//! The checker: decides whether a [`ProofTree`] is a proof (or dual proof)
//! of a goal from assumptions Γ and counter-assumptions Δ.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use super::rules::{Bindings, Line, Mode, RuleDescriptor};
use super::tree::{Inference, ProofTree, Rule};
use crate::formula::Formula;

/// The claim `(Γ; Δ) ⊢+ goal` (mode [`Mode::Proof`]) or `(Γ; Δ) ⊢− goal`
/// (mode [`Mode::Dual`]).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Judgment {
    pub gamma: BTreeSet<Formula>,
    pub delta: BTreeSet<Formula>,
    pub mode: Mode,
    pub goal: Formula,
}

impl Judgment {
    pub fn new(
        gamma: impl IntoIterator<Item = Formula>,
        delta: impl IntoIterator<Item = Formula>,
        mode: Mode,
        goal: Formula,
    ) -> Judgment {
        Judgment {
            gamma: gamma.into_iter().collect(),
            delta: delta.into_iter().collect(),
            mode,
            goal,
        }
    }

    pub fn substitute(&self, atom: &str, replacement: &Formula) -> Judgment {
        Judgment {
            gamma: self.gamma.iter().map(|f| f.substitute(atom, replacement)).collect(),
            delta: self.delta.iter().map(|f| f.substitute(atom, replacement)).collect(),
            mode: self.mode,
            goal: self.goal.substitute(atom, replacement),
        }
    }

    pub fn expand_strong_negation(&self) -> Judgment {
        Judgment {
            gamma: self.gamma.iter().map(Formula::expand_strong_negation).collect(),
            delta: self.delta.iter().map(Formula::expand_strong_negation).collect(),
            mode: self.mode,
            goal: self.goal.expand_strong_negation(),
        }
    }

    pub fn is_snot_free(&self) -> bool {
        self.goal.is_snot_free()
            && self.gamma.iter().all(Formula::is_snot_free)
            && self.delta.iter().all(Formula::is_snot_free)
    }
}

impl fmt::Display for Judgment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn list(f: &mut fmt::Formatter<'_>, set: &BTreeSet<Formula>) -> fmt::Result {
            for (i, g) in set.iter().enumerate() {
                if i > 0 {
                    f.write_str(", ")?;
                }
                write!(f, "{g}")?;
            }
            Ok(())
        }
        f.write_str("(")?;
        list(f, &self.gamma)?;
        f.write_str("; ")?;
        list(f, &self.delta)?;
        let turnstile = match self.mode {
            Mode::Proof => "⊢+",
            Mode::Dual => "⊢-",
        };
        write!(f, ") {turnstile} {}", self.goal)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ViolationCode {
    UnknownRuleShape,
    ModeMismatch,
    DashedNonUniform,
    UnboundDischargeLabel,
    WrongBracketKind,
    LeafNotInContext,
    RootMismatch,
    UnusedContextFormula,
}

impl ViolationCode {
    pub fn as_str(self) -> &'static str {
        match self {
            ViolationCode::UnknownRuleShape => "UnknownRuleShape",
            ViolationCode::ModeMismatch => "ModeMismatch",
            ViolationCode::DashedNonUniform => "DashedNonUniform",
            ViolationCode::UnboundDischargeLabel => "UnboundDischargeLabel",
            ViolationCode::WrongBracketKind => "WrongBracketKind",
            ViolationCode::LeafNotInContext => "LeafNotInContext",
            ViolationCode::RootMismatch => "RootMismatch",
            ViolationCode::UnusedContextFormula => "UnusedContextFormula",
        }
    }
}

impl fmt::Display for ViolationCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A defect located at a child-index path from the root.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub path: Vec<usize>,
    pub code: ViolationCode,
    pub message: String,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} at {:?}: {}", self.code, self.path, self.message)
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CheckReport {
    pub violations: Vec<Violation>,
    /// Γ members used by undischarged proof-mode leaves (`T` excluded).
    pub used_gamma: BTreeSet<Formula>,
    /// Δ members used by undischarged dual-mode leaves (`F` excluded).
    pub used_delta: BTreeSet<Formula>,
}

impl CheckReport {
    pub fn valid(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn has(&self, code: ViolationCode) -> bool {
        self.violations.iter().any(|v| v.code == code)
    }
}

/// Checks `tree` against `judgment` using only the primitive rules.
pub fn check(tree: &ProofTree, judgment: &Judgment) -> CheckReport {
    Checker { judgment, allow_derived: false }.run(tree)
}

/// Like [`check`], and additionally requires every member of Γ and Δ to be used.
pub fn check_judgment_strictness(tree: &ProofTree, judgment: &Judgment) -> CheckReport {
    let mut report = check(tree, judgment);
    add_unused(&mut report, judgment);
    report
}

/// Checks with the four strong-negation rules available as primitives.
pub(crate) fn check_with_derived(tree: &ProofTree, judgment: &Judgment) -> CheckReport {
    Checker { judgment, allow_derived: true }.run(tree)
}

pub(crate) fn add_unused(report: &mut CheckReport, judgment: &Judgment) {
    let unused_gamma = judgment.gamma.difference(&report.used_gamma);
    let unused_delta = judgment.delta.difference(&report.used_delta);
    let found: Vec<Violation> = unused_gamma
        .map(|f| (f, "assumption"))
        .chain(unused_delta.map(|f| (f, "counter-assumption")))
        .map(|(f, what)| Violation {
            path: Vec::new(),
            code: ViolationCode::UnusedContextFormula,
            message: format!("{what} {f} is never used"),
        })
        .collect();
    report.violations.extend(found);
}

/// A bracket in scope: leaves labelled `label` of mode `kind` must carry
/// `formula` (any formula when the binder's own shape was unusable).
struct Scope {
    label: u32,
    kind: Mode,
    formula: Option<Formula>,
}

pub(crate) fn schema(rule: Rule) -> RuleDescriptor<Rule> {
    fn widen<R: Copy>(d: &RuleDescriptor<R>, id: Rule) -> RuleDescriptor<Rule> {
        RuleDescriptor {
            id,
            premises: d.premises,
            conclusion: d.conclusion,
            discharges: d.discharges,
        }
    }
    match rule {
        Rule::Kernel(id) => widen(id.descriptor(), rule),
        Rule::Derived(id) => widen(id.descriptor(), rule),
    }
}

struct Checker<'j> {
    judgment: &'j Judgment,
    allow_derived: bool,
}

impl Checker<'_> {
    fn run(&self, tree: &ProofTree) -> CheckReport {
        let mut report = CheckReport::default();
        let j = self.judgment;
        if tree.conclusion() != &j.goal || tree.mode() != j.mode {
            report.violations.push(Violation {
                path: Vec::new(),
                code: ViolationCode::RootMismatch,
                message: format!(
                    "root is a {} of {}, expected a {} of {}",
                    tree.mode(),
                    tree.conclusion(),
                    j.mode,
                    j.goal
                ),
            });
        }
        let mut path = Vec::new();
        let mut scopes = Vec::new();
        self.visit(tree, &mut path, &mut scopes, &mut report);
        report
    }

    fn visit(
        &self,
        tree: &ProofTree,
        path: &mut Vec<usize>,
        scopes: &mut Vec<Scope>,
        report: &mut CheckReport,
    ) {
        let mut violation = |code, message| {
            report.violations.push(Violation { path: path.clone(), code, message });
        };
        match tree {
            ProofTree::Hypothesis { formula, mode } => {
                let (context, constant) = match mode {
                    Mode::Proof => (&self.judgment.gamma, Formula::Top),
                    Mode::Dual => (&self.judgment.delta, Formula::Bot),
                };
                if *formula == constant {
                    // Same as the zero-premise topI+ / botI- rule.
                } else if context.contains(formula) {
                    match mode {
                        Mode::Proof => report.used_gamma.insert(formula.clone()),
                        Mode::Dual => report.used_delta.insert(formula.clone()),
                    };
                } else {
                    let ctx = if *mode == Mode::Proof { "Γ" } else { "Δ" };
                    violation(
                        ViolationCode::LeafNotInContext,
                        format!("{mode} leaf {formula} is not in {ctx}"),
                    );
                }
            }
            ProofTree::Discharged { formula, mode, label } => {
                match scopes.iter().rev().find(|s| s.label == *label) {
                    None => violation(
                        ViolationCode::UnboundDischargeLabel,
                        format!("no enclosing rule discharges label {label} on this branch"),
                    ),
                    Some(scope) if scope.kind != *mode => violation(
                        ViolationCode::WrongBracketKind,
                        format!(
                            "label {label} discharges {} here, not {}",
                            bracket_name(scope.kind),
                            bracket_name(*mode)
                        ),
                    ),
                    Some(Scope { formula: Some(expected), .. }) if expected != formula => {
                        violation(
                            ViolationCode::WrongBracketKind,
                            format!("label {label} discharges {expected} here, not {formula}"),
                        )
                    }
                    Some(_) => {}
                }
            }
            ProofTree::Node(node) => self.visit_node(node, path, scopes, report),
        }
    }

    fn visit_node(
        &self,
        node: &Inference,
        path: &mut Vec<usize>,
        scopes: &mut Vec<Scope>,
        report: &mut CheckReport,
    ) {
        let mut push = |path: &Vec<usize>, code, message| {
            report.violations.push(Violation { path: path.clone(), code, message });
        };

        let usable = match node.rule {
            Rule::Derived(_) if !self.allow_derived => {
                push(
                    path,
                    ViolationCode::UnknownRuleShape,
                    format!("{} is a derived rule; elaborate the tree first", node.rule),
                );
                false
            }
            _ => true,
        };
        let desc = schema(node.rule);
        let arity_ok = desc.premises.len() == node.premises.len();
        if usable && !arity_ok {
            push(
                path,
                ViolationCode::UnknownRuleShape,
                format!(
                    "{} takes {} premise(s), found {}",
                    node.rule,
                    desc.premises.len(),
                    node.premises.len()
                ),
            );
        }
        let checked = usable && arity_ok;

        let mut bindings = Bindings::default();
        if checked {
            // Dashed positions.
            if desc.dashed() {
                let inst = node.dashed.unwrap_or(node.mode);
                let conclusion_ok = node.mode == inst;
                let premises_ok = desc
                    .premises
                    .iter()
                    .zip(&node.premises)
                    .all(|(slot, p)| slot.line != Line::Dashed || p.mode() == inst);
                if !conclusion_ok || !premises_ok {
                    push(
                        path,
                        ViolationCode::DashedNonUniform,
                        format!("dashed lines of {} are not all read as {inst}", node.rule),
                    );
                }
            } else if node.dashed.is_some() {
                push(
                    path,
                    ViolationCode::DashedNonUniform,
                    format!("{} has no dashed lines to instantiate", node.rule),
                );
            }

            // Fixed modes.
            if let Line::Fixed(m) = desc.conclusion.line {
                if node.mode != m {
                    push(
                        path,
                        ViolationCode::ModeMismatch,
                        format!("{} concludes a {m}, node claims a {}", node.rule, node.mode),
                    );
                }
            }
            for (i, (slot, premise)) in desc.premises.iter().zip(&node.premises).enumerate() {
                if let Line::Fixed(m) = slot.line {
                    if premise.mode() != m {
                        path.push(i);
                        push(
                            path,
                            ViolationCode::ModeMismatch,
                            format!("premise {} of {} must be a {m}", i + 1, node.rule),
                        );
                        path.pop();
                    }
                }
            }

            // Shapes.
            let mut shape_ok = desc.conclusion.shape.matches(&node.conclusion, &mut bindings);
            for (slot, premise) in desc.premises.iter().zip(&node.premises) {
                shape_ok = shape_ok && slot.shape.matches(premise.conclusion(), &mut bindings);
            }
            if !shape_ok {
                let premises: Vec<String> =
                    node.premises.iter().map(|p| format!("{}", p.conclusion())).collect();
                push(
                    path,
                    ViolationCode::UnknownRuleShape,
                    format!(
                        "{} does not derive {} from [{}]",
                        node.rule,
                        node.conclusion,
                        premises.join(", ")
                    ),
                );
            }

            if node.label.is_some() && !desc.discharges_anything() {
                push(
                    path,
                    ViolationCode::UnknownRuleShape,
                    format!("{} discharges nothing but carries a label", node.rule),
                );
            }
        }

        for (i, premise) in node.premises.iter().enumerate() {
            let before = scopes.len();
            if let (true, Some(label)) = (checked, node.label) {
                for d in desc.discharges_in(i) {
                    scopes.push(Scope {
                        label,
                        kind: d.kind,
                        formula: d.shape.instantiate(&bindings),
                    });
                }
            }
            path.push(i);
            self.visit(premise, path, scopes, report);
            path.pop();
            scopes.truncate(before);
        }
    }
}

fn bracket_name(kind: Mode) -> &'static str {
    match kind {
        Mode::Proof => "assumptions [·]",
        Mode::Dual => "counter-assumptions ⟦·⟧",
    }
}

/// An unbound discharge label met by [`open_hypotheses`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnboundDischargeLabel {
    pub path: Vec<usize>,
    pub label: u32,
}

impl fmt::Display for UnboundDischargeLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "UnboundDischargeLabel at {:?}: label {}", self.path, self.label)
    }
}

impl core::error::Error for UnboundDischargeLabel {}

/// Undischarged leaves: proof-mode leaf formulas other than `T`, and
/// dual-mode leaf formulas other than `F`.
pub fn open_hypotheses(
    tree: &ProofTree,
) -> Result<(BTreeSet<Formula>, BTreeSet<Formula>), UnboundDischargeLabel> {
    fn walk(
        tree: &ProofTree,
        path: &mut Vec<usize>,
        scopes: &mut Vec<u32>,
        out: &mut (BTreeSet<Formula>, BTreeSet<Formula>),
    ) -> Result<(), UnboundDischargeLabel> {
        match tree {
            ProofTree::Hypothesis { formula, mode: Mode::Proof } => {
                if *formula != Formula::Top {
                    out.0.insert(formula.clone());
                }
            }
            ProofTree::Hypothesis { formula, mode: Mode::Dual } => {
                if *formula != Formula::Bot {
                    out.1.insert(formula.clone());
                }
            }
            ProofTree::Discharged { label, .. } => {
                if !scopes.contains(label) {
                    return Err(UnboundDischargeLabel { path: path.clone(), label: *label });
                }
            }
            ProofTree::Node(node) => {
                let desc = schema(node.rule);
                for (i, premise) in node.premises.iter().enumerate() {
                    let before = scopes.len();
                    if let Some(label) = node.label {
                        if desc.discharges_in(i).next().is_some() {
                            scopes.push(label);
                        }
                    }
                    path.push(i);
                    walk(premise, path, scopes, out)?;
                    path.pop();
                    scopes.truncate(before);
                }
            }
        }
        Ok(())
    }
    let mut out = (BTreeSet::new(), BTreeSet::new());
    walk(tree, &mut Vec::new(), &mut Vec::new(), &mut out)?;
    Ok(out)
}

/// The minimal judgment a tree could establish: its open hypotheses, root
/// mode and root formula.
pub fn inferred_judgment(tree: &ProofTree) -> Result<Judgment, UnboundDischargeLabel> {
    let (gamma, delta) = open_hypotheses(tree)?;
    Ok(Judgment { gamma, delta, mode: tree.mode(), goal: tree.conclusion().clone() })
}
