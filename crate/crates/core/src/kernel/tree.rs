use alloc::vec::Vec;
use core::fmt;

use super::rules::{Mode, RuleId};
use crate::formula::Formula;
use crate::negation::DerivedRuleId;

/// A rule applied at a tree node: either primitive or one of the derived
/// strong-negation rules (which only [`crate::negation::elaborate`] removes).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Rule {
    Kernel(RuleId),
    Derived(DerivedRuleId),
}

impl Rule {
    pub fn name(self) -> &'static str {
        match self {
            Rule::Kernel(id) => id.name(),
            Rule::Derived(id) => id.name(),
        }
    }

    pub fn from_name(name: &str) -> Option<Rule> {
        RuleId::from_name(name)
            .map(Rule::Kernel)
            .or_else(|| DerivedRuleId::from_name(name).map(Rule::Derived))
    }
}

impl From<RuleId> for Rule {
    fn from(id: RuleId) -> Self {
        Rule::Kernel(id)
    }
}

impl From<DerivedRuleId> for Rule {
    fn from(id: DerivedRuleId) -> Self {
        Rule::Derived(id)
    }
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A derivation tree. Each node carries the formula and mode of the line it
/// concludes.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum ProofTree {
    /// An undischarged leaf. A proof-mode leaf claims membership in Γ (or is
    /// `T`), a dual-mode leaf membership in Δ (or is `F`).
    Hypothesis { formula: Formula, mode: Mode },
    /// A bracketed leaf bound by the discharging ancestor carrying `label`:
    /// `[A]` in proof mode, `⟦A⟧` in dual mode.
    Discharged { formula: Formula, mode: Mode, label: u32 },
    Node(Inference),
}

/// One rule application.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Inference {
    pub rule: Rule,
    /// Chosen reading of the dashed lines, for dashed rules.
    pub dashed: Option<Mode>,
    pub conclusion: Formula,
    pub mode: Mode,
    /// Label shared by every bracket this application discharges.
    pub label: Option<u32>,
    pub premises: Vec<ProofTree>,
}

impl ProofTree {
    pub fn hypothesis(formula: Formula, mode: Mode) -> ProofTree {
        ProofTree::Hypothesis { formula, mode }
    }

    pub fn discharged(formula: Formula, mode: Mode, label: u32) -> ProofTree {
        ProofTree::Discharged { formula, mode, label }
    }

    pub fn infer(
        rule: impl Into<Rule>,
        conclusion: Formula,
        mode: Mode,
        premises: Vec<ProofTree>,
    ) -> ProofTree {
        ProofTree::Node(Inference {
            rule: rule.into(),
            dashed: None,
            conclusion,
            mode,
            label: None,
            premises,
        })
    }

    /// Sets the discharge label of a node; no-op on leaves.
    pub fn with_label(mut self, label: u32) -> ProofTree {
        if let ProofTree::Node(n) = &mut self {
            n.label = Some(label);
        }
        self
    }

    /// Sets the dashed instantiation of a node and its own mode to match.
    pub fn with_dashed(mut self, mode: Mode) -> ProofTree {
        if let ProofTree::Node(n) = &mut self {
            n.dashed = Some(mode);
            n.mode = mode;
        }
        self
    }

    pub fn conclusion(&self) -> &Formula {
        match self {
            ProofTree::Hypothesis { formula, .. } | ProofTree::Discharged { formula, .. } => formula,
            ProofTree::Node(n) => &n.conclusion,
        }
    }

    pub fn mode(&self) -> Mode {
        match self {
            ProofTree::Hypothesis { mode, .. } | ProofTree::Discharged { mode, .. } => *mode,
            ProofTree::Node(n) => n.mode,
        }
    }

    pub fn premises(&self) -> &[ProofTree] {
        match self {
            ProofTree::Node(n) => &n.premises,
            _ => &[],
        }
    }

    /// Height of the tree; a leaf or zero-premise node has height 1.
    pub fn height(&self) -> usize {
        1 + self.premises().iter().map(ProofTree::height).max().unwrap_or(0)
    }

    /// Number of leaves and nodes.
    pub fn size(&self) -> usize {
        1 + self.premises().iter().map(ProofTree::size).sum::<usize>()
    }

    /// Largest label used by a node or leaf, 0 if none.
    pub fn max_label(&self) -> u32 {
        match self {
            ProofTree::Hypothesis { .. } => 0,
            ProofTree::Discharged { label, .. } => *label,
            ProofTree::Node(n) => n
                .premises
                .iter()
                .map(ProofTree::max_label)
                .fold(n.label.unwrap_or(0), u32::max),
        }
    }

    pub fn contains_derived_rules(&self) -> bool {
        match self {
            ProofTree::Node(n) => {
                matches!(n.rule, Rule::Derived(_))
                    || n.premises.iter().any(ProofTree::contains_derived_rules)
            }
            _ => false,
        }
    }

    pub fn is_snot_free(&self) -> bool {
        self.conclusion().is_snot_free() && self.premises().iter().all(ProofTree::is_snot_free)
    }

    /// Applies `f` to every formula in the tree.
    pub fn map_formulas(&self, f: &mut impl FnMut(&Formula) -> Formula) -> ProofTree {
        match self {
            ProofTree::Hypothesis { formula, mode } => ProofTree::hypothesis(f(formula), *mode),
            ProofTree::Discharged { formula, mode, label } => {
                ProofTree::discharged(f(formula), *mode, *label)
            }
            ProofTree::Node(n) => ProofTree::Node(Inference {
                rule: n.rule,
                dashed: n.dashed,
                conclusion: f(&n.conclusion),
                mode: n.mode,
                label: n.label,
                premises: n.premises.iter().map(|p| p.map_formulas(f)).collect(),
            }),
        }
    }

    /// Applies `f` to every label, on nodes and leaves alike.
    pub fn map_labels(&self, f: &mut impl FnMut(u32) -> u32) -> ProofTree {
        match self {
            ProofTree::Hypothesis { .. } => self.clone(),
            ProofTree::Discharged { formula, mode, label } => {
                ProofTree::discharged(formula.clone(), *mode, f(*label))
            }
            ProofTree::Node(n) => ProofTree::Node(Inference {
                label: n.label.map(&mut *f),
                premises: n.premises.iter().map(|p| p.map_labels(f)).collect(),
                ..n.clone()
            }),
        }
    }

    /// Uniform substitution applied to every formula in the tree.
    pub fn substitute(&self, atom: &str, replacement: &Formula) -> ProofTree {
        self.map_formulas(&mut |g| g.substitute(atom, replacement))
    }

    /// Subtree at a child-index path.
    pub fn get(&self, path: &[usize]) -> Option<&ProofTree> {
        match path.split_first() {
            None => Some(self),
            Some((&i, rest)) => self.premises().get(i)?.get(rest),
        }
    }

    pub fn get_mut(&mut self, path: &[usize]) -> Option<&mut ProofTree> {
        match path.split_first() {
            None => Some(self),
            Some((&i, rest)) => match self {
                ProofTree::Node(n) => n.premises.get_mut(i)?.get_mut(rest),
                _ => None,
            },
        }
    }

    /// Paths of every position in the tree, in preorder.
    pub fn paths(&self) -> Vec<Vec<usize>> {
        fn walk(t: &ProofTree, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            out.push(prefix.clone());
            for (i, p) in t.premises().iter().enumerate() {
                prefix.push(i);
                walk(p, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        walk(self, &mut Vec::new(), &mut out);
        out
    }

    /// Replaces `T` proof leaves by `topI+` and `F` dual leaves by `botI-`.
    pub fn normalize_constants(&self) -> ProofTree {
        match self {
            ProofTree::Hypothesis { formula: Formula::Top, mode: Mode::Proof } => {
                ProofTree::infer(RuleId::TopIPos, Formula::Top, Mode::Proof, Vec::new())
            }
            ProofTree::Hypothesis { formula: Formula::Bot, mode: Mode::Dual } => {
                ProofTree::infer(RuleId::BotINeg, Formula::Bot, Mode::Dual, Vec::new())
            }
            ProofTree::Hypothesis { .. } | ProofTree::Discharged { .. } => self.clone(),
            ProofTree::Node(n) => ProofTree::Node(Inference {
                premises: n.premises.iter().map(ProofTree::normalize_constants).collect(),
                ..n.clone()
            }),
        }
    }

    /// Inverse of [`ProofTree::normalize_constants`]: zero-premise `topI+` and
    /// `botI-` nodes become constant leaves.
    pub fn denormalize_constants(&self) -> ProofTree {
        match self {
            ProofTree::Node(n) if n.premises.is_empty() && n.label.is_none() => match n.rule {
                Rule::Kernel(RuleId::TopIPos) => ProofTree::hypothesis(n.conclusion.clone(), n.mode),
                Rule::Kernel(RuleId::BotINeg) => ProofTree::hypothesis(n.conclusion.clone(), n.mode),
                _ => self.clone(),
            },
            ProofTree::Node(n) => ProofTree::Node(Inference {
                premises: n.premises.iter().map(ProofTree::denormalize_constants).collect(),
                ..n.clone()
            }),
            _ => self.clone(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn a() -> Formula {
        Formula::atom("a")
    }

    fn identity() -> ProofTree {
        ProofTree::infer(
            RuleId::ImpIPos,
            Formula::imp(a(), a()),
            Mode::Proof,
            vec![ProofTree::discharged(a(), Mode::Proof, 3)],
        )
        .with_label(3)
    }

    #[test]
    fn measures() {
        let t = identity();
        assert_eq!(t.height(), 2);
        assert_eq!(t.size(), 2);
        assert_eq!(t.max_label(), 3);
        assert_eq!(t.paths(), vec![vec![], vec![0]]);
        assert_eq!(t.get(&[0]).unwrap().conclusion(), &a());
        assert!(t.get(&[1]).is_none());
    }

    #[test]
    fn substitution_reaches_every_formula() {
        let t = identity().substitute("a", &Formula::Bot);
        assert_eq!(t.conclusion(), &Formula::imp(Formula::Bot, Formula::Bot));
        assert_eq!(t.get(&[0]).unwrap().conclusion(), &Formula::Bot);
    }

    #[test]
    fn constant_normalization_roundtrips() {
        let t = ProofTree::infer(
            RuleId::AndIPos,
            Formula::and(Formula::Top, Formula::Top),
            Mode::Proof,
            vec![ProofTree::hypothesis(Formula::Top, Mode::Proof), ProofTree::hypothesis(Formula::Top, Mode::Proof)],
        );
        let n = t.normalize_constants();
        assert!(matches!(n.get(&[0]), Some(ProofTree::Node(_))));
        assert_eq!(n.denormalize_constants(), t);
    }

    #[test]
    fn rule_names_resolve() {
        assert_eq!(Rule::from_name("orE+"), Some(Rule::Kernel(RuleId::OrEPos)));
        assert_eq!(Rule::from_name("snotE-"), Some(Rule::Derived(DerivedRuleId::SnotENeg)));
        assert_eq!(Rule::from_name("orE"), None);
    }
}
