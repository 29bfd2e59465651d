//! Bounded backward proof search over the primitive rule catalog.
//!
//! Search is goal-directed and iteratively deepening. At a goal it first
//! tries to close the branch with a leaf (an assumption in scope or a member
//! of Γ/Δ), then applies each catalog rule, in catalog order, whose
//! conclusion matches the goal. Metavariables not fixed by the goal (the
//! major premise of an elimination) are drawn from a finite candidate pool,
//! enumerated in the derived total order on [`Formula`]. Failed goals are
//! memoised per query.
//!
//! Failure to find a tree does not show that none exists.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;

use crate::formula::Formula;
use crate::kernel::{Bindings, Judgment, Line, Meta, Mode, ProofTree, RuleId, CATALOG};

/// Where metavariables not fixed by the goal are drawn from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CandidatePool {
    /// Subformulas of the goal and of Γ and Δ.
    SubformulaClosure,
    /// An explicit list of formulas.
    Formulas(Vec<Formula>),
}

/// Search limits. Dashed rules are always tried under both readings.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchConfig {
    /// Maximum tree height; at least 1.
    pub depth_bound: usize,
    pub candidate_pool: CandidatePool,
}

impl SearchConfig {
    pub fn with_depth(depth_bound: usize) -> SearchConfig {
        SearchConfig { depth_bound, candidate_pool: CandidatePool::SubformulaClosure }
    }
}

#[derive(Clone, Debug)]
struct Assumption {
    formula: Formula,
    mode: Mode,
    label: u32,
}

type GoalKey = (Vec<(Formula, Mode)>, Formula, Mode);

struct Searcher<'j> {
    judgment: &'j Judgment,
    pool: Vec<Formula>,
    /// Largest depth at which each goal is known to fail.
    failed: BTreeMap<GoalKey, usize>,
    next_label: u32,
}

/// Searches for a tree establishing `judgment` of height at most
/// `cfg.depth_bound`. The judgment must be Snot-free.
pub fn search(judgment: &Judgment, cfg: &SearchConfig) -> Option<ProofTree> {
    let pool = match &cfg.candidate_pool {
        CandidatePool::SubformulaClosure => {
            let mut set = BTreeSet::new();
            judgment.goal.collect_subformulas(&mut set);
            for f in judgment.gamma.iter().chain(&judgment.delta) {
                f.collect_subformulas(&mut set);
            }
            set.into_iter().collect()
        }
        CandidatePool::Formulas(list) => {
            list.iter().cloned().collect::<BTreeSet<_>>().into_iter().collect()
        }
    };
    let mut searcher = Searcher { judgment, pool, failed: BTreeMap::new(), next_label: 1 };
    let mut scope = Vec::new();
    let tree = (1..=cfg.depth_bound).find_map(|depth| {
        searcher.prove(&judgment.goal, judgment.mode, &mut scope, depth)
    })?;
    Some(renumber_labels(&tree))
}

/// Renumbers binder labels 1, 2, ... in preorder.
fn renumber_labels(tree: &ProofTree) -> ProofTree {
    fn binders(t: &ProofTree, out: &mut Vec<u32>) {
        if let ProofTree::Node(n) = t {
            out.extend(n.label);
            n.premises.iter().for_each(|p| binders(p, out));
        }
    }
    let mut order = Vec::new();
    binders(tree, &mut order);
    let map: BTreeMap<u32, u32> = order.into_iter().zip(1..).collect();
    tree.map_labels(&mut |l| map[&l])
}

impl Searcher<'_> {
    fn key(scope: &[Assumption], goal: &Formula, mode: Mode) -> GoalKey {
        let hyps: BTreeSet<(Formula, Mode)> =
            scope.iter().map(|a| (a.formula.clone(), a.mode)).collect();
        (hyps.into_iter().collect(), goal.clone(), mode)
    }

    fn close(&self, goal: &Formula, mode: Mode, scope: &[Assumption]) -> Option<ProofTree> {
        if let Some(a) = scope.iter().rev().find(|a| a.formula == *goal && a.mode == mode) {
            return Some(ProofTree::discharged(goal.clone(), mode, a.label));
        }
        let context = match mode {
            Mode::Proof => &self.judgment.gamma,
            Mode::Dual => &self.judgment.delta,
        };
        context.contains(goal).then(|| ProofTree::hypothesis(goal.clone(), mode))
    }

    fn prove(
        &mut self,
        goal: &Formula,
        mode: Mode,
        scope: &mut Vec<Assumption>,
        depth: usize,
    ) -> Option<ProofTree> {
        if depth == 0 {
            return None;
        }
        if let Some(leaf) = self.close(goal, mode, scope) {
            return Some(leaf);
        }
        let key = Self::key(scope, goal, mode);
        if self.failed.get(&key).is_some_and(|&d| d >= depth) {
            return None;
        }
        for desc in CATALOG.iter() {
            let inst = match desc.conclusion.line {
                Line::Fixed(m) if m != mode => continue,
                Line::Fixed(_) | Line::Dashed => mode,
            };
            let mut bindings = Bindings::default();
            if !desc.conclusion.shape.matches(goal, &mut bindings) {
                continue;
            }
            for bindings in self.complete(desc.premises, bindings) {
                if let Some(tree) = self.apply(desc.id, goal, mode, inst, &bindings, scope, depth) {
                    return Some(tree);
                }
            }
        }
        let entry = self.failed.entry(key).or_insert(0);
        *entry = (*entry).max(depth);
        None
    }

    /// Extends `bindings` so every premise is ground, drawing the first
    /// premise that mentions an unbound metavariable from the pool.
    fn complete(&self, premises: &[crate::kernel::Slot], bindings: Bindings) -> Vec<Bindings> {
        let unbound = |b: &Bindings, p: &crate::kernel::Slot| {
            [Meta::A, Meta::B, Meta::C].iter().any(|m| b.get(*m).is_none() && p.shape.mentions(*m))
        };
        let Some(major) = premises.iter().find(|p| unbound(&bindings, p)) else {
            return alloc::vec![bindings];
        };
        self.pool
            .iter()
            .filter_map(|candidate| {
                let mut b = bindings.clone();
                major.shape.matches(candidate, &mut b).then_some(b)
            })
            .filter(|b| !premises.iter().any(|p| unbound(b, p)))
            .collect()
    }

    #[allow(clippy::too_many_arguments)]
    fn apply(
        &mut self,
        id: RuleId,
        goal: &Formula,
        mode: Mode,
        inst: Mode,
        bindings: &Bindings,
        scope: &mut Vec<Assumption>,
        depth: usize,
    ) -> Option<ProofTree> {
        let desc = id.descriptor();
        let subgoals: Vec<(Formula, Mode)> = desc
            .premises
            .iter()
            .map(|p| (p.shape.instantiate(bindings).expect("ground premise"), p.line.instantiate(inst)))
            .collect();
        // A premise that restates the goal under no new assumptions cannot
        // shorten the search.
        let loops = subgoals.iter().enumerate().any(|(i, (f, m))| {
            f == goal && *m == mode && desc.discharges_in(i).next().is_none()
        });
        if loops {
            return None;
        }
        let label = desc.discharges_anything().then(|| {
            self.next_label += 1;
            self.next_label - 1
        });
        let mut premises = Vec::with_capacity(subgoals.len());
        for (i, (formula, m)) in subgoals.iter().enumerate() {
            let before = scope.len();
            for d in desc.discharges_in(i) {
                scope.push(Assumption {
                    formula: d.shape.instantiate(bindings).expect("ground bracket"),
                    mode: d.kind,
                    label: label.expect("discharging rule has a label"),
                });
            }
            let found = self.prove(formula, *m, scope, depth - 1);
            scope.truncate(before);
            premises.push(found?);
        }
        let mut tree = ProofTree::infer(id, goal.clone(), mode, premises);
        if desc.dashed() {
            tree = tree.with_dashed(inst);
        }
        if let Some(l) = label {
            tree = tree.with_label(l);
        }
        Some(tree)
    }
}
