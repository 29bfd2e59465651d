//! The rule catalog of the bilateral natural-deduction system.
//!
//! Every rule is a static [`RuleDescriptor`]: premise and conclusion shapes
//! over the metavariables `A`, `B`, `C`, their line modes, and the brackets
//! the rule discharges. A [`Line::Dashed`] position stands for two rules, one
//! with every dashed position read as a proof and one with every dashed
//! position read as a dual proof.

use alloc::boxed::Box;
use core::fmt;
use core::str::FromStr;

use crate::formula::Formula;

/// The polarity of a derivation line.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Mode {
    /// Single line: a proof.
    Proof,
    /// Double line: a dual proof.
    Dual,
}

impl Mode {
    pub fn flip(self) -> Mode {
        match self {
            Mode::Proof => Mode::Dual,
            Mode::Dual => Mode::Proof,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Mode::Proof => "proof",
            Mode::Dual => "dual",
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Mode {
    type Err = ();

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "proof" => Ok(Mode::Proof),
            "dual" => Ok(Mode::Dual),
            _ => Err(()),
        }
    }
}

/// The line under a premise or conclusion in a rule schema.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Line {
    Fixed(Mode),
    Dashed,
}

impl Line {
    /// The concrete mode once the rule's dashed positions are instantiated.
    pub fn instantiate(self, dashed: Mode) -> Mode {
        match self {
            Line::Fixed(m) => m,
            Line::Dashed => dashed,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Meta {
    A,
    B,
    C,
}

/// A formula shape over metavariables.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Pattern {
    Meta(Meta),
    Top,
    Bot,
    And(&'static Pattern, &'static Pattern),
    Or(&'static Pattern, &'static Pattern),
    Imp(&'static Pattern, &'static Pattern),
    Coimp(&'static Pattern, &'static Pattern),
    Snot(&'static Pattern),
}

/// Metavariable assignment built up during matching.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Bindings {
    slots: [Option<Formula>; 3],
}

impl Bindings {
    pub fn get(&self, m: Meta) -> Option<&Formula> {
        self.slots[m as usize].as_ref()
    }

    pub fn set(&mut self, m: Meta, f: Formula) {
        self.slots[m as usize] = Some(f);
    }
}

impl Pattern {
    /// First-order matching of `f` against the pattern, extending `bindings`.
    /// On failure `bindings` may hold partial assignments.
    pub fn matches(&self, f: &Formula, bindings: &mut Bindings) -> bool {
        match (self, f) {
            (Pattern::Meta(m), _) => match bindings.get(*m) {
                Some(bound) => bound == f,
                None => {
                    bindings.set(*m, f.clone());
                    true
                }
            },
            (Pattern::Top, Formula::Top) | (Pattern::Bot, Formula::Bot) => true,
            (Pattern::And(p, q), Formula::And(l, r))
            | (Pattern::Or(p, q), Formula::Or(l, r))
            | (Pattern::Imp(p, q), Formula::Imp(l, r))
            | (Pattern::Coimp(p, q), Formula::Coimp(l, r)) => {
                p.matches(l, bindings) && q.matches(r, bindings)
            }
            (Pattern::Snot(p), Formula::Snot(g)) => p.matches(g, bindings),
            _ => false,
        }
    }

    /// Builds the formula for this shape, or `None` if a metavariable is unbound.
    pub fn instantiate(&self, bindings: &Bindings) -> Option<Formula> {
        Some(match self {
            Pattern::Meta(m) => bindings.get(*m)?.clone(),
            Pattern::Top => Formula::Top,
            Pattern::Bot => Formula::Bot,
            Pattern::And(p, q) => Formula::and(p.instantiate(bindings)?, q.instantiate(bindings)?),
            Pattern::Or(p, q) => Formula::or(p.instantiate(bindings)?, q.instantiate(bindings)?),
            Pattern::Imp(p, q) => Formula::imp(p.instantiate(bindings)?, q.instantiate(bindings)?),
            Pattern::Coimp(p, q) => {
                Formula::coimp(p.instantiate(bindings)?, q.instantiate(bindings)?)
            }
            Pattern::Snot(p) => Formula::Snot(Box::new(p.instantiate(bindings)?)),
        })
    }

    pub fn mentions(&self, m: Meta) -> bool {
        match self {
            Pattern::Meta(n) => *n == m,
            Pattern::Top | Pattern::Bot => false,
            Pattern::And(p, q) | Pattern::Or(p, q) | Pattern::Imp(p, q) | Pattern::Coimp(p, q) => {
                p.mentions(m) || q.mentions(m)
            }
            Pattern::Snot(p) => p.mentions(m),
        }
    }
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn operand(p: &Pattern, f: &mut fmt::Formatter<'_>) -> fmt::Result {
            match p {
                Pattern::And(..) | Pattern::Or(..) | Pattern::Imp(..) | Pattern::Coimp(..) => {
                    write!(f, "({p})")
                }
                _ => write!(f, "{p}"),
            }
        }
        let (sym, l, r) = match self {
            Pattern::Meta(m) => return write!(f, "{m:?}"),
            Pattern::Top => return f.write_str("T"),
            Pattern::Bot => return f.write_str("F"),
            Pattern::Snot(p) => {
                f.write_str("~")?;
                return operand(p, f);
            }
            Pattern::And(l, r) => ("&", l, r),
            Pattern::Or(l, r) => ("|", l, r),
            Pattern::Imp(l, r) => ("->", l, r),
            Pattern::Coimp(l, r) => ("-<", l, r),
        };
        operand(l, f)?;
        write!(f, " {sym} ")?;
        operand(r, f)
    }
}

/// One premise or the conclusion of a rule schema.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Slot {
    pub shape: Pattern,
    pub line: Line,
}

/// A bracket a rule may discharge in one of its premise subtrees. A bracket
/// of kind [`Mode::Proof`] is an assumption `[X]`, of kind [`Mode::Dual`] a
/// counter-assumption `⟦X⟧`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Discharge {
    pub kind: Mode,
    pub shape: Pattern,
    pub premise: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RuleDescriptor<R: 'static> {
    pub id: R,
    pub premises: &'static [Slot],
    pub conclusion: Slot,
    pub discharges: &'static [Discharge],
}

impl<R> RuleDescriptor<R> {
    /// True iff some premise or the conclusion is dashed.
    pub fn dashed(&self) -> bool {
        self.conclusion.line == Line::Dashed || self.premises.iter().any(|p| p.line == Line::Dashed)
    }

    pub fn discharges_anything(&self) -> bool {
        !self.discharges.is_empty()
    }

    /// Brackets attached to premise `index`.
    pub fn discharges_in(&self, index: usize) -> impl Iterator<Item = &Discharge> {
        self.discharges.iter().filter(move |d| d.premise == index)
    }
}

macro_rules! rule_ids {
    ($($id:ident => $name:literal, $label:literal;)*) => {
        /// The primitive rules, one per rule figure.
        #[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
        pub enum RuleId {
            $($id,)*
        }

        impl RuleId {
            pub const ALL: [RuleId; 26] = [$(RuleId::$id,)*];

            /// Name used in proof scripts, e.g. `coimpI+`.
            pub fn name(self) -> &'static str {
                match self {
                    $(RuleId::$id => $name,)*
                }
            }

            /// Conventional label, e.g. `⤙I+`.
            pub fn label(self) -> &'static str {
                match self {
                    $(RuleId::$id => $label,)*
                }
            }

            pub fn from_name(name: &str) -> Option<RuleId> {
                match name {
                    $($name => Some(RuleId::$id),)*
                    _ => None,
                }
            }
        }
    };
}

rule_ids! {
    AndIPos => "andI+", "∧I+";
    AndE1Pos => "andE1+", "∧E1+";
    AndE2Pos => "andE2+", "∧E2+";
    OrI1Pos => "orI1+", "∨I1+";
    OrI2Pos => "orI2+", "∨I2+";
    OrEPos => "orE+", "∨E+";
    ImpIPos => "impI+", "→I+";
    ImpEPos => "impE+", "→E+";
    CoimpIPos => "coimpI+", "⤙I+";
    CoimpE1Pos => "coimpE1+", "⤙E1+";
    CoimpE2Pos => "coimpE2+", "⤙E2+";
    TopIPos => "topI+", "⊤I+";
    BotEPos => "botE+", "⊥E+";
    AndI1Neg => "andI1-", "∧I1-";
    AndI2Neg => "andI2-", "∧I2-";
    AndENeg => "andE-", "∧E-";
    OrINeg => "orI-", "∨I-";
    OrE1Neg => "orE1-", "∨E1-";
    OrE2Neg => "orE2-", "∨E2-";
    ImpINeg => "impI-", "→I-";
    ImpE1Neg => "impE1-", "→E1-";
    ImpE2Neg => "impE2-", "→E2-";
    CoimpINeg => "coimpI-", "⤙I-";
    CoimpENeg => "coimpE-", "⤙E-";
    TopENeg => "topE-", "⊤E-";
    BotINeg => "botI-", "⊥I-";
}

impl fmt::Display for RuleId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl RuleId {
    pub fn descriptor(self) -> &'static RuleDescriptor<RuleId> {
        &CATALOG[self as usize]
    }
}

pub(crate) const A: Pattern = Pattern::Meta(Meta::A);
pub(crate) const B: Pattern = Pattern::Meta(Meta::B);
pub(crate) const C: Pattern = Pattern::Meta(Meta::C);
const A_AND_B: Pattern = Pattern::And(&A, &B);
const A_OR_B: Pattern = Pattern::Or(&A, &B);
const A_IMP_B: Pattern = Pattern::Imp(&A, &B);
const A_COIMP_B: Pattern = Pattern::Coimp(&A, &B);

const P: Line = Line::Fixed(Mode::Proof);
const D: Line = Line::Fixed(Mode::Dual);

pub(crate) const fn slot(shape: Pattern, line: Line) -> Slot {
    Slot { shape, line }
}

const fn rule(
    id: RuleId,
    premises: &'static [Slot],
    conclusion: Slot,
    discharges: &'static [Discharge],
) -> RuleDescriptor<RuleId> {
    RuleDescriptor { id, premises, conclusion, discharges }
}

const fn assumption(shape: Pattern, premise: usize) -> Discharge {
    Discharge { kind: Mode::Proof, shape, premise }
}

const fn counter(shape: Pattern, premise: usize) -> Discharge {
    Discharge { kind: Mode::Dual, shape, premise }
}

/// All 26 primitive rules, indexed by `RuleId as usize`.
pub static CATALOG: [RuleDescriptor<RuleId>; 26] = [
    // Proofs.
    rule(RuleId::AndIPos, &[slot(A, P), slot(B, P)], slot(A_AND_B, P), &[]),
    rule(RuleId::AndE1Pos, &[slot(A_AND_B, P)], slot(A, P), &[]),
    rule(RuleId::AndE2Pos, &[slot(A_AND_B, P)], slot(B, P), &[]),
    rule(RuleId::OrI1Pos, &[slot(A, P)], slot(A_OR_B, P), &[]),
    rule(RuleId::OrI2Pos, &[slot(B, P)], slot(A_OR_B, P), &[]),
    rule(
        RuleId::OrEPos,
        &[slot(A_OR_B, P), slot(C, Line::Dashed), slot(C, Line::Dashed)],
        slot(C, Line::Dashed),
        &[assumption(A, 1), assumption(B, 2)],
    ),
    rule(RuleId::ImpIPos, &[slot(B, P)], slot(A_IMP_B, P), &[assumption(A, 0)]),
    rule(RuleId::ImpEPos, &[slot(A_IMP_B, P), slot(A, P)], slot(B, P), &[]),
    rule(RuleId::CoimpIPos, &[slot(A, P), slot(B, D)], slot(A_COIMP_B, P), &[]),
    rule(RuleId::CoimpE1Pos, &[slot(A_COIMP_B, P)], slot(A, P), &[]),
    rule(RuleId::CoimpE2Pos, &[slot(A_COIMP_B, P)], slot(B, D), &[]),
    rule(RuleId::TopIPos, &[], slot(Pattern::Top, P), &[]),
    rule(RuleId::BotEPos, &[slot(Pattern::Bot, P)], slot(A, Line::Dashed), &[]),
    // Dual proofs.
    rule(RuleId::AndI1Neg, &[slot(A, D)], slot(A_AND_B, D), &[]),
    rule(RuleId::AndI2Neg, &[slot(B, D)], slot(A_AND_B, D), &[]),
    rule(
        RuleId::AndENeg,
        &[slot(A_AND_B, D), slot(C, Line::Dashed), slot(C, Line::Dashed)],
        slot(C, Line::Dashed),
        &[counter(A, 1), counter(B, 2)],
    ),
    rule(RuleId::OrINeg, &[slot(A, D), slot(B, D)], slot(A_OR_B, D), &[]),
    rule(RuleId::OrE1Neg, &[slot(A_OR_B, D)], slot(A, D), &[]),
    rule(RuleId::OrE2Neg, &[slot(A_OR_B, D)], slot(B, D), &[]),
    rule(RuleId::ImpINeg, &[slot(A, P), slot(B, D)], slot(A_IMP_B, D), &[]),
    rule(RuleId::ImpE1Neg, &[slot(A_IMP_B, D)], slot(A, P), &[]),
    rule(RuleId::ImpE2Neg, &[slot(A_IMP_B, D)], slot(B, D), &[]),
    rule(RuleId::CoimpINeg, &[slot(A, D)], slot(A_COIMP_B, D), &[counter(B, 0)]),
    rule(RuleId::CoimpENeg, &[slot(A_COIMP_B, D), slot(B, D)], slot(A, D), &[]),
    rule(RuleId::TopENeg, &[slot(Pattern::Top, D)], slot(A, Line::Dashed), &[]),
    rule(RuleId::BotINeg, &[], slot(Pattern::Bot, D), &[]),
];

/// The full rule catalog in declaration order.
pub fn rule_catalog() -> &'static [RuleDescriptor<RuleId>] {
    &CATALOG
}
