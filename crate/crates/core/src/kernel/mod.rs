//! The proof kernel: rule catalog, derivation trees and the checker.

mod check;
mod rules;
mod tree;

pub use check::{
    check, check_judgment_strictness, inferred_judgment, open_hypotheses, CheckReport, Judgment,
    UnboundDischargeLabel, Violation, ViolationCode,
};
pub(crate) use check::{add_unused, check_with_derived};
pub use rules::{
    rule_catalog, Bindings, Discharge, Line, Meta, Mode, Pattern, RuleDescriptor, RuleId, Slot,
    CATALOG,
};
pub(crate) use rules::{slot, A};
pub use tree::{Inference, ProofTree, Rule};
