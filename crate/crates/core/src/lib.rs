//! A proof-checking kernel for the bi-intuitionistic logic 2Int.
//!
//! 2Int has two kinds of derivation: proofs (single lines) and dual proofs
//! (double lines). This crate provides
//!
//! - [`formula`]: the formula language with parser and printer,
//! - [`kernel`]: the 26 primitive rules, derivation trees and the checker,
//! - [`negation`]: strong negation as a derived connective, with its four
//!   rules expanded into primitive derivations,
//! - [`search`]: bounded backward proof search.
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]

extern crate alloc;

pub mod formula;
pub mod kernel;
pub mod negation;
pub mod search;

pub use formula::{Formula, ParseError};
pub use kernel::{check, check_judgment_strictness, open_hypotheses, CheckReport, Judgment, Mode, ProofTree, Rule, RuleId};
pub use negation::{elaborate, expand_rule, verify_definability, DerivedRuleId};
pub use search::{search, SearchConfig};
