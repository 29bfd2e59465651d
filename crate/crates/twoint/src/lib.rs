//! Proof scripts, JSON reports and the command line for the `twoint_core`
//! checker.

pub mod cli;
pub mod report;
pub mod script;

pub use script::{parse_judgment, parse_script, print_judgment, print_script, ProofScript, ScriptError};
