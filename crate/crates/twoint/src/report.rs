//! JSON renderings of checker and search results.

use serde::Serialize;
use twoint_core::kernel::{CheckReport, Judgment, ProofTree, Violation};
use twoint_core::negation::DefinabilityReport;

use crate::script::{print_judgment, print_script};

#[derive(Debug, Serialize)]
pub struct ViolationJson {
    pub path: Vec<usize>,
    pub code: &'static str,
    pub message: String,
}

impl From<&Violation> for ViolationJson {
    fn from(v: &Violation) -> Self {
        ViolationJson { path: v.path.clone(), code: v.code.as_str(), message: v.message.clone() }
    }
}

/// `{valid, violations: [{path, code, message}], used_gamma, used_delta}`.
#[derive(Debug, Serialize)]
pub struct CheckJson {
    pub valid: bool,
    pub violations: Vec<ViolationJson>,
    pub used_gamma: Vec<String>,
    pub used_delta: Vec<String>,
}

impl From<&CheckReport> for CheckJson {
    fn from(r: &CheckReport) -> Self {
        CheckJson {
            valid: r.valid(),
            violations: r.violations.iter().map(ViolationJson::from).collect(),
            used_gamma: r.used_gamma.iter().map(ToString::to_string).collect(),
            used_delta: r.used_delta.iter().map(ToString::to_string).collect(),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct CaseJson {
    pub rule: &'static str,
    pub judgment: String,
    pub passed: bool,
    pub error: Option<String>,
    pub violations: Vec<ViolationJson>,
}

#[derive(Debug, Serialize)]
pub struct DefinabilityJson {
    pub holds: bool,
    pub cases: Vec<CaseJson>,
}

impl From<&DefinabilityReport> for DefinabilityJson {
    fn from(r: &DefinabilityReport) -> Self {
        DefinabilityJson {
            holds: r.holds(),
            cases: r
                .cases
                .iter()
                .map(|c| CaseJson {
                    rule: c.rule.name(),
                    judgment: print_judgment(&c.judgment),
                    passed: c.passed(),
                    error: c.tree.as_ref().err().map(ToString::to_string),
                    violations: c.report.violations.iter().map(ViolationJson::from).collect(),
                })
                .collect(),
        }
    }
}

/// `{found, height, script}`; `script` is the tree as a `.2int` script.
#[derive(Debug, Serialize)]
pub struct SearchJson {
    pub found: bool,
    pub height: Option<usize>,
    pub script: Option<String>,
}

impl SearchJson {
    pub fn new(judgment: &Judgment, tree: Option<&ProofTree>) -> Self {
        SearchJson {
            found: tree.is_some(),
            height: tree.map(ProofTree::height),
            script: tree.map(|t| print_script(Some(judgment), t)),
        }
    }
}
