//! The `twoint` command line.

use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Parser, Subcommand};
use thiserror::Error;
use twoint_core::kernel::{inferred_judgment, Judgment, Line, Mode, ProofTree, RuleId, Slot};
use twoint_core::negation::{check_derived, check_derived_strict, elaborate, verify_definability};
use twoint_core::search::{search, SearchConfig};
use twoint_core::{CheckReport, Formula};

use crate::report::{CheckJson, DefinabilityJson, SearchJson};
use crate::script::{parse_judgment, parse_script, print_judgment, print_script, ScriptError};

/// Exit status for a valid proof or a successful command.
pub const EXIT_OK: i32 = 0;
/// Exit status for an invalid proof, a failed search or a failed verification.
pub const EXIT_FAILED: i32 = 1;
/// Exit status for unreadable input or bad usage.
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "twoint", version, about = "Checker and prover for bilateral natural deduction in 2Int")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check a proof script.
    Check {
        file: PathBuf,
        /// Also require every member of Γ and Δ to be used.
        #[arg(long)]
        strict: bool,
        #[arg(long)]
        json: bool,
    },
    /// Print the strong-negation-free expansion of a formula.
    Expand { formula: String },
    /// Replace derived strong-negation rules in a script by primitive derivations.
    Elaborate { file: PathBuf },
    /// Search for a proof of a judgment such as `(judgment (gamma) (delta) proof "a -> a")`.
    Search {
        judgment: String,
        #[arg(long, default_value_t = 8)]
        depth: usize,
        #[arg(long)]
        json: bool,
    },
    /// Expand and check the four derived strong-negation rules.
    VerifyDefinability {
        #[arg(long)]
        json: bool,
    },
    /// List the primitive rules.
    Rules,
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("{path}:{source}")]
    Script { path: String, source: ScriptError },
    #[error("bad formula: {0}")]
    Formula(#[from] twoint_core::ParseError),
    #[error("{0}")]
    Elaboration(String),
}

/// Runs the command line on `args` (including the program name) and returns
/// the exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { err.write_all(text.as_bytes()) } else { out.write_all(text.as_bytes()) };
            return code;
        }
    };
    match execute(cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}

fn read_script(path: &Path) -> Result<crate::script::ProofScript, CliError> {
    let shown = path.display().to_string();
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io { path: shown.clone(), source })?;
    parse_script(&text).map_err(|source| CliError::Script { path: shown, source })
}

fn execute(command: Command, out: &mut dyn Write) -> Result<i32, CliError> {
    let w = |out: &mut dyn Write, text: &str| {
        let _ = out.write_all(text.as_bytes());
    };
    match command {
        Command::Check { file, strict, json } => {
            let script = read_script(&file)?;
            let (judgment, inferred) = match script.judgment {
                Some(j) => (j, false),
                None => (judgment_of_leaves(&script.tree), true),
            };
            let report = if strict {
                check_derived_strict(&script.tree, &judgment)
            } else {
                check_derived(&script.tree, &judgment)
            };
            if json {
                w(out, &format!("{}\n", serde_json::to_string_pretty(&CheckJson::from(&report)).expect("serializable")));
            } else {
                w(out, &render_check(&report, &judgment, inferred));
            }
            Ok(if report.valid() { EXIT_OK } else { EXIT_FAILED })
        }
        Command::Expand { formula } => {
            let f = Formula::parse(&formula)?;
            w(out, &format!("{}\n", f.expand_strong_negation()));
            Ok(EXIT_OK)
        }
        Command::Elaborate { file } => {
            let script = read_script(&file)?;
            let tree = elaborate(&script.tree).map_err(|e| CliError::Elaboration(e.to_string()))?;
            let judgment = script.judgment.map(|j| j.expand_strong_negation());
            w(out, &print_script(judgment.as_ref(), &tree));
            Ok(EXIT_OK)
        }
        Command::Search { judgment, depth, json } => {
            let judgment = parse_judgment(&judgment)
                .map_err(|source| CliError::Script { path: "<judgment>".into(), source })?;
            let judgment = judgment.expand_strong_negation();
            let tree = search(&judgment, &SearchConfig::with_depth(depth));
            if json {
                let value = SearchJson::new(&judgment, tree.as_ref());
                w(out, &format!("{}\n", serde_json::to_string_pretty(&value).expect("serializable")));
            } else {
                match &tree {
                    Some(t) => w(out, &print_script(Some(&judgment), t)),
                    None => w(out, &format!("no proof of height at most {depth} found for {judgment}\n")),
                }
            }
            Ok(if tree.is_some() { EXIT_OK } else { EXIT_FAILED })
        }
        Command::VerifyDefinability { json } => {
            let started = Instant::now();
            let report = verify_definability();
            if json {
                w(out, &format!("{}\n", serde_json::to_string_pretty(&DefinabilityJson::from(&report)).expect("serializable")));
            } else {
                for case in &report.cases {
                    let status = if case.passed() { "PASS" } else { "FAIL" };
                    w(out, &format!("{status} {} {}\n", case.rule.name(), case.judgment));
                    if let Err(e) = &case.tree {
                        w(out, &format!("  {e}\n"));
                    }
                    for v in &case.report.violations {
                        w(out, &format!("  {v}\n"));
                    }
                }
                w(out, &format!("checked {} expansions in {:.1?}\n", report.cases.len(), started.elapsed()));
            }
            Ok(if report.holds() { EXIT_OK } else { EXIT_FAILED })
        }
        Command::Rules => {
            w(out, &rules_table());
            Ok(EXIT_OK)
        }
    }
}

/// Γ and Δ read off the undischarged leaves. Brackets with unbound labels are
/// skipped here; the checker reports them.
fn judgment_of_leaves(tree: &ProofTree) -> Judgment {
    if let Ok(j) = inferred_judgment(tree) {
        return j;
    }
    fn walk(t: &ProofTree, gamma: &mut Vec<Formula>, delta: &mut Vec<Formula>) {
        match t {
            ProofTree::Hypothesis { formula, mode: Mode::Proof } if *formula != Formula::Top => gamma.push(formula.clone()),
            ProofTree::Hypothesis { formula, mode: Mode::Dual } if *formula != Formula::Bot => delta.push(formula.clone()),
            _ => t.premises().iter().for_each(|p| walk(p, gamma, delta)),
        }
    }
    let (mut gamma, mut delta) = (Vec::new(), Vec::new());
    walk(tree, &mut gamma, &mut delta);
    Judgment::new(gamma, delta, tree.mode(), tree.conclusion().clone())
}

fn render_check(report: &CheckReport, judgment: &Judgment, inferred: bool) -> String {
    let mut text = String::new();
    if inferred {
        text.push_str(&format!("inferred judgment: {}\n", print_judgment(judgment)));
    }
    if report.valid() {
        text.push_str(&format!("valid: {judgment}\n"));
    } else {
        text.push_str(&format!("invalid: {judgment}\n"));
        for v in &report.violations {
            text.push_str(&format!("  {v}\n"));
        }
    }
    text
}

fn slot_text(s: &Slot) -> String {
    let sign = match s.line {
        Line::Fixed(Mode::Proof) => "+",
        Line::Fixed(Mode::Dual) => "-",
        Line::Dashed => "±",
    };
    format!("{}{sign}", s.shape)
}

/// One line per primitive rule: name, premises, conclusion and discharges.
/// `+` marks a proof line, `-` a dual line and `±` a dashed line.
pub fn rules_table() -> String {
    let mut text = format!("{:<10} {:<32} {:<12} {}\n", "rule", "premises", "conclusion", "discharges");
    for id in RuleId::ALL {
        let d = id.descriptor();
        let premises = d.premises.iter().map(slot_text).collect::<Vec<_>>().join(", ");
        let discharges = d
            .discharges
            .iter()
            .map(|x| {
                let (open, close) = if x.kind == Mode::Proof { ("[", "]") } else { ("⟦", "⟧") };
                format!("{open}{}{close} in premise {}", x.shape, x.premise + 1)
            })
            .collect::<Vec<_>>()
            .join(", ");
        let premises = if premises.is_empty() { "-".to_string() } else { premises };
        text.push_str(&format!("{:<10} {:<32} {:<12} {}\n", id.name(), premises, slot_text(&d.conclusion), discharges));
    }
    text
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_capture(args: &[&str]) -> (i32, String, String) {
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let code = run(std::iter::once("twoint").chain(args.iter().copied()), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn expand_prints_the_definiens() {
        let (code, out, _) = run_capture(&["expand", "~a"]);
        assert_eq!(code, 0);
        assert_eq!(out, "(a & (a -> (a -< a))) | ((a -> a) -< a)\n");
    }

    #[test]
    fn bad_formula_is_a_usage_error() {
        let (code, _, err) = run_capture(&["expand", "a &"]);
        assert_eq!(code, EXIT_USAGE);
        assert!(err.contains("bad formula"));
    }

    #[test]
    fn unknown_subcommand_is_a_usage_error() {
        assert_eq!(run_capture(&["prove"]).0, EXIT_USAGE);
        assert_eq!(run_capture(&["--help"]).0, EXIT_OK);
    }

    #[test]
    fn rules_lists_all_26() {
        let (code, out, _) = run_capture(&["rules"]);
        assert_eq!(code, 0);
        assert_eq!(out.lines().count(), 27);
        assert!(out.contains("orE+"));
    }

    #[test]
    fn search_reports_absence() {
        let (code, out, _) = run_capture(&["search", "(judgment (gamma) (delta) proof a)", "--depth", "3"]);
        assert_eq!(code, EXIT_FAILED);
        assert!(out.starts_with("no proof"));
        let (code, out, _) = run_capture(&["search", "(judgment (gamma) (delta) proof \"a -> a\")", "--json"]);
        assert_eq!(code, EXIT_OK);
        assert!(out.contains("\"found\": true"));
    }
}
