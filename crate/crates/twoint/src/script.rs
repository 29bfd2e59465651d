//! The `.2int` proof-script format.
//!
//! A script is an optional judgment followed by one tree, both written as
//! s-expressions. `;` starts a comment that runs to the end of the line.
//!
//! ```text
//! (judgment (gamma) (delta "a") proof "(a & (a -> (a -< a))) | ((a -> a) -< a)")
//! (rule orI2+ "(a & (a -> (a -< a))) | ((a -> a) -< a)"
//!   (rule coimpI+ "(a -> a) -< a"
//!     (rule impI+ :label 1 "a -> a" (assume* 1 a))
//!     (counter a)))
//! ```
//!
//! Leaves are `(assume f)` and `(counter f)` for context members, and
//! `(assume* n f)` / `(counter* n f)` for brackets discharged by label `n`.
//! Nodes are `(rule name [:dashed proof|dual] [:label n] [:mode proof|dual]
//! conclusion premise...)`. A node's mode is normally implied by its rule;
//! for a dashed rule without `:dashed` it is taken from its dashed premises,
//! or from the enclosing context when it has none. Formulas are either a
//! single bare token or a double-quoted string.

use std::fmt::Write as _;

use thiserror::Error;
use twoint_core::kernel::{Inference, Judgment, Line, Mode, ProofTree, Rule};
use twoint_core::Formula;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ScriptError {
    #[error("{line}:{column}: {message}")]
    Parse { line: usize, column: usize, message: String },
    #[error("{line}:{column}: unknown rule name `{name}`")]
    UnknownRuleName { line: usize, column: usize, name: String },
}

/// Source position, 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct Pos {
    line: usize,
    column: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Sexp {
    /// A bare token; `quoted` distinguishes `"x"` from `x`.
    Atom { text: String, quoted: bool, pos: Pos },
    List { items: Vec<Sexp>, pos: Pos },
}

impl Sexp {
    fn pos(&self) -> Pos {
        match self {
            Sexp::Atom { pos, .. } | Sexp::List { pos, .. } => *pos,
        }
    }

    fn bare(&self) -> Option<&str> {
        match self {
            Sexp::Atom { text, quoted: false, .. } => Some(text),
            _ => None,
        }
    }
}

fn error_at(pos: Pos, message: impl Into<String>) -> ScriptError {
    ScriptError::Parse { line: pos.line, column: pos.column, message: message.into() }
}

struct Reader<'a> {
    chars: std::iter::Peekable<std::str::CharIndices<'a>>,
    line: usize,
    column: usize,
}

impl<'a> Reader<'a> {
    fn new(text: &'a str) -> Self {
        let text = text.strip_prefix('\u{feff}').unwrap_or(text);
        Reader { chars: text.char_indices().peekable(), line: 1, column: 1 }
    }

    fn pos(&self) -> Pos {
        Pos { line: self.line, column: self.column }
    }

    fn bump(&mut self) -> Option<char> {
        let (_, c) = self.chars.next()?;
        if c == '\n' {
            self.line += 1;
            self.column = 1;
        } else {
            self.column += 1;
        }
        Some(c)
    }

    fn peek(&mut self) -> Option<char> {
        self.chars.peek().map(|&(_, c)| c)
    }

    fn skip_trivia(&mut self) {
        while let Some(c) = self.peek() {
            if c.is_whitespace() {
                self.bump();
            } else if c == ';' {
                while let Some(c) = self.bump() {
                    if c == '\n' {
                        break;
                    }
                }
            } else {
                break;
            }
        }
    }

    /// Reads every top-level expression.
    fn read_all(&mut self) -> Result<Vec<Sexp>, ScriptError> {
        let mut out = Vec::new();
        loop {
            self.skip_trivia();
            if self.peek().is_none() {
                return Ok(out);
            }
            out.push(self.read()?);
        }
    }

    fn read(&mut self) -> Result<Sexp, ScriptError> {
        self.skip_trivia();
        let pos = self.pos();
        match self.peek() {
            None => Err(error_at(pos, "unexpected end of input")),
            Some(')') => Err(error_at(pos, "unexpected `)`")),
            Some('(') => {
                self.bump();
                let mut items = Vec::new();
                loop {
                    self.skip_trivia();
                    match self.peek() {
                        None => return Err(error_at(pos, "unclosed `(`")),
                        Some(')') => {
                            self.bump();
                            return Ok(Sexp::List { items, pos });
                        }
                        Some(_) => items.push(self.read()?),
                    }
                }
            }
            Some('"') => {
                self.bump();
                let mut text = String::new();
                loop {
                    match self.bump() {
                        None => return Err(error_at(pos, "unterminated string")),
                        Some('"') => return Ok(Sexp::Atom { text, quoted: true, pos }),
                        Some('\\') => match self.bump() {
                            Some(c @ ('"' | '\\')) => text.push(c),
                            _ => return Err(error_at(pos, "bad escape in string")),
                        },
                        Some(c) => text.push(c),
                    }
                }
            }
            Some(_) => {
                let mut text = String::new();
                while let Some(c) = self.peek() {
                    if c.is_whitespace() || matches!(c, '(' | ')' | '"' | ';') {
                        break;
                    }
                    text.push(c);
                    self.bump();
                }
                Ok(Sexp::Atom { text, quoted: false, pos })
            }
        }
    }
}

fn formula(s: &Sexp) -> Result<Formula, ScriptError> {
    match s {
        Sexp::Atom { text, pos, .. } => Formula::parse(text).map_err(|e| {
            error_at(*pos, format!("bad formula {text:?}: {e}"))
        }),
        Sexp::List { pos, .. } => Err(error_at(*pos, "expected a formula, found a list")),
    }
}

fn mode(s: &Sexp) -> Result<Mode, ScriptError> {
    s.bare()
        .and_then(|t| t.parse().ok())
        .ok_or_else(|| error_at(s.pos(), "expected `proof` or `dual`"))
}

fn label(s: &Sexp) -> Result<u32, ScriptError> {
    s.bare()
        .and_then(|t| t.parse::<u32>().ok())
        .filter(|&n| n > 0)
        .ok_or_else(|| error_at(s.pos(), "expected a positive integer label"))
}

fn head<'s>(s: &'s Sexp, what: &str) -> Result<(&'s str, &'s [Sexp], Pos), ScriptError> {
    match s {
        Sexp::List { items, pos } => match items.split_first() {
            Some((h, rest)) => match h.bare() {
                Some(name) => Ok((name, rest, *pos)),
                None => Err(error_at(h.pos(), format!("expected {what} keyword"))),
            },
            None => Err(error_at(*pos, format!("empty list where {what} was expected"))),
        },
        Sexp::Atom { pos, .. } => Err(error_at(*pos, format!("expected {what}, found an atom"))),
    }
}

fn judgment(s: &Sexp) -> Result<Judgment, ScriptError> {
    let (keyword, rest, pos) = head(s, "judgment")?;
    if keyword != "judgment" {
        return Err(error_at(pos, "expected `(judgment ...)`"));
    }
    let [gamma, delta, m, goal] = rest else {
        return Err(error_at(pos, "judgment takes (gamma ...) (delta ...) proof|dual goal"));
    };
    let context = |s: &Sexp, name: &str| -> Result<Vec<Formula>, ScriptError> {
        let (keyword, items, pos) = head(s, name)?;
        if keyword != name {
            return Err(error_at(pos, format!("expected `({name} ...)`")));
        }
        items.iter().map(formula).collect()
    };
    Ok(Judgment::new(context(gamma, "gamma")?, context(delta, "delta")?, mode(m)?, formula(goal)?))
}

/// Parses a judgment written as `(judgment (gamma ...) (delta ...) proof|dual f)`.
pub fn parse_judgment(text: &str) -> Result<Judgment, ScriptError> {
    let items = Reader::new(text).read_all()?;
    match items.as_slice() {
        [one] => judgment(one),
        [] => Err(error_at(Pos { line: 1, column: 1 }, "expected a judgment")),
        [_, extra, ..] => Err(error_at(extra.pos(), "trailing input after judgment")),
    }
}

/// A parsed node before modes are resolved.
struct RawNode {
    rule: Rule,
    dashed: Option<Mode>,
    label: Option<u32>,
    mode: Option<Mode>,
    conclusion: Formula,
    premises: Vec<RawTree>,
    pos: Pos,
}

enum RawTree {
    Leaf(ProofTree),
    Node(RawNode),
}

fn tree(s: &Sexp) -> Result<RawTree, ScriptError> {
    let (keyword, rest, pos) = head(s, "tree")?;
    let leaf = |m: Mode, starred: bool| -> Result<RawTree, ScriptError> {
        match (starred, rest) {
            (false, [f]) => Ok(RawTree::Leaf(ProofTree::hypothesis(formula(f)?, m))),
            (true, [n, f]) => Ok(RawTree::Leaf(ProofTree::discharged(formula(f)?, m, label(n)?))),
            (false, _) => Err(error_at(pos, format!("`({keyword} f)` takes one formula"))),
            (true, _) => Err(error_at(pos, format!("`({keyword} n f)` takes a label and a formula"))),
        }
    };
    match keyword {
        "assume" => leaf(Mode::Proof, false),
        "counter" => leaf(Mode::Dual, false),
        "assume*" => leaf(Mode::Proof, true),
        "counter*" => leaf(Mode::Dual, true),
        "rule" => {
            let (name, mut rest) = match rest.split_first() {
                Some((n, r)) => (n, r),
                None => return Err(error_at(pos, "`rule` needs a rule name")),
            };
            let rule_name = name.bare().ok_or_else(|| error_at(name.pos(), "expected a rule name"))?;
            let rule = Rule::from_name(rule_name).ok_or_else(|| ScriptError::UnknownRuleName {
                line: name.pos().line,
                column: name.pos().column,
                name: rule_name.to_string(),
            })?;
            let (mut dashed, mut lbl, mut explicit_mode) = (None, None, None);
            while let Some((key @ Sexp::Atom { quoted: false, .. }, tail)) = rest.split_first() {
                let Some(key_text) = key.bare().filter(|k| k.starts_with(':')) else { break };
                let Some((value, tail)) = tail.split_first() else {
                    return Err(error_at(key.pos(), format!("`{key_text}` needs a value")));
                };
                match key_text {
                    ":dashed" => dashed = Some(mode(value)?),
                    ":label" => lbl = Some(label(value)?),
                    ":mode" => explicit_mode = Some(mode(value)?),
                    other => return Err(error_at(key.pos(), format!("unknown attribute `{other}`"))),
                }
                rest = tail;
            }
            let Some((conclusion, premises)) = rest.split_first() else {
                return Err(error_at(pos, "`rule` needs a conclusion formula"));
            };
            Ok(RawTree::Node(RawNode {
                rule,
                dashed,
                label: lbl,
                mode: explicit_mode,
                conclusion: formula(conclusion)?,
                premises: premises.iter().map(tree).collect::<Result<_, _>>()?,
                pos,
            }))
        }
        other => Err(error_at(pos, format!("unknown tree form `{other}`"))),
    }
}

fn schema_lines(rule: Rule) -> (&'static [twoint_core::kernel::Slot], Line) {
    match rule {
        Rule::Kernel(id) => {
            let d = id.descriptor();
            (d.premises, d.conclusion.line)
        }
        Rule::Derived(id) => {
            let d = id.descriptor();
            (d.premises, d.conclusion.line)
        }
    }
}

/// Fixes every node's mode. `expected` is the mode the parent (or the
/// judgment) requires of this position, when known.
fn resolve(raw: RawTree, expected: Option<Mode>) -> Result<ProofTree, ScriptError> {
    let node = match raw {
        RawTree::Leaf(t) => return Ok(t),
        RawTree::Node(n) => n,
    };
    let (slots, conclusion_line) = schema_lines(node.rule);
    let premises = node
        .premises
        .into_iter()
        .enumerate()
        .map(|(i, p)| {
            let hint = match slots.get(i).map(|s| s.line) {
                Some(Line::Fixed(m)) => Some(m),
                Some(Line::Dashed) => node.dashed,
                None => None,
            };
            resolve(p, hint)
        })
        .collect::<Result<Vec<_>, _>>()?;
    let mode = match (node.mode, conclusion_line, node.dashed) {
        (Some(m), _, _) => m,
        (None, Line::Fixed(m), _) => m,
        (None, Line::Dashed, Some(m)) => m,
        (None, Line::Dashed, None) => {
            let dashed_premises: Vec<Mode> = slots
                .iter()
                .zip(&premises)
                .filter(|(s, _)| s.line == Line::Dashed)
                .map(|(_, p)| p.mode())
                .collect();
            match (dashed_premises.first(), expected) {
                (Some(&m), _) => m,
                (None, Some(m)) => m,
                (None, None) => {
                    return Err(error_at(
                        node.pos,
                        format!("cannot infer the dashed reading of {}; add `:dashed proof|dual`", node.rule),
                    ))
                }
            }
        }
    };
    Ok(ProofTree::Node(Inference {
        rule: node.rule,
        dashed: node.dashed,
        conclusion: node.conclusion,
        mode,
        label: node.label,
        premises,
    }))
}

/// A parsed script: the optional judgment and the tree, which may use the
/// derived strong-negation rules.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProofScript {
    pub judgment: Option<Judgment>,
    pub tree: ProofTree,
}

pub fn parse_script(text: &str) -> Result<ProofScript, ScriptError> {
    let items = Reader::new(text).read_all()?;
    let (judgment, body) = match items.as_slice() {
        [] => return Err(error_at(Pos { line: 1, column: 1 }, "empty script")),
        [body] => (None, body),
        [j, body] => (Some(judgment(j)?), body),
        [_, _, extra, ..] => return Err(error_at(extra.pos(), "a script holds one judgment and one tree")),
    };
    let expected = judgment.as_ref().map(|j| j.mode);
    let tree = resolve(tree(body)?, expected)?;
    Ok(ProofScript { judgment, tree })
}

fn write_formula(out: &mut String, f: &Formula) {
    match f {
        Formula::Atom(_) | Formula::Top | Formula::Bot => write!(out, "{f}").unwrap(),
        _ => write!(out, "\"{f}\"").unwrap(),
    }
}

pub fn print_judgment(j: &Judgment) -> String {
    let mut out = String::from("(judgment (gamma");
    for f in &j.gamma {
        out.push(' ');
        write_formula(&mut out, f);
    }
    out.push_str(") (delta");
    for f in &j.delta {
        out.push(' ');
        write_formula(&mut out, f);
    }
    write!(out, ") {} ", j.mode).unwrap();
    write_formula(&mut out, &j.goal);
    out.push(')');
    out
}

fn print_tree(out: &mut String, t: &ProofTree, indent: usize) {
    let pad = "  ".repeat(indent);
    match t {
        ProofTree::Hypothesis { formula, mode } => {
            let kw = if *mode == Mode::Proof { "assume" } else { "counter" };
            write!(out, "{pad}({kw} ").unwrap();
            write_formula(out, formula);
            out.push(')');
        }
        ProofTree::Discharged { formula, mode, label } => {
            let kw = if *mode == Mode::Proof { "assume*" } else { "counter*" };
            write!(out, "{pad}({kw} {label} ").unwrap();
            write_formula(out, formula);
            out.push(')');
        }
        ProofTree::Node(n) => {
            write!(out, "{pad}(rule {}", n.rule).unwrap();
            if let Some(d) = n.dashed {
                write!(out, " :dashed {d}").unwrap();
            }
            if let Some(l) = n.label {
                write!(out, " :label {l}").unwrap();
            }
            let (_, line) = schema_lines(n.rule);
            let implied = match (line, n.dashed) {
                (Line::Fixed(m), _) => Some(m),
                (Line::Dashed, d) => d,
            };
            if implied != Some(n.mode) {
                write!(out, " :mode {}", n.mode).unwrap();
            }
            out.push(' ');
            write_formula(out, &n.conclusion);
            for p in &n.premises {
                out.push('\n');
                print_tree(out, p, indent + 1);
            }
            out.push(')');
        }
    }
}

/// Prints a script that [`parse_script`] reads back to the same judgment and tree.
pub fn print_script(judgment: Option<&Judgment>, tree: &ProofTree) -> String {
    let mut out = String::new();
    if let Some(j) = judgment {
        out.push_str(&print_judgment(j));
        out.push('\n');
    }
    print_tree(&mut out, tree, 0);
    out.push('\n');
    out
}
