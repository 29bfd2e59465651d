//! Formulas of 2Int, their concrete syntax, substitution and the expansion
//! of strong negation into its defining formula.
//!
//! Concrete syntax (ASCII, Unicode aliases in parentheses):
//!
//! | connective        | text        |
//! |-------------------|-------------|
//! | verum             | `T` (`⊤`)   |
//! | falsum            | `F` (`⊥`)   |
//! | strong negation   | `~` (`∼`)   |
//! | conjunction       | `&` (`∧`)   |
//! | disjunction       | `\|` (`∨`)  |
//! | implication       | `->` (`→`)  |
//! | co-implication    | `-<` (`⤙`)  |
//!
//! `~` binds tightest, then `&`, then `|`, then `->` and `-<`. Conjunction and
//! disjunction associate to the left, the two implications to the right.
//! Mixing `->` and `-<` at one level without parentheses is rejected.

use alloc::boxed::Box;
use alloc::collections::BTreeSet;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

/// A formula of the language of 2Int, extended with surface strong negation.
///
/// The derived ordering (variant order, then fields) is the total order used
/// wherever formulas must be enumerated deterministically.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Formula {
    Atom(String),
    Top,
    Bot,
    And(Box<Formula>, Box<Formula>),
    Or(Box<Formula>, Box<Formula>),
    Imp(Box<Formula>, Box<Formula>),
    Coimp(Box<Formula>, Box<Formula>),
    /// Strong negation. Never seen by the kernel; see
    /// [`Formula::expand_strong_negation`].
    Snot(Box<Formula>),
}

/// Binary connectives, used by the parser and printer.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum BinOp {
    And,
    Or,
    Imp,
    Coimp,
}

impl BinOp {
    fn symbol(self) -> &'static str {
        match self {
            BinOp::And => "&",
            BinOp::Or => "|",
            BinOp::Imp => "->",
            BinOp::Coimp => "-<",
        }
    }

    fn left_assoc(self) -> bool {
        matches!(self, BinOp::And | BinOp::Or)
    }
}

/// Returns true if `name` is a legal atom name: `[a-zA-Z][a-zA-Z0-9_]*`
/// other than the reserved constants `T` and `F`.
pub fn is_atom_name(name: &str) -> bool {
    let mut chars = name.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_') && name != "T" && name != "F"
}

impl Formula {
    /// Builds an atom. Panics if `name` is not a legal atom name.
    pub fn atom(name: &str) -> Formula {
        assert!(is_atom_name(name), "illegal atom name {name:?}");
        Formula::Atom(name.to_string())
    }

    pub fn and(l: Formula, r: Formula) -> Formula {
        Formula::And(Box::new(l), Box::new(r))
    }

    pub fn or(l: Formula, r: Formula) -> Formula {
        Formula::Or(Box::new(l), Box::new(r))
    }

    pub fn imp(l: Formula, r: Formula) -> Formula {
        Formula::Imp(Box::new(l), Box::new(r))
    }

    pub fn coimp(l: Formula, r: Formula) -> Formula {
        Formula::Coimp(Box::new(l), Box::new(r))
    }

    pub fn snot(f: Formula) -> Formula {
        Formula::Snot(Box::new(f))
    }

    /// The formula that defines strong negation of `a`:
    /// `(a & (a -> (a -< a))) | ((a -> a) -< a)`.
    pub fn negation_definiens(a: &Formula) -> Formula {
        let left = Formula::and(
            a.clone(),
            Formula::imp(a.clone(), Formula::coimp(a.clone(), a.clone())),
        );
        let right = Formula::coimp(Formula::imp(a.clone(), a.clone()), a.clone());
        Formula::or(left, right)
    }

    fn binary(&self) -> Option<(BinOp, &Formula, &Formula)> {
        match self {
            Formula::And(l, r) => Some((BinOp::And, l, r)),
            Formula::Or(l, r) => Some((BinOp::Or, l, r)),
            Formula::Imp(l, r) => Some((BinOp::Imp, l, r)),
            Formula::Coimp(l, r) => Some((BinOp::Coimp, l, r)),
            _ => None,
        }
    }

    fn from_binary(op: BinOp, l: Formula, r: Formula) -> Formula {
        match op {
            BinOp::And => Formula::and(l, r),
            BinOp::Or => Formula::or(l, r),
            BinOp::Imp => Formula::imp(l, r),
            BinOp::Coimp => Formula::coimp(l, r),
        }
    }

    /// Parses formula text. See the module docs for the syntax.
    pub fn parse(text: &str) -> Result<Formula, ParseError> {
        Parser::new(text).parse_complete()
    }

    /// Number of connective and atom nodes.
    pub fn size(&self) -> usize {
        match self {
            Formula::Atom(_) | Formula::Top | Formula::Bot => 1,
            Formula::Snot(f) => 1 + f.size(),
            Formula::And(l, r) | Formula::Or(l, r) | Formula::Imp(l, r) | Formula::Coimp(l, r) => {
                1 + l.size() + r.size()
            }
        }
    }

    /// Height of the syntax tree; atoms and constants have depth 0.
    pub fn depth(&self) -> usize {
        match self {
            Formula::Atom(_) | Formula::Top | Formula::Bot => 0,
            Formula::Snot(f) => 1 + f.depth(),
            Formula::And(l, r) | Formula::Or(l, r) | Formula::Imp(l, r) | Formula::Coimp(l, r) => {
                1 + l.depth().max(r.depth())
            }
        }
    }

    pub fn is_snot_free(&self) -> bool {
        match self {
            Formula::Atom(_) | Formula::Top | Formula::Bot => true,
            Formula::Snot(_) => false,
            Formula::And(l, r) | Formula::Or(l, r) | Formula::Imp(l, r) | Formula::Coimp(l, r) => {
                l.is_snot_free() && r.is_snot_free()
            }
        }
    }

    /// Atom names occurring in the formula.
    pub fn atoms(&self) -> BTreeSet<&str> {
        let mut out = BTreeSet::new();
        self.collect_atoms(&mut out);
        out
    }

    fn collect_atoms<'a>(&'a self, out: &mut BTreeSet<&'a str>) {
        match self {
            Formula::Atom(p) => {
                out.insert(p.as_str());
            }
            Formula::Top | Formula::Bot => {}
            Formula::Snot(f) => f.collect_atoms(out),
            Formula::And(l, r) | Formula::Or(l, r) | Formula::Imp(l, r) | Formula::Coimp(l, r) => {
                l.collect_atoms(out);
                r.collect_atoms(out);
            }
        }
    }

    /// Adds every subformula (including `self`) to `out`.
    pub fn collect_subformulas(&self, out: &mut BTreeSet<Formula>) {
        if !out.insert(self.clone()) {
            return;
        }
        match self {
            Formula::Atom(_) | Formula::Top | Formula::Bot => {}
            Formula::Snot(f) => f.collect_subformulas(out),
            Formula::And(l, r) | Formula::Or(l, r) | Formula::Imp(l, r) | Formula::Coimp(l, r) => {
                l.collect_subformulas(out);
                r.collect_subformulas(out);
            }
        }
    }

    /// Uniform substitution of `replacement` for every occurrence of the atom `atom`.
    pub fn substitute(&self, atom: &str, replacement: &Formula) -> Formula {
        match self {
            Formula::Atom(p) if p == atom => replacement.clone(),
            Formula::Atom(_) | Formula::Top | Formula::Bot => self.clone(),
            Formula::Snot(f) => Formula::snot(f.substitute(atom, replacement)),
            Formula::And(l, r) => {
                Formula::and(l.substitute(atom, replacement), r.substitute(atom, replacement))
            }
            Formula::Or(l, r) => {
                Formula::or(l.substitute(atom, replacement), r.substitute(atom, replacement))
            }
            Formula::Imp(l, r) => {
                Formula::imp(l.substitute(atom, replacement), r.substitute(atom, replacement))
            }
            Formula::Coimp(l, r) => {
                Formula::coimp(l.substitute(atom, replacement), r.substitute(atom, replacement))
            }
        }
    }

    /// Rewrites every `~X`, innermost first, to the defining formula of the
    /// expanded `X`. The result is Snot-free.
    pub fn expand_strong_negation(&self) -> Formula {
        match self {
            Formula::Atom(_) | Formula::Top | Formula::Bot => self.clone(),
            Formula::Snot(f) => Formula::negation_definiens(&f.expand_strong_negation()),
            Formula::And(l, r) => {
                Formula::and(l.expand_strong_negation(), r.expand_strong_negation())
            }
            Formula::Or(l, r) => Formula::or(l.expand_strong_negation(), r.expand_strong_negation()),
            Formula::Imp(l, r) => {
                Formula::imp(l.expand_strong_negation(), r.expand_strong_negation())
            }
            Formula::Coimp(l, r) => {
                Formula::coimp(l.expand_strong_negation(), r.expand_strong_negation())
            }
        }
    }

    fn fmt_operand(&self, f: &mut fmt::Formatter<'_>, parent: BinOp, left: bool) -> fmt::Result {
        let parens = match self.binary() {
            None => false,
            Some((op, _, _)) if op == parent => left != parent.left_assoc(),
            Some(_) => true,
        };
        if parens {
            write!(f, "({self})")
        } else {
            write!(f, "{self}")
        }
    }
}

/// Prints ASCII syntax. Operands of a different binary connective are always
/// parenthesised; chains of one connective elide parentheses along its
/// associativity.
impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Formula::Atom(p) => f.write_str(p),
            Formula::Top => f.write_str("T"),
            Formula::Bot => f.write_str("F"),
            Formula::Snot(inner) => {
                if inner.binary().is_some() {
                    write!(f, "~({inner})")
                } else {
                    write!(f, "~{inner}")
                }
            }
            _ => {
                let (op, l, r) = self.binary().expect("binary connective");
                l.fmt_operand(f, op, true)?;
                write!(f, " {} ", op.symbol())?;
                r.fmt_operand(f, op, false)
            }
        }
    }
}

impl core::str::FromStr for Formula {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Formula::parse(s)
    }
}

/// A formula syntax error at a byte offset of the input.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    pub offset: usize,
    /// Descriptions of the tokens that would have been accepted.
    pub expected: Vec<&'static str>,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "at byte {}: {}", self.offset, self.message)?;
        if !self.expected.is_empty() {
            write!(f, " (expected one of: {})", self.expected.join(", "))?;
        }
        Ok(())
    }
}

impl core::error::Error for ParseError {}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Token {
    Ident(String),
    Top,
    Bot,
    Snot,
    Bin(BinOp),
    LParen,
    RParen,
    End,
}

impl Token {
    fn describe(&self) -> String {
        match self {
            Token::Ident(name) => alloc::format!("atom `{name}`"),
            Token::Top => "`T`".into(),
            Token::Bot => "`F`".into(),
            Token::Snot => "`~`".into(),
            Token::Bin(op) => alloc::format!("`{}`", op.symbol()),
            Token::LParen => "`(`".into(),
            Token::RParen => "`)`".into(),
            Token::End => "end of input".into(),
        }
    }
}

const OPERAND: &[&str] = &["atom", "`T`", "`F`", "`~`", "`(`"];

struct Parser<'a> {
    text: &'a str,
    pos: usize,
    peeked: Option<(usize, Token)>,
}

impl<'a> Parser<'a> {
    fn new(text: &'a str) -> Self {
        Parser { text, pos: 0, peeked: None }
    }

    fn lex(&mut self) -> Result<(usize, Token), ParseError> {
        let rest = &self.text[self.pos..];
        let trimmed = rest.trim_start();
        let start = self.pos + (rest.len() - trimmed.len());
        let mut chars = trimmed.chars();
        let Some(c) = chars.next() else {
            self.pos = start;
            return Ok((start, Token::End));
        };
        let (token, len) = match c {
            '(' => (Token::LParen, 1),
            ')' => (Token::RParen, 1),
            '~' | '∼' => (Token::Snot, c.len_utf8()),
            '&' | '∧' => (Token::Bin(BinOp::And), c.len_utf8()),
            '|' | '∨' => (Token::Bin(BinOp::Or), c.len_utf8()),
            '→' => (Token::Bin(BinOp::Imp), c.len_utf8()),
            '⤙' => (Token::Bin(BinOp::Coimp), c.len_utf8()),
            '⊤' => (Token::Top, c.len_utf8()),
            '⊥' => (Token::Bot, c.len_utf8()),
            '-' => match chars.next() {
                Some('>') => (Token::Bin(BinOp::Imp), 2),
                Some('<') => (Token::Bin(BinOp::Coimp), 2),
                _ => {
                    return Err(ParseError {
                        offset: start,
                        expected: alloc::vec!["`->`", "`-<`"],
                        message: "dangling `-`".into(),
                    })
                }
            },
            c if c.is_ascii_alphabetic() => {
                let len = trimmed
                    .find(|c: char| !(c.is_ascii_alphanumeric() || c == '_'))
                    .unwrap_or(trimmed.len());
                let word = &trimmed[..len];
                let token = match word {
                    "T" => Token::Top,
                    "F" => Token::Bot,
                    _ => Token::Ident(word.to_string()),
                };
                (token, len)
            }
            other => {
                return Err(ParseError {
                    offset: start,
                    expected: Vec::new(),
                    message: alloc::format!("unexpected character {other:?}"),
                })
            }
        };
        self.pos = start + len;
        Ok((start, token))
    }

    fn peek(&mut self) -> Result<&(usize, Token), ParseError> {
        if self.peeked.is_none() {
            let t = self.lex()?;
            self.peeked = Some(t);
        }
        Ok(self.peeked.as_ref().expect("peeked"))
    }

    fn next(&mut self) -> Result<(usize, Token), ParseError> {
        match self.peeked.take() {
            Some(t) => Ok(t),
            None => self.lex(),
        }
    }

    fn parse_complete(mut self) -> Result<Formula, ParseError> {
        let f = self.parse_implication()?;
        let (offset, token) = self.next()?;
        if token != Token::End {
            return Err(ParseError {
                offset,
                expected: alloc::vec!["`&`", "`|`", "`->`", "`-<`", "end of input"],
                message: alloc::format!("unexpected {}", token.describe()),
            });
        }
        Ok(f)
    }

    fn parse_implication(&mut self) -> Result<Formula, ParseError> {
        let lhs = self.parse_disjunction()?;
        match self.peek()?.1 {
            Token::Bin(op @ (BinOp::Imp | BinOp::Coimp)) => {
                self.next()?;
                self.parse_implication_chain(lhs, op)
            }
            _ => Ok(lhs),
        }
    }

    // Right-associative chain of a single implication kind.
    fn parse_implication_chain(&mut self, lhs: Formula, op: BinOp) -> Result<Formula, ParseError> {
        let rhs = self.parse_disjunction()?;
        let rhs = match self.peek()?.clone() {
            (_, Token::Bin(next)) if next == op => {
                self.next()?;
                self.parse_implication_chain(rhs, op)?
            }
            (offset, Token::Bin(next @ (BinOp::Imp | BinOp::Coimp))) => {
                return Err(ParseError {
                    offset,
                    expected: alloc::vec![op.symbol_expected()],
                    message: alloc::format!(
                        "`{}` and `{}` may not be mixed without parentheses",
                        op.symbol(),
                        next.symbol()
                    ),
                })
            }
            _ => rhs,
        };
        Ok(Formula::from_binary(op, lhs, rhs))
    }

    fn parse_disjunction(&mut self) -> Result<Formula, ParseError> {
        let mut acc = self.parse_conjunction()?;
        while self.peek()?.1 == Token::Bin(BinOp::Or) {
            self.next()?;
            let rhs = self.parse_conjunction()?;
            acc = Formula::or(acc, rhs);
        }
        Ok(acc)
    }

    fn parse_conjunction(&mut self) -> Result<Formula, ParseError> {
        let mut acc = self.parse_unary()?;
        while self.peek()?.1 == Token::Bin(BinOp::And) {
            self.next()?;
            let rhs = self.parse_unary()?;
            acc = Formula::and(acc, rhs);
        }
        Ok(acc)
    }

    fn parse_unary(&mut self) -> Result<Formula, ParseError> {
        let (offset, token) = self.next()?;
        match token {
            Token::Snot => Ok(Formula::snot(self.parse_unary()?)),
            Token::Top => Ok(Formula::Top),
            Token::Bot => Ok(Formula::Bot),
            Token::Ident(name) => Ok(Formula::Atom(name)),
            Token::LParen => {
                let inner = self.parse_implication()?;
                let (offset, token) = self.next()?;
                if token != Token::RParen {
                    return Err(ParseError {
                        offset,
                        expected: alloc::vec!["`)`"],
                        message: alloc::format!("unexpected {}", token.describe()),
                    });
                }
                Ok(inner)
            }
            other => Err(ParseError {
                offset,
                expected: OPERAND.to_vec(),
                message: alloc::format!("unexpected {}", other.describe()),
            }),
        }
    }
}

impl BinOp {
    fn symbol_expected(self) -> &'static str {
        match self {
            BinOp::Imp => "`->`",
            BinOp::Coimp => "`-<`",
            BinOp::And => "`&`",
            BinOp::Or => "`|`",
        }
    }
}
