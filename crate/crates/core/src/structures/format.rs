//! Line-oriented structure file format.
//!
//! ```text
//! structure <name>
//! universe <s>
//! constant <name> <value>
//! function <name> <k>      followed by s^k values, last argument fastest
//! relation <name> <k>      followed by `tuples <t>` and t tuples of k values
//! end
//! ```
//!
//! `#` starts a comment. Serialization is canonical: constants, functions,
//! relations, each sorted by name; tables written one row of `s` values per
//! line; relation tuples in ascending rank order.

use std::fmt::Write;

use super::{is_identifier, FiniteStructure};
use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::orbits::TupleSet;

#[derive(Clone, Copy, Debug)]
struct Token<'a> {
    text: &'a str,
    line: usize,
    column: usize,
}

fn tokenize(text: &str) -> Vec<Token<'_>> {
    let mut tokens = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("");
        let mut rest = line;
        let mut offset = 0;
        while let Some(start) = rest.find(|c: char| !c.is_whitespace()) {
            let tail = &rest[start..];
            let len = tail.find(char::is_whitespace).unwrap_or(tail.len());
            let byte = offset + start;
            tokens.push(Token {
                text: &tail[..len],
                line: idx + 1,
                column: line[..byte].chars().count() + 1,
            });
            offset = byte + len;
            rest = &line[offset..];
        }
    }
    tokens
}

struct Parser<'a> {
    tokens: Vec<Token<'a>>,
    pos: usize,
    eof: (usize, usize),
}

impl<'a> Parser<'a> {
    fn syntax(at: (usize, usize), message: impl Into<String>) -> Error {
        Error::Syntax {
            line: at.0,
            column: at.1,
            message: message.into(),
        }
    }

    fn peek(&self) -> Option<Token<'a>> {
        self.tokens.get(self.pos).copied()
    }

    fn next(&mut self, what: &str) -> Result<Token<'a>> {
        let tok = self
            .peek()
            .ok_or_else(|| Self::syntax(self.eof, format!("unexpected end of input, expected {what}")))?;
        self.pos += 1;
        Ok(tok)
    }

    fn keyword(&mut self, kw: &str) -> Result<Token<'a>> {
        let tok = self.next(&format!("`{kw}`"))?;
        if tok.text != kw {
            return Err(Self::syntax(
                (tok.line, tok.column),
                format!("expected `{kw}`, found `{}`", tok.text),
            ));
        }
        Ok(tok)
    }

    fn identifier(&mut self) -> Result<Token<'a>> {
        let tok = self.next("an identifier")?;
        if !is_identifier(tok.text) {
            return Err(Self::syntax(
                (tok.line, tok.column),
                format!("`{}` is not an identifier", tok.text),
            ));
        }
        Ok(tok)
    }

    fn natural(&mut self, what: &str) -> Result<(usize, Token<'a>)> {
        let tok = self.next(what)?;
        let value = tok
            .text
            .parse::<usize>()
            .map_err(|_| Self::syntax((tok.line, tok.column), format!("expected {what}, found `{}`", tok.text)))?;
        Ok((value, tok))
    }

    fn element(&mut self, size: usize) -> Result<usize> {
        let (value, tok) = self.natural("an element")?;
        if value >= size {
            return Err(Error::OutOfRange {
                value: tok.text.to_string(),
                size,
                line: tok.line,
                column: tok.column,
            });
        }
        Ok(value)
    }

    fn at_integer(&self) -> bool {
        self.peek().is_some_and(|t| t.text.bytes().all(|b| b.is_ascii_digit()))
    }
}

/// Parses one structure in the file format above.
pub fn parse_structure(text: &str) -> Result<FiniteStructure> {
    let tokens = tokenize(text);
    let eof = tokens
        .last()
        .map_or((1, 1), |t| (t.line, t.column + t.text.chars().count()));
    let mut p = Parser { tokens, pos: 0, eof };

    p.keyword("structure")?;
    let name = p.identifier()?;
    p.keyword("universe")?;
    let (size, size_tok) = p.natural("the universe size")?;
    if size == 0 {
        return Err(Parser::syntax(
            (size_tok.line, size_tok.column),
            "universe must be at least 1",
        ));
    }
    let mut structure = FiniteStructure::new(name.text, size)?;

    loop {
        let tok = p.next("a declaration or `end`")?;
        match tok.text {
            "end" => break,
            "constant" => {
                let sym = p.identifier()?;
                let value = p.element(size)?;
                structure.add_constant(sym.text, value).map_err(|e| located(e, sym))?;
            }
            "function" => {
                let sym = p.identifier()?;
                let (arity, arity_tok) = p.natural("an arity")?;
                if arity == 0 {
                    return Err(Parser::syntax(
                        (arity_tok.line, arity_tok.column),
                        "function arity must be at least 1",
                    ));
                }
                let expected = Limits::default()
                    .tuple_space(size, arity)
                    .map_err(|e| located(e, arity_tok))?;
                let mut table = Vec::with_capacity(expected);
                while table.len() < expected {
                    if !p.at_integer() {
                        let at = p.peek().map_or(p.eof, |t| (t.line, t.column));
                        return Err(Error::WrongTableLength {
                            symbol: sym.text.to_string(),
                            expected,
                            found: table.len(),
                            line: at.0,
                            column: at.1,
                        });
                    }
                    table.push(p.element(size)?);
                }
                if p.at_integer() {
                    let extra = p.peek().expect("checked");
                    return Err(Error::WrongTableLength {
                        symbol: sym.text.to_string(),
                        expected,
                        found: expected + 1,
                        line: extra.line,
                        column: extra.column,
                    });
                }
                structure
                    .add_function(sym.text, arity, table)
                    .map_err(|e| located(e, sym))?;
            }
            "relation" => {
                let sym = p.identifier()?;
                let (arity, arity_tok) = p.natural("an arity")?;
                if arity == 0 {
                    return Err(Parser::syntax(
                        (arity_tok.line, arity_tok.column),
                        "relation arity must be at least 1",
                    ));
                }
                p.keyword("tuples")?;
                let (count, _) = p.natural("a tuple count")?;
                let mut set = TupleSet::empty(size, arity).map_err(|e| located(e, arity_tok))?;
                let mut tuple = vec![0; arity];
                for _ in 0..count {
                    let first = p.peek();
                    for slot in tuple.iter_mut() {
                        if !p.at_integer() {
                            let at = p.peek().map_or(p.eof, |t| (t.line, t.column));
                            return Err(Parser::syntax(
                                at,
                                format!(
                                    "relation `{}` declares {count} tuples of {arity} elements; input ends early",
                                    sym.text
                                ),
                            ));
                        }
                        *slot = p.element(size)?;
                    }
                    if !set.insert(&tuple)? {
                        let at = first.map_or(p.eof, |t| (t.line, t.column));
                        return Err(Parser::syntax(
                            at,
                            format!("duplicate tuple {tuple:?} in relation `{}`", sym.text),
                        ));
                    }
                }
                if p.at_integer() {
                    let extra = p.peek().expect("checked");
                    return Err(Parser::syntax(
                        (extra.line, extra.column),
                        format!(
                            "relation `{}` has more values than its declared {count} tuples",
                            sym.text
                        ),
                    ));
                }
                structure.add_relation(sym.text, set).map_err(|e| located(e, sym))?;
            }
            other => {
                return Err(Parser::syntax(
                    (tok.line, tok.column),
                    format!("expected `constant`, `function`, `relation` or `end`, found `{other}`"),
                ))
            }
        }
    }
    if let Some(tok) = p.peek() {
        return Err(Parser::syntax(
            (tok.line, tok.column),
            format!("unexpected `{}` after `end`", tok.text),
        ));
    }
    Ok(structure)
}

fn located(err: Error, tok: Token<'_>) -> Error {
    match err {
        Error::DuplicateSymbol(_) | Error::TupleBudget { .. } => Error::Syntax {
            line: tok.line,
            column: tok.column,
            message: err.to_string(),
        },
        other => other,
    }
}

/// Canonical text form; `parse_structure(serialize_structure(s)) == s`.
pub fn serialize_structure(structure: &FiniteStructure) -> String {
    let s = structure.size();
    let mut out = String::new();
    let _ = writeln!(out, "structure {}", structure.name());
    let _ = writeln!(out, "universe {s}");
    for c in structure.constants() {
        let _ = writeln!(out, "constant {} {}", c.name, c.value);
    }
    for f in structure.functions() {
        let _ = writeln!(out, "function {} {}", f.name, f.arity);
        for row in f.table.chunks(s) {
            out.push_str(&join(row));
            out.push('\n');
        }
    }
    for r in structure.relations() {
        let _ = writeln!(out, "relation {} {}", r.name, r.arity());
        let _ = writeln!(out, "tuples {}", r.tuples.len());
        for t in r.tuples.tuples() {
            out.push_str(&join(&t));
            out.push('\n');
        }
    }
    out.push_str("end\n");
    out
}

fn join(values: &[usize]) -> String {
    values.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" ")
}
