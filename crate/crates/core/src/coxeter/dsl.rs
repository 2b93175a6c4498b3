//! Text format for Coxeter graphs.
//!
//! ```text
//! # comment
//! nodes a b c;
//! edge a b 3;
//! edge b c oo;
//! ```
//!
//! Statements end with `;` or a newline. Unlisted pairs of distinct nodes get
//! label 2. Identifiers use letters, digits, `_` and `'`.

use std::collections::HashMap;

use crate::error::{Error, ParseError, Result};
use crate::label::Label;

use super::system::CoxeterSystem;

#[derive(Debug, Clone, PartialEq, Eq)]
struct Token {
    text: String,
    line: usize,
    column: usize,
}

fn err(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse(ParseError {
        line,
        column,
        message: message.into(),
    })
}

/// Splits the input into statements, each a list of tokens.
fn statements(text: &str) -> Result<Vec<Vec<Token>>> {
    let mut out = Vec::new();
    let mut current: Vec<Token> = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = lineno + 1;
        let content = raw.split('#').next().unwrap_or("");
        let mut chars = content.char_indices().peekable();
        while let Some(&(pos, ch)) = chars.peek() {
            let column = content[..pos].chars().count() + 1;
            if ch.is_whitespace() {
                chars.next();
            } else if ch == ';' {
                chars.next();
                if !current.is_empty() {
                    out.push(std::mem::take(&mut current));
                }
            } else if ch.is_alphanumeric() || ch == '_' || ch == '\'' || ch == '∞' {
                let mut tok = String::new();
                while let Some(&(_, c)) = chars.peek() {
                    if c.is_alphanumeric() || c == '_' || c == '\'' || c == '∞' {
                        tok.push(c);
                        chars.next();
                    } else {
                        break;
                    }
                }
                current.push(Token { text: tok, line, column });
            } else {
                return Err(err(line, column, format!("unexpected character `{ch}`")));
            }
        }
        if !current.is_empty() {
            out.push(std::mem::take(&mut current));
        }
    }
    Ok(out)
}

/// Parses the graph DSL into a Coxeter system.
pub fn parse_system(text: &str) -> Result<CoxeterSystem> {
    let stmts = statements(text)?;
    let mut names: Vec<String> = Vec::new();
    let mut index: HashMap<String, usize> = HashMap::new();
    let mut labels: HashMap<(usize, usize), (Label, usize)> = HashMap::new();
    let mut edges: Vec<(usize, usize, Label)> = Vec::new();
    let mut saw_nodes = false;

    for stmt in &stmts {
        let head = &stmt[0];
        match head.text.as_str() {
            "nodes" => {
                saw_nodes = true;
                if stmt.len() < 2 {
                    return Err(err(head.line, head.column, "`nodes` needs at least one identifier"));
                }
                for tok in &stmt[1..] {
                    if index.contains_key(&tok.text) {
                        return Err(err(tok.line, tok.column, format!("duplicate node `{}`", tok.text)));
                    }
                    index.insert(tok.text.clone(), names.len());
                    names.push(tok.text.clone());
                }
            }
            "edge" => {
                if stmt.len() != 4 {
                    return Err(err(
                        head.line,
                        head.column,
                        "expected `edge <id> <id> <label>`",
                    ));
                }
                let lookup = |tok: &Token| {
                    index
                        .get(&tok.text)
                        .copied()
                        .ok_or_else(|| err(tok.line, tok.column, format!("unknown node `{}`", tok.text)))
                };
                let a = lookup(&stmt[1])?;
                let b = lookup(&stmt[2])?;
                let lt = &stmt[3];
                if a == b {
                    return Err(err(stmt[2].line, stmt[2].column, "edge joins a node to itself"));
                }
                let m: Label = lt
                    .text
                    .parse()
                    .map_err(|e: String| err(lt.line, lt.column, e))?;
                if matches!(m, Label::Finite(k) if k < 2) {
                    return Err(err(lt.line, lt.column, format!("label {m} is below 2")));
                }
                let key = (a.min(b), a.max(b));
                if let Some(&(prev, prev_line)) = labels.get(&key) {
                    if prev != m {
                        return Err(err(
                            lt.line,
                            lt.column,
                            format!(
                                "conflicting labels for {}-{}: {prev} (line {prev_line}) and {m}",
                                names[key.0], names[key.1]
                            ),
                        ));
                    }
                    continue;
                }
                labels.insert(key, (m, lt.line));
                edges.push((key.0, key.1, m));
            }
            other => {
                return Err(err(
                    head.line,
                    head.column,
                    format!("expected `nodes` or `edge`, found `{other}`"),
                ));
            }
        }
    }
    if !saw_nodes {
        return Err(err(1, 1, "missing `nodes` declaration"));
    }
    CoxeterSystem::from_edges(names, &edges)
}

/// Renders a system back into the DSL.
pub fn to_dsl(sys: &CoxeterSystem) -> String {
    let mut out = format!("nodes {};", sys.names().join(" "));
    for (i, j, m) in sys.graph().edges() {
        out.push_str(&format!(" edge {} {} {};", sys.name(*i), sys.name(*j), m));
    }
    out
}
