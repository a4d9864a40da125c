//! Turtle subset: `@prefix`, IRIs, prefixed names, `a`, `;` and `,`
//! continuations, labelled and anonymous blank nodes, collections, quoted
//! strings with escapes, numbers, booleans and `#` comments.
//!
//! Not supported: `@base` and relative IRI resolution, long (triple-quoted)
//! strings, numeric exponents.

mod lexer;
mod parser;
mod writer;

use thiserror::Error;

pub use parser::parse_turtle;
pub use writer::serialize_turtle;

/// Position is 1-based, in characters.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("syntax error at line {line}, column {column}: {message}")]
pub struct SyntaxError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) struct Pos {
    pub line: usize,
    pub column: usize,
}

impl Pos {
    pub(crate) fn error(self, message: impl Into<String>) -> SyntaxError {
        SyntaxError { line: self.line, column: self.column, message: message.into() }
    }
}
