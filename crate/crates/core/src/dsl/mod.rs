//! A small language for string diagrams.
//!
//! A program names one instance in its header, binds objects, morphisms and
//! triples, and then prints values or asserts equalities:
//!
//! ```text
//! instance finvect
//!
//! obj X = vec(3);
//! print coev(X) ; s(X, dual(X)) ; ev(X);
//! assert_equal(trace(id(X)), 3);
//! ```
//!
//! `f ; g` is diagrammatic composition (first `f`, then `g`, i.e. `g ∘ f`)
//! and `*` is the tensor product, binding tighter than `;`. The full grammar
//! is in `docs/dsl.md`.

pub mod ast;
pub mod eval;
pub mod lexer;
pub mod parser;
pub mod pretty;
pub mod typeck;

use std::collections::BTreeSet;
use std::fmt;

pub use eval::{evaluate, AssertResult, Outcome, Value};
pub use parser::{parse, parse_expr};
pub use typeck::{typecheck, Ty, TypedProgram};

/// A source range; lines and columns start at 1 and `end_col` is exclusive.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Span {
    pub line: usize,
    pub col: usize,
    pub end_line: usize,
    pub end_col: usize,
}

impl Span {
    pub fn new(line: usize, col: usize, end_line: usize, end_col: usize) -> Self {
        Span { line, col, end_line, end_col }
    }

    pub fn point(line: usize, col: usize) -> Self {
        Span::new(line, col, line, col + 1)
    }

    pub fn join(self, other: Span) -> Span {
        Span { end_line: other.end_line, end_col: other.end_col, ..self }
    }
}

impl fmt::Display for Span {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.line, self.col)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DslErrorKind {
    Lex,
    Parse { expected: BTreeSet<String> },
    Type,
    Capability,
    Eval,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DslError {
    pub kind: DslErrorKind,
    pub span: Span,
    pub message: String,
}

impl DslError {
    pub fn lex(span: Span, message: String) -> Self {
        DslError { kind: DslErrorKind::Lex, span, message }
    }

    pub fn parse(span: Span, message: String, expected: BTreeSet<String>) -> Self {
        DslError { kind: DslErrorKind::Parse { expected }, span, message }
    }

    pub fn type_error(span: Span, message: impl Into<String>) -> Self {
        DslError { kind: DslErrorKind::Type, span, message: message.into() }
    }

    pub fn capability(span: Span, message: impl Into<String>) -> Self {
        DslError { kind: DslErrorKind::Capability, span, message: message.into() }
    }

    pub fn eval(span: Span, message: impl Into<String>) -> Self {
        DslError { kind: DslErrorKind::Eval, span, message: message.into() }
    }

    pub fn kind_name(&self) -> &'static str {
        match self.kind {
            DslErrorKind::Lex => "LexError",
            DslErrorKind::Parse { .. } => "ParseError",
            DslErrorKind::Type => "TypeError",
            DslErrorKind::Capability => "CapabilityError",
            DslErrorKind::Eval => "EvalError",
        }
    }
}

impl fmt::Display for DslError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}: {}", self.span, self.kind_name(), self.message)?;
        if let DslErrorKind::Parse { expected } = &self.kind {
            if !expected.is_empty() {
                let list: Vec<&str> = expected.iter().map(String::as_str).collect();
                write!(f, "; expected {}", list.join(", "))?;
            }
        }
        Ok(())
    }
}

impl std::error::Error for DslError {}

/// Parses, typechecks and evaluates a program.
pub fn run_source(text: &str) -> Result<Outcome, DslError> {
    let program = parse(text)?;
    let typed = typecheck(&program)?;
    evaluate(&typed)
}
