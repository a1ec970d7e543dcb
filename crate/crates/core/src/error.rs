use std::fmt;

use thiserror::Error;

/// A parse failure at a byte offset.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SyntaxError {
    pub offset: usize,
    pub expected: String,
    pub found: String,
}

impl fmt::Display for SyntaxError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "syntax error at byte {}: expected {}, found {}",
            self.offset, self.expected, self.found
        )
    }
}

impl std::error::Error for SyntaxError {}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Syntax(#[from] SyntaxError),
    #[error("invalid identifier `{0}`: expected [a-z][a-z0-9_]*")]
    InvalidName(String),
    #[error("term contains variables; close it first")]
    OpenTerm,
    #[error("U occurs but a two-valued operation was requested")]
    UndefinedInTwoValued,
    #[error("not a basic form: {0}")]
    NotBasicForm(String),
    #[error("not a mem-basic form: {0}")]
    NotMemBasicForm(String),
    #[error("valuation does not assign atom `{0}`")]
    UnboundAtom(String),
    #[error("atom `{0}` listed twice in order")]
    DuplicateInOrder(String),
    #[error("unknown axiom set `{0}`")]
    UnknownAxiomSet(String),
    #[error("axiom file line {line}: {msg}")]
    AxiomFile { line: usize, msg: String },
    #[error("equation `{0}` mixes the conditional and sequential signatures")]
    MixedSignature(String),
    #[error("model search: {0}")]
    Unsupported(String),
}
