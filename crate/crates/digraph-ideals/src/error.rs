use thiserror::Error;

/// Errors surfaced by graph construction, algebra, analysis, and input parsing.
///
/// `Parse` and `Graph` map to CLI exit code 2, `CapExceeded` to 3, `Usage` to 1;
/// everything else indicates an internal contract violation and also exits 2.
#[derive(Debug, Error)]
pub enum Error {
    /// Two polynomials (or a polynomial and an order) built over different variable tables.
    #[error("variable table mismatch: {0}")]
    VarTableMismatch(String),

    /// Leading term requested from the zero polynomial.
    #[error("the zero polynomial has no leading term")]
    ZeroLeadingTerm,

    /// Division or inversion by zero in the coefficient field.
    #[error("division by zero")]
    DivisionByZero,

    /// An operation required a Groebner (or reduced) basis but got a raw one.
    #[error("basis is not a Groebner basis: {0}")]
    BasisNotGroebner(String),

    /// Text that does not parse as a polynomial over the given variables.
    #[error("polynomial parse error: {0}")]
    PolyParse(String),

    /// Graph construction or validation failure (loops, duplicate edges, unknown labels...).
    #[error("invalid graph: {0}")]
    Graph(String),

    /// A structural guarantee from the theory failed to hold on concrete data.
    #[error("structural check failed: {0}")]
    Structural(String),

    /// Enumeration exceeded its configured cap.
    #[error("{what} enumeration exceeded cap of {cap}")]
    CapExceeded { what: &'static str, cap: usize },

    /// Malformed input file (JSON / DOT graph text).
    #[error("parse error: {0}")]
    Parse(String),

    /// Bad request: unknown flags, invalid variable priority, missing seed...
    #[error("usage error: {0}")]
    Usage(String),
}

pub type Result<T> = std::result::Result<T, Error>;
