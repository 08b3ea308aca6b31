//! Error and source-location types shared by the parsers and validators.

use std::fmt;

/// A 1-based line/column position in an instance file.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Location {
    pub line: usize,
    pub column: usize,
}

impl Location {
    pub fn new(line: usize, column: usize) -> Self {
        Location { line, column }
    }
}

impl fmt::Display for Location {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.line, self.column)
    }
}

/// Everything that can go wrong while reading or validating a framework.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// Lexical or grammatical error, including unexpected predicates,
    /// wrong fact arities and malformed formula terms.
    #[error("{0}: {1}")]
    Syntax(Location, String),

    /// A fact refers to a statement that no `s`/`statement` fact declares.
    #[error("{0}: undeclared statement `{1}`")]
    Undeclared(Location, String),

    /// A condition fact names a statement that is not linked as a parent.
    #[error("{0}: `{1}` is not a parent of `{2}`")]
    NotAParent(Location, String, String),

    /// A fact that must be unique per statement occurs twice.
    #[error("{0}: duplicate {1} for statement `{2}`")]
    Duplicate(Location, &'static str, String),

    /// A statement carries both `ci(s)` and `co(s)`.
    #[error("{0}: statement `{1}` has both a unary ci and a unary co fact")]
    ConflictingEmptySubset(Location, String),

    /// A statement carries neither `ci(s)` nor `co(s)`, leaving the
    /// empty parent subset undefined.
    #[error("statement `{0}` has no unary ci or co fact")]
    MissingEmptySubset(String),

    /// A declared statement has no `ac` fact in the formula dialect.
    #[error("statement `{0}` has no acceptance formula")]
    MissingFormula(String),

    /// Some parent subset is not covered by any ci/co group.
    #[error(
        "acceptance condition of `{statement}` is not total: subset {{{subset}}} is not covered"
    )]
    IncompleteCondition { statement: String, subset: String },

    /// Some parent subset is covered by more than one ci/co group.
    #[error("acceptance condition of `{statement}` is ambiguous: subset {{{subset}}} is covered more than once")]
    AmbiguousCondition { statement: String, subset: String },

    /// Explicit truth tables grow as 2^parents; refuse to build huge ones.
    #[error(
        "statement `{statement}` has {count} parents, exceeding the supported maximum of {max}"
    )]
    TooManyParents {
        statement: String,
        count: usize,
        max: usize,
    },

    /// The transitive closure of `pref` is not irreflexive.
    #[error("preference relation is not a strict partial order: `{0}` is preferred to itself")]
    PreferenceCycle(String),

    /// A hand-built framework violates a structural invariant.
    #[error("invalid framework: {0}")]
    Invalid(String),

    /// The brute-force oracle refuses instances above its cap.
    #[error("{0} statements exceed the brute-force cap of {1}")]
    OracleCap(usize, usize),
}
