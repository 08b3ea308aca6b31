//! Parsers and serialiser for the three instance dialects.
//!
//! All dialects share the same fact-level surface syntax (see
//! [`facts`]); they differ in their predicate vocabulary:
//!
//! * functional — `s/1`, `l/2`, `ci/1`, `co/1`, `ci/3`, `co/3`
//! * formula — `statement/1`, `ac/2`
//! * prioritised — `s/1`, `lp/2`, `lm/2`, `pref/2`
//!
//! [`detect_dialect`] classifies an instance by the predicates it uses.

use std::fmt;

use crate::error::Error;

pub(crate) mod facts;
pub mod formula;
pub mod functional;
pub mod padf;

pub use formula::{parse_formula_adf, Formula, FormulaAdf};
pub use functional::{parse_functional, serialize_functional};
pub use padf::{parse_padf, Padf};

/// The three instance dialects.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Dialect {
    Functional,
    Formula,
    Padf,
}

impl fmt::Display for Dialect {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Dialect::Functional => write!(f, "functional"),
            Dialect::Formula => write!(f, "formula"),
            Dialect::Padf => write!(f, "prioritised"),
        }
    }
}

pub(crate) fn detect(facts: &[facts::Fact]) -> Dialect {
    let mut padf = false;
    for fact in facts {
        match fact.predicate.as_str() {
            "ac" | "statement" => return Dialect::Formula,
            "lp" | "lm" | "pref" => padf = true,
            _ => {}
        }
    }
    if padf {
        Dialect::Padf
    } else {
        Dialect::Functional
    }
}

/// Classifies an instance by its predicate vocabulary: `ac`/`statement`
/// facts mark the formula dialect, `lp`/`lm`/`pref` facts the prioritised
/// dialect, anything else is functional.
pub fn detect_dialect(input: &str) -> Result<Dialect, Error> {
    Ok(detect(&facts::read_facts(input)?))
}
