//! A semantics engine for abstract dialectical frameworks (ADFs).
//!
//! An ADF is a directed graph of statements where each statement carries
//! a total acceptance condition over the subsets of its parents. A
//! three-valued interpretation maps every statement to true, false or
//! unknown; the revision operator checks each condition against all
//! two-valued completions of an interpretation and keeps what they agree
//! on. The engine enumerates interpretations under the conflict-free,
//! admissible, complete, grounded, two-valued model and stable semantics.
//!
//! # Input formats
//!
//! Instances are plain-text fact files in one of three dialects, told
//! apart by their predicates (see [`syntax`]):
//!
//! * **functional** — explicit tables: `s/1` declares statements, `l/2`
//!   links, `ci`/`co` facts assign true/false to parent subsets;
//! * **formula** — `statement/1` plus `ac(s, phi)` with prefix formulas
//!   over `neg`, `and`, `or`, `imp`, `iff` and the constants `c(v)`,
//!   `c(f)`;
//! * **prioritised** — support (`lp/2`) and attack (`lm/2`) links with a
//!   strict preference order (`pref/2`).
//!
//! Formula and prioritised instances are compiled into table form by the
//! [`transform`] module before any semantics runs.
//!
//! # Example
//!
//! ```
//! use adf_engine::semantics;
//! use adf_engine::syntax::parse_functional;
//!
//! let adf = parse_functional("s(a). s(b). l(a,b). ci(a). co(b). ci(b,1,a).").unwrap();
//! let models = semantics::enumerate_models(&adf);
//! assert_eq!(models.len(), 1);
//! let grounded = semantics::grounded(&adf);
//! assert_eq!(grounded.interpretations().unwrap()[0].extension().len(), 2);
//! ```

pub mod adf;
pub mod cli;
pub mod error;
pub mod interpretation;
pub mod operator;
pub mod semantics;
pub mod syntax;
pub mod transform;
pub mod truth;

#[cfg(test)]
pub(crate) mod test_support;

pub use crate::adf::{AcceptanceTable, Adf, StatementId, Statements, MAX_PARENTS};
pub use crate::error::{Error, Location};
pub use crate::interpretation::Interpretation;
pub use crate::truth::Truth;
