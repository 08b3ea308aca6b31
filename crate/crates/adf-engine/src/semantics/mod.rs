//! Enumeration of interpretations under the supported semantics.
//!
//! All engines are pure functions of an immutable framework and return a
//! [`ResultSet`] in a deterministic order, so repeated runs and golden
//! tests compare directly. The conflict-free semantics yields plain
//! statement sets; all others yield three-valued interpretations (models
//! and stable models happen to be two-valued).

use std::cmp::Ordering;
use std::fmt;

use crate::adf::{Adf, StatementId};
use crate::interpretation::Interpretation;
use crate::operator::least_fixpoint;
use crate::transform::reduct;
use crate::truth::Truth;

pub mod brute;
mod search;

pub use brute::{brute_force, brute_force_capped, DEFAULT_ORACLE_CAP};

/// The six supported semantics.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SemanticsKind {
    ConflictFree,
    Model,
    Stable,
    Grounded,
    Complete,
    Admissible,
}

impl SemanticsKind {
    /// All semantics in the order the command line reports them.
    pub const ALL: [SemanticsKind; 6] = [
        SemanticsKind::ConflictFree,
        SemanticsKind::Model,
        SemanticsKind::Stable,
        SemanticsKind::Grounded,
        SemanticsKind::Complete,
        SemanticsKind::Admissible,
    ];
}

impl fmt::Display for SemanticsKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            SemanticsKind::ConflictFree => "conflict-free",
            SemanticsKind::Model => "model",
            SemanticsKind::Stable => "stable",
            SemanticsKind::Grounded => "grounded",
            SemanticsKind::Complete => "complete",
            SemanticsKind::Admissible => "admissible",
        };
        write!(f, "{name}")
    }
}

/// The payload of a result set: interpretations for most semantics,
/// statement sets for the conflict-free one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ResultItems {
    Interpretations(Vec<Interpretation>),
    Sets(Vec<Vec<StatementId>>),
}

/// The outcome of running one semantics: deduplicated and sorted by the
/// statement-indexed value vector with true < false < unknown per
/// position (members sort before non-members for sets).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResultSet {
    semantics: SemanticsKind,
    items: ResultItems,
}

impl ResultSet {
    pub(crate) fn new(semantics: SemanticsKind, items: ResultItems) -> Self {
        let items = match items {
            ResultItems::Interpretations(mut interpretations) => {
                interpretations.sort_by(compare_interpretations);
                interpretations.dedup();
                ResultItems::Interpretations(interpretations)
            }
            ResultItems::Sets(mut sets) => {
                sets.sort_by(|a, b| compare_sets(a, b));
                sets.dedup();
                ResultItems::Sets(sets)
            }
        };
        ResultSet { semantics, items }
    }

    pub fn semantics(&self) -> SemanticsKind {
        self.semantics
    }

    pub fn len(&self) -> usize {
        match &self.items {
            ResultItems::Interpretations(items) => items.len(),
            ResultItems::Sets(items) => items.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn items(&self) -> &ResultItems {
        &self.items
    }

    pub fn interpretations(&self) -> Option<&[Interpretation]> {
        match &self.items {
            ResultItems::Interpretations(items) => Some(items),
            ResultItems::Sets(_) => None,
        }
    }

    pub fn sets(&self) -> Option<&[Vec<StatementId>]> {
        match &self.items {
            ResultItems::Sets(items) => Some(items),
            ResultItems::Interpretations(_) => None,
        }
    }
}

fn value_rank(value: Truth) -> u8 {
    match value {
        Truth::True => 0,
        Truth::False => 1,
        Truth::Unknown => 2,
    }
}

pub(crate) fn compare_interpretations(a: &Interpretation, b: &Interpretation) -> Ordering {
    for (x, y) in a.values().iter().zip(b.values()) {
        match value_rank(*x).cmp(&value_rank(*y)) {
            Ordering::Equal => {}
            order => return order,
        }
    }
    Ordering::Equal
}

fn compare_sets(a: &[StatementId], b: &[StatementId]) -> Ordering {
    // sets arrive sorted by index; compare membership vectors
    let mut ai = a.iter().peekable();
    let mut bi = b.iter().peekable();
    loop {
        match (ai.peek(), bi.peek()) {
            (None, None) => return Ordering::Equal,
            // the set that still has members contains the next index
            (Some(_), None) => return Ordering::Less,
            (None, Some(_)) => return Ordering::Greater,
            (Some(&&x), Some(&&y)) => match x.cmp(&y) {
                Ordering::Equal => {
                    ai.next();
                    bi.next();
                }
                // the smaller index belongs to exactly one set; that set
                // has a member where the other has none
                order => return order,
            },
        }
    }
}

/// Interpretations below their revision: `v <= gamma(v)` pointwise.
pub fn enumerate_admissible(adf: &Adf) -> ResultSet {
    ResultSet::new(
        SemanticsKind::Admissible,
        ResultItems::Interpretations(search::enumerate_three_valued(
            adf,
            search::Goal::Admissible,
        )),
    )
}

/// Fixpoints of the revision operator.
pub fn enumerate_complete(adf: &Adf) -> ResultSet {
    ResultSet::new(
        SemanticsKind::Complete,
        ResultItems::Interpretations(search::enumerate_three_valued(adf, search::Goal::Complete)),
    )
}

/// The least fixpoint, as a singleton result.
pub fn grounded(adf: &Adf) -> ResultSet {
    ResultSet::new(
        SemanticsKind::Grounded,
        ResultItems::Interpretations(vec![least_fixpoint(adf)]),
    )
}

/// Two-valued fixpoints.
pub fn enumerate_models(adf: &Adf) -> ResultSet {
    ResultSet::new(
        SemanticsKind::Model,
        ResultItems::Interpretations(search::enumerate_two_valued_fixpoints(adf)),
    )
}

/// Models whose accepted statements ground their own reduct: the least
/// fixpoint of the reduced framework must accept every surviving
/// statement.
pub fn enumerate_stable(adf: &Adf) -> ResultSet {
    let stable = search::enumerate_two_valued_fixpoints(adf)
        .into_iter()
        .filter(|model| {
            least_fixpoint(&reduct(adf, model))
                .values()
                .iter()
                .all(|&value| value == Truth::True)
        })
        .collect();
    ResultSet::new(SemanticsKind::Stable, ResultItems::Interpretations(stable))
}

/// Sets whose members are all accepted by their condition restricted to
/// the set.
pub fn enumerate_conflict_free(adf: &Adf) -> ResultSet {
    ResultSet::new(
        SemanticsKind::ConflictFree,
        ResultItems::Sets(search::enumerate_conflict_free(adf)),
    )
}

/// Runs the engine for `kind`.
pub fn compute(adf: &Adf, kind: SemanticsKind) -> ResultSet {
    match kind {
        SemanticsKind::ConflictFree => enumerate_conflict_free(adf),
        SemanticsKind::Model => enumerate_models(adf),
        SemanticsKind::Stable => enumerate_stable(adf),
        SemanticsKind::Grounded => grounded(adf),
        SemanticsKind::Complete => enumerate_complete(adf),
        SemanticsKind::Admissible => enumerate_admissible(adf),
    }
}
