//! The three-valued revision operator and its least fixpoint.
//!
//! One operator application revises every statement to the consensus of
//! its condition over all two-valued completions of the input. The
//! computation is local: a statement's value only depends on its parents,
//! so it suffices to fix the parents decided true, drop those decided
//! false, and scan the table entries of every completion of the unknown
//! parents. The scan stops as soon as both a true and a false entry have
//! been seen, because the consensus is then already unknown.
//!
//! The operator is monotone with respect to the information ordering;
//! iterating it from the all-unknown interpretation therefore climbs to
//! the least fixpoint in at most one productive step per statement.

use crate::adf::{Adf, StatementId};
use crate::interpretation::Interpretation;
use crate::truth::Truth;

pub(crate) fn gamma_over(adf: &Adf, values: &[Truth], s: StatementId) -> Truth {
    let table = adf.condition(s);
    let mut base = 0usize;
    let mut unknown_mask = 0usize;
    for (bit, &parent) in table.parents().iter().enumerate() {
        match values[parent.index()] {
            Truth::True => base |= 1 << bit,
            Truth::False => {}
            Truth::Unknown => unknown_mask |= 1 << bit,
        }
    }
    let mut seen_true = false;
    let mut seen_false = false;
    let mut submask = unknown_mask;
    loop {
        if table.entry_bool(base | submask) {
            seen_true = true;
        } else {
            seen_false = true;
        }
        if seen_true && seen_false {
            return Truth::Unknown;
        }
        if submask == 0 {
            break;
        }
        submask = (submask - 1) & unknown_mask;
    }
    Truth::from_bool(seen_true)
}

/// Revised value of a single statement under `v`.
pub fn gamma_statement(adf: &Adf, v: &Interpretation, s: StatementId) -> Truth {
    gamma_over(adf, v.values(), s)
}

/// One full operator application; `v` is left untouched.
pub fn gamma(adf: &Adf, v: &Interpretation) -> Interpretation {
    let values = adf
        .statement_ids()
        .map(|s| gamma_over(adf, v.values(), s))
        .collect();
    Interpretation::from_values(values)
}

/// Iterates the operator from all-unknown until the first repeat and
/// returns every step, the fixpoint last. The number of productive steps
/// is bounded by the statement count; exceeding the bound would mean the
/// operator lost monotonicity, which is a bug.
pub fn least_fixpoint_trace(adf: &Adf) -> Vec<Interpretation> {
    let mut trace = vec![Interpretation::all_unknown(adf.statement_count())];
    for _ in 0..=adf.statement_count() {
        let next = gamma(adf, trace.last().expect("trace starts nonempty"));
        if Some(&next) == trace.last() {
            return trace;
        }
        trace.push(next);
    }
    unreachable!("operator iteration exceeded the statement-count bound");
}

/// The least fixpoint of the operator: the grounded interpretation.
pub fn least_fixpoint(adf: &Adf) -> Interpretation {
    least_fixpoint_trace(adf)
        .pop()
        .expect("trace is never empty")
}
