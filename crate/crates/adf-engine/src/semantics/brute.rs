//! Brute-force reference implementations of all semantics.
//!
//! Each predicate is evaluated in its literal definitional form over the
//! full candidate space: the revision operator is the statement-wise
//! consensus over all global two-valued completions, the grounded
//! interpretation is the information-least element of the fixpoint set,
//! and the stable check rebuilds the reduct from scratch. Nothing here
//! shares code with the search engines or the iterative operator, which
//! is the point: this module is the oracle the engines are differential-
//! tested against. Instances are capped because everything is
//! exponential.

use crate::adf::{AcceptanceTable, Adf, Link, Statements};
use crate::error::Error;
use crate::interpretation::Interpretation;
use crate::truth::Truth;

use super::{ResultItems, ResultSet, SemanticsKind};

/// Largest statement count the oracle accepts.
pub const DEFAULT_ORACLE_CAP: usize = 10;

/// Evaluates `kind` by exhaustive definitional enumeration with the
/// default cap.
pub fn brute_force(adf: &Adf, kind: SemanticsKind) -> Result<ResultSet, Error> {
    brute_force_capped(adf, kind, DEFAULT_ORACLE_CAP)
}

/// Evaluates `kind` by exhaustive definitional enumeration, refusing
/// instances with more than `cap` statements.
pub fn brute_force_capped(adf: &Adf, kind: SemanticsKind, cap: usize) -> Result<ResultSet, Error> {
    let n = adf.statement_count();
    if n > cap {
        return Err(Error::OracleCap(n, cap));
    }
    let items = match kind {
        SemanticsKind::ConflictFree => ResultItems::Sets(conflict_free(adf)),
        SemanticsKind::Model => ResultItems::Interpretations(models(adf)),
        SemanticsKind::Stable => ResultItems::Interpretations(stable(adf)),
        SemanticsKind::Grounded => ResultItems::Interpretations(vec![grounded(adf)]),
        SemanticsKind::Complete => ResultItems::Interpretations(fixpoints(adf)),
        SemanticsKind::Admissible => ResultItems::Interpretations(admissible(adf)),
    };
    Ok(ResultSet::new(kind, items))
}

/// All 3^n interpretations, counter order.
fn all_interpretations(n: usize) -> Vec<Interpretation> {
    let mut out = Vec::new();
    let mut digits = vec![0u8; n];
    loop {
        out.push(Interpretation::from_values(
            digits
                .iter()
                .map(|d| match d {
                    0 => Truth::True,
                    1 => Truth::False,
                    _ => Truth::Unknown,
                })
                .collect(),
        ));
        let mut i = 0;
        loop {
            if i == n {
                return out;
            }
            digits[i] += 1;
            if digits[i] < 3 {
                break;
            }
            digits[i] = 0;
            i += 1;
        }
    }
}

fn all_two_valued(n: usize) -> Vec<Interpretation> {
    (0..1usize << n)
        .map(|mask| {
            Interpretation::from_values(
                (0..n)
                    .map(|i| Truth::from_bool(mask & (1 << i) != 0))
                    .collect(),
            )
        })
        .collect()
}

/// The revision operator in its global form: the consensus of each
/// condition over every two-valued completion of `v`.
fn global_gamma(adf: &Adf, v: &Interpretation) -> Interpretation {
    let n = adf.statement_count();
    let unknown: Vec<usize> = (0..n)
        .filter(|&i| v.values()[i] == Truth::Unknown)
        .collect();
    let mut consensus: Vec<Option<Truth>> = vec![None; n];
    for completion in 0..1usize << unknown.len() {
        let mut accepted: Vec<bool> = v.values().iter().map(|&t| t == Truth::True).collect();
        for (bit, &i) in unknown.iter().enumerate() {
            accepted[i] = completion & (1 << bit) != 0;
        }
        for s in adf.statement_ids() {
            let table = adf.condition(s);
            let value = table.eval(
                table
                    .parents()
                    .iter()
                    .copied()
                    .filter(|p| accepted[p.index()]),
            );
            consensus[s.index()] = Some(match consensus[s.index()] {
                None => value,
                Some(previous) => previous.consensus(value),
            });
        }
    }
    Interpretation::from_values(
        consensus
            .into_iter()
            .map(|c| c.expect("at least one completion exists"))
            .collect(),
    )
}

fn admissible(adf: &Adf) -> Vec<Interpretation> {
    all_interpretations(adf.statement_count())
        .into_iter()
        .filter(|v| v.leq_info(&global_gamma(adf, v)))
        .collect()
}

fn fixpoints(adf: &Adf) -> Vec<Interpretation> {
    all_interpretations(adf.statement_count())
        .into_iter()
        .filter(|v| &global_gamma(adf, v) == v)
        .collect()
}

fn grounded(adf: &Adf) -> Interpretation {
    let fixpoints = fixpoints(adf);
    let least: Vec<&Interpretation> = fixpoints
        .iter()
        .filter(|candidate| fixpoints.iter().all(|other| candidate.leq_info(other)))
        .collect();
    assert_eq!(
        least.len(),
        1,
        "the fixpoint set must have a unique least element"
    );
    least[0].clone()
}

fn models(adf: &Adf) -> Vec<Interpretation> {
    all_two_valued(adf.statement_count())
        .into_iter()
        .filter(|v| &global_gamma(adf, v) == v)
        .collect()
}

fn stable(adf: &Adf) -> Vec<Interpretation> {
    models(adf)
        .into_iter()
        .filter(|v| {
            let reduced = rebuild_reduct(adf, v);
            grounded(&reduced)
                .values()
                .iter()
                .all(|&t| t == Truth::True)
        })
        .collect()
}

/// Reduct construction written out once more, independent of the
/// transform module.
fn rebuild_reduct(adf: &Adf, model: &Interpretation) -> Adf {
    let surviving = model.extension();
    let mut statements = Statements::default();
    let mut remap = vec![None; adf.statement_count()];
    for &old in &surviving {
        remap[old.index()] = Some(statements.intern(adf.statements().name(old)));
    }
    let links: Vec<Link> = adf
        .links()
        .iter()
        .filter_map(|(from, to)| Some((remap[from.index()]?, remap[to.index()]?)))
        .collect();
    let conditions = surviving
        .iter()
        .map(|&old| {
            let table = adf.condition(old);
            let kept_bits: Vec<usize> = table
                .parents()
                .iter()
                .enumerate()
                .filter(|(_, p)| model.get(**p) == Truth::True)
                .map(|(bit, _)| bit)
                .collect();
            let parents = kept_bits
                .iter()
                .map(|&bit| remap[table.parents()[bit].index()].expect("true parents survive"))
                .collect();
            let entries = (0..1usize << kept_bits.len())
                .map(|mask| {
                    let old_mask: usize = kept_bits
                        .iter()
                        .enumerate()
                        .filter(|(new_bit, _)| mask & (1 << new_bit) != 0)
                        .map(|(_, &old_bit)| 1 << old_bit)
                        .sum();
                    table.entry_bool(old_mask)
                })
                .collect();
            AcceptanceTable::new(parents, entries).expect("reduct tables stay in bounds")
        })
        .collect();
    Adf::new(statements, links, conditions).expect("reducts of valid frameworks are valid")
}

fn conflict_free(adf: &Adf) -> Vec<Vec<crate::adf::StatementId>> {
    let n = adf.statement_count();
    (0..1usize << n)
        .filter_map(|mask| {
            let members: Vec<_> = adf
                .statement_ids()
                .filter(|s| mask & (1 << s.index()) != 0)
                .collect();
            let accepted = members.iter().all(|&s| {
                let table = adf.condition(s);
                table.eval(
                    table
                        .parents()
                        .iter()
                        .copied()
                        .filter(|p| mask & (1 << p.index()) != 0),
                ) == Truth::True
            });
            accepted.then_some(members)
        })
        .collect()
}
