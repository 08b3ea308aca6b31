//! Backtracking enumeration over the candidate interpretation space.
//!
//! Statements are assigned in index order. After each assignment the
//! just-assigned statement and every already-assigned statement that
//! depends on it are re-checked against the revision operator evaluated
//! on the current partial assignment (unassigned statements count as
//! unknown). Two facts make the checks sound:
//!
//! * monotonicity — a classical operator value can never change again,
//!   so a classical contradiction anywhere in the subtree is fatal;
//! * locality — once all parents of a statement are assigned, its
//!   operator value is final, so the semantics predicate can be checked
//!   exactly and early.
//!
//! Every statement is re-checked when the last of {itself, its parents}
//! gets assigned, which makes a surviving leaf a verified candidate; no
//! second pass over the full interpretation is needed. Candidates are
//! emitted in lexicographic value order (true < false < unknown per
//! position).

use crate::adf::{Adf, StatementId};
use crate::interpretation::Interpretation;
use crate::operator::gamma_over;
use crate::truth::Truth;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Goal {
    /// Keep interpretations below their revision: decided statements must
    /// not be contradicted by the operator.
    Admissible,
    /// Keep exact fixpoints of the revision operator.
    Complete,
}

struct Search<'a> {
    adf: &'a Adf,
    goal: Goal,
    domain: &'static [Truth],
    values: Vec<Truth>,
    /// Index of the highest-indexed parent per statement; the operator
    /// value of a statement is final once the search depth passes it.
    last_parent: Vec<usize>,
    found: Vec<Interpretation>,
}

impl<'a> Search<'a> {
    fn new(adf: &'a Adf, goal: Goal, domain: &'static [Truth]) -> Self {
        let last_parent = adf
            .statement_ids()
            .map(|s| {
                adf.condition(s)
                    .parents()
                    .iter()
                    .map(|p| p.index())
                    .max()
                    .unwrap_or(0)
            })
            .collect();
        Search {
            adf,
            goal,
            domain,
            values: vec![Truth::Unknown; adf.statement_count()],
            last_parent,
            found: Vec::new(),
        }
    }

    fn run(mut self) -> Vec<Interpretation> {
        self.descend(0);
        self.found
    }

    fn descend(&mut self, depth: usize) {
        if depth == self.values.len() {
            self.found
                .push(Interpretation::from_values(self.values.clone()));
            return;
        }
        for &value in self.domain {
            self.values[depth] = value;
            if self.consistent_after(depth) {
                self.descend(depth + 1);
            }
        }
        self.values[depth] = Truth::Unknown;
    }

    /// Checks the statement assigned at `depth` and its assigned children.
    fn consistent_after(&self, depth: usize) -> bool {
        let assigned = StatementId::new(depth);
        if !self.check(assigned, depth) {
            return false;
        }
        self.adf
            .children(assigned)
            .iter()
            .filter(|child| child.index() < depth)
            .all(|&child| self.check(child, depth))
    }

    fn check(&self, s: StatementId, depth: usize) -> bool {
        let assigned = self.values[s.index()];
        let revised = gamma_over(self.adf, &self.values, s);
        let is_final = self.last_parent[s.index()] <= depth;
        match self.goal {
            Goal::Admissible => match assigned {
                Truth::Unknown => true,
                classical => match revised {
                    Truth::Unknown => !is_final,
                    value => value == classical,
                },
            },
            Goal::Complete => match assigned {
                Truth::Unknown => revised == Truth::Unknown,
                classical => match revised {
                    Truth::Unknown => !is_final,
                    value => value == classical,
                },
            },
        }
    }
}

const THREE_VALUED: [Truth; 3] = [Truth::True, Truth::False, Truth::Unknown];
const TWO_VALUED: [Truth; 2] = [Truth::True, Truth::False];

pub(crate) fn enumerate_three_valued(adf: &Adf, goal: Goal) -> Vec<Interpretation> {
    Search::new(adf, goal, &THREE_VALUED).run()
}

/// Two-valued fixpoints of the revision operator.
pub(crate) fn enumerate_two_valued_fixpoints(adf: &Adf) -> Vec<Interpretation> {
    Search::new(adf, Goal::Complete, &TWO_VALUED).run()
}

/// Subsets whose members are all accepted by their condition restricted
/// to the subset. Represented as membership vectors during the search;
/// a member is checked once itself and all its parents are decided.
pub(crate) fn enumerate_conflict_free(adf: &Adf) -> Vec<Vec<StatementId>> {
    let n = adf.statement_count();
    let last_parent: Vec<usize> = adf
        .statement_ids()
        .map(|s| {
            adf.condition(s)
                .parents()
                .iter()
                .map(|p| p.index())
                .max()
                .unwrap_or(0)
        })
        .collect();
    let mut member = vec![false; n];
    let mut found = Vec::new();
    descend_sets(adf, &last_parent, &mut member, 0, &mut found);
    found
}

fn descend_sets(
    adf: &Adf,
    last_parent: &[usize],
    member: &mut Vec<bool>,
    depth: usize,
    found: &mut Vec<Vec<StatementId>>,
) {
    if depth == member.len() {
        found.push(
            member
                .iter()
                .enumerate()
                .filter(|(_, &m)| m)
                .map(|(i, _)| StatementId::new(i))
                .collect(),
        );
        return;
    }
    for value in [true, false] {
        member[depth] = value;
        if sets_consistent_after(adf, last_parent, member, depth) {
            descend_sets(adf, last_parent, member, depth + 1, found);
        }
    }
    member[depth] = false;
}

fn sets_consistent_after(adf: &Adf, last_parent: &[usize], member: &[bool], depth: usize) -> bool {
    let assigned = StatementId::new(depth);
    let check = |s: StatementId| -> bool {
        if !member[s.index()] || last_parent[s.index()] > depth {
            return true;
        }
        let table = adf.condition(s);
        let mask = table
            .parents()
            .iter()
            .enumerate()
            .filter(|(_, p)| member[p.index()])
            .fold(0usize, |mask, (bit, _)| mask | (1 << bit));
        table.entry_bool(mask)
    };
    if !check(assigned) {
        return false;
    }
    adf.children(assigned)
        .iter()
        .filter(|child| child.index() < depth)
        .all(|&child| check(child))
}
