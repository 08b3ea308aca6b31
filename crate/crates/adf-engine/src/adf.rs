//! The core data model: statements, links and acceptance tables.
//!
//! A framework is a directed graph over statements where every statement
//! owns a total acceptance condition: a function from subsets of its
//! parents (the statements with a link into it) to true/false. Conditions
//! are stored as explicit truth tables indexed by a parent-subset bitmask,
//! so a statement may have at most [`MAX_PARENTS`] parents.
//!
//! Statement names are interned into dense indices when a framework is
//! built; everything on the hot enumeration paths works with indices and
//! names reappear only at the I/O boundary.

use std::collections::{HashMap, HashSet};

use crate::error::Error;
use crate::truth::Truth;

/// Largest supported parent count per statement. The table of a statement
/// with `k` parents has `2^k` entries, so this bounds a single condition
/// at about one million entries.
pub const MAX_PARENTS: usize = 20;

/// Dense index of a statement within its framework.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct StatementId(u32);

impl StatementId {
    pub(crate) fn new(index: usize) -> Self {
        StatementId(index as u32)
    }

    pub fn index(self) -> usize {
        self.0 as usize
    }
}

/// A directed link; `(a, b)` makes `a` a parent of `b`.
pub type Link = (StatementId, StatementId);

/// Interner mapping statement names to dense ids and back.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Statements {
    names: Vec<String>,
    ids: HashMap<String, StatementId>,
}

impl Statements {
    /// Returns the id for `name`, interning it on first sight.
    pub fn intern(&mut self, name: &str) -> StatementId {
        if let Some(&id) = self.ids.get(name) {
            return id;
        }
        let id = StatementId::new(self.names.len());
        self.names.push(name.to_owned());
        self.ids.insert(name.to_owned(), id);
        id
    }

    pub fn id(&self, name: &str) -> Option<StatementId> {
        self.ids.get(name).copied()
    }

    pub fn name(&self, id: StatementId) -> &str {
        &self.names[id.index()]
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    /// All ids in declaration order.
    pub fn iter(&self) -> impl Iterator<Item = StatementId> + '_ {
        (0..self.names.len()).map(StatementId::new)
    }

    pub fn names(&self) -> impl Iterator<Item = &str> {
        self.names.iter().map(String::as_str)
    }
}

/// Statement names are lowercase-initial identifier tokens.
pub(crate) fn is_valid_name(name: &str) -> bool {
    let mut chars = name.chars();
    match chars.next() {
        Some(c) if c.is_ascii_lowercase() => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

/// Total acceptance condition of one statement, stored as a truth table
/// over subsets of its parents.
///
/// Bit `i` of an entry index corresponds to `parents()[i]`; parent order
/// is fixed when the table is built (parsers use first appearance in the
/// input) and determines the serialised group numbering.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AcceptanceTable {
    parents: Vec<StatementId>,
    entries: Vec<bool>,
}

impl AcceptanceTable {
    /// Builds a table; `entries[mask]` is the condition value for the
    /// subset encoded by `mask`. Fails unless `entries.len() == 2^k` for
    /// `k = parents.len() <= MAX_PARENTS` and the parents are distinct.
    pub fn new(parents: Vec<StatementId>, entries: Vec<bool>) -> Result<Self, Error> {
        if parents.len() > MAX_PARENTS {
            return Err(Error::Invalid(format!(
                "table over {} parents exceeds the maximum of {}",
                parents.len(),
                MAX_PARENTS
            )));
        }
        let mut seen = HashSet::new();
        if !parents.iter().all(|p| seen.insert(*p)) {
            return Err(Error::Invalid("table parents are not distinct".into()));
        }
        if entries.len() != 1usize << parents.len() {
            return Err(Error::Invalid(format!(
                "table over {} parents needs {} entries, found {}",
                parents.len(),
                1usize << parents.len(),
                entries.len()
            )));
        }
        Ok(AcceptanceTable { parents, entries })
    }

    pub fn parents(&self) -> &[StatementId] {
        &self.parents
    }

    pub fn arity(&self) -> usize {
        self.parents.len()
    }

    pub fn entry_count(&self) -> usize {
        self.entries.len()
    }

    /// Raw table lookup by subset bitmask.
    pub fn entry_bool(&self, mask: usize) -> bool {
        self.entries[mask]
    }

    /// Table lookup by subset bitmask; never returns unknown.
    pub fn entry(&self, mask: usize) -> Truth {
        Truth::from_bool(self.entries[mask])
    }

    /// Bit position of `parent` in this table, if it is a parent.
    pub fn parent_bit(&self, parent: StatementId) -> Option<usize> {
        self.parents.iter().position(|&p| p == parent)
    }

    /// Encodes a set of parents as a bitmask. Panics if `accepted`
    /// contains a statement that is not a parent.
    pub fn mask_of<I: IntoIterator<Item = StatementId>>(&self, accepted: I) -> usize {
        let mut mask = 0;
        for s in accepted {
            let bit = self
                .parent_bit(s)
                .unwrap_or_else(|| panic!("statement {} is not a parent of this table", s.index()));
            mask |= 1 << bit;
        }
        mask
    }

    /// Decodes a bitmask back into the parent subset it denotes.
    pub fn subset_of(&self, mask: usize) -> Vec<StatementId> {
        self.parents
            .iter()
            .enumerate()
            .filter(|(bit, _)| mask & (1 << bit) != 0)
            .map(|(_, &p)| p)
            .collect()
    }

    /// Evaluates the condition on a set of accepted parents. Panics if
    /// the set contains a non-parent.
    pub fn eval<I: IntoIterator<Item = StatementId>>(&self, accepted: I) -> Truth {
        self.entry(self.mask_of(accepted))
    }
}

/// An abstract dialectical framework: statements, links and one
/// acceptance table per statement.
///
/// Frameworks are immutable once built and can be shared freely across
/// threads; validation happens in [`Adf::new`], so every reachable value
/// satisfies the structural invariants.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Adf {
    statements: Statements,
    links: Vec<Link>,
    conditions: Vec<AcceptanceTable>,
    children: Vec<Vec<StatementId>>,
}

impl Adf {
    /// Builds and validates a framework. Checks that link endpoints are
    /// declared, that every table ranges exactly over the link-derived
    /// parents of its statement, and that statement names are well formed.
    /// Duplicate links are dropped (set semantics), preserving first
    /// appearance order.
    pub fn new(
        statements: Statements,
        links: Vec<Link>,
        conditions: Vec<AcceptanceTable>,
    ) -> Result<Self, Error> {
        let n = statements.len();
        for name in statements.names() {
            if !is_valid_name(name) {
                return Err(Error::Invalid(format!("invalid statement name `{name}`")));
            }
        }
        if conditions.len() != n {
            return Err(Error::Invalid(format!(
                "{} statements but {} acceptance conditions",
                n,
                conditions.len()
            )));
        }
        let mut seen = HashSet::new();
        let mut deduped = Vec::with_capacity(links.len());
        let mut parents_from_links: Vec<HashSet<StatementId>> = vec![HashSet::new(); n];
        for link in links {
            let (from, to) = link;
            if from.index() >= n || to.index() >= n {
                return Err(Error::Invalid("link endpoint is not a statement".into()));
            }
            if seen.insert(link) {
                deduped.push(link);
                parents_from_links[to.index()].insert(from);
            }
        }
        for (idx, table) in conditions.iter().enumerate() {
            let table_parents: HashSet<StatementId> = table.parents().iter().copied().collect();
            if table_parents.iter().any(|p| p.index() >= n) {
                return Err(Error::Invalid(format!(
                    "table of `{}` refers to an unknown statement",
                    statements.name(StatementId::new(idx))
                )));
            }
            if table_parents != parents_from_links[idx] {
                return Err(Error::Invalid(format!(
                    "parents of `{}` disagree with the links",
                    statements.name(StatementId::new(idx))
                )));
            }
        }
        let mut children: Vec<Vec<StatementId>> = vec![Vec::new(); n];
        for (idx, table) in conditions.iter().enumerate() {
            for &p in table.parents() {
                children[p.index()].push(StatementId::new(idx));
            }
        }
        Ok(Adf {
            statements,
            links: deduped,
            conditions,
            children,
        })
    }

    pub fn statements(&self) -> &Statements {
        &self.statements
    }

    pub fn statement_count(&self) -> usize {
        self.statements.len()
    }

    pub fn statement_ids(&self) -> impl Iterator<Item = StatementId> + '_ {
        self.statements.iter()
    }

    /// Links in first-appearance order.
    pub fn links(&self) -> &[Link] {
        &self.links
    }

    pub fn condition(&self, s: StatementId) -> &AcceptanceTable {
        &self.conditions[s.index()]
    }

    pub fn conditions(&self) -> &[AcceptanceTable] {
        &self.conditions
    }

    /// Statements whose condition depends on `s`.
    pub fn children(&self, s: StatementId) -> &[StatementId] {
        &self.children[s.index()]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn two_statement_adf(entries_a: Vec<bool>, entries_b: Vec<bool>) -> Result<Adf, Error> {
        let mut statements = Statements::default();
        let a = statements.intern("a");
        let b = statements.intern("b");
        let table_a = AcceptanceTable::new(vec![b], entries_a)?;
        let table_b = AcceptanceTable::new(vec![a], entries_b)?;
        Adf::new(statements, vec![(b, a), (a, b)], vec![table_a, table_b])
    }

    #[test]
    fn builds_a_mutual_support_framework() {
        let adf = two_statement_adf(vec![false, true], vec![false, true]).unwrap();
        assert_eq!(adf.statement_count(), 2);
        assert_eq!(adf.links().len(), 2);
        let a = adf.statements().id("a").unwrap();
        let b = adf.statements().id("b").unwrap();
        assert_eq!(adf.condition(a).eval([b]), Truth::True);
        assert_eq!(adf.condition(a).eval([]), Truth::False);
        assert_eq!(adf.children(a), &[b]);
    }

    #[test]
    fn rejects_wrong_table_size() {
        let err = two_statement_adf(vec![false, true, true], vec![false, true]).unwrap_err();
        assert!(matches!(err, Error::Invalid(_)));
    }

    #[test]
    fn rejects_parent_link_disagreement() {
        let mut statements = Statements::default();
        let a = statements.intern("a");
        let b = statements.intern("b");
        let table_a = AcceptanceTable::new(vec![b], vec![false, true]).unwrap();
        let table_b = AcceptanceTable::new(vec![], vec![true]).unwrap();
        // table of a expects parent b, but no link (b, a) exists
        let err = Adf::new(statements, vec![], vec![table_a, table_b]).unwrap_err();
        assert!(matches!(err, Error::Invalid(_)));
        let _ = a;
    }

    #[test]
    fn rejects_undeclared_link_endpoint() {
        let mut statements = Statements::default();
        let a = statements.intern("a");
        let ghost = StatementId::new(7);
        let table_a = AcceptanceTable::new(vec![], vec![true]).unwrap();
        let err = Adf::new(statements, vec![(ghost, a)], vec![table_a]).unwrap_err();
        assert!(matches!(err, Error::Invalid(_)));
    }

    #[test]
    fn rejects_oversized_parent_set() {
        let mut statements = Statements::default();
        let parents: Vec<StatementId> = (0..MAX_PARENTS + 1)
            .map(|i| statements.intern(&format!("p{i}")))
            .collect();
        let err = AcceptanceTable::new(parents, vec![true; 1 << (MAX_PARENTS + 1)]).unwrap_err();
        assert!(matches!(err, Error::Invalid(_)));
    }

    #[test]
    fn mask_roundtrip_is_a_bijection() {
        let mut statements = Statements::default();
        let parents: Vec<StatementId> = ["p", "q", "r"]
            .iter()
            .map(|name| statements.intern(name))
            .collect();
        let table = AcceptanceTable::new(parents, vec![false; 8]).unwrap();
        for mask in 0..table.entry_count() {
            assert_eq!(table.mask_of(table.subset_of(mask)), mask);
        }
    }

    #[test]
    fn eval_never_returns_unknown() {
        let adf = two_statement_adf(vec![true, false], vec![false, true]).unwrap();
        let a = adf.statements().id("a").unwrap();
        let b = adf.statements().id("b").unwrap();
        for subset in [vec![], vec![b]] {
            assert!(adf.condition(a).eval(subset).is_classical());
        }
    }

    #[test]
    #[should_panic(expected = "not a parent")]
    fn eval_panics_on_non_parent() {
        let adf = two_statement_adf(vec![true, false], vec![false, true]).unwrap();
        let a = adf.statements().id("a").unwrap();
        adf.condition(a).eval([a]);
    }

    #[test]
    fn name_validity() {
        assert!(is_valid_name("a"));
        assert!(is_valid_name("s0_x"));
        assert!(!is_valid_name(""));
        assert!(!is_valid_name("A"));
        assert!(!is_valid_name("_x"));
        assert!(!is_valid_name("3a"));
        assert!(!is_valid_name("a-b"));
    }
}
