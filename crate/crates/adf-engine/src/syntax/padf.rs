//! The prioritised dialect: support and attack links plus preferences.
//!
//! Statements are declared with `s/1`; `lp(a,b)` makes `a` a supporter
//! of `b`, `lm(a,b)` an attacker of `b`, and `pref(a,b)` states that `a`
//! is preferred to `b`. The preference relation is closed under
//! transitivity and must be irreflexive afterwards, which makes it a
//! strict partial order.

use std::collections::HashSet;

use crate::adf::{Link, StatementId, Statements};
use crate::error::Error;

use super::facts::{expect_arity, ident_arg, read_facts, Fact};

/// A prioritised framework prior to compilation into table form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Padf {
    statements: Statements,
    links: Vec<Link>,
    parents: Vec<Vec<StatementId>>,
    supports: HashSet<Link>,
    attacks: HashSet<Link>,
    preference: Vec<bool>,
}

impl Padf {
    pub fn statements(&self) -> &Statements {
        &self.statements
    }

    /// Support and attack links in input order, without duplicates.
    pub fn links(&self) -> &[Link] {
        &self.links
    }

    /// Incoming link sources of `s` in input order.
    pub fn parents(&self, s: StatementId) -> &[StatementId] {
        &self.parents[s.index()]
    }

    pub fn supports(&self, from: StatementId, to: StatementId) -> bool {
        self.supports.contains(&(from, to))
    }

    pub fn attacks(&self, from: StatementId, to: StatementId) -> bool {
        self.attacks.contains(&(from, to))
    }

    /// Whether `a` is strictly preferred to `b` in the transitive closure.
    pub fn prefers(&self, a: StatementId, b: StatementId) -> bool {
        self.preference[a.index() * self.statements.len() + b.index()]
    }
}

/// Parses an instance in the prioritised dialect.
pub fn parse_padf(input: &str) -> Result<Padf, Error> {
    from_facts(&read_facts(input)?)
}

pub(crate) fn from_facts(facts: &[Fact]) -> Result<Padf, Error> {
    let mut statements = Statements::default();
    for fact in facts {
        if fact.predicate == "s" {
            expect_arity(fact, 1)?;
            statements.intern(ident_arg(&fact.args[0], "statement name")?);
        }
    }
    let lookup = |term: &super::facts::GroundTerm, what: &str| -> Result<StatementId, Error> {
        let name = ident_arg(term, what)?;
        statements
            .id(name)
            .ok_or_else(|| Error::Undeclared(term.location, name.to_owned()))
    };

    let n = statements.len();
    let mut links: Vec<Link> = Vec::new();
    let mut link_seen: HashSet<Link> = HashSet::new();
    let mut parents: Vec<Vec<StatementId>> = vec![Vec::new(); n];
    let mut supports: HashSet<Link> = HashSet::new();
    let mut attacks: HashSet<Link> = HashSet::new();
    let mut preference = vec![false; n * n];
    for fact in facts {
        match fact.predicate.as_str() {
            "s" => {}
            "lp" | "lm" => {
                expect_arity(fact, 2)?;
                let from = lookup(&fact.args[0], "link source")?;
                let to = lookup(&fact.args[1], "link target")?;
                if link_seen.insert((from, to)) {
                    links.push((from, to));
                    parents[to.index()].push(from);
                }
                if fact.predicate == "lp" {
                    supports.insert((from, to));
                } else {
                    attacks.insert((from, to));
                }
            }
            "pref" => {
                expect_arity(fact, 2)?;
                let preferred = lookup(&fact.args[0], "preferred statement")?;
                let other = lookup(&fact.args[1], "dispreferred statement")?;
                preference[preferred.index() * n + other.index()] = true;
            }
            other => {
                return Err(Error::Syntax(
                    fact.location,
                    format!("unexpected predicate `{other}` in the prioritised dialect"),
                ))
            }
        }
    }

    // transitive closure, then irreflexivity (antisymmetry follows)
    for via in 0..n {
        for from in 0..n {
            if preference[from * n + via] {
                for to in 0..n {
                    if preference[via * n + to] {
                        preference[from * n + to] = true;
                    }
                }
            }
        }
    }
    for s in statements.iter() {
        if preference[s.index() * n + s.index()] {
            return Err(Error::PreferenceCycle(statements.name(s).to_owned()));
        }
    }

    Ok(Padf {
        statements,
        links,
        parents,
        supports,
        attacks,
        preference,
    })
}
