//! The functional dialect: explicit acceptance tables as ground facts.
//!
//! Statements are declared with `s/1` and links with `l/2`, where
//! `l(b,a)` makes `b` a parent of `a`. Conditions come in two forms:
//! the unary facts `ci(s)` / `co(s)` fix the value of the empty parent
//! subset, and the tertiary facts `ci(s,g,p)` / `co(s,g,p)` collect the
//! parents `p` of one group `g` into a subset that maps to true (`ci`)
//! or false (`co`). Group terms are arbitrary identifiers or integers
//! compared by string equality, scoped per predicate and statement.
//! Every subset of a statement's parents must be covered exactly once;
//! anything else is rejected.

use std::collections::HashMap;

use crate::adf::{AcceptanceTable, Adf, Link, StatementId, Statements, MAX_PARENTS};
use crate::error::{Error, Location};

use super::facts::{expect_arity, ident_arg, read_facts, Fact};

/// Parses an instance in the functional dialect into a validated framework.
pub fn parse_functional(input: &str) -> Result<Adf, Error> {
    from_facts(&read_facts(input)?)
}

struct ConditionBuilder {
    empty: Option<(bool, Location)>,
    // group key is (maps-to-true, group term); insertion order kept so
    // error reporting is deterministic
    group_masks: Vec<(bool, usize, Location)>,
    group_index: HashMap<(bool, String), usize>,
}

impl ConditionBuilder {
    fn new() -> Self {
        ConditionBuilder {
            empty: None,
            group_masks: Vec::new(),
            group_index: HashMap::new(),
        }
    }
}

pub(crate) fn from_facts(facts: &[Fact]) -> Result<Adf, Error> {
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
    let mut link_seen: std::collections::HashSet<Link> = std::collections::HashSet::new();
    let mut parents: Vec<Vec<StatementId>> = vec![Vec::new(); n];
    for fact in facts {
        if fact.predicate == "l" {
            expect_arity(fact, 2)?;
            let from = lookup(&fact.args[0], "link source")?;
            let to = lookup(&fact.args[1], "link target")?;
            if link_seen.insert((from, to)) {
                links.push((from, to));
                parents[to.index()].push(from);
            }
        }
    }

    let mut builders: Vec<ConditionBuilder> = (0..n).map(|_| ConditionBuilder::new()).collect();
    for fact in facts {
        let maps_to_true = match fact.predicate.as_str() {
            "ci" => true,
            "co" => false,
            "s" | "l" => continue,
            other => {
                return Err(Error::Syntax(
                    fact.location,
                    format!("unexpected predicate `{other}` in the functional dialect"),
                ))
            }
        };
        match fact.args.len() {
            1 => {
                let target = lookup(&fact.args[0], "statement name")?;
                let builder = &mut builders[target.index()];
                match builder.empty {
                    None => builder.empty = Some((maps_to_true, fact.location)),
                    Some((prev, _)) if prev == maps_to_true => {
                        return Err(Error::Duplicate(
                            fact.location,
                            "unary condition fact",
                            statements.name(target).to_owned(),
                        ))
                    }
                    Some(_) => {
                        return Err(Error::ConflictingEmptySubset(
                            fact.location,
                            statements.name(target).to_owned(),
                        ))
                    }
                }
            }
            3 => {
                let target = lookup(&fact.args[0], "statement name")?;
                let group = &fact.args[1];
                if !group.is_atomic() {
                    return Err(Error::Syntax(
                        group.location,
                        format!("group term must be an identifier or integer, found `{group}`"),
                    ));
                }
                let member = lookup(&fact.args[2], "group member")?;
                let bit = parents[target.index()]
                    .iter()
                    .position(|&p| p == member)
                    .ok_or_else(|| {
                        Error::NotAParent(
                            fact.args[2].location,
                            statements.name(member).to_owned(),
                            statements.name(target).to_owned(),
                        )
                    })?;
                let builder = &mut builders[target.index()];
                let key = (maps_to_true, group.functor.clone());
                let slot = *builder.group_index.entry(key).or_insert_with(|| {
                    builder.group_masks.push((maps_to_true, 0, fact.location));
                    builder.group_masks.len() - 1
                });
                builder.group_masks[slot].1 |= 1 << bit;
            }
            other => {
                return Err(Error::Syntax(
                    fact.location,
                    format!(
                        "`{}` expects 1 or 3 arguments, found {other}",
                        fact.predicate
                    ),
                ))
            }
        }
    }

    let mut conditions = Vec::with_capacity(n);
    for id in statements.iter() {
        let statement_parents = &parents[id.index()];
        if statement_parents.len() > MAX_PARENTS {
            return Err(Error::TooManyParents {
                statement: statements.name(id).to_owned(),
                count: statement_parents.len(),
                max: MAX_PARENTS,
            });
        }
        let builder = &builders[id.index()];
        let mut entries: Vec<Option<bool>> = vec![None; 1 << statement_parents.len()];
        match builder.empty {
            Some((value, _)) => entries[0] = Some(value),
            None => return Err(Error::MissingEmptySubset(statements.name(id).to_owned())),
        }
        for &(value, mask, _) in &builder.group_masks {
            if entries[mask].is_some() {
                return Err(Error::AmbiguousCondition {
                    statement: statements.name(id).to_owned(),
                    subset: subset_names(&statements, statement_parents, mask),
                });
            }
            entries[mask] = Some(value);
        }
        if let Some(missing) = entries.iter().position(Option::is_none) {
            return Err(Error::IncompleteCondition {
                statement: statements.name(id).to_owned(),
                subset: subset_names(&statements, statement_parents, missing),
            });
        }
        let entries: Vec<bool> = entries.into_iter().map(Option::unwrap).collect();
        conditions.push(AcceptanceTable::new(statement_parents.clone(), entries)?);
    }

    Adf::new(statements, links, conditions)
}

fn subset_names(statements: &Statements, parents: &[StatementId], mask: usize) -> String {
    parents
        .iter()
        .enumerate()
        .filter(|(bit, _)| mask & (1 << bit) != 0)
        .map(|(_, &p)| statements.name(p))
        .collect::<Vec<_>>()
        .join(",")
}

/// Serialises a framework back into the functional dialect.
///
/// Statements and links keep their stored order; per statement the unary
/// fact comes first and each nonempty parent subset becomes one group,
/// numbered by its bitmask. Parsing the output reproduces the framework
/// exactly.
pub fn serialize_functional(adf: &Adf) -> String {
    let statements = adf.statements();
    if statements.is_empty() {
        return String::new();
    }
    let mut out = String::new();
    let s_line: Vec<String> = statements
        .names()
        .map(|name| format!("s({name})."))
        .collect();
    out.push_str(&s_line.join(" "));
    out.push('\n');
    if !adf.links().is_empty() {
        let l_line: Vec<String> = adf
            .links()
            .iter()
            .map(|(from, to)| format!("l({},{}).", statements.name(*from), statements.name(*to)))
            .collect();
        out.push_str(&l_line.join(" "));
        out.push('\n');
    }
    for id in statements.iter() {
        let table = adf.condition(id);
        let name = statements.name(id);
        let mut line = Vec::new();
        line.push(format!(
            "{}({name}).",
            if table.entry_bool(0) { "ci" } else { "co" }
        ));
        for mask in 1..table.entry_count() {
            let predicate = if table.entry_bool(mask) { "ci" } else { "co" };
            for &member in &table.subset_of(mask) {
                line.push(format!(
                    "{predicate}({name},{mask},{}).",
                    statements.name(member)
                ));
            }
        }
        out.push_str(&line.join(" "));
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::test_support::{SELF_LOOP, SUPPORT_CYCLE};
    use crate::truth::Truth;

    fn entry(adf: &Adf, statement: &str, accepted: &[&str]) -> Truth {
        let s = adf.statements().id(statement).unwrap();
        let ids: Vec<StatementId> = accepted
            .iter()
            .map(|name| adf.statements().id(name).unwrap())
            .collect();
        adf.condition(s).eval(ids)
    }

    #[test]
    fn parses_the_support_cycle_instance() {
        let adf = parse_functional(SUPPORT_CYCLE).unwrap();
        assert_eq!(adf.statement_count(), 3);
        assert_eq!(adf.links().len(), 3);
        // a mirrors b, b mirrors a, c holds exactly when b is out
        assert_eq!(entry(&adf, "a", &[]), Truth::False);
        assert_eq!(entry(&adf, "a", &["b"]), Truth::True);
        assert_eq!(entry(&adf, "b", &[]), Truth::False);
        assert_eq!(entry(&adf, "b", &["a"]), Truth::True);
        assert_eq!(entry(&adf, "c", &[]), Truth::True);
        assert_eq!(entry(&adf, "c", &["b"]), Truth::False);
    }

    #[test]
    fn parses_the_self_loop_instance() {
        let adf = parse_functional(SELF_LOOP).unwrap();
        assert_eq!(adf.statement_count(), 4);
        assert_eq!(entry(&adf, "a", &[]), Truth::True);
        assert_eq!(entry(&adf, "b", &["b"]), Truth::True);
        assert_eq!(entry(&adf, "c", &[]), Truth::False);
        assert_eq!(entry(&adf, "c", &["a"]), Truth::False);
        assert_eq!(entry(&adf, "c", &["b"]), Truth::False);
        assert_eq!(entry(&adf, "c", &["a", "b"]), Truth::True);
        assert_eq!(entry(&adf, "d", &[]), Truth::True);
        assert_eq!(entry(&adf, "d", &["b"]), Truth::False);
    }

    #[test]
    fn parses_a_parentless_tautology() {
        let adf = parse_functional("s(a). ci(a).").unwrap();
        assert_eq!(adf.statement_count(), 1);
        assert_eq!(entry(&adf, "a", &[]), Truth::True);
    }

    #[test]
    fn duplicate_facts_are_idempotent() {
        let adf = parse_functional("s(a). s(a). l(a,a). l(a,a). co(a). ci(a,1,a).").unwrap();
        assert_eq!(adf.statement_count(), 1);
        assert_eq!(adf.links().len(), 1);
    }

    #[test]
    fn rejects_undeclared_statements() {
        let err = parse_functional("s(a). l(b,a). co(a). ci(a,1,b).").unwrap_err();
        assert!(matches!(err, Error::Undeclared(_, name) if name == "b"));

        let err = parse_functional("s(a). ci(a). ci(a,1,x).").unwrap_err();
        assert!(matches!(err, Error::Undeclared(_, name) if name == "x"));
    }

    #[test]
    fn rejects_group_members_that_are_not_parents() {
        let err = parse_functional("s(a). s(b). co(a). ci(a,1,b).").unwrap_err();
        assert!(
            matches!(err, Error::NotAParent(_, member, target) if member == "b" && target == "a")
        );
    }

    #[test]
    fn rejects_incomplete_conditions() {
        let err = parse_functional("s(a). s(b). l(b,a). co(a). ci(b).").unwrap_err();
        assert_eq!(
            err,
            Error::IncompleteCondition {
                statement: "a".into(),
                subset: "b".into()
            }
        );
    }

    #[test]
    fn rejects_ambiguous_conditions() {
        let err = parse_functional("s(a). s(b). l(b,a). co(a). ci(a,1,b). co(a,1,b). ci(b).")
            .unwrap_err();
        assert_eq!(
            err,
            Error::AmbiguousCondition {
                statement: "a".into(),
                subset: "b".into()
            }
        );
    }

    #[test]
    fn ci_and_co_groups_have_separate_namespaces() {
        // the same group term on both predicates denotes two different subsets
        let adf = parse_functional(
            "s(a). s(b). s(c). l(b,a). l(c,a). co(a). ci(a,1,b). co(a,1,c). ci(a,2,b). ci(a,2,c). ci(b). ci(c).",
        )
        .unwrap();
        assert_eq!(entry(&adf, "a", &["b"]), Truth::True);
        assert_eq!(entry(&adf, "a", &["c"]), Truth::False);
        assert_eq!(entry(&adf, "a", &["b", "c"]), Truth::True);
    }

    #[test]
    fn rejects_missing_and_conflicting_unary_facts() {
        let err = parse_functional("s(a).").unwrap_err();
        assert_eq!(err, Error::MissingEmptySubset("a".into()));

        let err = parse_functional("s(a). ci(a). co(a).").unwrap_err();
        assert!(matches!(err, Error::ConflictingEmptySubset(_, name) if name == "a"));

        let err = parse_functional("s(a). ci(a). ci(a).").unwrap_err();
        assert!(matches!(err, Error::Duplicate(_, _, name) if name == "a"));
    }

    #[test]
    fn rejects_too_many_parents() {
        let mut input = String::from("s(t).");
        for i in 0..MAX_PARENTS + 1 {
            input.push_str(&format!(" s(p{i}). l(p{i},t). ci(p{i})."));
        }
        input.push_str(" ci(t).");
        let err = parse_functional(&input).unwrap_err();
        assert!(matches!(err, Error::TooManyParents { ref statement, .. } if statement == "t"));
    }

    #[test]
    fn rejects_foreign_predicates() {
        let err = parse_functional("s(a). ci(a). ac(a, c(v)).").unwrap_err();
        assert!(matches!(err, Error::Syntax(_, msg) if msg.contains("ac")));
    }

    #[test]
    fn group_terms_may_be_identifiers() {
        let adf = parse_functional("s(a). s(b). l(b,a). co(a). ci(a,grp,b). ci(b).").unwrap();
        assert_eq!(entry(&adf, "a", &["b"]), Truth::True);
    }

    #[test]
    fn comment_and_whitespace_mutations_parse_identically() {
        let pristine = parse_functional(SUPPORT_CYCLE).unwrap();
        let commented = SUPPORT_CYCLE.replace(". ", ". % inline remark\n");
        assert_eq!(parse_functional(&commented).unwrap(), pristine);
        let squashed = SUPPORT_CYCLE.replace([' ', '\n'], "");
        assert_eq!(parse_functional(&squashed).unwrap(), pristine);
    }

    #[test]
    fn serialises_the_support_cycle_to_the_same_token_stream() {
        let adf = parse_functional(SUPPORT_CYCLE).unwrap();
        let printed = serialize_functional(&adf);
        let normalise = |text: &str| text.split_whitespace().collect::<Vec<_>>().join(" ");
        assert_eq!(normalise(&printed), normalise(SUPPORT_CYCLE));
    }

    #[test]
    fn serialises_degenerate_frameworks() {
        let empty = Adf::new(Statements::default(), vec![], vec![]).unwrap();
        assert_eq!(serialize_functional(&empty), "");

        let tautology = parse_functional("s(a). ci(a).").unwrap();
        assert_eq!(serialize_functional(&tautology), "s(a).\nci(a).\n");
    }

    #[test]
    fn roundtrips_through_serialisation() {
        for input in [SUPPORT_CYCLE, SELF_LOOP, "s(a). ci(a)."] {
            let adf = parse_functional(input).unwrap();
            let reparsed = parse_functional(&serialize_functional(&adf)).unwrap();
            assert_eq!(adf, reparsed);
        }
    }
}
