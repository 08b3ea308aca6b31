//! The propositional-formula dialect.
//!
//! Statements are declared with `statement/1` and `ac(s, phi)` attaches
//! one acceptance formula to each statement. Formulas are prefix terms
//! over the operators `neg/1`, `and/2`, `or/2`, `imp/2` and `iff/2`;
//! atoms are statement names and the truth constants are written `c(v)`
//! and `c(f)`.

use crate::adf::{is_valid_name, Statements};
use crate::error::Error;

use super::facts::{expect_arity, ident_arg, read_facts, Fact, GroundTerm};

/// A propositional formula over statement atoms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Formula {
    True,
    False,
    Atom(String),
    Neg(Box<Formula>),
    And(Box<Formula>, Box<Formula>),
    Or(Box<Formula>, Box<Formula>),
    Imp(Box<Formula>, Box<Formula>),
    Iff(Box<Formula>, Box<Formula>),
}

impl Formula {
    /// Classical two-valued evaluation; `truth` decides each atom.
    pub fn eval_with<F: Fn(&str) -> bool>(&self, truth: &F) -> bool {
        match self {
            Formula::True => true,
            Formula::False => false,
            Formula::Atom(name) => truth(name),
            Formula::Neg(inner) => !inner.eval_with(truth),
            Formula::And(lhs, rhs) => lhs.eval_with(truth) && rhs.eval_with(truth),
            Formula::Or(lhs, rhs) => lhs.eval_with(truth) || rhs.eval_with(truth),
            Formula::Imp(lhs, rhs) => !lhs.eval_with(truth) || rhs.eval_with(truth),
            Formula::Iff(lhs, rhs) => lhs.eval_with(truth) == rhs.eval_with(truth),
        }
    }

    /// Evaluation against a set of accepted statement names; atoms not in
    /// the set are false.
    pub fn eval(&self, accepted: &std::collections::BTreeSet<&str>) -> bool {
        self.eval_with(&|atom| accepted.contains(atom))
    }

    /// Appends the atoms of the formula to `out` in order of first
    /// occurrence, without duplicates.
    pub fn collect_atoms(&self, out: &mut Vec<String>) {
        match self {
            Formula::True | Formula::False => {}
            Formula::Atom(name) => {
                if !out.iter().any(|a| a == name) {
                    out.push(name.clone());
                }
            }
            Formula::Neg(inner) => inner.collect_atoms(out),
            Formula::And(lhs, rhs)
            | Formula::Or(lhs, rhs)
            | Formula::Imp(lhs, rhs)
            | Formula::Iff(lhs, rhs) => {
                lhs.collect_atoms(out);
                rhs.collect_atoms(out);
            }
        }
    }
}

/// A framework whose conditions are still propositional formulas; the
/// transform module compiles it into table form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FormulaAdf {
    statements: Statements,
    formulas: Vec<Formula>,
}

impl FormulaAdf {
    /// Builds a formula framework from parallel statement and formula
    /// lists, checking that names are well formed and every atom is a
    /// declared statement.
    pub fn new(names: Vec<String>, formulas: Vec<Formula>) -> Result<Self, Error> {
        if names.len() != formulas.len() {
            return Err(Error::Invalid(format!(
                "{} statements but {} formulas",
                names.len(),
                formulas.len()
            )));
        }
        let mut statements = Statements::default();
        for name in &names {
            if !is_valid_name(name) {
                return Err(Error::Invalid(format!("invalid statement name `{name}`")));
            }
            statements.intern(name);
        }
        if statements.len() != names.len() {
            return Err(Error::Invalid("duplicate statement name".into()));
        }
        for formula in &formulas {
            let mut atoms = Vec::new();
            formula.collect_atoms(&mut atoms);
            for atom in atoms {
                if statements.id(&atom).is_none() {
                    return Err(Error::Invalid(format!(
                        "formula refers to undeclared statement `{atom}`"
                    )));
                }
            }
        }
        Ok(FormulaAdf {
            statements,
            formulas,
        })
    }

    pub fn statements(&self) -> &Statements {
        &self.statements
    }

    pub fn formula(&self, s: crate::adf::StatementId) -> &Formula {
        &self.formulas[s.index()]
    }

    pub fn formulas(&self) -> &[Formula] {
        &self.formulas
    }
}

/// Parses an instance in the formula dialect.
pub fn parse_formula_adf(input: &str) -> Result<FormulaAdf, Error> {
    from_facts(&read_facts(input)?)
}

pub(crate) fn from_facts(facts: &[Fact]) -> Result<FormulaAdf, Error> {
    let mut statements = Statements::default();
    for fact in facts {
        if fact.predicate == "statement" {
            expect_arity(fact, 1)?;
            statements.intern(ident_arg(&fact.args[0], "statement name")?);
        }
    }
    let mut formulas: Vec<Option<Formula>> = vec![None; statements.len()];
    for fact in facts {
        match fact.predicate.as_str() {
            "statement" => {}
            "ac" => {
                expect_arity(fact, 2)?;
                let name = ident_arg(&fact.args[0], "statement name")?;
                let id = statements
                    .id(name)
                    .ok_or_else(|| Error::Undeclared(fact.args[0].location, name.to_owned()))?;
                if formulas[id.index()].is_some() {
                    return Err(Error::Duplicate(
                        fact.location,
                        "acceptance formula",
                        name.to_owned(),
                    ));
                }
                formulas[id.index()] = Some(term_to_formula(&fact.args[1], &statements)?);
            }
            other => {
                return Err(Error::Syntax(
                    fact.location,
                    format!("unexpected predicate `{other}` in the formula dialect"),
                ))
            }
        }
    }
    let mut resolved = Vec::with_capacity(formulas.len());
    for (id, formula) in statements.iter().zip(formulas) {
        match formula {
            Some(f) => resolved.push(f),
            None => return Err(Error::MissingFormula(statements.name(id).to_owned())),
        }
    }
    Ok(FormulaAdf {
        statements,
        formulas: resolved,
    })
}

fn term_to_formula(term: &GroundTerm, statements: &Statements) -> Result<Formula, Error> {
    if term.numeric {
        return Err(Error::Syntax(
            term.location,
            format!("expected a formula, found number `{}`", term.functor),
        ));
    }
    let arity = term.args.len();
    match (term.functor.as_str(), arity) {
        (_, 0) => {
            if statements.id(&term.functor).is_none() {
                return Err(Error::Undeclared(term.location, term.functor.clone()));
            }
            Ok(Formula::Atom(term.functor.clone()))
        }
        ("c", 1) => {
            let arg = &term.args[0];
            match arg.functor.as_str() {
                "v" if arg.is_atomic() && !arg.numeric => Ok(Formula::True),
                "f" if arg.is_atomic() && !arg.numeric => Ok(Formula::False),
                _ => Err(Error::Syntax(
                    term.location,
                    format!("truth constant must be c(v) or c(f), found `{term}`"),
                )),
            }
        }
        ("neg", 1) => Ok(Formula::Neg(Box::new(term_to_formula(
            &term.args[0],
            statements,
        )?))),
        ("and", 2) | ("or", 2) | ("imp", 2) | ("iff", 2) => {
            let lhs = Box::new(term_to_formula(&term.args[0], statements)?);
            let rhs = Box::new(term_to_formula(&term.args[1], statements)?);
            Ok(match term.functor.as_str() {
                "and" => Formula::And(lhs, rhs),
                "or" => Formula::Or(lhs, rhs),
                "imp" => Formula::Imp(lhs, rhs),
                _ => Formula::Iff(lhs, rhs),
            })
        }
        ("c" | "neg" | "and" | "or" | "imp" | "iff", found) => Err(Error::Syntax(
            term.location,
            format!(
                "operator `{}` expects {} argument{}, found {found}",
                term.functor,
                expected_arity(&term.functor),
                if expected_arity(&term.functor) == 1 {
                    ""
                } else {
                    "s"
                },
            ),
        )),
        (other, _) => Err(Error::Syntax(
            term.location,
            format!("unknown operator `{other}`"),
        )),
    }
}

fn expected_arity(operator: &str) -> usize {
    match operator {
        "neg" | "c" => 1,
        _ => 2,
    }
}
