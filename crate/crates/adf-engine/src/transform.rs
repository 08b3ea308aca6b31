//! Compilation of formula and prioritised frameworks into table form,
//! and the reduct construction used by the stable semantics.

use crate::adf::{AcceptanceTable, Adf, Link, StatementId, Statements, MAX_PARENTS};
use crate::error::Error;
use crate::interpretation::Interpretation;
use crate::syntax::formula::FormulaAdf;
use crate::syntax::padf::Padf;
use crate::truth::Truth;

/// Compiles a formula framework into explicit tables.
///
/// The parents of a statement are the atoms of its formula in first
/// occurrence order; the table entry of a subset is the classical value
/// of the formula with exactly that subset accepted. Links are derived
/// from atom occurrence and emitted sorted by (source, target).
pub fn formula_to_table(formula_adf: &FormulaAdf) -> Result<Adf, Error> {
    let statements = formula_adf.statements().clone();
    let mut links: Vec<Link> = Vec::new();
    let mut conditions = Vec::with_capacity(statements.len());
    for id in statements.iter() {
        let formula = formula_adf.formula(id);
        let mut atom_names = Vec::new();
        formula.collect_atoms(&mut atom_names);
        if atom_names.len() > MAX_PARENTS {
            return Err(Error::TooManyParents {
                statement: statements.name(id).to_owned(),
                count: atom_names.len(),
                max: MAX_PARENTS,
            });
        }
        let parents: Vec<StatementId> = atom_names
            .iter()
            .map(|name| {
                statements
                    .id(name)
                    .expect("formula atoms are declared statements")
            })
            .collect();
        for &parent in &parents {
            links.push((parent, id));
        }
        let mut entries = Vec::with_capacity(1 << parents.len());
        for mask in 0..1usize << parents.len() {
            let truth = |atom: &str| {
                atom_names
                    .iter()
                    .position(|name| name == atom)
                    .is_some_and(|bit| mask & (1 << bit) != 0)
            };
            entries.push(formula.eval_with(&truth));
        }
        conditions.push(AcceptanceTable::new(parents, entries)?);
    }
    links.sort();
    Adf::new(statements, links, conditions)
}

/// Compiles a prioritised framework into a plain one.
///
/// Parents of a statement are its supporters and attackers; a parent
/// subset is accepted exactly when every attacker in it that is not less
/// preferred than the statement is countered by a more preferred
/// supporter inside the subset.
pub fn padf_to_adf(padf: &Padf) -> Result<Adf, Error> {
    let statements = padf.statements().clone();
    let mut conditions = Vec::with_capacity(statements.len());
    for id in statements.iter() {
        let parents = padf.parents(id).to_vec();
        if parents.len() > MAX_PARENTS {
            return Err(Error::TooManyParents {
                statement: statements.name(id).to_owned(),
                count: parents.len(),
                max: MAX_PARENTS,
            });
        }
        let mut entries = Vec::with_capacity(1 << parents.len());
        for mask in 0..1usize << parents.len() {
            let members: Vec<StatementId> = parents
                .iter()
                .enumerate()
                .filter(|(bit, _)| mask & (1 << bit) != 0)
                .map(|(_, &p)| p)
                .collect();
            let accepted = members
                .iter()
                .filter(|&&attacker| padf.attacks(attacker, id) && !padf.prefers(id, attacker))
                .all(|&attacker| {
                    members.iter().any(|&supporter| {
                        padf.supports(supporter, id) && padf.prefers(supporter, attacker)
                    })
                });
            entries.push(accepted);
        }
        conditions.push(AcceptanceTable::new(parents, entries)?);
    }
    Adf::new(statements, padf.links().to_vec(), conditions)
}

/// Restricts a framework to the accepted statements of a two-valued
/// interpretation.
///
/// The reduct keeps the statements mapped to true, the links among them,
/// and for each surviving statement the table entries over its surviving
/// parents; rejected parents are fixed to absent, which matches
/// substituting falsum for them in a formula condition. Panics when the
/// interpretation is not two-valued.
pub fn reduct(adf: &Adf, model: &Interpretation) -> Adf {
    assert!(
        model.is_two_valued(),
        "the reduct is only defined for two-valued interpretations"
    );
    let surviving = model.extension();
    let mut remap = vec![None; adf.statement_count()];
    let mut statements = Statements::default();
    for &old in &surviving {
        remap[old.index()] = Some(statements.intern(adf.statements().name(old)));
    }
    let links: Vec<Link> = adf
        .links()
        .iter()
        .filter_map(|(from, to)| Some((remap[from.index()]?, remap[to.index()]?)))
        .collect();
    let mut conditions = Vec::with_capacity(surviving.len());
    for &old in &surviving {
        let table = adf.condition(old);
        let kept: Vec<(usize, StatementId)> = table
            .parents()
            .iter()
            .enumerate()
            .filter(|(_, p)| model.get(**p) == Truth::True)
            .map(|(bit, &p)| (bit, remap[p.index()].expect("true parents survive")))
            .collect();
        let mut entries = Vec::with_capacity(1 << kept.len());
        for mask in 0..1usize << kept.len() {
            let old_mask: usize = kept
                .iter()
                .enumerate()
                .filter(|(new_bit, _)| mask & (1 << new_bit) != 0)
                .map(|(_, (old_bit, _))| 1 << old_bit)
                .sum();
            entries.push(table.entry_bool(old_mask));
        }
        let parents = kept.into_iter().map(|(_, p)| p).collect();
        conditions
            .push(AcceptanceTable::new(parents, entries).expect("reduct tables stay in bounds"));
    }
    Adf::new(statements, links, conditions).expect("the reduct of a valid framework is valid")
}
