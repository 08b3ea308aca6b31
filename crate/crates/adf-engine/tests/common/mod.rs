//! Seeded random instance generation shared by the integration tests.

use adf_engine::{Adf, Interpretation, Truth};
use rand::rngs::StdRng;
use rand::Rng;

/// Builds a random functional instance with `statement_count` statements
/// and at most `max_parents` parents each, as instance text. Tables are
/// uniformly random, so the generated frameworks are valid by
/// construction.
pub fn random_functional_instance(
    rng: &mut StdRng,
    statement_count: usize,
    max_parents: usize,
) -> String {
    let names: Vec<String> = (0..statement_count).map(|i| format!("s{i}")).collect();
    let mut text = String::new();
    for name in &names {
        text.push_str(&format!("s({name}). "));
    }
    text.push('\n');
    let mut parent_lists: Vec<Vec<usize>> = Vec::new();
    for target in 0..statement_count {
        let count = rng.random_range(0..=max_parents.min(statement_count));
        let mut parents: Vec<usize> = Vec::new();
        while parents.len() < count {
            let candidate = rng.random_range(0..statement_count);
            if !parents.contains(&candidate) {
                parents.push(candidate);
            }
        }
        for &parent in &parents {
            text.push_str(&format!("l({},{}). ", names[parent], names[target]));
        }
        parent_lists.push(parents);
    }
    text.push('\n');
    for (target, parents) in parent_lists.iter().enumerate() {
        let name = &names[target];
        for mask in 0..1usize << parents.len() {
            let predicate = if rng.random_bool(0.5) { "ci" } else { "co" };
            if mask == 0 {
                text.push_str(&format!("{predicate}({name}). "));
            } else {
                for (bit, &parent) in parents.iter().enumerate() {
                    if mask & (1 << bit) != 0 {
                        text.push_str(&format!("{predicate}({name},{mask},{}). ", names[parent]));
                    }
                }
            }
        }
        text.push('\n');
    }
    text
}

/// A uniformly random interpretation over the statements of `adf`.
pub fn random_interpretation(rng: &mut StdRng, adf: &Adf) -> Interpretation {
    let values = (0..adf.statement_count())
        .map(|_| match rng.random_range(0..3) {
            0 => Truth::True,
            1 => Truth::False,
            _ => Truth::Unknown,
        })
        .collect();
    Interpretation::from_values(values)
}

/// Forgets a random selection of decided statements, producing an
/// interpretation below `v` in the information ordering.
pub fn degrade(rng: &mut StdRng, v: &Interpretation) -> Interpretation {
    let values = v
        .values()
        .iter()
        .map(|&value| {
            if rng.random_bool(0.5) {
                Truth::Unknown
            } else {
                value
            }
        })
        .collect();
    Interpretation::from_values(values)
}
