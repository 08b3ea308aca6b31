//! Three-valued interpretations over the statements of a framework.

use crate::adf::StatementId;
use crate::truth::Truth;

/// A total assignment of truth values to statements, stored densely by
/// statement index. Cheap to clone; enumeration code owns independent
/// copies.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Interpretation {
    values: Vec<Truth>,
}

impl Interpretation {
    /// The least informative interpretation: everything unknown.
    pub fn all_unknown(statement_count: usize) -> Self {
        Interpretation {
            values: vec![Truth::Unknown; statement_count],
        }
    }

    pub fn from_values(values: Vec<Truth>) -> Self {
        Interpretation { values }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn get(&self, s: StatementId) -> Truth {
        self.values[s.index()]
    }

    pub fn set(&mut self, s: StatementId, value: Truth) {
        self.values[s.index()] = value;
    }

    pub fn values(&self) -> &[Truth] {
        &self.values
    }

    /// Pointwise information ordering. Panics when the interpretations
    /// range over different statement sets.
    pub fn leq_info(&self, other: &Interpretation) -> bool {
        assert_eq!(
            self.values.len(),
            other.values.len(),
            "interpretations range over different statement sets"
        );
        self.values
            .iter()
            .zip(&other.values)
            .all(|(a, b)| a.leq_info(*b))
    }

    pub fn is_two_valued(&self) -> bool {
        self.values.iter().all(|v| v.is_classical())
    }

    /// The statements mapped to true.
    pub fn extension(&self) -> Vec<StatementId> {
        self.values
            .iter()
            .enumerate()
            .filter(|(_, &v)| v == Truth::True)
            .map(|(i, _)| StatementId::new(i))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn interp(values: &[Truth]) -> Interpretation {
        Interpretation::from_values(values.to_vec())
    }

    #[test]
    fn all_unknown_is_below_everything() {
        use Truth::*;
        let bottom = Interpretation::all_unknown(3);
        for a in [True, False, Unknown] {
            for b in [True, False, Unknown] {
                for c in [True, False, Unknown] {
                    assert!(bottom.leq_info(&interp(&[a, b, c])));
                }
            }
        }
    }

    #[test]
    fn classical_values_are_incomparable() {
        use Truth::*;
        assert!(!interp(&[True]).leq_info(&interp(&[False])));
        assert!(!interp(&[False]).leq_info(&interp(&[True])));
    }

    #[test]
    fn extension_filters_true_statements() {
        use Truth::*;
        let v = interp(&[True, False, True]);
        let ext: Vec<usize> = v.extension().iter().map(|s| s.index()).collect();
        assert_eq!(ext, vec![0, 2]);
        assert!(Interpretation::all_unknown(4).extension().is_empty());
    }

    #[test]
    #[should_panic(expected = "different statement sets")]
    fn leq_info_rejects_mismatched_lengths() {
        interp(&[Truth::True]).leq_info(&Interpretation::all_unknown(2));
    }

    fn truth_strategy() -> impl Strategy<Value = Truth> {
        prop_oneof![Just(Truth::True), Just(Truth::False), Just(Truth::Unknown)]
    }

    fn interpretation_strategy(len: usize) -> impl Strategy<Value = Interpretation> {
        proptest::collection::vec(truth_strategy(), len).prop_map(Interpretation::from_values)
    }

    proptest! {
        #[test]
        fn leq_info_is_reflexive(v in interpretation_strategy(5)) {
            prop_assert!(v.leq_info(&v));
        }

        #[test]
        fn leq_info_is_antisymmetric(
            v in interpretation_strategy(5),
            w in interpretation_strategy(5),
        ) {
            if v.leq_info(&w) && w.leq_info(&v) {
                prop_assert_eq!(v, w);
            }
        }

        #[test]
        fn leq_info_is_transitive(
            u in interpretation_strategy(4),
            v in interpretation_strategy(4),
            w in interpretation_strategy(4),
        ) {
            if u.leq_info(&v) && v.leq_info(&w) {
                prop_assert!(u.leq_info(&w));
            }
        }
    }
}
