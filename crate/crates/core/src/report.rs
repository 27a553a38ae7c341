//! Relation reports shared by the Hecke and superalgebra checkers.

use serde::Serialize;

use crate::linalg::{Mat, Scalar};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Residual {
    Zero,
    Nonzero,
}

/// Location and value of a nonzero residual entry.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WitnessEntry {
    pub row: usize,
    pub col: usize,
    pub value: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RelationCheck {
    pub relation: String,
    pub indices: Vec<usize>,
    pub residual_norm: Residual,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness_entry: Option<WitnessEntry>,
}

impl RelationCheck {
    /// Records whether `residual` vanishes, keeping its first nonzero entry.
    pub fn from_residual<T: Scalar>(relation: &str, indices: Vec<usize>, residual: &Mat<T>) -> Self {
        let witness_entry = residual.first_nonzero().map(|(row, col, v)| WitnessEntry {
            row,
            col,
            value: v.to_string(),
        });
        Self {
            relation: relation.to_string(),
            indices,
            residual_norm: if witness_entry.is_some() {
                Residual::Nonzero
            } else {
                Residual::Zero
            },
            witness_entry,
        }
    }

    pub fn passed(&self) -> bool {
        self.residual_norm == Residual::Zero
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct RelationReport {
    pub checks: Vec<RelationCheck>,
}

impl RelationReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(RelationCheck::passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &RelationCheck> {
        self.checks.iter().filter(|c| !c.passed())
    }

    /// Checks whose relation name is `name`.
    pub fn named<'a>(&'a self, name: &'a str) -> impl Iterator<Item = &'a RelationCheck> + 'a {
        self.checks.iter().filter(move |c| c.relation == name)
    }

    pub fn extend(&mut self, other: RelationReport) {
        self.checks.extend(other.checks);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qfield::RatFunc;

    #[test]
    fn json_shape() {
        let zero = Mat::<RatFunc>::zeros(2, 2);
        let mut bad = zero.clone();
        bad.set(1, 0, RatFunc::q_pow(-1));
        let report = RelationReport {
            checks: vec![
                RelationCheck::from_residual("quadratic", vec![1], &zero),
                RelationCheck::from_residual("braid", vec![1, 2], &bad),
            ],
        };
        assert!(!report.passed());
        let v = serde_json::to_value(&report).unwrap();
        assert_eq!(v["checks"][0]["residual_norm"], "zero");
        assert!(v["checks"][0].get("witness_entry").is_none());
        assert_eq!(v["checks"][1]["residual_norm"], "nonzero");
        assert_eq!(v["checks"][1]["witness_entry"]["value"], "q^-1");
        assert_eq!(report.failures().count(), 1);
    }
}
