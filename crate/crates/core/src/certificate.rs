use serde::Serialize;

use crate::set::Subset;

/// Default absolute tolerance for every `≤`/`≥` test.
pub const EPS: f64 = 1e-8;

/// Evidence attached to a verdict.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    /// A set naming the violated (or attaining) constraint.
    Set { set: Subset },
    /// A diminishing-returns violation `f(j|S) < f(j|S ∪ k)`.
    Triple { j: usize, s: Subset, k: usize },
    /// An exchange-property violation.
    Exchange { x: Subset, y: Subset, i: usize },
    /// A pair of sets, e.g. `(X, Y)` for a failing pair predicate.
    Pair { a: Subset, b: Subset },
    /// Convex-combination weight for the `Conv` inner bound.
    Lambda { lambda: f64 },
    /// A coordinate whose singleton inequality fails.
    Coordinate { j: usize },
    /// A point (e.g. a sampled vector outside the superdifferential).
    Point { point: Vec<f64>, set: Option<Subset> },
}

/// Approximation guarantee implied by a certificate; conditional on `preconditions_met`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Guarantee {
    pub tag: String,
    pub factor: Option<f64>,
    pub preconditions: Vec<String>,
    pub preconditions_met: bool,
}

impl Guarantee {
    pub fn exact(tag: &str) -> Self {
        Guarantee {
            tag: tag.to_string(),
            factor: Some(1.0),
            preconditions: Vec::new(),
            preconditions_met: true,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Certificate {
    pub verdict: bool,
    pub witness: Option<Witness>,
    pub guarantee: Option<Guarantee>,
    pub note: Option<String>,
}

impl Certificate {
    pub fn pass() -> Self {
        Certificate {
            verdict: true,
            witness: None,
            guarantee: None,
            note: None,
        }
    }

    pub fn fail(witness: Witness) -> Self {
        Certificate {
            verdict: false,
            witness: Some(witness),
            guarantee: None,
            note: None,
        }
    }

    pub fn fail_set(set: Subset) -> Self {
        Self::fail(Witness::Set { set })
    }

    pub fn with_witness(mut self, w: Witness) -> Self {
        self.witness = Some(w);
        self
    }

    pub fn with_guarantee(mut self, g: Guarantee) -> Self {
        self.guarantee = Some(g);
        self
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }

    /// The witness set, when the witness is a plain set.
    pub fn witness_set(&self) -> Option<Subset> {
        match self.witness {
            Some(Witness::Set { set }) => Some(set),
            Some(Witness::Point { set, .. }) => set,
            _ => None,
        }
    }
}
