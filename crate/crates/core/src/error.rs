use thiserror::Error;

/// Errors raised across the toolkit.
///
/// `Refused` is kept separate from the validation variants so callers can
/// tell an enumeration ceiling apart from bad input.
#[derive(Debug, Clone, Error, PartialEq)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("malformed function spec: {0}")]
    Spec(String),

    #[error("{what} refused: n = {n} exceeds the limit {limit}")]
    Refused {
        what: &'static str,
        n: usize,
        limit: usize,
        np_hard_note: Option<&'static str>,
    },

    #[error("linear program is unbounded along -e_{direction}")]
    Unbounded { direction: usize },

    #[error("linear program is infeasible")]
    Infeasible,

    #[error("premise violated: {0}")]
    Premise(String),

    #[error("no convergence after {iterations} major cycles (best value {best_value})")]
    NonConvergence {
        iterations: usize,
        best_mask: u32,
        best_value: f64,
    },
}

impl Error {
    pub(crate) fn refused(what: &'static str, n: usize, limit: usize) -> Self {
        Error::Refused {
            what,
            n,
            limit,
            np_hard_note: None,
        }
    }

    pub(crate) fn refused_np_hard(what: &'static str, n: usize, limit: usize) -> Self {
        Error::Refused {
            what,
            n,
            limit,
            np_hard_note: Some(NP_HARD_NOTE),
        }
    }

    /// True for enumeration ceilings (CLI exit code 3).
    pub fn is_refusal(&self) -> bool {
        matches!(self, Error::Refused { .. })
    }
}

pub(crate) const NP_HARD_NOTE: &str =
    "the exact problem is NP-hard in general; only exhaustive enumeration is offered";

pub type Result<T> = std::result::Result<T, Error>;

/// Refuse when `n` exceeds `limit`.
pub(crate) fn ensure_at_most(what: &'static str, n: usize, limit: usize) -> Result<()> {
    if n > limit {
        Err(Error::refused(what, n, limit))
    } else {
        Ok(())
    }
}
