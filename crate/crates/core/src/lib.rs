//! Polyhedral and semigradient tools for submodular set functions on small
//! ground sets: lower and upper polyhedra, sub- and superdifferentials, their
//! inner and outer approximations, continuous extensions, minimization,
//! constrained maximization and discrete duality.
//!
//! Subsets are bitmasks over `{0, …, n−1}` with `n ≤ 30`. Anything that has
//! to enumerate subsets refuses beyond a documented ceiling instead of running
//! for hours.

pub mod certificate;
pub mod checks;
pub mod duality;
pub mod error;
pub mod extensions;
pub mod function;
pub mod lower;
pub mod maximize;
pub mod minimize;
pub mod modular;
pub mod oracle;
pub mod set;
pub mod upper;
pub mod verify;
pub mod zoo;

pub use certificate::{Certificate, Guarantee, Witness, EPS};
pub use error::{Error, Result};
pub use function::{make_function, FunctionSpec, SetFunction, SetOracle};
pub use modular::{AffinePoint, ModularVector};
pub use set::{GroundSet, Permutation, Subset};

#[cfg(test)]
pub(crate) mod testutil {
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    use crate::set::{Permutation, Subset};

    pub use crate::zoo::three_element;

    /// Subset from one-based labels.
    pub fn s(elems: &[usize]) -> Subset {
        crate::zoo::one_based(elems)
    }

    pub fn perm(labels: &[usize]) -> Permutation {
        Permutation::new(labels.iter().map(|l| l - 1).collect()).unwrap()
    }

    #[track_caller]
    pub fn assert_close(got: &[f64], want: &[f64]) {
        assert_eq!(got.len(), want.len(), "{got:?} vs {want:?}");
        for (a, b) in got.iter().zip(want) {
            assert!((a - b).abs() <= 1e-9, "{got:?} vs {want:?}");
        }
    }

    pub fn rng(seed: u64) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(seed)
    }
}
