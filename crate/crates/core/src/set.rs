//! Ground sets, bitmask subsets and permutations.
//!
//! Elements are 0-indexed and a subset is a little-endian bitmask: bit `i`
//! is element `i` (element `i + 1` in one-based notation).

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Hard ceiling for oracle-backed ground sets.
pub const MAX_GROUND: usize = 30;
/// Ceiling for operations that scan all `2^n` subsets.
pub const MAX_ENUM: usize = 24;
/// Ceiling for operations that scan pairs of subsets (`4^n`-ish).
pub const MAX_PAIR_ENUM: usize = 14;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GroundSet {
    n: usize,
}

impl GroundSet {
    pub fn new(n: usize) -> Result<Self> {
        if n == 0 || n > MAX_GROUND {
            return Err(Error::Domain(format!(
                "ground set size must lie in 1..={MAX_GROUND}, got {n}"
            )));
        }
        Ok(GroundSet { n })
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        false
    }

    #[inline]
    pub fn full(&self) -> Subset {
        Subset::full(self.n)
    }

    /// Number of subsets, `2^n`.
    #[inline]
    pub fn num_subsets(&self) -> u64 {
        1u64 << self.n
    }

    /// Iterate every subset in increasing mask order. Refuses `n > MAX_ENUM`.
    pub fn subsets(&self) -> Result<impl Iterator<Item = Subset>> {
        if self.n > MAX_ENUM {
            return Err(Error::refused("subset enumeration", self.n, MAX_ENUM));
        }
        Ok((0..(1u32 << self.n)).map(Subset))
    }

    pub fn check(&self, s: Subset) -> Result<()> {
        if (s.0 as u64) >= self.num_subsets() {
            return Err(Error::Domain(format!(
                "mask {:#b} out of range for n = {}",
                s.0, self.n
            )));
        }
        Ok(())
    }
}

/// A subset of the ground set stored as a bitmask.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Subset(pub u32);

impl Subset {
    pub const EMPTY: Subset = Subset(0);

    #[inline]
    pub fn full(n: usize) -> Subset {
        if n >= 32 {
            Subset(u32::MAX)
        } else {
            Subset((1u32 << n) - 1)
        }
    }

    pub fn from_elements<I: IntoIterator<Item = usize>>(elems: I) -> Subset {
        Subset(elems.into_iter().fold(0u32, |m, i| m | (1 << i)))
    }

    pub fn singleton(j: usize) -> Subset {
        Subset(1 << j)
    }

    #[inline]
    pub fn mask(self) -> u32 {
        self.0
    }

    #[inline]
    pub fn contains(self, j: usize) -> bool {
        self.0 >> j & 1 == 1
    }

    #[inline]
    pub fn with(self, j: usize) -> Subset {
        Subset(self.0 | (1 << j))
    }

    #[inline]
    pub fn without(self, j: usize) -> Subset {
        Subset(self.0 & !(1 << j))
    }

    #[inline]
    pub fn union(self, other: Subset) -> Subset {
        Subset(self.0 | other.0)
    }

    #[inline]
    pub fn intersection(self, other: Subset) -> Subset {
        Subset(self.0 & other.0)
    }

    #[inline]
    pub fn minus(self, other: Subset) -> Subset {
        Subset(self.0 & !other.0)
    }

    #[inline]
    pub fn complement(self, n: usize) -> Subset {
        Subset(!self.0 & Subset::full(n).0)
    }

    #[inline]
    pub fn is_subset_of(self, other: Subset) -> bool {
        self.0 & !other.0 == 0
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    /// Elements in increasing order.
    pub fn elements(self) -> impl Iterator<Item = usize> {
        let mut m = self.0;
        std::iter::from_fn(move || {
            if m == 0 {
                None
            } else {
                let j = m.trailing_zeros() as usize;
                m &= m - 1;
                Some(j)
            }
        })
    }

    /// All submasks of `self`, in increasing mask order.
    pub fn submasks(self) -> impl Iterator<Item = Subset> {
        let full = self.0;
        let mut cur: Option<u32> = Some(0);
        std::iter::from_fn(move || {
            let c = cur?;
            cur = if c == full {
                None
            } else {
                Some((c.wrapping_sub(full)) & full)
            };
            Some(Subset(c))
        })
    }

    /// Submasks of `self` with at most `k` elements.
    pub fn submasks_up_to(self, k: usize) -> Vec<Subset> {
        use itertools::Itertools;
        let elems: Vec<usize> = self.elements().collect();
        let mut out = Vec::new();
        for size in 0..=k.min(elems.len()) {
            for combo in elems.iter().copied().combinations(size) {
                out.push(Subset::from_elements(combo));
            }
        }
        out
    }

    /// One-based set notation, e.g. `{2,3}`.
    pub fn one_based(self) -> String {
        let parts: Vec<String> = self.elements().map(|j| (j + 1).to_string()).collect();
        format!("{{{}}}", parts.join(","))
    }
}

impl fmt::Display for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.one_based())
    }
}

/// An ordering of the ground set; prefix `i` of `order` is the chain set `S_i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Permutation {
    order: Vec<usize>,
}

impl Permutation {
    pub fn new(order: Vec<usize>) -> Result<Self> {
        let n = order.len();
        let mut seen = vec![false; n];
        for &i in &order {
            if i >= n || seen[i] {
                return Err(Error::Domain(format!(
                    "{order:?} is not a permutation of 0..{n}"
                )));
            }
            seen[i] = true;
        }
        Ok(Permutation { order })
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            order: (0..n).collect(),
        }
    }

    /// Elements of `x` first, then the rest, each block ascending.
    pub fn with_prefix(n: usize, x: Subset) -> Self {
        let mut order: Vec<usize> = x.elements().filter(|&j| j < n).collect();
        order.extend((0..n).filter(|&j| !x.contains(j)));
        Permutation { order }
    }

    /// Sort by descending weight, ties by ascending index.
    pub fn descending(weights: &[f64]) -> Self {
        let mut order: Vec<usize> = (0..weights.len()).collect();
        order.sort_by(|&a, &b| weights[b].total_cmp(&weights[a]).then(a.cmp(&b)));
        Permutation { order }
    }

    pub fn order(&self) -> &[usize] {
        &self.order
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    /// Chain sets `S_0 = ∅ ⊂ S_1 ⊂ … ⊂ S_n = V`.
    pub fn chain(&self) -> Vec<Subset> {
        let mut out = Vec::with_capacity(self.order.len() + 1);
        let mut s = Subset::EMPTY;
        out.push(s);
        for &j in &self.order {
            s = s.with(j);
            out.push(s);
        }
        out
    }

    /// True when `x` occupies exactly the first `|x|` positions.
    pub fn is_compatible_with(&self, x: Subset) -> bool {
        let k = x.len();
        self.order.len() >= k && self.order[..k].iter().all(|&j| x.contains(j))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn submask_enumeration_is_complete() {
        let s = Subset(0b1011);
        let subs: Vec<u32> = s.submasks().map(|t| t.0).collect();
        assert_eq!(subs, vec![0, 1, 2, 3, 8, 9, 10, 11]);
        assert_eq!(s.submasks_up_to(1).len(), 4);
    }

    #[test]
    fn permutation_rejects_duplicates() {
        assert!(Permutation::new(vec![0, 0, 1]).is_err());
        assert!(Permutation::new(vec![2, 0, 1]).is_ok());
    }

    #[test]
    fn chain_grows_one_at_a_time() {
        let p = Permutation::new(vec![1, 2, 0]).unwrap();
        let chain = p.chain();
        assert_eq!(chain.len(), 4);
        for w in chain.windows(2) {
            assert!(w[0].is_subset_of(w[1]));
            assert_eq!(w[1].len(), w[0].len() + 1);
        }
        assert!(p.is_compatible_with(Subset::from_elements([1, 2])));
        assert!(!p.is_compatible_with(Subset::from_elements([0])));
    }

    #[test]
    fn descending_breaks_ties_by_index() {
        let p = Permutation::descending(&[0.5, 1.0, 0.25, 1.0]);
        assert_eq!(p.order(), &[1, 3, 0, 2]);
    }

    #[test]
    fn ground_set_bounds() {
        assert!(GroundSet::new(0).is_err());
        assert!(GroundSet::new(31).is_err());
        let g = GroundSet::new(3).unwrap();
        assert!(g.check(Subset(8)).is_err());
        assert!(g.check(Subset(7)).is_ok());
        assert_eq!(Subset(0b110).one_based(), "{2,3}");
    }
}
