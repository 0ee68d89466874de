//! Set-function oracles and the JSON `FunctionSpec` that builds them.
//!
//! Every `SetFunction` is normalized at construction: the raw value of the
//! empty set is subtracted, so `value(∅) = 0` always holds. Singleton
//! values `f(j)`, top marginals `f(j | V∖j)` and `f(V)` are cached.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::modular::ModularVector;
use crate::set::{GroundSet, Subset, MAX_ENUM};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Curve {
    Sqrt,
    Log1p,
    /// `t ↦ min(t, budget)`
    Cap(f64),
}

impl Curve {
    fn apply(self, t: f64) -> f64 {
        match self {
            Curve::Sqrt => t.sqrt(),
            Curve::Log1p => t.ln_1p(),
            Curve::Cap(b) => t.min(b),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Matroid {
    Uniform { rank: usize },
    /// `blocks[b]` is a bitmask; at most `caps[b]` elements per block.
    Partition { blocks: Vec<Subset>, caps: Vec<usize> },
}

impl Matroid {
    pub fn rank(&self, s: Subset) -> usize {
        match self {
            Matroid::Uniform { rank } => s.len().min(*rank),
            Matroid::Partition { blocks, caps } => blocks
                .iter()
                .zip(caps)
                .map(|(b, &c)| s.intersection(*b).len().min(c))
                .sum(),
        }
    }

    pub fn is_independent(&self, s: Subset) -> bool {
        self.rank(s) == s.len()
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Kind {
    Table(Vec<f64>),
    Modular(Vec<f64>),
    ConcaveOverModular { weights: Vec<f64>, curve: Curve },
    /// `covers[j]` is a bitset (64-bit words) over the items covered by `j`.
    Coverage { covers: Vec<Vec<u64>>, areas: Vec<f64> },
    GraphCut { weights: Vec<Vec<f64>> },
    MatroidRank(Matroid),
    Scaled(f64, Box<SetFunction>),
    Sum(Vec<SetFunction>),
    /// `X ↦ f(V∖X) − f(V)`
    Complement(Box<SetFunction>),
}

#[derive(Debug, Clone, PartialEq)]
pub struct SetFunction {
    ground: GroundSet,
    kind: Kind,
    offset: f64,
    singles: Vec<f64>,
    tops: Vec<f64>,
    full: f64,
}

impl SetFunction {
    fn build(ground: GroundSet, kind: Kind) -> SetFunction {
        let mut f = SetFunction {
            ground,
            kind,
            offset: 0.0,
            singles: Vec::new(),
            tops: Vec::new(),
            full: 0.0,
        };
        f.offset = f.raw(Subset::EMPTY);
        let n = ground.len();
        let v = ground.full();
        f.full = f.value(v);
        f.singles = (0..n).map(|j| f.value(Subset::singleton(j))).collect();
        f.tops = (0..n).map(|j| f.full - f.value(v.without(j))).collect();
        f
    }

    /// A table of `2^n` values indexed by mask. Shifted by `-values[0]`.
    pub fn table(n: usize, values: Vec<f64>) -> Result<Self> {
        let ground = GroundSet::new(n)?;
        if n > MAX_ENUM {
            return Err(Error::refused("table construction", n, MAX_ENUM));
        }
        if values.len() as u64 != ground.num_subsets() {
            return Err(Error::Spec(format!(
                "table for n = {n} needs {} values, got {}",
                ground.num_subsets(),
                values.len()
            )));
        }
        ensure_finite(&values)?;
        Ok(Self::build(ground, Kind::Table(values)))
    }

    /// Tabulate an arbitrary closure.
    pub fn from_fn(n: usize, mut g: impl FnMut(Subset) -> f64) -> Result<Self> {
        let ground = GroundSet::new(n)?;
        let values = ground.subsets()?.map(&mut g).collect();
        Self::table(n, values)
    }

    pub fn modular(weights: Vec<f64>) -> Result<Self> {
        let ground = GroundSet::new(weights.len())?;
        ensure_finite(&weights)?;
        Ok(Self::build(ground, Kind::Modular(weights)))
    }

    pub fn concave_over_modular(weights: Vec<f64>, curve: Curve) -> Result<Self> {
        let ground = GroundSet::new(weights.len())?;
        ensure_nonneg("concave_modular weights", &weights)?;
        if let Curve::Cap(b) = curve {
            if !(b.is_finite() && b >= 0.0) {
                return Err(Error::Spec(format!("cap budget must be finite and >= 0, got {b}")));
            }
        }
        Ok(Self::build(ground, Kind::ConcaveOverModular { weights, curve }))
    }

    /// `covers[j]` lists the items covered by element `j`; `areas[item] >= 0`.
    pub fn coverage(covers: Vec<Vec<usize>>, areas: Vec<f64>) -> Result<Self> {
        let ground = GroundSet::new(covers.len())?;
        ensure_nonneg("coverage areas", &areas)?;
        let words = areas.len().div_ceil(64).max(1);
        let mut bits = Vec::with_capacity(covers.len());
        for (j, items) in covers.iter().enumerate() {
            let mut row = vec![0u64; words];
            for &it in items {
                if it >= areas.len() {
                    return Err(Error::Spec(format!(
                        "element {j} covers item {it}, but only {} items have areas",
                        areas.len()
                    )));
                }
                row[it / 64] |= 1 << (it % 64);
            }
            bits.push(row);
        }
        Ok(Self::build(ground, Kind::Coverage { covers: bits, areas }))
    }

    /// Cut function of an undirected graph given by a symmetric weight matrix.
    pub fn graph_cut(weights: Vec<Vec<f64>>) -> Result<Self> {
        let n = weights.len();
        let ground = GroundSet::new(n)?;
        for (i, row) in weights.iter().enumerate() {
            if row.len() != n {
                return Err(Error::Spec(format!("graph_cut row {i} has length {}", row.len())));
            }
            ensure_nonneg("graph_cut weights", row)?;
            for (j, &w) in row.iter().enumerate() {
                if (w - weights[j][i]).abs() > 0.0 {
                    return Err(Error::Spec(format!("graph_cut weights not symmetric at ({i},{j})")));
                }
            }
        }
        Ok(Self::build(ground, Kind::GraphCut { weights }))
    }

    pub fn uniform_matroid_rank(n: usize, rank: usize) -> Result<Self> {
        let ground = GroundSet::new(n)?;
        Ok(Self::build(ground, Kind::MatroidRank(Matroid::Uniform { rank })))
    }

    pub fn partition_matroid_rank(n: usize, blocks: Vec<Vec<usize>>, caps: Vec<usize>) -> Result<Self> {
        let ground = GroundSet::new(n)?;
        let blocks = partition_blocks(n, &blocks, &caps)?;
        Ok(Self::build(ground, Kind::MatroidRank(Matroid::Partition { blocks, caps })))
    }

    pub fn scaled(factor: f64, f: SetFunction) -> Result<Self> {
        if !factor.is_finite() {
            return Err(Error::Spec("scale factor must be finite".into()));
        }
        Ok(Self::build(f.ground, Kind::Scaled(factor, Box::new(f))))
    }

    pub fn sum(terms: Vec<SetFunction>) -> Result<Self> {
        let first = terms
            .first()
            .ok_or_else(|| Error::Spec("sum needs at least one term".into()))?;
        let ground = first.ground;
        if terms.iter().any(|t| t.ground != ground) {
            return Err(Error::Spec("sum terms live on different ground sets".into()));
        }
        Ok(Self::build(ground, Kind::Sum(terms)))
    }

    pub fn complement(f: SetFunction) -> Self {
        Self::build(f.ground, Kind::Complement(Box::new(f)))
    }

    /// `self − other`, tabulated.
    pub fn minus(&self, other: &SetFunction) -> Result<Self> {
        if self.ground != other.ground {
            return Err(Error::Domain("functions live on different ground sets".into()));
        }
        SetFunction::sum(vec![self.clone(), SetFunction::scaled(-1.0, other.clone())?])
    }

    /// The modular function `x` added to `self`.
    pub fn plus_modular(&self, x: &ModularVector) -> Result<Self> {
        SetFunction::sum(vec![self.clone(), SetFunction::modular(x.0.clone())?])
    }

    fn raw(&self, s: Subset) -> f64 {
        match &self.kind {
            Kind::Table(v) => v[s.0 as usize],
            Kind::Modular(w) => s.elements().map(|j| w[j]).sum(),
            Kind::ConcaveOverModular { weights, curve } => {
                curve.apply(s.elements().map(|j| weights[j]).sum())
            }
            Kind::Coverage { covers, areas } => {
                let mut acc = vec![0u64; covers.first().map_or(1, Vec::len)];
                for j in s.elements() {
                    for (a, b) in acc.iter_mut().zip(&covers[j]) {
                        *a |= b;
                    }
                }
                let mut total = 0.0;
                for (w, word) in acc.iter().enumerate() {
                    let mut m = *word;
                    while m != 0 {
                        let b = m.trailing_zeros() as usize;
                        total += areas[w * 64 + b];
                        m &= m - 1;
                    }
                }
                total
            }
            Kind::GraphCut { weights } => {
                let n = weights.len();
                let mut cut = 0.0;
                for i in s.elements() {
                    for (j, w) in weights[i].iter().enumerate().take(n) {
                        if !s.contains(j) {
                            cut += w;
                        }
                    }
                }
                cut
            }
            Kind::MatroidRank(m) => m.rank(s) as f64,
            Kind::Scaled(a, f) => a * f.value(s),
            Kind::Sum(terms) => terms.iter().map(|t| t.value(s)).sum(),
            Kind::Complement(f) => {
                let n = self.ground.len();
                f.value(s.complement(n)) - f.full
            }
        }
    }

    #[inline]
    pub fn ground(&self) -> GroundSet {
        self.ground
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.ground.len()
    }

    /// `f(S)` without range checking; `f(∅) = 0`.
    #[inline]
    pub fn value(&self, s: Subset) -> f64 {
        debug_assert!((s.0 as u64) < self.ground.num_subsets());
        if s.is_empty() {
            return 0.0;
        }
        self.raw(s) - self.offset
    }

    pub fn evaluate(&self, s: Subset) -> Result<f64> {
        self.ground.check(s)?;
        Ok(self.value(s))
    }

    /// `f(j | S) = f(S ∪ j) − f(S)`; zero when `j ∈ S`.
    #[inline]
    pub fn marginal(&self, j: usize, s: Subset) -> f64 {
        if s.contains(j) {
            return 0.0;
        }
        self.value(s.with(j)) - self.value(s)
    }

    pub fn marginal_checked(&self, j: usize, s: Subset) -> Result<f64> {
        if j >= self.n() {
            return Err(Error::Domain(format!("element {j} out of range for n = {}", self.n())));
        }
        self.ground.check(s)?;
        Ok(self.marginal(j, s))
    }

    /// `f(A | B) = f(A ∪ B) − f(B)`.
    pub fn marginal_set(&self, a: Subset, b: Subset) -> f64 {
        self.value(a.union(b)) - self.value(b)
    }

    /// Cached `f(j)`.
    #[inline]
    pub fn single(&self, j: usize) -> f64 {
        self.singles[j]
    }

    /// Cached `f(j | V∖j)`.
    #[inline]
    pub fn top_marginal(&self, j: usize) -> f64 {
        self.tops[j]
    }

    #[inline]
    pub fn full_value(&self) -> f64 {
        self.full
    }

    pub fn singles(&self) -> &[f64] {
        &self.singles
    }

    /// Values of every subset, indexed by mask.
    pub fn table_values(&self) -> Result<Vec<f64>> {
        if let Kind::Table(v) = &self.kind {
            if self.offset == 0.0 {
                return Ok(v.clone());
            }
        }
        Ok(self.ground.subsets()?.map(|s| self.value(s)).collect())
    }

    /// Equivalent `Table` function (cheap evaluation for exhaustive scans).
    pub fn tabulate(&self) -> Result<SetFunction> {
        let values = self.table_values()?;
        SetFunction::table(self.n(), values)
    }

    /// The matroid behind a `MatroidRank` function, if any.
    pub fn matroid(&self) -> Option<&Matroid> {
        match &self.kind {
            Kind::MatroidRank(m) => Some(m),
            _ => None,
        }
    }
}

fn ensure_finite(v: &[f64]) -> Result<()> {
    if let Some(x) = v.iter().find(|x| !x.is_finite()) {
        return Err(Error::Spec(format!("non-finite value {x}")));
    }
    Ok(())
}

fn ensure_nonneg(what: &str, v: &[f64]) -> Result<()> {
    ensure_finite(v)?;
    if let Some(x) = v.iter().find(|x| **x < 0.0) {
        return Err(Error::Spec(format!("{what} must be non-negative, got {x}")));
    }
    Ok(())
}

pub(crate) fn partition_blocks(n: usize, blocks: &[Vec<usize>], caps: &[usize]) -> Result<Vec<Subset>> {
    if blocks.len() != caps.len() {
        return Err(Error::Spec(format!(
            "{} blocks but {} caps",
            blocks.len(),
            caps.len()
        )));
    }
    let mut seen = Subset::EMPTY;
    let mut out = Vec::with_capacity(blocks.len());
    for b in blocks {
        let mut m = Subset::EMPTY;
        for &j in b {
            if j >= n || seen.contains(j) {
                return Err(Error::Spec(format!("block element {j} repeated or out of range")));
            }
            seen = seen.with(j);
            m = m.with(j);
        }
        out.push(m);
    }
    Ok(out)
}

/// JSON description of a set function.
///
/// Element indices inside specs (coverage lists, partition blocks) are
/// 0-based; table masks use bit `i` for element `i`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case", deny_unknown_fields)]
pub enum FunctionSpec {
    Table {
        n: usize,
        values: Vec<f64>,
    },
    Modular {
        weights: Vec<f64>,
    },
    ConcaveModular {
        weights: Vec<f64>,
        curve: CurveName,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        budget: Option<f64>,
    },
    Coverage {
        covers: Vec<Vec<usize>>,
        areas: Vec<f64>,
    },
    GraphCut {
        weights: Vec<Vec<f64>>,
    },
    MatroidRank {
        variant: MatroidVariant,
        n: usize,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        r: Option<usize>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        blocks: Option<Vec<Vec<usize>>>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        caps: Option<Vec<usize>>,
    },
    Scaled {
        factor: f64,
        of: Box<FunctionSpec>,
    },
    Sum {
        terms: Vec<FunctionSpec>,
    },
    Complement {
        of: Box<FunctionSpec>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CurveName {
    Sqrt,
    Log1p,
    Cap,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MatroidVariant {
    Uniform,
    Partition,
}

impl FunctionSpec {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Spec(e.to_string()))
    }
}

/// Build a normalized `SetFunction` from its spec.
pub fn make_function(spec: &FunctionSpec) -> Result<SetFunction> {
    match spec {
        FunctionSpec::Table { n, values } => SetFunction::table(*n, values.clone()),
        FunctionSpec::Modular { weights } => SetFunction::modular(weights.clone()),
        FunctionSpec::ConcaveModular {
            weights,
            curve,
            budget,
        } => {
            let curve = match (curve, budget) {
                (CurveName::Sqrt, None) => Curve::Sqrt,
                (CurveName::Log1p, None) => Curve::Log1p,
                (CurveName::Cap, Some(b)) => Curve::Cap(*b),
                (CurveName::Cap, None) => {
                    return Err(Error::Spec("curve \"cap\" needs a \"budget\"".into()))
                }
                (_, Some(_)) => {
                    return Err(Error::Spec("\"budget\" only applies to curve \"cap\"".into()))
                }
            };
            SetFunction::concave_over_modular(weights.clone(), curve)
        }
        FunctionSpec::Coverage { covers, areas } => {
            SetFunction::coverage(covers.clone(), areas.clone())
        }
        FunctionSpec::GraphCut { weights } => SetFunction::graph_cut(weights.clone()),
        FunctionSpec::MatroidRank {
            variant,
            n,
            r,
            blocks,
            caps,
        } => match variant {
            MatroidVariant::Uniform => {
                let r = r.ok_or_else(|| Error::Spec("uniform matroid needs \"r\"".into()))?;
                SetFunction::uniform_matroid_rank(*n, r)
            }
            MatroidVariant::Partition => {
                let blocks = blocks
                    .clone()
                    .ok_or_else(|| Error::Spec("partition matroid needs \"blocks\"".into()))?;
                let caps = caps
                    .clone()
                    .ok_or_else(|| Error::Spec("partition matroid needs \"caps\"".into()))?;
                SetFunction::partition_matroid_rank(*n, blocks, caps)
            }
        },
        FunctionSpec::Scaled { factor, of } => SetFunction::scaled(*factor, make_function(of)?),
        FunctionSpec::Sum { terms } => {
            SetFunction::sum(terms.iter().map(make_function).collect::<Result<_>>()?)
        }
        FunctionSpec::Complement { of } => Ok(SetFunction::complement(make_function(of)?)),
    }
}

/// Anything that can be evaluated on subsets; unlike `SetFunction`, the
/// value at `∅` need not be zero.
pub trait SetOracle {
    fn n(&self) -> usize;
    fn value(&self, s: Subset) -> f64;
}

impl SetOracle for SetFunction {
    fn n(&self) -> usize {
        self.ground.len()
    }

    fn value(&self, s: Subset) -> f64 {
        SetFunction::value(self, s)
    }
}

impl<T: SetOracle + ?Sized> SetOracle for &T {
    fn n(&self) -> usize {
        (**self).n()
    }

    fn value(&self, s: Subset) -> f64 {
        (**self).value(s)
    }
}

/// A closure over subsets of an `n`-element ground set.
pub struct FnOracle<F> {
    pub n: usize,
    pub g: F,
}

impl<F: Fn(Subset) -> f64> FnOracle<F> {
    pub fn new(n: usize, g: F) -> Self {
        FnOracle { n, g }
    }
}

impl<F: Fn(Subset) -> f64> SetOracle for FnOracle<F> {
    fn n(&self) -> usize {
        self.n
    }

    fn value(&self, s: Subset) -> f64 {
        (self.g)(s)
    }
}

/// `f + c`, constant everywhere including `∅`.
#[derive(Debug, Clone, Copy)]
pub struct Shifted<'a> {
    pub f: &'a SetFunction,
    pub c: f64,
}

impl SetOracle for Shifted<'_> {
    fn n(&self) -> usize {
        self.f.n()
    }

    fn value(&self, s: Subset) -> f64 {
        self.f.value(s) + self.c
    }
}

/// `Y ↦ f(Y) − x(Y)`.
#[derive(Debug, Clone, Copy)]
pub struct MinusModular<'a, O: ?Sized> {
    pub f: &'a O,
    pub x: &'a [f64],
}

impl<O: SetOracle + ?Sized> SetOracle for MinusModular<'_, O> {
    fn n(&self) -> usize {
        self.f.n()
    }

    fn value(&self, s: Subset) -> f64 {
        self.f.value(s) - s.elements().map(|j| self.x[j]).sum::<f64>()
    }
}

/// `Y ↦ a(Y) − b(Y)`.
#[derive(Debug, Clone, Copy)]
pub struct Difference<'a, A: ?Sized, B: ?Sized> {
    pub a: &'a A,
    pub b: &'a B,
}

impl<A: SetOracle + ?Sized, B: SetOracle + ?Sized> SetOracle for Difference<'_, A, B> {
    fn n(&self) -> usize {
        self.a.n()
    }

    fn value(&self, s: Subset) -> f64 {
        self.a.value(s) - self.b.value(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn three_element() -> SetFunction {
        SetFunction::table(3, vec![0.0, 1.0, 2.0, 2.5, 2.0, 2.8, 3.0, 3.0]).unwrap()
    }

    fn s(elems: &[usize]) -> Subset {
        Subset::from_elements(elems.iter().map(|e| e - 1))
    }

    #[test]
    fn three_element_values_and_marginals() {
        let f = three_element();
        assert_eq!(f.evaluate(s(&[1])).unwrap(), 1.0);
        assert_eq!(f.evaluate(s(&[2, 3])).unwrap(), 3.0);
        assert_eq!(f.evaluate(Subset::EMPTY).unwrap(), 0.0);
        assert_eq!(f.marginal(1, s(&[1])), 1.5);
        assert_eq!(f.marginal(0, s(&[2, 3])), 0.0);
        assert_eq!(f.marginal(0, s(&[1])), 0.0);
        assert_eq!(f.marginal_set(s(&[2, 3]), s(&[1])), 2.0);
        assert_eq!(f.marginal_set(s(&[1]), Subset::EMPTY), 1.0);
        assert_eq!(f.marginal_set(s(&[1]), s(&[1, 2])), 0.0);
        assert!(f.evaluate(Subset(8)).is_err());
        assert!(f.marginal_checked(3, Subset::EMPTY).is_err());
    }

    #[test]
    fn cached_marginals() {
        let f = three_element();
        assert_eq!(f.singles(), &[1.0, 2.0, 2.0]);
        assert!((f.top_marginal(1) - 0.2).abs() < 1e-12);
        assert_eq!(f.top_marginal(2), 0.5);
        assert_eq!(f.full_value(), 3.0);
    }

    #[test]
    fn non_normalized_table_is_shifted() {
        let f = SetFunction::table(1, vec![5.0, 7.0]).unwrap();
        assert_eq!(f.value(Subset::EMPTY), 0.0);
        assert_eq!(f.value(Subset(1)), 2.0);
    }

    #[test]
    fn spec_parsing() {
        let f = make_function(
            &FunctionSpec::from_json(r#"{"type":"table","n":3,"values":[0,1,2,2.5,2,2.8,3,3]}"#).unwrap(),
        )
        .unwrap();
        assert_eq!(f, three_element());

        let g = make_function(
            &FunctionSpec::from_json(r#"{"type":"concave_modular","weights":[1,1],"curve":"sqrt"}"#).unwrap(),
        )
        .unwrap();
        assert_eq!(g.value(Subset(3)), 2f64.sqrt());

        let m = make_function(
            &FunctionSpec::from_json(r#"{"type":"matroid_rank","variant":"uniform","n":4,"r":2}"#).unwrap(),
        )
        .unwrap();
        for x in 0..16u32 {
            assert_eq!(m.value(Subset(x)), (x.count_ones() as f64).min(2.0));
        }
    }

    #[test]
    fn spec_errors() {
        let bad_len = FunctionSpec::from_json(r#"{"type":"table","n":2,"values":[0,1,2]}"#).unwrap();
        assert!(matches!(make_function(&bad_len), Err(Error::Spec(_))));
        let neg = FunctionSpec::from_json(r#"{"type":"concave_modular","weights":[1,-1],"curve":"sqrt"}"#).unwrap();
        assert!(make_function(&neg).is_err());
        assert!(FunctionSpec::from_json(r#"{"type":"nope"}"#).is_err());
        let cap = FunctionSpec::from_json(r#"{"type":"concave_modular","weights":[1],"curve":"cap"}"#).unwrap();
        assert!(make_function(&cap).is_err());
    }

    #[test]
    fn zoo_kinds_behave() {
        let cut = SetFunction::graph_cut(vec![vec![0.0, 1.0], vec![1.0, 0.0]]).unwrap();
        assert_eq!(cut.table_values().unwrap(), vec![0.0, 1.0, 1.0, 0.0]);

        let cov = SetFunction::coverage(vec![vec![0, 1], vec![1, 2]], vec![1.0, 2.0, 4.0]).unwrap();
        assert_eq!(cov.table_values().unwrap(), vec![0.0, 3.0, 6.0, 7.0]);

        let part = SetFunction::partition_matroid_rank(3, vec![vec![0], vec![1, 2]], vec![1, 1]).unwrap();
        assert_eq!(part.table_values().unwrap(), vec![0.0, 1.0, 1.0, 2.0, 1.0, 2.0, 1.0, 2.0]);

        let comp = SetFunction::complement(three_element());
        // f(V∖X) − f(V)
        assert_eq!(comp.value(Subset(0b001)), 3.0 - 3.0);
        assert_eq!(comp.value(Subset(0b111)), -3.0);
    }
}
