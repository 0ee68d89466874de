//! Submodular maximization through superdifferential optimality conditions.

use std::fmt;
use std::sync::Arc;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::certificate::{Certificate, Guarantee};
use crate::checks::{check_monotone, check_submodular, check_symmetric, MAX_CHECK};
use crate::error::{Error, Result};
use crate::function::SetFunction;
use crate::lower::subgradient;
use crate::modular::ModularVector;
use crate::set::{Subset, MAX_ENUM};
use crate::upper::{member_superdiff_inner, neighborhood, InnerBoundKind};
use crate::zoo::random_compatible_permutation;

/// A downward-closed family of feasible sets.
#[derive(Clone)]
pub enum Constraint {
    Unconstrained,
    /// `|X| ≤ m`
    Cardinality(usize),
    PartitionMatroid { blocks: Vec<Subset>, caps: Vec<usize> },
    /// Independence predicate of a matroid.
    MatroidOracle(Arc<dyn Fn(Subset) -> bool + Send + Sync>),
    Intersection(Vec<Constraint>),
}

impl fmt::Debug for Constraint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Constraint::Unconstrained => write!(f, "Unconstrained"),
            Constraint::Cardinality(m) => write!(f, "Cardinality({m})"),
            Constraint::PartitionMatroid { blocks, caps } => f
                .debug_struct("PartitionMatroid")
                .field("blocks", blocks)
                .field("caps", caps)
                .finish(),
            Constraint::MatroidOracle(_) => write!(f, "MatroidOracle(..)"),
            Constraint::Intersection(cs) => f.debug_tuple("Intersection").field(cs).finish(),
        }
    }
}

impl Constraint {
    pub fn partition(n: usize, blocks: &[Vec<usize>], caps: &[usize]) -> Result<Self> {
        let blocks = crate::function::partition_blocks(n, blocks, caps).map_err(|e| match e {
            Error::Spec(m) => Error::Domain(m),
            other => other,
        })?;
        Ok(Constraint::PartitionMatroid {
            blocks,
            caps: caps.to_vec(),
        })
    }

    pub fn is_feasible(&self, s: Subset) -> bool {
        match self {
            Constraint::Unconstrained => true,
            Constraint::Cardinality(m) => s.len() <= *m,
            Constraint::PartitionMatroid { blocks, caps } => {
                let covered = blocks.iter().fold(Subset::EMPTY, |a, b| a.union(*b));
                s.minus(covered).is_empty()
                    && blocks
                        .iter()
                        .zip(caps)
                        .all(|(b, &c)| s.intersection(*b).len() <= c)
            }
            Constraint::MatroidOracle(p) => p(s),
            Constraint::Intersection(cs) => cs.iter().all(|c| c.is_feasible(s)),
        }
    }

    /// Number of matroid constraints intersected.
    pub fn matroid_count(&self) -> usize {
        match self {
            Constraint::Unconstrained => 0,
            Constraint::Cardinality(_)
            | Constraint::PartitionMatroid { .. }
            | Constraint::MatroidOracle(_) => 1,
            Constraint::Intersection(cs) => cs.iter().map(Constraint::matroid_count).sum(),
        }
    }

    /// `Some(m)` when the family is exactly `{X : |X| ≤ m}`.
    pub fn cardinality(&self) -> Option<usize> {
        match self {
            Constraint::Cardinality(m) => Some(*m),
            Constraint::Intersection(cs) => {
                let mut found = None;
                for c in cs {
                    match (c, found) {
                        (Constraint::Unconstrained, _) => {}
                        (Constraint::Cardinality(m), None) => found = Some(*m),
                        _ => return None,
                    }
                }
                found
            }
            _ => None,
        }
    }

    fn ensure_feasible(&self, s: Subset) -> Result<()> {
        if self.is_feasible(s) {
            Ok(())
        } else {
            Err(Error::Domain(format!("{s} is not feasible under {self:?}")))
        }
    }
}

/// Structural facts about `f` used as guarantee preconditions.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Properties {
    pub submodular: bool,
    pub monotone: bool,
    pub symmetric: bool,
    pub nonnegative: bool,
}

impl Properties {
    /// Exhaustive checks when `n ≤ 20`; otherwise nothing is verified.
    pub fn of(f: &SetFunction, eps: f64) -> Self {
        if f.n() > MAX_CHECK {
            return Properties {
                submodular: false,
                monotone: false,
                symmetric: false,
                nonnegative: false,
            };
        }
        let ok = |c: Result<Certificate>| c.map(|c| c.verdict).unwrap_or(false);
        let nonnegative = f
            .ground()
            .subsets()
            .map(|mut it| it.all(|s| f.value(s) >= -eps))
            .unwrap_or(false);
        Properties {
            submodular: ok(check_submodular(f, eps)),
            monotone: ok(check_monotone(f, eps)),
            symmetric: ok(check_symmetric(f, eps)),
            nonnegative,
        }
    }

    fn holds(&self, name: &str) -> bool {
        match name {
            "submodular" => self.submodular,
            "monotone" => self.monotone,
            "symmetric" => self.symmetric,
            "non-negative" => self.nonnegative,
            _ => false,
        }
    }
}

fn improvement_threshold(fx: f64, eps: f64) -> f64 {
    eps * fx.abs().max(1.0)
}

/// Candidate moves from `x`: single additions and removals, plus sets with
/// at most `k − 1` additions and `l − 1` removals that are incomparable to `x`.
fn moves(n: usize, x: Subset, k: usize, l: usize) -> Result<Vec<Subset>> {
    let mut out: Vec<Subset> = (0..n)
        .map(|j| if x.contains(j) { x.without(j) } else { x.with(j) })
        .collect();
    if k >= 2 && l >= 2 {
        for y in neighborhood(n, x, k - 1, l - 1)? {
            if !y.is_subset_of(x) && !x.is_subset_of(y) {
                out.push(y);
            }
        }
    }
    out.sort_unstable_by_key(|s| s.0);
    out.dedup();
    Ok(out)
}

/// Best feasible improving move, lowest mask among equal gains.
fn best_move(f: &SetFunction, c: &Constraint, x: Subset, k: usize, l: usize, eps: f64) -> Result<Option<(Subset, f64)>> {
    let fx = f.value(x);
    let thresh = improvement_threshold(fx, eps);
    let mut best: Option<(Subset, f64)> = None;
    for y in moves(f.n(), x, k, l)? {
        if !c.is_feasible(y) {
            continue;
        }
        let gain = f.value(y) - fx;
        if gain > thresh && best.is_none_or(|(_, g)| gain > g + 1e-12) {
            best = Some((y, gain));
        }
    }
    Ok(best)
}

fn check_kl(k: usize, l: usize) -> Result<()> {
    if k == 0 || l == 0 {
        return Err(Error::Domain("k and l must be at least 1".into()));
    }
    Ok(())
}

/// Best-improvement local search in the `Δ(k,l)` neighborhood.
pub fn local_max(
    f: &SetFunction,
    c: &Constraint,
    k: usize,
    l: usize,
    init: Subset,
    eps: f64,
) -> Result<(Subset, Certificate)> {
    check_kl(k, l)?;
    f.ground().check(init)?;
    c.ensure_feasible(init)?;
    let mut x = init;
    while let Some((y, _)) = best_move(f, c, x, k, l, eps)? {
        x = y;
    }
    let cert = constrained_certificate(f, c, x, k, l, eps)?;
    Ok((x, cert))
}

/// Local search from `∅` and the better of the result and its complement.
pub fn max_unconstrained_third(f: &SetFunction, eps: f64) -> Result<(Subset, f64, Certificate)> {
    let n = f.n();
    let (a, cert) = local_max(f, &Constraint::Unconstrained, 1, 1, Subset::EMPTY, eps)?;
    let comp = a.complement(n);
    let (s, v) = if f.value(comp) > f.value(a) {
        (comp, f.value(comp))
    } else {
        (a, f.value(a))
    };
    let mut cert = cert;
    if n <= MAX_CHECK {
        let (_, opt) = max_brute(f, &Constraint::Unconstrained)?;
        cert = cert.with_note(format!(
            "OPT = {opt}; value / OPT = {}",
            if opt > 0.0 { v / opt } else { 1.0 }
        ));
    }
    Ok((s, v, cert))
}

/// `0` in the convex-hull inner bound of `∂^f(A)` certifies a global maximum.
pub fn certify_global_max(f: &SetFunction, a: Subset, eps: f64) -> Certificate {
    let cert = member_superdiff_inner(f, a, &ModularVector::zeros(f.n()), InnerBoundKind::Conv, eps);
    if cert.verdict {
        cert.with_guarantee(Guarantee::exact("global-max"))
    } else {
        cert
    }
}

struct Row {
    tag: String,
    factor: f64,
    needs: Vec<&'static str>,
}

/// Guarantee rows whose constraint type and neighborhood size match.
fn guarantee_rows(c: &Constraint, k: usize, l: usize) -> Vec<Row> {
    let mut rows = Vec::new();
    let km = c.matroid_count();
    if km == 0 {
        rows.push(Row {
            tag: "1/3 via complement trick".into(),
            factor: 1.0 / 3.0,
            needs: vec!["submodular", "non-negative"],
        });
        return rows;
    }
    if let Some(m) = c.cardinality() {
        let r = k.min(l) - 1;
        if r >= 1 && m >= 1 {
            let r = r.min(m);
            let d = (2 * m - r) as f64;
            rows.push(Row {
                tag: "m/(2m-r)".into(),
                factor: m as f64 / d,
                needs: vec!["submodular", "monotone"],
            });
            rows.push(Row {
                tag: "r/(2m-r)".into(),
                factor: r as f64 / d,
                needs: vec!["submodular", "non-negative"],
            });
        }
    }
    if k >= 2 && l > km {
        rows.push(Row {
            tag: if km == 1 { "1/2".into() } else { "1/(k+1)".into() },
            factor: 1.0 / (km as f64 + 1.0),
            needs: vec!["submodular", "monotone"],
        });
        rows.push(Row {
            tag: "1/(k+2)".into(),
            factor: 1.0 / (km as f64 + 2.0),
            needs: vec!["submodular", "symmetric"],
        });
    }
    if km >= 2 {
        let p = (k - 1).min((l - 1) / km);
        if p >= 1 {
            rows.push(Row {
                tag: if km == 2 { "1/(2+1/p)".into() } else { "1/(k+1/p)".into() },
                factor: 1.0 / (km as f64 + 1.0 / p as f64),
                needs: vec!["submodular", "monotone"],
            });
        }
    }
    rows
}

/// `0 ∈ ∂^f_{C,Δ(k,l)}(A)`: no feasible neighbor improves `f`. The attached
/// guarantee is the strongest table entry whose preconditions were verified.
pub fn constrained_certificate(
    f: &SetFunction,
    c: &Constraint,
    a: Subset,
    k: usize,
    l: usize,
    eps: f64,
) -> Result<Certificate> {
    check_kl(k, l)?;
    f.ground().check(a)?;
    c.ensure_feasible(a)?;
    let mut cert = match best_move(f, c, a, k, l, eps)? {
        Some((y, _)) => Certificate::fail_set(y),
        None => Certificate::pass(),
    };
    let rows = guarantee_rows(c, k, l);
    if !rows.is_empty() && cert.verdict {
        let props = Properties::of(f, eps);
        let met = |r: &Row| r.needs.iter().all(|p| props.holds(p));
        let pick = rows
            .iter()
            .filter(|r| met(r))
            .max_by(|a, b| a.factor.total_cmp(&b.factor))
            .map(|r| (r, true))
            .or_else(|| rows.first().map(|r| (r, false)));
        if let Some((row, ok)) = pick {
            cert = cert.with_guarantee(Guarantee {
                tag: row.tag.clone(),
                factor: Some(row.factor),
                preconditions: row.needs.iter().map(|s| s.to_string()).collect(),
                preconditions_met: ok,
            });
        }
    }
    Ok(cert)
}

/// Maximize the modular function `h` over `c`: descending greedy over positive entries.
fn max_modular(h: &ModularVector, c: &Constraint) -> Subset {
    let mut order: Vec<usize> = (0..h.len()).filter(|&j| h[j] > 0.0).collect();
    order.sort_by(|&a, &b| h[b].total_cmp(&h[a]).then(a.cmp(&b)));
    let mut s = Subset::EMPTY;
    for j in order {
        if c.is_feasible(s.with(j)) {
            s = s.with(j);
        }
    }
    s
}

/// Semigradient ascent with tight modular lower bounds. Returns the final
/// set and `f` along the iterates.
pub fn mmax(f: &SetFunction, c: &Constraint, init: Subset, seed: u64, eps: f64) -> Result<(Subset, Vec<f64>)> {
    f.ground().check(init)?;
    c.ensure_feasible(init)?;
    let n = f.n();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut x = init;
    let mut trace = vec![f.value(x)];
    loop {
        let sigma = random_compatible_permutation(n, x, &mut rng);
        let h = subgradient(f, x, &sigma)?;
        let y = max_modular(&h, c);
        let fy = f.value(y);
        let fx = trace[trace.len() - 1];
        if fy > fx + improvement_threshold(fx, eps) {
            x = y;
            trace.push(fy);
        } else {
            return Ok((x, trace));
        }
    }
}

/// Exact maximum over feasible sets; lowest mask among ties.
pub fn max_brute(f: &SetFunction, c: &Constraint) -> Result<(Subset, f64)> {
    let n = f.n();
    crate::error::ensure_at_most("brute-force maximization", n, MAX_ENUM)?;
    let mut best = (Subset::EMPTY, f.value(Subset::EMPTY));
    for m in 1..(1u32 << n) {
        let s = Subset(m);
        if !c.is_feasible(s) {
            continue;
        }
        let v = f.value(s);
        if v > best.1 + 1e-12 * best.1.abs().max(1.0) {
            best = (s, v);
        }
    }
    Ok(best)
}
