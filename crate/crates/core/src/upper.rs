//! The upper polyhedron `P^f`, superdifferentials `∂^f(X)` with their inner
//! and outer bounds, supergradients and the generalized upper polyhedron.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::certificate::{Certificate, Witness};
use crate::error::{ensure_at_most, Error, Result};
use crate::function::SetFunction;
use crate::modular::{AffinePoint, ModularVector};
use crate::oracle::vertices::{enumerate_vertices, Inequality, MAX_VERTEX_DIM};
use crate::set::{Subset, MAX_ENUM};

/// Ceiling on the number of sets an outer-bound check may visit.
pub const MAX_OUTER_SETS: u64 = 1 << 24;
pub const MAX_DELTA22_N: usize = 16;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SupergradientVariant {
    /// `ĝ`: `f(j|X∖j)` on `X`, `f(j)` off `X`.
    Grow,
    /// `ǧ`: `f(j|V∖j)` on `X`, `f(j|X)` off `X`.
    Shrink,
    /// `ḡ`: `f(j|V∖j)` on `X`, `f(j)` off `X`.
    Bar,
    /// `g̃`: `f(j|X∖j)` on `X`, `f(j|X)` off `X`. Not a supergradient in general.
    Tilde,
}

impl SupergradientVariant {
    pub const VALID: [SupergradientVariant; 3] = [Self::Grow, Self::Shrink, Self::Bar];
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum InnerBoundKind {
    Hat,
    Check,
    BarBox,
    Conv,
}

/// `x ∈ P^f`: only the singleton inequalities `x_j ≥ f(j)` matter.
pub fn member_upper_poly(f: &SetFunction, x: &ModularVector, eps: f64) -> Certificate {
    match (0..f.n()).find(|&j| x[j] < f.single(j) - eps) {
        Some(j) => Certificate::fail_set(Subset::singleton(j)),
        None => Certificate::pass(),
    }
}

/// `max_X f(X) > 0` iff some `f(j) > 0`.
pub fn has_positive_max(f: &SetFunction, eps: f64) -> bool {
    f.singles().iter().any(|&v| v > eps)
}

pub fn supergradient(f: &SetFunction, x: Subset, v: SupergradientVariant) -> ModularVector {
    use SupergradientVariant::*;
    ModularVector::from_fn(f.n(), |j| match (x.contains(j), v) {
        (true, Grow | Tilde) => f.marginal(j, x.without(j)),
        (true, Shrink | Bar) => f.top_marginal(j),
        (false, Grow | Bar) => f.single(j),
        (false, Shrink | Tilde) => f.marginal(j, x),
    })
}

/// `m^X(Y) = f(X) + g_X(Y) − g_X(X)` as `(g_X, f(X) − g_X(X))`.
pub fn modular_upper_bound(f: &SetFunction, x: Subset, v: SupergradientVariant) -> Result<AffinePoint> {
    if v == SupergradientVariant::Tilde {
        return Err(Error::Precondition(
            "the tilde vector only bounds f on the chain through X".into(),
        ));
    }
    f.ground().check(x)?;
    let g = supergradient(f, x, v);
    let c = f.value(x) - g.value(x);
    Ok(AffinePoint { x: g, c })
}

/// The two classical upper bounds on `f(Y)` built from marginals at `X`.
///
/// 1: `f(X) − Σ_{X∖Y} f(j|X∖j) + Σ_{Y∖X} f(j|X∩Y)`
/// 2: `f(X) − Σ_{X∖Y} f(j|X∪Y∖j) + Σ_{Y∖X} f(j|X)`
pub fn nemhauser_bound(f: &SetFunction, x: Subset, y: Subset, which: u8) -> Result<f64> {
    f.ground().check(x)?;
    f.ground().check(y)?;
    let out = x.minus(y);
    let inn = y.minus(x);
    match which {
        1 => {
            let base = x.intersection(y);
            Ok(f.value(x) - out.elements().map(|j| f.marginal(j, x.without(j))).sum::<f64>()
                + inn.elements().map(|j| f.marginal(j, base)).sum::<f64>())
        }
        2 => {
            let u = x.union(y);
            Ok(f.value(x) - out.elements().map(|j| f.marginal(j, u.without(j))).sum::<f64>()
                + inn.elements().map(|j| f.marginal(j, x)).sum::<f64>())
        }
        _ => Err(Error::Domain(format!("bound index must be 1 or 2, got {which}"))),
    }
}

/// `x ∈ ∂^f(X)` by enumerating every `Y`; the lowest violating mask is the witness.
pub fn member_superdiff(f: &SetFunction, x_set: Subset, x: &ModularVector, eps: f64) -> Result<Certificate> {
    let n = f.n();
    if n > MAX_ENUM {
        return Err(Error::refused_np_hard("superdifferential membership", n, MAX_ENUM));
    }
    f.ground().check(x_set)?;
    let at_x = f.value(x_set) - x.value(x_set);
    for m in 0..(1u32 << n) {
        let y = Subset(m);
        if f.value(y) - x.value(y) > at_x + eps {
            return Ok(Certificate::fail_set(y));
        }
    }
    Ok(Certificate::pass())
}

/// The singleton box shared by `∂^f_1(X)` and `∂^f_2(X)`.
fn tilde_box(f: &SetFunction, x_set: Subset, x: &ModularVector, eps: f64) -> Option<usize> {
    let g = supergradient(f, x_set, SupergradientVariant::Tilde);
    (0..f.n()).find(|&j| {
        if x_set.contains(j) {
            x[j] > g[j] + eps
        } else {
            x[j] < g[j] - eps
        }
    })
}

fn binomial(n: usize, k: usize) -> u64 {
    (0..k).fold(1u64, |acc, i| acc * (n - i) as u64 / (i + 1) as u64)
}

/// Number of sets `Y` with `|Y∖X| ≤ a`, `|X∖Y| ≤ b`.
fn neighborhood_size(n: usize, x_len: usize, a: usize, b: usize) -> u64 {
    let out: u64 = (0..=a.min(n - x_len)).map(|i| binomial(n - x_len, i)).sum();
    let inn: u64 = (0..=b.min(x_len)).map(|i| binomial(x_len, i)).sum();
    out.saturating_mul(inn)
}

/// All `Y` with `|Y∖X| ≤ a` and `|X∖Y| ≤ b`, ascending by mask.
pub(crate) fn neighborhood(n: usize, x: Subset, a: usize, b: usize) -> Result<Vec<Subset>> {
    let size = neighborhood_size(n, x.len(), a, b);
    if size > MAX_OUTER_SETS {
        return Err(Error::Refused {
            what: "neighborhood enumeration",
            n,
            limit: MAX_ENUM,
            np_hard_note: None,
        });
    }
    let outside = x.complement(n);
    let adds = outside.submasks_up_to(a);
    let rems = x.submasks_up_to(b);
    let mut out = Vec::with_capacity(size as usize);
    for add in &adds {
        for rem in &rems {
            out.push(x.minus(*rem).union(*add));
        }
    }
    out.sort_unstable_by_key(|s| s.0);
    Ok(out)
}

/// `x ∈ ∂^f_1(X) ∩ ∂^f_2(X) ∩ ∂^f_{3,Δ(k,l)}(X)`.
pub fn member_superdiff_outer(
    f: &SetFunction,
    x_set: Subset,
    x: &ModularVector,
    k: usize,
    l: usize,
    eps: f64,
) -> Result<Certificate> {
    if k == 0 || l == 0 {
        return Err(Error::Domain("k and l must be at least 1".into()));
    }
    f.ground().check(x_set)?;
    if let Some(j) = tilde_box(f, x_set, x, eps) {
        return Ok(Certificate::fail_set(Subset::singleton(j)));
    }
    let at_x = f.value(x_set) - x.value(x_set);
    for y in neighborhood(f.n(), x_set, k - 1, l - 1)? {
        if f.value(y) - x.value(y) > at_x + eps {
            return Ok(Certificate::fail_set(y));
        }
    }
    Ok(Certificate::pass())
}

/// Inner bounds: three boxes and the convex hull of the grow and shrink boxes.
pub fn member_superdiff_inner(
    f: &SetFunction,
    x_set: Subset,
    x: &ModularVector,
    kind: InnerBoundKind,
    eps: f64,
) -> Certificate {
    let n = f.n();
    let corner = |v| supergradient(f, x_set, v);
    let in_box = |g: &ModularVector| -> Option<usize> {
        (0..n).find(|&j| {
            if x_set.contains(j) {
                x[j] > g[j] + eps
            } else {
                x[j] < g[j] - eps
            }
        })
    };
    let boxed = |g: ModularVector| match in_box(&g) {
        Some(j) => Certificate::fail(Witness::Coordinate { j }),
        None => Certificate::pass(),
    };
    match kind {
        InnerBoundKind::Hat => boxed(corner(SupergradientVariant::Grow)),
        InnerBoundKind::Check => boxed(corner(SupergradientVariant::Shrink)),
        InnerBoundKind::BarBox => boxed(corner(SupergradientVariant::Bar)),
        InnerBoundKind::Conv => {
            let hat = corner(SupergradientVariant::Grow);
            let chk = corner(SupergradientVariant::Shrink);
            let (mut lo, mut hi) = (0.0f64, 1.0f64);
            for j in 0..n {
                // x_j ≤ λ·hat_j + (1−λ)·chk_j on X; reversed off X.
                let (d, r) = if x_set.contains(j) {
                    (hat[j] - chk[j], x[j] - chk[j] - eps)
                } else {
                    (chk[j] - hat[j], chk[j] - x[j] - eps)
                };
                // Constraint: d·λ ≥ r.
                if d.abs() <= 1e-15 {
                    if r > 0.0 {
                        return Certificate::fail(Witness::Coordinate { j });
                    }
                } else if d > 0.0 {
                    lo = lo.max(r / d);
                } else {
                    hi = hi.min(r / d);
                }
            }
            if lo <= hi + 1e-12 {
                Certificate::pass().with_witness(Witness::Lambda {
                    lambda: lo.clamp(0.0, 1.0),
                })
            } else {
                Certificate::fail(Witness::Lambda { lambda: lo.min(1.0) })
            }
        }
    }
}

/// `(x, c) ∈ P^f_gen` iff `max_Y f(Y) − x(Y) ≤ c`.
pub fn member_gen_upper(f: &SetFunction, p: &AffinePoint, eps: f64) -> Result<Certificate> {
    let n = f.n();
    if n > MAX_ENUM {
        return Err(Error::refused_np_hard("generalized upper membership", n, MAX_ENUM));
    }
    for m in 0..(1u32 << n) {
        let y = Subset(m);
        if f.value(y) - p.x.value(y) > p.c + eps {
            return Ok(Certificate::fail_set(y));
        }
    }
    Ok(Certificate::pass())
}

fn indicator(n: usize, s: Subset, sign: f64) -> Vec<f64> {
    (0..n).map(|j| if s.contains(j) { sign } else { 0.0 }).collect()
}

/// Vertices of `∂^f(X)` for `n ≤ 4`.
pub fn superdiff_vertices_small(f: &SetFunction, x_set: Subset, eps: f64) -> Result<Vec<ModularVector>> {
    let n = f.n();
    ensure_at_most("superdifferential vertex enumeration", n, MAX_VERTEX_DIM)?;
    f.ground().check(x_set)?;
    let g = supergradient(f, x_set, SupergradientVariant::Tilde);
    let mut ineqs: Vec<Inequality> = (0..n)
        .map(|j| {
            let mut a = vec![0.0; n];
            a[j] = 1.0;
            if x_set.contains(j) {
                Inequality::le(a, g[j])
            } else {
                Inequality::ge(a, g[j])
            }
        })
        .collect();
    // x(Y∖X) − x(X∖Y) ≥ f(Y) − f(X) for every Y.
    for y in f.ground().subsets()? {
        if y == x_set {
            continue;
        }
        let a: Vec<f64> = (0..n)
            .map(|j| match (y.contains(j), x_set.contains(j)) {
                (true, false) => 1.0,
                (false, true) => -1.0,
                _ => 0.0,
            })
            .collect();
        ineqs.push(Inequality::ge(a, f.value(y) - f.value(x_set)));
    }
    Ok(enumerate_vertices(n, &ineqs, eps)?
        .into_iter()
        .map(ModularVector)
        .collect())
}

/// Vertices of `P^f_gen = {(x, c) : x(Y) + c ≥ f(Y)}` for `n ≤ 3`.
pub fn gen_upper_vertices_small(f: &SetFunction, eps: f64) -> Result<Vec<AffinePoint>> {
    let n = f.n();
    let mut ineqs = Vec::new();
    for y in f.ground().subsets()? {
        let mut a = indicator(n, y, 1.0);
        a.push(1.0);
        ineqs.push(Inequality::ge(a, f.value(y)));
    }
    let verts = enumerate_vertices(n + 1, &ineqs, eps)?;
    Ok(verts
        .into_iter()
        .map(|mut v| {
            let c = v.pop().expect("n + 1 coordinates");
            AffinePoint::new(v, c)
        })
        .collect())
}

/// `x(S) ≤ f(V) − f(V∖S)` for all `S`: the superdifferential at `V`.
pub fn member_superdiff_full(f: &SetFunction, x: &ModularVector, eps: f64) -> Result<Certificate> {
    let n = f.n();
    ensure_at_most("superdifferential-at-V scan", n, MAX_ENUM)?;
    for s in f.ground().subsets()? {
        let sharp = f.full_value() - f.value(s.complement(n));
        if x.value(s) > sharp + eps {
            return Ok(Certificate::fail_set(s));
        }
    }
    Ok(Certificate::pass())
}

/// Draw a point of the `Δ(2,2)` outer bound at `X`.
///
/// Coordinates in `X` go below the tilde corner by a random slack (often
/// zero); coordinates outside are set to the smallest value that satisfies
/// the corner and every single swap, plus a random slack (often zero).
pub fn sample_delta22<R: Rng>(f: &SetFunction, x_set: Subset, scale: f64, rng: &mut R) -> ModularVector {
    let n = f.n();
    let g = supergradient(f, x_set, SupergradientVariant::Tilde);
    let fx = f.value(x_set);
    let mut x = g.clone();
    for i in x_set.elements() {
        if !rng.gen_bool(1.0 / 3.0) {
            x[i] = g[i] - rng.gen_range(0.0..scale);
        }
    }
    for j in x_set.complement(n).elements() {
        let mut need = g[j];
        for i in x_set.elements() {
            let swap = x_set.without(i).with(j);
            need = need.max(x[i] + f.value(swap) - fx);
        }
        x[j] = need;
        if rng.gen_bool(0.5) {
            x[j] += rng.gen_range(0.0..scale);
        }
    }
    x
}

/// Search for a point of `Δ(2,2)` outside `∂^f(X)`; `verdict` is true when
/// none of the `trials` samples escapes.
pub fn mnatural_superdiff_equals_delta22(
    f: &SetFunction,
    x_set: Subset,
    trials: usize,
    seed: u64,
    eps: f64,
) -> Result<Certificate> {
    ensure_at_most("Δ(2,2) sampling", f.n(), MAX_DELTA22_N)?;
    f.ground().check(x_set)?;
    let scale = 1.0
        + (0..f.n())
            .map(|j| f.single(j).abs().max(f.top_marginal(j).abs()))
            .fold(0.0, f64::max);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..trials {
        let x = sample_delta22(f, x_set, scale, &mut rng);
        debug_assert!(member_superdiff_outer(f, x_set, &x, 2, 2, 1e-7)?.verdict);
        let c = member_superdiff(f, x_set, &x, eps)?;
        if !c.verdict {
            return Ok(Certificate::fail(Witness::Point {
                point: x.0,
                set: c.witness_set(),
            })
            .with_note("sampled point of the Δ(2,2) bound lies outside the superdifferential"));
        }
    }
    Ok(Certificate::pass().with_note(format!("no witness in {trials} samples")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testutil::{assert_close, s, three_element};
    use crate::zoo::two_element;
    use SupergradientVariant::*;

    #[test]
    fn three_element_supergradients() {
        let f = three_element();
        let x = s(&[1]);
        assert_eq!(supergradient(&f, x, Grow).0, vec![1.0, 2.0, 2.0]);
        assert_close(&supergradient(&f, x, Shrink).0, &[0.0, 1.5, 1.8]);
        assert_eq!(supergradient(&f, x, Bar).0, vec![0.0, 2.0, 2.0]);
        let t = supergradient(&f, x, Tilde);
        assert_close(&t.0, &[1.0, 1.5, 1.8]);
        for v in SupergradientVariant::VALID {
            assert!(member_superdiff(&f, x, &supergradient(&f, x, v), 1e-8).unwrap().verdict);
        }
        let c = member_superdiff(&f, x, &t, 1e-8).unwrap();
        assert!(!c.verdict);
        assert_eq!(c.witness_set(), Some(s(&[2])));
    }

    #[test]
    fn upper_polyhedron() {
        let f = three_element();
        assert!(member_upper_poly(&f, &vec![1.0, 2.0, 2.0].into(), 1e-8).verdict);
        let c = member_upper_poly(&f, &vec![0.5, 2.0, 2.0].into(), 1e-8);
        assert_eq!(c.witness_set(), Some(s(&[1])));
        assert!(has_positive_max(&f, 1e-8));
        assert!(!has_positive_max(&SetFunction::modular(vec![0.0; 2]).unwrap(), 1e-8));
        let cut = SetFunction::graph_cut(vec![vec![0.0, 1.0], vec![1.0, 0.0]]).unwrap();
        assert!(has_positive_max(&cut, 1e-8));
    }

    #[test]
    fn modular_upper_bounds() {
        let f = three_element();
        let m = modular_upper_bound(&f, s(&[1]), Grow).unwrap();
        assert_eq!(m.value(s(&[2, 3])), 4.0);
        for v in SupergradientVariant::VALID {
            let e = modular_upper_bound(&f, Subset::EMPTY, v).unwrap();
            assert_eq!(e.x.0, vec![1.0, 2.0, 2.0]);
        }
        assert!(modular_upper_bound(&f, s(&[1]), Tilde).is_err());
    }

    #[test]
    fn nemhauser() {
        let f = three_element();
        let b1 = nemhauser_bound(&f, s(&[1]), s(&[2, 3]), 1).unwrap();
        let b2 = nemhauser_bound(&f, s(&[1]), s(&[2, 3]), 2).unwrap();
        assert!((b1 - 4.0).abs() < 1e-12);
        assert!((b2 - 4.3).abs() < 1e-12);
        assert_eq!(nemhauser_bound(&f, s(&[1, 2]), s(&[1, 2]), 1).unwrap(), 2.5);
        assert!(nemhauser_bound(&f, s(&[1]), s(&[2]), 3).is_err());
    }

    #[test]
    fn outer_bounds() {
        let f = three_element();
        let t = supergradient(&f, s(&[1]), Tilde);
        assert!(member_superdiff_outer(&f, s(&[1]), &t, 1, 1, 1e-8).unwrap().verdict);
        let c = member_superdiff_outer(&f, s(&[1]), &t, 2, 2, 1e-8).unwrap();
        assert_eq!(c.witness_set(), Some(s(&[2])));
    }

    #[test]
    fn inner_bounds() {
        let f = three_element();
        let zero = ModularVector::zeros(3);
        let x = s(&[2, 3]);
        assert!(member_superdiff_inner(&f, x, &zero, InnerBoundKind::Check, 1e-8).verdict);
        assert!(!member_superdiff_inner(&f, x, &zero, InnerBoundKind::Hat, 1e-8).verdict);
        assert!(member_superdiff_inner(&f, x, &zero, InnerBoundKind::Conv, 1e-8).verdict);
        let gbar = supergradient(&f, s(&[1]), Bar);
        for kind in [InnerBoundKind::Hat, InnerBoundKind::Check, InnerBoundKind::BarBox, InnerBoundKind::Conv] {
            assert!(member_superdiff_inner(&f, s(&[1]), &gbar, kind, 1e-8).verdict);
        }
        // Midpoint of the two corners is in the hull but in neither box.
        let mid = ModularVector(vec![0.5, 1.75, 1.9]);
        assert!(!member_superdiff_inner(&f, s(&[1]), &mid, InnerBoundKind::Hat, 1e-8).verdict);
        assert!(!member_superdiff_inner(&f, s(&[1]), &mid, InnerBoundKind::Check, 1e-8).verdict);
        let c = member_superdiff_inner(&f, s(&[1]), &mid, InnerBoundKind::Conv, 1e-8);
        assert!(c.verdict);
    }

    #[test]
    fn generalized_upper() {
        let f = two_element();
        assert!(member_gen_upper(&f, &AffinePoint::new(vec![0.5, 1.5], 0.5), 1e-8).unwrap().verdict);
        assert!(member_gen_upper(&f, &AffinePoint::new(vec![1.0, 2.0], 0.0), 1e-8).unwrap().verdict);
        assert!(!member_gen_upper(&f, &AffinePoint::new(vec![0.5, 1.5], 0.4), 1e-8).unwrap().verdict);
        let v = gen_upper_vertices_small(&f, 1e-9).unwrap();
        let got: Vec<(Vec<f64>, f64)> = v.into_iter().map(|p| (p.x.0, p.c)).collect();
        assert_eq!(got, vec![(vec![0.5, 1.5], 0.5), (vec![1.0, 2.0], 0.0)]);
    }

    #[test]
    fn small_vertex_enumeration() {
        let f = two_element();
        let v = superdiff_vertices_small(&f, s(&[1]), 1e-9).unwrap();
        assert_eq!(v, vec![ModularVector(vec![0.5, 1.5]), ModularVector(vec![1.0, 2.0])]);
        let v0 = superdiff_vertices_small(&three_element(), Subset::EMPTY, 1e-9).unwrap();
        assert_eq!(v0, vec![ModularVector(vec![1.0, 2.0, 2.0])]);
        let f = three_element();
        let v1 = superdiff_vertices_small(&f, s(&[1]), 1e-9).unwrap();
        assert!(v1.contains(&ModularVector(vec![1.0, 2.0, 2.0])));
        for p in &v1 {
            assert!(member_superdiff(&f, s(&[1]), p, 1e-8).unwrap().verdict);
        }
    }

    #[test]
    fn delta22_on_uniform_matroid() {
        let f = SetFunction::uniform_matroid_rank(4, 2).unwrap();
        let c = mnatural_superdiff_equals_delta22(&f, Subset(0b11), 300, 1, 1e-8).unwrap();
        assert!(c.verdict);
    }

    #[test]
    fn delta22_finds_witness_off_mnatural() {
        let f = SetFunction::concave_over_modular(vec![1.0, 1.0, 2.0], crate::function::Curve::Cap(2.0)).unwrap();
        let c = mnatural_superdiff_equals_delta22(&f, s(&[3]), 500, 1, 1e-8).unwrap();
        assert!(!c.verdict);
    }
}
