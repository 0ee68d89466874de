//! Submodular minimization: exhaustive search, the Fujishige–Wolfe
//! minimum-norm point, local descent, majorize-minimize and certificates.

use serde::Serialize;

use crate::certificate::{Certificate, Guarantee};
use crate::error::{ensure_at_most, Error, Result};
use crate::function::{SetFunction, SetOracle};
use crate::lower::{greedy_vertex, member_subdiff, member_subdiff_local};
use crate::modular::ModularVector;
use crate::oracle::vertices::solve_square;
use crate::set::{Permutation, Subset, MAX_ENUM};
use crate::upper::{supergradient, SupergradientVariant};

/// Wolfe gap at which the min-norm iteration stops.
pub const MINNORM_GAP: f64 = 1e-10;
pub const MINNORM_MAX_CYCLES: usize = 10_000;
/// Below this size `Auto` enumerates instead of running min-norm.
pub const AUTO_BRUTE_LIMIT: usize = 16;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SfmMethod {
    Brute,
    MinNorm,
    /// `Brute` up to `AUTO_BRUTE_LIMIT` elements, `MinNorm` beyond.
    Auto,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SfmResult {
    pub minimizer: Subset,
    pub value: f64,
    pub method: SfmMethod,
    pub iterations: usize,
    /// The min-norm point of `B_f` (min-norm runs only).
    pub certificate: Option<ModularVector>,
}

/// Minimize a normalized submodular oracle.
pub fn sfm<O: SetOracle + ?Sized>(f: &O, method: SfmMethod) -> Result<SfmResult> {
    match method {
        SfmMethod::Brute => sfm_brute(f),
        SfmMethod::MinNorm => sfm_minnorm(f),
        SfmMethod::Auto if f.n() <= AUTO_BRUTE_LIMIT => sfm_brute(f),
        SfmMethod::Auto => sfm_minnorm(f),
    }
}

/// Lowest-mask minimizer by enumeration. Works for any oracle; the value at
/// `∅` is taken as given.
pub fn sfm_brute<O: SetOracle + ?Sized>(f: &O) -> Result<SfmResult> {
    let n = f.n();
    ensure_at_most("brute-force minimization", n, MAX_ENUM)?;
    let mut best = (Subset::EMPTY, f.value(Subset::EMPTY));
    for m in 1..(1u32 << n) {
        let v = f.value(Subset(m));
        if v < best.1 - 1e-12 * best.1.abs().max(1.0) {
            best = (Subset(m), v);
        }
    }
    Ok(SfmResult {
        minimizer: best.0,
        value: best.1,
        method: SfmMethod::Brute,
        iterations: 1usize << n,
        certificate: None,
    })
}

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Affine minimizer of `‖Σ α_i q_i‖` subject to `Σ α_i = 1`.
fn affine_min_norm(points: &[Vec<f64>]) -> Vec<f64> {
    let k = points.len();
    if k == 1 {
        return vec![1.0];
    }
    let mut reg = 0.0;
    loop {
        let mut a = vec![vec![0.0; k + 1]; k + 1];
        for i in 0..k {
            for j in 0..k {
                a[i][j] = dot(&points[i], &points[j]);
            }
            a[i][i] += reg;
            a[i][k] = 1.0;
            a[k][i] = 1.0;
        }
        let mut b = vec![0.0; k + 1];
        b[k] = 1.0;
        if let Some(sol) = solve_square(a, b) {
            return sol[..k].to_vec();
        }
        reg = if reg == 0.0 { 1e-12 } else { reg * 100.0 };
    }
}

/// Value of `f` on `S` under the normalization `f(∅) = 0`.
fn normalized<O: SetOracle + ?Sized>(f: &O, s: Subset, base: f64) -> f64 {
    f.value(s) - base
}

/// Best set read off a point `x` of `B_f`: strictly negative coordinates,
/// their closure under non-increasing zero coordinates, `{x ≤ 0}`, and every
/// prefix of the ascending order of `x`. Lowest value wins, then lowest mask.
fn extract_minimizer<O: SetOracle + ?Sized>(f: &O, x: &[f64], base: f64) -> (Subset, f64) {
    let n = x.len();
    let tol = 1e-10;
    let mut candidates = Vec::new();
    let neg = Subset::from_elements((0..n).filter(|&j| x[j] < -tol));
    candidates.push(neg);
    let mut closed = neg;
    let mut cur = normalized(f, closed, base);
    for j in (0..n).filter(|&j| x[j].abs() <= tol) {
        let v = normalized(f, closed.with(j), base);
        if v <= cur {
            closed = closed.with(j);
            cur = v;
        }
    }
    candidates.push(closed);
    candidates.push(Subset::from_elements((0..n).filter(|&j| x[j] <= tol)));
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| x[a].total_cmp(&x[b]).then(a.cmp(&b)));
    let mut s = Subset::EMPTY;
    candidates.push(s);
    for &j in &order {
        s = s.with(j);
        candidates.push(s);
    }
    let mut best = (Subset::EMPTY, 0.0);
    for c in candidates {
        let v = normalized(f, c, base);
        if v < best.1 - 1e-12 || ((v - best.1).abs() <= 1e-12 && c.0 < best.0 .0) {
            best = (c, v);
        }
    }
    best
}

/// Fujishige–Wolfe minimum-norm base, using the greedy vertex as linear oracle.
pub fn sfm_minnorm<O: SetOracle + ?Sized>(f: &O) -> Result<SfmResult> {
    let n = f.n();
    let base = f.value(Subset::EMPTY);
    let g = crate::function::FnOracle::new(n, |s| f.value(s) - base);
    let lin = |x: &[f64]| -> Vec<f64> {
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by(|&a, &b| x[a].total_cmp(&x[b]).then(a.cmp(&b)));
        greedy_vertex(&g, &Permutation::new(order).expect("sorted indices")).0
    };

    let q0 = greedy_vertex(&g, &Permutation::identity(n)).0;
    let mut pts = vec![q0.clone()];
    let mut lambda = vec![1.0];
    let mut x = q0;
    let mut incumbent = extract_minimizer(f, &x, base);

    for cycle in 1..=MINNORM_MAX_CYCLES {
        let q = lin(&x);
        let xx = dot(&x, &x);
        let gap = xx - dot(&x, &q);
        let dup = pts
            .iter()
            .any(|p| p.iter().zip(&q).all(|(a, b)| (a - b).abs() <= 1e-12));
        if gap <= MINNORM_GAP * xx.max(1.0) || dup {
            let cand = extract_minimizer(f, &x, base);
            if cand.1 < incumbent.1 || (cand.1 == incumbent.1 && cand.0 .0 < incumbent.0 .0) {
                incumbent = cand;
            }
            return Ok(SfmResult {
                minimizer: incumbent.0,
                value: f.value(incumbent.0),
                method: SfmMethod::MinNorm,
                iterations: cycle,
                certificate: Some(ModularVector(x)),
            });
        }
        pts.push(q);
        lambda.push(0.0);

        // Minor cycles: move toward the affine minimizer until it is interior.
        loop {
            let alpha = affine_min_norm(&pts);
            if alpha.iter().all(|&a| a > 1e-14) {
                lambda = alpha;
                break;
            }
            let mut theta = 1.0f64;
            for (l, a) in lambda.iter().zip(&alpha) {
                if *a <= 1e-14 && l - a > 0.0 {
                    theta = theta.min(l / (l - a));
                }
            }
            for (l, a) in lambda.iter_mut().zip(&alpha) {
                *l = (1.0 - theta) * *l + theta * a;
            }
            let mut keep = lambda.iter().map(|&l| l > 1e-14).collect::<Vec<_>>();
            if keep.iter().all(|&k| k) {
                // Numerical stall: drop the smallest weight.
                let (imin, _) = lambda
                    .iter()
                    .enumerate()
                    .min_by(|a, b| a.1.total_cmp(b.1))
                    .expect("nonempty");
                keep[imin] = false;
            }
            let mut i = 0;
            pts.retain(|_| {
                i += 1;
                keep[i - 1]
            });
            let mut i = 0;
            lambda.retain(|_| {
                i += 1;
                keep[i - 1]
            });
            let total: f64 = lambda.iter().sum();
            for l in &mut lambda {
                *l /= total;
            }
            if pts.len() == 1 {
                lambda = vec![1.0];
                break;
            }
        }
        x = vec![0.0; n];
        for (p, l) in pts.iter().zip(&lambda) {
            for (xi, pi) in x.iter_mut().zip(p) {
                *xi += l * pi;
            }
        }
        let cand = extract_minimizer(f, &x, base);
        if cand.1 < incumbent.1 {
            incumbent = cand;
        }
    }
    Err(Error::NonConvergence {
        iterations: MINNORM_MAX_CYCLES,
        best_mask: incumbent.0 .0,
        best_value: f.value(incumbent.0),
    })
}

/// Steepest single-element descent from `∅`, certified by
/// `0 ∈ ∂_f^{Δ(1,1)}(A)`.
pub fn local_min(f: &SetFunction, eps: f64) -> (Subset, Certificate) {
    let n = f.n();
    let mut a = Subset::EMPTY;
    let mut fa = 0.0;
    loop {
        let mut best: Option<(Subset, f64)> = None;
        for j in 0..n {
            let y = if a.contains(j) { a.without(j) } else { a.with(j) };
            let gain = f.value(y) - fa;
            if gain < -eps && best.is_none_or(|(_, g)| gain < g) {
                best = Some((y, gain));
            }
        }
        match best {
            Some((y, _)) => {
                a = y;
                fa = f.value(y);
            }
            None => break,
        }
    }
    let cert = member_subdiff_local(f, a, &ModularVector::zeros(n), eps);
    (a, cert)
}

/// Majorize-minimize with modular upper bounds, alternating the grow and
/// shrink supergradients. Returns the final set and `f` along the iterates.
pub fn mmin(f: &SetFunction, init: Subset, eps: f64) -> Result<(Subset, Vec<f64>)> {
    f.ground().check(init)?;
    let n = f.n();
    let mut x = init;
    let mut trace = vec![f.value(x)];
    let mut stalled = 0;
    let mut t = 0usize;
    while stalled < 2 {
        let v = if t.is_multiple_of(2) {
            SupergradientVariant::Grow
        } else {
            SupergradientVariant::Shrink
        };
        t += 1;
        let g = supergradient(f, x, v);
        let y = Subset::from_elements((0..n).filter(|&j| g[j] < 0.0 || (g[j] == 0.0 && x.contains(j))));
        let fy = f.value(y);
        if y != x && fy < trace[trace.len() - 1] - eps {
            x = y;
            trace.push(fy);
            stalled = 0;
        } else {
            stalled += 1;
        }
    }
    Ok((x, trace))
}

/// `A` is a global minimizer iff `0 ∈ ∂_f(A)`.
pub fn certify_min(f: &SetFunction, a: Subset, eps: f64) -> Result<Certificate> {
    let cert = member_subdiff(f, a, &ModularVector::zeros(f.n()), eps)?;
    Ok(if cert.verdict {
        cert.with_guarantee(Guarantee::exact("global-min"))
    } else {
        cert
    })
}
