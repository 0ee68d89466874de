//! Randomized property sweeps over a single function, grouped by area.
//!
//! Every check either passes, fails with a short detail string, or is
//! skipped because the ground set exceeds its enumeration ceiling.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::checks::{check_mnatural_concave, check_monotone, check_submodular};
use crate::duality::{
    cdst_separate, check_fdt_concave, check_fdt_convex, check_sandwich, check_sandwich_chain,
    dst_separate, fenchel_concave, fenchel_convex, minkowski_checks, Validity,
};
use crate::error::{Error, Result};
use crate::extensions::{
    concave_ext_exact, concave_ext_super, concave_ext_vondrak, lovasz, multilinear_exact,
};
use crate::function::{FnOracle, SetFunction};
use crate::lower::{greedy_vertex, lp_max_lower, member_base_poly, member_subdiff, modular_lower_bound};
use crate::maximize::{certify_global_max, local_max, max_brute, max_unconstrained_third, Constraint};
use crate::minimize::{certify_min, local_min, sfm_brute, sfm_minnorm};
use crate::modular::ModularVector;
use crate::set::{Permutation, Subset};
use crate::upper::{
    member_superdiff, member_superdiff_full, member_superdiff_inner, member_superdiff_outer,
    member_upper_poly, mnatural_superdiff_equals_delta22, supergradient, InnerBoundKind,
    SupergradientVariant,
};
use crate::zoo::{
    random_compatible_permutation, random_cube_point, random_partition, random_permutation,
    random_subset, random_submodular, random_supermodular_above, random_supermodular_below,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Suite {
    Core,
    Lower,
    Superdiff,
    Sandwich,
    Minimize,
    Maximize,
    Duality,
    Mnatural,
    Determinism,
    All,
}

impl Suite {
    pub const EACH: [Suite; 9] = [
        Suite::Core,
        Suite::Lower,
        Suite::Superdiff,
        Suite::Sandwich,
        Suite::Minimize,
        Suite::Maximize,
        Suite::Duality,
        Suite::Mnatural,
        Suite::Determinism,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Core => "core",
            Suite::Lower => "lower",
            Suite::Superdiff => "superdiff",
            Suite::Sandwich => "sandwich",
            Suite::Minimize => "minimize",
            Suite::Maximize => "maximize",
            Suite::Duality => "duality",
            Suite::Mnatural => "mnatural",
            Suite::Determinism => "determinism",
            Suite::All => "all",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::EACH
            .into_iter()
            .chain([Suite::All])
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::Domain(format!("unknown suite '{s}'")))
    }
}

#[derive(Debug, Clone, Copy)]
pub struct VerifyOptions {
    pub trials: usize,
    pub seed: u64,
    pub eps: f64,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            trials: 100,
            seed: 0,
            eps: crate::certificate::EPS,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CheckOutcome {
    pub name: String,
    pub passed: bool,
    pub skipped: bool,
    pub detail: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SuiteReport {
    pub suite: Suite,
    pub passed: bool,
    pub checks: Vec<CheckOutcome>,
}

enum Outcome {
    Pass,
    Fail(String),
    Skip(String),
}

/// Cheap `Outcome` builders for checks written as boolean sweeps.
fn expect(ok: bool, detail: impl FnOnce() -> String) -> Outcome {
    if ok {
        Outcome::Pass
    } else {
        Outcome::Fail(detail())
    }
}

fn skip_above(n: usize, limit: usize) -> Option<Outcome> {
    (n > limit).then(|| Outcome::Skip(format!("n = {n} exceeds {limit}")))
}

struct Runner {
    checks: Vec<CheckOutcome>,
}

impl Runner {
    fn run(&mut self, name: &str, check: impl FnOnce() -> Result<Outcome>) {
        let outcome = match check() {
            Ok(o) => o,
            Err(e) if e.is_refusal() => Outcome::Skip(e.to_string()),
            Err(e) => Outcome::Fail(e.to_string()),
        };
        let (passed, skipped, detail) = match outcome {
            Outcome::Pass => (true, false, None),
            Outcome::Fail(d) => (false, false, Some(d)),
            Outcome::Skip(d) => (true, true, Some(d)),
        };
        self.checks.push(CheckOutcome {
            name: name.to_string(),
            passed,
            skipped,
            detail,
        });
    }
}

/// Per-suite seeds derived from the user seed so suites are independent of
/// the order in which they run.
fn rng_for(opts: &VerifyOptions, suite: Suite, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    rng.set_stream(suite as u64 * 64 + stream);
    rng
}

fn scale_of(f: &SetFunction) -> f64 {
    1.0 + (0..f.n())
        .map(|j| f.single(j).abs().max(f.top_marginal(j).abs()))
        .fold(0.0, f64::max)
}

pub fn run_suite(f: &SetFunction, suite: Suite, opts: &VerifyOptions) -> Result<SuiteReport> {
    if suite == Suite::All {
        let mut checks = Vec::new();
        for s in Suite::EACH {
            let r = run_suite(f, s, opts)?;
            checks.extend(r.checks.into_iter().map(|mut c| {
                c.name = format!("{s}/{}", c.name);
                c
            }));
        }
        let passed = checks.iter().all(|c| c.passed);
        return Ok(SuiteReport {
            suite,
            passed,
            checks,
        });
    }
    if suite != Suite::Core && !check_submodular(f, opts.eps)?.verdict {
        return Err(Error::Premise(format!("suite {suite} needs a submodular function")));
    }
    let mut r = Runner { checks: Vec::new() };
    match suite {
        Suite::Core => core_suite(f, opts, &mut r),
        Suite::Lower => lower_suite(f, opts, &mut r),
        Suite::Superdiff => superdiff_suite(f, opts, &mut r),
        Suite::Sandwich => sandwich_suite(f, opts, &mut r),
        Suite::Minimize => minimize_suite(f, opts, &mut r),
        Suite::Maximize => maximize_suite(f, opts, &mut r),
        Suite::Duality => duality_suite(f, opts, &mut r),
        Suite::Mnatural => mnatural_suite(f, opts, &mut r),
        Suite::Determinism => determinism_suite(f, opts, &mut r),
        Suite::All => unreachable!(),
    }
    let passed = r.checks.iter().all(|c| c.passed);
    Ok(SuiteReport {
        suite,
        passed,
        checks: r.checks,
    })
}

fn core_suite(f: &SetFunction, opts: &VerifyOptions, r: &mut Runner) {
    let n = f.n();
    r.run("normalized", || {
        let v = f.value(Subset::EMPTY);
        Ok(expect(v == 0.0, || format!("f(∅) = {v}")))
    });
    r.run("marginal_consistency", || {
        if let Some(o) = skip_above(n, 10) {
            return Ok(o);
        }
        for s in f.ground().subsets()? {
            for j in s.complement(n).elements() {
                let a = f.value(s.with(j));
                let b = f.value(s) + f.marginal(j, s);
                if (a - b).abs() > 4.0 * f64::EPSILON * a.abs().max(1.0) {
                    return Ok(Outcome::Fail(format!("j = {j}, S = {s}: {a} vs {b}")));
                }
            }
        }
        Ok(Outcome::Pass)
    });
    r.run("submodular", || {
        let c = check_submodular(f, opts.eps)?;
        Ok(expect(c.verdict, || format!("{:?}", c.witness)))
    });
    r.run("mnatural_implies_submodular", || {
        let m = check_mnatural_concave(f, opts.eps)?.verdict;
        let s = check_submodular(f, opts.eps)?.verdict;
        Ok(expect(!m || s, || "M♮-concave but not submodular".into()))
    });
}

fn lower_suite(f: &SetFunction, opts: &VerifyOptions, r: &mut Runner) {
    let n = f.n();
    let eps = opts.eps;
    r.run("greedy_optimality", || {
        let mut rng = rng_for(opts, Suite::Lower, 0);
        for _ in 0..opts.trials {
            let w: Vec<f64> = (0..n).map(|_| rng.gen_range(0.0..1.0)).collect();
            let (best, _) = lp_max_lower(f, &w)?;
            let a = greedy_vertex(f, &random_permutation(n, &mut rng));
            let b = greedy_vertex(f, &random_permutation(n, &mut rng));
            let t = rng.gen_range(0.0..1.0);
            let x = ModularVector::from_fn(n, |j| t * a[j] + (1.0 - t) * b[j] - rng.gen_range(0.0..0.5));
            if x.dot(&w) > best + eps {
                return Ok(Outcome::Fail(format!("{x:?} beats the greedy value {best}")));
            }
        }
        Ok(Outcome::Pass)
    });
    r.run("base_identity", || {
        let mut rng = rng_for(opts, Suite::Lower, 1);
        let fv = f.full_value();
        for _ in 0..opts.trials {
            let sigma = random_permutation(n, &mut rng);
            let total = greedy_vertex(f, &sigma).value(Subset::full(n));
            if (total - fv).abs() > 1e-9 * fv.abs().max(1.0) {
                return Ok(Outcome::Fail(format!("{:?}: x(V) = {total}, f(V) = {fv}", sigma.order())));
            }
        }
        Ok(Outcome::Pass)
    });
    r.run("subdiff_reduction", || {
        if let Some(o) = skip_above(n, 8) {
            return Ok(o);
        }
        let mut rng = rng_for(opts, Suite::Lower, 2);
        for _ in 0..opts.trials {
            let x_set = random_subset(n, &mut rng);
            let sigma = random_compatible_permutation(n, x_set, &mut rng);
            let h = greedy_vertex(f, &sigma);
            let x = ModularVector::from_fn(n, |j| h[j] + rng.gen_range(-0.3..0.3));
            let fast = member_subdiff(f, x_set, &x, eps)?.verdict;
            let at = f.value(x_set) - x.value(x_set);
            let full = f.ground().subsets()?.all(|y| f.value(y) - x.value(y) >= at - eps);
            if fast != full {
                return Ok(Outcome::Fail(format!("X = {x_set}, x = {x:?}")));
            }
        }
        Ok(Outcome::Pass)
    });
    r.run("lower_bound_tightness", || {
        let mut rng = rng_for(opts, Suite::Lower, 3);
        for _ in 0..opts.trials {
            let sigma = random_permutation(n, &mut rng);
            let chain = sigma.chain();
            let x_set = chain[rng.gen_range(0..chain.len())];
            let m = modular_lower_bound(f, x_set, &sigma)?;
            for &s in &chain {
                if (m.value(s) - f.value(s)).abs() > 1e-9 * f.value(s).abs().max(1.0) {
                    return Ok(Outcome::Fail(format!("not tight at {s} for X = {x_set}")));
                }
            }
        }
        Ok(Outcome::Pass)
    });
    r.run("minkowski_vertices", || {
        let mut rng = rng_for(opts, Suite::Lower, 4);
        let f2 = random_submodular(n, &mut rng);
        let sum = SetFunction::sum(vec![f.clone(), f2.clone()])?;
        for _ in 0..opts.trials {
            let sigma = random_permutation(n, &mut rng);
            let a = greedy_vertex(&sum, &sigma);
            let b = &greedy_vertex(f, &sigma) + &greedy_vertex(&f2, &sigma);
            if a.max_abs_diff(&b) > 1e-9 {
                return Ok(Outcome::Fail(format!("{:?}", sigma.order())));
            }
        }
        Ok(Outcome::Pass)
    });
}

/// A point near `∂^f(X)`: a random mix of the three supergradients plus noise.
fn near_superdiff(f: &SetFunction, x_set: Subset, scale: f64, rng: &mut ChaCha8Rng) -> ModularVector {
    let g: Vec<ModularVector> = SupergradientVariant::VALID
        .iter()
        .map(|&v| supergradient(f, x_set, v))
        .collect();
    let mut w = [rng.gen_range(0.0..1.0), rng.gen_range(0.0..1.0), rng.gen_range(0.0..1.0)];
    let t: f64 = w.iter().sum();
    w.iter_mut().for_each(|v| *v /= t);
    let noise = if rng.gen_bool(0.5) { 0.0 } else { 0.3 * scale };
    ModularVector::from_fn(f.n(), |j| {
        (0..3).map(|i| w[i] * g[i][j]).sum::<f64>() + rng.gen_range(-1.0..=1.0) * noise
    })
}

fn superdiff_suite(f: &SetFunction, opts: &VerifyOptions, r: &mut Runner) {
    let n = f.n();
    let eps = opts.eps;
    let scale = scale_of(f);
    r.run("nonempty", || {
        if let Some(o) = skip_above(n, 10) {
            return Ok(o);
        }
        for x_set in f.ground().subsets()? {
            for v in SupergradientVariant::VALID {
                let c = member_superdiff(f, x_set, &supergradient(f, x_set, v), eps)?;
                if !c.verdict {
                    return Ok(Outcome::Fail(format!("{v:?} at {x_set} rejected: {:?}", c.witness)));
                }
            }
        }
        Ok(Outcome::Pass)
    });
    r.run("inner_nesting", || {
        if let Some(o) = skip_above(n, 10) {
            return Ok(o);
        }
        let mut rng = rng_for(opts, Suite::Superdiff, 0);
        for _ in 0..opts.trials {
            let x_set = random_subset(n, &mut rng);
            let x = near_superdiff(f, x_set, scale, &mut rng);
            let inner = |k| member_superdiff_inner(f, x_set, &x, k, eps).verdict;
            let (hat, check, bar, conv) = (
                inner(InnerBoundKind::Hat),
                inner(InnerBoundKind::Check),
                inner(InnerBoundKind::BarBox),
                inner(InnerBoundKind::Conv),
            );
            let exact = member_superdiff(f, x_set, &x, eps)?.verdict;
            let ok = (!bar || (hat && check)) && (!(hat || check) || conv) && (!conv || exact);
            if !ok {
                return Ok(Outcome::Fail(format!(
                    "X = {x_set}, x = {x:?}: hat {hat}, check {check}, bar {bar}, conv {conv}, exact {exact}"
                )));
            }
        }
        Ok(Outcome::Pass)
    });
    r.run("outer_hierarchy", || {
        if let Some(o) = skip_above(n, 10) {
            return Ok(o);
        }
        let mut rng = rng_for(opts, Suite::Superdiff, 1);
        let top = n.clamp(1, 3);
        for _ in 0..opts.trials {
            let x_set = random_subset(n, &mut rng);
            let x = near_superdiff(f, x_set, scale, &mut rng);
            let mut grid = vec![vec![false; top + 1]; top + 1];
            for k in 1..=top {
                for l in 1..=top {
                    grid[k][l] = member_superdiff_outer(f, x_set, &x, k, l, eps)?.verdict;
                }
            }
            for k in 1..=top {
                for l in 1..=top {
                    if grid[k][l] && ((k > 1 && !grid[k - 1][l]) || (l > 1 && !grid[k][l - 1])) {
                        return Ok(Outcome::Fail(format!("Δ({k},{l}) accepts a point a coarser bound rejects")));
                    }
                }
            }
            let full = member_superdiff_outer(f, x_set, &x, n.max(1), n.max(1), eps)?.verdict;
            if full != member_superdiff(f, x_set, &x, eps)?.verdict {
                return Ok(Outcome::Fail(format!("Δ(n,n) disagrees at X = {x_set}, x = {x:?}")));
            }
        }
        Ok(Outcome::Pass)
    });
    r.run("empty_and_full", || {
        if let Some(o) = skip_above(n, 10) {
            return Ok(o);
        }
        let mut rng = rng_for(opts, Suite::Superdiff, 2);
        let v = Subset::full(n);
        for _ in 0..opts.trials {
            let x = ModularVector::from_fn(n, |j| f.single(j) + rng.gen_range(-0.3..0.6) * scale);
            if member_superdiff(f, Subset::EMPTY, &x, eps)?.verdict != member_upper_poly(f, &x, eps).verdict {
                return Ok(Outcome::Fail(format!("∂^f(∅) and P^f disagree at {x:?}")));
            }
            let x = ModularVector::from_fn(n, |j| f.top_marginal(j) + rng.gen_range(-0.6..0.3) * scale);
            if member_superdiff(f, v, &x, eps)?.verdict != member_superdiff_full(f, &x, eps)?.verdict {
                return Ok(Outcome::Fail(format!("∂^f(V) and its closed form disagree at {x:?}")));
            }
        }
        Ok(Outcome::Pass)
    });
    r.run("tilde_chain_bound", || {
        if let Some(o) = skip_above(n, 12) {
            return Ok(o);
        }
        for x_set in f.ground().subsets()? {
            let g = supergradient(f, x_set, SupergradientVariant::Tilde);
            let base = f.value(x_set) - g.value(x_set);
            let comp = x_set.complement(n);
            let chain = x_set.submasks().chain(comp.submasks().map(|t| x_set.union(t)));
            for y in chain {
                if f.value(y) > base + g.value(y) + eps {
                    return Ok(Outcome::Fail(format!("X = {x_set}, Y = {y}")));
                }
            }
        }
        Ok(Outcome::Pass)
    });
    r.run("upper_minkowski", || {
        let mut rng = rng_for(opts, Suite::Superdiff, 3);
        let f2 = random_submodular(n, &mut rng);
        let sum = SetFunction::sum(vec![f.clone(), f2.clone()])?;
        for _ in 0..opts.trials {
            let x1 = ModularVector::from_fn(n, |j| f.single(j) + rng.gen_range(0.0..1.0));
            let x2 = ModularVector::from_fn(n, |j| f2.single(j) + rng.gen_range(0.0..1.0));
            if !member_upper_poly(&sum, &(&x1 + &x2), eps).verdict {
                return Ok(Outcome::Fail(format!("{x1:?} + {x2:?}")));
            }
        }
        Ok(Outcome::Pass)
    });
}

fn sandwich_suite(f: &SetFunction, opts: &VerifyOptions, r: &mut Runner) {
    let n = f.n();
    let slack = 1e-7;
    let monotone = check_monotone(f, opts.eps).map(|c| c.verdict).unwrap_or(false);
    r.run("extension_property", || {
        if let Some(o) = skip_above(n, 8) {
            return Ok(o);
        }
        for x_set in f.ground().subsets()? {
            let w: Vec<f64> = (0..n).map(|j| if x_set.contains(j) { 1.0 } else { 0.0 }).collect();
            let mut vals = vec![
                ("lovasz", lovasz(f, &w)?.0),
                ("multilinear", multilinear_exact(f, &w)?),
                ("concave_exact", concave_ext_exact(f, &w)?.0),
            ];
            for v in SupergradientVariant::VALID {
                vals.push(("concave_super", concave_ext_super(f, &w, v)?.0));
            }
            if monotone {
                vals.push(("vondrak", concave_ext_vondrak(f, &w, opts.eps)?.0));
            }
            let fx = f.value(x_set);
            if let Some((name, v)) = vals.iter().find(|(_, v)| (v - fx).abs() > 1e-9 * fx.abs().max(1.0)) {
                return Ok(Outcome::Fail(format!("{name} at {x_set}: {v} vs {fx}")));
            }
        }
        Ok(Outcome::Pass)
    });
    r.run("extension_sandwich", || {
        if let Some(o) = skip_above(n, 8) {
            return Ok(o);
        }
        let mut rng = rng_for(opts, Suite::Sandwich, 0);
        for _ in 0..opts.trials {
            let w = random_cube_point(n, &mut rng);
            let lex = lovasz(f, &w)?.0;
            let mex = multilinear_exact(f, &w)?;
            let cex = concave_ext_exact(f, &w)?.0;
            let sup = SupergradientVariant::VALID
                .iter()
                .map(|&v| concave_ext_super(f, &w, v).map(|r| r.0))
                .collect::<Result<Vec<_>>>()?;
            let bad = lex > mex + slack || mex > cex + slack || sup.iter().any(|&s| cex > s + slack);
            let weak = monotone && mex < (1.0 - (-1.0f64).exp()) * cex - slack;
            if bad || weak {
                return Ok(Outcome::Fail(format!(
                    "w = {w:?}: lex {lex}, mex {mex}, cex {cex}, super {sup:?}"
                )));
            }
        }
        Ok(Outcome::Pass)
    });
    r.run("midpoint_convexity", || {
        let mut rng = rng_for(opts, Suite::Sandwich, 1);
        for _ in 0..opts.trials {
            let a = random_cube_point(n, &mut rng);
            let b = random_cube_point(n, &mut rng);
            let m: Vec<f64> = a.iter().zip(&b).map(|(x, y)| 0.5 * (x + y)).collect();
            let l = |p: &[f64]| lovasz(f, p).map(|r| r.0);
            if 0.5 * (l(&a)? + l(&b)?) < l(&m)? - slack {
                return Ok(Outcome::Fail(format!("Lovász midpoint at {a:?}, {b:?}")));
            }
            if n <= 8 {
                let c = |p: &[f64]| concave_ext_exact(f, p).map(|r| r.0);
                if 0.5 * (c(&a)? + c(&b)?) > c(&m)? + slack {
                    return Ok(Outcome::Fail(format!("concave midpoint at {a:?}, {b:?}")));
                }
            }
        }
        Ok(Outcome::Pass)
    });
    r.run("lovasz_min", || {
        if let Some(o) = skip_above(n, 12) {
            return Ok(o);
        }
        let mut rng = rng_for(opts, Suite::Sandwich, 2);
        let target = sfm_brute(f)?.value;
        let mut best = f64::INFINITY;
        for x_set in f.ground().subsets()? {
            let w: Vec<f64> = (0..n).map(|j| if x_set.contains(j) { 1.0 } else { 0.0 }).collect();
            best = best.min(lovasz(f, &w)?.0);
        }
        for _ in 0..opts.trials {
            let v = lovasz(f, &random_cube_point(n, &mut rng))?.0;
            if v < target - slack {
                return Ok(Outcome::Fail(format!("interior value {v} below min f = {target}")));
            }
        }
        Ok(expect((best - target).abs() <= 1e-9, || format!("{best} vs {target}")))
    });
}

fn minimize_suite(f: &SetFunction, opts: &VerifyOptions, r: &mut Runner) {
    let n = f.n();
    let eps = opts.eps;
    r.run("brute_vs_minnorm", || {
        if let Some(o) = skip_above(n, 12) {
            return Ok(o);
        }
        let mut rng = rng_for(opts, Suite::Minimize, 0);
        let scale = scale_of(f);
        for t in 0..opts.trials.clamp(1, 20) {
            let g = if t == 0 {
                f.clone()
            } else {
                let x = ModularVector::from_fn(n, |_| rng.gen_range(-0.5..0.5) * scale);
                f.plus_modular(&x)?
            };
            let a = sfm_brute(&g)?.value;
            let b = sfm_minnorm(&g)?.value;
            if (a - b).abs() > 1e-7 {
                return Ok(Outcome::Fail(format!("trial {t}: brute {a}, min-norm {b}")));
            }
        }
        Ok(Outcome::Pass)
    });
    r.run("restricted_optimality", || {
        if let Some(o) = skip_above(n, 12) {
            return Ok(o);
        }
        let res = sfm_minnorm(f)?;
        let a = res.minimizer;
        let fa = f.value(a);
        let comp = a.complement(n);
        let bad = a
            .submasks()
            .chain(comp.submasks().map(|t| a.union(t)))
            .find(|&b| f.value(b) < fa - eps);
        Ok(match bad {
            Some(b) => Outcome::Fail(format!("f({b}) < f({a})")),
            None => Outcome::Pass,
        })
    });
    r.run("certificates", || {
        let (a, c) = local_min(f, eps);
        if !c.verdict {
            return Ok(Outcome::Fail(format!("local_min output {a} fails its certificate")));
        }
        if f.n() > 16 {
            return Ok(Outcome::Pass);
        }
        let res = sfm_minnorm(f)?;
        let c = certify_min(f, res.minimizer, eps)?;
        Ok(expect(c.verdict, || format!("certify_min rejects {}", res.minimizer)))
    });
    r.run("wolfe_certificate", || {
        if let Some(o) = skip_above(n, 16) {
            return Ok(o);
        }
        let res = sfm_minnorm(f)?;
        let y = res.certificate.clone().unwrap_or_else(|| ModularVector::zeros(n));
        if res.certificate.is_none() {
            return Ok(Outcome::Fail("min-norm returned no point".into()));
        }
        let in_base = member_base_poly(f, &y, 1e-6)?.verdict;
        let neg: f64 = y.0.iter().map(|v| v.min(0.0)).sum();
        let min = sfm_brute(f)?.value;
        Ok(expect(in_base && neg >= min - 1e-6, || {
            format!("y = {y:?}, in base {in_base}, Σ min(y, 0) = {neg}, min f = {min}")
        }))
    });
}

fn maximize_suite(f: &SetFunction, opts: &VerifyOptions, r: &mut Runner) {
    let n = f.n();
    let eps = opts.eps;
    let constraints = || -> Result<Vec<Constraint>> {
        let mut rng = rng_for(opts, Suite::Maximize, 0);
        let (blocks, caps) = random_partition(n, &mut rng);
        Ok(vec![
            Constraint::Unconstrained,
            Constraint::Cardinality(2.min(n)),
            Constraint::partition(n, &blocks, &caps)?,
        ])
    };
    r.run("local_max_certificates", || {
        if let Some(o) = skip_above(n, 10) {
            return Ok(o);
        }
        for c in constraints()? {
            for (k, l) in [(1, 1), (2, 2)] {
                let (a, cert) = local_max(f, &c, k, l, Subset::EMPTY, eps)?;
                if !cert.verdict {
                    return Ok(Outcome::Fail(format!("{c:?}, Δ({k},{l}): {a} not certified")));
                }
            }
        }
        Ok(Outcome::Pass)
    });
    r.run("guarantee_soundness", || {
        if let Some(o) = skip_above(n, 10) {
            return Ok(o);
        }
        for c in constraints()? {
            let (_, opt) = max_brute(f, &c)?;
            for (k, l) in [(1, 1), (2, 2), (2, 3)] {
                let (a, cert) = local_max(f, &c, k, l, Subset::EMPTY, eps)?;
                if let Some(g) = cert.guarantee.as_ref().filter(|g| g.preconditions_met) {
                    let factor = g.factor.unwrap_or(0.0);
                    if matches!(c, Constraint::Unconstrained) {
                        continue;
                    }
                    if f.value(a) < factor * opt - 1e-7 {
                        return Ok(Outcome::Fail(format!("{}: f({a}) = {} < {factor} · {opt}", g.tag, f.value(a))));
                    }
                }
            }
        }
        let nonneg = f.ground().subsets()?.all(|s| f.value(s) >= -eps);
        if nonneg {
            let (_, v, _) = max_unconstrained_third(f, eps)?;
            let (_, opt) = max_brute(f, &Constraint::Unconstrained)?;
            if v < opt / 3.0 - 1e-7 {
                return Ok(Outcome::Fail(format!("complement trick: {v} < {opt} / 3")));
            }
        }
        Ok(Outcome::Pass)
    });
    r.run("global_max_soundness", || {
        if let Some(o) = skip_above(n, 10) {
            return Ok(o);
        }
        let (_, opt) = max_brute(f, &Constraint::Unconstrained)?;
        for a in f.ground().subsets()? {
            if certify_global_max(f, a, eps).verdict && (f.value(a) - opt).abs() > eps {
                return Ok(Outcome::Fail(format!("{a} certified with {} < {opt}", f.value(a))));
            }
        }
        Ok(Outcome::Pass)
    });
    r.run("monotone_local_max", || {
        if let Some(o) = skip_above(n, 12) {
            return Ok(o);
        }
        if !check_monotone(f, eps)?.verdict {
            return Ok(Outcome::Skip("function is not monotone".into()));
        }
        let (a, _) = local_max(f, &Constraint::Unconstrained, 1, 1, Subset::EMPTY, eps)?;
        let fa = f.value(a);
        let tol = eps * fa.abs().max(1.0);
        if let Some(j) = a.complement(n).elements().find(|&j| f.marginal(j, a) > tol) {
            return Ok(Outcome::Fail(format!("adding {j} to {a} still gains")));
        }
        let comp = a.complement(n);
        let chain_ok = a
            .submasks()
            .chain(comp.submasks().map(|t| a.union(t)))
            .all(|y| f.value(y) <= fa + n as f64 * tol);
        Ok(expect(chain_ok, || format!("{a} is not maximal along its chain")))
    });
}

fn duality_suite(f: &SetFunction, opts: &VerifyOptions, r: &mut Runner) {
    let n = f.n();
    let eps = opts.eps;
    let pairs = opts.trials.clamp(1, 20);
    r.run("dst_sandwich", || {
        if let Some(o) = skip_above(n, 12) {
            return Ok(o);
        }
        let mut rng = rng_for(opts, Suite::Duality, 0);
        for _ in 0..pairs {
            let g = random_supermodular_below(f, &mut rng);
            let sep = dst_separate(f, &g, eps)?;
            if !check_sandwich(&g, &sep, f, eps)?.verdict {
                return Ok(Outcome::Fail(format!("separator {:?} fails", sep.h)));
            }
        }
        Ok(Outcome::Pass)
    });
    r.run("cdst_sandwich", || {
        if let Some(o) = skip_above(n, 12) {
            return Ok(o);
        }
        let mut rng = rng_for(opts, Suite::Duality, 1);
        for _ in 0..pairs {
            let g = random_supermodular_above(f, &mut rng);
            let sep = cdst_separate(f, &g, eps)?;
            if sep.validity != Validity::Exhaustive || !check_sandwich(f, &sep, &g, eps)?.verdict {
                return Ok(Outcome::Fail(format!("separator {:?} ({}) fails", sep.h, sep.branch)));
            }
        }
        Ok(Outcome::Pass)
    });
    r.run("gcdst_chain", || {
        if let Some(o) = skip_above(n, 12) {
            return Ok(o);
        }
        let mut rng = rng_for(opts, Suite::Duality, 2);
        for _ in 0..pairs {
            let g = random_supermodular_above(f, &mut rng);
            let lift = rng.gen_range(0.1..1.0);
            let g = FnOracle::new(n, |s: Subset| g.value(s) + lift);
            let sep = cdst_separate(f, &g, eps)?;
            let Validity::ChainOnly { a } = sep.validity else {
                return Ok(Outcome::Fail(format!("expected the chain-only branch, got {}", sep.branch)));
            };
            if !check_sandwich_chain(f, &sep, &g, a, eps)?.verdict {
                return Ok(Outcome::Fail(format!("sandwich fails on the chain through {a}")));
            }
        }
        Ok(Outcome::Pass)
    });
    r.run("weak_and_strong_duality", || {
        if let Some(o) = skip_above(n, 12) {
            return Ok(o);
        }
        let mut rng = rng_for(opts, Suite::Duality, 3);
        let g = random_supermodular_below(f, &mut rng);
        let convex = check_fdt_convex(f, &g, opts.trials, opts.seed, eps)?;
        if convex.weak_violations > 0 || !convex.strong_attained {
            return Ok(Outcome::Fail(format!("convex side: {convex:?}")));
        }
        let g = random_supermodular_above(f, &mut rng);
        let concave = check_fdt_concave(f, &g, opts.trials, opts.seed, eps)?;
        Ok(expect(concave.weak_violations == 0, || format!("concave side: {concave:?}")))
    });
    r.run("dual_midpoints", || {
        if let Some(o) = skip_above(n, 12) {
            return Ok(o);
        }
        let mut rng = rng_for(opts, Suite::Duality, 4);
        let scale = scale_of(f);
        for _ in 0..opts.trials {
            let a: Vec<f64> = (0..n).map(|_| rng.gen_range(-scale..scale)).collect();
            let b: Vec<f64> = (0..n).map(|_| rng.gen_range(-scale..scale)).collect();
            let m: Vec<f64> = a.iter().zip(&b).map(|(x, y)| 0.5 * (x + y)).collect();
            let cv = |y: &[f64]| fenchel_convex(f, y).map(|r| r.0);
            let cc = |y: &[f64]| fenchel_concave(f, y).map(|r| r.0);
            if cv(&m)? > 0.5 * (cv(&a)? + cv(&b)?) + eps || cc(&m)? < 0.5 * (cc(&a)? + cc(&b)?) - eps {
                return Ok(Outcome::Fail(format!("midpoint of {a:?} and {b:?}")));
            }
        }
        Ok(Outcome::Pass)
    });
    r.run("minkowski", || {
        let mut rng = rng_for(opts, Suite::Duality, 5);
        let f2 = random_submodular(n, &mut rng);
        let rep = minkowski_checks(f, &f2, opts.trials, opts.seed, 1e-9)?;
        Ok(expect(rep.passed(), || format!("{rep:?}")))
    });
}

fn mnatural_suite(f: &SetFunction, opts: &VerifyOptions, r: &mut Runner) {
    let n = f.n();
    r.run("delta22_equality", || {
        if let Some(o) = skip_above(n, 8) {
            return Ok(o);
        }
        let mnat = check_mnatural_concave(f, opts.eps)?.verdict;
        for (i, x_set) in f.ground().subsets()?.enumerate() {
            let seed = opts.seed.wrapping_add(i as u64);
            let c = mnatural_superdiff_equals_delta22(f, x_set, opts.trials, seed, opts.eps)?;
            if !c.verdict {
                return Ok(if mnat {
                    Outcome::Fail(format!("M♮-concave but {x_set} has {:?}", c.witness))
                } else {
                    Outcome::Skip(format!("not M♮-concave; witness at {x_set}"))
                });
            }
        }
        Ok(if mnat {
            Outcome::Pass
        } else {
            Outcome::Skip(format!("not M♮-concave; no witness in {} samples per set", opts.trials))
        })
    });
}

fn determinism_suite(f: &SetFunction, opts: &VerifyOptions, r: &mut Runner) {
    let n = f.n();
    r.run("repeatable_outputs", || {
        if let Some(o) = skip_above(n, 12) {
            return Ok(o);
        }
        let once = || -> Result<String> {
            let mut rng = rng_for(opts, Suite::Determinism, 0);
            let g = random_supermodular_below(f, &mut rng);
            let parts = (
                sfm_minnorm(f)?,
                local_max(f, &Constraint::Cardinality(2.min(n)), 2, 2, Subset::EMPTY, opts.eps)?,
                dst_separate(f, &g, opts.eps)?,
                greedy_vertex(f, &Permutation::identity(n)),
            );
            serde_json::to_string(&parts).map_err(|e| Error::Domain(e.to_string()))
        };
        let (a, b) = (once()?, once()?);
        Ok(expect(a == b, || "two runs differ".into()))
    });
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testutil::three_element;

    #[test]
    fn every_suite_passes_on_three_element() {
        let opts = VerifyOptions {
            trials: 40,
            seed: 7,
            ..VerifyOptions::default()
        };
        let r = run_suite(&three_element(), Suite::All, &opts).unwrap();
        for c in &r.checks {
            assert!(c.passed, "{} failed: {:?}", c.name, c.detail);
        }
        assert!(r.passed);
    }

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::EACH {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert!("nope".parse::<Suite>().is_err());
    }

    #[test]
    fn non_submodular_input_is_rejected() {
        let g = SetFunction::table(2, vec![0.0, 1.0, 1.0, 3.0]).unwrap();
        assert!(matches!(
            run_suite(&g, Suite::Lower, &VerifyOptions::default()),
            Err(Error::Premise(_))
        ));
        let core = run_suite(&g, Suite::Core, &VerifyOptions::default()).unwrap();
        assert!(!core.passed);
    }
}
