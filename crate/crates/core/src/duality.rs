//! Discrete separation on both sides, Fenchel duals, duality-gap checks and
//! Minkowski-sum checks.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::certificate::Certificate;
use crate::error::{ensure_at_most, Error, Result};
use crate::function::{Difference, FnOracle, MinusModular, SetFunction, SetOracle};
use crate::lower::{greedy_vertex, subgradient};
use crate::minimize::{sfm, sfm_brute, SfmMethod};
use crate::modular::ModularVector;
use crate::oracle::lp::{lp_solve_dense, LinearProgram, Sense};
use crate::set::{Permutation, Subset, MAX_ENUM};
use crate::upper::{member_superdiff_full, member_upper_poly, supergradient, SupergradientVariant};
use crate::zoo::{random_compatible_permutation, random_permutation, random_subset};

pub const MAX_SEPARATION: usize = 20;
pub const MAX_SEPARATION_LP: usize = 12;
pub const MAX_FDT_CONCAVE: usize = 16;
pub const MAX_MINKOWSKI: usize = 12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Side {
    /// `g ≤ h ≤ f` with `f` submodular, `g` supermodular.
    Convex,
    /// `f ≤ h ≤ g` with `f` submodular, `g` supermodular.
    Concave,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Validity {
    Exhaustive,
    /// Only on `[∅, A] ∪ [A, V]`.
    ChainOnly { a: Subset },
}

/// The modular function `Y ↦ h(Y) + offset`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Separator {
    pub h: ModularVector,
    pub offset: f64,
    pub side: Side,
    pub validity: Validity,
    pub branch: &'static str,
}

impl Separator {
    pub fn value(&self, s: Subset) -> f64 {
        self.h.value(s) + self.offset
    }
}

/// First `Y` (ascending mask) among `sets` with `low(Y) ≤ sep(Y) ≤ high(Y)` violated.
fn sandwich_witness<L, H, I>(low: &L, sep: &Separator, high: &H, sets: I, eps: f64) -> Option<Subset>
where
    L: SetOracle + ?Sized,
    H: SetOracle + ?Sized,
    I: IntoIterator<Item = Subset>,
{
    sets.into_iter().find(|&y| {
        let v = sep.value(y);
        low.value(y) > v + eps || v > high.value(y) + eps
    })
}

/// `low ≤ sep ≤ high` on all `2^n` sets.
pub fn check_sandwich<L, H>(low: &L, sep: &Separator, high: &H, eps: f64) -> Result<Certificate>
where
    L: SetOracle + ?Sized,
    H: SetOracle + ?Sized,
{
    let n = low.n();
    ensure_at_most("sandwich check", n, MAX_SEPARATION)?;
    Ok(match sandwich_witness(low, sep, high, (0..1u32 << n).map(Subset), eps) {
        Some(y) => Certificate::fail_set(y),
        None => Certificate::pass(),
    })
}

/// `low ≤ sep ≤ high` on `[∅, A] ∪ [A, V]` only.
pub fn check_sandwich_chain<L, H>(low: &L, sep: &Separator, high: &H, a: Subset, eps: f64) -> Result<Certificate>
where
    L: SetOracle + ?Sized,
    H: SetOracle + ?Sized,
{
    let n = low.n();
    ensure_at_most("sandwich check", n, MAX_SEPARATION)?;
    let comp = a.complement(n);
    let sets = a.submasks().chain(comp.submasks().map(|t| a.union(t)));
    Ok(match sandwich_witness(low, sep, high, sets, eps) {
        Some(y) => Certificate::fail_set(y),
        None => Certificate::pass(),
    })
}

fn premise_below<L, H>(low: &L, high: &H, eps: f64, what: &str) -> Result<()>
where
    L: SetOracle + ?Sized,
    H: SetOracle + ?Sized,
{
    let n = low.n();
    if high.n() != n {
        return Err(Error::Domain("functions live on different ground sets".into()));
    }
    ensure_at_most("separation premise check", n, MAX_SEPARATION)?;
    for m in 0..(1u32 << n) {
        let y = Subset(m);
        if low.value(y) > high.value(y) + eps {
            return Err(Error::Premise(format!(
                "{what} fails at {y}: {} > {}",
                low.value(y),
                high.value(y)
            )));
        }
    }
    Ok(())
}

/// Candidate orderings for the convex separator: `A` first in ascending
/// order, then `A` by descending marginal of `f` and the rest by descending
/// `f − g` increment, then the fully greedy order of `f`.
fn dst_orders<F, G>(f: &F, g: &G, a: Subset) -> Vec<Permutation>
where
    F: SetOracle + ?Sized,
    G: SetOracle + ?Sized,
{
    let n = f.n();
    let mut out = vec![Permutation::with_prefix(n, a)];
    let greedy = |pool: Subset, start: Subset, score: &dyn Fn(Subset, usize) -> f64| {
        let mut s = start;
        let mut order = Vec::new();
        let mut left = pool;
        while !left.is_empty() {
            let j = left
                .elements()
                .max_by(|&p, &q| score(s, p).total_cmp(&score(s, q)).then(q.cmp(&p)))
                .expect("nonempty pool");
            order.push(j);
            s = s.with(j);
            left = left.without(j);
        }
        order
    };
    let fm = |s: Subset, j: usize| f.value(s.with(j)) - f.value(s);
    let dm = |s: Subset, j: usize| {
        (f.value(s.with(j)) - g.value(s.with(j))) - (f.value(s) - g.value(s))
    };
    let mut order = greedy(a, Subset::EMPTY, &fm);
    order.extend(greedy(a.complement(n), a, &dm));
    out.push(Permutation::new(order).expect("permutation"));
    let full = greedy(Subset::full(n), Subset::EMPTY, &fm);
    out.push(Permutation::new(full).expect("permutation"));
    out
}

/// Affine separator `g ≤ x(·) + c ≤ f` by cutting planes over `(x, c)`.
fn separation_lp<L, H>(low: &L, high: &H, side: Side) -> Result<Separator>
where
    L: SetOracle + ?Sized,
    H: SetOracle + ?Sized,
{
    let n = low.n();
    ensure_at_most("separation LP", n, MAX_SEPARATION_LP)?;
    let mut active: Vec<Subset> = vec![Subset::EMPTY, Subset::full(n)];
    active.extend((0..n).map(Subset::singleton));
    active.dedup();
    for _ in 0..(1usize << n) + 1 {
        // Variables: x⁺ (n), x⁻ (n), c⁺, c⁻, one slack per row.
        let rows = 2 * active.len();
        let mut rhs = Vec::with_capacity(rows);
        let mut coef = Vec::with_capacity(rows);
        for &y in &active {
            rhs.push(high.value(y));
            coef.push((y, 1.0));
            rhs.push(low.value(y));
            coef.push((y, -1.0));
        }
        let mut lp = LinearProgram::new(rhs);
        for j in 0..n {
            lp.push(0.0, coef.iter().map(|(y, _)| if y.contains(j) { 1.0 } else { 0.0 }).collect());
        }
        for j in 0..n {
            lp.push(0.0, coef.iter().map(|(y, _)| if y.contains(j) { -1.0 } else { 0.0 }).collect());
        }
        lp.push(0.0, vec![1.0; rows]);
        lp.push(0.0, vec![-1.0; rows]);
        for (r, (_, sign)) in coef.iter().enumerate() {
            let mut col = vec![0.0; rows];
            col[r] = *sign;
            lp.push(0.0, col);
        }
        let sol = lp_solve_dense(&lp, Sense::Min)?;
        let h = ModularVector::from_fn(n, |j| sol.x[j] - sol.x[n + j]);
        let offset = sol.x[2 * n] - sol.x[2 * n + 1];
        let sep = Separator {
            h,
            offset,
            side,
            validity: Validity::Exhaustive,
            branch: "lp",
        };
        let mut worst = (1e-9, None);
        for m in 0..(1u32 << n) {
            let y = Subset(m);
            let v = sep.value(y);
            let viol = (v - high.value(y)).max(low.value(y) - v);
            if viol > worst.0 {
                worst = (viol, Some(y));
            }
        }
        match worst.1 {
            None => return Ok(sep),
            Some(y) if active.contains(&y) => {
                return Err(Error::Domain(format!("separation LP stalled at {y}")))
            }
            Some(y) => active.push(y),
        }
    }
    Err(Error::Domain("separation LP did not converge".into()))
}

/// Modular `h` with `g ≤ h ≤ f` for submodular `f` and supermodular `g`.
pub fn dst_separate<F, G>(f: &F, g: &G, eps: f64) -> Result<Separator>
where
    F: SetOracle + ?Sized,
    G: SetOracle + ?Sized,
{
    premise_below(g, f, eps, "g ≤ f")?;
    let diff = Difference { a: f, b: g };
    let a = sfm_brute(&diff)?.minimizer;
    for sigma in dst_orders(f, g, a) {
        let sep = Separator {
            h: greedy_vertex(f, &sigma),
            offset: f.value(Subset::EMPTY),
            side: Side::Convex,
            validity: Validity::Exhaustive,
            branch: "greedy",
        };
        if check_sandwich(g, &sep, f, eps)?.verdict {
            return Ok(sep);
        }
    }
    separation_lp(g, f, Side::Convex)
}

/// The generalized concave separator at `A`:
/// `h(X) = f(A) + Σ_{X∖A} f(j|A) − Σ_{A∖X} f(j|A∖j)`, valid on the chain through `A`.
pub fn gcdst_at<F: SetOracle + ?Sized>(f: &F, a: Subset) -> Separator {
    let n = f.n();
    let fa = f.value(a);
    let h = ModularVector::from_fn(n, |j| {
        if a.contains(j) {
            fa - f.value(a.without(j))
        } else {
            f.value(a.with(j)) - fa
        }
    });
    let offset = fa - h.value(a);
    Separator {
        h,
        offset,
        side: Side::Concave,
        validity: Validity::ChainOnly { a },
        branch: "gcdst",
    }
}

/// Modular `h` with `f ≤ h ≤ g` for submodular `f` and supermodular `g`,
/// when `f(∅) = g(∅)` or `f(V) = g(V)`; otherwise the chain-only separator
/// at a minimizer of `g − f`.
pub fn cdst_separate<F, G>(f: &F, g: &G, eps: f64) -> Result<Separator>
where
    F: SetOracle + ?Sized,
    G: SetOracle + ?Sized,
{
    premise_below(f, g, eps, "f ≤ g")?;
    let n = f.n();
    let e = f.value(Subset::EMPTY);
    if (e - g.value(Subset::EMPTY)).abs() <= eps {
        return Ok(Separator {
            h: ModularVector::from_fn(n, |j| f.value(Subset::singleton(j)) - e),
            offset: e,
            side: Side::Concave,
            validity: Validity::Exhaustive,
            branch: "empty",
        });
    }
    let v = Subset::full(n);
    let fv = f.value(v);
    if (fv - g.value(v)).abs() <= eps {
        let h = ModularVector::from_fn(n, |j| fv - f.value(v.without(j)));
        let offset = fv - h.value(v);
        return Ok(Separator {
            h,
            offset,
            side: Side::Concave,
            validity: Validity::Exhaustive,
            branch: "full",
        });
    }
    let a = sfm_brute(&Difference { a: g, b: f })?.minimizer;
    Ok(gcdst_at(f, a))
}

/// `f*(y) = max_X y(X) − f(X)` (one SFM call) and a maximizer.
pub fn fenchel_convex<F: SetOracle + ?Sized>(f: &F, y: &[f64]) -> Result<(f64, Subset)> {
    let r = sfm(&MinusModular { f, x: y }, SfmMethod::Auto)?;
    Ok((-r.value, r.minimizer))
}

/// `g*(y) = min_X y(X) − g(X)` for supermodular `g` (one SFM call).
pub fn fenchel_convex_super<G: SetOracle + ?Sized>(g: &G, y: &[f64]) -> Result<(f64, Subset)> {
    let h = FnOracle::new(g.n(), |s: Subset| s.elements().map(|j| y[j]).sum::<f64>() - g.value(s));
    let r = sfm(&h, SfmMethod::Auto)?;
    Ok((r.value, r.minimizer))
}

fn exhaustive_extreme<F: SetOracle + ?Sized>(f: &F, y: &[f64], maximize: bool) -> Result<(f64, Subset)> {
    let n = f.n();
    if n > MAX_ENUM {
        return Err(Error::refused_np_hard("concave Fenchel dual", n, MAX_ENUM));
    }
    let mut best = (f64::NAN, Subset::EMPTY);
    for m in 0..(1u32 << n) {
        let s = Subset(m);
        let v = s.elements().map(|j| y[j]).sum::<f64>() - f.value(s);
        let better = if maximize { v > best.0 + 1e-12 } else { v < best.0 - 1e-12 };
        if best.0.is_nan() || better {
            best = (v, s);
        }
    }
    Ok(best)
}

/// `f_*(y) = min_X y(X) − f(X)` by enumeration.
pub fn fenchel_concave<F: SetOracle + ?Sized>(f: &F, y: &[f64]) -> Result<(f64, Subset)> {
    exhaustive_extreme(f, y, false)
}

/// `g_*(y) = max_X y(X) − g(X)` by enumeration.
pub fn fenchel_concave_super<G: SetOracle + ?Sized>(g: &G, y: &[f64]) -> Result<(f64, Subset)> {
    exhaustive_extreme(g, y, true)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FdtReport {
    pub lhs: f64,
    pub lhs_set: Subset,
    pub trials: usize,
    pub weak_violations: usize,
    /// Largest `dual − LHS` (convex) or `LHS − dual` (concave) seen.
    pub worst_weak_gap: f64,
    pub strong_y: Option<Vec<f64>>,
    pub strong_value: Option<f64>,
    pub strong_attained: bool,
    pub branch: String,
    pub note: Option<String>,
}

fn dual_scale<F, G>(f: &F, g: &G) -> f64
where
    F: SetOracle + ?Sized,
    G: SetOracle + ?Sized,
{
    let n = f.n();
    let v = Subset::full(n);
    let mut s: f64 = 1.0;
    for j in 0..n {
        for o in [f.value(Subset::singleton(j)), g.value(Subset::singleton(j))] {
            s = s.max(o.abs());
        }
        s = s.max((f.value(v) - f.value(v.without(j))).abs());
        s = s.max((g.value(v) - g.value(v.without(j))).abs());
    }
    s
}

/// `min_X f(X) − g(X) = max_y g*(y) − f*(y)`: weak duality on random `y`,
/// strong duality at the separator of `f` and `g + LHS`.
pub fn check_fdt_convex<F, G>(f: &F, g: &G, trials: usize, seed: u64, eps: f64) -> Result<FdtReport>
where
    F: SetOracle + ?Sized,
    G: SetOracle + ?Sized,
{
    let n = f.n();
    ensure_at_most("convex duality check", n, MAX_SEPARATION)?;
    let lhs_r = sfm_brute(&Difference { a: f, b: g })?;
    let lhs = lhs_r.value;
    let scale = dual_scale(f, g);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut violations = 0;
    let mut worst = f64::NEG_INFINITY;
    for _ in 0..trials {
        let y: Vec<f64> = (0..n).map(|_| rng.gen_range(-scale..scale)).collect();
        let dual = fenchel_convex_super(g, &y)?.0 - fenchel_convex(f, &y)?.0;
        worst = worst.max(dual - lhs);
        if dual > lhs + eps {
            violations += 1;
        }
    }
    let shifted = FnOracle::new(n, |s: Subset| g.value(s) + lhs);
    let sep = dst_separate(f, &shifted, eps)?;
    let y = sep.h.0.clone();
    let strong = fenchel_convex_super(g, &y)?.0 - fenchel_convex(f, &y)?.0;
    Ok(FdtReport {
        lhs,
        lhs_set: lhs_r.minimizer,
        trials,
        weak_violations: violations,
        worst_weak_gap: worst,
        strong_y: Some(y),
        strong_value: Some(strong),
        strong_attained: (strong - lhs).abs() <= eps * lhs.abs().max(1.0),
        branch: sep.branch.to_string(),
        note: None,
    })
}

/// `max_X f(X) − g(X) = min_y g_*(y) − f_*(y)`: weak duality on random `y`;
/// strong duality attempted at the concave separator of `f − LHS` and `g`.
pub fn check_fdt_concave<F, G>(f: &F, g: &G, trials: usize, seed: u64, eps: f64) -> Result<FdtReport>
where
    F: SetOracle + ?Sized,
    G: SetOracle + ?Sized,
{
    let n = f.n();
    ensure_at_most("concave duality check", n, MAX_FDT_CONCAVE)?;
    let diff = Difference { a: g, b: f };
    let min_r = sfm_brute(&diff)?;
    let lhs = -min_r.value;
    let scale = dual_scale(f, g);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut violations = 0;
    let mut worst = f64::NEG_INFINITY;
    for _ in 0..trials {
        let y: Vec<f64> = (0..n).map(|_| rng.gen_range(-scale..scale)).collect();
        let dual = fenchel_concave_super(g, &y)?.0 - fenchel_concave(f, &y)?.0;
        worst = worst.max(lhs - dual);
        if dual < lhs - eps {
            violations += 1;
        }
    }
    let lowered = FnOracle::new(n, |s: Subset| f.value(s) - lhs);
    let sep = cdst_separate(&lowered, g, eps)?;
    let y = sep.h.0.clone();
    let strong = fenchel_concave_super(g, &y)?.0 - fenchel_concave(f, &y)?.0;
    let attained = (strong - lhs).abs() <= eps * lhs.abs().max(1.0);
    let note = match sep.validity {
        Validity::Exhaustive => None,
        Validity::ChainOnly { a } => Some(format!(
            "neither f(∅) = g(∅) nor f(V) = g(V) after shifting; separator at {a} is chain-only"
        )),
    };
    Ok(FdtReport {
        lhs,
        lhs_set: min_r.minimizer,
        trials,
        weak_violations: violations,
        worst_weak_gap: worst,
        strong_y: Some(y),
        strong_value: Some(strong),
        strong_attained: attained,
        branch: sep.branch.to_string(),
        note,
    })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MinkowskiReport {
    /// Greedy vertices and subgradients of `f1 + f2` are sums of the parts.
    pub lower_vertices: bool,
    /// Singleton corner of `P^{f1+f2}` is the sum; sums of members are members.
    pub upper_corner: bool,
    /// Supergradients at `∅` and `V` add up; sums of members stay members.
    pub superdiff_extremes: bool,
}

impl MinkowskiReport {
    pub fn passed(&self) -> bool {
        self.lower_vertices && self.upper_corner && self.superdiff_extremes
    }
}

pub fn minkowski_checks(
    f1: &SetFunction,
    f2: &SetFunction,
    trials: usize,
    seed: u64,
    eps: f64,
) -> Result<MinkowskiReport> {
    let n = f1.n();
    ensure_at_most("Minkowski checks", n, MAX_MINKOWSKI)?;
    if f2.n() != n {
        return Err(Error::Domain("functions live on different ground sets".into()));
    }
    let sum = SetFunction::sum(vec![f1.clone(), f2.clone()])?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let close = |a: &ModularVector, b: &ModularVector| a.max_abs_diff(b) <= eps;

    let mut lower = true;
    for _ in 0..trials {
        let sigma = random_permutation(n, &mut rng);
        lower &= close(
            &greedy_vertex(&sum, &sigma),
            &(&greedy_vertex(f1, &sigma) + &greedy_vertex(f2, &sigma)),
        );
        let x = random_subset(n, &mut rng);
        let sigma = random_compatible_permutation(n, x, &mut rng);
        lower &= close(
            &subgradient(&sum, x, &sigma)?,
            &(&subgradient(f1, x, &sigma)? + &subgradient(f2, x, &sigma)?),
        );
    }

    let corner = |f: &SetFunction| ModularVector(f.singles().to_vec());
    let mut upper = close(&corner(&sum), &(&corner(f1) + &corner(f2)));
    let bump = |rng: &mut ChaCha8Rng| ModularVector::from_fn(n, |_| rng.gen_range(0.0..1.0));
    for _ in 0..trials {
        let x1 = &corner(f1) + &bump(&mut rng);
        let x2 = &corner(f2) + &bump(&mut rng);
        upper &= member_upper_poly(&sum, &(&x1 + &x2), eps).verdict;
    }

    let v = Subset::full(n);
    let mut extremes = true;
    for x in [Subset::EMPTY, v] {
        for var in SupergradientVariant::VALID {
            extremes &= close(
                &supergradient(&sum, x, var),
                &(&supergradient(f1, x, var) + &supergradient(f2, x, var)),
            );
        }
    }
    let tops = |f: &SetFunction| ModularVector::from_fn(n, |j| f.top_marginal(j));
    for _ in 0..trials {
        let x1 = &tops(f1) - &bump(&mut rng);
        let x2 = &tops(f2) - &bump(&mut rng);
        extremes &= member_superdiff_full(&sum, &(&x1 + &x2), eps)?.verdict;
    }
    Ok(MinkowskiReport {
        lower_vertices: lower,
        upper_corner: upper,
        superdiff_extremes: extremes,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testutil::{s, three_element};

    fn table_g(f: impl Fn(Subset) -> f64) -> SetFunction {
        SetFunction::from_fn(3, f).unwrap()
    }

    #[test]
    fn convex_separation_three_element() {
        let f = three_element();
        let g = table_g(|y| (y.len() as f64 - 1.0).max(0.0));
        let sep = dst_separate(&f, &g, 1e-8).unwrap();
        assert_eq!(sep.h.0, vec![1.0, 1.5, 0.5]);
        assert_eq!(sep.offset, 0.0);
        assert!(check_sandwich(&g, &sep, &f, 1e-8).unwrap().verdict);

        let m = SetFunction::modular(vec![1.0, -2.0, 0.5]).unwrap();
        let sep = dst_separate(&m, &m, 1e-8).unwrap();
        assert_eq!(sep.h.0, vec![1.0, -2.0, 0.5]);

        let bad = table_g(|y| 2.0 * y.len() as f64);
        assert!(matches!(dst_separate(&f, &bad, 1e-8), Err(Error::Premise(_))));
    }

    #[test]
    fn integral_separation() {
        let f = SetFunction::from_fn(3, |y| (2.0 * three_element().value(y)).round()).unwrap();
        let g = table_g(|y| (y.len() as f64 - 1.0).max(0.0));
        let sep = dst_separate(&f, &g, 1e-8).unwrap();
        assert!(sep.h.is_integral(1e-9));
        assert!(check_sandwich(&g, &sep, &f, 1e-8).unwrap().verdict);
    }

    #[test]
    fn separation_lp_fallback() {
        let f = three_element();
        let g = table_g(|y| (y.len() as f64 - 1.0).max(0.0));
        let sep = separation_lp(&g, &f, Side::Convex).unwrap();
        assert!(check_sandwich(&g, &sep, &f, 1e-8).unwrap().verdict);
    }

    #[test]
    fn concave_separation_three_element() {
        let f = three_element();
        let g = table_g(|y| 2.0 * y.len() as f64);
        let sep = cdst_separate(&f, &g, 1e-8).unwrap();
        assert_eq!(sep.h.0, vec![1.0, 2.0, 2.0]);
        assert_eq!(sep.offset, 0.0);
        assert!(check_sandwich(&f, &sep, &g, 1e-8).unwrap().verdict);

        let sep = gcdst_at(&f, s(&[2]));
        let vals: Vec<f64> = [s(&[]), s(&[2]), s(&[1, 2]), s(&[2, 3]), s(&[1, 2, 3])]
            .iter()
            .map(|&y| sep.value(y))
            .collect();
        assert_eq!(vals, vec![0.0, 2.0, 2.5, 3.0, 3.5]);
        assert!(check_sandwich_chain(&f, &sep, &g, s(&[2]), 1e-8).unwrap().verdict);
    }

    #[test]
    fn concave_separation_branches() {
        // f(∅) ≠ g(∅) but f(V) = g(V).
        let f = three_element();
        let g = FnOracle::new(3, |y: Subset| 2.3 + ModularVector(vec![0.0, 0.2, 0.5]).value(y));
        let sep = cdst_separate(&f, &g, 1e-8).unwrap();
        assert_eq!(sep.branch, "full");
        assert!((sep.offset - 2.3).abs() < 1e-12);
        assert!(check_sandwich(&f, &sep, &g, 1e-8).unwrap().verdict);
    }

    #[test]
    fn fenchel_duals() {
        let f = three_element();
        let (v, _) = fenchel_convex(&f, &[1.0, 1.0, 1.0]).unwrap();
        assert_eq!(v, 0.0);
        assert_eq!(fenchel_convex(&f, &[0.0; 3]).unwrap().0, 0.0);
        let m = SetFunction::modular(vec![1.0, 2.0, -1.0]).unwrap();
        let y = [2.0, 1.0, 0.0];
        assert!((fenchel_convex(&m, &y).unwrap().0 - 2.0).abs() < 1e-12);

        let (v, set) = fenchel_concave(&f, &[1.0, 1.0, 1.0]).unwrap();
        assert_eq!((v, set), (-1.0, s(&[2])));
        let zero = SetFunction::modular(vec![0.0; 3]).unwrap();
        assert_eq!(fenchel_concave(&zero, &[1.0, -2.0, -0.5]).unwrap().0, -2.5);
    }

    #[test]
    fn fdt_convex_three_element() {
        let f = three_element();
        let g = table_g(|y| (y.len() as f64 - 1.0).max(0.0));
        let r = check_fdt_convex(&f, &g, 200, 1, 1e-8).unwrap();
        assert_eq!(r.lhs, 0.0);
        assert_eq!(r.weak_violations, 0);
        assert!(r.strong_attained);
        assert_eq!(r.strong_y.unwrap(), vec![1.0, 1.5, 0.5]);
    }

    #[test]
    fn fdt_concave_three_element() {
        let f = three_element();
        let g = table_g(|y| 2.0 * y.len() as f64);
        let r = check_fdt_concave(&f, &g, 200, 1, 1e-8).unwrap();
        assert_eq!(r.lhs, 0.0);
        assert_eq!(r.weak_violations, 0);
        assert!(r.strong_attained);
        let m = SetFunction::modular(vec![0.5, -1.0, 2.0]).unwrap();
        let r = check_fdt_concave(&m, &m, 50, 2, 1e-8).unwrap();
        assert!(r.strong_attained && r.lhs == 0.0);
    }

    #[test]
    fn minkowski_three_element() {
        let f = three_element();
        let r = minkowski_checks(&f, &f, 30, 3, 1e-9).unwrap();
        assert!(r.passed());
        let zero = SetFunction::modular(vec![0.0; 3]).unwrap();
        assert!(minkowski_checks(&f, &zero, 30, 3, 1e-9).unwrap().passed());
    }
}
