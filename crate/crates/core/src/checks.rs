//! Global structural checks over all subsets.

use crate::certificate::{Certificate, Witness};
use crate::error::{ensure_at_most, Result};
use crate::function::SetFunction;
use crate::set::{Subset, MAX_PAIR_ENUM};

/// Ceiling for single-subset structural scans.
pub const MAX_CHECK: usize = 20;

/// Diminishing returns `f(j|S) ≥ f(j|S∪k)` for all `S`, `j, k ∉ S`.
pub fn check_submodular(f: &SetFunction, eps: f64) -> Result<Certificate> {
    ensure_at_most("submodularity check", f.n(), MAX_CHECK)?;
    let t = f.table_values()?;
    let n = f.n();
    for s in 0..t.len() as u32 {
        for j in 0..n {
            if s >> j & 1 == 1 {
                continue;
            }
            let gain = t[(s | 1 << j) as usize] - t[s as usize];
            for k in 0..n {
                if k == j || s >> k & 1 == 1 {
                    continue;
                }
                let sk = s | 1 << k;
                let gain_k = t[(sk | 1 << j) as usize] - t[sk as usize];
                if gain < gain_k - eps {
                    return Ok(Certificate::fail(Witness::Triple {
                        j,
                        s: Subset(s),
                        k,
                    }));
                }
            }
        }
    }
    Ok(Certificate::pass())
}

/// Supermodularity, i.e. submodularity of `-f`.
pub fn check_supermodular(f: &SetFunction, eps: f64) -> Result<Certificate> {
    check_submodular(&SetFunction::scaled(-1.0, f.clone())?, eps)
}

/// All singleton marginals `f(j|S) ≥ -ε`.
pub fn check_monotone(f: &SetFunction, eps: f64) -> Result<Certificate> {
    ensure_at_most("monotonicity check", f.n(), MAX_CHECK)?;
    let t = f.table_values()?;
    for s in 0..t.len() as u32 {
        for j in 0..f.n() {
            if s >> j & 1 == 0 && t[(s | 1 << j) as usize] - t[s as usize] < -eps {
                return Ok(Certificate::fail(Witness::Triple {
                    j,
                    s: Subset(s),
                    k: j,
                }));
            }
        }
    }
    Ok(Certificate::pass())
}

/// `f(X) = f(V∖X)` for all `X`.
pub fn check_symmetric(f: &SetFunction, eps: f64) -> Result<Certificate> {
    ensure_at_most("symmetry check", f.n(), MAX_CHECK)?;
    let t = f.table_values()?;
    let full = (t.len() - 1) as u32;
    for s in 0..t.len() as u32 {
        if (t[s as usize] - t[(full & !s) as usize]).abs() > eps {
            return Ok(Certificate::fail_set(Subset(s)));
        }
    }
    Ok(Certificate::pass())
}

/// Exchange property of M♮-concave functions on `2^V`: for all `X, Y` and
/// `i ∈ X∖Y`, either `μ(X)+μ(Y) ≤ μ(X−i)+μ(Y+i)` or some `j ∈ Y∖X` has
/// `μ(X)+μ(Y) ≤ μ(X−i+j)+μ(Y+i−j)`.
pub fn check_mnatural_concave(f: &SetFunction, eps: f64) -> Result<Certificate> {
    ensure_at_most("M-natural exchange check", f.n(), MAX_PAIR_ENUM)?;
    let t = f.table_values()?;
    let size = t.len() as u32;
    for x in 0..size {
        for y in 0..size {
            let lhs = t[x as usize] + t[y as usize];
            let x_only = Subset(x & !y);
            let y_only = Subset(y & !x);
            for i in x_only.elements() {
                let bi = 1u32 << i;
                if lhs <= t[(x & !bi) as usize] + t[(y | bi) as usize] + eps {
                    continue;
                }
                let exchanged = y_only.elements().any(|j| {
                    let bj = 1u32 << j;
                    lhs <= t[((x & !bi) | bj) as usize] + t[((y | bi) & !bj) as usize] + eps
                });
                if !exchanged {
                    return Ok(Certificate::fail(Witness::Exchange {
                        x: Subset(x),
                        y: Subset(y),
                        i,
                    }));
                }
            }
        }
    }
    Ok(Certificate::pass())
}
