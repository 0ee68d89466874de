//! Continuous extensions of set functions to the cube `[0,1]^n`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::checks::check_monotone;
use crate::error::{ensure_at_most, Error, Result};
use crate::function::{FnOracle, SetFunction};
use crate::minimize::{sfm, SfmMethod};
use crate::oracle::lp::{lp_solve_dense, LinearProgram, Sense};
use crate::set::{Permutation, Subset, MAX_ENUM};
use crate::upper::{supergradient, SupergradientVariant};

pub const MAX_CEX: usize = 12;
pub const MAX_EXHAUSTIVE_EXT: usize = 16;
pub const MAX_MULTILINEAR: usize = 20;

/// Weights `λ_S` on sets, with `Σ λ_S = 1` and `Σ λ_S 1_S = w`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Distribution {
    pub support: Vec<(Subset, f64)>,
}

impl Distribution {
    /// Expected value of `f` under the distribution.
    pub fn expectation(&self, f: &SetFunction) -> f64 {
        self.support.iter().map(|(s, l)| l * f.value(*s)).sum()
    }

    pub fn total(&self) -> f64 {
        self.support.iter().map(|(_, l)| l).sum()
    }

    pub fn marginals(&self, n: usize) -> Vec<f64> {
        let mut w = vec![0.0; n];
        for (s, l) in &self.support {
            for j in s.elements() {
                w[j] += l;
            }
        }
        w
    }
}

pub(crate) fn check_cube(n: usize, w: &[f64]) -> Result<()> {
    if w.len() != n {
        return Err(Error::Domain(format!("point has {} coordinates, expected {n}", w.len())));
    }
    if let Some((i, v)) = w.iter().enumerate().find(|(_, v)| !(0.0..=1.0).contains(*v)) {
        return Err(Error::Domain(format!("coordinate {i} = {v} lies outside [0, 1]")));
    }
    Ok(())
}

/// Lovász extension with its chain distribution.
pub fn lovasz(f: &SetFunction, w: &[f64]) -> Result<(f64, Distribution)> {
    check_cube(f.n(), w)?;
    let sigma = Permutation::descending(w);
    let order = sigma.order();
    let mut value = 0.0;
    let mut support = Vec::new();
    let mut s = Subset::EMPTY;
    let mut prev = 0.0;
    let top = order.first().map_or(0.0, |&j| w[j]);
    if 1.0 - top > 0.0 {
        support.push((Subset::EMPTY, 1.0 - top));
    }
    for (i, &j) in order.iter().enumerate() {
        s = s.with(j);
        let cur = f.value(s);
        value += w[j] * (cur - prev);
        prev = cur;
        let next = order.get(i + 1).map_or(0.0, |&k| w[k]);
        if w[j] - next > 0.0 {
            support.push((s, w[j] - next));
        }
    }
    Ok((value, Distribution { support }))
}

/// Exact concave extension: `max Σ λ_S f(S)` over distributions with marginals `w`.
pub fn concave_ext_exact(f: &SetFunction, w: &[f64]) -> Result<(f64, Distribution)> {
    let n = f.n();
    ensure_at_most("exact concave extension", n, MAX_CEX)?;
    if w.len() != n {
        return Err(Error::Domain(format!("point has {} coordinates, expected {n}", w.len())));
    }
    let mut rhs = w.to_vec();
    rhs.push(1.0);
    let mut lp = LinearProgram::new(rhs);
    for s in f.ground().subsets()? {
        let mut col: Vec<f64> = (0..n).map(|j| if s.contains(j) { 1.0 } else { 0.0 }).collect();
        col.push(1.0);
        lp.push(f.value(s), col);
    }
    let sol = lp_solve_dense(&lp, Sense::Max)?;
    let support = sol
        .basis
        .iter()
        .filter(|&&c| sol.x[c] > 1e-12)
        .map(|&c| (Subset(c as u32), sol.x[c]))
        .collect();
    Ok((sol.value, Distribution { support }))
}

/// `min_Y ⟨w, g_Y⟩ + f(Y) − g_Y(Y)` for a supergradient family `g`.
///
/// The bar objective is `f` plus a modular term, so it goes through SFM;
/// the grow and shrink objectives are minimized by enumeration.
pub fn concave_ext_super(f: &SetFunction, w: &[f64], v: SupergradientVariant) -> Result<(f64, Subset)> {
    let n = f.n();
    check_cube(n, w)?;
    let objective = |y: Subset| -> f64 {
        let g = supergradient(f, y, v);
        g.dot(w) + f.value(y) - g.value(y)
    };
    match v {
        SupergradientVariant::Bar => {
            ensure_at_most("bar concave extension", n, MAX_ENUM)?;
            let constant: f64 = (0..n).map(|j| w[j] * f.single(j)).sum();
            let weights: Vec<f64> = (0..n)
                .map(|j| (w[j] - 1.0) * f.top_marginal(j) - w[j] * f.single(j))
                .collect();
            let g = FnOracle::new(n, |y: Subset| {
                f.value(y) + y.elements().map(|j| weights[j]).sum::<f64>()
            });
            let r = sfm(&g, SfmMethod::Auto)?;
            Ok((objective(r.minimizer).min(r.value + constant), r.minimizer))
        }
        SupergradientVariant::Grow | SupergradientVariant::Shrink => {
            ensure_at_most("grow/shrink concave extension", n, MAX_EXHAUSTIVE_EXT)?;
            let mut best = (f64::INFINITY, Subset::EMPTY);
            for y in f.ground().subsets()? {
                let val = objective(y);
                if val < best.0 - 1e-12 {
                    best = (val, y);
                }
            }
            Ok(best)
        }
        SupergradientVariant::Tilde => Err(Error::Precondition(
            "the tilde vector does not give a concave upper bound".into(),
        )),
    }
}

/// `min_Y f(Y) + Σ_{j∉Y} w_j f(j|Y)`, for monotone `f`.
pub fn concave_ext_vondrak(f: &SetFunction, w: &[f64], eps: f64) -> Result<(f64, Subset)> {
    let n = f.n();
    ensure_at_most("Vondrák extension", n, MAX_EXHAUSTIVE_EXT)?;
    check_cube(n, w)?;
    let mono = check_monotone(f, eps)?;
    if !mono.verdict {
        return Err(Error::Precondition("the Vondrák extension needs a monotone function".into()));
    }
    let mut best = (f64::INFINITY, Subset::EMPTY);
    for y in f.ground().subsets()? {
        let fy = f.value(y);
        let val = fy
            + y.complement(n)
                .elements()
                .map(|j| w[j] * (f.value(y.with(j)) - fy))
                .sum::<f64>();
        if val < best.0 - 1e-12 {
            best = (val, y);
        }
    }
    Ok(best)
}

/// `Σ_S f(S) Π_{i∈S} x_i Π_{i∉S} (1 − x_i)`.
pub fn multilinear_exact(f: &SetFunction, x: &[f64]) -> Result<f64> {
    let n = f.n();
    ensure_at_most("exact multilinear extension", n, MAX_MULTILINEAR)?;
    check_cube(n, x)?;
    let mut total = 0.0;
    for s in f.ground().subsets()? {
        let p: f64 = (0..n)
            .map(|i| if s.contains(i) { x[i] } else { 1.0 - x[i] })
            .product();
        if p != 0.0 {
            total += p * f.value(s);
        }
    }
    Ok(total)
}

/// Monte-Carlo estimate of the multilinear extension and its standard error.
pub fn multilinear_sample(f: &SetFunction, x: &[f64], m: usize, seed: u64) -> Result<(f64, f64)> {
    let n = f.n();
    check_cube(n, x)?;
    if m == 0 {
        return Err(Error::Domain("need at least one sample".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (mut sum, mut sq) = (0.0, 0.0);
    for _ in 0..m {
        let s = Subset::from_elements((0..n).filter(|&i| rng.gen::<f64>() < x[i]));
        let v = f.value(s);
        sum += v;
        sq += v * v;
    }
    let mean = sum / m as f64;
    let stderr = if m > 1 {
        let var = ((sq - m as f64 * mean * mean) / (m as f64 - 1.0)).max(0.0);
        (var / m as f64).sqrt()
    } else {
        0.0
    };
    Ok((mean, stderr))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testutil::{s, three_element};
    use SupergradientVariant::*;

    const HALF: [f64; 3] = [0.5, 0.5, 0.5];

    #[test]
    fn lovasz_on_three_element() {
        let f = three_element();
        let (v, d) = lovasz(&f, &[0.5, 1.0, 0.0]).unwrap();
        assert!((v - 2.25).abs() < 1e-12);
        assert!((d.total() - 1.0).abs() < 1e-12);
        assert!((d.expectation(&f) - v).abs() < 1e-12);
        assert_eq!(lovasz(&f, &[1.0, 1.0, 0.0]).unwrap().0, 2.5);
        assert!(lovasz(&f, &[1.5, 0.0, 0.0]).is_err());
    }

    #[test]
    fn concave_extension_lp() {
        let f = three_element();
        let (v, d) = concave_ext_exact(&f, &HALF).unwrap();
        assert!((v - 2.4).abs() < 1e-9);
        assert!(d.support.len() <= 4);
        for (a, b) in d.marginals(3).iter().zip(HALF) {
            assert!((a - b).abs() < 1e-9);
        }
        assert!((concave_ext_exact(&f, &[1.0, 0.0, 1.0]).unwrap().0 - 2.8).abs() < 1e-9);
        assert_eq!(concave_ext_exact(&f, &[2.0, 0.0, 0.0]), Err(Error::Infeasible));
    }

    #[test]
    fn supergradient_extensions() {
        let f = three_element();
        let (v, y) = concave_ext_super(&f, &HALF, Bar).unwrap();
        assert!((v - 2.5).abs() < 1e-12);
        assert_eq!(y, Subset::EMPTY);
        for var in [Grow, Shrink, Bar] {
            let (v, _) = concave_ext_super(&f, &HALF, var).unwrap();
            assert!(v >= 2.4 - 1e-9);
            let (v1, _) = concave_ext_super(&f, &[1.0, 0.0, 1.0], var).unwrap();
            assert!((v1 - 2.8).abs() < 1e-12);
        }
    }

    #[test]
    fn vondrak_extension() {
        let f = three_element();
        assert_eq!(concave_ext_vondrak(&f, &[1.0; 3], 1e-8).unwrap().0, 3.0);
        assert!(concave_ext_vondrak(&f, &HALF, 1e-8).unwrap().0 >= 2.4 - 1e-9);
        assert_eq!(concave_ext_vondrak(&f, &[0.0; 3], 1e-8).unwrap(), (0.0, Subset::EMPTY));
        let cut = SetFunction::graph_cut(vec![vec![0.0, 1.0], vec![1.0, 0.0]]).unwrap();
        assert!(concave_ext_vondrak(&cut, &[0.5, 0.5], 1e-8).is_err());
    }

    #[test]
    fn multilinear() {
        let f = three_element();
        assert!((multilinear_exact(&f, &HALF).unwrap() - 2.0375).abs() < 1e-12);
        assert_eq!(multilinear_exact(&f, &[0.0, 1.0, 1.0]).unwrap(), 3.0);
        let (est, se) = multilinear_sample(&f, &HALF, 100_000, 42).unwrap();
        assert!((est - 2.0375).abs() <= 4.0 * se);
        assert_eq!(multilinear_sample(&f, &[1.0, 1.0, 0.0], 50, 1).unwrap(), (2.5, 0.0));
        let zero = SetFunction::modular(vec![0.0; 3]).unwrap();
        assert_eq!(multilinear_sample(&zero, &HALF, 10, 1).unwrap().0, 0.0);
        let _ = s(&[1]);
    }
}
