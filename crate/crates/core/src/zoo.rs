//! Named instances and seeded random generators for the function zoo.

use rand::Rng;

use crate::function::{Curve, SetFunction};
use crate::modular::ModularVector;
use crate::set::Subset;

/// The 3-element illustrative instance `[0, 1, 2, 2.5, 2, 2.8, 3, 3]` (by mask).
pub fn three_element() -> SetFunction {
    SetFunction::table(3, vec![0.0, 1.0, 2.0, 2.5, 2.0, 2.8, 3.0, 3.0]).expect("valid table")
}

/// The 2-element instance `f(1) = 1, f(2) = 2, f(12) = 2.5`.
pub fn two_element() -> SetFunction {
    SetFunction::table(2, vec![0.0, 1.0, 2.0, 2.5]).expect("valid table")
}

/// Subset from one-based element labels.
pub fn one_based(elems: &[usize]) -> Subset {
    Subset::from_elements(elems.iter().map(|&e| e - 1))
}

pub fn random_concave_modular<R: Rng>(n: usize, rng: &mut R) -> SetFunction {
    let weights: Vec<f64> = (0..n).map(|_| rng.gen_range(0.05..1.0)).collect();
    let curve = match rng.gen_range(0..3) {
        0 => Curve::Sqrt,
        1 => Curve::Log1p,
        _ => Curve::Cap(rng.gen_range(0.3..(0.5 * n as f64).max(0.6))),
    };
    SetFunction::concave_over_modular(weights, curve).expect("valid weights")
}

pub fn random_coverage<R: Rng>(n: usize, rng: &mut R) -> SetFunction {
    let items = 2 * n + 1;
    let areas: Vec<f64> = (0..items).map(|_| rng.gen_range(0.1..1.0)).collect();
    let covers = (0..n)
        .map(|_| (0..items).filter(|_| rng.gen_bool(0.3)).collect())
        .collect();
    SetFunction::coverage(covers, areas).expect("valid coverage")
}

pub fn random_graph_cut<R: Rng>(n: usize, rng: &mut R) -> SetFunction {
    let mut w = vec![vec![0.0; n]; n];
    for i in 0..n {
        for j in (i + 1)..n {
            if rng.gen_bool(0.6) {
                let v = rng.gen_range(0.1..1.0);
                w[i][j] = v;
                w[j][i] = v;
            }
        }
    }
    SetFunction::graph_cut(w).expect("valid cut")
}

pub fn random_matroid_rank<R: Rng>(n: usize, rng: &mut R) -> SetFunction {
    if rng.gen_bool(0.5) {
        SetFunction::uniform_matroid_rank(n, rng.gen_range(1..=n)).expect("valid matroid")
    } else {
        let (blocks, caps) = random_partition(n, rng);
        SetFunction::partition_matroid_rank(n, blocks, caps).expect("valid matroid")
    }
}

/// A random partition of `0..n` into blocks with caps in `1..=|block|`.
pub fn random_partition<R: Rng>(n: usize, rng: &mut R) -> (Vec<Vec<usize>>, Vec<usize>) {
    let nblocks = rng.gen_range(1..=n.clamp(1, 3));
    let mut blocks = vec![Vec::new(); nblocks];
    for j in 0..n {
        blocks[rng.gen_range(0..nblocks)].push(j);
    }
    blocks.retain(|b| !b.is_empty());
    let caps = blocks.iter().map(|b| rng.gen_range(1..=b.len())).collect();
    (blocks, caps)
}

/// A monotone submodular instance: one zoo kind, or a positive combination of two.
pub fn random_monotone<R: Rng>(n: usize, rng: &mut R) -> SetFunction {
    let pick = |rng: &mut R| match rng.gen_range(0..3) {
        0 => random_concave_modular(n, rng),
        1 => random_coverage(n, rng),
        _ => random_matroid_rank(n, rng),
    };
    if rng.gen_bool(0.4) {
        let a = pick(rng);
        let b = pick(rng);
        let s = rng.gen_range(0.2..2.0);
        SetFunction::sum(vec![a, SetFunction::scaled(s, b).expect("finite")]).expect("same ground")
    } else {
        pick(rng)
    }
}

/// A (generally) non-monotone submodular instance: submodular part plus a signed modular term.
pub fn random_nonmonotone<R: Rng>(n: usize, rng: &mut R) -> SetFunction {
    let base = if rng.gen_bool(0.5) {
        random_graph_cut(n, rng)
    } else {
        random_monotone(n, rng)
    };
    let scale = base.singles().iter().cloned().fold(0.0, f64::max).max(0.5);
    let m: Vec<f64> = (0..n).map(|_| rng.gen_range(-scale..0.5 * scale)).collect();
    SetFunction::sum(vec![base, SetFunction::modular(m).expect("finite")]).expect("same ground")
}

/// A non-negative, non-monotone submodular instance: a cut plus a small
/// monotone part and a small signed modular term, redrawn until it qualifies.
pub fn random_nonneg_nonmonotone<R: Rng>(n: usize, rng: &mut R) -> SetFunction {
    assert!((2..=16).contains(&n), "needs 2 ≤ n ≤ 16");
    loop {
        let cut = random_graph_cut(n, rng);
        let s = rng.gen_range(0.0..0.5);
        let mono = SetFunction::scaled(s, random_monotone(n, rng)).expect("finite");
        let m: Vec<f64> = (0..n).map(|_| rng.gen_range(-0.2..0.2)).collect();
        let f = SetFunction::sum(vec![cut, mono, SetFunction::modular(m).expect("finite")])
            .expect("same ground")
            .tabulate()
            .expect("small ground set");
        let subsets = || (0..1u32 << n).map(Subset);
        let nonneg = subsets().all(|x| f.value(x) >= 0.0);
        let nonmono = subsets().any(|x| x.complement(n).elements().any(|j| f.marginal(j, x) < -1e-6));
        if nonneg && nonmono {
            return f;
        }
    }
}

/// Any submodular zoo instance.
pub fn random_submodular<R: Rng>(n: usize, rng: &mut R) -> SetFunction {
    match rng.gen_range(0..4) {
        0 => random_graph_cut(n, rng),
        1 | 2 => random_monotone(n, rng),
        _ => random_nonmonotone(n, rng),
    }
}

/// A non-negative supermodular function `φ(w(X))` with `φ(t) = t²`.
pub fn random_supermodular<R: Rng>(n: usize, rng: &mut R) -> SetFunction {
    let w: Vec<f64> = (0..n).map(|_| rng.gen_range(0.0..0.6)).collect();
    let table = (0..(1u32 << n))
        .map(|m| {
            let t: f64 = Subset(m).elements().map(|j| w[j]).sum();
            t * t
        })
        .collect();
    SetFunction::table(n, table).expect("valid table")
}

/// A supermodular `g ≤ f`: a modular minorant of `f` minus a monotone submodular term.
pub fn random_supermodular_below<R: Rng>(f: &SetFunction, rng: &mut R) -> SetFunction {
    let n = f.n();
    let mut order: Vec<usize> = (0..n).collect();
    shuffle(&mut order, rng);
    let perm = crate::set::Permutation::new(order).expect("permutation");
    let h: ModularVector = crate::lower::greedy_vertex(f, &perm);
    let k = random_monotone(n, rng);
    let s = rng.gen_range(0.0..1.0);
    SetFunction::sum(vec![
        SetFunction::modular(h.0).expect("finite"),
        SetFunction::scaled(-s, k).expect("finite"),
    ])
    .expect("same ground")
}

/// A supermodular `g ≥ f` with `g(∅) = f(∅) = 0`: singleton corner plus a convex term.
pub fn random_supermodular_above<R: Rng>(f: &SetFunction, rng: &mut R) -> SetFunction {
    let corner = SetFunction::modular(f.singles().to_vec()).expect("finite");
    let extra = random_supermodular(f.n(), rng);
    SetFunction::sum(vec![corner, extra]).expect("same ground")
}

pub fn shuffle<T, R: Rng>(v: &mut [T], rng: &mut R) {
    use rand::seq::SliceRandom;
    v.shuffle(rng);
}

pub fn random_permutation<R: Rng>(n: usize, rng: &mut R) -> crate::set::Permutation {
    let mut order: Vec<usize> = (0..n).collect();
    shuffle(&mut order, rng);
    crate::set::Permutation::new(order).expect("permutation")
}

/// A random permutation with `x` occupying the first `|x|` positions.
pub fn random_compatible_permutation<R: Rng>(n: usize, x: Subset, rng: &mut R) -> crate::set::Permutation {
    let mut head: Vec<usize> = x.elements().collect();
    let mut tail: Vec<usize> = (0..n).filter(|&j| !x.contains(j)).collect();
    shuffle(&mut head, rng);
    shuffle(&mut tail, rng);
    head.extend(tail);
    crate::set::Permutation::new(head).expect("permutation")
}

pub fn random_subset<R: Rng>(n: usize, rng: &mut R) -> Subset {
    Subset(rng.gen_range(0..(1u32 << n)))
}

pub fn random_cube_point<R: Rng>(n: usize, rng: &mut R) -> Vec<f64> {
    (0..n).map(|_| rng.gen_range(0.0..=1.0)).collect()
}
