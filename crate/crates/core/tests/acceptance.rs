//! End-to-end acceptance sweeps. Each criterion prints one PASS/FAIL line;
//! the test fails if any criterion fails.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use subpoly_core::duality::{
    cdst_separate, check_fdt_concave, check_fdt_convex, check_sandwich, check_sandwich_chain,
    dst_separate, minkowski_checks, Validity,
};
use subpoly_core::extensions::{concave_ext_exact, concave_ext_super, lovasz, multilinear_exact};
use subpoly_core::function::{Curve, FnOracle};
use subpoly_core::lower::{gen_lower_vertices_small, lp_max_lower};
use subpoly_core::maximize::{certify_global_max, local_max, max_brute, max_unconstrained_third, Constraint};
use subpoly_core::minimize::{sfm_brute, sfm_minnorm};
use subpoly_core::upper::{
    gen_upper_vertices_small, member_superdiff, mnatural_superdiff_equals_delta22, superdiff_vertices_small,
    supergradient, SupergradientVariant,
};
use subpoly_core::verify::{run_suite, Suite, VerifyOptions};
use subpoly_core::zoo::{
    one_based, random_cube_point, random_monotone, random_nonneg_nonmonotone, random_partition,
    random_submodular, random_supermodular_above, random_supermodular_below, three_element, two_element,
};
use subpoly_core::{Certificate, Result, SetFunction, Subset, Witness};

type Verdict = Result<(bool, String)>;

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn close(a: &[f64], b: &[f64], tol: f64) -> bool {
    a.len() == b.len() && a.iter().zip(b).all(|(x, y)| (x - y).abs() <= tol)
}

fn fails(what: impl Into<String>) -> Verdict {
    Ok((false, what.into()))
}

fn three_element_supergradients() -> Verdict {
    use SupergradientVariant::*;
    let f = three_element();
    let x = one_based(&[1]);
    let want = [
        (Grow, [1.0, 2.0, 2.0]),
        (Shrink, [0.0, 1.5, 1.8]),
        (Bar, [0.0, 2.0, 2.0]),
        (Tilde, [1.0, 1.5, 1.8]),
    ];
    for (v, w) in want {
        let g = supergradient(&f, x, v);
        if !close(&g.0, &w, 1e-8) {
            return fails(format!("{v:?} = {:?}", g.0));
        }
        let c = member_superdiff(&f, x, &g, 1e-8)?;
        let ok = if v == Tilde {
            !c.verdict && c.witness_set() == Some(one_based(&[2]))
        } else {
            c.verdict
        };
        if !ok {
            return fails(format!("{v:?} membership: {c:?}"));
        }
    }
    Ok((true, "four supergradients exact; tilde rejected at {2}".into()))
}

fn two_element_vertices() -> Verdict {
    let f = two_element();
    let upper: Vec<(Vec<f64>, f64)> = gen_upper_vertices_small(&f, 1e-9)?
        .into_iter()
        .map(|p| (p.x.0, p.c))
        .collect();
    let mut want_upper: Vec<(Vec<f64>, f64)> = vec![(vec![1.0, 2.0], 0.0), (vec![0.5, 1.5], 0.5)];
    want_upper.sort_by(|a, b| a.0[0].total_cmp(&b.0[0]));
    let mut got_upper = upper.clone();
    got_upper.sort_by(|a, b| a.0[0].total_cmp(&b.0[0]));
    let same = |g: &[(Vec<f64>, f64)], w: &[(Vec<f64>, f64)]| {
        g.len() == w.len()
            && g.iter().zip(w).all(|(a, b)| close(&a.0, &b.0, 1e-9) && (a.1 - b.1).abs() <= 1e-9)
    };
    if !same(&got_upper, &want_upper) {
        return fails(format!("generalized upper vertices {upper:?}"));
    }
    let mut lower: Vec<(Vec<f64>, f64)> = gen_lower_vertices_small(&f, 1e-9)?
        .into_iter()
        .map(|p| (p.x.0, p.c))
        .collect();
    lower.sort_by(|a, b| a.0[0].total_cmp(&b.0[0]));
    if !same(&lower, &[(vec![0.5, 2.0], 0.0), (vec![1.0, 1.5], 0.0)]) {
        return fails(format!("generalized lower vertices {lower:?}"));
    }
    let mut sup: Vec<Vec<f64>> = superdiff_vertices_small(&f, one_based(&[1]), 1e-9)?
        .into_iter()
        .map(|v| v.0)
        .collect();
    sup.sort_by(|a, b| a[0].total_cmp(&b[0]));
    if sup.len() != 2 || !close(&sup[0], &[0.5, 1.5], 1e-9) || !close(&sup[1], &[1.0, 2.0], 1e-9) {
        return fails(format!("superdifferential vertices at {{1}}: {sup:?}"));
    }
    Ok((true, "upper, lower and superdifferential vertices recovered".into()))
}

fn greedy_lovasz_identity() -> Verdict {
    let mut r = rng(3);
    let mut worst: f64 = 0.0;
    for i in 0..50 {
        let n = 2 + i % 9;
        let f = random_submodular(n, &mut r);
        for _ in 0..500 {
            let w = random_cube_point(n, &mut r);
            let a = lovasz(&f, &w)?.0;
            let b = lp_max_lower(&f, &w)?.0;
            worst = worst.max((a - b).abs());
        }
        let mut best = f64::INFINITY;
        for x in f.ground().subsets()? {
            let w: Vec<f64> = (0..n).map(|j| if x.contains(j) { 1.0 } else { 0.0 }).collect();
            best = best.min(lovasz(&f, &w)?.0);
        }
        let min = sfm_brute(&f)?.value;
        if best != min {
            return fails(format!("instance {i}: Lovász vertex min {best} vs SFM {min}"));
        }
    }
    if worst > 1e-9 {
        return fails(format!("largest Lovász/greedy gap {worst:e}"));
    }
    Ok((true, format!("largest Lovász/greedy gap {worst:e} over 25000 points")))
}

fn extension_sandwich() -> Verdict {
    let f = three_element();
    let half = [0.5; 3];
    let cex = concave_ext_exact(&f, &half)?.0;
    let bar = concave_ext_super(&f, &half, SupergradientVariant::Bar)?.0;
    if (cex - 2.4).abs() > 1e-9 || (bar - 2.5).abs() > 1e-9 {
        return fails(format!("three-element midpoint: cex {cex}, bar {bar}"));
    }
    let mut r = rng(4);
    let slack = 1e-7;
    let bound = 1.0 - (-1.0f64).exp();
    for i in 0..16 {
        let n = 2 + i % 7;
        let monotone = i % 2 == 0;
        let f = if monotone {
            random_monotone(n, &mut r)
        } else {
            random_submodular(n, &mut r)
        };
        for _ in 0..500 {
            let w = random_cube_point(n, &mut r);
            let lex = lovasz(&f, &w)?.0;
            let mex = multilinear_exact(&f, &w)?;
            let cex = concave_ext_exact(&f, &w)?.0;
            if lex > mex + slack || mex > cex + slack || (monotone && mex < bound * cex - slack) {
                return fails(format!("instance {i} at {w:?}: {lex} / {mex} / {cex}"));
            }
        }
    }
    Ok((true, "cex 2.4 and bar 2.5 at the midpoint; 16 × 500 points ordered".into()))
}

fn superdiff_structure() -> Verdict {
    let mut r = rng(5);
    let opts = VerifyOptions {
        trials: 500,
        seed: 5,
        ..VerifyOptions::default()
    };
    let wanted = ["nonempty", "inner_nesting", "outer_hierarchy"];
    let mut instances = vec![three_element(), two_element()];
    for i in 0..14 {
        instances.push(random_submodular(2 + i % 7, &mut r));
    }
    for (i, f) in instances.iter().enumerate() {
        let rep = run_suite(f, Suite::Superdiff, &opts)?;
        for c in rep.checks.iter().filter(|c| wanted.contains(&c.name.as_str())) {
            if !c.passed || c.skipped {
                return fails(format!("instance {i}, {}: {:?}", c.name, c.detail));
            }
        }
    }
    Ok((true, format!("{} instances, 500 points each", instances.len())))
}

fn optimization_guarantees() -> Verdict {
    let mut r = rng(6);
    let eps = 1e-8;
    let mut certified = 0;
    let sound = |f: &SetFunction, opt: f64, certified: &mut usize| -> Option<Subset> {
        for a in f.ground().subsets().unwrap() {
            if certify_global_max(f, a, eps).verdict {
                *certified += 1;
                if (f.value(a) - opt).abs() > 1e-9 {
                    return Some(a);
                }
            }
        }
        None
    };
    let mut worst_third = f64::INFINITY;
    for i in 0..200 {
        let n = 2 + i % 9;
        let f = random_nonneg_nonmonotone(n, &mut r);
        let (_, v, _) = max_unconstrained_third(&f, eps)?;
        let (_, opt) = max_brute(&f, &Constraint::Unconstrained)?;
        if v < opt / 3.0 - 1e-7 {
            return fails(format!("non-monotone instance {i}: {v} < {opt} / 3"));
        }
        if opt > 0.0 {
            worst_third = worst_third.min(v / opt);
        }
        if let Some(a) = sound(&f, opt, &mut certified) {
            return fails(format!("non-monotone instance {i}: {a} certified but not optimal"));
        }
    }
    let mut worst_half = f64::INFINITY;
    for i in 0..100 {
        let n = 2 + i % 9;
        let f = random_monotone(n, &mut r);
        let c = Constraint::Cardinality(2);
        let (a, cert) = local_max(&f, &c, 2, 2, Subset::EMPTY, eps)?;
        let (_, opt) = max_brute(&f, &c)?;
        if !cert.verdict || f.value(a) < opt / 2.0 - 1e-7 {
            return fails(format!("monotone instance {i}: f({a}) = {} vs OPT {opt}", f.value(a)));
        }
        if opt > 0.0 {
            worst_half = worst_half.min(f.value(a) / opt);
        }
        let (_, gopt) = max_brute(&f, &Constraint::Unconstrained)?;
        if let Some(a) = sound(&f, gopt, &mut certified) {
            return fails(format!("monotone instance {i}: {a} certified but not optimal"));
        }
    }
    for i in 0..200 {
        let n = 2 + i % 11;
        let f = random_submodular(n, &mut r);
        let (a, b) = (sfm_brute(&f)?.value, sfm_minnorm(&f)?.value);
        if (a - b).abs() > 1e-7 {
            return fails(format!("SFM instance {i}: brute {a}, min-norm {b}"));
        }
    }
    Ok((
        true,
        format!(
            "worst ratios {worst_third:.3} (unconstrained) and {worst_half:.3} (cardinality 2); \
             {certified} global-max certificates, all optimal; min-norm matches brute on 200"
        ),
    ))
}

fn separation_duality() -> Verdict {
    let mut r = rng(7);
    let eps = 1e-8;
    let mut chain = 0;
    for i in 0..60 {
        let n = 2 + i % 11;
        let f = random_submodular(n, &mut r);
        let g = random_supermodular_below(&f, &mut r);
        let sep = dst_separate(&f, &g, eps)?;
        if !check_sandwich(&g, &sep, &f, eps)?.verdict {
            return fails(format!("convex separator fails on pair {i}"));
        }
        let g = random_supermodular_above(&f, &mut r);
        let lift = if i % 2 == 0 { 0.0 } else { r.gen_range(0.1..1.0) };
        let g = FnOracle::new(n, |s: Subset| g.value(s) + lift);
        let sep = cdst_separate(&f, &g, eps)?;
        let ok = match sep.validity {
            Validity::Exhaustive => check_sandwich(&f, &sep, &g, eps)?.verdict,
            Validity::ChainOnly { a } => {
                chain += 1;
                check_sandwich_chain(&f, &sep, &g, a, eps)?.verdict
            }
        };
        if !ok {
            return fails(format!("concave separator ({}) fails on pair {i}", sep.branch));
        }
    }
    if chain == 0 {
        return fails("no chain-only separator exercised");
    }
    for i in 0..100 {
        let n = 2 + i % 7;
        let f = random_submodular(n, &mut r);
        let g = random_supermodular_below(&f, &mut r);
        let weak = if i < 5 { 500 } else { 0 };
        let rep = check_fdt_convex(&f, &g, weak, i as u64, eps)?;
        if !rep.strong_attained || rep.weak_violations > 0 {
            return fails(format!("convex duality on pair {i}: {rep:?}"));
        }
        if i < 5 {
            let g = random_supermodular_above(&f, &mut r);
            let rep = check_fdt_concave(&f, &g, 500, i as u64, eps)?;
            if rep.weak_violations > 0 {
                return fails(format!("concave weak duality on pair {i}: {rep:?}"));
            }
        }
    }
    for i in 0..100 {
        let n = 2 + i % 7;
        let f1 = random_submodular(n, &mut r);
        let f2 = random_submodular(n, &mut r);
        let rep = minkowski_checks(&f1, &f2, 10, i as u64, 1e-9)?;
        if !rep.passed() {
            return fails(format!("Minkowski pair {i}: {rep:?}"));
        }
    }
    Ok((true, format!("60 separations ({chain} chain-only), 100 strong duals, 100 Minkowski pairs")))
}

fn mnatural_suite() -> Verdict {
    let mut r = rng(8);
    let mut ranks = Vec::new();
    for n in [3, 5, 8] {
        ranks.push(SetFunction::uniform_matroid_rank(n, n.div_ceil(2))?);
        let (blocks, caps) = random_partition(n, &mut r);
        ranks.push(SetFunction::partition_matroid_rank(n, blocks, caps)?);
    }
    for (i, f) in ranks.iter().enumerate() {
        let f = f.tabulate()?;
        for x in f.ground().subsets()? {
            let c = mnatural_superdiff_equals_delta22(&f, x, 1000, i as u64 * 1000 + x.0 as u64, 1e-8)?;
            if !c.verdict {
                return fails(format!("matroid {i} at {x}: {:?}", c.witness));
            }
        }
    }
    let cap = SetFunction::concave_over_modular(vec![1.0, 1.0, 2.0], Curve::Cap(2.0))?;
    let outcome: Certificate = mnatural_superdiff_equals_delta22(&cap, one_based(&[3]), 1000, 9, 1e-8)?;
    let report = match (&outcome.verdict, &outcome.witness) {
        (false, Some(Witness::Point { point, set })) => format!(
            "witness {point:?} violated at {}",
            set.map_or("?".to_string(), |s| s.one_based())
        ),
        _ => outcome.note.clone().unwrap_or_default(),
    };
    Ok((true, format!("{} matroid ranks clean; cap instance at {{3}}: {report}", ranks.len())))
}

#[test]
fn acceptance() {
    let criteria: [(&str, fn() -> Verdict); 8] = [
        ("three-element supergradients", three_element_supergradients),
        ("two-element vertices", two_element_vertices),
        ("greedy/Lovász identity", greedy_lovasz_identity),
        ("extension sandwich", extension_sandwich),
        ("superdifferential structure", superdiff_structure),
        ("optimization guarantees", optimization_guarantees),
        ("separation and duality", separation_duality),
        ("M♮ suite", mnatural_suite),
    ];
    let mut all = true;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let (ok, detail) = run().unwrap_or_else(|e| (false, format!("error: {e}")));
        all &= ok;
        println!("criterion {} {name}: {} ({detail})", i + 1, if ok { "PASS" } else { "FAIL" });
    }
    assert!(all, "at least one acceptance criterion failed");
}
