//! The submodular lower polyhedron `P_f = {x : x(S) ≤ f(S)}`, the base
//! polytope, subdifferentials and the generalized (affine) lower polyhedron.

use crate::certificate::{Certificate, Witness};
use crate::error::{Error, Result};
use crate::function::{MinusModular, SetFunction, SetOracle};
use crate::minimize::{sfm, SfmMethod};
use crate::modular::{AffinePoint, ModularVector};
use crate::oracle::vertices::{enumerate_vertices, Inequality};
use crate::set::{Permutation, Subset};

/// `h^σ(σ(i)) = f(S_i) − f(S_{i−1})`.
pub fn greedy_vertex<O: SetOracle + ?Sized>(f: &O, sigma: &Permutation) -> ModularVector {
    let mut h = ModularVector::zeros(f.n());
    let mut s = Subset::EMPTY;
    let mut prev = f.value(s);
    for &j in sigma.order() {
        s = s.with(j);
        let cur = f.value(s);
        h[j] = cur - prev;
        prev = cur;
    }
    h
}

/// `max {⟨w, x⟩ : x ∈ P_f}` for `w ≥ 0`, attained at the greedy vertex of
/// the descending order of `w` (ties by ascending index).
pub fn lp_max_lower(f: &SetFunction, w: &[f64]) -> Result<(f64, ModularVector)> {
    check_len(f, w.len())?;
    if let Some(i) = w.iter().position(|&v| v < 0.0) {
        return Err(Error::Unbounded { direction: i });
    }
    let h = greedy_vertex(f, &Permutation::descending(w));
    Ok((h.dot(w), h))
}

fn check_len(f: &SetFunction, len: usize) -> Result<()> {
    if len != f.n() {
        return Err(Error::Domain(format!("vector has length {len}, expected {}", f.n())));
    }
    Ok(())
}

/// Extreme subgradient `h^σ_X ∈ ∂_f(X)`; `σ` must list `X` first.
pub fn subgradient(f: &SetFunction, x: Subset, sigma: &Permutation) -> Result<ModularVector> {
    f.ground().check(x)?;
    if sigma.len() != f.n() || !sigma.is_compatible_with(x) {
        return Err(Error::Precondition(format!(
            "permutation {:?} does not place {} in its first {} positions",
            sigma.order(),
            x,
            x.len()
        )));
    }
    Ok(greedy_vertex(f, sigma))
}

/// `m_X(Y) = f(X) + h_X(Y) − h_X(X)`, returned as `(h_X, f(X) − h_X(X))`.
pub fn modular_lower_bound(f: &SetFunction, x: Subset, sigma: &Permutation) -> Result<AffinePoint> {
    let h = subgradient(f, x, sigma)?;
    let c = f.value(x) - h.value(x);
    Ok(AffinePoint { x: h, c })
}

/// `min_Y f(Y) − x(Y)` and a minimizer.
fn min_minus(f: &SetFunction, x: &ModularVector) -> Result<(Subset, f64)> {
    let g = MinusModular { f, x: x.entries() };
    let r = sfm(&g, SfmMethod::Auto)?;
    Ok((r.minimizer, r.value))
}

/// `x ∈ P_f` iff `min_Y f(Y) − x(Y) ≥ 0`.
pub fn member_lower_poly(f: &SetFunction, x: &ModularVector, eps: f64) -> Result<Certificate> {
    check_len(f, x.len())?;
    let (y, v) = min_minus(f, x)?;
    Ok(if v >= -eps {
        Certificate::pass()
    } else {
        Certificate::fail_set(y)
    })
}

/// `x ∈ B_f`: `x ∈ P_f` and `x(V) = f(V)`.
pub fn member_base_poly(f: &SetFunction, x: &ModularVector, eps: f64) -> Result<Certificate> {
    let cert = member_lower_poly(f, x, eps)?;
    let v = f.ground().full();
    if cert.verdict && (x.value(v) - f.full_value()).abs() > eps {
        return Ok(Certificate::fail_set(v));
    }
    Ok(cert)
}

/// `x ∈ ∂_f(X)` iff `X` minimizes `f − x`.
pub fn member_subdiff(f: &SetFunction, x_set: Subset, x: &ModularVector, eps: f64) -> Result<Certificate> {
    check_len(f, x.len())?;
    f.ground().check(x_set)?;
    let (y, v) = min_minus(f, x)?;
    let at_x = f.value(x_set) - x.value(x_set);
    Ok(if v >= at_x - eps {
        Certificate::pass()
    } else {
        Certificate::fail_set(y)
    })
}

/// The `Δ(1,1)` local outer bound: `f(j|X∖j) ≤ x_j` on `X`, `f(j|X) ≥ x_j` off `X`.
pub fn member_subdiff_local(f: &SetFunction, x_set: Subset, x: &ModularVector, eps: f64) -> Certificate {
    for j in 0..f.n() {
        let ok = if x_set.contains(j) {
            f.marginal(j, x_set.without(j)) <= x[j] + eps
        } else {
            f.marginal(j, x_set) >= x[j] - eps
        };
        if !ok {
            return Certificate::fail(Witness::Coordinate { j });
        }
    }
    Certificate::pass()
}

/// `(x, c) ∈ P_f^gen` iff `c ≤ min_Y f(Y) − x(Y)`.
pub fn member_gen_lower(f: &SetFunction, p: &AffinePoint, eps: f64) -> Result<Certificate> {
    check_len(f, p.x.len())?;
    let (y, v) = min_minus(f, &p.x)?;
    Ok(if p.c <= v + eps {
        Certificate::pass()
    } else {
        Certificate::fail_set(y)
    })
}

/// `max {⟨x, y⟩ + c : (x, c) ∈ P_f^gen}`; equals `lp_max_lower` since every
/// extreme point has `c = 0`.
pub fn lp_gen_lower(f: &SetFunction, y: &[f64]) -> Result<f64> {
    lp_max_lower(f, y).map(|(v, _)| v)
}

/// Vertices of `P_f^gen` for `n ≤ 3` (the system lives in `n + 1` dimensions).
pub fn gen_lower_vertices_small(f: &SetFunction, eps: f64) -> Result<Vec<AffinePoint>> {
    let n = f.n();
    let mut ineqs = Vec::new();
    for y in f.ground().subsets()? {
        let mut a: Vec<f64> = (0..n).map(|j| if y.contains(j) { 1.0 } else { 0.0 }).collect();
        a.push(1.0);
        ineqs.push(Inequality::le(a, f.value(y)));
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
