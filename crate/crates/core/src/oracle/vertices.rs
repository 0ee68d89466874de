//! Brute-force vertex enumeration for tiny inequality systems.

use itertools::Itertools;

use crate::error::{Error, Result};

/// Dimension ceiling for vertex enumeration.
pub const MAX_VERTEX_DIM: usize = 4;
/// Euclidean distance under which two vertices are the same point.
pub const DEDUP_TOL: f64 = 1e-7;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Relation {
    Le,
    Ge,
    Eq,
}

/// `⟨a, x⟩ (≤ | ≥ | =) b`
#[derive(Debug, Clone, PartialEq)]
pub struct Inequality {
    pub a: Vec<f64>,
    pub b: f64,
    pub rel: Relation,
}

impl Inequality {
    pub fn le(a: Vec<f64>, b: f64) -> Self {
        Inequality { a, b, rel: Relation::Le }
    }

    pub fn ge(a: Vec<f64>, b: f64) -> Self {
        Inequality { a, b, rel: Relation::Ge }
    }

    pub fn holds(&self, x: &[f64], eps: f64) -> bool {
        let lhs: f64 = self.a.iter().zip(x).map(|(a, v)| a * v).sum();
        match self.rel {
            Relation::Le => lhs <= self.b + eps,
            Relation::Ge => lhs >= self.b - eps,
            Relation::Eq => (lhs - self.b).abs() <= eps,
        }
    }
}

/// Solve the square system `A x = b` by Gaussian elimination with partial
/// pivoting; `None` when singular.
pub fn solve_square(mut a: Vec<Vec<f64>>, mut b: Vec<f64>) -> Option<Vec<f64>> {
    let d = b.len();
    for col in 0..d {
        let (piv, mag) = (col..d)
            .map(|r| (r, a[r][col].abs()))
            .max_by(|x, y| x.1.total_cmp(&y.1))?;
        if mag < 1e-10 {
            return None;
        }
        a.swap(col, piv);
        b.swap(col, piv);
        for r in 0..d {
            if r != col {
                let factor = a[r][col] / a[col][col];
                if factor != 0.0 {
                    for c in col..d {
                        a[r][c] -= factor * a[col][c];
                    }
                    b[r] -= factor * b[col];
                }
            }
        }
    }
    Some((0..d).map(|i| b[i] / a[i][i]).collect())
}

/// Every vertex of `{x ∈ R^dim : ineqs}`: solve each `dim`-subset of the
/// constraints as equalities, keep nonsingular solutions that satisfy the
/// whole system within `eps`, deduplicate and sort lexicographically.
pub fn enumerate_vertices(dim: usize, ineqs: &[Inequality], eps: f64) -> Result<Vec<Vec<f64>>> {
    if dim > MAX_VERTEX_DIM {
        return Err(Error::refused("vertex enumeration", dim, MAX_VERTEX_DIM));
    }
    if let Some(bad) = ineqs.iter().find(|q| q.a.len() != dim) {
        return Err(Error::Domain(format!(
            "inequality has {} coefficients, expected {dim}",
            bad.a.len()
        )));
    }
    let mut out: Vec<Vec<f64>> = Vec::new();
    for combo in (0..ineqs.len()).combinations(dim) {
        let a = combo.iter().map(|&i| ineqs[i].a.clone()).collect();
        let b = combo.iter().map(|&i| ineqs[i].b).collect();
        let Some(x) = solve_square(a, b) else { continue };
        if !ineqs.iter().all(|q| q.holds(&x, eps)) {
            continue;
        }
        let dup = out.iter().any(|y| {
            y.iter().zip(&x).map(|(p, q)| (p - q).powi(2)).sum::<f64>().sqrt() < DEDUP_TOL
        });
        if !dup {
            out.push(x);
        }
    }
    out.sort_by(|p, q| {
        p.iter()
            .zip(q)
            .map(|(a, b)| a.total_cmp(b))
            .find(|o| o.is_ne())
            .unwrap_or(std::cmp::Ordering::Equal)
    });
    Ok(out)
}
