//! Dense two-phase primal simplex with Bland's rule.
//!
//! Standard form: optimize `Σ cost_j x_j` subject to `Σ_j col_j x_j = rhs`,
//! `x ≥ 0`. Sizes here are small (a few dozen rows, a few thousand
//! columns), so a full tableau is fine.

use crate::error::{Error, Result};

pub const FEAS_TOL: f64 = 1e-9;
const PIVOT_TOL: f64 = 1e-11;
const MAX_PIVOTS: usize = 200_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sense {
    Min,
    Max,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Column {
    pub cost: f64,
    pub coeffs: Vec<f64>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct LinearProgram {
    pub rhs: Vec<f64>,
    pub columns: Vec<Column>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct LpSolution {
    pub value: f64,
    pub x: Vec<f64>,
    /// Structural columns in the final basis (ascending).
    pub basis: Vec<usize>,
}

impl LpSolution {
    /// Columns with `x_j > tol`.
    pub fn support(&self, tol: f64) -> Vec<usize> {
        (0..self.x.len()).filter(|&j| self.x[j] > tol).collect()
    }
}

impl LinearProgram {
    pub fn new(rhs: Vec<f64>) -> Self {
        LinearProgram {
            rhs,
            columns: Vec::new(),
        }
    }

    pub fn push(&mut self, cost: f64, coeffs: Vec<f64>) -> usize {
        debug_assert_eq!(coeffs.len(), self.rhs.len());
        self.columns.push(Column { cost, coeffs });
        self.columns.len() - 1
    }

    pub fn rows(&self) -> usize {
        self.rhs.len()
    }
}

struct Tableau {
    m: usize,
    width: usize,
    data: Vec<f64>,
    basis: Vec<usize>,
}

impl Tableau {
    #[inline]
    fn at(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.width + j]
    }

    fn rhs(&self, i: usize) -> f64 {
        self.at(i, self.width - 1)
    }

    fn pivot(&mut self, row: usize, col: usize, obj: &mut [f64]) {
        let w = self.width;
        let p = self.at(row, col);
        for v in &mut self.data[row * w..(row + 1) * w] {
            *v /= p;
        }
        let pivot_row: Vec<f64> = self.data[row * w..(row + 1) * w].to_vec();
        for i in 0..self.m {
            if i == row {
                continue;
            }
            let factor = self.data[i * w + col];
            if factor != 0.0 {
                for (v, pr) in self.data[i * w..(i + 1) * w].iter_mut().zip(&pivot_row) {
                    *v -= factor * pr;
                }
            }
        }
        let factor = obj[col];
        if factor != 0.0 {
            for (v, pr) in obj.iter_mut().zip(&pivot_row) {
                *v -= factor * pr;
            }
        }
        self.basis[row] = col;
    }

    /// Minimize the objective whose reduced-cost row is `obj` (last entry = −value).
    fn run(&mut self, obj: &mut [f64], allowed: usize) -> Result<()> {
        for _ in 0..MAX_PIVOTS {
            // Bland: lowest-index improving column.
            let Some(col) = (0..allowed).find(|&j| obj[j] < -FEAS_TOL) else {
                return Ok(());
            };
            let mut best: Option<(usize, f64)> = None;
            for i in 0..self.m {
                let a = self.at(i, col);
                if a > PIVOT_TOL {
                    let ratio = self.rhs(i) / a;
                    best = match best {
                        None => Some((i, ratio)),
                        Some((bi, br)) => {
                            if ratio < br - 1e-12
                                || (ratio <= br + 1e-12 && self.basis[i] < self.basis[bi])
                            {
                                Some((i, ratio))
                            } else {
                                Some((bi, br))
                            }
                        }
                    }
                }
            }
            match best {
                Some((row, _)) => self.pivot(row, col, obj),
                None => return Err(Error::Unbounded { direction: col }),
            }
        }
        Err(Error::Domain(format!("simplex exceeded {MAX_PIVOTS} pivots")))
    }
}

/// Solve `lp` to optimality, returning an optimal basic feasible solution.
pub fn lp_solve_dense(lp: &LinearProgram, sense: Sense) -> Result<LpSolution> {
    let m = lp.rows();
    let ncols = lp.columns.len();
    let width = ncols + m + 1;
    let mut data = vec![0.0; m * width];
    for i in 0..m {
        let sign = if lp.rhs[i] < 0.0 { -1.0 } else { 1.0 };
        for (j, col) in lp.columns.iter().enumerate() {
            data[i * width + j] = sign * col.coeffs[i];
        }
        data[i * width + ncols + i] = 1.0;
        data[i * width + width - 1] = sign * lp.rhs[i];
    }
    let mut t = Tableau {
        m,
        width,
        data,
        basis: (ncols..ncols + m).collect(),
    };

    // Phase I: minimize the sum of artificials.
    let mut obj = vec![0.0; width];
    for i in 0..m {
        for (j, o) in obj.iter_mut().enumerate() {
            if j < ncols || j == width - 1 {
                *o -= t.at(i, j);
            }
        }
    }
    t.run(&mut obj, ncols)?;
    let infeas = -obj[width - 1];
    let scale = lp.rhs.iter().fold(1.0f64, |a, b| a.max(b.abs()));
    if infeas > FEAS_TOL * scale {
        return Err(Error::Infeasible);
    }
    // Drive remaining artificials out where a structural pivot exists.
    for i in 0..m {
        if t.basis[i] >= ncols {
            if let Some(j) = (0..ncols).find(|&j| t.at(i, j).abs() > 1e-9) {
                let mut dummy = vec![0.0; width];
                t.pivot(i, j, &mut dummy);
            }
        }
    }

    // Phase II.
    let sign = match sense {
        Sense::Min => 1.0,
        Sense::Max => -1.0,
    };
    let cost = |j: usize| -> f64 {
        if j < ncols {
            sign * lp.columns[j].cost
        } else {
            0.0
        }
    };
    let mut obj = vec![0.0; width];
    for (j, o) in obj.iter_mut().enumerate().take(ncols) {
        *o = cost(j);
    }
    for i in 0..m {
        let cb = cost(t.basis[i]);
        if cb != 0.0 {
            for (j, o) in obj.iter_mut().enumerate() {
                if j < ncols || j == width - 1 {
                    *o -= cb * t.at(i, j);
                }
            }
        }
    }
    t.run(&mut obj, ncols)?;

    let mut x = vec![0.0; ncols];
    let mut basis = Vec::new();
    for i in 0..m {
        let b = t.basis[i];
        if b < ncols {
            x[b] = t.rhs(i).max(0.0);
            basis.push(b);
        }
    }
    basis.sort_unstable();
    let value = lp.columns.iter().zip(&x).map(|(c, v)| c.cost * v).sum();
    Ok(LpSolution { value, x, basis })
}
