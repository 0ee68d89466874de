use std::ops::{Add, Index, IndexMut, Sub};

use serde::{Deserialize, Serialize};

use crate::set::Subset;

/// A point of `R^n`, read as the modular function `x(S) = Σ_{i∈S} x_i`.
#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ModularVector(pub Vec<f64>);

impl ModularVector {
    pub fn zeros(n: usize) -> Self {
        ModularVector(vec![0.0; n])
    }

    pub fn from_fn(n: usize, f: impl FnMut(usize) -> f64) -> Self {
        ModularVector((0..n).map(f).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn entries(&self) -> &[f64] {
        &self.0
    }

    /// `x(S)`, summed in increasing element order.
    pub fn value(&self, s: Subset) -> f64 {
        s.elements().map(|j| self.0[j]).sum()
    }

    pub fn dot(&self, w: &[f64]) -> f64 {
        self.0.iter().zip(w).map(|(a, b)| a * b).sum()
    }

    pub fn scale(&self, a: f64) -> Self {
        ModularVector(self.0.iter().map(|v| a * v).collect())
    }

    pub fn max_abs_diff(&self, other: &ModularVector) -> f64 {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max)
    }

    pub fn is_integral(&self, tol: f64) -> bool {
        self.0.iter().all(|v| (v - v.round()).abs() <= tol)
    }
}

impl Index<usize> for ModularVector {
    type Output = f64;
    fn index(&self, i: usize) -> &f64 {
        &self.0[i]
    }
}

impl IndexMut<usize> for ModularVector {
    fn index_mut(&mut self, i: usize) -> &mut f64 {
        &mut self.0[i]
    }
}

impl Add for &ModularVector {
    type Output = ModularVector;
    fn add(self, rhs: &ModularVector) -> ModularVector {
        ModularVector(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &ModularVector {
    type Output = ModularVector;
    fn sub(self, rhs: &ModularVector) -> ModularVector {
        ModularVector(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl From<Vec<f64>> for ModularVector {
    fn from(v: Vec<f64>) -> Self {
        ModularVector(v)
    }
}

/// A modular vector plus an affine offset: `Y ↦ x(Y) + c`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AffinePoint {
    pub x: ModularVector,
    pub c: f64,
}

impl AffinePoint {
    pub fn new(x: impl Into<ModularVector>, c: f64) -> Self {
        AffinePoint { x: x.into(), c }
    }

    pub fn value(&self, s: Subset) -> f64 {
        self.x.value(s) + self.c
    }
}
