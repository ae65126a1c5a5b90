use std::f64::consts::PI;

use num_complex::Complex64;
use serde::Serialize;

use super::group::PermGroup;
use crate::error::{Error, Result};

/// Dense square complex matrix, row-major.
#[derive(Clone, Debug, PartialEq)]
pub struct CMatrix {
    n: usize,
    data: Vec<Complex64>,
}

impl CMatrix {
    pub fn zeros(n: usize) -> Self {
        CMatrix {
            n,
            data: vec![Complex64::new(0.0, 0.0); n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            m.data[i * n + i] = Complex64::new(1.0, 0.0);
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> Complex64 {
        self.data[i * self.n + j]
    }

    pub fn mul(&self, o: &Self) -> Self {
        let n = self.n;
        let mut out = Self::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.data[i * n + k];
                if a == Complex64::new(0.0, 0.0) {
                    continue;
                }
                for j in 0..n {
                    out.data[i * n + j] += a * o.data[k * n + j];
                }
            }
        }
        out
    }

    pub fn add(&self, o: &Self) -> Self {
        CMatrix {
            n: self.n,
            data: self.data.iter().zip(&o.data).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn scale(&self, c: Complex64) -> Self {
        CMatrix {
            n: self.n,
            data: self.data.iter().map(|a| a * c).collect(),
        }
    }

    /// Largest entry modulus of `self - o`.
    pub fn max_diff(&self, o: &Self) -> f64 {
        self.data
            .iter()
            .zip(&o.data)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }
}

/// Result of the projection checks, as the worst error seen for each.
#[derive(Clone, Debug, Serialize)]
pub struct DevotoReport {
    pub g: usize,
    pub g_order: usize,
    pub centralizer_order: usize,
    pub idempotent_error: f64,
    pub orthogonal_error: f64,
    pub sum_error: f64,
    pub eigenvalue_error: f64,
    pub tolerance: f64,
    pub passed: bool,
    #[serde(skip)]
    pub projections: Vec<CMatrix>,
}

/// Left multiplication by `x` on the group algebra of `basis`.
fn left_regular(group: &PermGroup, basis: &[usize], x: usize) -> CMatrix {
    let n = basis.len();
    let mut m = CMatrix::zeros(n);
    for (col, &b) in basis.iter().enumerate() {
        let image = group.mul(x, b);
        let row = basis.binary_search(&image).expect("centralizer is closed");
        m.data[row * n + col] = Complex64::new(1.0, 0.0);
    }
    m
}

/// `P_k = |g|^-1 sum_{n=1}^{|g|} exp(-2 pi i n k / |g|) g^n` on the regular
/// representation of `C_G(g)`, for `k = 0..|g|-1`, checked at `tolerance`.
pub fn devoto_projections(group: &PermGroup, g: usize, tolerance: f64) -> Result<DevotoReport> {
    if g >= group.order() {
        return Err(Error::NotInGroup);
    }
    let basis = group.centralizer(g);
    let dim = basis.len();
    let ord = group.element_order(g);
    let powers: Vec<CMatrix> = (1..=ord)
        .map(|n| left_regular(group, &basis, group.pow(g, n as i64)))
        .collect();
    let root =
        |k: usize, n: usize| Complex64::from_polar(1.0, 2.0 * PI * (k * n) as f64 / ord as f64);
    let projections: Vec<CMatrix> = (0..ord)
        .map(|k| {
            powers
                .iter()
                .enumerate()
                .fold(CMatrix::zeros(dim), |acc, (i, m)| {
                    acc.add(&m.scale(root(k, i + 1).conj()))
                })
                .scale(Complex64::new(1.0 / ord as f64, 0.0))
        })
        .collect();

    let zero = CMatrix::zeros(dim);
    let lg = &powers[0];
    let mut idempotent_error: f64 = 0.0;
    let mut orthogonal_error: f64 = 0.0;
    let mut eigenvalue_error: f64 = 0.0;
    let mut total = CMatrix::zeros(dim);
    for (k, p) in projections.iter().enumerate() {
        idempotent_error = idempotent_error.max(p.mul(p).max_diff(p));
        for (j, q) in projections.iter().enumerate() {
            if j != k {
                orthogonal_error = orthogonal_error.max(p.mul(q).max_diff(&zero));
            }
        }
        eigenvalue_error = eigenvalue_error.max(lg.mul(p).max_diff(&p.scale(root(k, 1))));
        total = total.add(p);
    }
    let sum_error = total.max_diff(&CMatrix::identity(dim));
    let passed = [
        idempotent_error,
        orthogonal_error,
        sum_error,
        eigenvalue_error,
    ]
    .iter()
    .all(|e| *e <= tolerance);
    Ok(DevotoReport {
        g,
        g_order: ord,
        centralizer_order: dim,
        idempotent_error,
        orthogonal_error,
        sum_error,
        eigenvalue_error,
        tolerance,
        passed,
        projections,
    })
}
