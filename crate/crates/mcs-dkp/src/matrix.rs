//! Small dense matrices over Gaussian integers (exact) and `Complex64` (floating).
//!
//! Constant operators live in [`MatrixG`] so that algebraic relations among
//! them can be checked with residual exactly zero; momentum-dependent
//! operators live in [`MatrixC`].

use crate::error::Error;
use crate::scalar::{Cplx, GaussInt};
use std::ops::{Add, Mul, Neg, Sub};

/// Dense square matrix of Gaussian integers.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MatrixG {
    dim: usize,
    e: Vec<GaussInt>,
}

impl MatrixG {
    pub fn zeros(dim: usize) -> Self {
        MatrixG { dim, e: vec![GaussInt::ZERO; dim * dim] }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = MatrixG::zeros(dim);
        for k in 0..dim {
            m.set(k, k, GaussInt::ONE);
        }
        m
    }

    /// Matrix unit with a single 1 at (row, col).
    pub fn unit(dim: usize, row: usize, col: usize) -> Self {
        let mut m = MatrixG::zeros(dim);
        m.set(row, col, GaussInt::ONE);
        m
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> GaussInt {
        self.e[r * self.dim + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: GaussInt) {
        self.e[r * self.dim + c] = v;
    }

    pub fn add_at(&mut self, r: usize, c: usize, v: GaussInt) {
        let cur = self.get(r, c);
        self.set(r, c, cur + v);
    }

    pub fn scale(&self, k: GaussInt) -> Self {
        MatrixG { dim: self.dim, e: self.e.iter().map(|&z| z * k).collect() }
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Self {
        let mut m = MatrixG::zeros(self.dim);
        for r in 0..self.dim {
            for c in 0..self.dim {
                m.set(c, r, self.get(r, c).conj());
            }
        }
        m
    }

    pub fn is_hermitian(&self) -> bool {
        *self == self.adjoint()
    }

    pub fn is_zero(&self) -> bool {
        self.e.iter().all(|z| z.is_zero())
    }

    /// Exact residual: max over entries of max(|re|, |im|).
    pub fn max_abs(&self) -> i64 {
        self.e.iter().map(|z| z.abs_max()).max().unwrap_or(0)
    }

    pub fn commutator(&self, o: &MatrixG) -> MatrixG {
        &(self * o) - &(o * self)
    }

    pub fn anticommutator(&self, o: &MatrixG) -> MatrixG {
        &(self * o) + &(o * self)
    }

    pub fn to_complex(&self) -> MatrixC {
        MatrixC { dim: self.dim, e: self.e.iter().map(|z| z.to_complex()).collect() }
    }

    /// Entries that differ from `other`, as (row, col, self, other).
    pub fn diff(&self, other: &MatrixG) -> Vec<(usize, usize, GaussInt, GaussInt)> {
        assert_eq!(self.dim, other.dim);
        let mut out = Vec::new();
        for r in 0..self.dim {
            for c in 0..self.dim {
                if self.get(r, c) != other.get(r, c) {
                    out.push((r, c, self.get(r, c), other.get(r, c)));
                }
            }
        }
        out
    }
}

impl Add for &MatrixG {
    type Output = MatrixG;
    fn add(self, o: &MatrixG) -> MatrixG {
        assert_eq!(self.dim, o.dim);
        MatrixG {
            dim: self.dim,
            e: self.e.iter().zip(&o.e).map(|(&a, &b)| a + b).collect(),
        }
    }
}

impl Sub for &MatrixG {
    type Output = MatrixG;
    fn sub(self, o: &MatrixG) -> MatrixG {
        assert_eq!(self.dim, o.dim);
        MatrixG {
            dim: self.dim,
            e: self.e.iter().zip(&o.e).map(|(&a, &b)| a - b).collect(),
        }
    }
}

impl Mul for &MatrixG {
    type Output = MatrixG;
    fn mul(self, o: &MatrixG) -> MatrixG {
        assert_eq!(self.dim, o.dim);
        let n = self.dim;
        let mut m = MatrixG::zeros(n);
        for r in 0..n {
            for k in 0..n {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..n {
                    m.add_at(r, c, a * o.get(k, c));
                }
            }
        }
        m
    }
}

impl Neg for &MatrixG {
    type Output = MatrixG;
    fn neg(self) -> MatrixG {
        MatrixG { dim: self.dim, e: self.e.iter().map(|&z| -z).collect() }
    }
}

/// Dense square complex matrix.
#[derive(Clone, Debug, PartialEq)]
pub struct MatrixC {
    dim: usize,
    e: Vec<Cplx>,
}

impl MatrixC {
    pub fn zeros(dim: usize) -> Self {
        MatrixC { dim, e: vec![Cplx::new(0.0, 0.0); dim * dim] }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = MatrixC::zeros(dim);
        for k in 0..dim {
            m.set(k, k, Cplx::new(1.0, 0.0));
        }
        m
    }

    pub fn from_rows(rows: &[Vec<Cplx>]) -> Self {
        let dim = rows.len();
        assert!(rows.iter().all(|r| r.len() == dim));
        MatrixC { dim, e: rows.iter().flatten().copied().collect() }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> Cplx {
        self.e[r * self.dim + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: Cplx) {
        self.e[r * self.dim + c] = v;
    }

    pub fn add_at(&mut self, r: usize, c: usize, v: Cplx) {
        let cur = self.get(r, c);
        self.set(r, c, cur + v);
    }

    pub fn scale(&self, k: Cplx) -> Self {
        MatrixC { dim: self.dim, e: self.e.iter().map(|&z| z * k).collect() }
    }

    /// `self - c * identity`.
    pub fn shifted(&self, c: Cplx) -> Self {
        let mut m = self.clone();
        for k in 0..self.dim {
            m.set(k, k, m.get(k, k) - c);
        }
        m
    }

    pub fn adjoint(&self) -> Self {
        let mut m = MatrixC::zeros(self.dim);
        for r in 0..self.dim {
            for c in 0..self.dim {
                m.set(c, r, self.get(r, c).conj());
            }
        }
        m
    }

    pub fn transpose(&self) -> Self {
        let mut m = MatrixC::zeros(self.dim);
        for r in 0..self.dim {
            for c in 0..self.dim {
                m.set(c, r, self.get(r, c));
            }
        }
        m
    }

    pub fn trace(&self) -> Cplx {
        (0..self.dim).map(|k| self.get(k, k)).sum()
    }

    /// Max-abs entry norm.
    pub fn norm_max(&self) -> f64 {
        self.e.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    pub fn commutator(&self, o: &MatrixC) -> MatrixC {
        &(self * o) - &(o * self)
    }

    pub fn mul_vec(&self, v: &[Cplx]) -> Vec<Cplx> {
        assert_eq!(v.len(), self.dim);
        (0..self.dim)
            .map(|r| (0..self.dim).map(|c| self.get(r, c) * v[c]).sum())
            .collect()
    }

    pub fn column(&self, c: usize) -> Vec<Cplx> {
        (0..self.dim).map(|r| self.get(r, c)).collect()
    }

    /// Determinant by LU decomposition with partial pivoting.
    pub fn det(&self) -> Cplx {
        let n = self.dim;
        let mut a = self.e.clone();
        let mut det = Cplx::new(1.0, 0.0);
        for k in 0..n {
            let mut piv = k;
            let mut best = a[k * n + k].norm();
            for r in (k + 1)..n {
                let v = a[r * n + k].norm();
                if v > best {
                    best = v;
                    piv = r;
                }
            }
            if best == 0.0 {
                return Cplx::new(0.0, 0.0);
            }
            if piv != k {
                for c in 0..n {
                    a.swap(k * n + c, piv * n + c);
                }
                det = -det;
            }
            let d = a[k * n + k];
            det *= d;
            for r in (k + 1)..n {
                let f = a[r * n + k] / d;
                for c in k..n {
                    let v = a[k * n + c];
                    a[r * n + c] -= f * v;
                }
            }
        }
        det
    }

    /// Numerical rank via row reduction with a relative pivot threshold.
    pub fn rank(&self, rel_tol: f64) -> usize {
        self.row_reduce(rel_tol).1.len()
    }

    /// Basis of the (right) null space, each vector of length `dim`.
    pub fn null_space(&self, rel_tol: f64) -> Vec<Vec<Cplx>> {
        let (rref, pivots) = self.row_reduce(rel_tol);
        let n = self.dim;
        let pivot_cols: Vec<usize> = pivots.iter().map(|&(_, c)| c).collect();
        let mut basis = Vec::new();
        for free in 0..n {
            if pivot_cols.contains(&free) {
                continue;
            }
            let mut v = vec![Cplx::new(0.0, 0.0); n];
            v[free] = Cplx::new(1.0, 0.0);
            for &(r, c) in &pivots {
                v[c] = -rref[r * n + free];
            }
            basis.push(v);
        }
        basis
    }

    /// Reduced row echelon form; returns (entries, pivot (row, col) list).
    fn row_reduce(&self, rel_tol: f64) -> (Vec<Cplx>, Vec<(usize, usize)>) {
        let n = self.dim;
        let mut a = self.e.clone();
        let scale = self.norm_max().max(1.0);
        let tol = rel_tol * scale;
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..n {
            let mut piv = row;
            let mut best = 0.0;
            for r in row..n {
                let v = a[r * n + col].norm();
                if v > best {
                    best = v;
                    piv = r;
                }
            }
            if best <= tol {
                continue;
            }
            if piv != row {
                for c in 0..n {
                    a.swap(row * n + c, piv * n + c);
                }
            }
            let d = a[row * n + col];
            for c in 0..n {
                a[row * n + c] /= d;
            }
            for r in 0..n {
                if r == row {
                    continue;
                }
                let f = a[r * n + col];
                if f.norm() == 0.0 {
                    continue;
                }
                for c in 0..n {
                    let v = a[row * n + c];
                    a[r * n + c] -= f * v;
                }
            }
            pivots.push((row, col));
            row += 1;
            if row == n {
                break;
            }
        }
        (a, pivots)
    }
}

impl Add for &MatrixC {
    type Output = MatrixC;
    fn add(self, o: &MatrixC) -> MatrixC {
        assert_eq!(self.dim, o.dim);
        MatrixC {
            dim: self.dim,
            e: self.e.iter().zip(&o.e).map(|(&a, &b)| a + b).collect(),
        }
    }
}

impl Sub for &MatrixC {
    type Output = MatrixC;
    fn sub(self, o: &MatrixC) -> MatrixC {
        assert_eq!(self.dim, o.dim);
        MatrixC {
            dim: self.dim,
            e: self.e.iter().zip(&o.e).map(|(&a, &b)| a - b).collect(),
        }
    }
}

impl Mul for &MatrixC {
    type Output = MatrixC;
    fn mul(self, o: &MatrixC) -> MatrixC {
        assert_eq!(self.dim, o.dim);
        let n = self.dim;
        let mut m = MatrixC::zeros(n);
        for r in 0..n {
            for k in 0..n {
                let a = self.get(r, k);
                if a.norm_sqr() == 0.0 {
                    continue;
                }
                for c in 0..n {
                    m.add_at(r, c, a * o.get(k, c));
                }
            }
        }
        m
    }
}

impl Neg for &MatrixC {
    type Output = MatrixC;
    fn neg(self) -> MatrixC {
        MatrixC { dim: self.dim, e: self.e.iter().map(|&z| -z).collect() }
    }
}

/// Max-abs entry of the ordered product of `factors`; 0 means the product
/// annihilates. Errors if the factors do not share one dimension.
pub fn poly_residual(factors: &[&MatrixC]) -> Result<f64, Error> {
    let first = factors.first().ok_or(Error::EmptyFactorList)?;
    let dim = first.dim();
    for f in factors {
        if f.dim() != dim {
            return Err(Error::DimensionMismatch { expected: dim, got: f.dim() });
        }
    }
    let mut acc = (*first).clone();
    for f in &factors[1..] {
        acc = &acc * *f;
    }
    Ok(acc.norm_max())
}
