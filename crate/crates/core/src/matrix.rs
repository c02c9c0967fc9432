//! Dense small matrices over a [`DivisionAlgebra`].
//!
//! Entries are stored row-major. Nothing here assumes commutativity, so the
//! same code serves real, complex and quaternionic matrices; in particular
//! `re_trace` is used wherever a cyclic trace is needed, since over ℍ only the
//! real part of the trace is invariant under cyclic permutation.

use std::ops::{Add, Index, IndexMut, Mul, Neg, Sub};

use num_traits::{Float, Zero};

use crate::error::{Error, Result};
use crate::scalar::{DivisionAlgebra, Real};

#[derive(Debug, Clone, PartialEq)]
pub struct Matrix<S> {
    rows: usize,
    cols: usize,
    data: Vec<S>,
}

impl<S: DivisionAlgebra> Matrix<S> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![S::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = S::one();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> S) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Self { rows, cols, data }
    }

    pub fn from_diagonal(diag: &[S]) -> Self {
        let mut m = Self::zeros(diag.len(), diag.len());
        for (i, &d) in diag.iter().enumerate() {
            m[(i, i)] = d;
        }
        m
    }

    /// Builds a matrix from row-major entries.
    pub fn from_rows(rows: usize, cols: usize, data: Vec<S>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::ShapeMismatch {
                expected: format!("{} entries", rows * cols),
                actual: format!("{} entries", data.len()),
            });
        }
        Ok(Self { rows, cols, data })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn entries(&self) -> &[S] {
        &self.data
    }

    pub fn entries_mut(&mut self) -> &mut [S] {
        &mut self.data
    }

    pub fn map(&self, f: impl Fn(S) -> S) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|&x| f(x)).collect(),
        }
    }

    pub fn scale(&self, r: S::Real) -> Self {
        self.map(|x| x.scale(r))
    }

    /// Left multiplication of every entry by `q`.
    pub fn left_scalar_mul(&self, q: S) -> Self {
        self.map(|x| q * x)
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |r, c| self[(c, r)].conj())
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |r, c| self[(c, r)])
    }

    pub fn trace(&self) -> S {
        let mut acc = S::zero();
        for i in 0..self.rows.min(self.cols) {
            acc += self[(i, i)];
        }
        acc
    }

    /// Real part of the trace.
    pub fn re_trace(&self) -> S::Real {
        self.trace().re()
    }

    /// `Re tr(self · other*)`, the real Frobenius pairing.
    pub fn re_inner(&self, other: &Self) -> S::Real {
        debug_assert_eq!(self.shape(), other.shape());
        self.data
            .iter()
            .zip(&other.data)
            .fold(S::Real::zero(), |acc, (&a, &b)| acc + (a * b.conj()).re())
    }

    /// `Re tr(self · self*)`.
    pub fn frobenius_sqr(&self) -> S::Real {
        self.data
            .iter()
            .fold(S::Real::zero(), |acc, &a| acc + a.norm_sqr())
    }

    pub fn max_abs(&self) -> S::Real {
        self.data
            .iter()
            .fold(S::Real::zero(), |acc, &a| Float::max(acc, a.modulus()))
    }

    /// Product `self · other`, checking shapes.
    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::ShapeMismatch {
                expected: format!("{} rows", self.cols),
                actual: format!("{}x{}", other.rows, other.cols),
            });
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(r, k)];
                if a == S::zero() {
                    continue;
                }
                for c in 0..other.cols {
                    out.data[r * other.cols + c] += a * other[(k, c)];
                }
            }
        }
        Ok(out)
    }

    /// Copies `block` into `self` with its top-left corner at `(row, col)`.
    pub fn set_block(&mut self, row: usize, col: usize, block: &Self) {
        assert!(row + block.rows <= self.rows && col + block.cols <= self.cols);
        for r in 0..block.rows {
            for c in 0..block.cols {
                self[(row + r, col + c)] = block[(r, c)];
            }
        }
    }

    pub fn block(&self, row: usize, col: usize, rows: usize, cols: usize) -> Self {
        Self::from_fn(rows, cols, |r, c| self[(row + r, col + c)])
    }

    /// Block-diagonal direct sum.
    pub fn direct_sum(blocks: &[Self]) -> Self {
        let rows = blocks.iter().map(|b| b.rows).sum();
        let cols = blocks.iter().map(|b| b.cols).sum();
        let mut out = Self::zeros(rows, cols);
        let (mut r, mut c) = (0, 0);
        for b in blocks {
            out.set_block(r, c, b);
            r += b.rows;
            c += b.cols;
        }
        out
    }

    /// `(A − A*)/2`.
    pub fn skew_hermitian_part(&self) -> Self {
        let half = S::Real::lit(0.5);
        (self - &self.adjoint()).scale(half)
    }

    /// `A·B + B·A`.
    pub fn anticommutator(&self, other: &Self) -> Self {
        &(self * other) + &(other * self)
    }

    /// `A·B − B·A`.
    pub fn commutator(&self, other: &Self) -> Self {
        &(self * other) - &(other * self)
    }

    fn zip_with(&self, other: &Self, f: impl Fn(S, S) -> S) -> Self {
        assert_eq!(
            self.shape(),
            other.shape(),
            "elementwise operation on mismatched shapes"
        );
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(&a, &b)| f(a, b))
                .collect(),
        }
    }
}

impl<S> Index<(usize, usize)> for Matrix<S> {
    type Output = S;
    fn index(&self, (r, c): (usize, usize)) -> &S {
        &self.data[r * self.cols + c]
    }
}

impl<S> IndexMut<(usize, usize)> for Matrix<S> {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut S {
        &mut self.data[r * self.cols + c]
    }
}

impl<S: DivisionAlgebra> Add for &Matrix<S> {
    type Output = Matrix<S>;
    fn add(self, o: &Matrix<S>) -> Matrix<S> {
        self.zip_with(o, |a, b| a + b)
    }
}

impl<S: DivisionAlgebra> Sub for &Matrix<S> {
    type Output = Matrix<S>;
    fn sub(self, o: &Matrix<S>) -> Matrix<S> {
        self.zip_with(o, |a, b| a - b)
    }
}

impl<S: DivisionAlgebra> Neg for &Matrix<S> {
    type Output = Matrix<S>;
    fn neg(self) -> Matrix<S> {
        self.map(|a| -a)
    }
}

impl<S: DivisionAlgebra> Mul for &Matrix<S> {
    type Output = Matrix<S>;
    fn mul(self, o: &Matrix<S>) -> Matrix<S> {
        self.try_mul(o).expect("matrix product shape mismatch")
    }
}
