//! Killing-normalized inner products on 𝔰𝔲(n) and 𝔰𝔭(n).
//!
//! The bi-invariant metric is `⟨X, Y⟩ = c_n · Re tr(X Y*)` with `c_n = 2n` in the
//! complex case and `c_n = 4(n+1)` in the quaternionic case. The same formula
//! extends to the ambient matrix space, so it is also the ambient metric of the
//! group and Grassmannian embeddings.

use num_traits::{Float, One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::quaternion::Quaternion;
use crate::scalar::{DivisionAlgebra, FieldKind, Real};

/// The compact Lie algebras whose elements we sample.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum LieAlgebra {
    /// Traceless skew-Hermitian complex `n×n` matrices.
    Su(usize),
    /// Skew-Hermitian quaternionic `n×n` matrices.
    Sp(usize),
}

impl LieAlgebra {
    pub fn n(self) -> usize {
        match self {
            LieAlgebra::Su(n) | LieAlgebra::Sp(n) => n,
        }
    }

    pub fn field(self) -> FieldKind {
        match self {
            LieAlgebra::Su(_) => FieldKind::Complex,
            LieAlgebra::Sp(_) => FieldKind::Quaternion,
        }
    }

    /// Real dimension: `n² − 1` for 𝔰𝔲(n), `n(2n+1)` for 𝔰𝔭(n).
    pub fn dim(self) -> usize {
        match self {
            LieAlgebra::Su(n) => n * n - 1,
            LieAlgebra::Sp(n) => n * (2 * n + 1),
        }
    }

    pub fn metric<T: Real>(self) -> KillingMetric<T> {
        match self {
            LieAlgebra::Su(n) => KillingMetric::complex(n),
            LieAlgebra::Sp(n) => KillingMetric::quaternionic(n),
        }
    }

    pub(crate) fn check_field<S: DivisionAlgebra>(self) -> Result<()> {
        if S::KIND != self.field() {
            return Err(Error::FieldMismatch {
                metric: self.field().to_string(),
                entries: S::KIND.to_string(),
            });
        }
        Ok(())
    }
}

/// `⟨X, Y⟩ = c_n · Re tr(X Y*)` on `n×n` matrices over `field`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KillingMetric<T> {
    pub field: FieldKind,
    pub n: usize,
    pub c_n: T,
}

impl<T: Real> KillingMetric<T> {
    /// `c_n = 2n`.
    pub fn complex(n: usize) -> Self {
        Self {
            field: FieldKind::Complex,
            n,
            c_n: T::lit(2.0 * n as f64),
        }
    }

    /// `c_n = 4(n+1)`.
    pub fn quaternionic(n: usize) -> Self {
        Self {
            field: FieldKind::Quaternion,
            n,
            c_n: T::lit(4.0 * (n as f64 + 1.0)),
        }
    }

    /// Checked inner product; both matrices must be `n×n` over the metric's field.
    pub fn inner<S>(&self, x: &Matrix<S>, y: &Matrix<S>) -> Result<T>
    where
        S: DivisionAlgebra<Real = T>,
    {
        self.check::<S>(x)?;
        self.check::<S>(y)?;
        Ok(self.c_n * x.re_inner(y))
    }

    /// Unchecked `c_n · Re tr(X Y*)` for matrices of any common shape.
    pub fn pairing<S>(&self, x: &Matrix<S>, y: &Matrix<S>) -> T
    where
        S: DivisionAlgebra<Real = T>,
    {
        self.c_n * x.re_inner(y)
    }

    pub fn norm_sqr<S>(&self, x: &Matrix<S>) -> T
    where
        S: DivisionAlgebra<Real = T>,
    {
        self.c_n * x.frobenius_sqr()
    }

    /// Rescales `x` to unit length.
    pub fn normalize<S>(&self, x: &Matrix<S>) -> Matrix<S>
    where
        S: DivisionAlgebra<Real = T>,
    {
        x.scale(self.norm_sqr(x).sqrt().recip())
    }

    fn check<S: DivisionAlgebra>(&self, x: &Matrix<S>) -> Result<()> {
        if S::KIND != self.field {
            return Err(Error::FieldMismatch {
                metric: self.field.to_string(),
                entries: S::KIND.to_string(),
            });
        }
        if x.shape() != (self.n, self.n) {
            return Err(Error::ShapeMismatch {
                expected: format!("{}x{}", self.n, self.n),
                actual: format!("{}x{}", x.rows(), x.cols()),
            });
        }
        Ok(())
    }
}

/// `c_n · Re tr(X Y*)`.
pub fn killing_inner<S>(
    x: &Matrix<S>,
    y: &Matrix<S>,
    metric: &KillingMetric<S::Real>,
) -> Result<S::Real>
where
    S: DivisionAlgebra,
{
    metric.inner(x, y)
}

/// Skew-Hermitian part `(A − A*)/2`, made traceless for 𝔰𝔲(n).
pub fn project_lie_algebra<S: DivisionAlgebra>(a: &Matrix<S>, algebra: LieAlgebra) -> Matrix<S> {
    let mut x = a.skew_hermitian_part();
    if let LieAlgebra::Su(n) = algebra {
        let shift = x.trace().scale(S::Real::lit(1.0 / n as f64));
        for i in 0..n {
            x[(i, i)] -= shift;
        }
    }
    x
}

/// An orthonormal basis of the algebra in its Killing metric.
///
/// The spanning set is the usual one (imaginary units on the diagonal,
/// `E_jk − E_kj` and its imaginary rotations off the diagonal); Gram–Schmidt
/// only rescales it except on the 𝔰𝔲(n) diagonal.
pub fn orthonormal_basis<S>(algebra: LieAlgebra) -> Result<Vec<Matrix<S>>>
where
    S: DivisionAlgebra,
{
    algebra.check_field::<S>()?;
    let n = algebra.n();
    let d = S::KIND.dim();
    let metric: KillingMetric<S::Real> = algebra.metric();
    let unit = |axis: usize| {
        let mut c = vec![S::Real::zero(); d];
        c[axis] = S::Real::one();
        S::from_components(&c)
    };

    let mut spanning = Vec::new();
    for i in 0..n {
        for axis in 1..d {
            let mut m = Matrix::<S>::zeros(n, n);
            m[(i, i)] = unit(axis);
            spanning.push(project_lie_algebra(&m, algebra));
        }
    }
    for i in 0..n {
        for j in (i + 1)..n {
            for axis in 0..d {
                let mut m = Matrix::<S>::zeros(n, n);
                m[(i, j)] = unit(axis);
                spanning.push(project_lie_algebra(&m, algebra));
            }
        }
    }

    let mut basis: Vec<Matrix<S>> = Vec::with_capacity(algebra.dim());
    for mut v in spanning {
        for b in &basis {
            let c = metric.pairing(&v, b);
            v = &v - &b.scale(c);
        }
        let norm = metric.norm_sqr(&v).sqrt();
        if norm > S::Real::lit(1e-10) {
            basis.push(v.scale(norm.recip()));
        }
    }
    debug_assert_eq!(basis.len(), algebra.dim());
    Ok(basis)
}

/// Left multiplication of a quaternionic matrix by the units `1, i, j, k`.
pub(crate) fn quaternionic_left_orbit<T: Real>(x: &Matrix<Quaternion<T>>) -> [Matrix<Quaternion<T>>; 4] {
    [
        x.clone(),
        x.left_scalar_mul(Quaternion::i()),
        x.left_scalar_mul(Quaternion::j()),
        x.left_scalar_mul(Quaternion::k()),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_complex::Complex64;

    type Q = Quaternion<f64>;

    #[test]
    fn su2_diagonal_example() {
        // X = diag(i, −i)/2: Re tr(XX*) = 1/2, c_2 = 4.
        let x = Matrix::from_diagonal(&[Complex64::new(0.0, 0.5), Complex64::new(0.0, -0.5)]);
        let metric = KillingMetric::complex(2);
        assert_eq!(killing_inner(&x, &x, &metric).unwrap(), 2.0);
        let zero = Matrix::zeros(2, 2);
        assert_eq!(killing_inner(&zero, &x, &metric).unwrap(), 0.0);
        let unit = metric.normalize(&x);
        assert!((metric.inner(&unit, &unit).unwrap() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn inner_rejects_wrong_shape_and_field() {
        let metric = KillingMetric::<f64>::complex(2);
        let x = Matrix::<Complex64>::zeros(3, 3);
        assert!(matches!(
            metric.inner(&x, &x),
            Err(Error::ShapeMismatch { .. })
        ));
        let q = Matrix::<Q>::zeros(2, 2);
        assert!(matches!(
            metric.inner(&q, &q),
            Err(Error::FieldMismatch { .. })
        ));
    }

    #[test]
    fn identity_projects_to_zero() {
        let p = project_lie_algebra(&Matrix::<Complex64>::identity(2), LieAlgebra::Su(2));
        assert_eq!(p.max_abs(), 0.0);
        let q = project_lie_algebra(&Matrix::<Q>::identity(3), LieAlgebra::Sp(3));
        assert_eq!(q.max_abs(), 0.0);
    }

    #[test]
    fn projection_fixes_algebra_elements() {
        let x = Matrix::from_rows(
            2,
            2,
            vec![
                Complex64::new(0.0, 0.3),
                Complex64::new(1.0, 2.0),
                Complex64::new(-1.0, 2.0),
                Complex64::new(0.0, -0.3),
            ],
        )
        .unwrap();
        let p = project_lie_algebra(&x, LieAlgebra::Su(2));
        assert!((&p - &x).max_abs() < 1e-15);
    }

    #[test]
    fn bases_are_orthonormal_with_the_right_dimension() {
        for n in 2..=4 {
            let su = orthonormal_basis::<Complex64>(LieAlgebra::Su(n)).unwrap();
            let sp = orthonormal_basis::<Q>(LieAlgebra::Sp(n)).unwrap();
            assert_eq!(su.len(), n * n - 1);
            assert_eq!(sp.len(), n * (2 * n + 1));
            let ms = KillingMetric::complex(n);
            for (a, x) in su.iter().enumerate() {
                for (b, y) in su.iter().enumerate() {
                    let want = if a == b { 1.0 } else { 0.0 };
                    assert!((ms.inner(x, y).unwrap() - want).abs() < 1e-12);
                }
            }
            let mq = KillingMetric::quaternionic(n);
            for (a, x) in sp.iter().enumerate() {
                assert!((&x.adjoint() + x).max_abs() < 1e-15);
                for y in sp.iter().skip(a + 1) {
                    assert!(mq.inner(x, y).unwrap().abs() < 1e-12);
                }
            }
        }
    }

    #[test]
    fn basis_rejects_field_mismatch() {
        assert!(orthonormal_basis::<Q>(LieAlgebra::Su(2)).is_err());
    }
}
