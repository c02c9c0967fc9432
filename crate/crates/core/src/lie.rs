//! ACS for the equivariant embeddings `SU(n) ⊂ ℂ^{n×n}`, `Sp(n) ⊂ ℍ^{n×n}` and
//! of quaternionic Grassmannians into traceless Hermitian `n×n` matrices.
//!
//! All three are Einstein and minimal in a round sphere, so for unit orthogonal
//! `(X, N)`
//!
//! `ACS = −4E + 2·dim/r² − 2|II(X,N)|² − |II(N,N)|² + ⟨II(N,N), II(X,X)⟩`.
//!
//! The closed forms below are checked against that expression and against
//! the defining formula with `H` and `|II(X,·)|²` contracted over an
//! orthonormal basis.

use num_bigint::BigInt;
use num_complex::Complex;
use num_rational::BigRational;
use num_traits::{Float, One, Signed, ToPrimitive, Zero};
use rand::Rng;
use rand_distr::StandardNormal;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::killing::{orthonormal_basis, KillingMetric, LieAlgebra};
use crate::matrix::Matrix;
use crate::quaternion::Quaternion;
use crate::sampling::{grassmann_sample_pair_with, sample_unit_pair_with, seeded_rng, Orthogonality, QuatPair};
use crate::scalar::{DivisionAlgebra, Real};

/// Tolerance on the unit and orthogonality constraints of `(X, N)`.
pub const CONSTRAINT_TOL: f64 = 1e-9;

fn ratio(p: i64, q: i64) -> BigRational {
    BigRational::new(BigInt::from(p), BigInt::from(q))
}

/// `p/q` as `f64`.
pub fn rational_to_f64(r: &BigRational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case", tag = "kind")]
pub enum EmbeddingFamily {
    Su { n: usize },
    Sp { n: usize },
    /// `d`-planes in `ℍ^n`.
    GrassmannH { d: usize, n: usize },
}

impl EmbeddingFamily {
    pub fn validate(self) -> Result<Self> {
        match self {
            EmbeddingFamily::Su { n } if n < 2 => {
                Err(Error::InvalidParameter("SU(n) needs n >= 2".into()))
            }
            EmbeddingFamily::Sp { n } if n < 1 => {
                Err(Error::InvalidParameter("Sp(n) needs n >= 1".into()))
            }
            EmbeddingFamily::GrassmannH { d, n } if d < 1 || d >= n => Err(Error::InvalidParameter(
                format!("Grassmannian needs 1 <= d < n, got d={d}, n={n}"),
            )),
            _ => Ok(self),
        }
    }

    pub fn n(self) -> usize {
        match self {
            EmbeddingFamily::Su { n } | EmbeddingFamily::Sp { n } | EmbeddingFamily::GrassmannH { n, .. } => n,
        }
    }

    /// `c_n`: `2n` for `SU(n)`, `4(n+1)` otherwise.
    pub fn c_n(self) -> i64 {
        match self {
            EmbeddingFamily::Su { n } => 2 * n as i64,
            _ => 4 * (self.n() as i64 + 1),
        }
    }

    /// Manifold dimension.
    pub fn dim(self) -> usize {
        match self {
            EmbeddingFamily::Su { n } => n * n - 1,
            EmbeddingFamily::Sp { n } => n * (2 * n + 1),
            EmbeddingFamily::GrassmannH { d, n } => 4 * d * (n - d),
        }
    }

    /// Real dimension of the ambient space: `2n²`, `4n²`, or `2n² − n − 1`
    /// for traceless quaternionic Hermitian matrices.
    pub fn ambient_dim(self) -> usize {
        let n = self.n();
        match self {
            EmbeddingFamily::Su { .. } => 2 * n * n,
            EmbeddingFamily::Sp { .. } => 4 * n * n,
            EmbeddingFamily::GrassmannH { .. } => 2 * n * n - n - 1,
        }
    }

    /// `Ric = E·g`: `1/4` for the groups, `1/2` for the Grassmannians.
    pub fn einstein_constant(self) -> BigRational {
        match self {
            EmbeddingFamily::GrassmannH { .. } => ratio(1, 2),
            _ => ratio(1, 4),
        }
    }

    /// Squared radius of the sphere containing the image: `n·c_n`, or
    /// `c_n·d(n−d)/n` for the Grassmannians.
    pub fn radius_sqr(self) -> BigRational {
        let c = self.c_n();
        match self {
            EmbeddingFamily::GrassmannH { d, n } => ratio(c * (d * (n - d)) as i64, n as i64),
            _ => ratio(c * self.n() as i64, 1),
        }
    }

    /// `−4E + 2·dim/r²` from the geometry.
    pub fn constant_term(self) -> BigRational {
        let dim = BigRational::from_integer(BigInt::from(self.dim()));
        -ratio(4, 1) * self.einstein_constant() + ratio(2, 1) * dim / self.radius_sqr()
    }

    /// Closed form of the constant term: `−1/n²`, `−1/(2(n+1))`, `−2/(n+1)`.
    pub fn constant_term_closed(self) -> BigRational {
        let n = self.n() as i64;
        match self {
            EmbeddingFamily::Su { .. } => ratio(-1, n * n),
            EmbeddingFamily::Sp { .. } => ratio(-1, 2 * (n + 1)),
            EmbeddingFamily::GrassmannH { .. } => ratio(-2, n + 1),
        }
    }

    /// Proven upper bound for ACS over all unit orthogonal pairs:
    /// `−1/(4n+4)` for `Sp(n)`, `−3/(2(n+1))` for the Grassmannians and
    /// `−b_n` (even `n`) or minus the lower end of its bracket (odd `n`) for `SU(n)`.
    pub fn proven_upper_bound(self) -> BigRational {
        let n = self.n() as i64;
        match self {
            EmbeddingFamily::Su { n } => -b_n_bracket(n).0,
            EmbeddingFamily::Sp { .. } => ratio(-1, 4 * n + 4),
            EmbeddingFamily::GrassmannH { .. } => ratio(-3, 2 * (n + 1)),
        }
    }
}

/// `a_n = (2−n)/(8n)` for even `n`.
pub fn a_n_closed(n: usize) -> Result<BigRational> {
    if n < 2 || n % 2 == 1 {
        return Err(Error::InvalidParameter(format!(
            "a_n has a closed form only for even n >= 2, got {n}"
        )));
    }
    let n = n as i64;
    Ok(ratio(2 - n, 8 * n))
}

/// `[a_{n+1}, a_{n−1}] = [(1−n)/(8(n+1)), (3−n)/(8(n−1))]` for odd `n >= 3`;
/// the closed value twice for even `n`.
pub fn a_n_bracket(n: usize) -> Result<(BigRational, BigRational)> {
    if n < 2 {
        return Err(Error::InvalidParameter("a_n needs n >= 2".into()));
    }
    if n.is_multiple_of(2) {
        let a = a_n_closed(n)?;
        return Ok((a.clone(), a));
    }
    Ok((a_n_closed(n + 1)?, a_n_closed(n - 1)?))
}

/// `b_n = 1/n² + a_n/(2n) = (18−n)/(16n²)` for even `n`.
pub fn b_n_closed(n: usize) -> Result<BigRational> {
    let a = a_n_closed(n)?;
    let n = n as i64;
    Ok(ratio(1, n * n) + a / ratio(2 * n, 1))
}

/// Bracket `[1/n² + a_{n+1}/(2n), 1/n² + a_{n−1}/(2n)]` containing `b_n`.
pub fn b_n_bracket(n: usize) -> (BigRational, BigRational) {
    let (lo, hi) = a_n_bracket(n).expect("n >= 2");
    let ni = n as i64;
    let base = ratio(1, ni * ni);
    let scale = ratio(1, 2 * ni);
    (&base + &lo * &scale, &base + &hi * &scale)
}

fn check_unit_pair<S: DivisionAlgebra>(
    metric: &KillingMetric<S::Real>,
    x: &Matrix<S>,
    nm: &Matrix<S>,
) -> Result<()> {
    let tol = S::Real::lit(CONSTRAINT_TOL);
    let (xx, nn, xn) = (metric.inner(x, x)?, metric.inner(nm, nm)?, metric.inner(x, nm)?);
    if (xx - S::Real::one()).abs() > tol || (nn - S::Real::one()).abs() > tol || xn.abs() > tol {
        return Err(Error::ConstraintViolation(format!(
            "need <X,X> = <N,N> = 1, <X,N> = 0; got {xx}, {nn}, {xn}"
        )));
    }
    let skew = |m: &Matrix<S>| (&m.adjoint() + m).max_abs() <= tol;
    if !skew(x) || !skew(nm) {
        return Err(Error::ConstraintViolation("X and N must be skew-Hermitian".into()));
    }
    Ok(())
}

/// `constant − ⟨NX, XN⟩ − |N²|²` in the Killing metric, for `S` complex
/// (`SU(n)`) or quaternionic (`Sp(n)`).
pub fn group_acs<S: DivisionAlgebra>(algebra: LieAlgebra, x: &Matrix<S>, nm: &Matrix<S>) -> Result<S::Real> {
    algebra.check_field::<S>()?;
    let metric: KillingMetric<S::Real> = algebra.metric();
    check_unit_pair(&metric, x, nm)?;
    if let LieAlgebra::Su(_) = algebra {
        let tol = S::Real::lit(CONSTRAINT_TOL);
        if x.trace().modulus() > tol || nm.trace().modulus() > tol {
            return Err(Error::ConstraintViolation("X and N must be traceless".into()));
        }
    }
    let constant = S::Real::lit(rational_to_f64(&group_family(algebra).constant_term_closed()));
    Ok(group_acs_unchecked(&metric, constant, x, nm))
}

fn group_acs_unchecked<S: DivisionAlgebra>(
    metric: &KillingMetric<S::Real>,
    constant: S::Real,
    x: &Matrix<S>,
    nm: &Matrix<S>,
) -> S::Real {
    let nx = nm * x;
    let xn = x * nm;
    let n2 = nm * nm;
    constant - metric.pairing(&nx, &xn) - metric.norm_sqr(&n2)
}

pub fn group_family(algebra: LieAlgebra) -> EmbeddingFamily {
    match algebra {
        LieAlgebra::Su(n) => EmbeddingFamily::Su { n },
        LieAlgebra::Sp(n) => EmbeddingFamily::Sp { n },
    }
}

/// `II(X, Y) = (XY + YX)/2` of `G ⊂ V` at the identity.
pub fn build_group_sff<S: DivisionAlgebra>(x: &Matrix<S>, y: &Matrix<S>) -> Matrix<S> {
    x.anticommutator(y).scale(S::Real::lit(0.5))
}

/// Constraints `tr(XX*) = tr(NN*) = 1/(2c_n)` and `Re tr(XN*) = 0`.
fn check_grassmann_pair<T: Real>(
    d: usize,
    n: usize,
    x: &Matrix<Quaternion<T>>,
    nm: &Matrix<Quaternion<T>>,
) -> Result<T> {
    EmbeddingFamily::GrassmannH { d, n }.validate()?;
    for m in [x, nm] {
        if m.shape() != (d, n - d) {
            return Err(Error::ShapeMismatch {
                expected: format!("{}x{}", d, n - d),
                actual: format!("{}x{}", m.rows(), m.cols()),
            });
        }
    }
    let c = T::lit(4.0 * (n as f64 + 1.0));
    let target = (T::lit(2.0) * c).recip();
    let tol = T::lit(CONSTRAINT_TOL);
    let (xx, nn, xn) = (x.frobenius_sqr(), nm.frobenius_sqr(), x.re_inner(nm));
    if (c * (xx - target)).abs() > tol || (c * (nn - target)).abs() > tol || (c * xn).abs() > tol {
        return Err(Error::ConstraintViolation(format!(
            "need tr(XX*) = tr(NN*) = 1/(2c_n), Re tr(XN*) = 0; got {xx}, {nn}, {xn}"
        )));
    }
    Ok(c)
}

/// `−2/(n+1) − 8c_n·Re tr(XN*XN* + NN*NN*)` with `c_n = 4(n+1)`.
pub fn grassmann_acs<T: Real>(
    d: usize,
    n: usize,
    x: &Matrix<Quaternion<T>>,
    nm: &Matrix<Quaternion<T>>,
) -> Result<T> {
    let c = check_grassmann_pair(d, n, x, nm)?;
    Ok(grassmann_acs_unchecked(n, c, x, nm))
}

fn grassmann_acs_unchecked<T: Real>(
    n: usize,
    c: T,
    x: &Matrix<Quaternion<T>>,
    nm: &Matrix<Quaternion<T>>,
) -> T {
    let xn = x * &nm.adjoint();
    let nn = nm * &nm.adjoint();
    let constant = T::lit(-2.0 / (n as f64 + 1.0));
    constant - T::lit(8.0) * c * ((&xn * &xn).re_trace() + (&nn * &nn).re_trace())
}

/// Base point `p = diag((n−d)I_d, −dI_{n−d})/n` of the Grassmannian orbit.
pub fn grassmann_base_point<T: Real>(d: usize, n: usize) -> Matrix<Quaternion<T>> {
    let a = T::lit((n - d) as f64 / n as f64);
    let b = T::lit(-(d as f64) / n as f64);
    Matrix::from_fn(n, n, |i, j| {
        if i != j {
            Quaternion::from_real(T::zero())
        } else if i < d {
            Quaternion::from_real(a)
        } else {
            Quaternion::from_real(b)
        }
    })
}

/// `X̂ = [[0, X], [−X*, 0]]`.
pub fn grassmann_hat<T: Real>(n: usize, x: &Matrix<Quaternion<T>>) -> Matrix<Quaternion<T>> {
    let d = x.rows();
    let mut out = Matrix::zeros(n, n);
    out.set_block(0, d, x);
    out.set_block(d, 0, &-&x.adjoint());
    out
}

/// `II(X, N) = [X̂, [N̂, p]]`, which equals `−diag(XN* + NX*, −(X*N + N*X))`.
pub fn build_grassmann_sff<T: Real>(
    d: usize,
    n: usize,
    x: &Matrix<Quaternion<T>>,
    nm: &Matrix<Quaternion<T>>,
) -> Result<Matrix<Quaternion<T>>> {
    EmbeddingFamily::GrassmannH { d, n }.validate()?;
    for m in [x, nm] {
        if m.shape() != (d, n - d) {
            return Err(Error::ShapeMismatch {
                expected: format!("{}x{}", d, n - d),
                actual: format!("{}x{}", m.rows(), m.cols()),
            });
        }
    }
    let p = grassmann_base_point(d, n);
    Ok(grassmann_hat(n, x).commutator(&grassmann_hat(n, nm).commutator(&p)))
}

/// `−2|II(X,N)|² − |II(N,N)|² + ⟨II(N,N), II(X,X)⟩ + constant` in the ambient
/// metric `c·Re tr(AB*)`.
pub fn einstein_acs<S, F>(constant: S::Real, c: S::Real, sff: F, x: &Matrix<S>, nm: &Matrix<S>) -> S::Real
where
    S: DivisionAlgebra,
    F: Fn(&Matrix<S>, &Matrix<S>) -> Matrix<S>,
{
    let xn = sff(x, nm);
    let nn = sff(nm, nm);
    let xx = sff(x, x);
    let two = S::Real::lit(2.0);
    constant - two * c * xn.frobenius_sqr() - c * nn.frobenius_sqr() + c * nn.re_inner(&xx)
}

/// Mean curvature `Σ_k II(e_k, e_k)` over an orthonormal tangent basis.
pub fn contracted_mean_curvature<S, F>(basis: &[Matrix<S>], sff: F) -> Matrix<S>
where
    S: DivisionAlgebra,
    F: Fn(&Matrix<S>, &Matrix<S>) -> Matrix<S>,
{
    let mut h = sff(&basis[0], &basis[0]);
    for e in &basis[1..] {
        h = &h + &sff(e, e);
    }
    h
}

/// The defining expression
/// `−⟨H, II(X,X) + II(N,N)⟩ + 2|II(X,·)|² + 2|II(N,·)|² + ⟨II(X,X), II(N,N)⟩ − 2|II(X,N)|² − |II(N,N)|²`
/// with `H` and `|II(·,·)|²` contracted over `basis`; uses no curvature identities.
pub fn literal_acs<S, F>(basis: &[Matrix<S>], c: S::Real, sff: F, x: &Matrix<S>, nm: &Matrix<S>) -> S::Real
where
    S: DivisionAlgebra,
    F: Fn(&Matrix<S>, &Matrix<S>) -> Matrix<S>,
{
    let h = contracted_mean_curvature(basis, &sff);
    let partial = |v: &Matrix<S>| {
        basis
            .iter()
            .fold(S::Real::zero(), |acc, e| acc + c * sff(v, e).frobenius_sqr())
    };
    let xx = sff(x, x);
    let nn = sff(nm, nm);
    let xn = sff(x, nm);
    let two = S::Real::lit(2.0);
    -c * h.re_inner(&(&xx + &nn)) + two * partial(x) + two * partial(nm) + c * xx.re_inner(&nn)
        - two * c * xn.frobenius_sqr()
        - c * nn.frobenius_sqr()
}

/// Orthonormal basis of the Grassmannian tangent space: `q·E_ab/√(2c_n)` for
/// unit quaternions `q` and `d×(n−d)` matrix units `E_ab`.
pub fn grassmann_tangent_basis<T: Real>(d: usize, n: usize) -> Vec<Matrix<Quaternion<T>>> {
    let s = (T::lit(8.0 * (n as f64 + 1.0))).sqrt().recip();
    let units = [
        Quaternion::new(s, T::zero(), T::zero(), T::zero()),
        Quaternion::new(T::zero(), s, T::zero(), T::zero()),
        Quaternion::new(T::zero(), T::zero(), s, T::zero()),
        Quaternion::new(T::zero(), T::zero(), T::zero(), s),
    ];
    let mut out = Vec::with_capacity(4 * d * (n - d));
    for a in 0..d {
        for b in 0..(n - d) {
            for q in units {
                let mut m = Matrix::zeros(d, n - d);
                m[(a, b)] = q;
                out.push(m);
            }
        }
    }
    out
}

/// A pair realizing an objective value.
#[derive(Debug, Clone, PartialEq)]
pub struct MinimizerWitness<S> {
    pub x: Matrix<S>,
    pub n: Matrix<S>,
    pub value: f64,
    pub construction: WitnessConstruction,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum WitnessConstruction {
    ExplicitEvenN,
    /// The explicit pair for `n − 1`, padded by a zero row and column.
    PaddedEvenN,
    Descent,
    Sampled,
}

/// `tr((XN)² + N⁴)`, real for skew-Hermitian `X, N`.
pub fn su_objective<T: Real>(x: &Matrix<Complex<T>>, nm: &Matrix<Complex<T>>) -> T {
    let xn = x * nm;
    let n2 = nm * nm;
    (&xn * &xn).re_trace() + (&n2 * &n2).re_trace()
}

/// `N = i·diag(z)` and `X` supported on `(0,1), (1,0)` with `X_01 = 1/√2`,
/// `X_10 = −1/√2`. Then `tr(X²) = −1`, `tr(XN) = 0` and
/// `tr((XN)² + N⁴) = z_0 z_1 + Σ z⁴`.
pub fn pair_from_eigenvalues<T: Real>(z: &[T]) -> (Matrix<Complex<T>>, Matrix<Complex<T>>) {
    let n = z.len();
    let nm = Matrix::from_diagonal(&z.iter().map(|&v| Complex::new(T::zero(), v)).collect::<Vec<_>>());
    let mut x = Matrix::zeros(n, n);
    let h = T::lit(0.5).sqrt();
    x[(0, 1)] = Complex::new(h, T::zero());
    x[(1, 0)] = Complex::new(-h, T::zero());
    (x, nm)
}

/// The minimizer `z = (−w, +w, −v, +v, …)` with `w = √((n+2)/(4n))`, `v = √(1/(2n))`.
pub fn explicit_even_minimizer<T: Real>(n: usize) -> Result<MinimizerWitness<Complex<T>>> {
    a_n_closed(n)?;
    let w = T::lit((n as f64 + 2.0) / (4.0 * n as f64)).sqrt();
    let v = T::lit(1.0 / (2.0 * n as f64)).sqrt();
    let z: Vec<T> = (0..n)
        .map(|i| {
            let mag = if i < 2 { w } else { v };
            if i % 2 == 0 {
                -mag
            } else {
                mag
            }
        })
        .collect();
    let (x, nm) = pair_from_eigenvalues(&z);
    let value = su_objective(&x, &nm).to_f64_lossy();
    Ok(MinimizerWitness {
        x,
        n: nm,
        value,
        construction: WitnessConstruction::ExplicitEvenN,
    })
}

/// `z_0 z_1 + Σ z⁴` at the explicit minimizer, in exact arithmetic from
/// `z_0² = z_1² = (n+2)/(4n)`, `z_0 z_1 = −(n+2)/(4n)` and `z_i² = 1/(2n)` otherwise.
pub fn explicit_minimizer_value_exact(n: usize) -> Result<BigRational> {
    a_n_closed(n)?;
    let ni = n as i64;
    let w2 = ratio(ni + 2, 4 * ni);
    let v2 = ratio(1, 2 * ni);
    let rest = BigRational::from_integer(BigInt::from(ni - 2));
    Ok(-&w2 + ratio(2, 1) * &w2 * &w2 + rest * &v2 * &v2)
}

/// Rescales a pair with `tr(X²) = tr(N²) = −1` by `1/√(2n)` to Killing-unit length in `su(n)`.
pub fn to_killing_unit<T: Real>(m: &Matrix<Complex<T>>) -> Matrix<Complex<T>> {
    m.scale(T::lit(2.0 * m.rows() as f64).sqrt().recip())
}

/// Killing-unit pair in `su(n)`, `n` even and `> 18`, with `ACS = −b_n > 0`.
pub fn positive_witness<T: Real>(n: usize) -> Result<MinimizerWitness<Complex<T>>> {
    if n % 2 == 1 || n <= 18 {
        return Err(Error::InvalidParameter(format!(
            "positive_witness needs even n > 18, got {n}"
        )));
    }
    let w = explicit_even_minimizer::<T>(n)?;
    let (x, nm) = (to_killing_unit(&w.x), to_killing_unit(&w.n));
    let value = group_acs(LieAlgebra::Su(n), &x, &nm)?.to_f64_lossy();
    Ok(MinimizerWitness {
        x,
        n: nm,
        value,
        construction: WitnessConstruction::ExplicitEvenN,
    })
}

/// For odd `n > 18`: the explicit `n − 1` minimizer padded with zeros, which
/// gives `ACS = −1/n² − a_{n−1}/(2n) > 0` in `SU(n)`.
pub fn padded_positive_witness<T: Real>(n: usize) -> Result<MinimizerWitness<Complex<T>>> {
    if n.is_multiple_of(2) || n <= 18 {
        return Err(Error::InvalidParameter(format!(
            "padded_positive_witness needs odd n > 18, got {n}"
        )));
    }
    let w = explicit_even_minimizer::<T>(n - 1)?;
    let pad = |m: &Matrix<Complex<T>>| {
        let mut out = Matrix::zeros(n, n);
        out.set_block(0, 0, m);
        to_killing_unit(&out)
    };
    let (x, nm) = (pad(&w.x), pad(&w.n));
    let value = group_acs(LieAlgebra::Su(n), &x, &nm)?.to_f64_lossy();
    Ok(MinimizerWitness {
        x,
        n: nm,
        value,
        construction: WitnessConstruction::PaddedEvenN,
    })
}

/// Result of the descent search for `a_n`.
#[derive(Debug, Clone, PartialEq)]
pub struct AnEstimate {
    /// `tr((XN)² + N⁴)` evaluated on the matrices of `witness`.
    pub value: f64,
    pub eigenvalues: Vec<f64>,
    pub restarts: usize,
    /// Tangent gradient norm at the returned point.
    pub gradient_norm: f64,
    pub witness: MinimizerWitness<Complex<f64>>,
}

/// Descent stops once the tangent gradient is below this.
pub const DESCENT_TOL: f64 = 1e-10;
/// Default number of random restarts.
pub const DEFAULT_RESTARTS: usize = 32;
const MAX_ITERATIONS: usize = 20_000;

fn eigen_objective(z: &[f64]) -> f64 {
    z[0] * z[1] + z.iter().map(|v| v.powi(4)).sum::<f64>()
}

/// Gradient projected onto the tangent space of `{Σz = 0, Σz² = 1}` at `z`.
fn tangent_gradient(z: &[f64]) -> Vec<f64> {
    let mut g: Vec<f64> = z.iter().map(|v| 4.0 * v.powi(3)).collect();
    g[0] += z[1];
    g[1] += z[0];
    let mean = g.iter().sum::<f64>() / z.len() as f64;
    for v in g.iter_mut() {
        *v -= mean;
    }
    let radial: f64 = g.iter().zip(z).map(|(a, b)| a * b).sum();
    for (v, &zi) in g.iter_mut().zip(z) {
        *v -= radial * zi;
    }
    g
}

/// Back onto `{Σz = 0, Σz² = 1}`.
fn retract(z: &mut [f64]) -> bool {
    let mean = z.iter().sum::<f64>() / z.len() as f64;
    for v in z.iter_mut() {
        *v -= mean;
    }
    let norm = z.iter().map(|v| v * v).sum::<f64>().sqrt();
    if norm < 1e-12 {
        return false;
    }
    for v in z.iter_mut() {
        *v /= norm;
    }
    true
}

fn descend(mut z: Vec<f64>) -> (Vec<f64>, f64) {
    let mut step = 1.0;
    let mut grad = tangent_gradient(&z);
    let mut f = eigen_objective(&z);
    for _ in 0..MAX_ITERATIONS {
        let gn2: f64 = grad.iter().map(|v| v * v).sum();
        if gn2.sqrt() < DESCENT_TOL {
            break;
        }
        step = (step * 2.0).min(1.0);
        let mut accepted = false;
        while step > 1e-16 {
            let mut trial: Vec<f64> = z.iter().zip(&grad).map(|(a, g)| a - step * g).collect();
            if retract(&mut trial) {
                let ft = eigen_objective(&trial);
                if ft <= f - 1e-4 * step * gn2 {
                    z = trial;
                    f = ft;
                    accepted = true;
                    break;
                }
            }
            step *= 0.5;
        }
        grad = tangent_gradient(&z);
        if !accepted {
            break;
        }
    }
    let gn = grad.iter().map(|v| v * v).sum::<f64>().sqrt();
    (z, gn)
}

/// Upper estimate of `a_n = min tr((XN)² + N⁴)` over `X, N ∈ su(n)` with
/// `tr(X²) = tr(N²) = −1`, `tr(XN) = 0`.
///
/// `N` is taken diagonal, `N = i·diag(z)`; for fixed `N` the best `X` is the
/// two-entry matrix on the pair of eigenvalues with the smallest product, so
/// the search runs over `z` alone: projected gradient descent with Armijo
/// steps on `z_0 z_1 + Σ z⁴`, from `restarts` random starts (stream `r` of
/// `seed` for start `r`). The returned value is evaluated on the matrices.
pub fn estimate_a_n(n: usize, restarts: usize, seed: u64) -> Result<AnEstimate> {
    if n < 2 {
        return Err(Error::InvalidParameter("a_n needs n >= 2".into()));
    }
    if restarts < 1 {
        return Err(Error::InvalidParameter("need at least one restart".into()));
    }
    let runs: Vec<(Vec<f64>, f64, f64)> = (0..restarts)
        .into_par_iter()
        .map(|r| {
            let mut rng = seeded_rng(seed, r as u64);
            let mut z: Vec<f64> = (0..n).map(|_| rng.sample(StandardNormal)).collect();
            while !retract(&mut z) {
                z = (0..n).map(|_| rng.sample(StandardNormal)).collect();
            }
            let (z, gn) = descend(z);
            let f = eigen_objective(&z);
            (z, f, gn)
        })
        .collect();
    let (z, _, gn) = runs
        .into_iter()
        .reduce(|a, b| if b.1 < a.1 { b } else { a })
        .expect("restarts >= 1");
    let (x, nm) = pair_from_eigenvalues(&z);
    let value = su_objective(&x, &nm);
    Ok(AnEstimate {
        value,
        eigenvalues: z,
        restarts,
        gradient_norm: gn,
        witness: MinimizerWitness {
            x,
            n: nm,
            value,
            construction: WitnessConstruction::Descent,
        },
    })
}

/// Outcome of a sampling sweep.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SampleStats {
    pub samples: usize,
    pub seed: u64,
    pub min_value: f64,
    pub max_value: f64,
    /// Stream index of the minimizing sample; re-draw with [`seeded_rng`].
    pub argmin_index: u64,
}

fn merge(samples: usize, seed: u64, values: Vec<(u64, f64)>) -> SampleStats {
    let mut stats = SampleStats {
        samples,
        seed,
        min_value: f64::INFINITY,
        max_value: f64::NEG_INFINITY,
        argmin_index: 0,
    };
    for (i, v) in values {
        if v < stats.min_value {
            stats.min_value = v;
            stats.argmin_index = i;
        }
        stats.max_value = stats.max_value.max(v);
    }
    stats
}

/// One group sample: stream `index` of `seed`.
pub fn group_sample<S: DivisionAlgebra<Real = f64>>(
    algebra: LieAlgebra,
    seed: u64,
    index: u64,
) -> Result<(Matrix<S>, Matrix<S>, f64)> {
    let (x, nm) = sample_unit_pair_with::<S, _>(algebra, &mut seeded_rng(seed, index))?;
    let v = group_acs(algebra, &x, &nm)?;
    Ok((x, nm, v))
}

/// One Grassmannian sample: stream `index` of `seed`.
pub fn grassmann_sample(d: usize, n: usize, seed: u64, index: u64) -> Result<(QuatPair<f64>, f64)> {
    let (x, nm) = grassmann_sample_pair_with::<f64, _>(d, n, Orthogonality::RealPart, &mut seeded_rng(seed, index))?;
    let v = grassmann_acs(d, n, &x, &nm)?;
    Ok(((x, nm), v))
}

/// Minimum of ACS over `samples` constrained random pairs, sample `i` drawn
/// from stream `i` of `seed`; independent of the thread count.
pub fn sample_min_acs(family: EmbeddingFamily, samples: usize, seed: u64) -> Result<SampleStats> {
    family.validate()?;
    if samples < 1 {
        return Err(Error::InvalidParameter("need at least one sample".into()));
    }
    let values: Result<Vec<(u64, f64)>> = (0..samples as u64)
        .into_par_iter()
        .map(|i| {
            let v = match family {
                EmbeddingFamily::Su { n } => group_sample::<Complex<f64>>(LieAlgebra::Su(n), seed, i)?.2,
                EmbeddingFamily::Sp { n } => group_sample::<Quaternion<f64>>(LieAlgebra::Sp(n), seed, i)?.2,
                EmbeddingFamily::GrassmannH { d, n } => grassmann_sample(d, n, seed, i)?.1,
            };
            Ok((i, v))
        })
        .collect();
    Ok(merge(samples, seed, values?))
}

/// Group ACS through `II = (XY+YX)/2` and the constant term.
pub fn group_acs_via_sff<S: DivisionAlgebra>(algebra: LieAlgebra, x: &Matrix<S>, nm: &Matrix<S>) -> S::Real {
    let fam = group_family(algebra);
    let c = S::Real::lit(fam.c_n() as f64);
    let constant = S::Real::lit(rational_to_f64(&fam.constant_term()));
    einstein_acs(constant, c, build_group_sff, x, nm)
}

/// Group ACS from the defining expression, contracted over an orthonormal basis.
pub fn group_acs_literal<S: DivisionAlgebra>(algebra: LieAlgebra, x: &Matrix<S>, nm: &Matrix<S>) -> Result<S::Real> {
    let basis = orthonormal_basis::<S>(algebra)?;
    let c = S::Real::lit(group_family(algebra).c_n() as f64);
    Ok(literal_acs(&basis, c, build_group_sff, x, nm))
}

/// Grassmannian ACS through the commutator second fundamental form and the constant term.
pub fn grassmann_acs_via_sff<T: Real>(
    d: usize,
    n: usize,
    x: &Matrix<Quaternion<T>>,
    nm: &Matrix<Quaternion<T>>,
) -> Result<T> {
    let fam = EmbeddingFamily::GrassmannH { d, n }.validate()?;
    let c = T::lit(fam.c_n() as f64);
    let constant = T::lit(rational_to_f64(&fam.constant_term()));
    let sff = |a: &Matrix<Quaternion<T>>, b: &Matrix<Quaternion<T>>| {
        build_grassmann_sff(d, n, a, b).expect("validated shapes")
    };
    build_grassmann_sff(d, n, x, nm)?;
    Ok(einstein_acs(constant, c, sff, x, nm))
}

/// Grassmannian ACS from the defining expression over the tangent basis.
pub fn grassmann_acs_literal<T: Real>(
    d: usize,
    n: usize,
    x: &Matrix<Quaternion<T>>,
    nm: &Matrix<Quaternion<T>>,
) -> Result<T> {
    let fam = EmbeddingFamily::GrassmannH { d, n }.validate()?;
    build_grassmann_sff(d, n, x, nm)?;
    let c = T::lit(fam.c_n() as f64);
    let basis = grassmann_tangent_basis::<T>(d, n);
    let sff = |a: &Matrix<Quaternion<T>>, b: &Matrix<Quaternion<T>>| {
        build_grassmann_sff(d, n, a, b).expect("validated shapes")
    };
    Ok(literal_acs(&basis, c, sff, x, nm))
}

/// `|r|` as `f64`, for reporting.
pub fn rational_abs_f64(r: &BigRational) -> f64 {
    rational_to_f64(&r.abs())
}
