//! Seeded sampling of orthonormal pairs in 𝔰𝔲(n), 𝔰𝔭(n) and the tangent
//! spaces of quaternionic Grassmannians.
//!
//! Entries are standard normal, projected onto the algebra and then
//! Gram–Schmidt orthonormalized in the Killing metric, which gives the
//! rotation-invariant distribution on pairs of orthonormal vectors.

use num_traits::{Float, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use crate::error::{Error, Result};
use crate::killing::{project_lie_algebra, quaternionic_left_orbit, KillingMetric, LieAlgebra};
use crate::matrix::Matrix;
use crate::quaternion::Quaternion;
use crate::scalar::{DivisionAlgebra, Real};

/// Redraws allowed before a degenerate pair is reported as an error.
pub const MAX_DRAWS: usize = 16;

/// Deterministic generator for `(seed, stream)`; distinct streams never overlap.
pub fn seeded_rng(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

/// Matrix with i.i.d. standard normal real coordinates.
pub fn gaussian_matrix<S: DivisionAlgebra, R: Rng>(rng: &mut R, rows: usize, cols: usize) -> Matrix<S> {
    let d = S::KIND.dim();
    let mut buf = vec![S::Real::zero(); d];
    Matrix::from_fn(rows, cols, |_, _| {
        for c in buf.iter_mut() {
            let z: f64 = rng.sample(StandardNormal);
            *c = S::Real::lit(z);
        }
        S::from_components(&buf)
    })
}

/// Which orthogonality a Grassmannian pair must satisfy.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Orthogonality {
    /// `Re tr(X N*) = 0`, orthogonality in the ambient Killing metric.
    #[default]
    RealPart,
    /// The full quaternionic trace `tr(X N*)` vanishes.
    Strict,
}

/// A Killing-orthonormal pair `(X, N)` in the algebra, using stream 0 of `seed`.
pub fn sample_unit_pair<S>(algebra: LieAlgebra, seed: u64) -> Result<(Matrix<S>, Matrix<S>)>
where
    S: DivisionAlgebra,
{
    sample_unit_pair_with(algebra, &mut seeded_rng(seed, 0))
}

/// As [`sample_unit_pair`], drawing from a caller-supplied generator.
pub fn sample_unit_pair_with<S, R>(algebra: LieAlgebra, rng: &mut R) -> Result<(Matrix<S>, Matrix<S>)>
where
    S: DivisionAlgebra,
    R: Rng,
{
    algebra.check_field::<S>()?;
    let n = algebra.n();
    if n < 1 || (matches!(algebra, LieAlgebra::Su(_)) && n < 2) {
        return Err(Error::InvalidParameter(format!(
            "{algebra:?} has no orthonormal pairs"
        )));
    }
    let metric: KillingMetric<S::Real> = algebra.metric();
    let tiny = S::Real::lit(1e-8);
    for _ in 0..MAX_DRAWS {
        let x = project_lie_algebra(&gaussian_matrix::<S, _>(rng, n, n), algebra);
        let nn = project_lie_algebra(&gaussian_matrix::<S, _>(rng, n, n), algebra);
        if let Some(pair) = orthonormalize(&metric, x, nn, tiny) {
            return Ok(pair);
        }
    }
    Err(Error::DegenerateSample {
        attempts: MAX_DRAWS,
    })
}

fn orthonormalize<S>(
    metric: &KillingMetric<S::Real>,
    x: Matrix<S>,
    n: Matrix<S>,
    tiny: S::Real,
) -> Option<(Matrix<S>, Matrix<S>)>
where
    S: DivisionAlgebra,
{
    let nx = metric.norm_sqr(&x).sqrt();
    if nx <= tiny {
        return None;
    }
    let x = x.scale(nx.recip());
    let n = &n - &x.scale(metric.pairing(&n, &x));
    let nn = metric.norm_sqr(&n).sqrt();
    if nn <= tiny {
        return None;
    }
    let n = n.scale(nn.recip());
    // one re-orthogonalization pass keeps ⟨X, N⟩ at rounding level
    let n = &n - &x.scale(metric.pairing(&n, &x));
    let n = n.scale(metric.norm_sqr(&n).sqrt().recip());
    Some((x, n))
}

/// `(X, N)` as quaternionic `d×(n−d)` blocks.
pub type QuatPair<T> = (Matrix<Quaternion<T>>, Matrix<Quaternion<T>>);

/// A pair of quaternionic `d×(n−d)` blocks with `tr(XX*) = tr(NN*) = 1/(2c_n)`,
/// `c_n = 4(n+1)`, orthogonal in the requested sense.
pub fn grassmann_sample_pair<T: Real>(
    d: usize,
    n: usize,
    seed: u64,
    mode: Orthogonality,
) -> Result<QuatPair<T>> {
    grassmann_sample_pair_with(d, n, mode, &mut seeded_rng(seed, 0))
}

pub fn grassmann_sample_pair_with<T: Real, R: Rng>(
    d: usize,
    n: usize,
    mode: Orthogonality,
    rng: &mut R,
) -> Result<QuatPair<T>> {
    if d < 1 || d >= n {
        return Err(Error::InvalidParameter(format!(
            "Grassmannian needs 1 <= d < n, got d={d}, n={n}"
        )));
    }
    if mode == Orthogonality::Strict && d * (n - d) < 2 {
        // ℍ^{1×1} has no nonzero N with tr(XN*) = 0
        return Err(Error::InvalidParameter(
            "strict orthogonality needs d(n-d) >= 2".into(),
        ));
    }
    let c_n = T::lit(4.0 * (n as f64 + 1.0));
    let target = (T::lit(2.0) * c_n).recip().sqrt();
    let tiny = T::lit(1e-8);
    let rows = d;
    let cols = n - d;
    for _ in 0..MAX_DRAWS {
        let x: Matrix<Quaternion<T>> = gaussian_matrix(rng, rows, cols);
        let mut nm: Matrix<Quaternion<T>> = gaussian_matrix(rng, rows, cols);
        let fx = x.frobenius_sqr().sqrt();
        if fx <= tiny {
            continue;
        }
        let x = x.scale(fx.recip());
        let against: Vec<Matrix<Quaternion<T>>> = match mode {
            Orthogonality::RealPart => vec![x.clone()],
            Orthogonality::Strict => quaternionic_left_orbit(&x).to_vec(),
        };
        for _pass in 0..2 {
            for v in &against {
                nm = &nm - &v.scale(nm.re_inner(v));
            }
        }
        let fnm = nm.frobenius_sqr().sqrt();
        if fnm <= tiny {
            continue;
        }
        let nm = nm.scale(fnm.recip());
        return Ok((x.scale(target), nm.scale(target)));
    }
    Err(Error::DegenerateSample {
        attempts: MAX_DRAWS,
    })
}
