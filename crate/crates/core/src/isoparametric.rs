//! Minimal isoparametric hypersurfaces of spheres with four principal
//! curvatures and multiplicities `(m1, m2, m1, m2)`.
//!
//! The hypersurface `M^n ⊂ S^{n+1} ⊂ ℝ^{n+2}` is described at a point `p` of the
//! 2-dimensional normal section by its curvature normals `ξ_1..ξ_4`: the second
//! fundamental form of `M ⊂ ℝ^{n+2}` is `II(X, Y) = Σ_i ⟨X_i, Y_i⟩ ξ_i`, where
//! `X_i` is the component of `X` in the `i`-th curvature distribution.
//!
//! For unit orthogonal `(X, N)` with `s_i = |X_i|²`, `t_i = |N_i|²` the ACS
//! quantity depends only on `(s, t) ∈ Δ³ × Δ³` up to a nonpositive correction
//! `−2|II(X, N)|²`, so its maximum is bounded by the maximum of `ACS′(s, t)`,
//! which is affine in `s` and concave in `t`.

use rand::Rng;
use rand_distr::StandardNormal;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::Real;
use crate::simplex::{grid_oracle, maximize_over_simplex, SimplexQuadraticProgram, SimplexSolution};

/// Roots `α_i` of the section, in the order of the curvature distributions.
pub const ROOTS: [[f64; 2]; 4] = [[1.0, -1.0], [1.0, 0.0], [1.0, 1.0], [0.0, 1.0]];

/// Multiplicities `(m1, m2)` of a four-curvature isoparametric family.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Multiplicities {
    pub m1: usize,
    pub m2: usize,
}

impl Multiplicities {
    /// Requires `1 <= m1 <= m2`.
    pub fn new(m1: usize, m2: usize) -> Result<Self> {
        if m1 < 1 || m2 < m1 {
            return Err(Error::InvalidParameter(format!(
                "multiplicities need 1 <= m1 <= m2, got ({m1}, {m2})"
            )));
        }
        Ok(Self { m1, m2 })
    }

    /// Dimension `n = 2(m1 + m2)` of the hypersurface.
    pub fn n(self) -> usize {
        2 * (self.m1 + self.m2)
    }

    /// Sizes of the four distributions `E_1..E_4`.
    pub fn per_distribution(self) -> [usize; 4] {
        [self.m1, self.m2, self.m1, self.m2]
    }

    /// Distribution index of each tangent frame vector, `E_1` first.
    pub fn distribution_of_frame(self) -> Vec<usize> {
        self.per_distribution()
            .iter()
            .enumerate()
            .flat_map(|(i, &m)| std::iter::repeat_n(i, m))
            .collect()
    }
}

/// Angle of the minimal leaf, `θ = ½·arctan(√(m2/m1))`.
pub fn minimal_angle<T: Real>(m: Multiplicities) -> T {
    let ratio = T::lit(m.m2 as f64) / T::lit(m.m1 as f64);
    T::lit(0.5) * ratio.sqrt().atan()
}

/// Relative volume `cos^{m1}(2θ)·sin^{m2}(2θ)/2^{m2}` of the parallel leaf at `θ`.
pub fn volume_profile<T: Real>(m: Multiplicities, theta: T) -> T {
    let two_theta = T::lit(2.0) * theta;
    two_theta.cos().powi(m.m1 as i32) * two_theta.sin().powi(m.m2 as i32)
        / T::lit(2.0).powi(m.m2 as i32)
}

/// The curvature normals at the section point `p = (cos θ, sin θ)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CurvatureNormalSystem<T> {
    pub theta: T,
    pub p: [T; 2],
    pub xi: [[T; 2]; 4],
}

impl<T: Real> CurvatureNormalSystem<T> {
    /// `ξ_i = −α_i / ⟨α_i, p⟩`; needs `θ ∈ (0, π/4)`.
    pub fn at_angle(theta: T) -> Self {
        let p = [theta.cos(), theta.sin()];
        let mut xi = [[T::zero(); 2]; 4];
        for (x, a) in xi.iter_mut().zip(ROOTS) {
            let a = [T::lit(a[0]), T::lit(a[1])];
            let ap = a[0] * p[0] + a[1] * p[1];
            *x = [-a[0] / ap, -a[1] / ap];
        }
        Self { theta, p, xi }
    }

    /// `G_ij = ⟨ξ_i, ξ_j⟩`.
    pub fn gram(&self) -> [[T; 4]; 4] {
        let mut g = [[T::zero(); 4]; 4];
        for i in 0..4 {
            for j in 0..4 {
                g[i][j] = dot2(self.xi[i], self.xi[j]);
            }
        }
        g
    }

    /// `H = Σ m_i ξ_i`.
    pub fn mean_curvature(&self, mult: [usize; 4]) -> [T; 2] {
        let mut h = [T::zero(); 2];
        for (x, &m) in self.xi.iter().zip(&mult) {
            let m = T::lit(m as f64);
            h[0] += m * x[0];
            h[1] += m * x[1];
        }
        h
    }
}

fn dot2<T: Real>(a: [T; 2], b: [T; 2]) -> T {
    a[0] * b[0] + a[1] * b[1]
}

/// Curvature normals of the minimal leaf.
pub fn curvature_normals<T: Real>(m: Multiplicities) -> CurvatureNormalSystem<T> {
    CurvatureNormalSystem::at_angle(minimal_angle(m))
}

fn check_simplex_point<T: Real>(name: &str, s: &[T]) -> Result<()> {
    if s.len() != 4 {
        return Err(Error::ShapeMismatch {
            expected: "4 coordinates".into(),
            actual: format!("{} in {name}", s.len()),
        });
    }
    Ok(())
}

/// `ACS′(s, t) = −2n + Σ_{ij}(s_i − t_i)t_j G_ij + 2Σ_i(s_i + t_i)G_ii` for the minimal leaf.
pub fn acs_prime<T: Real>(sys: &CurvatureNormalSystem<T>, m: Multiplicities, s: &[T], t: &[T]) -> Result<T> {
    check_simplex_point("s", s)?;
    check_simplex_point("t", t)?;
    let g = sys.gram();
    let mut v = -T::lit(2.0 * m.n() as f64);
    for i in 0..4 {
        for j in 0..4 {
            v += (s[i] - t[i]) * t[j] * g[i][j];
        }
        v += T::lit(2.0) * (s[i] + t[i]) * g[i][i];
    }
    Ok(v)
}

/// `Σ_{ij}(−m_i(s_j + t_j) + (s_i − t_i)t_j)G_ij + 2Σ_i(s_i + t_i)G_ii`,
/// valid without assuming minimality.
pub fn acs_prime_general<T: Real>(
    sys: &CurvatureNormalSystem<T>,
    mult: [usize; 4],
    s: &[T],
    t: &[T],
) -> Result<T> {
    check_simplex_point("s", s)?;
    check_simplex_point("t", t)?;
    let g = sys.gram();
    let mut v = T::zero();
    for i in 0..4 {
        let mi = T::lit(mult[i] as f64);
        for j in 0..4 {
            v += (-mi * (s[j] + t[j]) + (s[i] - t[i]) * t[j]) * g[i][j];
        }
        v += T::lit(2.0) * (s[i] + t[i]) * g[i][i];
    }
    Ok(v)
}

/// The concave program `t ↦ ACS′(e_k, t)`: constant `−2n + 2G_kk`, linear
/// part `G_kj + 2G_jj`, quadratic part `−G`.
pub fn vertex_program<T: Real>(
    sys: &CurvatureNormalSystem<T>,
    m: Multiplicities,
    k: usize,
) -> Result<SimplexQuadraticProgram<T>> {
    if k >= 4 {
        return Err(Error::InvalidParameter(format!("vertex index {k} out of range")));
    }
    let g = sys.gram();
    let two = T::lit(2.0);
    let constant = -two * T::lit(m.n() as f64) + two * g[k][k];
    let linear = (0..4).map(|j| g[k][j] + two * g[j][j]).collect();
    let quadratic = (0..4).map(|i| (0..4).map(|j| -g[i][j]).collect()).collect();
    SimplexQuadraticProgram::new(constant, linear, quadratic)
}

/// Whether `max ACS′` is the maximum of ACS or only an upper bound for it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Semantics {
    /// All multiplicities exceed 1: every `(s, t)` is realized with `II(X, N) = 0`.
    Exact,
    /// Some multiplicity equals 1: `max ACS ≤ max ACS′` only.
    UpperBound,
}

#[derive(Debug, Clone, PartialEq)]
pub struct MaxAcs<T> {
    pub value: T,
    /// Vertex `e_k` of the `s`-simplex attaining the maximum.
    pub s_vertex: usize,
    pub t: Vec<T>,
    pub semantics: Semantics,
    /// One solution per `s`-vertex.
    pub vertex_solutions: Vec<SimplexSolution<T>>,
}

/// Maximum of `ACS′` over `Δ³ × Δ³`. `ACS′` is affine in `s`, so the maximum
/// is attained at an `s`-vertex and reduces to four concave programs in `t`.
pub fn max_acs<T: Real>(m: Multiplicities) -> Result<MaxAcs<T>> {
    let sys = curvature_normals::<T>(m);
    let mut vertex_solutions = Vec::with_capacity(4);
    for k in 0..4 {
        vertex_solutions.push(maximize_over_simplex(&vertex_program(&sys, m, k)?)?);
    }
    let mut best = 0;
    for k in 1..4 {
        if vertex_solutions[k].value > vertex_solutions[best].value {
            best = k;
        }
    }
    Ok(MaxAcs {
        value: vertex_solutions[best].value,
        s_vertex: best,
        t: vertex_solutions[best].point.clone(),
        semantics: if m.m1 > 1 {
            Semantics::Exact
        } else {
            Semantics::UpperBound
        },
        vertex_solutions,
    })
}

/// Grid estimate of `max ACS′`: the largest grid maximum over the four
/// vertex programs with the largest of their resolution bounds.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridMaxAcs<T> {
    pub value: T,
    pub error_bound: T,
    pub points_evaluated: u64,
}

pub fn grid_max_acs<T: Real>(m: Multiplicities, step: f64) -> Result<GridMaxAcs<T>> {
    let sys = curvature_normals::<T>(m);
    let mut out = GridMaxAcs {
        value: T::neg_infinity(),
        error_bound: T::zero(),
        points_evaluated: 0,
    };
    for k in 0..4 {
        let est = grid_oracle(&vertex_program(&sys, m, k)?, step)?;
        out.value = out.value.max(est.value);
        out.error_bound = out.error_bound.max(est.error_bound);
        out.points_evaluated += est.points_evaluated;
    }
    Ok(out)
}

/// Smallest `m2` in `[m1, m2_max]` from which `max ACS′ < 0` holds for every
/// larger `m2` up to `m2_max`. Numeric evidence only.
pub fn negativity_threshold(m1: usize, m2_max: usize) -> Result<Option<usize>> {
    let mut threshold = None;
    for m2 in (m1..=m2_max).rev() {
        let v = max_acs::<f64>(Multiplicities::new(m1, m2)?)?.value;
        if v < 0.0 {
            threshold = Some(m2);
        } else {
            break;
        }
    }
    Ok(threshold)
}

/// `−2n + 5|ξ_1|²` with `|ξ_1|² = 2(m1+m2)/m1·(1 + √(m2/(m1+m2)))`.
pub fn simple_upper_bound<T: Real>(m: Multiplicities) -> T {
    let (m1, m2) = (T::lit(m.m1 as f64), T::lit(m.m2 as f64));
    let sum = m1 + m2;
    -T::lit(2.0 * m.n() as f64) + T::lit(10.0) * sum / m1 * (T::one() + (m2 / sum).sqrt())
}

/// Ricci eigenvalue `n − |ξ_i|²` on each distribution `E_i`.
pub fn ricci_eigenvalues<T: Real>(sys: &CurvatureNormalSystem<T>, m: Multiplicities) -> [T; 4] {
    let n = T::lit(m.n() as f64);
    sys.xi.map(|x| n - dot2(x, x))
}

/// The sectional curvature `⟨ξ_1, ξ_4⟩` of a plane spanned by `E_1` and `E_4` vectors.
pub fn extreme_sectional<T: Real>(sys: &CurvatureNormalSystem<T>) -> T {
    dot2(sys.xi[0], sys.xi[3])
}

/// Upper bound `−2(m1 + 2m2) + 10 + 5m1` for ACS on the focal manifold `M_+`.
pub fn focal_acs_upper(m: Multiplicities) -> i64 {
    let (m1, m2) = (m.m1 as i64, m.m2 as i64);
    -2 * (m1 + 2 * m2) + 10 + 5 * m1
}

/// Whether [`focal_acs_upper`] is negative, decided as `4m2 > 3m1 + 10`.
pub fn focal_bound_negative(m: Multiplicities) -> bool {
    4 * m.m2 > 3 * m.m1 + 10
}

/// Lower bound `2m2 − 2` for the Ricci curvature of `M_+` on unit vectors.
pub fn focal_ricci_lower(m: Multiplicities) -> i64 {
    2 * m.m2 as i64 - 2
}

/// A symmetric bilinear form on `ℝ^n` with values in `ℝ^codim`.
#[derive(Debug, Clone, PartialEq)]
pub struct SffTensor<T> {
    n: usize,
    codim: usize,
    entries: Vec<T>,
}

impl<T: Real> SffTensor<T> {
    pub fn zeros(n: usize, codim: usize) -> Self {
        Self {
            n,
            codim,
            entries: vec![T::zero(); n * n * codim],
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn codim(&self) -> usize {
        self.codim
    }

    pub fn get(&self, j: usize, k: usize) -> &[T] {
        let at = (j * self.n + k) * self.codim;
        &self.entries[at..at + self.codim]
    }

    /// Sets `II[j][k]` and `II[k][j]` together.
    pub fn set(&mut self, j: usize, k: usize, v: &[T]) {
        assert_eq!(v.len(), self.codim);
        for (jj, kk) in [(j, k), (k, j)] {
            let at = (jj * self.n + kk) * self.codim;
            self.entries[at..at + self.codim].copy_from_slice(v);
        }
    }

    /// `II(x, y)`.
    pub fn apply(&self, x: &[T], y: &[T]) -> Vec<T> {
        let mut out = vec![T::zero(); self.codim];
        for j in 0..self.n {
            if x[j] == T::zero() {
                continue;
            }
            for k in 0..self.n {
                let w = x[j] * y[k];
                if w == T::zero() {
                    continue;
                }
                for (o, &e) in out.iter_mut().zip(self.get(j, k)) {
                    *o += w * e;
                }
            }
        }
        out
    }

    /// `|II(x, ·)|² = Σ_k |II(x, e_k)|²`.
    pub fn partial_norm_sqr(&self, x: &[T]) -> T {
        let mut total = T::zero();
        for k in 0..self.n {
            let mut v = vec![T::zero(); self.codim];
            for j in 0..self.n {
                for (o, &e) in v.iter_mut().zip(self.get(j, k)) {
                    *o += x[j] * e;
                }
            }
            total += norm_sqr(&v);
        }
        total
    }

    /// Mean curvature vector `Σ_j II(e_j, e_j)`.
    pub fn trace(&self) -> Vec<T> {
        let mut h = vec![T::zero(); self.codim];
        for j in 0..self.n {
            for (o, &e) in h.iter_mut().zip(self.get(j, j)) {
                *o += e;
            }
        }
        h
    }

    /// Ricci form of the immersion into flat space (Gauss equation):
    /// `Ric(e_j, e_k) = ⟨H, II(e_j, e_k)⟩ − Σ_l ⟨II(e_j, e_l), II(e_k, e_l)⟩`.
    pub fn ricci(&self, h: &[T]) -> Vec<Vec<T>> {
        let mut ric = vec![vec![T::zero(); self.n]; self.n];
        for j in 0..self.n {
            for k in 0..self.n {
                let mut v = vdot(h, self.get(j, k));
                for l in 0..self.n {
                    v -= vdot(self.get(j, l), self.get(k, l));
                }
                ric[j][k] = v;
            }
        }
        ric
    }
}

fn vdot<T: Real>(a: &[T], b: &[T]) -> T {
    a.iter().zip(b).fold(T::zero(), |acc, (&x, &y)| acc + x * y)
}

fn norm_sqr<T: Real>(a: &[T]) -> T {
    vdot(a, a)
}

/// `II(e_j, e_k) = δ_jk ξ_{i(j)}` in a frame adapted to `E_1, E_2, E_3, E_4`
/// (sizes `m1, m2, m1, m2`).
pub fn build_sff<T: Real>(sys: &CurvatureNormalSystem<T>, m: Multiplicities) -> SffTensor<T> {
    let mut sff = SffTensor::zeros(m.n(), 2);
    for (j, i) in m.distribution_of_frame().into_iter().enumerate() {
        sff.set(j, j, &sys.xi[i]);
    }
    sff
}

/// Tolerance on `|X| = |N| = 1`, `⟨X, N⟩ = 0`.
pub const FRAME_TOL: f64 = 1e-9;

/// The ACS quantity of a unit orthogonal pair `(X, N)`:
/// `−⟨H, II(X,X) + II(N,N)⟩ + 2|II(X,·)|² + 2|II(N,·)|² + ⟨II(X,X), II(N,N)⟩
///  − 2|II(X,N)|² − |II(N,N)|²`.
pub fn acs_from_sff<T: Real>(sff: &SffTensor<T>, h: &[T], x: &[T], nv: &[T]) -> Result<T> {
    let n = sff.n();
    if x.len() != n || nv.len() != n || h.len() != sff.codim() {
        return Err(Error::ShapeMismatch {
            expected: format!("tangent vectors of length {n}, normal of length {}", sff.codim()),
            actual: format!("{}, {}, {}", x.len(), nv.len(), h.len()),
        });
    }
    let tol = T::lit(FRAME_TOL);
    let (xx, nn, xn) = (vdot(x, x), vdot(nv, nv), vdot(x, nv));
    if (xx - T::one()).abs() > tol || (nn - T::one()).abs() > tol || xn.abs() > tol {
        return Err(Error::ConstraintViolation(format!(
            "need |X| = |N| = 1 and <X,N> = 0, got |X|^2 = {xx}, |N|^2 = {nn}, <X,N> = {xn}"
        )));
    }
    let two = T::lit(2.0);
    let iixx = sff.apply(x, x);
    let iinn = sff.apply(nv, nv);
    let iixn = sff.apply(x, nv);
    let sum: Vec<T> = iixx.iter().zip(&iinn).map(|(&a, &b)| a + b).collect();
    Ok(-vdot(h, &sum) + two * sff.partial_norm_sqr(x) + two * sff.partial_norm_sqr(nv)
        + vdot(&iixx, &iinn)
        - two * norm_sqr(&iixn)
        - norm_sqr(&iinn))
}

/// Squared lengths `|X_i|²` of the components of `x` in each distribution.
pub fn distribution_weights<T: Real>(m: Multiplicities, x: &[T]) -> [T; 4] {
    let mut w = [T::zero(); 4];
    for (j, i) in m.distribution_of_frame().into_iter().enumerate() {
        w[i] += x[j] * x[j];
    }
    w
}

/// `II(X, N)` for the tensor of [`build_sff`], i.e. `Σ_i ⟨X_i, N_i⟩ ξ_i`.
pub fn mixed_term<T: Real>(sys: &CurvatureNormalSystem<T>, m: Multiplicities, x: &[T], nv: &[T]) -> [T; 2] {
    let mut v = [T::zero(); 2];
    for (j, i) in m.distribution_of_frame().into_iter().enumerate() {
        let w = x[j] * nv[j];
        v[0] += w * sys.xi[i][0];
        v[1] += w * sys.xi[i][1];
    }
    v
}

/// A uniformly random orthonormal pair in `ℝ^n`.
pub fn random_frame_pair<T: Real, R: Rng>(n: usize, rng: &mut R) -> Result<(Vec<T>, Vec<T>)> {
    if n < 2 {
        return Err(Error::InvalidParameter("need n >= 2 for an orthonormal pair".into()));
    }
    let draw = |rng: &mut R| -> Vec<T> {
        (0..n)
            .map(|_| T::lit(rng.sample::<f64, _>(StandardNormal)))
            .collect()
    };
    for _ in 0..crate::sampling::MAX_DRAWS {
        let x = draw(rng);
        let y = draw(rng);
        let nx = norm_sqr(&x).sqrt();
        if nx <= T::lit(1e-8) {
            continue;
        }
        let x: Vec<T> = x.iter().map(|&v| v / nx).collect();
        let mut y = y;
        for _pass in 0..2 {
            let c = vdot(&y, &x);
            for (yv, &xv) in y.iter_mut().zip(&x) {
                *yv -= c * xv;
            }
        }
        let ny = norm_sqr(&y).sqrt();
        if ny <= T::lit(1e-8) {
            continue;
        }
        let y = y.iter().map(|&v| v / ny).collect();
        return Ok((x, y));
    }
    Err(Error::DegenerateSample {
        attempts: crate::sampling::MAX_DRAWS,
    })
}

/// A unit orthogonal pair with `|X_i|² = s_i`, `|N_i|² = t_i` and `X_i ⊥ N_i`
/// in every distribution, so that `ACS(X, N) = ACS′(s, t)`. Needs two frame
/// vectors in each distribution where both `s_i` and `t_i` are positive.
pub fn frame_pair_from_weights<T: Real>(m: Multiplicities, s: &[T], t: &[T]) -> Result<(Vec<T>, Vec<T>)> {
    check_simplex_point("s", s)?;
    check_simplex_point("t", t)?;
    let mut x = vec![T::zero(); m.n()];
    let mut y = vec![T::zero(); m.n()];
    let mut offset = 0;
    for (i, &size) in m.per_distribution().iter().enumerate() {
        if s[i] < T::zero() || t[i] < T::zero() {
            return Err(Error::InvalidParameter("weights must be nonnegative".into()));
        }
        let both = s[i] > T::zero() && t[i] > T::zero();
        if both && size < 2 {
            return Err(Error::InvalidParameter(format!(
                "distribution {} has dimension 1 and cannot carry orthogonal parts",
                i + 1
            )));
        }
        x[offset] = s[i].sqrt();
        y[offset + usize::from(both)] = t[i].sqrt();
        offset += size;
    }
    Ok((x, y))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sampling::seeded_rng;

    fn mult(m1: usize, m2: usize) -> Multiplicities {
        Multiplicities::new(m1, m2).unwrap()
    }

    #[test]
    fn minimal_angle_values() {
        assert!((minimal_angle::<f64>(mult(1, 1)) - std::f64::consts::PI / 8.0).abs() < 1e-15);
        assert!((minimal_angle::<f64>(mult(4, 5)) - 0.4205343).abs() < 5e-8);
        let far = minimal_angle::<f64>(mult(1, 1_000_000));
        assert!(far < std::f64::consts::FRAC_PI_4 && far > 0.7848);
    }

    #[test]
    fn volume_profile_values_and_argmax() {
        let v = volume_profile(mult(1, 1), std::f64::consts::PI / 8.0);
        assert!((v - 0.25).abs() < 1e-15);
        assert!(volume_profile(mult(3, 4), 1e-9f64) < 1e-30);

        let m = mult(6, 9);
        let theta = minimal_angle::<f64>(m);
        let h = 1e-6;
        let deriv = (volume_profile(m, theta + h) - volume_profile(m, theta - h)) / (2.0 * h);
        assert!(deriv.abs() < 1e-10);
        let (mut best, mut arg) = (f64::NEG_INFINITY, 0.0);
        let mut th = 1e-5;
        while th < std::f64::consts::FRAC_PI_4 {
            let v = volume_profile(m, th);
            if v > best {
                best = v;
                arg = th;
            }
            th += 1e-5;
        }
        assert!((arg - theta).abs() < 1e-4);
    }

    #[test]
    fn curvature_normals_meet_the_section_point() {
        for (m1, m2) in [(1, 1), (2, 3), (5, 5), (6, 9), (4, 11)] {
            let m = mult(m1, m2);
            let sys = curvature_normals::<f64>(m);
            for x in sys.xi {
                assert!((dot2(x, sys.p) + 1.0).abs() < 1e-12);
            }
            let h = sys.mean_curvature(m.per_distribution());
            let n = m.n() as f64;
            assert!((h[0] + n * sys.p[0]).abs() < 1e-10 && (h[1] + n * sys.p[1]).abs() < 1e-10);
        }
    }

    #[test]
    fn five_five_reference_values() {
        let m = mult(5, 5);
        let sys = curvature_normals::<f64>(m);
        let xi1 = dot2(sys.xi[0], sys.xi[0]);
        assert!((xi1 - 4.0 * (1.0 + 0.5f64.sqrt())).abs() < 1e-12);
        assert!((xi1 - 6.8284271).abs() < 1e-7);
        let e1 = [1.0, 0.0, 0.0, 0.0];
        let v = acs_prime(&sys, m, &e1, &e1).unwrap();
        assert!((v - (-12.6862915)).abs() < 1e-7);
        assert!((simple_upper_bound::<f64>(m) - (-5.8578644)).abs() < 1e-7);
        assert!((ricci_eigenvalues(&sys, m)[0] - 13.1715729).abs() < 1e-7);
        let sec = extreme_sectional(&sys);
        let th = std::f64::consts::PI / 8.0;
        assert!((sec + 1.0 / ((th.cos() - th.sin()) * th.sin())).abs() < 1e-12);
        assert!((sec - (-4.8284271)).abs() < 1e-7);
    }

    #[test]
    fn simple_bound_reference() {
        assert!((simple_upper_bound::<f64>(mult(6, 9)) - (-15.6350832)).abs() < 1e-7);
    }

    #[test]
    fn diagonal_shortcut() {
        let m = mult(3, 7);
        let sys = curvature_normals::<f64>(m);
        for i in 0..4 {
            let mut e = [0.0; 4];
            e[i] = 1.0;
            let want = -2.0 * m.n() as f64 + 4.0 * dot2(sys.xi[i], sys.xi[i]);
            assert!((acs_prime(&sys, m, &e, &e).unwrap() - want).abs() < 1e-12);
            let h = sys.mean_curvature(m.per_distribution());
            let general = acs_prime_general(&sys, m.per_distribution(), &e, &e).unwrap();
            let want_general = -2.0 * dot2(h, sys.xi[i]) + 4.0 * dot2(sys.xi[i], sys.xi[i]);
            assert!((general - want_general).abs() < 1e-10);
        }
    }

    #[test]
    fn general_form_vanishes_for_zero_normals() {
        let sys = CurvatureNormalSystem {
            theta: 0.3,
            p: [0.3f64.cos(), 0.3f64.sin()],
            xi: [[0.0; 2]; 4],
        };
        let s = [0.1, 0.2, 0.3, 0.4];
        assert_eq!(acs_prime_general(&sys, [2, 3, 2, 3], &s, &s).unwrap(), 0.0);
    }

    #[test]
    fn vertex_programs_reproduce_acs_prime() {
        let m = mult(6, 9);
        let sys = curvature_normals::<f64>(m);
        let t = [0.1, 0.4, 0.3, 0.2];
        for k in 0..4 {
            let mut e = [0.0; 4];
            e[k] = 1.0;
            let prog = vertex_program(&sys, m, k).unwrap();
            assert!((prog.evaluate(&t) - acs_prime(&sys, m, &e, &t).unwrap()).abs() < 1e-12);
        }
    }

    #[test]
    fn max_acs_examples() {
        let r = max_acs::<f64>(mult(6, 9)).unwrap();
        assert!(r.value < 0.0);
        assert_eq!(r.semantics, Semantics::Exact);
        let grid = grid_max_acs::<f64>(mult(6, 9), 0.005).unwrap();
        assert!(grid.value <= r.value + 1e-12 && r.value <= grid.value + grid.error_bound);

        let m = mult(5, 5);
        let r = max_acs::<f64>(m).unwrap();
        assert!(r.value < 0.0 && r.value <= simple_upper_bound::<f64>(m));
        let sys = curvature_normals::<f64>(m);
        let e1 = [1.0, 0.0, 0.0, 0.0];
        assert!(r.value >= acs_prime(&sys, m, &e1, &e1).unwrap());

        assert_eq!(max_acs::<f64>(mult(1, 4)).unwrap().semantics, Semantics::UpperBound);
    }

    #[test]
    fn focal_bounds() {
        assert_eq!(focal_acs_upper(mult(6, 9)), -8);
        assert_eq!(focal_acs_upper(mult(1, 4)), -3);
        assert_eq!(focal_ricci_lower(mult(6, 9)), 16);
        assert_eq!(focal_ricci_lower(mult(1, 1)), 0);
        assert_eq!(focal_ricci_lower(mult(4, 7)), 12);
        // boundary 4m2 = 3m1 + 10 is not negative
        assert_eq!(focal_acs_upper(mult(2, 4)), 0);
        assert!(!focal_bound_negative(mult(2, 4)));
    }

    #[test]
    fn sff_reproduces_acs_prime_on_adapted_pairs() {
        let m = mult(6, 9);
        let sys = curvature_normals::<f64>(m);
        let sff = build_sff(&sys, m);
        let h = sff.trace();
        let s = [0.1, 0.2, 0.3, 0.4];
        let t = [0.25, 0.25, 0.4, 0.1];
        let (x, y) = frame_pair_from_weights(m, &s, &t).unwrap();
        let direct = acs_from_sff(&sff, &h, &x, &y).unwrap();
        assert!((direct - acs_prime(&sys, m, &s, &t).unwrap()).abs() < 1e-9);
    }

    #[test]
    fn sff_identity_on_random_pairs() {
        let m = mult(5, 5);
        let sys = curvature_normals::<f64>(m);
        let sff = build_sff(&sys, m);
        let h = sff.trace();
        let mut rng = seeded_rng(7, 0);
        for _ in 0..20 {
            let (x, y) = random_frame_pair::<f64, _>(m.n(), &mut rng).unwrap();
            let s = distribution_weights(m, &x);
            let t = distribution_weights(m, &y);
            let mixed = mixed_term(&sys, m, &x, &y);
            let want = acs_prime(&sys, m, &s, &t).unwrap() - 2.0 * dot2(mixed, mixed);
            assert!((acs_from_sff(&sff, &h, &x, &y).unwrap() - want).abs() < 1e-9);
        }
    }

    #[test]
    fn flat_tensor_gives_zero() {
        let sff = SffTensor::<f64>::zeros(4, 2);
        let x = [1.0, 0.0, 0.0, 0.0];
        let y = [0.0, 1.0, 0.0, 0.0];
        assert_eq!(acs_from_sff(&sff, &[0.0, 0.0], &x, &y).unwrap(), 0.0);
    }

    #[test]
    fn constraint_violations_are_rejected() {
        let m = mult(2, 2);
        let sys = curvature_normals::<f64>(m);
        let sff = build_sff(&sys, m);
        let h = sff.trace();
        let mut x = vec![0.0; 8];
        let mut y = vec![0.0; 8];
        x[0] = 1.0;
        y[0] = 1.0;
        assert!(matches!(
            acs_from_sff(&sff, &h, &x, &y),
            Err(Error::ConstraintViolation(_))
        ));
    }

    #[test]
    fn ricci_matches_gauss_contraction() {
        let m = mult(2, 3);
        let sys = curvature_normals::<f64>(m);
        let sff = build_sff(&sys, m);
        let ric = sff.ricci(&sff.trace());
        let lambda = ricci_eigenvalues(&sys, m);
        for (j, i) in m.distribution_of_frame().into_iter().enumerate() {
            assert!((ric[j][j] - lambda[i]).abs() < 1e-9);
            for k in 0..m.n() {
                if k != j {
                    assert_eq!(ric[j][k], 0.0);
                }
            }
        }
    }

    #[test]
    fn frame_pair_needs_room() {
        let m = mult(1, 3);
        let s = [0.5, 0.5, 0.0, 0.0];
        assert!(frame_pair_from_weights::<f64>(m, &s, &s).is_err());
    }
}
