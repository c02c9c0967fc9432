//! Exact maximization of a concave quadratic over the standard simplex.
//!
//! The objective is `Q(t) = constant + linear·t + tᵀ·quadratic·t` on
//! `Δ^{g−1} = {t ≥ 0, Σ t_i = 1}`. Every nonempty face is visited; on each face
//! the stationarity system of the equality-constrained problem is solved
//! directly and feasible candidates are compared. For the `g = 4` problems
//! coming from curvature normals this is fifteen tiny linear solves.

use serde::{Deserialize, Serialize};

use crate::dense::{dot, mat_vec, solve_pivoted, symmetric_eigenvalues, symmetric_pinv_solve, Solve};
use crate::error::{Error, Result};
use crate::scalar::Real;

/// Pivot magnitude below which a face system counts as singular.
pub const PIVOT_TOL: f64 = 1e-12;
/// Stationarity residual a least-squares candidate must reach to be kept.
pub const LSTSQ_RESIDUAL_TOL: f64 = 1e-9;
/// Coordinates above `-FEASIBILITY_TOL` count as nonnegative.
pub const FEASIBILITY_TOL: f64 = 1e-12;
/// Allowed positive eigenvalue of the quadratic part, relative to its largest entry.
pub const CONCAVITY_TOL: f64 = 1e-10;

#[derive(Debug, Clone, PartialEq)]
pub struct SimplexQuadraticProgram<T> {
    constant: T,
    linear: Vec<T>,
    quadratic: Vec<Vec<T>>,
}

impl<T: Real> SimplexQuadraticProgram<T> {
    /// The quadratic part is symmetrized on construction.
    pub fn new(constant: T, linear: Vec<T>, quadratic: Vec<Vec<T>>) -> Result<Self> {
        let g = linear.len();
        if g == 0 {
            return Err(Error::InvalidParameter("simplex needs at least one coordinate".into()));
        }
        if quadratic.len() != g || quadratic.iter().any(|row| row.len() != g) {
            return Err(Error::ShapeMismatch {
                expected: format!("{g}x{g} quadratic part"),
                actual: format!("{} rows", quadratic.len()),
            });
        }
        let half = T::lit(0.5);
        let sym = (0..g)
            .map(|i| (0..g).map(|j| half * (quadratic[i][j] + quadratic[j][i])).collect())
            .collect();
        Ok(Self {
            constant,
            linear,
            quadratic: sym,
        })
    }

    pub fn dim(&self) -> usize {
        self.linear.len()
    }

    pub fn constant(&self) -> T {
        self.constant
    }

    pub fn linear(&self) -> &[T] {
        &self.linear
    }

    pub fn quadratic(&self) -> &[Vec<T>] {
        &self.quadratic
    }

    pub fn evaluate(&self, t: &[T]) -> T {
        // allocation-free: the grid oracle calls this millions of times
        self.quadratic
            .iter()
            .zip(&self.linear)
            .zip(t)
            .fold(self.constant, |acc, ((row, &b), &ti)| {
                acc + ti * (b + row.iter().zip(t).fold(T::zero(), |s, (&a, &tj)| s + a * tj))
            })
    }

    /// `linear + 2·quadratic·t`.
    pub fn gradient(&self, t: &[T]) -> Vec<T> {
        let two = T::lit(2.0);
        mat_vec(&self.quadratic, t)
            .into_iter()
            .zip(&self.linear)
            .map(|(at, &b)| b + two * at)
            .collect()
    }

    pub fn max_eigenvalue(&self) -> T {
        *symmetric_eigenvalues(&self.quadratic)
            .last()
            .expect("nonempty program")
    }

    /// Rejects programs whose quadratic part has a positive eigenvalue
    /// beyond tolerance.
    pub fn check_concave(&self) -> Result<()> {
        let scale = self
            .quadratic
            .iter()
            .flatten()
            .fold(T::one(), |acc, v| acc.max(v.abs()));
        let top = self.max_eigenvalue();
        if top > T::lit(CONCAVITY_TOL) * scale {
            return Err(Error::NotConcave {
                max_eigenvalue: top.to_f64_lossy(),
            });
        }
        Ok(())
    }

    /// Gradient bound `‖linear‖₂ + 2‖quadratic‖_F` valid on the whole simplex.
    pub fn lipschitz_bound(&self) -> T {
        let b = dot(&self.linear, &self.linear).sqrt();
        let a = self
            .quadratic
            .iter()
            .flatten()
            .fold(T::zero(), |acc, &v| acc + v * v)
            .sqrt();
        b + T::lit(2.0) * a
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct FaceStats {
    pub faces_examined: usize,
    pub feasible_candidates: usize,
    pub singular_faces: usize,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SimplexSolution<T> {
    pub value: T,
    pub point: Vec<T>,
    /// Indices of the face whose stationary point won, ascending.
    pub face: Vec<usize>,
    /// Largest violation of the KKT conditions at `point`.
    pub stationarity_residual: T,
    /// Common gradient value on the active face.
    pub multiplier: T,
    pub stats: FaceStats,
}

/// All nonempty subsets of `0..g`, smallest first and lexicographic within a size.
fn faces_in_order(g: usize) -> Vec<Vec<usize>> {
    let mut faces: Vec<Vec<usize>> = (1u64..(1u64 << g))
        .map(|mask| (0..g).filter(|&i| mask & (1 << i) != 0).collect())
        .collect();
    faces.sort_by(|a: &Vec<usize>, b: &Vec<usize>| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    faces
}

struct FaceCandidate<T> {
    point: Vec<T>,
}

/// Stationary point of `Q` on the affine hull of `face`, if one exists and is
/// feasible. A singular face system sets `singular`; its least-squares point
/// is kept only when the residual is below [`LSTSQ_RESIDUAL_TOL`].
fn solve_face<T: Real>(
    prog: &SimplexQuadraticProgram<T>,
    face: &[usize],
    singular: &mut bool,
) -> Option<FaceCandidate<T>> {
    let k = face.len();
    let g = prog.dim();
    let two = T::lit(2.0);
    // [2A_FF 1; 1ᵀ 0] [t_F; μ] = [−b_F; 1]
    let mut kkt = vec![vec![T::zero(); k + 1]; k + 1];
    let mut rhs = vec![T::zero(); k + 1];
    for (r, &i) in face.iter().enumerate() {
        for (c, &j) in face.iter().enumerate() {
            kkt[r][c] = two * prog.quadratic[i][j];
        }
        kkt[r][k] = T::one();
        kkt[k][r] = T::one();
        rhs[r] = -prog.linear[i];
    }
    rhs[k] = T::one();

    let sol = match solve_pivoted(&kkt, &rhs, T::lit(PIVOT_TOL)) {
        Solve::Unique(x) => x,
        Solve::Singular => {
            *singular = true;
            let x = symmetric_pinv_solve(&kkt, &rhs, T::lit(1e-12));
            let resid = mat_vec(&kkt, &x)
                .iter()
                .zip(&rhs)
                .fold(T::zero(), |acc, (&l, &r)| acc.max((l - r).abs()));
            if resid >= T::lit(LSTSQ_RESIDUAL_TOL) {
                return None;
            }
            x
        }
    };

    if sol[..k].iter().any(|&v| v < -T::lit(FEASIBILITY_TOL)) {
        return None;
    }
    let mut point = vec![T::zero(); g];
    for (r, &i) in face.iter().enumerate() {
        point[i] = sol[r].max(T::zero());
    }
    let total = point.iter().fold(T::zero(), |acc, &v| acc + v);
    if total <= T::zero() {
        return None;
    }
    for v in point.iter_mut() {
        *v /= total;
    }
    Some(FaceCandidate { point })
}

/// KKT residual of a maximizer candidate with support `face`.
fn kkt_residual<T: Real>(prog: &SimplexQuadraticProgram<T>, point: &[T], face: &[usize]) -> (T, T) {
    let grad = prog.gradient(point);
    let k = T::lit(face.len() as f64);
    let lambda = face.iter().fold(T::zero(), |acc, &i| acc + grad[i]) / k;
    let mut resid = T::zero();
    for (i, &gi) in grad.iter().enumerate() {
        let v = if face.contains(&i) {
            (gi - lambda).abs()
        } else {
            (gi - lambda).max(T::zero())
        };
        resid = resid.max(v);
    }
    (resid, lambda)
}

/// Global maximum of a concave program over the simplex by face enumeration.
pub fn maximize_over_simplex<T: Real>(prog: &SimplexQuadraticProgram<T>) -> Result<SimplexSolution<T>> {
    prog.check_concave()?;
    let mut stats = FaceStats::default();
    let mut best: Option<(T, Vec<T>, Vec<usize>)> = None;
    for face in faces_in_order(prog.dim()) {
        stats.faces_examined += 1;
        let mut singular = false;
        let cand = solve_face(prog, &face, &mut singular);
        if singular {
            stats.singular_faces += 1;
        }
        let Some(cand) = cand else { continue };
        stats.feasible_candidates += 1;
        let value = prog.evaluate(&cand.point);
        let better = match &best {
            None => true,
            // ties keep the earlier (smaller, then lexicographically first) face
            Some((bv, _, _)) => value > *bv + T::lit(1e-12) * bv.abs().max(T::one()),
        };
        if better {
            best = Some((value, cand.point, face));
        }
    }
    let (value, point, face) = best.ok_or(Error::NoFeasibleFace)?;
    let (stationarity_residual, multiplier) = kkt_residual(prog, &point, &face);
    Ok(SimplexSolution {
        value,
        point,
        face,
        stationarity_residual,
        multiplier,
        stats,
    })
}

/// Brute-force maximum over the lattice points of the simplex.
#[derive(Debug, Clone, PartialEq)]
pub struct GridEstimate<T> {
    pub value: T,
    pub point: Vec<T>,
    /// Upper bound on `true max − value`: `L · step · √g`.
    pub error_bound: T,
    pub points_evaluated: u64,
}

/// Number of grid divisions `1/step`; `step` must lie in `(0, 0.25]` and divide 1.
pub fn grid_divisions(step: f64) -> Result<usize> {
    if !(step > 0.0 && step <= 0.25) {
        return Err(Error::InvalidParameter(format!(
            "grid step must lie in (0, 0.25], got {step}"
        )));
    }
    let divisions = (1.0 / step).round();
    if (divisions * step - 1.0).abs() > 1e-9 {
        return Err(Error::InvalidParameter(format!(
            "grid step {step} does not divide 1"
        )));
    }
    Ok(divisions as usize)
}

/// Calls `f` on every point of `Δ^{g−1}` whose coordinates are multiples of
/// `step`, in lexicographic order of the integer coordinates; returns the count.
pub fn for_each_grid_point<T: Real>(g: usize, step: f64, mut f: impl FnMut(&[T])) -> Result<u64> {
    if g == 0 {
        return Err(Error::InvalidParameter("simplex needs at least one coordinate".into()));
    }
    let n = grid_divisions(step)?;
    let inv = T::lit(1.0 / n as f64);
    let mut counts = vec![0usize; g];
    counts[g - 1] = n;
    let mut t = vec![T::zero(); g];
    let mut evaluated = 0u64;
    loop {
        for (ti, &c) in t.iter_mut().zip(&counts) {
            *ti = T::lit(c as f64) * inv;
        }
        f(&t);
        evaluated += 1;
        if !next_composition(&mut counts) {
            return Ok(evaluated);
        }
    }
}

/// Maximum of `Q` over the points of the simplex whose coordinates are
/// multiples of `step`; `1/step` must be an integer.
pub fn grid_oracle<T: Real>(prog: &SimplexQuadraticProgram<T>, step: f64) -> Result<GridEstimate<T>> {
    let g = prog.dim();
    let mut best_value = T::neg_infinity();
    let mut best_point = vec![T::zero(); g];
    let evaluated = for_each_grid_point(g, step, |t: &[T]| {
        let v = prog.evaluate(t);
        if v > best_value {
            best_value = v;
            best_point.copy_from_slice(t);
        }
    })?;
    let error_bound = prog.lipschitz_bound() * T::lit(step) * T::lit(g as f64).sqrt();
    Ok(GridEstimate {
        value: best_value,
        point: best_point,
        error_bound,
        points_evaluated: evaluated,
    })
}

/// Advances a weak composition of a fixed total; false once exhausted.
fn next_composition(c: &mut [usize]) -> bool {
    let g = c.len();
    if g == 1 {
        return false;
    }
    // find the rightmost position before the last with mass to its right
    let last = c[g - 1];
    if last > 0 {
        // move one unit from the tail into the position just before it
        c[g - 2] += 1;
        c[g - 1] = last - 1;
        return true;
    }
    // tail is empty: find rightmost nonzero entry before the tail
    let Some(i) = (0..g - 1).rev().find(|&i| c[i] > 0) else {
        return false;
    };
    if i == 0 {
        return false;
    }
    let carry = c[i];
    c[i] = 0;
    c[i - 1] += 1;
    c[g - 1] = carry - 1;
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sum_of_squares(g: usize) -> SimplexQuadraticProgram<f64> {
        let quad = (0..g)
            .map(|i| (0..g).map(|j| if i == j { -1.0 } else { 0.0 }).collect())
            .collect();
        SimplexQuadraticProgram::new(0.0, vec![0.0; g], quad).unwrap()
    }

    fn linear(coeffs: Vec<f64>) -> SimplexQuadraticProgram<f64> {
        let g = coeffs.len();
        SimplexQuadraticProgram::new(0.0, coeffs, vec![vec![0.0; g]; g]).unwrap()
    }

    #[test]
    fn strictly_concave_symmetric_optimum() {
        let sol = maximize_over_simplex(&sum_of_squares(4)).unwrap();
        assert!((sol.value + 0.25).abs() < 1e-15);
        for v in &sol.point {
            assert!((v - 0.25).abs() < 1e-15);
        }
        assert_eq!(sol.face, vec![0, 1, 2, 3]);
        assert_eq!(sol.stats.faces_examined, 15);
        let grid = grid_oracle(&sum_of_squares(4), 0.25).unwrap();
        assert_eq!(grid.value, -0.25);
    }

    #[test]
    fn linear_objective_hits_a_vertex() {
        let prog = linear(vec![0.0, 0.0, 3.0, 0.0]);
        let sol = maximize_over_simplex(&prog).unwrap();
        assert_eq!(sol.value, 3.0);
        assert_eq!(sol.face, vec![2]);
        assert_eq!(sol.point, vec![0.0, 0.0, 1.0, 0.0]);
        for step in [0.25, 0.1, 0.05] {
            assert_eq!(grid_oracle(&prog, step).unwrap().value, 3.0);
        }
    }

    #[test]
    fn ties_prefer_the_smallest_face() {
        // constant objective: every face ties, the first vertex wins
        let prog = linear(vec![1.0, 1.0, 1.0]);
        let sol = maximize_over_simplex(&prog).unwrap();
        assert_eq!(sol.face, vec![0]);
        assert_eq!(sol.value, 1.0);
    }

    #[test]
    fn convex_objective_is_rejected() {
        let prog = SimplexQuadraticProgram::new(
            0.0,
            vec![0.0, 0.0],
            vec![vec![1.0, 0.0], vec![0.0, -1.0]],
        )
        .unwrap();
        assert!(matches!(
            maximize_over_simplex(&prog),
            Err(Error::NotConcave { .. })
        ));
    }

    #[test]
    fn quadratic_part_is_symmetrized() {
        let prog = SimplexQuadraticProgram::new(
            0.0,
            vec![0.0, 0.0],
            vec![vec![-1.0, 2.0], vec![0.0, -3.0]],
        )
        .unwrap();
        assert_eq!(prog.quadratic()[0][1], 1.0);
        assert_eq!(prog.quadratic()[1][0], 1.0);
    }

    #[test]
    fn compositions_are_enumerated_once() {
        // weak compositions of 4 into 3 parts: C(6, 2) = 15
        let mut c = vec![0, 0, 4];
        let mut seen = vec![c.clone()];
        while next_composition(&mut c) {
            assert_eq!(c.iter().sum::<usize>(), 4);
            seen.push(c.clone());
        }
        seen.sort();
        seen.dedup();
        assert_eq!(seen.len(), 15);
        let prog = sum_of_squares(4);
        // C(203, 3) lattice points at step 0.005
        assert_eq!(grid_oracle(&prog, 0.005).unwrap().points_evaluated, 1_373_701);
    }

    #[test]
    fn bad_grid_steps_are_rejected() {
        let prog = sum_of_squares(3);
        assert!(grid_oracle(&prog, 0.0).is_err());
        assert!(grid_oracle(&prog, 0.3).is_err());
        assert!(grid_oracle(&prog, 0.3333).is_err());
    }

    #[test]
    fn single_coordinate_simplex() {
        let prog = SimplexQuadraticProgram::new(2.0, vec![1.0], vec![vec![-1.0]]).unwrap();
        let sol = maximize_over_simplex(&prog).unwrap();
        assert_eq!(sol.value, 2.0);
        assert_eq!(grid_oracle(&prog, 0.25).unwrap().value, 2.0);
    }

    #[test]
    fn works_in_single_precision() {
        let quad = vec![vec![-1.0f32, 0.0], vec![0.0, -1.0]];
        let prog = SimplexQuadraticProgram::new(0.0f32, vec![0.0, 0.0], quad).unwrap();
        let sol = maximize_over_simplex(&prog).unwrap();
        assert!((sol.value + 0.5).abs() < 1e-6);
    }
}
