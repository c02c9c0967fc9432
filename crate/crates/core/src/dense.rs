//! Small dense real linear algebra: a pivoted solve, a symmetric eigenvalue
//! routine and a symmetric pseudo-inverse solve. Sizes here never exceed a
//! few dozen, so everything is plain `Vec<Vec<T>>`.

use crate::scalar::Real;

/// Outcome of [`solve_pivoted`].
#[derive(Debug, Clone, PartialEq)]
pub enum Solve<T> {
    Unique(Vec<T>),
    /// A pivot fell below the threshold.
    Singular,
}

/// Gaussian elimination with partial pivoting; pivots with magnitude
/// `<= pivot_tol` mark the system singular.
pub fn solve_pivoted<T: Real>(a: &[Vec<T>], b: &[T], pivot_tol: T) -> Solve<T> {
    let n = b.len();
    let mut m: Vec<Vec<T>> = a.to_vec();
    let mut rhs = b.to_vec();
    for col in 0..n {
        let (piv, best) = (col..n)
            .map(|r| (r, m[r][col].abs()))
            .fold((col, -T::one()), |acc, x| if x.1 > acc.1 { x } else { acc });
        if best <= pivot_tol {
            return Solve::Singular;
        }
        m.swap(col, piv);
        rhs.swap(col, piv);
        for r in (col + 1)..n {
            let f = m[r][col] / m[col][col];
            if f == T::zero() {
                continue;
            }
            for c in col..n {
                let v = m[col][c];
                m[r][c] -= f * v;
            }
            let v = rhs[col];
            rhs[r] -= f * v;
        }
    }
    let mut x = vec![T::zero(); n];
    for r in (0..n).rev() {
        let mut acc = rhs[r];
        for c in (r + 1)..n {
            acc -= m[r][c] * x[c];
        }
        x[r] = acc / m[r][r];
    }
    Solve::Unique(x)
}

/// Eigen-decomposition of a real symmetric matrix by cyclic Jacobi rotations.
/// Returns eigenvalues (ascending) and the matching eigenvectors as columns.
pub fn symmetric_eigen<T: Real>(a: &[Vec<T>]) -> (Vec<T>, Vec<Vec<T>>) {
    let n = a.len();
    let mut m: Vec<Vec<T>> = a.to_vec();
    let mut v: Vec<Vec<T>> = (0..n)
        .map(|i| (0..n).map(|j| if i == j { T::one() } else { T::zero() }).collect())
        .collect();
    let eps = T::epsilon();
    for _sweep in 0..100 {
        let mut off = T::zero();
        let mut diag = T::zero();
        for i in 0..n {
            diag += m[i][i] * m[i][i];
            for j in 0..n {
                if i != j {
                    off += m[i][j] * m[i][j];
                }
            }
        }
        if off == T::zero() || off <= eps * eps * (diag + off) {
            break;
        }
        for p in 0..n {
            for q in (p + 1)..n {
                let apq = m[p][q];
                if apq == T::zero() {
                    continue;
                }
                let theta = (m[q][q] - m[p][p]) / (apq + apq);
                let t = theta.signum() / (theta.abs() + (theta * theta + T::one()).sqrt());
                let c = (t * t + T::one()).sqrt().recip();
                let s = t * c;
                for row in m.iter_mut() {
                    let (kp, kq) = (row[p], row[q]);
                    row[p] = c * kp - s * kq;
                    row[q] = s * kp + c * kq;
                }
                for k in 0..n {
                    let (pk, qk) = (m[p][k], m[q][k]);
                    m[p][k] = c * pk - s * qk;
                    m[q][k] = s * pk + c * qk;
                }
                for row in v.iter_mut() {
                    let (kp, kq) = (row[p], row[q]);
                    row[p] = c * kp - s * kq;
                    row[q] = s * kp + c * kq;
                }
            }
        }
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| m[i][i].partial_cmp(&m[j][j]).expect("finite eigenvalues"));
    let values = order.iter().map(|&i| m[i][i]).collect();
    let vectors = (0..n)
        .map(|r| order.iter().map(|&i| v[r][i]).collect())
        .collect();
    (values, vectors)
}

pub fn symmetric_eigenvalues<T: Real>(a: &[Vec<T>]) -> Vec<T> {
    symmetric_eigen(a).0
}

/// Minimum-norm least-squares solution of a symmetric system, discarding
/// eigen-directions with `|λ| <= cutoff · max|λ|`.
pub fn symmetric_pinv_solve<T: Real>(a: &[Vec<T>], b: &[T], cutoff: T) -> Vec<T> {
    let n = b.len();
    let (values, vectors) = symmetric_eigen(a);
    let largest = values.iter().fold(T::zero(), |acc, v| acc.max(v.abs()));
    let mut x = vec![T::zero(); n];
    if largest == T::zero() {
        return x;
    }
    for (k, &lambda) in values.iter().enumerate() {
        if lambda.abs() <= cutoff * largest {
            continue;
        }
        let proj = (0..n).fold(T::zero(), |acc, r| acc + vectors[r][k] * b[r]);
        let coef = proj / lambda;
        for r in 0..n {
            x[r] += coef * vectors[r][k];
        }
    }
    x
}

pub fn mat_vec<T: Real>(a: &[Vec<T>], x: &[T]) -> Vec<T> {
    a.iter()
        .map(|row| row.iter().zip(x).fold(T::zero(), |acc, (&r, &v)| acc + r * v))
        .collect()
}

pub fn dot<T: Real>(a: &[T], b: &[T]) -> T {
    a.iter().zip(b).fold(T::zero(), |acc, (&x, &y)| acc + x * y)
}
