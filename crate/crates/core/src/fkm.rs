//! Example catalog of four-curvature isoparametric families: the homogeneous
//! ones, the isolated `(6, 9)` family, and the FKM families built from Clifford
//! systems.
//!
//! Clifford systems are integer matrices with entries in `{−1, 0, 1}`; their
//! defining relations are checked exactly. Every sign condition on the
//! multiplicities is decided in exact integer or rational arithmetic.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::isoparametric::{focal_bound_negative, max_acs, Multiplicities};
use crate::scalar::Real;

/// Dimension `δ(m)` of an irreducible module for `m + 1` anticommuting
/// symmetric involutions, halved: `1, 2, 4, 4, 8, 8, 8, 8` for `m = 1..8`,
/// then `δ(m + 8) = 16·δ(m)`.
pub fn delta(m: usize) -> Result<u64> {
    const BASE: [u64; 8] = [1, 2, 4, 4, 8, 8, 8, 8];
    if m < 1 {
        return Err(Error::InvalidParameter("delta needs m >= 1".into()));
    }
    let periods = ((m - 1) / 8) as u32;
    16u64
        .checked_pow(periods)
        .and_then(|f| f.checked_mul(BASE[(m - 1) % 8]))
        .ok_or_else(|| Error::InvalidParameter(format!("delta({m}) overflows u64")))
}

/// `(m, k)` pairs whose multiplicities come out in the opposite order, `0 < l − m − 1 < m`.
pub const EXCEPTIONAL_PAIRS: [(usize, usize); 6] = [(2, 2), (4, 2), (5, 1), (6, 1), (8, 2), (9, 1)];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct FkmMultiplicities {
    /// Sorted so that `m1 <= m2`.
    pub multiplicities: Multiplicities,
    /// `l − m − 1 < m`, so the Clifford multiplicity `m` is the larger one.
    pub exceptional: bool,
}

/// Multiplicities `(m, l − m − 1)` with `l = k·δ(m)`, sorted.
pub fn fkm_multiplicities(m: usize, k: usize) -> Result<FkmMultiplicities> {
    let second = fkm_second_multiplicity(m, k)?;
    let (m1, m2) = if second < m { (second, m) } else { (m, second) };
    Ok(FkmMultiplicities {
        multiplicities: Multiplicities::new(m1, m2)?,
        exceptional: second < m,
    })
}

/// `l − m − 1`, which must be at least 1.
fn fkm_second_multiplicity(m: usize, k: usize) -> Result<usize> {
    if k < 1 {
        return Err(Error::InvalidParameter("FKM families need k >= 1".into()));
    }
    let l = (k as u64)
        .checked_mul(delta(m)?)
        .ok_or_else(|| Error::InvalidParameter("l overflows".into()))?;
    if l < m as u64 + 2 {
        return Err(Error::InvalidParameter(format!(
            "no isoparametric family for (m, k) = ({m}, {k}): l - m - 1 = {} < 1",
            l as i64 - m as i64 - 1
        )));
    }
    Ok((l - m as u64 - 1) as usize)
}

/// Which leaf of the foliation is examined.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Leaf {
    RegularMinimal,
    /// The focal manifold `M_+` of codimension `1 + m1` in the sphere.
    FocalPlus,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case", tag = "kind")]
pub enum FamilyKind {
    HomogeneousReal { k: usize },
    HomogeneousComplex { k: usize },
    HomogeneousQuaternionic { k: usize },
    E6Isolated,
    Fkm { m: usize, k: usize },
}

impl fmt::Display for FamilyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            FamilyKind::HomogeneousReal { k } => write!(f, "real:{k}"),
            FamilyKind::HomogeneousComplex { k } => write!(f, "complex:{k}"),
            FamilyKind::HomogeneousQuaternionic { k } => write!(f, "quaternionic:{k}"),
            FamilyKind::E6Isolated => f.write_str("e6"),
            FamilyKind::Fkm { m, k } => write!(f, "fkm:{m}:{k}"),
        }
    }
}

impl std::str::FromStr for FamilyKind {
    type Err = Error;

    /// Parses `real:K`, `complex:K`, `quaternionic:K`, `e6` or `fkm:M:K`.
    fn from_str(s: &str) -> Result<Self> {
        let parts: Vec<&str> = s.split(':').collect();
        let num = |t: &str| {
            t.parse::<usize>()
                .map_err(|_| Error::InvalidParameter(format!("bad integer '{t}' in family '{s}'")))
        };
        match parts.as_slice() {
            ["real", k] => Ok(FamilyKind::HomogeneousReal { k: num(k)? }),
            ["complex", k] => Ok(FamilyKind::HomogeneousComplex { k: num(k)? }),
            ["quaternionic", k] => Ok(FamilyKind::HomogeneousQuaternionic { k: num(k)? }),
            ["e6"] => Ok(FamilyKind::E6Isolated),
            ["fkm", m, k] => Ok(FamilyKind::Fkm {
                m: num(m)?,
                k: num(k)?,
            }),
            _ => Err(Error::InvalidParameter(format!(
                "unknown family '{s}'; expected real:K, complex:K, quaternionic:K, e6 or fkm:M:K"
            ))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ExampleFamily {
    pub kind: FamilyKind,
    pub leaf: Leaf,
}

impl ExampleFamily {
    pub fn new(kind: FamilyKind, leaf: Leaf) -> Result<Self> {
        let fam = Self { kind, leaf };
        fam.focal_multiplicities()?;
        Ok(fam)
    }

    /// Multiplicities with `m1` the one collapsed on `M_+`: `(1, k−2)`,
    /// `(2, 2k−3)`, `(4, 4k−5)`, `(6, 9)` and `(m, l−m−1)`. Not sorted.
    pub fn focal_multiplicities(&self) -> Result<(usize, usize)> {
        let positive = |m2: i64, what: &str| {
            if m2 < 1 {
                Err(Error::InvalidParameter(format!("{what}: second multiplicity {m2} < 1")))
            } else {
                Ok(m2 as usize)
            }
        };
        Ok(match self.kind {
            FamilyKind::HomogeneousReal { k } => (1, positive(k as i64 - 2, "real family")?),
            FamilyKind::HomogeneousComplex { k } => (2, positive(2 * k as i64 - 3, "complex family")?),
            FamilyKind::HomogeneousQuaternionic { k } => {
                (4, positive(4 * k as i64 - 5, "quaternionic family")?)
            }
            FamilyKind::E6Isolated => (6, 9),
            FamilyKind::Fkm { m, k } => (m, fkm_second_multiplicity(m, k)?),
        })
    }

    /// Sorted multiplicities of the regular leaves.
    pub fn multiplicities(&self) -> Result<Multiplicities> {
        let (a, b) = self.focal_multiplicities()?;
        Multiplicities::new(a.min(b), a.max(b))
    }

    pub fn exceptional(&self) -> bool {
        match self.kind {
            FamilyKind::Fkm { m, k } => fkm_multiplicities(m, k).is_ok_and(|r| r.exceptional),
            _ => false,
        }
    }
}

/// How negativity of ACS is established for a family.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Certification {
    /// `m1 >= 5`: the curvature-normal bound `−2n + 5|ξ_1|²` is negative.
    SimpleCurvatureBound,
    /// `m1 = 4`: the exact maximum of ACS′ is negative for this `m2`.
    /// Numeric evidence, not a general statement.
    NumericThreshold,
    /// `4m2 > 3m1 + 10` on the focal manifold.
    FocalBound,
    /// `k > (7m + 14)/(4δ(m))` on an FKM Clifford–Stiefel manifold.
    CliffordStiefelCondition,
    None,
}

impl Certification {
    pub fn name(self) -> &'static str {
        match self {
            Certification::SimpleCurvatureBound => "simple-curvature-bound",
            Certification::NumericThreshold => "numeric-threshold",
            Certification::FocalBound => "focal-bound",
            Certification::CliffordStiefelCondition => "clifford-stiefel-condition",
            Certification::None => "none",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ConditionReport {
    pub family: ExampleFamily,
    pub m1: usize,
    pub m2: usize,
    pub exceptional: bool,
    pub certification: Certification,
    /// The certification rests on a floating point computation.
    pub numeric: bool,
    /// The inequality that was checked, with its exact evaluation.
    pub detail: String,
}

/// `k > (7m + 14)/(4δ(m))`, decided in exact rationals.
pub fn clifford_stiefel_condition(m: usize, k: usize) -> Result<bool> {
    let d = delta(m)?;
    let lhs = BigRational::from_integer(BigInt::from(k));
    let rhs = BigRational::new(BigInt::from(7 * m + 14), BigInt::from(4) * BigInt::from(d));
    Ok(lhs > rhs)
}

/// Checks the hypothesis that applies to the family and leaf.
pub fn check_conditions(family: &ExampleFamily) -> Result<ConditionReport> {
    let (fm1, fm2) = family.focal_multiplicities()?;
    let sorted = family.multiplicities()?;
    let mut report = ConditionReport {
        family: *family,
        m1: sorted.m1,
        m2: sorted.m2,
        exceptional: family.exceptional(),
        certification: Certification::None,
        numeric: false,
        detail: String::new(),
    };
    match family.leaf {
        Leaf::RegularMinimal => {
            let m1 = sorted.m1;
            if m1 >= 5 {
                report.certification = Certification::SimpleCurvatureBound;
                report.detail = format!("m1 = {m1} >= 5");
            } else if m1 == 4 {
                let v = max_acs::<f64>(sorted)?.value;
                report.numeric = true;
                report.detail = format!("m1 = 4, max ACS' = {v:e}");
                if v < 0.0 {
                    report.certification = Certification::NumericThreshold;
                }
            } else {
                report.detail = format!("m1 = {m1} < 4");
            }
        }
        Leaf::FocalPlus => {
            report.m1 = fm1;
            report.m2 = fm2;
            let focal = Multiplicities { m1: fm1, m2: fm2 };
            let lhs = 4 * fm2;
            let rhs = 3 * fm1 + 10;
            if let FamilyKind::Fkm { m, k } = family.kind {
                let d = delta(m)?;
                let holds = clifford_stiefel_condition(m, k)?;
                debug_assert_eq!(holds, focal_bound_negative(focal));
                report.detail = format!("k = {k} vs (7m+14)/(4 delta) = {}/{}", 7 * m + 14, 4 * d);
                if holds {
                    report.certification = Certification::CliffordStiefelCondition;
                }
            } else {
                report.detail = format!("4 m2 = {lhs} vs 3 m1 + 10 = {rhs}");
                if focal_bound_negative(focal) {
                    report.certification = Certification::FocalBound;
                }
            }
        }
    }
    Ok(report)
}

/// Smallest `k` whose focal manifold satisfies the focal bound, for the
/// homogeneous real, complex and quaternionic families.
pub fn stiefel_threshold(kind: fn(usize) -> FamilyKind, k_max: usize) -> Option<usize> {
    (1..=k_max).find(|&k| {
        ExampleFamily::new(kind(k), Leaf::FocalPlus)
            .and_then(|f| check_conditions(&f))
            .map(|r| r.certification != Certification::None)
            .unwrap_or(false)
    })
}

/// The fixed catalog listed by the CLI: homogeneous families for small `k`,
/// the `(6, 9)` family, and every valid FKM pair with `m <= 9`, `k <= 3`;
/// each on both leaves.
pub fn catalog() -> Vec<ExampleFamily> {
    let mut kinds = Vec::new();
    kinds.extend((3..=8).map(|k| FamilyKind::HomogeneousReal { k }));
    kinds.extend((2..=6).map(|k| FamilyKind::HomogeneousComplex { k }));
    kinds.extend((2..=5).map(|k| FamilyKind::HomogeneousQuaternionic { k }));
    kinds.push(FamilyKind::E6Isolated);
    for m in 1..=9 {
        for k in 1..=3 {
            if fkm_second_multiplicity(m, k).is_ok() {
                kinds.push(FamilyKind::Fkm { m, k });
            }
        }
    }
    kinds
        .into_iter()
        .flat_map(|kind| {
            [Leaf::RegularMinimal, Leaf::FocalPlus]
                .into_iter()
                .map(move |leaf| ExampleFamily { kind, leaf })
        })
        .collect()
}

/// Square integer matrix, row-major.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct IntMatrix {
    n: usize,
    data: Vec<i64>,
}

impl IntMatrix {
    pub fn zeros(n: usize) -> Self {
        Self {
            n,
            data: vec![0; n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            m.data[i * n + i] = 1;
        }
        m
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.data[i * self.n + j]
    }

    fn set(&mut self, i: usize, j: usize, v: i64) {
        self.data[i * self.n + j] = v;
    }

    pub fn mul(&self, other: &Self) -> Self {
        let n = self.n;
        let mut out = Self::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..n {
                    out.data[i * n + j] += a * other.data[k * n + j];
                }
            }
        }
        out
    }

    pub fn add(&self, other: &Self) -> Self {
        Self {
            n: self.n,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn neg(&self) -> Self {
        Self {
            n: self.n,
            data: self.data.iter().map(|a| -a).collect(),
        }
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.n);
        for i in 0..self.n {
            for j in 0..self.n {
                t.set(j, i, self.get(i, j));
            }
        }
        t
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&v| v == 0)
    }

    pub fn kron(&self, other: &Self) -> Self {
        let (a, b) = (self.n, other.n);
        let mut out = Self::zeros(a * b);
        for i in 0..a {
            for j in 0..a {
                let v = self.get(i, j);
                if v == 0 {
                    continue;
                }
                for p in 0..b {
                    for q in 0..b {
                        out.set(i * b + p, j * b + q, v * other.get(p, q));
                    }
                }
            }
        }
        out
    }

    /// `[[a, b], [c, d]]` from four equal-size blocks.
    fn from_blocks(a: &Self, b: &Self, c: &Self, d: &Self) -> Self {
        let h = a.n;
        let mut out = Self::zeros(2 * h);
        for i in 0..h {
            for j in 0..h {
                out.set(i, j, a.get(i, j));
                out.set(i, j + h, b.get(i, j));
                out.set(i + h, j, c.get(i, j));
                out.set(i + h, j + h, d.get(i, j));
            }
        }
        out
    }

    fn direct_sum_copies(&self, k: usize) -> Self {
        IntMatrix::identity(k).kron(self)
    }

    pub fn quadratic_form<T: Real>(&self, x: &[T]) -> T {
        let mut acc = T::zero();
        for i in 0..self.n {
            let mut row = T::zero();
            for j in 0..self.n {
                let v = self.get(i, j);
                if v != 0 {
                    row += T::lit(v as f64) * x[j];
                }
            }
            acc += x[i] * row;
        }
        acc
    }

    pub fn apply<T: Real>(&self, x: &[T]) -> Vec<T> {
        (0..self.n)
            .map(|i| {
                (0..self.n).fold(T::zero(), |acc, j| acc + T::lit(self.get(i, j) as f64) * x[j])
            })
            .collect()
    }
}

/// `m + 1` symmetric matrices on `ℝ^{2l}` with `P_i² = I` and `P_iP_j = −P_jP_i`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CliffordSystem {
    pub m: usize,
    pub l: usize,
    pub matrices: Vec<IntMatrix>,
}

/// Cayley–Dickson product on `ℝ^{2^r}`: `(a, b)(c, d) = (ac − d̄b, da + bc̄)`.
fn cayley_dickson_mul(x: &[i64], y: &[i64]) -> Vec<i64> {
    let n = x.len();
    if n == 1 {
        return vec![x[0] * y[0]];
    }
    let h = n / 2;
    let (a, b) = x.split_at(h);
    let (c, d) = y.split_at(h);
    let ac = cayley_dickson_mul(a, c);
    let db = cayley_dickson_mul(&cayley_dickson_conj(d), b);
    let da = cayley_dickson_mul(d, a);
    let bc = cayley_dickson_mul(b, &cayley_dickson_conj(c));
    ac.iter()
        .zip(&db)
        .map(|(p, q)| p - q)
        .chain(da.iter().zip(&bc).map(|(p, q)| p + q))
        .collect()
}

fn cayley_dickson_conj(x: &[i64]) -> Vec<i64> {
    x.iter()
        .enumerate()
        .map(|(i, &v)| if i == 0 { v } else { -v })
        .collect()
}

/// Left multiplication by the `i`-th imaginary unit of the algebra of dimension `dim`.
fn left_unit_multiplication(dim: usize, i: usize) -> IntMatrix {
    let mut unit = vec![0; dim];
    unit[i] = 1;
    let mut m = IntMatrix::zeros(dim);
    for j in 0..dim {
        let mut e = vec![0; dim];
        e[j] = 1;
        for (r, v) in cayley_dickson_mul(&unit, &e).into_iter().enumerate() {
            m.set(r, j, v);
        }
    }
    m
}

/// Irreducible system for `1 <= m <= 8` on `ℝ^{2δ(m)}`:
/// `P_0 = diag(I, −I)`, `P_1 = [[0, I], [I, 0]]`, `P_{1+i} = [[0, E_i], [−E_i, 0]]`
/// with `E_i` left multiplication by imaginary units.
fn base_system(m: usize) -> Vec<IntMatrix> {
    let l = delta(m).expect("m in 1..=8") as usize;
    let id = IntMatrix::identity(l);
    let zero = IntMatrix::zeros(l);
    let mut out = vec![
        IntMatrix::from_blocks(&id, &zero, &zero, &id.neg()),
        IntMatrix::from_blocks(&zero, &id, &id, &zero),
    ];
    for i in 1..m {
        let e = left_unit_multiplication(l, i);
        out.push(IntMatrix::from_blocks(&zero, &e, &e.neg(), &zero));
    }
    out
}

/// Irreducible system with `m + 1` matrices. For `m > 8` the system for
/// `m − 8` is tensored with the eight-matrix system `Q_0..Q_7` on `ℝ^16`:
/// `{Q_a ⊗ I} ∪ {Ω ⊗ P_j}` with `Ω = Q_0⋯Q_7`.
fn irreducible_system(m: usize) -> Vec<IntMatrix> {
    if m <= 8 {
        return base_system(m);
    }
    let q = base_system(7);
    let omega = q.iter().skip(1).fold(q[0].clone(), |acc, p| acc.mul(p));
    let inner = irreducible_system(m - 8);
    let id = IntMatrix::identity(inner[0].size());
    q.iter()
        .map(|qa| qa.kron(&id))
        .chain(inner.iter().map(|p| omega.kron(p)))
        .collect()
}

/// Clifford system with `m + 1` matrices on `ℝ^{2kδ(m)}`: `k` diagonal copies
/// of a fixed irreducible one.
pub fn clifford_system(m: usize, k: usize) -> Result<CliffordSystem> {
    if k < 1 {
        return Err(Error::InvalidParameter("clifford_system needs k >= 1".into()));
    }
    let d = delta(m)? as usize;
    let matrices = irreducible_system(m)
        .into_iter()
        .map(|p| p.direct_sum_copies(k))
        .collect();
    Ok(CliffordSystem {
        m,
        l: k * d,
        matrices,
    })
}

/// Outcome of the exact relation check.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct CliffordCheck {
    pub symmetric: bool,
    pub involutions: bool,
    pub anticommuting: bool,
    pub entries_in_unit_set: bool,
}

impl CliffordCheck {
    pub fn passed(self) -> bool {
        self.symmetric && self.involutions && self.anticommuting && self.entries_in_unit_set
    }
}

impl CliffordSystem {
    pub fn dim(&self) -> usize {
        2 * self.l
    }

    /// Checks every relation in integer arithmetic.
    pub fn verify(&self) -> CliffordCheck {
        let id = IntMatrix::identity(self.dim());
        let mut check = CliffordCheck {
            symmetric: true,
            involutions: true,
            anticommuting: true,
            entries_in_unit_set: true,
        };
        for (i, p) in self.matrices.iter().enumerate() {
            check.symmetric &= p.transpose() == *p;
            check.involutions &= p.mul(p) == id;
            check.entries_in_unit_set &= p.data.iter().all(|v| (-1..=1).contains(v));
            for q in &self.matrices[i + 1..] {
                check.anticommuting &= p.mul(q).add(&q.mul(p)).is_zero();
            }
        }
        check
    }

    /// `Σ_i (xᵀ P_i x)²`.
    pub fn fkm_polynomial<T: Real>(&self, x: &[T]) -> Result<T> {
        if x.len() != self.dim() {
            return Err(Error::ShapeMismatch {
                expected: format!("vector of length {}", self.dim()),
                actual: format!("length {}", x.len()),
            });
        }
        Ok(self
            .matrices
            .iter()
            .map(|p| {
                let v = p.quadratic_form(x);
                v * v
            })
            .fold(T::zero(), |a, b| a + b))
    }

    /// A unit `x` with `xᵀP_ix = 0` for every `i`, if one exists (`l >= m + 1`).
    /// Takes `a` in the `+1` eigenspace of `P_0` and `b` in the `−1` eigenspace
    /// orthogonal to every `P_i a`; then `x = (a + b)/√2`.
    pub fn clifford_stiefel_point<T: Real>(&self) -> Option<Vec<T>> {
        if self.l < self.m + 1 {
            return None;
        }
        let n = self.dim();
        let p0 = &self.matrices[0];
        let project = |v: &[T], sign: T| -> Vec<T> {
            let pv = p0.apply(v);
            v.iter()
                .zip(&pv)
                .map(|(&a, &b)| T::lit(0.5) * (a + sign * b))
                .collect()
        };
        let unit = |j: usize| {
            let mut e = vec![T::zero(); n];
            e[j] = T::one();
            e
        };
        let a = (0..n)
            .map(|j| project(&unit(j), T::one()))
            .find(|v| norm(v) > T::lit(0.5))?;
        let a = scaled(&a, norm(&a).recip());
        let mut against: Vec<Vec<T>> = Vec::new();
        for p in &self.matrices[1..] {
            let mut v = p.apply(&a);
            for u in &against {
                let c = dot(&v, u);
                v = axpy(&v, u, -c);
            }
            let nv = norm(&v);
            if nv > T::lit(1e-9) {
                against.push(scaled(&v, nv.recip()));
            }
        }
        let b = (0..n).find_map(|j| {
            let mut v = project(&unit(j), -T::one());
            for _pass in 0..2 {
                for u in &against {
                    let c = dot(&v, u);
                    v = axpy(&v, u, -c);
                }
            }
            let nv = norm(&v);
            (nv > T::lit(1e-6)).then(|| scaled(&v, nv.recip()))
        })?;
        let s = T::lit(0.5).sqrt();
        Some(a.iter().zip(&b).map(|(&x, &y)| s * (x + y)).collect())
    }
}

fn dot<T: Real>(a: &[T], b: &[T]) -> T {
    a.iter().zip(b).fold(T::zero(), |acc, (&x, &y)| acc + x * y)
}

fn norm<T: Real>(a: &[T]) -> T {
    dot(a, a).sqrt()
}

fn scaled<T: Real>(a: &[T], c: T) -> Vec<T> {
    a.iter().map(|&v| v * c).collect()
}

fn axpy<T: Real>(a: &[T], b: &[T], c: T) -> Vec<T> {
    a.iter().zip(b).map(|(&x, &y)| x + c * y).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn delta_table() {
        let want = [1, 2, 4, 4, 8, 8, 8, 8, 16, 32, 64, 64, 128, 128, 128, 128];
        for (m, &d) in (1..=16).zip(&want) {
            assert_eq!(delta(m).unwrap(), d);
        }
        for m in 1..=24 {
            assert_eq!(delta(m + 8).unwrap(), 16 * delta(m).unwrap());
        }
        assert!(delta(0).is_err());
    }

    #[test]
    fn multiplicity_examples() {
        let r = fkm_multiplicities(4, 3).unwrap();
        assert_eq!((r.multiplicities.m1, r.multiplicities.m2, r.exceptional), (4, 7, false));
        let r = fkm_multiplicities(4, 2).unwrap();
        assert_eq!((r.multiplicities.m1, r.multiplicities.m2, r.exceptional), (3, 4, true));
        let r = fkm_multiplicities(1, 6).unwrap();
        assert_eq!((r.multiplicities.m1, r.multiplicities.m2), (1, 4));
        assert!(fkm_multiplicities(1, 2).is_err());
        assert!(fkm_multiplicities(7, 1).is_err());
    }

    #[test]
    fn exceptional_pairs_are_exactly_the_listed_ones() {
        for m in 1..=10 {
            for k in 1..=4 {
                if let Ok(r) = fkm_multiplicities(m, k) {
                    assert_eq!(r.exceptional, EXCEPTIONAL_PAIRS.contains(&(m, k)), "({m},{k})");
                }
            }
        }
        for (m, k) in EXCEPTIONAL_PAIRS {
            assert!(fkm_multiplicities(m, k).unwrap().exceptional);
        }
    }

    #[test]
    fn family_strings_round_trip() {
        for s in ["real:6", "complex:4", "quaternionic:3", "e6", "fkm:4:3"] {
            let kind: FamilyKind = s.parse().unwrap();
            assert_eq!(kind.to_string(), s);
        }
        assert!("fkm:4".parse::<FamilyKind>().is_err());
        assert!("octonion:2".parse::<FamilyKind>().is_err());
    }

    #[test]
    fn stiefel_thresholds() {
        assert_eq!(stiefel_threshold(|k| FamilyKind::HomogeneousReal { k }, 50), Some(6));
        assert_eq!(stiefel_threshold(|k| FamilyKind::HomogeneousComplex { k }, 50), Some(4));
        assert_eq!(
            stiefel_threshold(|k| FamilyKind::HomogeneousQuaternionic { k }, 50),
            Some(3)
        );
        assert_eq!(stiefel_threshold(|k| FamilyKind::Fkm { m: 1, k }, 50), Some(6));
    }

    #[test]
    fn minimal_leaf_certifications() {
        let e6 = ExampleFamily::new(FamilyKind::E6Isolated, Leaf::RegularMinimal).unwrap();
        assert_eq!(check_conditions(&e6).unwrap().certification, Certification::SimpleCurvatureBound);
        let quat = ExampleFamily::new(FamilyKind::HomogeneousQuaternionic { k: 4 }, Leaf::RegularMinimal)
            .unwrap();
        let r = check_conditions(&quat).unwrap();
        assert_eq!(r.certification, Certification::NumericThreshold);
        assert!(r.numeric);
        let real = ExampleFamily::new(FamilyKind::HomogeneousReal { k: 9 }, Leaf::RegularMinimal).unwrap();
        assert_eq!(check_conditions(&real).unwrap().certification, Certification::None);
    }

    #[test]
    fn focal_boundary_is_not_certified() {
        // 4·4 = 3·2 + 10: the strict inequality fails
        assert!(!focal_bound_negative(Multiplicities { m1: 2, m2: 4 }));
        assert!(focal_bound_negative(Multiplicities { m1: 2, m2: 5 }));
        // k = (7m+14)/(4δ) exactly: m = 2, δ = 2, k = 28/8 is not an integer, so test k = 3 and 4
        assert!(!clifford_stiefel_condition(2, 3).unwrap());
        assert!(clifford_stiefel_condition(2, 4).unwrap());
    }

    #[test]
    fn small_clifford_systems() {
        let s = clifford_system(1, 1).unwrap();
        assert_eq!(s.matrices[0].data, vec![1, 0, 0, -1]);
        assert_eq!(s.matrices[1].data, vec![0, 1, 1, 0]);
        let s = clifford_system(2, 1).unwrap();
        assert_eq!((s.matrices.len(), s.dim()), (3, 4));
        assert!(s.verify().passed());
        let s = clifford_system(9, 1).unwrap();
        assert_eq!((s.matrices.len(), s.dim()), (10, 32));
        assert!(s.verify().passed());
    }

    #[test]
    fn all_small_systems_pass() {
        for m in 1..=9 {
            for k in 1..=2 {
                let s = clifford_system(m, k).unwrap();
                assert_eq!(s.matrices.len(), m + 1);
                assert_eq!(s.dim() as u64, 2 * k as u64 * delta(m).unwrap());
                assert!(s.verify().passed(), "m={m} k={k}");
            }
        }
    }

    #[test]
    fn broken_system_is_detected() {
        let mut s = clifford_system(2, 1).unwrap();
        s.matrices[2] = s.matrices[1].clone();
        let c = s.verify();
        assert!(!c.anticommuting && c.involutions);
    }

    #[test]
    fn fkm_polynomial_examples() {
        let s = clifford_system(1, 1).unwrap();
        assert_eq!(s.fkm_polynomial(&[1.0, 0.0]).unwrap(), 1.0);
        let r = 0.5f64.sqrt();
        assert!((s.fkm_polynomial(&[r, r]).unwrap() - 1.0).abs() < 1e-15);
        assert!(s.fkm_polynomial(&[1.0]).is_err());
        assert!(s.clifford_stiefel_point::<f64>().is_none());
    }

    #[test]
    fn clifford_stiefel_points() {
        for (m, k) in [(1, 3), (2, 2), (3, 1), (4, 3), (5, 1), (9, 1)] {
            let s = clifford_system(m, k).unwrap();
            let x = s.clifford_stiefel_point::<f64>().expect("l >= m + 1");
            assert!((norm(&x) - 1.0).abs() < 1e-12);
            for p in &s.matrices {
                assert!(p.quadratic_form(&x).abs() < 1e-12);
            }
            assert!(s.fkm_polynomial(&x).unwrap() < 1e-24);
        }
    }
}
