//! Certificates: one record per verification run, with a verdict whose
//! strength matches the method that produced it.
//!
//! Negativity is only ever certified by the simplex QP or a closed-form
//! bound. Sampling can exhibit a witness or attach evidence, never certify.

use std::collections::BTreeMap;
use std::fmt::{self, Write as _};

use num_complex::Complex;
use num_rational::BigRational;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fkm::{check_conditions, clifford_system, Certification, ExampleFamily, FamilyKind, Leaf};
use crate::index_bounds::{acs_index_constant, rational_string, robust_index_constant};
use crate::isoparametric::{
    acs_from_sff, build_sff, curvature_normals, focal_acs_upper, frame_pair_from_weights, grid_max_acs, max_acs,
    Multiplicities, Semantics,
};
use crate::lie::{
    b_n_bracket, padded_positive_witness, positive_witness, rational_to_f64, sample_min_acs, EmbeddingFamily,
    MinimizerWitness, SampleStats,
};

pub const TOOL_VERSION: &str = concat!("acs-cert ", env!("CARGO_PKG_VERSION"));

/// Default number of samples for the embedding sweeps.
pub const DEFAULT_SAMPLES: usize = 10_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    CertifiedNegative,
    CertifiedNonpositive,
    PositiveWitnessFound,
    Inconclusive,
    UpperBoundOnly,
}

impl Verdict {
    /// 0 certified, 2 witness, 3 undecided. Exit code 1 is reserved for usage errors.
    pub fn exit_code(self) -> i32 {
        match self {
            Verdict::CertifiedNegative | Verdict::CertifiedNonpositive => 0,
            Verdict::PositiveWitnessFound => 2,
            Verdict::Inconclusive | Verdict::UpperBoundOnly => 3,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Verdict::CertifiedNegative => "certified-negative",
            Verdict::CertifiedNonpositive => "certified-nonpositive",
            Verdict::PositiveWitnessFound => "positive-witness-found",
            Verdict::Inconclusive => "inconclusive",
            Verdict::UpperBoundOnly => "upper-bound-only",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    SimplexQp,
    ClosedFormBound,
    Sampling,
    ExplicitWitness,
}

impl Method {
    pub fn name(self) -> &'static str {
        match self {
            Method::SimplexQp => "simplex-qp",
            Method::ClosedFormBound => "closed-form-bound",
            Method::Sampling => "sampling",
            Method::ExplicitWitness => "explicit-witness",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IndexConstants {
    #[serde(with = "rational_string")]
    pub acs: BigRational,
    #[serde(with = "rational_string")]
    pub robust: BigRational,
    pub ambient_dim: u64,
}

impl IndexConstants {
    pub fn for_dim(d: u64) -> Result<Self> {
        Ok(Self {
            acs: acs_index_constant(d)?,
            robust: robust_index_constant(d),
            ambient_dim: d,
        })
    }
}

/// Solver diagnostics; only the fields relevant to a run are present.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct SolverStats {
    /// The argument that decides the verdict.
    pub certified_by: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub semantics: Option<Semantics>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub faces_examined: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub feasible_candidates: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub singular_faces: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub max_stationarity_residual: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub grid_value: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub grid_error_bound: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub grid_points: Option<u64>,
    /// `qp ∈ [grid, grid + error_bound]` up to rounding.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub grid_consistent: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sample_min: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sample_max: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sample_argmin_index: Option<u64>,
    /// The largest sampled value respects the proven bound (tolerance 1e-9).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bound_respected: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness_construction: Option<String>,
    /// Isoparametric: `s` then `t`. SU(n): the eigenvalues of `N` before scaling.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness_point: Option<Vec<f64>>,
    /// ACS recomputed on the witness from the raw second fundamental form.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness_recomputed: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub clifford_dim: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub clifford_relations_hold: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AcsCertificate {
    pub family: String,
    pub parameters: BTreeMap<String, i64>,
    /// `None` only for the constants query, which decides nothing.
    pub verdict: Option<Verdict>,
    pub acs_value_or_bound: Option<f64>,
    pub method: Option<Method>,
    pub constant_term: Option<f64>,
    pub index_constants: IndexConstants,
    pub seed: Option<u64>,
    pub samples: Option<u64>,
    pub solver_stats: SolverStats,
    pub tool_version: String,
}

impl AcsCertificate {
    fn new(family: impl Into<String>, parameters: &[(&str, i64)], ambient_dim: u64) -> Result<Self> {
        Ok(Self {
            family: family.into(),
            parameters: parameters.iter().map(|&(k, v)| (k.to_string(), v)).collect(),
            verdict: None,
            acs_value_or_bound: None,
            method: None,
            constant_term: None,
            index_constants: IndexConstants::for_dim(ambient_dim)?,
            seed: None,
            samples: None,
            solver_stats: SolverStats::default(),
            tool_version: TOOL_VERSION.to_string(),
        })
    }

    pub fn exit_code(&self) -> i32 {
        self.verdict.map_or(0, Verdict::exit_code)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("certificate fields are serializable")
    }
}

/// Exit code for several certificates: a witness dominates, then any
/// undecided verdict, then success.
pub fn combined_exit_code(certs: &[AcsCertificate]) -> i32 {
    let codes: Vec<i32> = certs.iter().map(AcsCertificate::exit_code).collect();
    if codes.contains(&2) {
        2
    } else if codes.contains(&3) {
        3
    } else {
        0
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Text,
    Json,
}

/// JSON: one object per line. Text: one block per certificate.
pub fn emit(certs: &[AcsCertificate], format: Format) -> String {
    let mut out = String::new();
    for c in certs {
        match format {
            Format::Json => {
                out.push_str(&c.to_json());
                out.push('\n');
            }
            Format::Text => {
                if !out.is_empty() {
                    out.push('\n');
                }
                out.push_str(&c.to_string());
            }
        }
    }
    out
}

impl fmt::Display for AcsCertificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let params: Vec<String> = self.parameters.iter().map(|(k, v)| format!("{k}={v}")).collect();
        writeln!(f, "family       {} ({})", self.family, params.join(", "))?;
        match self.verdict {
            Some(v) => writeln!(f, "verdict      {}", v.name())?,
            None => writeln!(f, "verdict      (none: constants only)")?,
        }
        if let Some(m) = self.method {
            writeln!(f, "method       {}", m.name())?;
        }
        if let Some(v) = self.acs_value_or_bound {
            writeln!(f, "acs          {v}")?;
        }
        if !self.solver_stats.certified_by.is_empty() {
            writeln!(f, "certified by {}", self.solver_stats.certified_by)?;
        }
        if let Some(c) = self.constant_term {
            writeln!(f, "constant     {c}")?;
        }
        let ic = &self.index_constants;
        writeln!(
            f,
            "index        d = {}: ind >= {} b_1, robust {} b_1",
            ic.ambient_dim,
            rational_string::format(&ic.acs),
            rational_string::format(&ic.robust)
        )?;
        if let (Some(seed), Some(n)) = (self.seed, self.samples) {
            let mut line = format!("sampling     {n} samples, seed {seed}");
            if let (Some(lo), Some(hi)) = (self.solver_stats.sample_min, self.solver_stats.sample_max) {
                let _ = write!(line, ", range [{lo}, {hi}]");
            }
            writeln!(f, "{line}")?;
        }
        if let Some(faces) = self.solver_stats.faces_examined {
            writeln!(
                f,
                "qp           {faces} faces, residual {:e}",
                self.solver_stats.max_stationarity_residual.unwrap_or(0.0)
            )?;
        }
        if let (Some(g), Some(e)) = (self.solver_stats.grid_value, self.solver_stats.grid_error_bound) {
            writeln!(
                f,
                "grid oracle  {g} + {e:e} ({})",
                if self.solver_stats.grid_consistent == Some(true) {
                    "consistent"
                } else {
                    "INCONSISTENT"
                }
            )?;
        }
        if let Some(w) = &self.solver_stats.witness_construction {
            writeln!(f, "witness      {w}")?;
        }
        write!(f, "version      {}", self.tool_version)?;
        writeln!(f)
    }
}

/// Optional grid cross-check for the isoparametric QP.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridCheck {
    pub step: f64,
}

fn verdict_from_sign(value: f64) -> Verdict {
    if value < 0.0 {
        Verdict::CertifiedNegative
    } else {
        Verdict::CertifiedNonpositive
    }
}

/// Regular minimal leaf: maximize ACS′ exactly.
pub fn run_isoparametric(m1: usize, m2: usize, grid: Option<GridCheck>) -> Result<AcsCertificate> {
    let m = Multiplicities::new(m1, m2)?;
    let mut cert = AcsCertificate::new(
        "isoparametric",
        &[("m1", m1 as i64), ("m2", m2 as i64)],
        m.n() as u64 + 2,
    )?;
    let best = max_acs::<f64>(m)?;
    let stats = &mut cert.solver_stats;
    stats.semantics = Some(best.semantics);
    stats.faces_examined = Some(best.vertex_solutions.iter().map(|s| s.stats.faces_examined).sum::<usize>() as u64);
    stats.feasible_candidates = Some(best.vertex_solutions.iter().map(|s| s.stats.feasible_candidates).sum::<usize>() as u64);
    stats.singular_faces = Some(best.vertex_solutions.iter().map(|s| s.stats.singular_faces).sum::<usize>() as u64);
    stats.max_stationarity_residual = Some(
        best.vertex_solutions
            .iter()
            .map(|s| s.stationarity_residual)
            .fold(0.0, f64::max),
    );
    if let Some(GridCheck { step }) = grid {
        let g = grid_max_acs::<f64>(m, step)?;
        let slack = 1e-9 * best.value.abs().max(1.0);
        stats.grid_value = Some(g.value);
        stats.grid_error_bound = Some(g.error_bound);
        stats.grid_points = Some(g.points_evaluated);
        stats.grid_consistent = Some(best.value >= g.value - slack && best.value <= g.value + g.error_bound + slack);
    }
    cert.method = Some(Method::SimplexQp);
    cert.acs_value_or_bound = Some(best.value);
    if best.value < 0.0 {
        cert.verdict = Some(Verdict::CertifiedNegative);
        cert.solver_stats.certified_by = match best.semantics {
            Semantics::Exact => "max ACS' over the simplex product, equal to max ACS".into(),
            Semantics::UpperBound => "max ACS' over the simplex product, an upper bound for max ACS".into(),
        };
    } else if best.semantics == Semantics::UpperBound {
        cert.verdict = Some(Verdict::UpperBoundOnly);
        cert.solver_stats.certified_by = "max ACS' >= 0 bounds max ACS from above only".into();
    } else if best.value.is_zero() {
        cert.verdict = Some(Verdict::CertifiedNonpositive);
        cert.solver_stats.certified_by = "max ACS' = 0, equal to max ACS".into();
    } else {
        let mut s = [0.0; 4];
        s[best.s_vertex] = 1.0;
        let (x, nv) = frame_pair_from_weights(m, &s, &best.t)?;
        let sys = curvature_normals::<f64>(m);
        let sff = build_sff(&sys, m);
        let h = sff.trace();
        let recomputed = acs_from_sff(&sff, &h, &x, &nv)?;
        cert.verdict = Some(Verdict::PositiveWitnessFound);
        cert.method = Some(Method::ExplicitWitness);
        let stats = &mut cert.solver_stats;
        stats.certified_by = "orthonormal pair realizing the positive maximum of ACS'".into();
        stats.witness_construction = Some("frame-pair-from-weights".into());
        stats.witness_point = Some(s.iter().chain(best.t.iter()).copied().collect());
        stats.witness_recomputed = Some(recomputed);
    }
    Ok(cert)
}

/// Focal manifold `M_+`, collapsing the `m1` distribution: the integer bound
/// `−2(m1 + 2m2) + 10 + 5m1`.
pub fn run_focal(m1: usize, m2: usize) -> Result<AcsCertificate> {
    if m1 < 1 || m2 < 1 {
        return Err(Error::InvalidParameter(format!(
            "multiplicities must be positive, got ({m1}, {m2})"
        )));
    }
    let m = Multiplicities { m1, m2 };
    let mut cert = AcsCertificate::new(
        "isoparametric-focal",
        &[("m1", m1 as i64), ("m2", m2 as i64)],
        m.n() as u64 + 2,
    )?;
    let bound = focal_acs_upper(m);
    cert.method = Some(Method::ClosedFormBound);
    cert.acs_value_or_bound = Some(bound as f64);
    if bound < 0 {
        cert.verdict = Some(Verdict::CertifiedNegative);
        cert.solver_stats.certified_by = format!("focal bound: 4 m2 = {} > 3 m1 + 10 = {}", 4 * m2, 3 * m1 + 10);
    } else {
        cert.verdict = Some(Verdict::UpperBoundOnly);
        cert.solver_stats.certified_by = format!("focal bound: 4 m2 = {} <= 3 m1 + 10 = {}", 4 * m2, 3 * m1 + 10);
    }
    Ok(cert)
}

fn attach_samples(cert: &mut AcsCertificate, s: &SampleStats, bound: Option<f64>) {
    cert.seed = Some(s.seed);
    cert.samples = Some(s.samples as u64);
    cert.solver_stats.sample_min = Some(s.min_value);
    cert.solver_stats.sample_max = Some(s.max_value);
    cert.solver_stats.sample_argmin_index = Some(s.argmin_index);
    if let Some(b) = bound {
        cert.solver_stats.bound_respected = Some(s.max_value <= b + 1e-9);
    }
}

fn attach_witness(cert: &mut AcsCertificate, w: &MinimizerWitness<Complex<f64>>) {
    cert.verdict = Some(Verdict::PositiveWitnessFound);
    cert.method = Some(Method::ExplicitWitness);
    cert.acs_value_or_bound = Some(w.value);
    let scale = (2.0 * w.n.rows() as f64).sqrt();
    cert.solver_stats.witness_construction = Some(
        serde_json::to_value(w.construction)
            .ok()
            .and_then(|v| v.as_str().map(str::to_string))
            .unwrap_or_default(),
    );
    cert.solver_stats.witness_point = Some((0..w.n.rows()).map(|i| w.n[(i, i)].im * scale).collect());
}

fn embedding_certificate(family: EmbeddingFamily, name: &str, params: &[(&str, i64)]) -> Result<AcsCertificate> {
    let family = family.validate()?;
    let mut cert = AcsCertificate::new(name, params, family.ambient_dim() as u64)?;
    cert.constant_term = Some(rational_to_f64(&family.constant_term()));
    Ok(cert)
}

/// `SU(n)`: closed-form bound for `n < 18`, zero at 18, explicit witness above.
pub fn run_su(n: usize, samples: usize, seed: u64) -> Result<AcsCertificate> {
    let family = EmbeddingFamily::Su { n };
    let mut cert = embedding_certificate(family, "su", &[("n", n as i64)])?;
    let stats = sample_min_acs(family, samples, seed)?;
    if n > 18 {
        let w = if n.is_multiple_of(2) {
            positive_witness::<f64>(n)?
        } else {
            padded_positive_witness::<f64>(n)?
        };
        attach_samples(&mut cert, &stats, None);
        attach_witness(&mut cert, &w);
        cert.solver_stats.certified_by = if n.is_multiple_of(2) {
            let b = crate::lie::b_n_closed(n)?;
            format!("explicit pair with ACS = -b_n = {}", rational_string::format(&-b))
        } else {
            format!("explicit pair for n - 1 = {}, padded with zeros", n - 1)
        };
        return Ok(cert);
    }
    let bound = family.proven_upper_bound();
    let b = rational_to_f64(&bound);
    cert.method = Some(Method::ClosedFormBound);
    cert.acs_value_or_bound = Some(b);
    cert.verdict = Some(verdict_from_sign(b));
    cert.solver_stats.certified_by = if n.is_multiple_of(2) {
        format!("ACS <= -b_n = {}", rational_string::format(&bound))
    } else {
        let (lo, _) = b_n_bracket(n);
        format!(
            "ACS <= -b_n <= -{} (lower end of the odd-n bracket)",
            rational_string::format(&lo)
        )
    };
    attach_samples(&mut cert, &stats, Some(b));
    downgrade_if_violated(&mut cert);
    Ok(cert)
}

/// A sampled value above a proven bound means the computation is broken; the
/// verdict falls back to inconclusive rather than asserting the bound.
fn downgrade_if_violated(cert: &mut AcsCertificate) {
    if cert.solver_stats.bound_respected == Some(false) {
        cert.verdict = Some(Verdict::Inconclusive);
        cert.method = Some(Method::Sampling);
        cert.acs_value_or_bound = cert.solver_stats.sample_max;
        cert.solver_stats.certified_by = "sampled value exceeds the closed-form bound".into();
    }
}

/// `Sp(n)`: `ACS ≤ −1/(4n+4)`.
pub fn run_sp(n: usize, samples: usize, seed: u64) -> Result<AcsCertificate> {
    let family = EmbeddingFamily::Sp { n };
    let mut cert = embedding_certificate(family, "sp", &[("n", n as i64)])?;
    let bound = family.proven_upper_bound();
    let b = rational_to_f64(&bound);
    cert.method = Some(Method::ClosedFormBound);
    cert.acs_value_or_bound = Some(b);
    cert.verdict = Some(verdict_from_sign(b));
    cert.solver_stats.certified_by = format!("ACS <= -1/(4n+4) = {}", rational_string::format(&bound));
    let stats = sample_min_acs(family, samples, seed)?;
    attach_samples(&mut cert, &stats, Some(b));
    downgrade_if_violated(&mut cert);
    Ok(cert)
}

/// Quaternionic Grassmannian of `d`-planes in `ℍ^n`: `ACS ≤ −3/(2(n+1))`.
pub fn run_grassmannian(d: usize, n: usize, samples: usize, seed: u64) -> Result<AcsCertificate> {
    let family = EmbeddingFamily::GrassmannH { d, n };
    let mut cert = embedding_certificate(family, "grassmannian-h", &[("d", d as i64), ("n", n as i64)])?;
    let bound = family.proven_upper_bound();
    let b = rational_to_f64(&bound);
    cert.method = Some(Method::ClosedFormBound);
    cert.acs_value_or_bound = Some(b);
    cert.verdict = Some(verdict_from_sign(b));
    cert.solver_stats.certified_by = format!("ACS <= -3/(2(n+1)) = {}", rational_string::format(&bound));
    let stats = sample_min_acs(family, samples, seed)?;
    attach_samples(&mut cert, &stats, Some(b));
    downgrade_if_violated(&mut cert);
    Ok(cert)
}

fn family_parameters(family: &ExampleFamily, m1: usize, m2: usize) -> Vec<(&'static str, i64)> {
    let mut params = vec![("m1", m1 as i64), ("m2", m2 as i64)];
    match family.kind {
        FamilyKind::HomogeneousReal { k }
        | FamilyKind::HomogeneousComplex { k }
        | FamilyKind::HomogeneousQuaternionic { k } => params.push(("k", k as i64)),
        FamilyKind::E6Isolated => {}
        FamilyKind::Fkm { m, k } => {
            params.push(("m", m as i64));
            params.push(("k", k as i64));
            params.push(("exceptional", i64::from(family.exceptional())));
        }
    }
    params
}

fn leaf_tag(leaf: Leaf) -> &'static str {
    match leaf {
        Leaf::RegularMinimal => "minimal",
        Leaf::FocalPlus => "focal",
    }
}

/// One catalog entry: the leaf's pipeline, labelled with the hypothesis that
/// applies to the family.
pub fn run_family(family: &ExampleFamily) -> Result<AcsCertificate> {
    let report = check_conditions(family)?;
    let mut cert = match family.leaf {
        Leaf::RegularMinimal => run_isoparametric(report.m1, report.m2, None)?,
        Leaf::FocalPlus => run_focal(report.m1, report.m2)?,
    };
    cert.family = format!("{}/{}", family.kind, leaf_tag(family.leaf));
    cert.parameters = family_parameters(family, report.m1, report.m2)
        .into_iter()
        .map(|(k, v)| (k.to_string(), v))
        .collect();
    if report.certification != Certification::None {
        cert.solver_stats.certified_by = format!(
            "{} ({}); {}",
            report.certification.name(),
            report.detail,
            cert.solver_stats.certified_by
        );
    } else {
        cert.solver_stats.certified_by = format!("none ({}); {}", report.detail, cert.solver_stats.certified_by);
    }
    Ok(cert)
}

pub fn run_catalog(family: Option<&str>) -> Result<Vec<AcsCertificate>> {
    let families: Vec<ExampleFamily> = match family {
        None => crate::fkm::catalog(),
        Some(s) => {
            let kind: FamilyKind = s.parse()?;
            vec![
                ExampleFamily::new(kind, Leaf::RegularMinimal)?,
                ExampleFamily::new(kind, Leaf::FocalPlus)?,
            ]
        }
    };
    families.iter().map(run_family).collect()
}

/// Builds and verifies the Clifford system, then certifies the FKM focal manifold.
pub fn run_clifford(m: usize, k: usize) -> Result<AcsCertificate> {
    let system = clifford_system(m, k)?;
    let check = system.verify();
    let family = ExampleFamily::new(FamilyKind::Fkm { m, k }, Leaf::FocalPlus)?;
    let mut cert = run_family(&family)?;
    cert.solver_stats.clifford_dim = Some(system.dim() as u64);
    cert.solver_stats.clifford_relations_hold = Some(check.passed());
    if !check.passed() {
        return Err(Error::ConstraintViolation(format!(
            "Clifford relations fail for m={m}, k={k}: {check:?}"
        )));
    }
    Ok(cert)
}

/// Index constants only.
pub fn run_constants(dim: u64) -> Result<AcsCertificate> {
    AcsCertificate::new("constants", &[("dim", dim as i64)], dim)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exit_codes_partition_verdicts() {
        use Verdict::*;
        let all = [CertifiedNegative, CertifiedNonpositive, PositiveWitnessFound, Inconclusive, UpperBoundOnly];
        for v in all {
            assert!([0, 2, 3].contains(&v.exit_code()));
            assert_eq!(serde_json::to_value(v).unwrap(), v.name());
        }
    }

    #[test]
    fn six_nine_is_certified_by_the_qp() {
        let c = run_isoparametric(6, 9, Some(GridCheck { step: 0.05 })).unwrap();
        assert_eq!(c.verdict, Some(Verdict::CertifiedNegative));
        assert_eq!(c.method, Some(Method::SimplexQp));
        assert_eq!(c.index_constants.ambient_dim, 32);
        assert_eq!(c.solver_stats.grid_consistent, Some(true));
        assert!(c.to_json().contains("\"verdict\":\"certified-negative\""));
    }

    #[test]
    fn small_multiplicities() {
        let c = run_isoparametric(1, 1, None).unwrap();
        assert_eq!(c.verdict, Some(Verdict::UpperBoundOnly));
        let c = run_isoparametric(2, 2, None).unwrap();
        assert_eq!(c.verdict, Some(Verdict::PositiveWitnessFound));
        let v = c.acs_value_or_bound.unwrap();
        assert!((c.solver_stats.witness_recomputed.unwrap() - v).abs() < 1e-9);
        assert!(run_isoparametric(3, 2, None).is_err());
    }

    #[test]
    fn focal_pipeline() {
        assert_eq!(run_focal(6, 9).unwrap().verdict, Some(Verdict::CertifiedNegative));
        let c = run_focal(2, 4).unwrap();
        assert_eq!(c.verdict, Some(Verdict::UpperBoundOnly));
        assert_eq!(c.acs_value_or_bound, Some(0.0));
    }

    #[test]
    fn su_trichotomy() {
        let c = run_su(16, 50, 0).unwrap();
        assert_eq!(c.verdict, Some(Verdict::CertifiedNegative));
        assert_eq!(c.seed, Some(0));
        assert_eq!(c.samples, Some(50));
        let c = run_su(18, 50, 0).unwrap();
        assert_eq!(c.verdict, Some(Verdict::CertifiedNonpositive));
        assert_eq!(c.acs_value_or_bound, Some(0.0));
        let c = run_su(20, 50, 0).unwrap();
        assert_eq!(c.verdict, Some(Verdict::PositiveWitnessFound));
        assert!((c.acs_value_or_bound.unwrap() - 3.125e-4).abs() < 1e-9);
        let c = run_su(19, 50, 0).unwrap();
        assert_eq!(c.verdict, Some(Verdict::PositiveWitnessFound));
        assert!(c.acs_value_or_bound.unwrap() > 0.0);
        assert_eq!(run_su(17, 50, 0).unwrap().verdict, Some(Verdict::CertifiedNegative));
    }

    #[test]
    fn json_round_trips() {
        for c in [
            run_sp(2, 20, 3).unwrap(),
            run_grassmannian(1, 3, 20, 3).unwrap(),
            run_constants(4).unwrap(),
            run_clifford(1, 3).unwrap(),
        ] {
            let back: AcsCertificate = serde_json::from_str(&c.to_json()).unwrap();
            assert_eq!(back, c);
        }
        let c = run_constants(4).unwrap();
        assert!(c.to_json().contains("\"acs\":\"1/6\",\"robust\":\"1/91\""));
        assert_eq!(c.exit_code(), 0);
    }

    #[test]
    fn catalog_lists_every_family_once() {
        let certs = run_catalog(None).unwrap();
        assert_eq!(certs.len(), crate::fkm::catalog().len());
        let e6 = run_catalog(Some("e6")).unwrap();
        assert_eq!(e6.len(), 2);
        assert!(e6.iter().all(|c| c.verdict == Some(Verdict::CertifiedNegative)));
        assert!(run_catalog(Some("nope")).is_err());
        let text = emit(&e6, Format::Text);
        assert!(text.contains("certified by"));
        assert_eq!(emit(&e6, Format::Json).lines().count(), 2);
    }
}
