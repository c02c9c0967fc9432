//! ACS negativity certificates for minimal submanifolds of spheres: isoparametric
//! hypersurfaces and their focal manifolds, FKM families, and the equivariant
//! embeddings of `SU(n)`, `Sp(n)` and quaternionic Grassmannians.
//!
//! Numerical code is generic over the scalar type; the root re-exports `f64` aliases.

#![allow(clippy::needless_range_loop)]

pub mod dense;
pub mod error;
pub mod fkm;
pub mod index_bounds;
pub mod isoparametric;
pub mod killing;
pub mod lie;
pub mod matrix;
pub mod quaternion;
pub mod report;
pub mod sampling;
pub mod scalar;
pub mod simplex;

pub use error::{Error, Result};
pub use report::{AcsCertificate, Method, Verdict};

pub type Quat = quaternion::Quaternion<f64>;
pub type ComplexMatrix = matrix::Matrix<num_complex::Complex<f64>>;
pub type QuatMatrix = matrix::Matrix<Quat>;
pub type RealMatrix = matrix::Matrix<f64>;
pub type SimplexQp = simplex::SimplexQuadraticProgram<f64>;
pub type CurvatureNormals = isoparametric::CurvatureNormalSystem<f64>;
pub type Sff = isoparametric::SffTensor<f64>;
pub type KillingMetric64 = killing::KillingMetric<f64>;
