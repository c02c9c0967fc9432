//! Morse index constants, in exact arithmetic.
//!
//! If ACS < 0 everywhere on `M^n ⊂ ℝ^d`, minimal hypersurfaces of `M` have
//! `ind ≥ b_1 / C(d, 2)`. Passing through the Veronese map `ℝ^d → ℝ^{d(d+3)/2}`
//! gives the robust constant `8/(d(d+3)(d²+3d−2))`, which is the first
//! constant at the larger dimension.

use num_bigint::BigInt;
use num_integer::binomial;
use num_rational::BigRational;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// `d + d(d+1)/2 = d(d+3)/2`.
pub fn veronese_dim(d: u64) -> u64 {
    d * (d + 3) / 2
}

/// `1 / C(d, 2)` for `d ≥ 2`.
pub fn acs_index_constant(d: u64) -> Result<BigRational> {
    if d < 2 {
        return Err(Error::InvalidParameter(format!(
            "acs index constant needs d >= 2, got {d}"
        )));
    }
    Ok(BigRational::new(BigInt::one(), binomial(BigInt::from(d), BigInt::from(2))))
}

/// `8 / (d(d+3)(d²+3d−2))` for `d ≥ 1`.
pub fn robust_index_constant(d: u64) -> BigRational {
    assert!(d >= 1, "robust index constant needs d >= 1");
    let d = BigInt::from(d);
    let den = &d * (&d + 3) * (&d * &d + &d * 3 - 2);
    BigRational::new(BigInt::from(8), den)
}

/// Both constants for one ambient dimension.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IndexBoundConstant {
    pub d: u64,
    #[serde(with = "rational_string")]
    pub acs_constant: BigRational,
    #[serde(with = "rational_string")]
    pub robust_constant: BigRational,
    pub veronese_target_dim: u64,
}

impl IndexBoundConstant {
    pub fn new(d: u64) -> Result<Self> {
        Ok(Self {
            d,
            acs_constant: acs_index_constant(d)?,
            robust_constant: robust_index_constant(d),
            veronese_target_dim: veronese_dim(d),
        })
    }

    /// `robust = 1 / C(veronese_dim, 2)`, compared exactly.
    pub fn identity_holds(&self) -> bool {
        acs_index_constant(self.veronese_target_dim).is_ok_and(|c| c == self.robust_constant)
    }
}

/// Serde adapter writing a rational as `"p/q"`, denominator always present.
pub mod rational_string {
    use num_rational::BigRational;
    use serde::{de::Error as _, Deserialize, Deserializer, Serializer};

    pub fn format(r: &BigRational) -> String {
        format!("{}/{}", r.numer(), r.denom())
    }

    pub fn parse(s: &str) -> Option<BigRational> {
        let (p, q) = s.split_once('/')?;
        let (p, q) = (p.parse().ok()?, q.parse().ok()?);
        if q == num_bigint::BigInt::from(0) {
            return None;
        }
        Some(BigRational::new(p, q))
    }

    pub fn serialize<S: Serializer>(r: &BigRational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&format(r))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigRational, D::Error> {
        let s = String::deserialize(d)?;
        parse(&s).ok_or_else(|| D::Error::custom(format!("expected p/q, got {s:?}")))
    }
}
