//! Scalar traits shared by every numeric module.
//!
//! [`Real`] is the floating point base type (`f32` or `f64`). [`DivisionAlgebra`]
//! abstracts over the three associative real division algebras used for matrix
//! entries: the reals themselves, [`Complex`] and [`Quaternion`].

use std::fmt::{self, Debug, Display};
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_complex::Complex;
use num_traits::{Float, FromPrimitive, NumAssign};

use crate::quaternion::Quaternion;

/// Floating point: f32 or f64.
pub trait Real:
    Float + FromPrimitive + NumAssign + Debug + Display + Default + Send + Sync + 'static
{
    /// Lossy conversion from an `f64` literal or constant.
    fn lit(x: f64) -> Self {
        Self::from_f64(x).expect("f64 literal representable")
    }

    fn to_f64_lossy(self) -> f64 {
        self.to_f64().unwrap_or(f64::NAN)
    }
}

impl Real for f32 {}
impl Real for f64 {}

/// Which division algebra a scalar type belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FieldKind {
    Real,
    Complex,
    Quaternion,
}

impl FieldKind {
    /// Real dimension of the algebra.
    pub fn dim(self) -> usize {
        match self {
            FieldKind::Real => 1,
            FieldKind::Complex => 2,
            FieldKind::Quaternion => 4,
        }
    }
}

impl Display for FieldKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FieldKind::Real => "real",
            FieldKind::Complex => "complex",
            FieldKind::Quaternion => "quaternionic",
        })
    }
}

/// An associative real division algebra with conjugation.
pub trait DivisionAlgebra:
    Copy
    + PartialEq
    + Debug
    + Send
    + Sync
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + AddAssign
    + SubAssign
{
    type Real: Real;
    const KIND: FieldKind;

    fn zero() -> Self;
    fn one() -> Self;
    fn from_real(r: Self::Real) -> Self;
    fn conj(self) -> Self;
    fn re(self) -> Self::Real;
    fn norm_sqr(self) -> Self::Real;

    /// The `i`-th real coordinate, `i < KIND.dim()`.
    fn component(self, i: usize) -> Self::Real;

    /// Builds a value from `KIND.dim()` real coordinates.
    fn from_components(c: &[Self::Real]) -> Self;

    fn scale(self, r: Self::Real) -> Self {
        self * Self::from_real(r)
    }

    fn modulus(self) -> Self::Real {
        self.norm_sqr().sqrt()
    }
}

macro_rules! real_division_algebra {
    ($t:ty) => {
        impl DivisionAlgebra for $t {
            type Real = $t;
            const KIND: FieldKind = FieldKind::Real;

            fn zero() -> Self {
                0.0
            }
            fn one() -> Self {
                1.0
            }
            fn from_real(r: $t) -> Self {
                r
            }
            fn conj(self) -> Self {
                self
            }
            fn re(self) -> $t {
                self
            }
            fn norm_sqr(self) -> $t {
                self * self
            }
            fn component(self, i: usize) -> $t {
                debug_assert_eq!(i, 0);
                self
            }
            fn from_components(c: &[$t]) -> Self {
                c[0]
            }
            fn scale(self, r: $t) -> Self {
                self * r
            }
        }
    };
}

real_division_algebra!(f32);
real_division_algebra!(f64);

impl<T: Real> DivisionAlgebra for Complex<T> {
    type Real = T;
    const KIND: FieldKind = FieldKind::Complex;

    fn zero() -> Self {
        Complex::new(T::zero(), T::zero())
    }
    fn one() -> Self {
        Complex::new(T::one(), T::zero())
    }
    fn from_real(r: T) -> Self {
        Complex::new(r, T::zero())
    }
    fn conj(self) -> Self {
        Complex::conj(&self)
    }
    fn re(self) -> T {
        self.re
    }
    fn norm_sqr(self) -> T {
        Complex::norm_sqr(&self)
    }
    fn component(self, i: usize) -> T {
        match i {
            0 => self.re,
            1 => self.im,
            _ => panic!("complex component index {i} out of range"),
        }
    }
    fn from_components(c: &[T]) -> Self {
        Complex::new(c[0], c[1])
    }
    fn scale(self, r: T) -> Self {
        Complex::new(self.re * r, self.im * r)
    }
}

impl<T: Real> DivisionAlgebra for Quaternion<T> {
    type Real = T;
    const KIND: FieldKind = FieldKind::Quaternion;

    fn zero() -> Self {
        Quaternion::new(T::zero(), T::zero(), T::zero(), T::zero())
    }
    fn one() -> Self {
        Quaternion::new(T::one(), T::zero(), T::zero(), T::zero())
    }
    fn from_real(r: T) -> Self {
        Quaternion::new(r, T::zero(), T::zero(), T::zero())
    }
    fn conj(self) -> Self {
        Quaternion::conj(self)
    }
    fn re(self) -> T {
        self.w
    }
    fn norm_sqr(self) -> T {
        Quaternion::norm_sqr(self)
    }
    fn component(self, i: usize) -> T {
        match i {
            0 => self.w,
            1 => self.x,
            2 => self.y,
            3 => self.z,
            _ => panic!("quaternion component index {i} out of range"),
        }
    }
    fn from_components(c: &[T]) -> Self {
        Quaternion::new(c[0], c[1], c[2], c[3])
    }
    fn scale(self, r: T) -> Self {
        Quaternion::new(self.w * r, self.x * r, self.y * r, self.z * r)
    }
}
