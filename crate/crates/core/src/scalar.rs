//! Scalar abstractions shared by the numeric and exact layers.

use std::fmt::{Debug, Display};
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_complex::Complex;
use num_traits::{Float, FloatConst, FromPrimitive, ToPrimitive};

use crate::Rat;

/// Floating-point scalar used by every numerical routine.
pub trait Real:
    Float + FloatConst + FromPrimitive + ToPrimitive + Debug + Display + Send + Sync + 'static
{
    /// Converts an `f64` literal into `Self`.
    #[inline]
    fn lit(x: f64) -> Self {
        Self::from_f64(x).expect("literal representable in target float")
    }
}

impl<T> Real for T where
    T: Float + FloatConst + FromPrimitive + ToPrimitive + Debug + Display + Send + Sync + 'static
{
}

/// `base`, widened to `1000 eps` for types too coarse to reach it.
#[inline]
pub fn tol_for<F: Real>(base: f64) -> F {
    F::lit(base).max(F::epsilon() * F::lit(1e3))
}

/// Shorthand for a complex literal.
#[inline]
pub fn cplx<F: Real>(re: f64, im: f64) -> Complex<F> {
    Complex::new(F::lit(re), F::lit(im))
}

/// Commutative ring elements on which the closed-form resolvent formulas
/// can be evaluated.
///
/// The formulas are weighted-homogeneous with no constant term, so the only
/// constants ever needed are rational multiples of existing elements.
pub trait Scalar:
    Clone + Add<Output = Self> + Sub<Output = Self> + Mul<Output = Self> + Neg<Output = Self>
{
    /// `self * num / den`.
    fn scaled(&self, num: i64, den: i64) -> Self;

    /// `self^n` for `n >= 1`.
    fn pow_pos(&self, n: u32) -> Self {
        assert!(n >= 1, "pow_pos needs a positive exponent");
        let mut base = self.clone();
        let mut acc: Option<Self> = None;
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                acc = Some(match acc {
                    Some(a) => a * base.clone(),
                    None => base.clone(),
                });
            }
            n >>= 1;
            if n > 0 {
                base = base.clone() * base;
            }
        }
        acc.expect("n >= 1")
    }
}

/// A [`Scalar`] that also divides, used where the icosahedral invariant
/// itself (a quotient) is formed.
pub trait FieldScalar: Scalar + Div<Output = Self> {}
impl<T: Scalar + Div<Output = T>> FieldScalar for T {}

macro_rules! float_scalar {
    ($t:ty) => {
        impl Scalar for $t {
            #[inline]
            fn scaled(&self, num: i64, den: i64) -> Self {
                *self * (num as $t) / (den as $t)
            }
        }
    };
}
float_scalar!(f32);
float_scalar!(f64);

impl<F: Real> Scalar for Complex<F> {
    #[inline]
    fn scaled(&self, num: i64, den: i64) -> Self {
        let k = F::from_i64(num).unwrap() / F::from_i64(den).unwrap();
        *self * k
    }
}

impl Scalar for Rat {
    fn scaled(&self, num: i64, den: i64) -> Self {
        self * Rat::new(num.into(), den.into())
    }
}

/// Lossy conversion of an exact rational into a float.
pub fn rat_to_real<F: Real>(r: &Rat) -> F {
    match r.to_f64() {
        Some(v) => F::lit(v),
        None => F::nan(),
    }
}
