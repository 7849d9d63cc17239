use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

use num_complex::Complex;
use num_traits::{One, Zero};

use super::FieldError;
use crate::scalar::{rat_to_real, Real, Scalar};
use crate::Rat;

/// An element `c0 + c1 e + c2 e^2 + c3 e^3` of `Q(e)`, `e^5 = 1`, `e != 1`.
///
/// Coordinates are taken in the power basis `{1, e, e^2, e^3}` with
/// `e^4 = -1 - e - e^2 - e^3`, so equality is coordinate equality.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct CycQ {
    c: [Rat; 4],
}

impl CycQ {
    pub fn new(c0: Rat, c1: Rat, c2: Rat, c3: Rat) -> Self {
        CycQ { c: [c0, c1, c2, c3] }
    }

    pub fn from_rat(r: Rat) -> Self {
        CycQ { c: [r, Rat::zero(), Rat::zero(), Rat::zero()] }
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rat(Rat::from_integer(n.into()))
    }

    pub fn from_ratio(num: i64, den: i64) -> Self {
        Self::from_rat(Rat::new(num.into(), den.into()))
    }

    /// `e^k` for any integer `k`.
    pub fn eps_pow(k: i64) -> Self {
        let mut out = CycQ::zero();
        out.add_basis_power(k.rem_euclid(5) as usize, &Rat::one());
        out
    }

    /// The primitive fifth root of unity `e`.
    pub fn eps() -> Self {
        Self::eps_pow(1)
    }

    /// `sqrt(5) = 1 + 2(e + e^4)`.
    pub fn sqrt5() -> Self {
        CycQ::one() + (Self::eps_pow(1) + Self::eps_pow(4)).scaled(2, 1)
    }

    pub fn coords(&self) -> &[Rat; 4] {
        &self.c
    }

    /// `Some(r)` when the element lies in `Q`.
    pub fn as_rational(&self) -> Option<&Rat> {
        if self.is_rational() {
            Some(&self.c[0])
        } else {
            None
        }
    }

    #[inline]
    pub fn is_rational(&self) -> bool {
        self.c[1].is_zero() && self.c[2].is_zero() && self.c[3].is_zero()
    }

    // Adds `x * e^k`, `0 <= k <= 4`.
    fn add_basis_power(&mut self, k: usize, x: &Rat) {
        if k < 4 {
            self.c[k] += x;
        } else {
            for ci in self.c.iter_mut() {
                *ci -= x;
            }
        }
    }

    /// Image under the automorphism `e -> e^k`, `k` coprime to 5.
    pub fn galois(&self, k: i64) -> Self {
        assert!(k.rem_euclid(5) != 0, "e -> e^0 is not an automorphism");
        let mut out = CycQ::zero();
        for (j, cj) in self.c.iter().enumerate() {
            if !cj.is_zero() {
                out.add_basis_power((j as i64 * k).rem_euclid(5) as usize, cj);
            }
        }
        out
    }

    /// Complex conjugate (`e -> e^4`).
    pub fn conj(&self) -> Self {
        self.galois(4)
    }

    /// Field norm down to `Q`: the product of the four conjugates.
    pub fn norm(&self) -> Rat {
        let n = self * &self.galois(2) * self.galois(3) * self.galois(4);
        debug_assert!(n.is_rational());
        n.c[0].clone()
    }

    pub fn checked_inv(&self) -> Result<Self, FieldError> {
        if self.is_zero() {
            return Err(FieldError::DivisionByZero);
        }
        if let Some(r) = self.as_rational() {
            return Ok(CycQ::from_rat(r.recip()));
        }
        let co = self.galois(2) * self.galois(3) * self.galois(4);
        let n = (self * &co).c[0].clone();
        Ok(co.scale_rat(&n.recip()))
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self, FieldError> {
        Ok(self * &rhs.checked_inv()?)
    }

    pub fn scale_rat(&self, r: &Rat) -> Self {
        if r.is_zero() {
            return CycQ::zero();
        }
        CycQ { c: [&self.c[0] * r, &self.c[1] * r, &self.c[2] * r, &self.c[3] * r] }
    }

    pub fn scale_int(&self, n: i64) -> Self {
        self.scale_rat(&Rat::from_integer(n.into()))
    }

    /// Floating-point image under `e -> exp(2 pi i / 5)`.
    pub fn embed<F: Real>(&self) -> Complex<F> {
        let mut acc = Complex::new(rat_to_real::<F>(&self.c[0]), F::zero());
        for k in 1..4 {
            if !self.c[k].is_zero() {
                acc = acc + eps_embed::<F>(k as i64) * rat_to_real::<F>(&self.c[k]);
            }
        }
        acc
    }

    /// Largest absolute numerator or denominator among the coordinates.
    pub fn height(&self) -> num_bigint::BigInt {
        use num_traits::Signed;
        self.c
            .iter()
            .flat_map(|r| [r.numer().abs(), r.denom().abs()])
            .max()
            .unwrap_or_default()
    }

    pub fn pow(&self, n: u32) -> Self {
        if n == 0 {
            CycQ::one()
        } else {
            self.pow_pos(n)
        }
    }
}

/// Floating-point `e^k`.
pub fn eps_embed<F: Real>(k: i64) -> Complex<F> {
    let theta = F::TAU() * F::from_i64(k.rem_euclid(5)).unwrap() / F::lit(5.0);
    Complex::new(theta.cos(), theta.sin())
}

/// Free function form of [`CycQ::embed`].
pub fn embed_complex(a: &CycQ) -> Complex<f64> {
    a.embed()
}

impl Zero for CycQ {
    fn zero() -> Self {
        CycQ { c: [Rat::zero(), Rat::zero(), Rat::zero(), Rat::zero()] }
    }
    fn is_zero(&self) -> bool {
        self.c.iter().all(Zero::is_zero)
    }
}

impl One for CycQ {
    fn one() -> Self {
        CycQ::from_int(1)
    }
}

impl From<Rat> for CycQ {
    fn from(r: Rat) -> Self {
        CycQ::from_rat(r)
    }
}

impl From<i64> for CycQ {
    fn from(n: i64) -> Self {
        CycQ::from_int(n)
    }
}

impl<'a> Add<&'a CycQ> for &'a CycQ {
    type Output = CycQ;
    fn add(self, rhs: &CycQ) -> CycQ {
        CycQ {
            c: [
                &self.c[0] + &rhs.c[0],
                &self.c[1] + &rhs.c[1],
                &self.c[2] + &rhs.c[2],
                &self.c[3] + &rhs.c[3],
            ],
        }
    }
}

impl<'a> Sub<&'a CycQ> for &'a CycQ {
    type Output = CycQ;
    fn sub(self, rhs: &CycQ) -> CycQ {
        CycQ {
            c: [
                &self.c[0] - &rhs.c[0],
                &self.c[1] - &rhs.c[1],
                &self.c[2] - &rhs.c[2],
                &self.c[3] - &rhs.c[3],
            ],
        }
    }
}

impl<'a> Mul<&'a CycQ> for &'a CycQ {
    type Output = CycQ;
    fn mul(self, rhs: &CycQ) -> CycQ {
        if rhs.is_rational() {
            return self.scale_rat(&rhs.c[0]);
        }
        if self.is_rational() {
            return rhs.scale_rat(&self.c[0]);
        }
        // Schoolbook product in degree <= 6, then e^5 = 1, e^6 = e, e^4 reduced.
        let mut d: [Rat; 7] = Default::default();
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.c.iter().enumerate() {
                if !b.is_zero() {
                    d[i + j] += a * b;
                }
            }
        }
        let [d0, d1, d2, d3, d4, d5, d6] = d;
        let (d0, d1) = (d0 + d5, d1 + d6);
        CycQ { c: [d0 - &d4, d1 - &d4, d2 - &d4, d3 - d4] }
    }
}

impl Neg for &CycQ {
    type Output = CycQ;
    fn neg(self) -> CycQ {
        CycQ { c: [-&self.c[0], -&self.c[1], -&self.c[2], -&self.c[3]] }
    }
}

impl Neg for CycQ {
    type Output = CycQ;
    fn neg(self) -> CycQ {
        let [a, b, c, d] = self.c;
        CycQ { c: [-a, -b, -c, -d] }
    }
}

macro_rules! forward_binop {
    ($tr:ident, $m:ident) => {
        impl $tr<CycQ> for CycQ {
            type Output = CycQ;
            fn $m(self, rhs: CycQ) -> CycQ {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a CycQ> for CycQ {
            type Output = CycQ;
            fn $m(self, rhs: &CycQ) -> CycQ {
                (&self).$m(rhs)
            }
        }
        impl<'a> $tr<CycQ> for &'a CycQ {
            type Output = CycQ;
            fn $m(self, rhs: CycQ) -> CycQ {
                self.$m(&rhs)
            }
        }
    };
}
forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);

impl AddAssign<&CycQ> for CycQ {
    fn add_assign(&mut self, rhs: &CycQ) {
        for (a, b) in self.c.iter_mut().zip(rhs.c.iter()) {
            *a += b;
        }
    }
}

impl SubAssign<&CycQ> for CycQ {
    fn sub_assign(&mut self, rhs: &CycQ) {
        for (a, b) in self.c.iter_mut().zip(rhs.c.iter()) {
            *a -= b;
        }
    }
}

impl MulAssign<&CycQ> for CycQ {
    fn mul_assign(&mut self, rhs: &CycQ) {
        *self = &*self * rhs;
    }
}

/// Panics on division by zero; use [`CycQ::checked_div`] to recover.
impl Div for CycQ {
    type Output = CycQ;
    fn div(self, rhs: CycQ) -> CycQ {
        self.checked_div(&rhs).expect("CycQ division by zero")
    }
}

impl Scalar for CycQ {
    fn scaled(&self, num: i64, den: i64) -> Self {
        self.scale_rat(&Rat::new(num.into(), den.into()))
    }
}

impl fmt::Debug for CycQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for CycQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, ck) in self.c.iter().enumerate() {
            if ck.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "{ck}")?,
                1 => write!(f, "({ck})e")?,
                _ => write!(f, "({ck})e^{k}")?,
            }
        }
        Ok(())
    }
}
