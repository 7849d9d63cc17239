use num_complex::Complex;
use num_traits::{ToPrimitive, Zero};

use crate::polyalg::MPoly;
use crate::scalar::Real;
use crate::{Error, Result};

/// A binary form `sum_k c_k z1^k z2^(d-k)` with real coefficients, compiled
/// from an exact [`MPoly`] for fast floating evaluation.
#[derive(Debug, Clone, PartialEq)]
pub struct BinaryForm {
    degree: u32,
    // dense, indexed by the exponent of z1
    coeffs: Vec<f64>,
}

impl BinaryForm {
    /// Compiles a homogeneous two-variable polynomial with rational
    /// coefficients.
    pub fn from_mpoly(p: &MPoly) -> Result<Self> {
        if p.vars().len() != 2 || !p.is_homogeneous() || !p.is_rational() {
            return Err(Error::InvalidInput(format!("not a rational binary form: {p}")));
        }
        let degree = p.total_degree().unwrap_or(0);
        let mut coeffs = vec![0.0; degree as usize + 1];
        for (m, c) in p.terms() {
            let r = c.as_rational().expect("rational coefficient");
            coeffs[m[0] as usize] = r.to_f64().unwrap_or(f64::NAN);
        }
        Ok(BinaryForm { degree, coeffs })
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    /// Coefficient of `z1^k z2^(d-k)`.
    pub fn coeff(&self, k: usize) -> f64 {
        self.coeffs.get(k).copied().unwrap_or(0.0)
    }

    /// Sum of absolute coefficients, the natural magnitude of the form on
    /// points normalised to `max(|z1|, |z2|) = 1`.
    pub fn abs_scale(&self) -> f64 {
        self.coeffs.iter().map(|c| c.abs()).sum()
    }

    /// Evaluates at `(z1, z2)`, running Horner in whichever ratio has modulus
    /// at most one.
    pub fn eval<F: Real>(&self, z1: Complex<F>, z2: Complex<F>) -> Complex<F> {
        if z1.is_zero() && z2.is_zero() {
            return Complex::zero();
        }
        if z2.norm() >= z1.norm() {
            let t = z1 / z2;
            let mut acc: Complex<F> = Complex::zero();
            for c in self.coeffs.iter().rev() {
                acc = acc * t + F::lit(*c);
            }
            acc * z2.powu(self.degree)
        } else {
            let t = z2 / z1;
            let mut acc: Complex<F> = Complex::zero();
            for c in self.coeffs.iter() {
                acc = acc * t + F::lit(*c);
            }
            acc * z1.powu(self.degree)
        }
    }

    /// Evaluates the dehomogenisation at `z`, i.e. the form at `(z, 1)`.
    pub fn eval_affine<F: Real>(&self, z: Complex<F>) -> Complex<F> {
        self.eval(z, Complex::new(F::one(), F::zero()))
    }

    /// Coefficients of the dehomogenised polynomial in ascending powers of `z`.
    pub fn affine_coeffs(&self) -> &[f64] {
        &self.coeffs
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::icosa::invariants;

    #[test]
    fn agrees_with_exact_evaluation() {
        let inv = invariants();
        for z in [Complex::new(0.3, 0.1), Complex::new(-2.0, 5.0), Complex::new(1.0, 0.0)] {
            let one = Complex::new(1.0f64, 0.0);
            let a = inv.h_form.eval(z, one);
            let b = inv.h.evaluate(&[z, one]).unwrap();
            assert!((a - b).norm() <= 1e-12 * b.norm().max(1.0));
        }
        assert_eq!(inv.f_form.eval_affine(Complex::new(1.0f64, 0.0)), Complex::new(11.0, 0.0));
        assert_eq!(inv.t_form.abs_scale(), 2.0 + 2.0 * 522.0 + 2.0 * 10005.0);
    }
}
