use num_complex::Complex;
use num_traits::{One, Zero};

use super::{invariants, Mat2};
use crate::scalar::Real;
use crate::{Error, Result};

/// A point of the extended complex plane.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ExtComplex<F> {
    Finite(Complex<F>),
    Infinity,
}

impl<F: Real> ExtComplex<F> {
    pub fn finite(self) -> Option<Complex<F>> {
        match self {
            ExtComplex::Finite(z) => Some(z),
            ExtComplex::Infinity => None,
        }
    }

    pub fn is_infinite(&self) -> bool {
        matches!(self, ExtComplex::Infinity)
    }

    /// Homogeneous coordinates scaled so the larger one has modulus one.
    pub fn homogeneous(self) -> (Complex<F>, Complex<F>) {
        let one = Complex::one();
        match self {
            ExtComplex::Infinity => (one, Complex::zero()),
            ExtComplex::Finite(z) if z.norm() <= F::one() => (z, one),
            ExtComplex::Finite(z) => (one, z.inv()),
        }
    }

    pub fn from_ratio(num: Complex<F>, den: Complex<F>) -> Self {
        if den.is_zero() {
            ExtComplex::Infinity
        } else {
            ExtComplex::Finite(num / den)
        }
    }
}

impl<F> From<Complex<F>> for ExtComplex<F> {
    fn from(z: Complex<F>) -> Self {
        ExtComplex::Finite(z)
    }
}

/// The icosahedral quotient map `I(z) = H(z,1)^3 / (1728 f(z,1)^5)`.
///
/// Evaluated on homogeneous coordinates normalised to the unit bidisc so
/// neither large `|z|` nor the point at infinity overflows.
pub fn icos_i<F: Real>(z: ExtComplex<F>) -> ExtComplex<F> {
    let inv = invariants();
    let (z1, z2) = z.homogeneous();
    let h = inv.h_form.eval(z1, z2);
    let f = inv.f_form.eval(z1, z2);
    ExtComplex::from_ratio(h.powu(3), f.powu(5) * F::lit(1728.0))
}

/// `(x, y, z) -> (x + iy) / (1 - z)`; the north pole maps to infinity.
pub fn stereographic<F: Real>(p: [F; 3]) -> Result<ExtComplex<F>> {
    let norm = (p[0] * p[0] + p[1] * p[1] + p[2] * p[2]).sqrt();
    if (norm - F::one()).abs() > F::lit(1e-9) {
        return Err(Error::NotOnSphere { norm: norm.to_f64().unwrap_or(f64::NAN) });
    }
    let den = F::one() - p[2];
    if den <= F::epsilon() {
        return Ok(ExtComplex::Infinity);
    }
    Ok(ExtComplex::Finite(Complex::new(p[0] / den, p[1] / den)))
}

/// Mobius action `z -> (a z + b) / (c z + d)` of an exact matrix.
pub fn apply_mobius<F: Real>(m: &Mat2, z: ExtComplex<F>) -> ExtComplex<F> {
    let [[a, b], [c, d]] = m;
    let (a, b, c, d) = (a.embed::<F>(), b.embed::<F>(), c.embed::<F>(), d.embed::<F>());
    let (z1, z2) = z.homogeneous();
    ExtComplex::from_ratio(a * z1 + b * z2, c * z1 + d * z2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::icosa::generators;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn close(a: ExtComplex<f64>, b: Complex<f64>, rel: f64) -> bool {
        match a {
            ExtComplex::Finite(z) => (z - b).norm() <= rel * b.norm().max(1.0),
            ExtComplex::Infinity => false,
        }
    }

    #[test]
    fn quotient_map_examples() {
        assert!(icos_i(ExtComplex::Finite(Complex::new(0.0, 0.0))).is_infinite());
        assert!(icos_i::<f64>(ExtComplex::Infinity).is_infinite());
        let s5 = 5f64.sqrt();
        let t = ((5.0 + s5) / 2.0).sqrt() - (1.0 + s5) / 2.0;
        assert!((t - 0.2840790).abs() < 1e-7);
        assert!(close(icos_i(Complex::new(t, 0.0).into()), Complex::new(1.0, 0.0), 1e-10));
        let at_one = (-496f64).powi(3) / 278_296_128.0;
        assert!((at_one - (-0.4384680)).abs() < 1e-7);
        assert!(close(icos_i(Complex::new(1.0, 0.0).into()), Complex::new(at_one, 0.0), 1e-14));
    }

    #[test]
    fn stereographic_examples() {
        assert!(stereographic([0.0, 0.0, 1.0]).unwrap().is_infinite());
        assert_eq!(stereographic([0.0, 0.0, -1.0]).unwrap(), ExtComplex::Finite(Complex::new(0.0, 0.0)));
        assert_eq!(stereographic([1.0, 0.0, 0.0]).unwrap(), ExtComplex::Finite(Complex::new(1.0, 0.0)));
        assert!(matches!(stereographic([1.0, 1.0, 0.0]), Err(Error::NotOnSphere { .. })));
    }

    #[test]
    fn invariance_under_generators() {
        let g = generators();
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..1000 {
            let r: f64 = rng.gen_range(0.05..20.0);
            let th: f64 = rng.gen_range(0.0..std::f64::consts::TAU);
            let z = ExtComplex::Finite(Complex::from_polar(r, th));
            let base = icos_i(z).finite().unwrap();
            for m in [&g.s_matrix, &g.t_matrix] {
                let moved = icos_i(apply_mobius(m, z)).finite().unwrap();
                assert!((moved - base).norm() <= 1e-8 * base.norm().max(1.0), "{z:?}");
            }
        }
    }

    #[test]
    fn works_in_single_precision() {
        let v = icos_i(ExtComplex::Finite(Complex::new(1.0f32, 0.0))).finite().unwrap();
        assert!((v.re - (-0.438468)).abs() < 1e-4);
    }
}
