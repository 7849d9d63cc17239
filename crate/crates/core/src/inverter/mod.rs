//! Inverting the icosahedral quotient map `I(z) = Z`.
//!
//! Away from the unit disc the inverse is a ratio of Gauss hypergeometric
//! series in `1/Z`; near it the degree-60 equation
//! `H(z,1)^3 - 1728 Z f(z,1)^5 = 0` is solved directly.

mod degree60;

use num_complex::Complex;
use num_traits::{Signed, Zero};

use crate::icosa::{icos_i, ExtComplex};
use crate::scalar::{rat_to_real, tol_for, Real};
use crate::{Error, Rat, Result};

pub use degree60::{icos_equation_roots, icos_equation_w_poly};

/// Radius outside which the series inverse is used.
pub const SERIES_RADIUS: f64 = 1.25;
/// Largest series argument accepted by [`gauss_2f1`].
pub const MAX_SERIES_ARG: f64 = 0.9;
const MAX_TERMS: usize = 100_000;

/// Parameters of the hypergeometric equation whose solution ratio inverts
/// `I`, with the triangle exponents `(2, 3, 5)`.
#[derive(Debug, Clone, PartialEq)]
pub struct HypergeomParams {
    pub a: Rat,
    pub b: Rat,
    pub c: Rat,
    pub nu: [i64; 3],
}

fn ratio(n: i64, d: i64) -> Rat {
    Rat::new(n.into(), d.into())
}

impl HypergeomParams {
    pub fn icosahedral() -> Self {
        let nu = [2, 3, 5];
        let inv = |k: i64| ratio(1, k);
        let one = ratio(1, 1);
        let half = ratio(1, 2);
        let a = &half * (&one - inv(nu[0]) - inv(nu[1]) + inv(nu[2]));
        let b = &half * (&one - inv(nu[0]) - inv(nu[1]) - inv(nu[2]));
        let c = &one - inv(nu[1]);
        HypergeomParams { a, b, c, nu }
    }

    /// Parameters of the two series at infinity:
    /// `(a, 1 + a - c; 1 + a - b)` and `(b, 1 + b - c; 1 + b - a)`.
    pub fn series_at_infinity(&self) -> ([Rat; 3], [Rat; 3]) {
        let one = ratio(1, 1);
        let (a, b, c) = (&self.a, &self.b, &self.c);
        (
            [a.clone(), &one + a - c, &one + a - b],
            [b.clone(), &one + b - c, &one + b - a],
        )
    }
}

/// `2F1(a, b; c; w)` by direct summation, for `|w| <= 0.9`.
///
/// Stops once three consecutive terms are below `tol * |sum|`.
pub fn gauss_2f1<F: Real>(a: &Rat, b: &Rat, c: &Rat, w: Complex<F>, tol: F) -> Result<Complex<F>> {
    if c.is_integer() && !c.is_positive() {
        return Err(Error::InvalidC(format!("c = {c} is a non-positive integer")));
    }
    if w.norm() > F::lit(MAX_SERIES_ARG) {
        return Err(Error::OutOfSeriesDomain(w.norm().to_f64().unwrap_or(f64::NAN)));
    }
    let (a, b, c) = (rat_to_real::<F>(a), rat_to_real::<F>(b), rat_to_real::<F>(c));
    let mut term = Complex::new(F::one(), F::zero());
    let mut sum = term;
    let mut small = 0;
    for n in 0..MAX_TERMS {
        let nf = F::from_usize(n).unwrap();
        term = term * w * ((a + nf) * (b + nf) / ((c + nf) * (nf + F::one())));
        sum = sum + term;
        if term.norm() < tol * sum.norm() || term.is_zero() {
            small += 1;
            if small == 3 {
                return Ok(sum);
            }
        } else {
            small = 0;
        }
    }
    Err(Error::NoConvergence(format!("2F1 series exceeded {MAX_TERMS} terms")))
}

fn series_tol<F: Real>() -> F {
    F::epsilon() * F::lit(0.5)
}

/// The branch of `I^{-1}` given by the hypergeometric ratio, for
/// `|Z| > 1.25`. The fifth root is the principal one.
pub fn s_inverse<F: Real>(z: Complex<F>) -> Result<Complex<F>> {
    if !(z.norm() > F::lit(SERIES_RADIUS)) {
        return Err(Error::OutOfSeriesDomain(z.norm().to_f64().unwrap_or(f64::NAN)));
    }
    let params = HypergeomParams::icosahedral();
    let ([a1, b1, c1], [a2, b2, c2]) = params.series_at_infinity();
    let w = z.inv();
    let tol = series_tol::<F>();
    let num = gauss_2f1(&a1, &b1, &c1, w, tol)?;
    let den = gauss_2f1(&a2, &b2, &c2, w, tol)?;
    let root = (z * F::lit(1728.0)).ln() / F::lit(5.0);
    Ok(num / (root.exp() * den))
}

/// Which evaluation produced an inverse.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InversionPath {
    Series,
    Degree60,
}

impl InversionPath {
    pub fn name(self) -> &'static str {
        match self {
            InversionPath::Series => "series",
            InversionPath::Degree60 => "degree60",
        }
    }
}

/// Some `z` with `I(z) = Z`, re-verified to `1e-6 max(1, |Z|)`.
pub fn invert_icosahedral<F: Real>(z: Complex<F>) -> Result<Complex<F>> {
    invert_icosahedral_traced(z).map(|(s, _)| s)
}

/// [`invert_icosahedral`] together with the path taken: the series when
/// `|Z| > 1.25` and its result verifies, otherwise the root of the degree-60
/// equation with the smallest defect.
pub fn invert_icosahedral_traced<F: Real>(z: Complex<F>) -> Result<(Complex<F>, InversionPath)> {
    let tol = tol_for::<F>(1e-6);
    let ok = |s: Complex<F>| inversion_defect(s, z) <= tol;
    if z.norm() > F::lit(SERIES_RADIUS) {
        if let Ok(s) = s_inverse(z) {
            if ok(s) {
                return Ok((s, InversionPath::Series));
            }
        }
    }
    let roots = icos_equation_roots(z)?;
    roots
        .into_iter()
        .map(|s| (inversion_defect(s, z), s))
        .filter(|(d, _)| *d <= tol)
        .min_by(|x, y| x.0.partial_cmp(&y.0).unwrap_or(std::cmp::Ordering::Equal))
        .map(|(_, s)| (s, InversionPath::Degree60))
        .ok_or_else(|| Error::NoConvergence(format!("no verified preimage of Z = {z}")))
}

/// `|I(s) - Z| / max(1, |Z|)`; infinite when `s` is a vertex.
pub fn inversion_defect<F: Real>(s: Complex<F>, z: Complex<F>) -> F {
    match icos_i(ExtComplex::Finite(s)) {
        ExtComplex::Finite(i) => (i - z).norm() / z.norm().max(F::one()),
        ExtComplex::Infinity => F::infinity(),
    }
}

/// Right-hand side of the Schwarzian equation satisfied by every local
/// inverse of `I`.
pub fn schwarzian_rhs<F: Real>(z: Complex<F>) -> Result<Complex<F>> {
    let one = Complex::new(F::one(), F::zero());
    if z.is_zero() || (z - one).is_zero() {
        return Err(Error::PoleAtSingularPoint(format!("Z = {z}")));
    }
    let [k1, k2, k3] = schwarzian_coefficients();
    let c = |r: &Rat| rat_to_real::<F>(r);
    let two = F::lit(2.0);
    let omz = one - z;
    Ok(omz.powu(2).inv() * (c(&k1) / two)
        + z.powu(2).inv() * (c(&k2) / two)
        + (z * omz).inv() * (c(&k3) / two))
}

/// `1 - 1/nu1^2`, `1 - 1/nu2^2` and `1 - 1/nu1^2 - 1/nu2^2 + 1/nu3^2`.
pub fn schwarzian_coefficients() -> [Rat; 3] {
    let [n1, n2, n3] = HypergeomParams::icosahedral().nu;
    let one = ratio(1, 1);
    let inv2 = |k: i64| ratio(1, k * k);
    [
        &one - inv2(n1),
        &one - inv2(n2),
        &one - inv2(n1) - inv2(n2) + inv2(n3),
    ]
}

/// `beta_0 = ((1 - 1/nu1^2) + (1 - 1/nu2^2) - (1 - 1/nu3^2)) / 2`.
pub fn beta0() -> Rat {
    let [n1, n2, n3] = HypergeomParams::icosahedral().nu;
    let one = ratio(1, 1);
    let inv2 = |k: i64| ratio(1, k * k);
    ((&one - inv2(n1)) + (&one - inv2(n2)) - (&one - inv2(n3))) / ratio(2, 1)
}

/// Schwarzian derivative `s'''/s' - 3/2 (s''/s')^2` by five-point
/// differences with step `h`.
pub fn finite_difference_schwarzian<F: Real>(
    s: impl Fn(Complex<F>) -> Result<Complex<F>>,
    z: Complex<F>,
    h: F,
) -> Result<Complex<F>> {
    let at = |k: i32| s(z + Complex::new(h * F::from_i32(k).unwrap(), F::zero()));
    let (m2, m1, p0, p1, p2) = (at(-2)?, at(-1)?, at(0)?, at(1)?, at(2)?);
    let twelve = F::lit(12.0);
    let d1 = (m2 - m1 * F::lit(8.0) + p1 * F::lit(8.0) - p2) / (twelve * h);
    let d2 = (-m2 + m1 * F::lit(16.0) - p0 * F::lit(30.0) + p1 * F::lit(16.0) - p2) / (twelve * h * h);
    let d3 = (-m2 + m1 * F::lit(2.0) - p1 * F::lit(2.0) + p2) / (F::lit(2.0) * h * h * h);
    let r = d2 / d1;
    Ok(d3 / d1 - r * r * F::lit(1.5))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactfield::eps_embed;

    type C = Complex<f64>;

    fn re(x: f64) -> C {
        C::new(x, 0.0)
    }

    #[test]
    fn parameter_identities() {
        let p = HypergeomParams::icosahedral();
        assert_eq!((p.a.clone(), p.b.clone(), p.c.clone()), (ratio(11, 60), ratio(-1, 60), ratio(2, 3)));
        assert_eq!(&p.a - &p.b, ratio(1, 5));
        assert_eq!(&p.c - &p.a - &p.b, ratio(1, 2));
        assert_eq!(ratio(1, 1) - &p.c, ratio(1, 3));
        let (s1, s2) = p.series_at_infinity();
        assert_eq!(s1, [ratio(11, 60), ratio(31, 60), ratio(6, 5)]);
        assert_eq!(s2, [ratio(-1, 60), ratio(19, 60), ratio(4, 5)]);
    }

    #[test]
    fn gauss_examples() {
        let one = ratio(1, 1);
        let v = gauss_2f1(&ratio(3, 7), &one, &ratio(5, 2), re(0.0), 1e-16).unwrap();
        assert_eq!(v, re(1.0));
        let v = gauss_2f1(&one, &one, &ratio(2, 1), re(0.5), 1e-16).unwrap();
        assert!((v.re - 2.0 * 2f64.ln()).abs() < 1e-14);
        let v = gauss_2f1(&ratio(11, 60), &ratio(31, 60), &ratio(6, 5), re(0.1), 1e-16).unwrap();
        assert!((v.re - 1.00822).abs() < 1e-4);
        assert!((v.re - 1.0082352).abs() < 1e-7);
        assert!(matches!(
            gauss_2f1(&one, &one, &ratio(-2, 1), re(0.5), 1e-16),
            Err(Error::InvalidC(_))
        ));
        assert!(matches!(
            gauss_2f1(&one, &one, &one, re(0.95), 1e-16),
            Err(Error::OutOfSeriesDomain(_))
        ));
    }

    #[test]
    fn series_inverse_round_trips() {
        for z in [re(2.0), C::new(10.0, 10.0), re(100.0), C::new(-1.3, 0.2)] {
            let s = s_inverse(z).unwrap();
            assert!(inversion_defect(s, z) < 1e-8 * z.norm() / z.norm().max(1.0) + 1e-12, "{z}");
        }
        let s = s_inverse(re(2.0)).unwrap();
        assert!((s - re(0.2068751656847735)).norm() < 1e-12);
        let s = s_inverse(C::new(10.0, 10.0)).unwrap();
        assert!((s - C::new(0.1313874246, -0.0214079174)).norm() < 1e-9);
        let big = re(1e12);
        let s = s_inverse(big).unwrap();
        assert!((s * (big * 1728.0).powf(0.2) - re(1.0)).norm() < 1e-6);
        assert!(matches!(s_inverse(re(1.0)), Err(Error::OutOfSeriesDomain(_))));
    }

    #[test]
    fn grid_round_trip() {
        for r in [2.0, 5.0, 10.0] {
            for k in 0..6 {
                let z = C::from_polar(r, k as f64 * std::f64::consts::FRAC_PI_3);
                let s = invert_icosahedral(z).unwrap();
                let i = icos_i(ExtComplex::Finite(s)).finite().unwrap();
                assert!((i - z).norm() / z.norm() <= 1e-7, "{z}");
                for j in 1..5 {
                    assert!(inversion_defect(s * eps_embed::<f64>(j), z) <= 1e-7);
                }
            }
        }
    }

    #[test]
    fn fallback_inside_the_disc() {
        let z = C::new(0.5, 0.1);
        assert!(inversion_defect(invert_icosahedral(z).unwrap(), z) < 1e-6);
        let s = invert_icosahedral(re(1.0)).unwrap();
        assert!(inversion_defect(s, re(1.0)) < 1e-6);
        assert!(inversion_defect(invert_icosahedral(re(100.0)).unwrap(), re(100.0)) < 1e-8);
    }

    #[test]
    fn schwarzian_values() {
        assert_eq!(beta0(), ratio(611, 1800));
        let [k1, k2, k3] = schwarzian_coefficients();
        assert_eq!((k1, k2.clone(), k3), (ratio(3, 4), ratio(8, 9), ratio(611, 900)));
        let z = re(2.0);
        let direct = 0.75 / (2.0 * 1.0) + (8.0 / 9.0) / (2.0 * 4.0) + (611.0 / 900.0) / (2.0 * 2.0 * -1.0);
        assert!((schwarzian_rhs(z).unwrap() - re(direct)).norm() < 1e-15);
        assert!(matches!(schwarzian_rhs(re(1.0)), Err(Error::PoleAtSingularPoint(_))));
        assert!(matches!(schwarzian_rhs(re(0.0)), Err(Error::PoleAtSingularPoint(_))));
    }

    #[test]
    fn series_inverse_solves_the_schwarzian() {
        for z in [re(3.0), re(5.0), C::new(2.0, 2.0)] {
            let fd = finite_difference_schwarzian(s_inverse::<f64>, z, 1e-3 * z.norm()).unwrap();
            let rhs = schwarzian_rhs(z).unwrap();
            assert!((fd - rhs).norm() <= 1e-4 * rhs.norm(), "{z}: {fd} vs {rhs}");
        }
    }

    #[test]
    fn f32_inverse() {
        let z = Complex::<f32>::new(3.0, 1.0);
        let s = s_inverse(z).unwrap();
        assert!(inversion_defect(s, z) < 1e-4);
    }
}
