//! The cube forms `B` (vertices) and `Dcube` (face centres), which divide
//! `H` and `T`, and the degree-zero root factors built from them.

use std::sync::OnceLock;

use num_complex::Complex;

use crate::certify::Certificate;
use crate::icosa::{binary_ring, invariants, BinaryForm};
use crate::polyalg::MPoly;
use crate::scalar::Real;
use crate::{Error, Result};

#[derive(Debug, Clone)]
pub struct CubePolys {
    pub b: MPoly,
    pub dcube: MPoly,
    pub c: MPoly,
    /// `H / B`, degree 12.
    pub h_over_b: MPoly,
    /// `T / Dcube`, degree 24.
    pub t_over_d: MPoly,
    pub hq_form: BinaryForm,
    pub dcube_form: BinaryForm,
}

/// Builds `B`, `Dcube`, `C = B Dcube` and the exact quotients of `H` and `T`.
pub fn cube_polys() -> Result<CubePolys> {
    let ring = binary_ring();
    let b = ring.from_int_terms(&[
        (-1, &[0, 8]),
        (-1, &[1, 7]),
        (-7, &[2, 6]),
        (7, &[3, 5]),
        (-7, &[5, 3]),
        (-7, &[6, 2]),
        (1, &[7, 1]),
        (-1, &[8, 0]),
    ]);
    let dcube = ring.from_int_terms(&[
        (-1, &[6, 0]),
        (-2, &[5, 1]),
        (5, &[4, 2]),
        (5, &[2, 4]),
        (2, &[1, 5]),
        (-1, &[0, 6]),
    ]);
    let inv = invariants();
    let mismatch = |what: &str| Error::InternalMismatch(format!("{what} is not an exact factor"));
    let h_over_b = inv.h.exact_divide(&b).map_err(|_| mismatch("B"))?;
    let t_over_d = inv.t.exact_divide(&dcube).map_err(|_| mismatch("Dcube"))?;
    let c = &b * &dcube;
    Ok(CubePolys {
        hq_form: BinaryForm::from_mpoly(&h_over_b)?,
        dcube_form: BinaryForm::from_mpoly(&dcube)?,
        b,
        dcube,
        c,
        h_over_b,
        t_over_d,
    })
}

pub fn cube() -> &'static CubePolys {
    static CUBE: OnceLock<CubePolys> = OnceLock::new();
    CUBE.get_or_init(|| cube_polys().expect("cube forms divide H and T"))
}

/// Values at a homogeneous point of the two degree-zero factors
/// `B f / H = f / (H/B)` and `B Dcube T / (H f^2) = Dcube T / ((H/B) f^2)`,
/// or `None` when `H/B` or `f` is below `tol` relative to its size.
pub fn root_factors<F: Real>(z1: Complex<F>, z2: Complex<F>, tol: F) -> Option<(Complex<F>, Complex<F>)> {
    let inv = invariants();
    let cp = cube();
    let size = z1.norm().max(z2.norm());
    let rel = |form: &BinaryForm, v: Complex<F>| {
        v.norm() / (F::lit(form.abs_scale()) * size.powi(form.degree() as i32))
    };
    let f = inv.f_form.eval(z1, z2);
    let hq = cp.hq_form.eval(z1, z2);
    if !(rel(&inv.f_form, f) > tol) || !(rel(&cp.hq_form, hq) > tol) {
        return None;
    }
    let t = inv.t_form.eval(z1, z2);
    let d = cp.dcube_form.eval(z1, z2);
    Some((f / hq, d * t / (hq * f * f)))
}

pub fn cube_certificates() -> Vec<Certificate> {
    let cp = cube();
    let inv = invariants();
    vec![
        Certificate::timed("B divides H (degree-12 quotient)", || {
            let ok = &cp.b * &cp.h_over_b == inv.h && cp.h_over_b.total_degree() == Some(12);
            (ok, "H = B * (H/B)".into())
        }),
        Certificate::timed("Dcube divides T (degree-24 quotient)", || {
            let ok = &cp.dcube * &cp.t_over_d == inv.t && cp.t_over_d.total_degree() == Some(24);
            (ok, "T = Dcube * (T/Dcube)".into())
        }),
        Certificate::timed("C = B Dcube (degree 14)", || {
            (cp.c.total_degree() == Some(14) && cp.c == &cp.b * &cp.dcube, "product".into())
        }),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::icosa::vertices;

    #[test]
    fn divisibility() {
        for c in cube_certificates() {
            assert!(c.passed, "{}", c.name);
        }
    }

    #[test]
    fn b_vanishes_on_eight_vertices() {
        // cube vertices are icosahedron face centres, so B | H but no vertex of
        // the icosahedron is a root of B
        let cp = cube();
        let b = BinaryForm::from_mpoly(&cp.b).unwrap();
        for v in vertices().into_iter().flatten() {
            let z = v.embed::<f64>();
            assert!(b.eval_affine(z).norm() > 1e-6);
        }
    }

    #[test]
    fn degree_zero() {
        let (z1, z2) = (Complex::new(0.3, -0.4), Complex::new(1.1, 0.2));
        let c = Complex::new(-2.0, 0.7);
        let (p, q) = root_factors(z1, z2, 1e-9).unwrap();
        let (ps, qs) = root_factors(z1 * c, z2 * c, 1e-9).unwrap();
        assert!((p - ps).norm() < 1e-12 * p.norm());
        assert!((q - qs).norm() < 1e-12 * q.norm());
    }
}
