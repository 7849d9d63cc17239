//! The icosahedral invariants `Z1, Z2` of a canonical quintic, from the
//! closed-form symmetric functions of the Segre forms.
//!
//! With `nabla` the distinguished square root of the discriminant,
//! `H1^3 f2^5 = p + nabla q` and `Z1 = (p + nabla q) / (1728 (f1 f2)^5)`;
//! `Z2` takes the other sign. The pairing of sign and subscript is fixed by
//! [`segre::verify_sign_coherence`]: with `q = +q_plus` and the `nabla` for
//! which `M1 f2 = m - alpha nabla / 2`, the numerator is `H1^3 f2^5`.

pub mod formulas;
pub mod segre;

use num_complex::Complex;

use crate::quintic::{discriminant, CanonicalQuintic};
use crate::scalar::{FieldScalar, Real};
use crate::{Error, Result};

pub use formulas::{p_from_products, q_plus, resolvent_products};
pub use segre::{verify_equivariance, verify_product_identities, verify_sign_coherence, SegreData};

/// Relative threshold for `f1 f2 = 0` and `D = 0`.
pub const DEGENERACY: f64 = 1e-9;

/// Numeric values of the symmetric functions at one `(alpha, beta, gamma)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ResolventValues<F> {
    pub f1f2: Complex<F>,
    pub h1h2: Complex<F>,
    pub t1t2: Complex<F>,
    pub p: Complex<F>,
    /// `q` already multiplied by `qsign`.
    pub q: Complex<F>,
    pub d: Complex<F>,
    pub qsign: i8,
}

impl<F: Real> ResolventValues<F> {
    pub fn new(c: &CanonicalQuintic<F>, qsign: i8) -> Self {
        let (a, b, g) = (&c.alpha, &c.beta, &c.gamma);
        let (f1f2, h1h2, t1t2) = resolvent_products(a, b, g);
        let p = p_from_products(&f1f2, &h1h2, &t1t2);
        let q = q_plus(a, b, g) * F::from_i8(qsign).unwrap();
        ResolventValues { f1f2, h1h2, t1t2, p, q, d: discriminant(a, b, g), qsign }
    }

    /// Relative defect of `p^2 - D q^2 = (H1H2)^3 (f1f2)^5`.
    pub fn identity_defect(&self) -> F {
        let lhs = self.p * self.p - self.d * self.q * self.q;
        let rhs = self.h1h2.powu(3) * self.f1f2.powu(5);
        let scale = (self.p * self.p).norm() + (self.d * self.q * self.q).norm() + rhs.norm();
        if scale.is_zero() {
            F::zero()
        } else {
            (lhs - rhs).norm() / scale
        }
    }

    /// `(p + nabla q) / (1728 (f1 f2)^5)`.
    pub fn z(&self, nabla: Complex<F>) -> Complex<F> {
        (self.p + nabla * self.q) / (self.f1f2.powu(5) * F::lit(1728.0))
    }
}

/// `(Z1, Z2)` for the canonical quintic `(alpha, beta, gamma)` with square
/// root `nabla` of its discriminant.
pub fn icosahedral_invariants<F: Real>(
    alpha: Complex<F>,
    beta: Complex<F>,
    gamma: Complex<F>,
    nabla: Complex<F>,
) -> Result<(Complex<F>, Complex<F>)> {
    let c = CanonicalQuintic::new(alpha, beta, gamma);
    check_degeneracy(&c)?;
    let v = ResolventValues::new(&c, 1);
    Ok((v.z(nabla), v.z(-nabla)))
}

/// Rejects repeated roots and quintics whose Segre point lies over a vertex.
pub fn check_degeneracy<F: Real>(c: &CanonicalQuintic<F>) -> Result<()> {
    if c.is_zero() {
        // y^5 = 0
        return Err(Error::RepeatedRoots);
    }
    let rho = c.scale();
    let tol = F::lit(DEGENERACY);
    if c.discriminant().norm() <= tol * rho.powi(20) {
        return Err(Error::RepeatedRoots);
    }
    let (f1f2, _, _) = resolvent_products(&c.alpha, &c.beta, &c.gamma);
    if f1f2.norm() <= tol * rho.powi(12) {
        return Err(Error::DegenerateConfiguration(format!(
            "f1 f2 = {f1f2} vanishes: a Segre coordinate sits on a vertex"
        )));
    }
    Ok(())
}

/// Exact `(Z1, Z2)` over any field, `None` when `f1 f2 = 0`.
pub fn icosahedral_invariants_exact<T: FieldScalar + PartialEq>(
    alpha: &T,
    beta: &T,
    gamma: &T,
    nabla: &T,
    zero: &T,
) -> Option<(T, T)> {
    let (f1f2, h1h2, t1t2) = resolvent_products(alpha, beta, gamma);
    if &f1f2 == zero {
        return None;
    }
    let p = p_from_products(&f1f2, &h1h2, &t1t2);
    let nq = nabla.clone() * q_plus(alpha, beta, gamma);
    let den = f1f2.pow_pos(5).scaled(1728, 1);
    Some(((p.clone() + nq.clone()) / den.clone(), (p - nq) / den))
}
