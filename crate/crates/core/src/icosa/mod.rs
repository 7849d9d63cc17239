//! The icosahedral rotation group acting on the Riemann sphere: vertex
//! coordinates, generators, the invariant forms `f`, `H`, `T` and the
//! quotient map `I = H^3 / (1728 f^5)`.

mod form;
mod group;
mod map;

pub use form::BinaryForm;
pub use group::{
    generators, group_checks, mat_mul, mat_pow, permutation_closure, GroupGenerators, Mat2,
    Perm,
};
pub use map::{apply_mobius, icos_i, stereographic, ExtComplex};

use std::sync::OnceLock;

use num_traits::Zero;

use crate::certify::Certificate;
use crate::polyalg::{hessian_det, jacobian_det, MPoly, VarSet};
use crate::{CycQ, Error, Rat, Result};

/// `z1, z2`: the homogeneous coordinates of the sphere.
pub fn binary_ring() -> VarSet {
    VarSet::new(&["z1", "z2"])
}

/// `f = z1 z2 (z1^10 + 11 z1^5 z2^5 - z2^10)`, vanishing on the twelve vertices.
pub fn vertex_form() -> MPoly {
    binary_ring().from_int_terms(&[(1, &[11, 1]), (11, &[6, 6]), (-1, &[1, 11])])
}

fn displayed_h() -> MPoly {
    binary_ring().from_int_terms(&[
        (-1, &[20, 0]),
        (-1, &[0, 20]),
        (228, &[15, 5]),
        (-228, &[5, 15]),
        (-494, &[10, 10]),
    ])
}

fn displayed_t() -> MPoly {
    binary_ring().from_int_terms(&[
        (1, &[30, 0]),
        (1, &[0, 30]),
        (522, &[25, 5]),
        (-522, &[5, 25]),
        (-10005, &[20, 10]),
        (-10005, &[10, 20]),
    ])
}

/// The three fundamental invariant forms with their numeric compilations.
#[derive(Debug, Clone)]
pub struct IcosInvariants {
    pub f: MPoly,
    pub h: MPoly,
    pub t: MPoly,
    pub f_form: BinaryForm,
    pub h_form: BinaryForm,
    pub t_form: BinaryForm,
}

/// Computes `H = Hes(f)/121` and `T = Jac(f, H)/20` and checks them against
/// the known coefficient lists.
pub fn build_invariants() -> Result<IcosInvariants> {
    let f = vertex_form();
    let h = hessian_det(&f, "z1", "z2")?.scale_rat(&Rat::new(1.into(), 121.into()));
    let t = jacobian_det(&f, &h, "z1", "z2")?.scale_rat(&Rat::new(1.into(), 20.into()));
    if h != displayed_h() {
        return Err(Error::InternalMismatch(format!("Hes(f)/121 = {h}")));
    }
    if t != displayed_t() {
        return Err(Error::InternalMismatch(format!("Jac(f, H)/20 = {t}")));
    }
    Ok(IcosInvariants {
        f_form: BinaryForm::from_mpoly(&f)?,
        h_form: BinaryForm::from_mpoly(&h)?,
        t_form: BinaryForm::from_mpoly(&t)?,
        f,
        h,
        t,
    })
}

/// Shared, lazily built invariants.
pub fn invariants() -> &'static IcosInvariants {
    static CELL: OnceLock<IcosInvariants> = OnceLock::new();
    CELL.get_or_init(|| build_invariants().expect("icosahedral invariants self-check"))
}

/// Exact check of `H^3 + T^2 = 1728 f^5`.
pub fn verify_syzygy() -> Certificate {
    Certificate::timed("syzygy H^3 + T^2 = 1728 f^5", || {
        let inv = invariants();
        let lhs = &inv.h.pow(3) + &inv.t.pow(2);
        let rhs = inv.f.pow(5).scale(&CycQ::from_int(1728));
        let diff = &lhs - &rhs;
        (diff.is_zero(), format!("{} residual terms", diff.len()))
    })
}

/// A vertex of the icosahedron; `None` is the point at infinity.
pub type Vertex = Option<CycQ>;

/// The twelve vertices `0, inf, e^v (e + e^-1), e^v (e^2 + e^-2)`.
pub fn vertices() -> Vec<Vertex> {
    let mut out = vec![Some(CycQ::zero()), None];
    let a = CycQ::eps_pow(1) + CycQ::eps_pow(4);
    let b = CycQ::eps_pow(2) + CycQ::eps_pow(3);
    for nu in 0..5 {
        out.push(Some(&CycQ::eps_pow(nu) * &a));
    }
    for nu in 0..5 {
        out.push(Some(&CycQ::eps_pow(nu) * &b));
    }
    out
}
