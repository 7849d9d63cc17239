//! Rebuilding the five roots of a canonical quintic from one solution of
//! the icosahedral equation.
//!
//! With `z = l1/l2` and `nu = 0..4`,
//! `y_nu = P(e^nu z) m / (f1 f2) + Q(e^nu z) n / (T1 T2)`, where `P = f/(H/B)`
//! and `Q = Dcube T / ((H/B) f^2)` are degree-zero in `(z1, z2)` and `m`, `n`
//! are the closed forms of `M1 f2` and `N1 f1^2 T2`.

pub mod cube;
pub mod gordon;

use num_complex::Complex;

use crate::exactfield::eps_embed;
use crate::icosa::ExtComplex;
use crate::invariantmap::{check_degeneracy, resolvent_products, ResolventValues};
use crate::inverter::{icos_equation_roots, invert_icosahedral};
use crate::quintic::{nabla, CanonicalQuintic};
use crate::roots::{aberth, AberthOptions};
use crate::scalar::{tol_for, Real};
use crate::{Error, Result};

pub use cube::{cube_certificates, cube_polys, root_factors, CubePolys};
pub use gordon::{gordon_certificates, gordon_forms, linear_form_values};

/// Largest accepted relative residual of a recovered root.
pub const ACCEPT: f64 = 1e-6;
/// Relative size below which a form counts as vanishing.
pub const FORM_TOL: f64 = 1e-9;

/// Which of the equivalent choices produced a root set.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Branch {
    pub qsign: i8,
    /// Index into the sorted degree-60 roots, `None` for the primary inverse.
    pub z_index: Option<usize>,
    /// `z` was multiplied by `e^delta_power`.
    pub delta_power: u32,
}

/// Five roots with their relative residuals.
#[derive(Debug, Clone, PartialEq)]
pub struct RootSet<F> {
    pub roots: [Complex<F>; 5],
    pub residuals: [F; 5],
    /// Set when the roots came from the icosahedral formulas.
    pub branch: Option<Branch>,
    /// Why the oracle was used instead, if it was.
    pub fallback: Option<String>,
}

impl<F: Real> RootSet<F> {
    fn from_roots(c: &CanonicalQuintic<F>, roots: [Complex<F>; 5]) -> Self {
        let residuals = roots.map(|y| c.residual(y));
        RootSet { roots, residuals, branch: None, fallback: None }
    }

    pub fn max_residual(&self) -> F {
        self.residuals.iter().copied().fold(F::zero(), F::max)
    }

    pub fn accepted(&self) -> bool {
        self.max_residual() <= tol_for::<F>(ACCEPT)
    }
}

/// Roots from `z = l1/l2` on the branch `qsign` (`+1` pairs with `Z1`).
pub fn recover_roots<F: Real>(
    c: &CanonicalQuintic<F>,
    nabla: Complex<F>,
    z: Complex<F>,
    qsign: i8,
) -> Result<RootSet<F>> {
    let (z1, z2) = ExtComplex::Finite(z).homogeneous();
    recover_roots_homogeneous(c, nabla, (z1, z2), qsign)
}

/// [`recover_roots`] at the homogeneous point `(z1, z2)`.
pub fn recover_roots_homogeneous<F: Real>(
    c: &CanonicalQuintic<F>,
    nabla: Complex<F>,
    (z1, z2): (Complex<F>, Complex<F>),
    qsign: i8,
) -> Result<RootSet<F>> {
    let tol = F::lit(FORM_TOL);
    let rho = c.scale();
    let (f1f2, _, t1t2) = resolvent_products(&c.alpha, &c.beta, &c.gamma);
    if !(f1f2.norm() > tol * rho.powi(12)) {
        return Err(Error::DegenerateConfiguration("f1 f2 vanishes".into()));
    }
    if !(t1t2.norm() > tol * rho.powi(30)) {
        return Err(Error::DegenerateConfiguration(
            "T1 T2 vanishes: the quintic sits over an edge midpoint".into(),
        ));
    }
    let signed = nabla * F::from_i8(qsign).unwrap();
    let (m, n) = linear_form_values(&c.alpha, &c.beta, &c.gamma, &signed);
    let (mu, nu_) = (m / f1f2, n / t1t2);
    let mut roots = [Complex::new(F::zero(), F::zero()); 5];
    for (k, y) in roots.iter_mut().enumerate() {
        let (p, q) = root_factors(z1 * eps_embed::<F>(k as i64), z2, tol).ok_or_else(|| {
            Error::DegenerateConfiguration(format!("H/B or f vanishes at e^{k} z"))
        })?;
        *y = p * mu + q * nu_;
    }
    let mut set = RootSet::from_roots(c, roots);
    set.branch = Some(Branch { qsign, z_index: None, delta_power: 0 });
    Ok(set)
}

/// All roots by simultaneous iteration; coefficients highest degree first.
pub fn oracle_roots<F: Real>(coefficients: &[Complex<F>]) -> Result<Vec<Complex<F>>> {
    let asc: Vec<Complex<F>> = coefficients.iter().rev().copied().collect();
    if asc.last().map_or(true, |c| c.norm().is_zero()) {
        return Err(Error::InvalidInput("leading coefficient is zero".into()));
    }
    aberth(&asc, AberthOptions::default())
}

fn oracle_set<F: Real>(c: &CanonicalQuintic<F>, why: String) -> Result<RootSet<F>> {
    let roots = c.oracle_roots()?;
    let arr: [Complex<F>; 5] = roots
        .try_into()
        .map_err(|_| Error::InternalMismatch("oracle did not return five roots".into()))?;
    let mut set = RootSet::from_roots(c, arr);
    set.fallback = Some(why);
    Ok(set)
}

/// Solves `y^5 + 5 alpha y^2 + 5 beta y + gamma` by the icosahedral method.
///
/// Both signs of `q` are tried with the primary inverse; then the other
/// fifth-root multiples of `z`, then further degree-60 roots. The first
/// stage with an accepted branch wins (lowest residual within the stage).
/// Quintics over a vertex or an edge midpoint, and branches that never
/// reach the residual bound, fall back to the oracle with a flag.
pub fn solve_canonical<F: Real>(c: &CanonicalQuintic<F>) -> Result<RootSet<F>> {
    match check_degeneracy(c) {
        Ok(()) => {}
        Err(Error::DegenerateConfiguration(why)) => return oracle_set(c, why),
        Err(e) => return Err(e),
    }
    let nab = nabla(c.discriminant());
    let mut zs = Vec::new();
    for qsign in [1i8, -1] {
        let zval = ResolventValues::new(c, qsign).z(nab);
        zs.push((qsign, zval, invert_icosahedral(zval)?));
    }

    let pick = |cands: Vec<Result<RootSet<F>>>| -> Result<Option<RootSet<F>>> {
        let mut best: Option<RootSet<F>> = None;
        for cand in cands {
            match cand {
                Ok(set) if set.accepted() => {
                    if best.as_ref().map_or(true, |b| set.max_residual() < b.max_residual()) {
                        best = Some(set);
                    }
                }
                Ok(_) => {}
                Err(Error::DegenerateConfiguration(why)) => return Err(Error::DegenerateConfiguration(why)),
                Err(e) => return Err(e),
            }
        }
        Ok(best)
    };
    let with_branch = |qsign: i8, z: Complex<F>, z_index, delta_power| {
        recover_roots(c, nab, z, qsign).map(|mut s| {
            s.branch = Some(Branch { qsign, z_index, delta_power });
            s
        })
    };

    let stages: Vec<Box<dyn Fn() -> Result<Vec<Result<RootSet<F>>>>>> = vec![
        Box::new(|| Ok(zs.iter().map(|&(q, _, z)| with_branch(q, z, None, 0)).collect())),
        Box::new(|| {
            Ok(zs
                .iter()
                .flat_map(|&(q, _, z)| {
                    (1..5u32).map(move |k| with_branch(q, z * eps_embed::<F>(k as i64), None, k))
                })
                .collect())
        }),
        Box::new(|| {
            let mut out = Vec::new();
            for &(q, zval, _) in &zs {
                for (i, z) in icos_equation_roots(zval)?.into_iter().enumerate().step_by(12).take(5) {
                    out.push(with_branch(q, z, Some(i), 0));
                }
            }
            Ok(out)
        }),
    ];
    for stage in stages {
        match stage().and_then(pick) {
            Ok(Some(set)) => return Ok(set),
            Ok(None) => {}
            Err(Error::DegenerateConfiguration(why)) => return oracle_set(c, why),
            Err(e) => return Err(e),
        }
    }
    oracle_set(c, "no icosahedral branch met the residual bound".into())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::roots::match_distance;
    use proptest::prelude::*;

    type C = Complex<f64>;

    fn re(x: f64) -> C {
        C::new(x, 0.0)
    }

    #[test]
    fn edge_midpoint_quintic_is_degenerate() {
        let c = CanonicalQuintic::from_real(0.0, 1.0, 0.0);
        for q in [1, -1] {
            assert!(matches!(
                recover_roots(&c, re(16.0), re(0.3), q),
                Err(Error::DegenerateConfiguration(_))
            ));
        }
        let set = solve_canonical(&c).unwrap();
        assert!(set.fallback.is_some() && set.accepted());
    }

    #[test]
    fn y5_plus_5y2_plus_1() {
        let c = CanonicalQuintic::from_real(1.0, 0.0, 1.0);
        let nab = re(109f64.sqrt());
        let (z1, _) = crate::invariantmap::icosahedral_invariants(c.alpha, c.beta, c.gamma, nab).unwrap();
        let z = invert_icosahedral(z1).unwrap();
        let set = recover_roots(&c, nab, z, 1).unwrap();
        assert!(set.accepted(), "{:?}", set.residuals);
        let oracle = c.oracle_roots().unwrap();
        assert!(match_distance(&set.roots, &oracle) < 1e-6);

        let solved = solve_canonical(&c).unwrap();
        assert!(solved.fallback.is_none());
        assert!(match_distance(&solved.roots, &oracle) < 1e-6);
    }

    #[test]
    fn projective_point_invariance() {
        let c = CanonicalQuintic::new(C::new(0.4, 0.1), re(-0.3), C::new(0.8, 0.5));
        let nab = nabla(c.discriminant());
        let zval = ResolventValues::new(&c, 1).z(nab);
        let z = invert_icosahedral(zval).unwrap();
        let a = recover_roots_homogeneous(&c, nab, (z, re(1.0)), 1).unwrap();
        let k = C::new(-3.0, 2.0);
        let b = recover_roots_homogeneous(&c, nab, (z * k, k), 1).unwrap();
        for (x, y) in a.roots.iter().zip(&b.roots) {
            assert!((x - y).norm() < 1e-12 * (1.0 + x.norm()));
        }
    }

    #[test]
    fn repeated_and_vertex_cases() {
        assert!(matches!(
            solve_canonical(&CanonicalQuintic::from_real(1.0, 1.0, 1.0)),
            Err(Error::RepeatedRoots)
        ));
        let set = solve_canonical(&CanonicalQuintic::from_real(0.0, 0.0, 1.0)).unwrap();
        assert!(set.fallback.is_some());
        for y in set.roots {
            assert!((y.powu(5) + re(1.0)).norm() < 1e-12);
        }
    }

    #[test]
    fn oracle_examples() {
        let r = oracle_roots(&[re(1.0), re(0.0), re(0.0), re(0.0), re(0.0), re(-1.0)]).unwrap();
        for y in &r {
            assert!((y.powu(5) - re(1.0)).norm() < 1e-12);
        }
        let r = oracle_roots(&[re(1.0), re(0.0), re(0.0), re(0.0), re(5.0), re(0.0)]).unwrap();
        assert_eq!(r.iter().filter(|y| y.norm() == 0.0).count(), 1);
        let r = oracle_roots(&[re(1.0), re(0.0), re(0.0), re(5.0), re(5.0), re(1.0)]).unwrap();
        assert_eq!(r.iter().filter(|y| (*y - re(-1.0)).norm() < 1e-6).count(), 2);
        assert!(oracle_roots(&[re(0.0), re(1.0)]).is_err());
    }

    #[test]
    fn f32_pipeline() {
        let c = CanonicalQuintic::<f32>::from_real(1.0, 0.0, 1.0);
        let set = solve_canonical(&c).unwrap();
        assert!(set.max_residual() < 1e-3);
    }

    fn unit_disc() -> impl Strategy<Value = C> {
        (0.0f64..1.0, 0.0f64..std::f64::consts::TAU).prop_map(|(r, t)| C::from_polar(r, t))
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(120))]
        #[test]
        fn matches_oracle(a in unit_disc(), b in unit_disc(), g in unit_disc()) {
            let c = CanonicalQuintic::new(a, b, g);
            let rho = c.scale();
            let (f1f2, _, _) = resolvent_products(&a, &b, &g);
            prop_assume!(c.discriminant().norm() > 1e-8 * rho.powi(20));
            prop_assume!(f1f2.norm() > 1e-8 * rho.powi(12));
            let set = solve_canonical(&c).unwrap();
            prop_assert!(set.fallback.is_none(), "{:?}", set.fallback);
            let oracle = c.oracle_roots().unwrap();
            prop_assert!(match_distance(&set.roots, &oracle) < 1e-6);
        }
    }
}
