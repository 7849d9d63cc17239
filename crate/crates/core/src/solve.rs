//! The full pipeline for a monic quintic: reduce, solve the canonical
//! form, map the roots back.

use num_complex::Complex;
use num_traits::Zero;

use crate::bjseries::bj_root_series;
use crate::quintic::{nabla, tschirnhaus_back, tschirnhaus_reduce, CanonicalQuintic, GeneralQuintic, TschirnhausRecord};
use crate::invariantmap::ResolventValues;
use crate::recovery::{solve_canonical, Branch};
use crate::roots::{aberth, sort_roots, AberthOptions};
use crate::scalar::Real;
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SolveMethod {
    Icosahedral,
    /// Bring-Jerrard series; only for `x^5 - x + gamma`.
    Series,
    Oracle,
}

impl SolveMethod {
    pub fn name(self) -> &'static str {
        match self {
            SolveMethod::Icosahedral => "icosahedral",
            SolveMethod::Series => "series",
            SolveMethod::Oracle => "oracle",
        }
    }
}

impl std::str::FromStr for SolveMethod {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "icosahedral" => Ok(SolveMethod::Icosahedral),
            "series" => Ok(SolveMethod::Series),
            "oracle" => Ok(SolveMethod::Oracle),
            other => Err(Error::InvalidInput(format!("unknown method {other:?}"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Solution<F> {
    /// Sorted by real, then imaginary part.
    pub roots: [Complex<F>; 5],
    /// Relative residuals in the original quintic, matching `roots`.
    pub residuals: [F; 5],
    pub canonical: Option<CanonicalQuintic<F>>,
    pub tschirnhaus: Option<TschirnhausRecord<F>>,
    /// Icosahedral invariant of the branch that produced the roots.
    pub z: Option<Complex<F>>,
    pub branch: Option<Branch>,
    pub method_used: &'static str,
    pub fallback: Option<String>,
}

impl<F: Real> Solution<F> {
    pub fn max_residual(&self) -> F {
        self.residuals.iter().copied().fold(F::zero(), F::max)
    }

    fn new(q: &GeneralQuintic<F>, mut roots: Vec<Complex<F>>, method_used: &'static str) -> Result<Self> {
        sort_roots(&mut roots);
        let roots: [Complex<F>; 5] = roots
            .try_into()
            .map_err(|_| Error::InternalMismatch("expected five roots".into()))?;
        Ok(Solution {
            residuals: roots.map(|x| q.residual(x)),
            roots,
            canonical: None,
            tschirnhaus: None,
            z: None,
            branch: None,
            method_used,
            fallback: None,
        })
    }
}

/// Solves `q`; the result is rejected with [`Error::NoConvergence`] when a
/// residual exceeds `tol`.
pub fn solve<F: Real>(q: &GeneralQuintic<F>, method: SolveMethod, tol: F) -> Result<Solution<F>> {
    let sol = match method {
        SolveMethod::Oracle => Solution::new(q, q.oracle_roots()?, "oracle")?,
        SolveMethod::Series => solve_series(q)?,
        SolveMethod::Icosahedral => solve_icosahedral(q)?,
    };
    if !(sol.max_residual() <= tol) {
        return Err(Error::NoConvergence(format!(
            "{} residual {:e} exceeds tolerance",
            sol.method_used,
            sol.max_residual().to_f64().unwrap_or(f64::NAN)
        )));
    }
    Ok(sol)
}

fn solve_icosahedral<F: Real>(q: &GeneralQuintic<F>) -> Result<Solution<F>> {
    let (c, rec) = tschirnhaus_reduce(q)?;
    let set = solve_canonical(&c)?;
    let back: Result<Vec<Complex<F>>> = set.roots.iter().map(|y| tschirnhaus_back(*y, &rec)).collect();
    let (mut sol, fallback) = match (back, &set.fallback) {
        (Ok(xs), None) => (Solution::new(q, xs, "icosahedral")?, None),
        (Ok(xs), Some(why)) => (Solution::new(q, xs, "oracle")?, Some(why.clone())),
        (Err(Error::AmbiguousPreimage { residual, .. }), _) => (
            Solution::new(q, q.oracle_roots()?, "oracle")?,
            Some(format!("back-mapping residual {residual:e}")),
        ),
        (Err(e), _) => return Err(e),
    };
    if let Some(b) = set.branch {
        sol.z = Some(ResolventValues::new(&c, b.qsign).z(nabla(c.discriminant())));
    }
    sol.branch = set.branch;
    sol.canonical = Some(c);
    sol.tschirnhaus = Some(rec);
    sol.fallback = fallback;
    Ok(sol)
}

fn solve_series<F: Real>(q: &GeneralQuintic<F>) -> Result<Solution<F>> {
    let one = Complex::new(F::one(), F::zero());
    let [a1, a2, a3, a4, a5] = q.a;
    if !(a1.is_zero() && a2.is_zero() && a3.is_zero() && a4 == -one) {
        return Err(Error::InvalidInput("the series method needs x^5 - x + gamma".into()));
    }
    let y = bj_root_series(a5, F::epsilon())?;
    // x^5 - x + gamma = (x - y)(x^4 + y x^3 + y^2 x^2 + y^3 x + y^4 - 1)
    let quartic = [y.powu(4) - one, y.powu(3), y * y, y, one];
    let mut roots = aberth(&quartic, AberthOptions::default())?;
    roots.push(y);
    Solution::new(q, roots, "series+deflation")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::roots::match_distance;

    type C = Complex<f64>;

    #[test]
    fn fifth_roots_of_unity() {
        let q = GeneralQuintic::from_real([0.0, 0.0, 0.0, 0.0, -1.0]);
        let s = solve(&q, SolveMethod::Icosahedral, 1e-6).unwrap();
        assert!(s.max_residual() < 1e-10);
        assert!(s.fallback.is_some());
        for x in s.roots {
            assert!((x.powu(5) - 1.0).norm() < 1e-12);
        }
    }

    #[test]
    fn general_quintic_end_to_end() {
        let q = GeneralQuintic::from_real([0.0, 0.0, 1.0, 1.0, 0.2]);
        let s = solve(&q, SolveMethod::Icosahedral, 1e-6).unwrap();
        assert!(s.fallback.is_none() && s.z.is_some());
        let o = solve(&q, SolveMethod::Oracle, 1e-6).unwrap();
        assert!(match_distance(&s.roots, &o.roots) < 1e-6);

        let q = GeneralQuintic::new([C::new(1.0, -0.5), C::new(-2.0, 0.0), C::new(0.3, 0.3), C::new(1.0, 0.0), C::new(-0.7, 0.1)]);
        let s = solve(&q, SolveMethod::Icosahedral, 1e-6).unwrap();
        let o = solve(&q, SolveMethod::Oracle, 1e-6).unwrap();
        assert!(s.fallback.is_none());
        assert!(match_distance(&s.roots, &o.roots) < 1e-6);
    }

    #[test]
    fn repeated_roots_rejected() {
        let q = GeneralQuintic::from_real([0.0, 0.0, 5.0, 5.0, 1.0]);
        assert!(matches!(solve(&q, SolveMethod::Icosahedral, 1e-6), Err(Error::RepeatedRoots)));
    }

    #[test]
    fn series_method() {
        let q = GeneralQuintic::from_real([0.0, 0.0, 0.0, -1.0, 0.1]);
        let s = solve(&q, SolveMethod::Series, 1e-6).unwrap();
        assert_eq!(s.method_used, "series+deflation");
        assert!(s.roots.iter().any(|x| (x - C::new(0.1000100050035, 0.0)).norm() < 1e-12));
        assert!(s.max_residual() < 1e-12);
        let bad = GeneralQuintic::from_real([0.0, 0.0, 0.0, 1.0, 0.1]);
        assert!(matches!(solve(&bad, SolveMethod::Series, 1e-6), Err(Error::InvalidInput(_))));
        let far = GeneralQuintic::from_real([0.0, 0.0, 0.0, -1.0, 0.7]);
        assert!(matches!(solve(&far, SolveMethod::Series, 1e-6), Err(Error::OutsideRadius(_))));
    }
}
