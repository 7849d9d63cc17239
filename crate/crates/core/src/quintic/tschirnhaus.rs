//! The substitution `y = x^2 + b1 x + b2` that kills the `y^4` and `y^3`
//! terms of a depressed quintic.
//!
//! The transformed coefficients come from power sums: `sum q(x_i)^k` is a
//! linear combination of the power sums of the `x_i`, and Newton's
//! identities turn the five sums into elementary symmetric functions.

use num_complex::Complex;
use num_traits::Zero;

use super::{power_sums_from, CanonicalQuintic, GeneralQuintic};
use crate::scalar::{tol_for, Real};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TschirnhausRecord<F> {
    pub original: GeneralQuintic<F>,
    /// `a1/5`; the depressed variable is `u = x + shift`.
    pub shift: Complex<F>,
    pub b1: Complex<F>,
    pub b2: Complex<F>,
    /// The depressed quintic was already canonical; `y = u`.
    pub trivial: bool,
}

/// Relative size below which a transformed root set counts as collapsed.
const COLLAPSE: f64 = 1e-11;
/// Backward error allowed for a back-mapped root.
const BACK_TOL: f64 = 1e-6;

fn tolerance<F: Real>() -> F {
    F::lit(1e-9).max(F::epsilon() * F::lit(1e4))
}

/// Reduces `q` to canonical form.
///
/// The `b1` root of larger magnitude is tried first; the other one is used
/// when the first collapses distinct roots together or misses the vanishing
/// conditions.
pub fn tschirnhaus_reduce<F: Real>(
    q: &GeneralQuintic<F>,
) -> Result<(CanonicalQuintic<F>, TschirnhausRecord<F>)> {
    let (d, shift) = q.depressed();
    let rho = d.root_scale();
    let five = F::lit(5.0);
    let record = |b1, b2, trivial| TschirnhausRecord { original: *q, shift, b1, b2, trivial };

    if d.a[1].norm() <= F::epsilon() * F::lit(4.0) * rho * rho {
        let c = CanonicalQuintic::new(d.a[2] / five, d.a[3] / five, d.a[4]);
        return Ok((c, record(Complex::zero(), Complex::zero(), true)));
    }

    let p = power_sums_from(&d, 10);
    let b2 = -p[2] / five;
    let (lead, mid, constant) = (p[2], p[3] * F::lit(2.0), p[4] - p[2] * p[2] / five);
    let candidates = quadratic_roots(lead, mid, constant)?;

    let disc_x = d.discriminant();
    let x_regular = disc_x.norm() >= F::lit(COLLAPSE) * rho.powi(20);
    let mut last_err = None;
    for b1 in candidates {
        let e = transformed_elementary(&p, b1, b2);
        let sigma = rho * rho + b1.norm() * rho + b2.norm();
        let tol = tolerance::<F>();
        if e[1].norm() > tol * sigma.max(F::min_positive_value())
            || e[2].norm() > tol * (sigma * sigma).max(F::min_positive_value())
        {
            last_err = Some(Error::InternalMismatch(format!(
                "transformed quintic keeps y^4/y^3 terms ({:e}, {:e})",
                e[1].norm().to_f64().unwrap_or(f64::NAN),
                e[2].norm().to_f64().unwrap_or(f64::NAN)
            )));
            continue;
        }
        let c = CanonicalQuintic::new(-e[3] / five, e[4] / five, -e[5]);
        if x_regular && collapsed(&c, disc_x, rho, b1) {
            last_err = Some(Error::DegenerateImage);
            continue;
        }
        return Ok((c, record(b1, b2, false)));
    }
    Err(last_err.unwrap_or(Error::DegenerateImage))
}

// disc_y = disc_x * prod_{i<j} (x_i + x_j + b1)^2; flag when the product is
// tiny against its natural size.
fn collapsed<F: Real>(c: &CanonicalQuintic<F>, disc_x: Complex<F>, rho: F, b1: Complex<F>) -> bool {
    let disc_y = c.discriminant() * F::lit(3125.0);
    let factor = (disc_y / disc_x).norm();
    let size = (F::lit(2.0) * rho + b1.norm()).powi(20);
    factor < F::lit(COLLAPSE) * size
}

/// Roots of `a t^2 + b t + c`, larger magnitude first, by the
/// cancellation-free formula.
fn quadratic_roots<F: Real>(a: Complex<F>, b: Complex<F>, c: Complex<F>) -> Result<Vec<Complex<F>>> {
    if a.is_zero() {
        if b.is_zero() {
            return Err(Error::DegenerateImage);
        }
        return Ok(vec![-c / b]);
    }
    let two = F::lit(2.0);
    let sq = (b * b - a * c * F::lit(4.0)).sqrt();
    let plus = b + sq;
    let minus = b - sq;
    let big = if plus.norm() >= minus.norm() { plus } else { minus };
    if big.is_zero() {
        return Ok(vec![Complex::zero(), Complex::zero()]);
    }
    let qq = -big / two;
    Ok(vec![qq / a, c / qq])
}

// e_0 .. e_5 of the values y_i = x_i^2 + b1 x_i + b2, from the power sums
// p_0 .. p_10 of the x_i.
fn transformed_elementary<F: Real>(p: &[Complex<F>], b1: Complex<F>, b2: Complex<F>) -> [Complex<F>; 6] {
    let one = Complex::new(F::one(), F::zero());
    let quad = [b2, b1, one];
    let mut qk = vec![one];
    let mut ps = [Complex::zero(); 6];
    for k in 1..=5 {
        let mut next = vec![Complex::zero(); qk.len() + 2];
        for (i, u) in qk.iter().enumerate() {
            for (j, v) in quad.iter().enumerate() {
                next[i + j] = next[i + j] + u * v;
            }
        }
        qk = next;
        ps[k] = qk.iter().zip(p).map(|(c, pm)| c * pm).fold(Complex::zero(), |s, t| s + t);
    }
    let mut e = [Complex::zero(); 6];
    e[0] = one;
    for k in 1..=5 {
        let mut s = Complex::zero();
        for i in 1..=k {
            let term = e[k - i] * ps[i];
            s = if i % 2 == 1 { s + term } else { s - term };
        }
        e[k] = s / F::from_usize(k).unwrap();
    }
    e
}

/// Maps a root of the canonical quintic back to a root of the original.
pub fn tschirnhaus_back<F: Real>(y: Complex<F>, rec: &TschirnhausRecord<F>) -> Result<Complex<F>> {
    let candidates = if rec.trivial {
        vec![y]
    } else {
        quadratic_roots(Complex::new(F::one(), F::zero()), rec.b1, rec.b2 - y)?
    };
    let (x, res) = candidates
        .into_iter()
        .map(|u| {
            let x = u - rec.shift;
            (x, rec.original.residual(x))
        })
        .min_by(|a, b| a.1.partial_cmp(&b.1).unwrap_or(std::cmp::Ordering::Equal))
        .expect("at least one candidate");
    if !(res <= tol_for::<F>(BACK_TOL)) {
        return Err(Error::AmbiguousPreimage {
            y: format!("{y}"),
            residual: res.to_f64().unwrap_or(f64::NAN),
        });
    }
    Ok(x)
}
