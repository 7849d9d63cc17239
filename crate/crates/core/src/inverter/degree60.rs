//! All 60 roots of `H(z,1)^3 - 1728 Z f(z,1)^5`.
//!
//! Both forms are polynomials in `w = z^5` up to a factor of `z` in `f`:
//! `H(z,1) = h(w)` and `f(z,1)^5 = w (w^2 + 11 w - 1)^5`, so the equation is
//! a degree-12 polynomial in `w` with leading coefficient `-1`. Its roots
//! are found by simultaneous iteration and each gives five `z` by the fifth
//! roots of unity.

use num_complex::Complex;
use num_traits::{One, Zero};

use super::inversion_defect;
use crate::exactfield::eps_embed;
use crate::roots::{aberth, sort_roots, AberthOptions};
use crate::scalar::{tol_for, Real};
use crate::{Error, Result};

// h(w) = -w^4 + 228 w^3 - 494 w^2 - 228 w - 1, ascending
const H_W: [f64; 5] = [-1.0, -228.0, -494.0, 228.0, -1.0];
// T(z,1) = w^6 + 522 w^5 - 10005 w^4 - 10005 w^2 - 522 w + 1, ascending
const T_W: [f64; 7] = [1.0, -522.0, -10005.0, 0.0, -10005.0, 522.0, 1.0];

fn mul<F: Real>(a: &[Complex<F>], b: &[Complex<F>]) -> Vec<Complex<F>> {
    let mut out = vec![Complex::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] = out[i + j] + x * y;
        }
    }
    out
}

fn lift<F: Real>(c: &[f64]) -> Vec<Complex<F>> {
    c.iter().map(|x| Complex::new(F::lit(*x), F::zero())).collect()
}

/// Ascending coefficients of `h(w)^3 - 1728 Z w (w^2 + 11 w - 1)^5`.
pub fn icos_equation_w_poly<F: Real>(z: Complex<F>) -> Vec<Complex<F>> {
    let h = lift::<F>(&H_W);
    let h3 = mul(&mul(&h, &h), &h);
    let q = lift::<F>(&[-1.0, 11.0, 1.0]);
    let mut f5 = vec![Complex::zero(), Complex::one()];
    for _ in 0..5 {
        f5 = mul(&f5, &q);
    }
    let k = z * F::lit(1728.0);
    h3.iter()
        .enumerate()
        .map(|(i, c)| c - f5.get(i).map_or(Complex::zero(), |v| v * k))
        .collect()
}

/// The 60 solutions of `I(z) = Z` (with multiplicity), sorted by real then
/// imaginary part. `Z = 0` and `Z = 1` return the roots of `H` and `T`
/// with multiplicities 3 and 2.
pub fn icos_equation_roots<F: Real>(z: Complex<F>) -> Result<Vec<Complex<F>>> {
    let one = Complex::new(F::one(), F::zero());
    let (ws, mult) = if z.is_zero() {
        (aberth(&lift::<F>(&H_W), AberthOptions::default())?, 3)
    } else if z == one {
        (aberth(&lift::<F>(&T_W), AberthOptions::default())?, 2)
    } else {
        (aberth(&icos_equation_w_poly(z), AberthOptions::default())?, 1)
    };
    let fifth = F::one() / F::lit(5.0);
    let mut out = Vec::with_capacity(60);
    for w in ws {
        let base = if w.is_zero() { w } else { (w.ln() * fifth).exp() };
        for j in 0..5 {
            let r = base * eps_embed::<F>(j);
            for _ in 0..mult {
                out.push(r);
            }
        }
    }
    let tol = tol_for::<F>(1e-6);
    if let Some(bad) = out.iter().find(|r| !(inversion_defect(**r, z) <= tol)) {
        return Err(Error::NoConvergence(format!(
            "degree-60 root {bad} misses I(z) = {z}"
        )));
    }
    sort_roots(&mut out);
    Ok(out)
}
