//! Power-series root of the Bring-Jerrard quintic `y^5 - y + gamma = 0`,
//! with Fuss-Catalan coefficients and a brute-force Raney count.
//!
//! The root with `y(0) = 0` is `sum_k binom(5k, k) gamma^(4k+1) / (4k+1)`;
//! the coefficient is the Fuss-Catalan number `5d_k`, and the series is a
//! `4F3` in `3125 gamma^4 / 256`, which converges for
//! `|gamma| < 4 * 5^(-5/4)`.

use num_bigint::BigInt;
use num_complex::Complex;
use num_integer::binomial;
use num_traits::{One, Zero};

use crate::scalar::{rat_to_real, Real};
use crate::{Error, Rat, Result};

/// Radius accepted by [`bj_root_series`], inside the true radius.
pub const SERIES_RADIUS: f64 = 0.5;
const MAX_TERMS: usize = 10_000;
const MAX_RANEY_LEN: u64 = 26;

/// `binom(pk, k) / ((p-1)k + 1)`.
pub fn fuss_catalan(p: u64, k: u64) -> BigInt {
    assert!(p >= 2, "Fuss-Catalan numbers need p >= 2");
    binomial(BigInt::from(p * k), BigInt::from(k)) / BigInt::from((p - 1) * k + 1)
}

/// Sequences `a_0 .. a_kp` over `{1, 1-p}` with every partial sum positive,
/// counted by trying every placement of the `k` entries equal to `1 - p`.
pub fn raney_count(p: u64, k: u64) -> Result<BigInt> {
    assert!(p >= 2, "Raney counts need p >= 2");
    let len = k * p + 1;
    if len > MAX_RANEY_LEN {
        return Err(Error::TooLarge(len as usize));
    }
    let (len, k) = (len as usize, k as usize);
    let mut pos: Vec<usize> = (0..k).collect();
    let mut count = BigInt::zero();
    let drop = 1 - p as i64;
    loop {
        let mut partial = 0i64;
        let mut next = 0;
        let ok = (0..len).all(|i| {
            if next < k && pos[next] == i {
                partial += drop;
                next += 1;
            } else {
                partial += 1;
            }
            partial > 0
        });
        if ok {
            count += 1;
        }
        // next k-subset in lexicographic order
        let Some(i) = (0..k).rev().find(|&i| pos[i] < len - k + i) else { break };
        pos[i] += 1;
        for j in i + 1..k {
            pos[j] = pos[j - 1] + 1;
        }
    }
    Ok(count)
}

/// `c_{k+1} / c_k` of the series coefficients from the `4F3` form:
/// `prod (k + j/5) / ((k + 5/4)(k + 3/4)(k + 1/2)(k + 1)) * 3125/256`.
pub fn hypergeometric_ratio(k: u64) -> Rat {
    let k = Rat::from_integer(k.into());
    let r = |n: i64, d: i64| Rat::new(n.into(), d.into());
    let num = (1..=4).fold(Rat::one(), |acc, j| acc * (&k + r(j, 5)));
    let den = (&k + r(5, 4)) * (&k + r(3, 4)) * (&k + r(1, 2)) * (&k + r(1, 1));
    num / den * r(3125, 256)
}

/// The root of `y^5 - y + gamma` with `y(0) = 0`, for `|gamma| <= 0.5`.
///
/// Terms are generated from the exact coefficient ratios and summed until
/// three in a row fall below `tol` relative to the sum.
pub fn bj_root_series<F: Real>(gamma: Complex<F>, tol: F) -> Result<Complex<F>> {
    let r = gamma.norm();
    if !(r <= F::lit(SERIES_RADIUS)) {
        return Err(Error::OutsideRadius(r.to_f64().unwrap_or(f64::NAN)));
    }
    let g4 = gamma.powu(4);
    let mut coeff = BigInt::one();
    let mut term = gamma;
    let mut sum = gamma;
    let mut small = 0;
    for k in 0..MAX_TERMS as u64 {
        if term.norm() <= tol * sum.norm() || term.is_zero() {
            small += 1;
            if small == 3 {
                let residual = (sum.powu(5) - sum + gamma).norm();
                let bound = F::lit(10.0) * tol.max(F::epsilon()) * (F::one() + r);
                if !(residual <= bound) {
                    return Err(Error::NoConvergence(format!(
                        "series residual {:e}",
                        residual.to_f64().unwrap_or(f64::NAN)
                    )));
                }
                return Ok(sum);
            }
        } else {
            small = 0;
        }
        let next = fuss_catalan(5, k + 1);
        let ratio = Rat::new(next.clone(), coeff);
        coeff = next;
        term = term * g4 * rat_to_real::<F>(&ratio);
        sum = sum + term;
    }
    Err(Error::NoConvergence(format!("series exceeded {MAX_TERMS} terms")))
}
