//! Simultaneous-iteration (Aberth-Ehrlich) polynomial root finder.

use num_complex::Complex;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::scalar::Real;
use crate::{Error, Result};

/// Iteration controls for [`aberth`].
#[derive(Debug, Clone, Copy)]
pub struct AberthOptions {
    pub max_iterations: usize,
    pub seed: u64,
    /// Accept when every root's backward error is at most this multiple of
    /// machine epsilon.
    pub backward_error_ulps: f64,
    /// Fail when some root's backward error still exceeds this after the
    /// iteration budget is spent.
    pub accept_backward_error: f64,
}

impl Default for AberthOptions {
    fn default() -> Self {
        AberthOptions {
            max_iterations: 1000,
            seed: 0x5eed_1c05,
            backward_error_ulps: 8.0,
            accept_backward_error: 1e-10,
        }
    }
}

/// Relative backward error `|p(z)| / sum |a_k| |z|^k` for ascending `coeffs`.
pub fn backward_error<F: Real>(coeffs: &[Complex<F>], z: Complex<F>) -> F {
    let (v, _) = horner(coeffs, z);
    let r = z.norm();
    let mut scale = F::zero();
    for c in coeffs.iter().rev() {
        scale = scale * r + c.norm();
    }
    if scale.is_zero() {
        F::zero()
    } else {
        v.norm() / scale
    }
}

// p(z), p'(z) for ascending coefficients
fn horner<F: Real>(coeffs: &[Complex<F>], z: Complex<F>) -> (Complex<F>, Complex<F>) {
    let mut p = Complex::zero();
    let mut dp = Complex::zero();
    for c in coeffs.iter().rev() {
        dp = dp * z + p;
        p = p * z + c;
    }
    (p, dp)
}

/// All roots of `sum coeffs[k] z^k` (ascending order), sorted by real then
/// imaginary part.
///
/// Exact zero roots are split off first; the remaining roots start on a
/// circle of radius `|a0/an|^(1/n)` with seeded random perturbations and are
/// refined by Aberth corrections followed by a Newton polish.
pub fn aberth<F: Real>(coeffs: &[Complex<F>], opts: AberthOptions) -> Result<Vec<Complex<F>>> {
    let mut hi = coeffs.len();
    while hi > 0 && coeffs[hi - 1].is_zero() {
        hi -= 1;
    }
    if hi == 0 {
        return Err(Error::InvalidInput("zero polynomial".into()));
    }
    let lo = coeffs.iter().take_while(|c| c.is_zero()).count();
    let mut roots = vec![Complex::zero(); lo];
    let lead = coeffs[hi - 1];
    let monic: Vec<Complex<F>> = coeffs[lo..hi].iter().map(|c| c / lead).collect();
    let n = monic.len() - 1;
    if n == 0 {
        sort_roots(&mut roots);
        return Ok(roots);
    }
    // Work in u = z / s with s a root-radius bound, so |u| <= 2, and scale
    // the coefficients in the log domain so the largest has modulus one.
    let s = (0..n)
        .map(|k| monic[k].norm().powf(F::one() / F::from_usize(n - k).unwrap()))
        .fold(F::zero(), F::max);
    let logs: Vec<F> = monic
        .iter()
        .enumerate()
        .map(|(k, c)| c.norm().ln() + F::from_usize(k).unwrap() * s.ln())
        .collect();
    let top = logs.iter().copied().fold(F::neg_infinity(), F::max);
    let poly: Vec<Complex<F>> = monic
        .iter()
        .zip(&logs)
        .map(|(c, l)| if c.is_zero() { *c } else { c.unscale(c.norm()).scale((*l - top).exp()) })
        .collect();

    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let radius = poly[0].norm().powf(F::one() / F::from_usize(n).unwrap());
    let offset: f64 = rng.gen_range(0.0..1.0);
    let mut z: Vec<Complex<F>> = (0..n)
        .map(|k| {
            let jitter: f64 = rng.gen_range(0.9..1.1);
            let theta = (k as f64 + offset) / n as f64 * std::f64::consts::TAU + 0.4;
            Complex::from_polar(radius * F::lit(jitter), F::lit(theta))
        })
        .collect();

    let target = F::epsilon() * F::lit(opts.backward_error_ulps);
    let mut converged = false;
    for _ in 0..opts.max_iterations {
        let mut worst = F::zero();
        for i in 0..n {
            let (p, dp) = horner(&poly, z[i]);
            if p.is_zero() {
                continue;
            }
            let ratio = cdiv(p, dp);
            let mut sum: Complex<F> = Complex::zero();
            for j in 0..n {
                if j != i {
                    sum = sum + cdiv(Complex::one(), z[i] - z[j]);
                }
            }
            let w = cdiv(ratio, Complex::<F>::one() - ratio * sum);
            if w.re.is_finite() && w.im.is_finite() {
                z[i] = z[i] - w;
            }
        }
        for zi in &z {
            worst = worst.max(backward_error(&poly, *zi));
        }
        if worst <= target {
            converged = true;
            break;
        }
    }

    for zi in z.iter_mut() {
        polish(&poly, zi, 3);
        *zi = *zi * s;
        polish(&monic, zi, 2);
    }
    let worst = z.iter().map(|zi| backward_error(&monic, *zi)).fold(F::zero(), F::max);
    let accept = F::lit(opts.accept_backward_error).max(F::epsilon() * F::lit(1e3));
    if !converged && !(worst <= accept) {
        return Err(Error::NoConvergence(format!(
            "Aberth iteration on degree {n}: backward error {:e}",
            worst.to_f64().unwrap_or(f64::NAN)
        )));
    }
    roots.extend(z);
    sort_roots(&mut roots);
    Ok(roots)
}

/// `a / b` with both operands rescaled first, so that `|b|^2` cannot
/// underflow or overflow.
pub fn cdiv<F: Real>(a: Complex<F>, b: Complex<F>) -> Complex<F> {
    let s = b.re.abs().max(b.im.abs());
    if s.is_zero() || !s.is_finite() {
        return a / b;
    }
    a.unscale(s) / b.unscale(s)
}

/// Newton steps that are kept only while they reduce `|p|`.
pub fn polish<F: Real>(poly: &[Complex<F>], z: &mut Complex<F>, steps: usize) {
    for _ in 0..steps {
        let (p, dp) = horner(poly, *z);
        if p.is_zero() || dp.is_zero() {
            return;
        }
        let cand = *z - cdiv(p, dp);
        let (pc, _) = horner(poly, cand);
        if pc.norm() < p.norm() {
            *z = cand;
        } else {
            return;
        }
    }
}

/// Deterministic order: real part, then imaginary part.
pub fn sort_roots<F: Real>(roots: &mut [Complex<F>]) {
    roots.sort_by(|a, b| {
        a.re.partial_cmp(&b.re)
            .unwrap_or(std::cmp::Ordering::Equal)
            .then(a.im.partial_cmp(&b.im).unwrap_or(std::cmp::Ordering::Equal))
    });
}

/// Greedy minimum-distance matching of two root lists; returns the largest
/// matched distance.
pub fn match_distance<F: Real>(a: &[Complex<F>], b: &[Complex<F>]) -> F {
    assert_eq!(a.len(), b.len());
    let mut used = vec![false; b.len()];
    let mut pairs: Vec<(F, usize, usize)> = Vec::new();
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            pairs.push(((x - y).norm(), i, j));
        }
    }
    pairs.sort_by(|p, q| p.0.partial_cmp(&q.0).unwrap_or(std::cmp::Ordering::Equal));
    let mut done = vec![false; a.len()];
    let mut worst = F::zero();
    for (d, i, j) in pairs {
        if !done[i] && !used[j] {
            done[i] = true;
            used[j] = true;
            worst = worst.max(d);
        }
    }
    worst
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64) -> Complex<f64> {
        Complex::new(re, 0.0)
    }

    #[test]
    fn roots_of_unity() {
        let roots = aberth(&[c(-1.0), c(0.0), c(0.0), c(0.0), c(0.0), c(1.0)], AberthOptions::default())
            .unwrap();
        assert_eq!(roots.len(), 5);
        for r in &roots {
            assert!((r.powu(5) - c(1.0)).norm() < 1e-13);
        }
    }

    #[test]
    fn zero_roots_split_off() {
        // y^5 + 5y = y (y^4 + 5)
        let roots = aberth(&[c(0.0), c(5.0), c(0.0), c(0.0), c(0.0), c(1.0)], AberthOptions::default())
            .unwrap();
        assert!(roots.iter().any(|r| r.norm() == 0.0));
        let fourth = 5f64.powf(0.25);
        for r in roots.iter().filter(|r| r.norm() > 0.0) {
            assert!((r.norm() - fourth).abs() < 1e-12);
            assert!((r.powu(4) + c(5.0)).norm() < 1e-12);
        }
    }

    #[test]
    fn double_root() {
        // (y + 1)^2 (y^3 - 2y^2 + 4y + 1) = y^5 + 5y^2 + 5y + 1
        let roots = aberth(&[c(1.0), c(5.0), c(5.0), c(0.0), c(0.0), c(1.0)], AberthOptions::default())
            .unwrap();
        let near = roots.iter().filter(|r| (*r - c(-1.0)).norm() < 1e-6).count();
        assert_eq!(near, 2);
    }

    #[test]
    fn matching() {
        let a = [c(1.0), c(2.0), c(3.0)];
        let b = [c(3.0 + 1e-9), c(1.0), c(2.0)];
        assert!(match_distance(&a, &b) < 2e-9);
    }
}
