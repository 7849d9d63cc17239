//! General and canonical quintics, the quadratic Tschirnhaus reduction
//! between them, and the canonical discriminant.

mod tschirnhaus;

use num_complex::Complex;
use num_traits::Zero;

use crate::abcpoly::AbcPoly;
use crate::roots::{self, AberthOptions};
use crate::scalar::{Real, Scalar};
use crate::Result;

pub use tschirnhaus::{tschirnhaus_back, tschirnhaus_reduce, TschirnhausRecord};

/// `x^5 + a1 x^4 + a2 x^3 + a3 x^2 + a4 x + a5`, stored as `a = [a1, .., a5]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GeneralQuintic<F> {
    pub a: [Complex<F>; 5],
}

impl<F: Real> GeneralQuintic<F> {
    pub fn new(a: [Complex<F>; 5]) -> Self {
        GeneralQuintic { a }
    }

    pub fn from_real(a: [F; 5]) -> Self {
        GeneralQuintic { a: a.map(|x| Complex::new(x, F::zero())) }
    }

    /// Coefficients, constant term first.
    pub fn ascending(&self) -> [Complex<F>; 6] {
        let a = &self.a;
        [a[4], a[3], a[2], a[1], a[0], Complex::new(F::one(), F::zero())]
    }

    pub fn eval(&self, x: Complex<F>) -> Complex<F> {
        self.ascending().iter().rev().fold(Complex::zero(), |acc, c| acc * x + c)
    }

    /// Relative backward error of `x` as a root.
    pub fn residual(&self, x: Complex<F>) -> F {
        roots::backward_error(&self.ascending(), x)
    }

    /// `max |a_k|^(1/k)`, the natural size of the roots.
    pub fn root_scale(&self) -> F {
        self.a
            .iter()
            .enumerate()
            .map(|(k, c)| c.norm().powf(F::one() / F::from_usize(k + 1).unwrap()))
            .fold(F::zero(), F::max)
    }

    /// Reference roots from simultaneous iteration, sorted.
    pub fn oracle_roots(&self) -> Result<Vec<Complex<F>>> {
        roots::aberth(&self.ascending(), AberthOptions::default())
    }

    /// The quintic in `u = x + a1/5`, and the shift `a1/5`.
    pub fn depressed(&self) -> (GeneralQuintic<F>, Complex<F>) {
        let shift = self.a[0] / F::lit(5.0);
        let mut c = self.ascending();
        let t = -shift;
        // Taylor shift: coefficients of p(u + t)
        for i in 0..5 {
            for j in (i..5).rev() {
                let next = c[j + 1];
                c[j] = c[j] + t * next;
            }
        }
        let mut d = GeneralQuintic::new([c[4], c[3], c[2], c[1], c[0]]);
        d.a[0] = Complex::zero();
        (d, shift)
    }

    /// Discriminant `prod_{i<j} (x_i - x_j)^2`, as the Hankel determinant of
    /// the power sums `p_0 .. p_8`.
    pub fn discriminant(&self) -> Complex<F> {
        let p = power_sums_from(self, 8);
        let mut m = [[Complex::zero(); 5]; 5];
        for (i, row) in m.iter_mut().enumerate() {
            for (j, x) in row.iter_mut().enumerate() {
                *x = p[i + j];
            }
        }
        det5(m)
    }
}

/// `y^5 + 5 alpha y^2 + 5 beta y + gamma`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CanonicalQuintic<F> {
    pub alpha: Complex<F>,
    pub beta: Complex<F>,
    pub gamma: Complex<F>,
}

impl<F: Real> CanonicalQuintic<F> {
    pub fn new(alpha: Complex<F>, beta: Complex<F>, gamma: Complex<F>) -> Self {
        CanonicalQuintic { alpha, beta, gamma }
    }

    pub fn from_real(alpha: F, beta: F, gamma: F) -> Self {
        let c = |x| Complex::new(x, F::zero());
        CanonicalQuintic::new(c(alpha), c(beta), c(gamma))
    }

    pub fn as_general(&self) -> GeneralQuintic<F> {
        let five = F::lit(5.0);
        GeneralQuintic::new([
            Complex::zero(),
            Complex::zero(),
            self.alpha * five,
            self.beta * five,
            self.gamma,
        ])
    }

    pub fn eval(&self, y: Complex<F>) -> Complex<F> {
        self.as_general().eval(y)
    }

    pub fn residual(&self, y: Complex<F>) -> F {
        self.as_general().residual(y)
    }

    pub fn is_zero(&self) -> bool {
        self.alpha.is_zero() && self.beta.is_zero() && self.gamma.is_zero()
    }

    /// `max(|alpha|^(1/3), |beta|^(1/4), |gamma|^(1/5))`: the size of the
    /// roots, consistent with the weights 3, 4, 5.
    pub fn scale(&self) -> F {
        let r = |c: Complex<F>, w: f64| c.norm().powf(F::lit(1.0 / w));
        r(self.alpha, 3.0).max(r(self.beta, 4.0)).max(r(self.gamma, 5.0))
    }

    pub fn discriminant(&self) -> Complex<F> {
        discriminant(&self.alpha, &self.beta, &self.gamma)
    }

    pub fn oracle_roots(&self) -> Result<Vec<Complex<F>>> {
        self.as_general().oracle_roots()
    }
}

/// `p_1 .. p_up_to` of the roots, by Newton's identities.
pub fn power_sums<F: Real>(q: &GeneralQuintic<F>, up_to: usize) -> Vec<Complex<F>> {
    assert!(up_to >= 1, "power sums start at p_1");
    power_sums_from(q, up_to).split_off(1)
}

// p_0 .. p_up_to
pub(crate) fn power_sums_from<F: Real>(q: &GeneralQuintic<F>, up_to: usize) -> Vec<Complex<F>> {
    let mut p = vec![Complex::new(F::lit(5.0), F::zero())];
    for k in 1..=up_to {
        let mut s: Complex<F> = Complex::zero();
        for i in 1..k.min(6) {
            s = s + q.a[i - 1] * p[k - i];
        }
        if k <= 5 {
            s = s + q.a[k - 1] * F::from_usize(k).unwrap();
        }
        p.push(-s);
    }
    p
}

/// Discriminant of the canonical quintic, normalised so that
/// `prod_{i<j} (y_i - y_j)^2 = 3125 D`.
pub const DISCRIMINANT: AbcPoly = AbcPoly::new(&[
    (108, [5, 0, 1]),
    (-135, [4, 2, 0]),
    (90, [2, 1, 2]),
    (-320, [1, 3, 1]),
    (256, [0, 5, 0]),
    (1, [0, 0, 4]),
]);

pub fn discriminant<T: Scalar>(alpha: &T, beta: &T, gamma: &T) -> T {
    DISCRIMINANT.eval(alpha, beta, gamma)
}

/// Principal square root; on the negative real axis (either sign of zero
/// imaginary part) the result is `+i sqrt|D|`.
pub fn nabla<F: Real>(d: Complex<F>) -> Complex<F> {
    if d.im.is_zero() && d.re < F::zero() {
        Complex::new(F::zero(), (-d.re).sqrt())
    } else {
        d.sqrt()
    }
}

// Gaussian elimination with partial pivoting.
fn det5<F: Real>(mut m: [[Complex<F>; 5]; 5]) -> Complex<F> {
    let mut det = Complex::new(F::one(), F::zero());
    for col in 0..5 {
        let piv = (col..5)
            .max_by(|&a, &b| m[a][col].norm().partial_cmp(&m[b][col].norm()).unwrap_or(std::cmp::Ordering::Equal))
            .unwrap();
        if m[piv][col].is_zero() {
            return Complex::zero();
        }
        if piv != col {
            m.swap(piv, col);
            det = -det;
        }
        det = det * m[col][col];
        for r in col + 1..5 {
            let factor = m[r][col] / m[col][col];
            for c in col..5 {
                let v = m[col][c];
                m[r][c] = m[r][c] - factor * v;
            }
        }
    }
    det
}
