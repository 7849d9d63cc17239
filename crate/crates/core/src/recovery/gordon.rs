//! Gordon's forms `M1`, `N1`, linear in `mu`, and the identities that let
//! the roots be written in `lambda` alone.

use num_complex::Complex;

use crate::certify::Certificate;
use crate::icosa::binary_ring;
use crate::invariantmap::formulas::{M_SYM2, R2, S2};
use crate::invariantmap::segre::segre;
use crate::polyalg::{transvectant_rs, MPoly};
use crate::quintic::DISCRIMINANT;
use crate::scalar::Scalar;
use crate::CycQ;

use super::cube::cube;

/// `(N1, M1)` in `l1, l2, m1, m2`.
pub fn gordon_forms() -> (MPoly, MPoly) {
    let s = segre();
    (s.n1.clone(), s.m1.clone())
}

/// `m = M1 f2` and `n = N1 f1^2 T2` from the closed forms, for the
/// `nabla` that pairs with `Z1`.
pub fn linear_form_values<T: Scalar>(alpha: &T, beta: &T, gamma: &T, nabla: &T) -> (T, T) {
    let m = M_SYM2.eval(alpha, beta, gamma).scaled(1, 2) - (nabla.clone() * alpha.clone()).scaled(1, 2);
    let n = R2.eval(alpha, beta, gamma).scaled(1, 2)
        + (nabla.clone() * S2.eval(alpha, beta, gamma)).scaled(1, 2);
    (m, n)
}

fn eq(name: &str, f: impl FnOnce() -> (MPoly, MPoly)) -> Certificate {
    Certificate::timed(name, || {
        let (a, b) = f();
        let ok = a == b;
        (ok, if ok { format!("{} terms", a.len()) } else { format!("difference: {} terms", (&a - &b).len()) })
    })
}

pub fn gordon_certificates() -> Vec<Certificate> {
    let s = segre();
    let lam = ("l1", "l2");
    let mu = ("m1", "m2");
    let mut out = vec![
        eq("(alpha, beta)_{0,3} = 6 N1", || {
            (transvectant_rs(&s.alpha, &s.beta, lam, 0, mu, 3).expect("degrees suffice"), s.n1.scale_int(6))
        }),
        eq("((alpha, alpha)_{0,2}, N1)_{0,1} = 8 M1", || {
            let aa = transvectant_rs(&s.alpha, &s.alpha, lam, 0, mu, 2).expect("degrees suffice");
            (transvectant_rs(&aa, &s.n1, lam, 0, mu, 1).expect("degrees suffice"), s.m1.scale_int(8))
        }),
        eq("(M1 f2 - M2 f1)^2 = D alpha^2", || {
            let mf = &s.m1 * &s.f2;
            let diff = &mf - &s.r_action(&mf);
            (&diff * &diff, &s.abc(&DISCRIMINANT) * &s.alpha.pow(2))
        }),
        eq("M1 f2 + M2 f1 = 11 a^3 b + 2 b^2 c - a c^2", || {
            let mf = &s.m1 * &s.f2;
            (&mf + &s.r_action(&mf), s.abc(&M_SYM2))
        }),
        eq("det [M1; N1] in (m1, m2) = H1", || {
            let d = |p: &MPoly, v: &str| p.partial(v).expect("Segre variable");
            let det = &(&d(&s.m1, "m1") * &d(&s.n1, "m2")) - &(&d(&s.m1, "m2") * &d(&s.n1, "m1"));
            (det, s.h1.clone())
        }),
    ];
    out.extend(bc_certificates());
    out
}

// (b_nu, c_nu) in the binary ring from the row vector times matrix display
fn bc_from_matrix(nu: i64) -> (MPoly, MPoly) {
    let ring = binary_ring();
    let e = |k: i64, sign: i64, exps: [u32; 2]| {
        ring.monomial(exps.iter().copied().collect(), CycQ::eps_pow(k * nu).scale_int(sign))
    };
    let row = [
        &e(4, 1, [1, 0]) + &e(3, -1, [0, 1]),
        &e(2, 1, [1, 0]) + &e(1, 1, [0, 1]),
    ];
    let m00 = ring.from_int_terms(&[(-1, &[7, 0]), (7, &[2, 5])]);
    let m01 = ring.from_int_terms(&[(26, &[10, 3]), (-39, &[5, 8]), (-1, &[0, 13])]);
    let m10 = ring.from_int_terms(&[(-7, &[5, 2]), (-1, &[0, 7])]);
    let m11 = ring.from_int_terms(&[(1, &[13, 0]), (-39, &[8, 5]), (-26, &[3, 10])]);
    (&(&row[0] * &m00) + &(&row[1] * &m10), &(&row[0] * &m01) + &(&row[1] * &m11))
}

fn twist(p: &MPoly, nu: i64, phase: i64) -> MPoly {
    let ring = binary_ring();
    let z1 = ring.var("z1").expect("binary variable").scale(&CycQ::eps_pow(nu));
    p.substitute(&[("z1", z1)]).expect("same ring").scale(&CycQ::eps_pow(phase * nu))
}

fn bc_certificates() -> Vec<Certificate> {
    let s = segre();
    let cp = cube();
    let ys = s.roots();
    let mut out = Vec::new();
    out.push(Certificate::timed("b_nu = e^nu B(e^nu l1, l2), c_nu = e^3nu C(e^nu l1, l2)", || {
        let bad: Vec<i64> = (0..5)
            .filter(|&nu| {
                let (b, c) = bc_from_matrix(nu);
                b != twist(&cp.b, nu, 1) || c != twist(&cp.c, nu, 3)
            })
            .collect();
        (bad.is_empty(), format!("nu = 0..4; failing {bad:?}"))
    }));
    out.push(Certificate::timed("H1 y_nu = b_nu M1 + c_nu N1", || {
        let bad: Vec<usize> = (0..5)
            .filter(|&i| {
                let nu = (i as i64 + 1) % 5;
                let (b, c) = bc_from_matrix(nu);
                let lift = |p: &MPoly| p.embed_into(&s.ring, &[0, 1]);
                &s.h1 * &ys[i] != &(&lift(&b) * &s.m1) + &(&lift(&c) * &s.n1)
            })
            .collect();
        (bad.is_empty(), format!("nu = 1..5; failing {bad:?}"))
    }));
    out
}

/// Numeric value of `y_nu` at a Segre point, for tests.
pub fn segre_root<F: crate::scalar::Real>(pt: &[Complex<F>; 4], nu: i64) -> Complex<F> {
    let e = |k: i64| crate::exactfield::eps_embed::<F>(k * nu);
    e(4) * pt[0] * pt[2] - e(3) * pt[1] * pt[2] + e(2) * pt[0] * pt[3] + e(1) * pt[1] * pt[3]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rat;

    #[test]
    fn certificates() {
        for c in gordon_certificates() {
            assert!(c.passed, "{}: {}", c.name, c.detail);
        }
    }

    #[test]
    fn displayed_coefficients() {
        let (n1, m1) = gordon_forms();
        assert_eq!(n1.rat_coeff(&[5, 2, 1, 0]), Some(Rat::from_integer(7.into())));
        assert_eq!(m1.rat_coeff(&[13, 0, 1, 0]), Some(Rat::from_integer(1.into())));
    }

    #[test]
    fn linear_form_examples() {
        assert_eq!(linear_form_values(&0.0, &1.0, &0.0, &16.0), (0.0, 0.0));
        let nab = 109f64.sqrt();
        let (m, n) = linear_form_values(&1.0, &0.0, &1.0, &nab);
        assert!((m + (1.0 + nab) / 2.0).abs() < 1e-12);
        assert!((n - (65.0 / 2.0 - 4.5 * nab)).abs() < 1e-12);
    }
}
