//! The Segre parametrisation of the quadric `sum y = sum y^2 = 0` by
//! `(lambda, mu)` and the exact identities behind the closed forms.

use std::sync::OnceLock;

use smallvec::smallvec;

use super::formulas::{self, p_from_products, q_plus, F1F2, H1H2, M_SYM2, R2, S2, T1T2};
use crate::abcpoly::{abc_ring, AbcPoly};
use crate::certify::Certificate;
use crate::icosa::{generators, invariants, Mat2};
use crate::polyalg::{MPoly, VarSet};
use crate::quintic::{discriminant, DISCRIMINANT};
use crate::{CycQ, Error, Result};

/// Forms in `l1, l2, m1, m2`.
#[derive(Debug, Clone)]
pub struct SegreData {
    pub ring: VarSet,
    pub alpha: MPoly,
    pub beta: MPoly,
    pub gamma: MPoly,
    pub f1: MPoly,
    pub f2: MPoly,
    pub h1: MPoly,
    pub h2: MPoly,
    pub t1: MPoly,
    pub t2: MPoly,
    pub m1: MPoly,
    pub n1: MPoly,
}

pub fn segre_ring() -> VarSet {
    VarSet::new(&["l1", "l2", "m1", "m2"])
}

impl SegreData {
    /// Builds the forms and checks that `alpha, beta, gamma` are the
    /// coefficients of `prod (Y - y_nu)`.
    pub fn build() -> Result<SegreData> {
        let ring = segre_ring();
        let alpha = ring.from_int_terms(&[
            (-1, &[3, 0, 2, 1]),
            (-1, &[2, 1, 0, 3]),
            (-1, &[1, 2, 3, 0]),
            (1, &[0, 3, 1, 2]),
        ]);
        let beta = ring.from_int_terms(&[
            (-1, &[4, 0, 1, 3]),
            (1, &[3, 1, 4, 0]),
            (3, &[2, 2, 2, 2]),
            (-1, &[1, 3, 0, 4]),
            (1, &[0, 4, 3, 1]),
        ]);
        let gamma = ring.from_int_terms(&[
            (-1, &[5, 0, 5, 0]),
            (-1, &[5, 0, 0, 5]),
            (10, &[4, 1, 3, 2]),
            (-10, &[3, 2, 1, 4]),
            (-10, &[2, 3, 4, 1]),
            (-10, &[1, 4, 2, 3]),
            (1, &[0, 5, 5, 0]),
            (-1, &[0, 5, 0, 5]),
        ]);
        let inv = invariants();
        let first = |p: &MPoly| p.embed_into(&ring, &[0, 1]);
        let second = |p: &MPoly| p.embed_into(&ring, &[2, 3]);
        let n1 = ring.from_int_terms(&[
            (7, &[5, 2, 1, 0]),
            (1, &[0, 7, 1, 0]),
            (-1, &[7, 0, 0, 1]),
            (7, &[2, 5, 0, 1]),
        ]);
        let m1 = ring.from_int_terms(&[
            (1, &[13, 0, 1, 0]),
            (-39, &[8, 5, 1, 0]),
            (-26, &[3, 10, 1, 0]),
            (-26, &[10, 3, 0, 1]),
            (39, &[5, 8, 0, 1]),
            (1, &[0, 13, 0, 1]),
        ]);
        let data = SegreData {
            f1: first(&inv.f),
            f2: second(&inv.f),
            h1: first(&inv.h),
            h2: second(&inv.h),
            t1: first(&inv.t),
            t2: second(&inv.t),
            alpha,
            beta,
            gamma,
            m1,
            n1,
            ring,
        };
        let e = data.root_elementary();
        let five = data.ring.int(5);
        let checks = [
            ("e1", e[0].clone(), data.ring.zero()),
            ("e2", e[1].clone(), data.ring.zero()),
            ("-e3", -e[2].clone(), &five * &data.alpha),
            ("e4", e[3].clone(), &five * &data.beta),
            ("-e5", -e[4].clone(), data.gamma.clone()),
        ];
        for (name, got, want) in checks {
            if got != want {
                return Err(Error::InternalMismatch(format!(
                    "{name} of the Segre roots disagrees with the displayed form"
                )));
            }
        }
        Ok(data)
    }

    /// `y_nu = e^{4nu} l1 m1 - e^{3nu} l2 m1 + e^{2nu} l1 m2 + e^nu l2 m2`
    /// for `nu = 1..5`, stored at index `nu - 1`.
    pub fn roots(&self) -> [MPoly; 5] {
        std::array::from_fn(|i| {
            let nu = i as i64 + 1;
            let term = |k: i64, sign: i64, e: [u32; 4]| {
                self.ring.monomial(smallvec![e[0], e[1], e[2], e[3]], CycQ::eps_pow(k * nu).scale_int(sign))
            };
            &(&term(4, 1, [1, 0, 1, 0]) + &term(3, -1, [0, 1, 1, 0]))
                + &(&term(2, 1, [1, 0, 0, 1]) + &term(1, 1, [0, 1, 0, 1]))
        })
    }

    // e1 .. e5 of the five roots
    fn root_elementary(&self) -> Vec<MPoly> {
        let mut e = vec![self.ring.int(1)];
        for y in self.roots() {
            let mut next = e.clone();
            next.push(self.ring.zero());
            for k in 1..next.len() {
                next[k] = &next[k] + &(&e[k - 1] * &y);
            }
            e = next;
        }
        e.split_off(1)
    }

    /// The odd permutation `R = (1243)`:
    /// `([l1, l2], [m1, m2]) -> ([m2, -m1], [l1, l2])`.
    pub fn r_action(&self, p: &MPoly) -> MPoly {
        let v = |n: &str| self.ring.var(n).expect("Segre variable");
        p.substitute(&[("l1", v("m2")), ("l2", -v("m1")), ("m1", v("l1")), ("m2", v("l2"))])
            .expect("same ring")
    }

    /// Acts by `m` on `(l1, l2)` and by `m` with `e -> e^2` on `(m1, m2)`.
    pub fn matrix_action(&self, p: &MPoly, m: &Mat2) -> MPoly {
        let v = |n: &str| self.ring.var(n).expect("Segre variable");
        let lin = |row: &[CycQ; 2], a: &str, b: &str, g: bool| {
            let c = |x: &CycQ| if g { x.galois(2) } else { x.clone() };
            &v(a).scale(&c(&row[0])) + &v(b).scale(&c(&row[1]))
        };
        p.substitute(&[
            ("l1", lin(&m[0], "l1", "l2", false)),
            ("l2", lin(&m[1], "l1", "l2", false)),
            ("m1", lin(&m[0], "m1", "m2", true)),
            ("m2", lin(&m[1], "m1", "m2", true)),
        ])
        .expect("same ring")
    }

    /// A weighted polynomial in `(alpha, beta, gamma)` as a form in `l, m`.
    pub fn abc(&self, p: &AbcPoly) -> MPoly {
        p.eval(&self.alpha, &self.beta, &self.gamma)
    }

    /// `nabla` as a form: `(R(M1 f2) - M1 f2) / alpha`.
    pub fn nabla(&self) -> Result<MPoly> {
        let mf = &self.m1 * &self.f2;
        Ok((&self.r_action(&mf) - &mf).exact_divide(&self.alpha)?)
    }
}

/// Shared instance; building it expands several products of forms.
pub fn segre() -> &'static SegreData {
    static DATA: OnceLock<SegreData> = OnceLock::new();
    DATA.get_or_init(|| SegreData::build().expect("Segre forms are consistent"))
}

fn eq_cert(name: &str, check: impl FnOnce() -> (MPoly, MPoly)) -> Certificate {
    Certificate::timed(name, || {
        let (lhs, rhs) = check();
        let diff = &lhs - &rhs;
        if diff.is_zero() {
            (true, format!("{} terms agree", lhs.len()))
        } else {
            (false, format!("difference has {} terms", diff.len()))
        }
    })
}

/// `f1 f2`, `H1 H2`, `T1 T2` against their closed forms; `R` swapping the
/// subscripts; `p^2 - D q^2 = (H1H2)^3 (f1f2)^5`.
pub fn verify_product_identities() -> Vec<Certificate> {
    let s = segre();
    let mut out = vec![
        eq_cert("f1 f2 = alpha^4 - beta^3 + alpha beta gamma", || (&s.f1 * &s.f2, s.abc(&F1F2))),
        eq_cert("H1 H2 closed form", || (&s.h1 * &s.h2, s.abc(&H1H2))),
        eq_cert("T1 T2 closed form", || (&s.t1 * &s.t2, s.abc(&T1T2))),
    ];
    for (name, a, b) in [("f", &s.f1, &s.f2), ("H", &s.h1, &s.h2), ("T", &s.t1, &s.t2)] {
        out.push(eq_cert(&format!("R swaps {name}1 and {name}2"), || {
            let swapped = &s.r_action(a) - b;
            let back = &s.r_action(b) - a;
            (&swapped * &swapped + &back * &back, s.ring.zero())
        }));
    }
    out.push(Certificate::timed("R fixes alpha, beta, gamma", || {
        let ok = [&s.alpha, &s.beta, &s.gamma].iter().all(|p| s.r_action(p) == **p);
        (ok, "each coefficient form is invariant".into())
    }));
    out.push(Certificate::timed("R^4 = id and R^2 fixes f1, f2", || {
        let r2 = |p: &MPoly| s.r_action(&s.r_action(p));
        let mixed = &s.m1 * &s.alpha;
        let r4 = r2(&r2(&mixed)) == mixed;
        let r2_not_id = r2(&s.m1) != s.m1;
        let fixes = r2(&s.f1) == s.f1 && r2(&s.f2) == s.f2;
        (
            r4 && fixes,
            format!("R^4 = id: {r4}; R^2 fixes f1, f2: {fixes}; R^2 = id: {}", !r2_not_id),
        )
    }));
    out.push(eq_cert("p^2 - D q^2 = (H1H2)^3 (f1f2)^5", || {
        let ring = abc_ring();
        let v = |n: &str| ring.var(n).expect("abc variable");
        let (a, b, c) = (v("alpha"), v("beta"), v("gamma"));
        let (f, h, t) = formulas::resolvent_products(&a, &b, &c);
        let p = p_from_products(&f, &h, &t);
        let q = q_plus(&a, &b, &c);
        let d = discriminant(&a, &b, &c);
        (&(&p * &p) - &(&d * &(&q * &q)), &h.pow(3) * &f.pow(5))
    }));
    out
}

/// Fixes which sign of `q` belongs to `Z1` and that the same `nabla` is
/// used in the root formulas.
pub fn verify_sign_coherence() -> Vec<Certificate> {
    let s = segre();
    let nabla = match s.nabla() {
        Ok(n) => n,
        Err(e) => {
            return vec![Certificate::timed("alpha divides M1 f2 - R(M1 f2)", || (false, e.to_string()))]
        }
    };
    let two = |p: MPoly| p.scale_rat(&crate::Rat::from_integer(2.into()));
    vec![
        eq_cert("nabla^2 = D", || (&nabla * &nabla, s.abc(&DISCRIMINANT))),
        eq_cert("M1 f2 = (2m - alpha nabla)/2, symmetric part", || {
            let mf = &s.m1 * &s.f2;
            (&mf + &s.r_action(&mf), s.abc(&M_SYM2))
        }),
        eq_cert("N1 f1^2 T2 + R(...) = 2r", || {
            let nf = &(&s.n1 * &s.f1.pow(2)) * &s.t2;
            (&nf + &s.r_action(&nf), s.abc(&R2))
        }),
        eq_cert("N1 f1^2 T2 - R(...) = 2s nabla", || {
            let nf = &(&s.n1 * &s.f1.pow(2)) * &s.t2;
            (&nf - &s.r_action(&nf), &s.abc(&S2) * &nabla)
        }),
        eq_cert("H1^3 f2^5 - H2^3 f1^5 = 2 q nabla", || {
            let a = &s.h1.pow(3) * &s.f2.pow(5);
            let b = &s.h2.pow(3) * &s.f1.pow(5);
            let q = q_plus(&s.alpha, &s.beta, &s.gamma);
            (&a - &b, two(&q * &nabla))
        }),
    ]
}

/// `S` and `T` acting on `(l, m)` permute the roots as `(12345)` and
/// `(12)(34)`; the identifications satisfy the quadric.
pub fn verify_equivariance() -> Vec<Certificate> {
    let s = segre();
    let g = generators();
    let ys = s.roots();
    let mut out = Vec::new();
    for (name, m, perm) in [("S", &g.s_matrix, g.s_perm), ("T", &g.t_matrix, g.t_perm)] {
        out.push(Certificate::timed(&format!("{name}-equivariance of the roots"), || {
            let bad: Vec<usize> =
                (0..5).filter(|&i| s.matrix_action(&ys[i], m) != ys[perm[i]]).collect();
            (bad.is_empty(), format!("y_nu -> y_perm(nu); mismatched labels {bad:?}"))
        }));
    }
    out.push(eq_cert("p1 p4 + p2 p3 = 0", || {
        let v = |n: &str| s.ring.var(n).expect("Segre variable");
        let five = |p: MPoly| p.scale_int(5);
        let p1 = five(&v("l1") * &v("m1"));
        let p2 = five(-(&v("l2") * &v("m1")));
        let p3 = five(&v("l1") * &v("m2"));
        let p4 = five(&v("l2") * &v("m2"));
        (&(&p1 * &p4) + &(&p2 * &p3), s.ring.zero())
    }));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::cplx;
    use num_complex::Complex;

    fn assert_all(certs: Vec<Certificate>) {
        for c in certs {
            assert!(c.passed, "{}: {}", c.name, c.detail);
        }
    }

    #[test]
    fn products() {
        assert_all(verify_product_identities());
    }

    #[test]
    fn sign_coherence() {
        assert_all(verify_sign_coherence());
    }

    #[test]
    fn equivariance() {
        assert_all(verify_equivariance());
    }

    #[test]
    fn numeric_agrees_with_symbolic() {
        use rand::{Rng, SeedableRng};
        let s = segre();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..100 {
            let pt: Vec<Complex<f64>> =
                (0..4).map(|_| cplx(rng.gen_range(-1.5..1.5), rng.gen_range(-1.5..1.5))).collect();
            let ev = |p: &MPoly| p.evaluate(&pt).unwrap();
            let (a, b, g) = (ev(&s.alpha), ev(&s.beta), ev(&s.gamma));
            let (f, h, t) = formulas::resolvent_products(&a, &b, &g);
            for (num, sym) in [(f, ev(&s.f1) * ev(&s.f2)), (h, ev(&s.h1) * ev(&s.h2)), (t, ev(&s.t1) * ev(&s.t2))] {
                assert!((num - sym).norm() <= 1e-9 * (1.0 + sym.norm()));
            }
        }
    }
}
