use num_traits::Zero;

use super::{MPoly, Monomial, PolyError};
use crate::{CycQ, Rat};

impl MPoly {
    /// Formal partial derivative with respect to `var`.
    pub fn partial(&self, var: &str) -> Result<MPoly, PolyError> {
        let i = self.vars.index(var)?;
        Ok(self.partial_idx(i, 1))
    }

    /// `times`-fold derivative in variable index `i`.
    pub fn partial_idx(&self, i: usize, times: u32) -> MPoly {
        if times == 0 {
            return self.clone();
        }
        let mut out = self.vars.zero();
        for (m, c) in &self.terms {
            let e = m[i];
            if e < times {
                continue;
            }
            // falling factorial e (e-1) ... (e-times+1)
            let k: i64 = (0..times).map(|t| (e - t) as i64).product();
            let mut m2: Monomial = m.clone();
            m2[i] -= times;
            out.add_term(m2, &c.scale_rat(&Rat::from_integer(k.into())));
        }
        out
    }
}

/// `p_11 p_22 - p_12 p_21` in the variables `v1`, `v2`.
pub fn hessian_det(p: &MPoly, v1: &str, v2: &str) -> Result<MPoly, PolyError> {
    let p1 = p.partial(v1)?;
    let p2 = p.partial(v2)?;
    let p11 = p1.partial(v1)?;
    let p12 = p1.partial(v2)?;
    let p21 = p2.partial(v1)?;
    let p22 = p2.partial(v2)?;
    Ok(&(&p11 * &p22) - &(&p12 * &p21))
}

/// `p_1 q_2 - p_2 q_1` in the variables `v1`, `v2`.
pub fn jacobian_det(p: &MPoly, q: &MPoly, v1: &str, v2: &str) -> Result<MPoly, PolyError> {
    p.same_ring(q)?;
    let lhs = &p.partial(v1)? * &q.partial(v2)?;
    let rhs = &p.partial(v2)? * &q.partial(v1)?;
    Ok(&lhs - &rhs)
}

fn factorial(n: u32) -> i64 {
    (1..=n as i64).product()
}

// (-1)^i / (i! (r-i)!)
fn transvectant_weight(r: u32, i: u32) -> CycQ {
    let sign = if i % 2 == 0 { 1 } else { -1 };
    CycQ::from_ratio(sign, factorial(i) * factorial(r - i))
}

fn check_degree(p: &MPoly, idx: &[usize], order: u32) -> Result<(), PolyError> {
    match p.degree_in(idx) {
        Some(d) if d < order => Err(PolyError::DegreeTooLow { order, degree: d }),
        _ => Ok(()),
    }
}

/// `r`-th transvectant of `f`, `g` in the variable pair `pair`:
/// `sum_i (-1)^i / (i!(r-i)!) d^r f / d1^(r-i) d2^i * d^r g / d1^i d2^(r-i)`.
pub fn transvectant(f: &MPoly, g: &MPoly, pair: (&str, &str), r: u32) -> Result<MPoly, PolyError> {
    f.same_ring(g)?;
    let (a, b) = (f.vars.index(pair.0)?, f.vars.index(pair.1)?);
    check_degree(f, &[a, b], r)?;
    check_degree(g, &[a, b], r)?;
    let mut out = f.vars.zero();
    for i in 0..=r {
        let df = f.partial_idx(a, r - i).partial_idx(b, i);
        let dg = g.partial_idx(a, i).partial_idx(b, r - i);
        let term = (&df * &dg).scale(&transvectant_weight(r, i));
        out = &out + &term;
    }
    Ok(out)
}

/// Bilinear `(r, s)` transvectant: order `r` in the pair `lam` and order `s`
/// in the pair `mu`.
pub fn transvectant_rs(
    f: &MPoly,
    g: &MPoly,
    lam: (&str, &str),
    r: u32,
    mu: (&str, &str),
    s: u32,
) -> Result<MPoly, PolyError> {
    f.same_ring(g)?;
    let vars = &f.vars;
    let (l1, l2) = (vars.index(lam.0)?, vars.index(lam.1)?);
    let (m1, m2) = (vars.index(mu.0)?, vars.index(mu.1)?);
    for p in [f, g] {
        check_degree(p, &[l1, l2], r)?;
        check_degree(p, &[m1, m2], s)?;
    }
    let mut out = vars.zero();
    for i in 0..=r {
        let fi = f.partial_idx(l1, r - i).partial_idx(l2, i);
        let gi = g.partial_idx(l1, i).partial_idx(l2, r - i);
        if fi.is_zero() || gi.is_zero() {
            continue;
        }
        for j in 0..=s {
            let fij = fi.partial_idx(m1, s - j).partial_idx(m2, j);
            let gij = gi.partial_idx(m1, j).partial_idx(m2, s - j);
            if fij.is_zero() || gij.is_zero() {
                continue;
            }
            let w = &transvectant_weight(r, i) * &transvectant_weight(s, j);
            if w.is_zero() {
                continue;
            }
            out = &out + &(&fij * &gij).scale(&w);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyalg::VarSet;
    use proptest::prelude::*;

    fn r() -> VarSet {
        VarSet::new(&["z1", "z2"])
    }

    fn f() -> MPoly {
        r().from_int_terms(&[(1, &[11, 1]), (11, &[6, 6]), (-1, &[1, 11])])
    }

    #[test]
    fn partial_examples() {
        let r = r();
        let p = r.from_int_terms(&[(1, &[2, 1])]);
        assert_eq!(p.partial("z1").unwrap(), r.from_int_terms(&[(2, &[1, 1])]));
        assert!(r.int(7).partial("z1").unwrap().is_zero());
        assert!(matches!(p.partial("w"), Err(PolyError::UnknownVariable(_))));
        // term-by-term oracle for df/dz1
        let expected = r.from_int_terms(&[(11, &[10, 1]), (66, &[5, 6]), (-1, &[0, 11])]);
        assert_eq!(f().partial("z1").unwrap(), expected);
    }

    #[test]
    fn hessian_and_jacobian_basics() {
        let r = r();
        let xy = r.from_int_terms(&[(1, &[1, 1])]);
        assert_eq!(hessian_det(&xy, "z1", "z2").unwrap(), r.int(-1));
        let (a, b) = (r.var("z1").unwrap(), r.var("z2").unwrap());
        assert_eq!(jacobian_det(&a, &b, "z1", "z2").unwrap(), r.int(1));
        let h = hessian_det(&f(), "z1", "z2").unwrap();
        assert_eq!(h.total_degree(), Some(20));
        assert!(h.is_homogeneous());
        let j = jacobian_det(&f(), &h, "z1", "z2").unwrap();
        assert_eq!(j.total_degree(), Some(30));
    }

    #[test]
    fn transvectant_order_zero_and_one() {
        let g = r().from_int_terms(&[(3, &[2, 1]), (-2, &[0, 3])]);
        assert_eq!(transvectant(&f(), &g, ("z1", "z2"), 0).unwrap(), &f() * &g);
        // (f, g)_1 is the Jacobian with unit prefactor.
        assert_eq!(
            transvectant(&f(), &g, ("z1", "z2"), 1).unwrap(),
            jacobian_det(&f(), &g, "z1", "z2").unwrap()
        );
        assert!(matches!(
            transvectant(&f(), &g, ("z1", "z2"), 4),
            Err(PolyError::DegreeTooLow { order: 4, degree: 3 })
        ));
    }

    fn homogeneous(deg: u32) -> impl Strategy<Value = MPoly> {
        prop::collection::vec(-9i64..=9, (deg + 1) as usize).prop_map(move |cs| {
            let r = r();
            let mut p = r.zero();
            for (k, c) in cs.into_iter().enumerate() {
                p.add_term(Monomial::from_slice(&[k as u32, deg - k as u32]), &CycQ::from_int(c));
            }
            p
        })
    }

    proptest! {
        #[test]
        fn euler_identity(p in homogeneous(7)) {
            let lhs = &(&r().var("z1").unwrap() * &p.partial("z1").unwrap())
                + &(&r().var("z2").unwrap() * &p.partial("z2").unwrap());
            prop_assert_eq!(lhs, p.scale(&CycQ::from_int(7)));
        }
    }
}
