//! Integer polynomials in the canonical-quintic coefficients `(alpha, beta, gamma)`.
//!
//! The closed-form resolvent expressions are stored once as term tables and
//! evaluated on any [`Scalar`]: complex floats for the solver, exact
//! rationals for spot values, and polynomials in the root parametrisation
//! for the identity certificates.

use crate::polyalg::{MPoly, Monomial, VarSet};
use crate::scalar::Scalar;
use crate::CycQ;

/// `sum c * alpha^i beta^j gamma^k` with no constant term.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AbcPoly {
    pub terms: &'static [(i64, [u32; 3])],
}

impl AbcPoly {
    pub const fn new(terms: &'static [(i64, [u32; 3])]) -> Self {
        AbcPoly { terms }
    }

    /// Evaluates at `(a, b, c)`.
    pub fn eval<T: Scalar>(&self, a: &T, b: &T, c: &T) -> T {
        let mut cache = PowCache::new([a.clone(), b.clone(), c.clone()]);
        let mut acc: Option<T> = None;
        for &(coef, e) in self.terms {
            let mut mono: Option<T> = None;
            for (v, &k) in e.iter().enumerate() {
                if k > 0 {
                    let p = cache.get(v, k);
                    mono = Some(match mono {
                        Some(m) => m * p,
                        None => p,
                    });
                }
            }
            let term = mono.expect("AbcPoly terms have positive degree").scaled(coef, 1);
            acc = Some(match acc {
                Some(s) => s + term,
                None => term,
            });
        }
        acc.expect("AbcPoly is non-empty")
    }

    /// Weighted degree with weights `(3, 4, 5)`.
    pub fn weight(&self) -> u32 {
        self.terms.iter().map(|(_, e)| 3 * e[0] + 4 * e[1] + 5 * e[2]).max().unwrap_or(0)
    }

    /// The same polynomial as an exact [`MPoly`] in `alpha, beta, gamma`.
    pub fn to_mpoly(&self, ring: &VarSet) -> MPoly {
        assert_eq!(ring.len(), 3);
        let mut out = ring.zero();
        for &(c, e) in self.terms {
            let m: Monomial = e.iter().copied().collect();
            out = &out + &ring.monomial(m, CycQ::from_int(c));
        }
        out
    }
}

struct PowCache<T> {
    base: [T; 3],
    pows: [Vec<T>; 3],
}

impl<T: Scalar> PowCache<T> {
    fn new(base: [T; 3]) -> Self {
        PowCache { base, pows: [Vec::new(), Vec::new(), Vec::new()] }
    }

    // base[v]^k, k >= 1
    fn get(&mut self, v: usize, k: u32) -> T {
        let list = &mut self.pows[v];
        while list.len() < k as usize {
            let next = match list.last() {
                Some(p) => p.clone() * self.base[v].clone(),
                None => self.base[v].clone(),
            };
            list.push(next);
        }
        list[k as usize - 1].clone()
    }
}

/// The ring `Q(e)[alpha, beta, gamma]`.
pub fn abc_ring() -> VarSet {
    VarSet::new(&["alpha", "beta", "gamma"])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rat;

    const SAMPLE: AbcPoly = AbcPoly::new(&[(1, [4, 0, 0]), (-1, [0, 3, 0]), (1, [1, 1, 1])]);

    #[test]
    fn evaluates_on_several_rings() {
        assert_eq!(SAMPLE.eval(&2.0, &3.0, &5.0), 16.0 - 27.0 + 30.0);
        let r = |n: i64| Rat::from_integer(n.into());
        assert_eq!(SAMPLE.eval(&r(2), &r(3), &r(5)), r(19));
        let ring = abc_ring();
        let sym = SAMPLE.eval(
            &ring.var("alpha").unwrap(),
            &ring.var("beta").unwrap(),
            &ring.var("gamma").unwrap(),
        );
        assert_eq!(sym, SAMPLE.to_mpoly(&ring));
        assert_eq!(SAMPLE.weight(), 12);
    }
}
