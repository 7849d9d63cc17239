//! Sparse multivariate polynomials over [`CycQ`] and the classical covariant
//! operators on binary forms.

mod covariant;
mod divide;
mod eval;

pub use covariant::{hessian_det, jacobian_det, transvectant, transvectant_rs};
pub use divide::exact_divide;

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_traits::{One, Zero};
use smallvec::SmallVec;
use thiserror::Error;

use crate::scalar::Scalar;
use crate::{CycQ, Rat};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("variable lists differ: {0:?} vs {1:?}")]
    VariableMismatch(Vec<String>, Vec<String>),
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("transvectant order {order} exceeds degree {degree}")]
    DegreeTooLow { order: u32, degree: u32 },
    #[error("polynomial is not divisible by the given divisor")]
    NotDivisible,
    #[error("division by the zero polynomial")]
    DivisionByZero,
}

/// Exponent vector, one entry per variable.
pub type Monomial = SmallVec<[u32; 4]>;

/// Ordered list of variable names shared by polynomials of one ring.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VarSet(Arc<[String]>);

impl VarSet {
    pub fn new(names: &[&str]) -> Self {
        VarSet(names.iter().map(|s| s.to_string()).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.0
    }

    pub fn index(&self, name: &str) -> Result<usize, PolyError> {
        self.0
            .iter()
            .position(|v| v == name)
            .ok_or_else(|| PolyError::UnknownVariable(name.to_string()))
    }

    pub fn zero(&self) -> MPoly {
        MPoly { vars: self.clone(), terms: BTreeMap::new() }
    }

    pub fn constant(&self, c: CycQ) -> MPoly {
        let mut p = self.zero();
        if !c.is_zero() {
            p.terms.insert(self.unit_monomial(), c);
        }
        p
    }

    pub fn int(&self, n: i64) -> MPoly {
        self.constant(CycQ::from_int(n))
    }

    /// The polynomial consisting of the single variable `name`.
    pub fn var(&self, name: &str) -> Result<MPoly, PolyError> {
        let i = self.index(name)?;
        let mut m = self.unit_monomial();
        m[i] = 1;
        Ok(self.monomial(m, CycQ::one()))
    }

    pub fn monomial(&self, exps: Monomial, c: CycQ) -> MPoly {
        assert_eq!(exps.len(), self.len(), "exponent vector length");
        let mut p = self.zero();
        if !c.is_zero() {
            p.terms.insert(exps, c);
        }
        p
    }

    /// Builds a polynomial from integer-coefficient terms.
    pub fn from_int_terms(&self, terms: &[(i64, &[u32])]) -> MPoly {
        let mut p = self.zero();
        for &(c, e) in terms {
            p.add_term(e.iter().copied().collect(), &CycQ::from_int(c));
        }
        p
    }

    fn unit_monomial(&self) -> Monomial {
        SmallVec::from_elem(0, self.len())
    }
}

impl fmt::Debug for VarSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.0.iter()).finish()
    }
}

/// A sparse polynomial in a fixed ordered variable list.
///
/// Terms are kept in lexicographic exponent order (first variable most
/// significant) and never store zero coefficients.
#[derive(Clone, PartialEq, Eq)]
pub struct MPoly {
    vars: VarSet,
    terms: BTreeMap<Monomial, CycQ>,
}

/// Operation selector for [`poly_arith`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PolyOp {
    Add,
    Sub,
    Mul,
    Pow(u32),
}

/// Exact polynomial arithmetic; `Pow` ignores `b`.
pub fn poly_arith(a: &MPoly, b: &MPoly, op: PolyOp) -> Result<MPoly, PolyError> {
    match op {
        PolyOp::Add => a.checked_add(b),
        PolyOp::Sub => a.checked_sub(b),
        PolyOp::Mul => a.checked_mul(b),
        PolyOp::Pow(n) => Ok(a.pow(n)),
    }
}

impl MPoly {
    pub fn vars(&self) -> &VarSet {
        &self.vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &CycQ)> {
        self.terms.iter()
    }

    /// Coefficient of the given exponent vector (zero when absent).
    pub fn coeff(&self, exps: &[u32]) -> CycQ {
        self.terms.get(exps).cloned().unwrap_or_else(CycQ::zero)
    }

    /// Coefficient as a rational, when it is one.
    pub fn rat_coeff(&self, exps: &[u32]) -> Option<Rat> {
        self.coeff(exps).as_rational().cloned()
    }

    /// Leading term in lexicographic order.
    pub fn leading(&self) -> Option<(&Monomial, &CycQ)> {
        self.terms.iter().next_back()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.iter().sum()).max()
    }

    /// Maximum combined degree in the listed variable indices.
    pub fn degree_in(&self, idx: &[usize]) -> Option<u32> {
        self.terms.keys().map(|m| idx.iter().map(|&i| m[i]).sum()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(|m| m.iter().sum::<u32>());
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    /// True when every coefficient lies in `Q`.
    pub fn is_rational(&self) -> bool {
        self.terms.values().all(CycQ::is_rational)
    }

    pub(crate) fn add_term(&mut self, exps: Monomial, c: &CycQ) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(exps) {
            Entry::Vacant(v) => {
                v.insert(c.clone());
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn same_ring(&self, other: &MPoly) -> Result<(), PolyError> {
        if self.vars == other.vars {
            Ok(())
        } else {
            Err(PolyError::VariableMismatch(
                self.vars.names().to_vec(),
                other.vars.names().to_vec(),
            ))
        }
    }

    pub fn checked_add(&self, other: &MPoly) -> Result<MPoly, PolyError> {
        self.same_ring(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c);
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &MPoly) -> Result<MPoly, PolyError> {
        self.same_ring(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), &-c);
        }
        Ok(out)
    }

    pub fn checked_mul(&self, other: &MPoly) -> Result<MPoly, PolyError> {
        self.same_ring(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(self.vars.zero());
        }
        let mut acc: HashMap<Monomial, CycQ> =
            HashMap::with_capacity(self.len().saturating_mul(other.len()).min(1 << 16));
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let m: Monomial = ma.iter().zip(mb.iter()).map(|(x, y)| x + y).collect();
                let c = ca * cb;
                match acc.get_mut(&m) {
                    Some(slot) => *slot += &c,
                    None => {
                        acc.insert(m, c);
                    }
                }
            }
        }
        let terms = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        Ok(MPoly { vars: self.vars.clone(), terms })
    }

    pub fn pow(&self, n: u32) -> MPoly {
        if n == 0 {
            return self.vars.int(1);
        }
        self.pow_pos(n)
    }

    /// Multiplies every coefficient by `c`.
    pub fn scale(&self, c: &CycQ) -> MPoly {
        if c.is_zero() {
            return self.vars.zero();
        }
        MPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(m, x)| (m.clone(), x * c)).collect(),
        }
    }

    pub fn scale_rat(&self, r: &Rat) -> MPoly {
        self.scale(&CycQ::from_rat(r.clone()))
    }

    pub fn scale_int(&self, n: i64) -> MPoly {
        self.scale(&CycQ::from_int(n))
    }

    /// Applies `f` to every coefficient, dropping zeros.
    pub fn map_coeffs(&self, f: impl Fn(&CycQ) -> CycQ) -> MPoly {
        MPoly {
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), f(c)))
                .filter(|(_, c)| !c.is_zero())
                .collect(),
        }
    }

    /// Renames variables into a larger ring, mapping variable `i` of `self`
    /// to position `positions[i]` of `target`.
    pub fn embed_into(&self, target: &VarSet, positions: &[usize]) -> MPoly {
        assert_eq!(positions.len(), self.vars.len());
        let mut out = target.zero();
        for (m, c) in &self.terms {
            let mut e: Monomial = SmallVec::from_elem(0, target.len());
            for (i, &p) in positions.iter().enumerate() {
                e[p] += m[i];
            }
            out.add_term(e, c);
        }
        out
    }
}

impl<'a> Add<&'a MPoly> for &'a MPoly {
    type Output = MPoly;
    /// Panics on mismatched variable lists; see [`MPoly::checked_add`].
    fn add(self, rhs: &MPoly) -> MPoly {
        self.checked_add(rhs).expect("MPoly add")
    }
}

impl<'a> Sub<&'a MPoly> for &'a MPoly {
    type Output = MPoly;
    fn sub(self, rhs: &MPoly) -> MPoly {
        self.checked_sub(rhs).expect("MPoly sub")
    }
}

impl<'a> Mul<&'a MPoly> for &'a MPoly {
    type Output = MPoly;
    fn mul(self, rhs: &MPoly) -> MPoly {
        self.checked_mul(rhs).expect("MPoly mul")
    }
}

impl Add for MPoly {
    type Output = MPoly;
    fn add(self, rhs: MPoly) -> MPoly {
        &self + &rhs
    }
}

impl Sub for MPoly {
    type Output = MPoly;
    fn sub(self, rhs: MPoly) -> MPoly {
        &self - &rhs
    }
}

impl Mul for MPoly {
    type Output = MPoly;
    fn mul(self, rhs: MPoly) -> MPoly {
        &self * &rhs
    }
}

impl Neg for &MPoly {
    type Output = MPoly;
    fn neg(self) -> MPoly {
        MPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl Neg for MPoly {
    type Output = MPoly;
    fn neg(self) -> MPoly {
        -&self
    }
}

impl Scalar for MPoly {
    fn scaled(&self, num: i64, den: i64) -> Self {
        self.scale(&CycQ::from_ratio(num, den))
    }
}

impl fmt::Display for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c})")?;
            for (name, &e) in self.vars.names().iter().zip(m.iter()) {
                match e {
                    0 => {}
                    1 => write!(f, "*{name}")?,
                    _ => write!(f, "*{name}^{e}")?,
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MPoly{:?}[{}]", self.vars, self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn z() -> VarSet {
        VarSet::new(&["z1", "z2"])
    }

    #[test]
    fn square_of_sum() {
        let r = z();
        let (a, b) = (r.var("z1").unwrap(), r.var("z2").unwrap());
        let s = poly_arith(&a, &b, PolyOp::Add).unwrap();
        let sq = poly_arith(&s, &s, PolyOp::Pow(2)).unwrap();
        let expected = r.from_int_terms(&[(1, &[2, 0]), (2, &[1, 1]), (1, &[0, 2])]);
        assert_eq!(sq, expected);
    }

    #[test]
    fn times_zero_is_zero() {
        let r = z();
        let f = r.from_int_terms(&[(1, &[11, 1]), (11, &[6, 6]), (-1, &[1, 11])]);
        assert!((&f * &r.zero()).is_zero());
    }

    #[test]
    fn mismatched_rings_are_rejected() {
        let a = z().var("z1").unwrap();
        let b = VarSet::new(&["x"]).var("x").unwrap();
        assert!(matches!(a.checked_add(&b), Err(PolyError::VariableMismatch(..))));
        assert!(matches!(z().var("w"), Err(PolyError::UnknownVariable(_))));
    }

    #[test]
    fn fifth_power_leading_term() {
        let r = z();
        let f = r.from_int_terms(&[(1, &[11, 1]), (11, &[6, 6]), (-1, &[1, 11])]);
        let f5 = f.pow(5);
        let (m, c) = f5.leading().unwrap();
        assert_eq!(m.as_slice(), &[55, 5]);
        assert_eq!(*c, CycQ::one());
        // Oracle: the number of terms of (x^10 + 11 x^5 - 1)^5 in x^5 is 11.
        assert_eq!(f5.len(), 11);
    }

    fn small_poly() -> impl Strategy<Value = MPoly> {
        prop::collection::vec(((-5i64..=5), 0u32..4, 0u32..4), 1..6).prop_map(|ts| {
            let r = z();
            let mut p = r.zero();
            for (c, a, b) in ts {
                p.add_term(SmallVec::from_slice(&[a, b]), &CycQ::from_int(c));
            }
            p
        })
    }

    proptest! {
        #[test]
        fn ring_laws(a in small_poly(), b in small_poly(), c in small_poly()) {
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert!((&(&a + &b) - &b).checked_sub(&a).unwrap().is_zero());
        }
    }
}
