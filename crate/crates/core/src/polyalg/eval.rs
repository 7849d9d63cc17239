use std::collections::HashMap;

use num_complex::Complex;
use num_traits::{One, Zero};

use super::{MPoly, PolyError, VarSet};
use crate::scalar::Real;
use crate::CycQ;

impl MPoly {
    /// Floating-point evaluation at `point`, one value per variable.
    pub fn evaluate<F: Real>(&self, point: &[Complex<F>]) -> Result<Complex<F>, PolyError> {
        if point.len() != self.vars.len() {
            return Err(PolyError::VariableMismatch(
                self.vars.names().to_vec(),
                vec![format!("<{} values>", point.len())],
            ));
        }
        let mut acc = Complex::zero();
        for (m, c) in &self.terms {
            let mut t = c.embed::<F>();
            for (x, &e) in point.iter().zip(m.iter()) {
                if e > 0 {
                    t = t * x.powu(e);
                }
            }
            acc = acc + t;
        }
        Ok(acc)
    }

    /// Exact evaluation at a point of `Q(e)^n`.
    pub fn evaluate_exact(&self, point: &[CycQ]) -> Result<CycQ, PolyError> {
        if point.len() != self.vars.len() {
            return Err(PolyError::VariableMismatch(
                self.vars.names().to_vec(),
                vec![format!("<{} values>", point.len())],
            ));
        }
        let mut acc = CycQ::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (x, &e) in point.iter().zip(m.iter()) {
                if e > 0 {
                    t = &t * &x.pow(e);
                }
            }
            acc += &t;
        }
        Ok(acc)
    }

    /// Substitutes polynomials for variables.
    ///
    /// All images must share one variable list, which becomes the ring of the
    /// result; variables without an image map to the same-named variable of
    /// that ring.
    pub fn substitute(&self, images: &[(&str, MPoly)]) -> Result<MPoly, PolyError> {
        let target: VarSet = match images.first() {
            Some((_, p)) => p.vars.clone(),
            None => return Ok(self.clone()),
        };
        let mut per_var: Vec<Option<MPoly>> = vec![None; self.vars.len()];
        for (name, img) in images {
            if img.vars != target {
                return Err(PolyError::VariableMismatch(
                    target.names().to_vec(),
                    img.vars.names().to_vec(),
                ));
            }
            per_var[self.vars.index(name)?] = Some(img.clone());
        }
        let per_var: Vec<MPoly> = per_var
            .into_iter()
            .enumerate()
            .map(|(i, img)| match img {
                Some(p) => Ok(p),
                None => target.var(&self.vars.names()[i]),
            })
            .collect::<Result<_, _>>()?;

        if per_var.iter().all(|p| p.len() == 1) {
            return Ok(self.substitute_monomials(&target, &per_var));
        }

        let mut powers: HashMap<(usize, u32), MPoly> = HashMap::new();
        let mut out = target.zero();
        for (m, c) in &self.terms {
            let mut t = target.constant(c.clone());
            for (i, &e) in m.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let pw = powers.entry((i, e)).or_insert_with(|| per_var[i].pow(e));
                t = &t * pw;
            }
            out = &out + &t;
        }
        Ok(out)
    }

    // Every image is a single term c_i * x^{a_i}, so each monomial maps to a
    // single term and no expansion is needed.
    fn substitute_monomials(&self, target: &VarSet, per_var: &[MPoly]) -> MPoly {
        let imgs: Vec<(&super::Monomial, &CycQ)> =
            per_var.iter().map(|p| p.leading().expect("nonzero image")).collect();
        let mut out = target.zero();
        for (m, c) in &self.terms {
            let mut e: super::Monomial = smallvec::SmallVec::from_elem(0, target.len());
            let mut coef = c.clone();
            for (i, &k) in m.iter().enumerate() {
                if k == 0 {
                    continue;
                }
                let (im, ic) = imgs[i];
                for (slot, &x) in e.iter_mut().zip(im.iter()) {
                    *slot += x * k;
                }
                if !ic.is_one() {
                    coef = &coef * &ic.pow(k);
                }
            }
            out.add_term(e, &coef);
        }
        out
    }
}
