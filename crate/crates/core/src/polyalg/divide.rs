use num_traits::Zero;

use super::{MPoly, Monomial, PolyError};

impl MPoly {
    /// Exact quotient `q` with `self = divisor * q`.
    ///
    /// Runs multivariate division by leading terms in lexicographic order and
    /// fails with [`PolyError::NotDivisible`] as soon as a leading term cannot
    /// be cancelled.
    pub fn exact_divide(&self, divisor: &MPoly) -> Result<MPoly, PolyError> {
        self.same_ring(divisor)?;
        let (lm, lc) = match divisor.leading() {
            Some((m, c)) => (m.clone(), c.clone()),
            None => return Err(PolyError::DivisionByZero),
        };
        let lc_inv = lc.checked_inv().map_err(|_| PolyError::DivisionByZero)?;
        let mut rem = self.clone();
        let mut quot = self.vars.zero();
        while let Some((rm, rc)) = rem.leading() {
            if rm.iter().zip(lm.iter()).any(|(a, b)| a < b) {
                return Err(PolyError::NotDivisible);
            }
            let qm: Monomial = rm.iter().zip(lm.iter()).map(|(a, b)| a - b).collect();
            let qc = rc * &lc_inv;
            debug_assert!(!qc.is_zero());
            let t = self.vars.monomial(qm, qc);
            rem = &rem - &(&t * divisor);
            quot = &quot + &t;
        }
        Ok(quot)
    }
}

/// Free-function form of [`MPoly::exact_divide`].
pub fn exact_divide(a: &MPoly, b: &MPoly) -> Result<MPoly, PolyError> {
    a.exact_divide(b)
}
