//! Exact identity certificates and a runner that collects them.

use std::time::{Duration, Instant};

/// Outcome of one exact identity check.
#[derive(Debug, Clone)]
pub struct Certificate {
    pub name: String,
    pub passed: bool,
    pub detail: String,
    pub elapsed: Duration,
}

impl Certificate {
    /// Runs `check`, which returns `(passed, detail)`, and records its runtime.
    pub fn timed(name: &str, check: impl FnOnce() -> (bool, String)) -> Certificate {
        let start = Instant::now();
        let (passed, detail) = check();
        Certificate { name: name.to_string(), passed, detail, elapsed: start.elapsed() }
    }
}

/// Every exact identity the solver relies on, plus exact spot values.
pub fn run_all() -> Vec<Certificate> {
    let mut out = vec![crate::icosa::verify_syzygy()];
    out.extend(crate::icosa::group_checks());
    out.extend(crate::invariantmap::verify_product_identities());
    out.extend(crate::invariantmap::verify_sign_coherence());
    out.extend(crate::invariantmap::verify_equivariance());
    out.extend(crate::recovery::cube_certificates());
    out.extend(crate::recovery::gordon_certificates());
    out.push(spot_values());
    out
}

/// `f, H, T` at `(1, 1)`, the syzygy there, `D(0,1,0)`, `D(1,1,1)` and
/// `Z(0,1,0)`, all in exact arithmetic.
pub fn spot_values() -> Certificate {
    use crate::invariantmap::icosahedral_invariants_exact;
    use crate::quintic::discriminant;
    use crate::{CycQ, Rat};
    use num_traits::{One, Zero};

    Certificate::timed("exact spot values", || {
        let inv = crate::icosa::invariants();
        let one = [CycQ::one(), CycQ::one()];
        let at = |p: &crate::MPoly| p.evaluate_exact(&one).expect("two variables");
        let (f, h, t) = (at(&inv.f), at(&inv.h), at(&inv.t));
        let int = |n: i64| CycQ::from_int(n);
        let r = |n: i64| Rat::from_integer(n.into());
        let syz = &(&h * &h) * &h + &t * &t;
        let checks = [
            ("f(1,1) = 11", f == int(11)),
            ("H(1,1) = -496", h == int(-496)),
            ("T(1,1) = -20008", t == int(-20008)),
            ("H^3 + T^2 = 278296128", syz == int(278296128)),
            ("1728 f^5 = 278296128", &int(1728) * &f.pow(5) == int(278296128)),
            ("D(0,1,0) = 256", discriminant(&r(0), &r(1), &r(0)) == r(256)),
            ("D(1,1,1) = 0", discriminant(&r(1), &r(1), &r(1)).is_zero()),
            (
                "Z(0,1,0) = 1",
                icosahedral_invariants_exact(&r(0), &r(1), &r(0), &r(16), &r(0)) == Some((r(1), r(1))),
            ),
        ];
        let failed: Vec<&str> = checks.iter().filter(|c| !c.1).map(|c| c.0).collect();
        (failed.is_empty(), if failed.is_empty() { "8 values".into() } else { format!("failed: {failed:?}") })
    })
}

#[cfg(test)]
mod tests {
    #[test]
    fn all_certificates_pass() {
        let certs = super::run_all();
        assert!(certs.len() >= 25);
        for c in certs {
            assert!(c.passed, "{}: {}", c.name, c.detail);
        }
    }
}
