//! One line per acceptance criterion. Runs as a plain binary so the lines
//! always reach the test log; exits non-zero if any criterion fails.

use std::time::{Duration, Instant};

use num_traits::Zero;
use quintic_core::bjseries::{bj_root_series, fuss_catalan, raney_count};
use quintic_core::certify::{spot_values, Certificate};
use quintic_core::invariantmap::{check_degeneracy, verify_equivariance, verify_product_identities, verify_sign_coherence};
use quintic_core::inverter::{
    beta0, finite_difference_schwarzian, invert_icosahedral_traced, inversion_defect, s_inverse, schwarzian_rhs,
    InversionPath,
};
use quintic_core::quintic::{tschirnhaus_reduce, CanonicalQuintic, GeneralQuintic};
use quintic_core::recovery::{cube_certificates, gordon_certificates, solve_canonical};
use quintic_core::roots::match_distance;
use quintic_core::{icosa, solve, Complex64, Rat, SolveMethod};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

struct Outcome {
    passed: bool,
    detail: String,
}

fn certs(list: Vec<Certificate>) -> Outcome {
    let failed: Vec<String> = list.iter().filter(|c| !c.passed).map(|c| format!("{}: {}", c.name, c.detail)).collect();
    Outcome {
        passed: failed.is_empty() && !list.is_empty(),
        detail: if failed.is_empty() { format!("{} certificates", list.len()) } else { failed.join("; ") },
    }
}

fn unit_disc(rng: &mut ChaCha8Rng) -> Complex64 {
    loop {
        let z = Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
        if z.norm() <= 1.0 {
            return z;
        }
    }
}

fn syzygy() -> Outcome {
    certs(vec![icosa::verify_syzygy()])
}

fn products() -> Outcome {
    let list = verify_product_identities();
    certs(list.into_iter().filter(|c| !c.name.contains("q^2") && !c.name.contains("nabla")).collect())
}

fn pq_identity() -> Outcome {
    let list = verify_product_identities();
    certs(list.into_iter().filter(|c| c.name.contains("q^2")).collect())
}

fn gordon() -> Outcome {
    let mut list = gordon_certificates();
    list.extend(cube_certificates());
    list.extend(verify_sign_coherence());
    certs(list)
}

fn group() -> Outcome {
    let mut list = icosa::group_checks();
    list.extend(verify_equivariance());
    certs(list)
}

fn spot() -> Outcome {
    let mut out = certs(vec![spot_values()]);
    // the discriminant of y^5 + 5y is 256 and its Z is exactly one
    let c = CanonicalQuintic::from_real(0.0, 1.0, 0.0);
    let v = quintic_core::invariantmap::icosahedral_invariants(c.alpha, c.beta, c.gamma, Complex64::new(16.0, 0.0));
    out.passed &= v == Ok((Complex64::new(1.0, 0.0), Complex64::new(1.0, 0.0)));
    out.passed &= Rat::from_integer(256.into())
        == quintic_core::quintic::discriminant(&Rat::zero(), &Rat::from_integer(1.into()), &Rat::zero());
    out
}

fn inversion() -> Outcome {
    let mut worst = 0.0f64;
    let mut paths = (0, 0);
    let mut bad = Vec::new();
    for (radii, angles) in [([0.3, 0.8, 1.2], [0.4, 2.1, 4.0]), ([1.5, 4.0, 50.0], [0.2, 1.9, 3.7])] {
        for r in radii {
            for t in angles {
                let z = Complex64::from_polar(r, t);
                match invert_icosahedral_traced(z) {
                    Ok((s, path)) => {
                        let d = inversion_defect(s, z);
                        worst = worst.max(d);
                        match path {
                            InversionPath::Series => paths.0 += 1,
                            InversionPath::Degree60 => paths.1 += 1,
                        }
                        if d > 1e-7 {
                            bad.push(format!("{z}"));
                        }
                    }
                    Err(e) => bad.push(format!("{z}: {e}")),
                }
            }
        }
    }
    Outcome {
        passed: bad.is_empty() && paths == (9, 9),
        detail: format!("18 points, worst defect {worst:.2e}, series {} / degree-60 {}", paths.0, paths.1),
    }
}

fn schwarzian() -> Outcome {
    let mut worst = 0.0f64;
    let mut ok = true;
    for z in [Complex64::new(3.0, 0.0), Complex64::new(5.0, 0.0), Complex64::new(2.0, 2.0)] {
        match (finite_difference_schwarzian(s_inverse::<f64>, z, 1e-3 * z.norm()), schwarzian_rhs(z)) {
            (Ok(fd), Ok(rhs)) => worst = worst.max((fd - rhs).norm() / rhs.norm()),
            _ => ok = false,
        }
    }
    let b0 = beta0() == Rat::new(611.into(), 1800.into());
    Outcome { passed: ok && worst <= 1e-4 && b0, detail: format!("worst relative error {worst:.2e}, beta0 exact: {b0}") }
}

fn end_to_end() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let (mut cases, mut native, mut worst) = (0, 0, 0.0f64);
    let mut bad = Vec::new();
    while cases < 100 {
        let c = CanonicalQuintic::new(unit_disc(&mut rng), unit_disc(&mut rng), unit_disc(&mut rng));
        if check_degeneracy(&c).is_err() {
            continue;
        }
        cases += 1;
        let oracle = c.oracle_roots().expect("oracle converges");
        match solve_canonical(&c) {
            Ok(set) => {
                let d = match_distance(&set.roots, &oracle);
                worst = worst.max(d);
                if d > 1e-6 {
                    bad.push(format!("{c:?}: {d:e}"));
                }
                if set.fallback.is_none() {
                    native += 1;
                }
            }
            Err(e) => bad.push(format!("{c:?}: {e}")),
        }
    }
    Outcome {
        passed: bad.is_empty() && native >= 95,
        detail: format!("{native}/100 without fallback, worst distance {worst:.2e}"),
    }
}

fn tschirnhaus() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    let (mut worst_coeff, mut worst_res) = (0.0f64, 0.0f64);
    let mut bad = Vec::new();
    for _ in 0..50 {
        let a = [0; 5].map(|_| unit_disc(&mut rng) * 2.0);
        let q = GeneralQuintic::new(a);
        let (_, rec) = match tschirnhaus_reduce(&q) {
            Ok(r) => r,
            Err(e) => {
                bad.push(e.to_string());
                continue;
            }
        };
        // independent check: push the oracle roots through the substitution
        let ys: Vec<Complex64> = q
            .oracle_roots()
            .unwrap()
            .into_iter()
            .map(|x| {
                let u = x + rec.shift;
                if rec.trivial {
                    u
                } else {
                    u * u + rec.b1 * u + rec.b2
                }
            })
            .collect();
        let scale = ys.iter().map(|y| y.norm()).fold(1.0, f64::max);
        let e1: Complex64 = ys.iter().sum();
        let mut e2 = Complex64::zero();
        for i in 0..5 {
            for j in i + 1..5 {
                e2 += ys[i] * ys[j];
            }
        }
        worst_coeff = worst_coeff.max(e1.norm() / scale).max(e2.norm() / (scale * scale));
        match solve(&q, SolveMethod::Icosahedral, 1e-6) {
            Ok(sol) => worst_res = worst_res.max(sol.max_residual()),
            Err(e) => bad.push(e.to_string()),
        }
    }
    Outcome {
        passed: bad.is_empty() && worst_coeff <= 1e-9 && worst_res <= 1e-6,
        detail: format!("50 quintics, worst y^4/y^3 coefficient {worst_coeff:.2e}, worst residual {worst_res:.2e}"),
    }
}

fn appendix() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let mut worst = 0.0f64;
    let mut ok = true;
    for _ in 0..20 {
        let g = unit_disc(&mut rng) * 0.4;
        match bj_root_series(g, f64::EPSILON) {
            Ok(y) => worst = worst.max((y.powu(5) - y + g).norm()),
            Err(_) => ok = false,
        }
    }
    for p in [2, 3, 5] {
        for k in 0..=4 {
            ok &= raney_count(p, k).ok() == Some(fuss_catalan(p, k));
        }
    }
    let d5: Vec<u64> = (0..=4).map(|k| fuss_catalan(5, k).try_into().unwrap()).collect();
    ok &= d5 == [1, 1, 5, 35, 285];
    Outcome { passed: ok && worst <= 1e-12, detail: format!("worst residual {worst:.2e}, 5d = {d5:?}") }
}

fn main() {
    let criteria: [(&str, fn() -> Outcome, u64); 11] = [
        ("syzygy over Q(e)", syzygy, 5),
        ("resolvent product identities", products, 60),
        ("p^2 - D q^2 identity", pq_identity, 60),
        ("Gordon, divisibility and determinant identities", gordon, 60),
        ("group order and equivariance", group, 60),
        ("exact spot values", spot, 60),
        ("inversion round trip", inversion, 30),
        ("Schwarzian equation and beta0", schwarzian, 60),
        ("end-to-end canonical solver", end_to_end, 120),
        ("Tschirnhaus reduction", tschirnhaus, 120),
        ("Bring-Jerrard series and Fuss-Catalan counts", appendix, 60),
    ];
    let mut failures = 0;
    for (i, (name, run, limit)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let out = run();
        let elapsed = start.elapsed();
        let passed = out.passed && elapsed <= Duration::from_secs(*limit);
        failures += usize::from(!passed);
        println!(
            "{} {:>2} {name}: {} [{:.2}s, limit {limit}s]",
            if passed { "PASS" } else { "FAIL" },
            i + 1,
            out.detail,
            elapsed.as_secs_f64()
        );
    }
    if failures > 0 {
        println!("{failures} criteria failed");
        std::process::exit(1);
    }
}
