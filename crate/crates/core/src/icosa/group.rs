use std::collections::{HashSet, VecDeque};

use num_traits::{One, Zero};

use crate::certify::Certificate;
use crate::CycQ;

/// 2x2 matrix over `Q(e)`, row-major.
pub type Mat2 = [[CycQ; 2]; 2];

/// Permutation of `{0, .., 4}` as an image table (`p[i]` is the image of `i`).
pub type Perm = [usize; 5];

/// Generators of the rotation group in matrix and permutation form.
#[derive(Debug, Clone)]
pub struct GroupGenerators {
    /// Rotation by `2 pi / 5` about the `0, inf` axis.
    pub s_matrix: Mat2,
    /// Half-turn about the midpoint axis of the edge `[0, e + e^-1]`.
    pub t_matrix: Mat2,
    /// `(12345)` on tetrahedron labels.
    pub s_perm: Perm,
    /// `(12)(34)` on tetrahedron labels.
    pub t_perm: Perm,
}

pub fn generators() -> GroupGenerators {
    let e = CycQ::eps_pow;
    let inv_sqrt5 = CycQ::sqrt5().scaled_ratio(1, 5);
    let a = &e(1) - &e(4);
    let b = &e(2) - &e(3);
    GroupGenerators {
        s_matrix: [[e(3), CycQ::zero()], [CycQ::zero(), e(2)]],
        t_matrix: [
            [-(&inv_sqrt5 * &a), &inv_sqrt5 * &b],
            [&inv_sqrt5 * &b, &inv_sqrt5 * &a],
        ],
        s_perm: [1, 2, 3, 4, 0],
        t_perm: [1, 0, 3, 2, 4],
    }
}

impl CycQ {
    fn scaled_ratio(&self, num: i64, den: i64) -> CycQ {
        use crate::scalar::Scalar;
        self.scaled(num, den)
    }
}

pub fn mat_mul(a: &Mat2, b: &Mat2) -> Mat2 {
    let cell = |i: usize, j: usize| &(&a[i][0] * &b[0][j]) + &(&a[i][1] * &b[1][j]);
    [[cell(0, 0), cell(0, 1)], [cell(1, 0), cell(1, 1)]]
}

pub fn mat_pow(a: &Mat2, n: u32) -> Mat2 {
    let mut out = identity();
    for _ in 0..n {
        out = mat_mul(&out, a);
    }
    out
}

fn identity() -> Mat2 {
    [[CycQ::one(), CycQ::zero()], [CycQ::zero(), CycQ::one()]]
}

fn scalar_mat(c: CycQ) -> Mat2 {
    [[c.clone(), CycQ::zero()], [CycQ::zero(), c]]
}

pub fn det(a: &Mat2) -> CycQ {
    &(&a[0][0] * &a[1][1]) - &(&a[0][1] * &a[1][0])
}

/// `(p * q)(i) = p(q(i))`.
pub fn compose(p: &Perm, q: &Perm) -> Perm {
    let mut out = [0; 5];
    for i in 0..5 {
        out[i] = p[q[i]];
    }
    out
}

pub fn perm_order(p: &Perm) -> usize {
    let id: Perm = [0, 1, 2, 3, 4];
    let mut cur = *p;
    let mut n = 1;
    while cur != id {
        cur = compose(p, &cur);
        n += 1;
    }
    n
}

/// All products of the generators, by breadth-first search.
pub fn permutation_closure(gens: &[Perm]) -> HashSet<Perm> {
    let id: Perm = [0, 1, 2, 3, 4];
    let mut seen = HashSet::from([id]);
    let mut queue = VecDeque::from([id]);
    while let Some(p) = queue.pop_front() {
        for g in gens {
            let q = compose(g, &p);
            if seen.insert(q) {
                queue.push_back(q);
            }
        }
    }
    seen
}

/// Exact checks on the generators: orders, determinants and the size of the
/// generated permutation group.
pub fn group_checks() -> Vec<Certificate> {
    let g = generators();
    let id = identity();
    let minus_id = scalar_mat(CycQ::from_int(-1));
    let st = mat_mul(&g.s_matrix, &g.t_matrix);
    let st3 = mat_pow(&st, 3);
    let st_perm_order = perm_order(&compose(&g.s_perm, &g.t_perm));
    vec![
        Certificate::timed("S^5 = I over Q(e)", || {
            (mat_pow(&g.s_matrix, 5) == id, String::new())
        }),
        Certificate::timed("T^2 = -I over Q(e)", || {
            (mat_pow(&g.t_matrix, 2) == minus_id, String::new())
        }),
        Certificate::timed("det S = det T = 1", || {
            let (ds, dt) = (det(&g.s_matrix), det(&g.t_matrix));
            (ds == CycQ::one() && dt == CycQ::one(), format!("det T = {dt}"))
        }),
        Certificate::timed("(ST)^3 = +-I, perm order of ST = 3", || {
            let ok = (st3 == id || st3 == minus_id) && st_perm_order == 3;
            (ok, format!("perm order {st_perm_order}"))
        }),
        Certificate::timed("<(12345), (12)(34)> has order 60", || {
            let n = permutation_closure(&[g.s_perm, g.t_perm]).len();
            (n == 60, format!("order {n}"))
        }),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_group_checks_pass() {
        for c in group_checks() {
            assert!(c.passed, "{c:?}");
        }
    }

    #[test]
    fn closure_is_even() {
        let g = generators();
        let all = permutation_closure(&[g.s_perm, g.t_perm]);
        // every element is even: count inversions
        for p in &all {
            let inv = (0..5).flat_map(|i| (i + 1..5).map(move |j| (i, j)))
                .filter(|&(i, j)| p[i] > p[j])
                .count();
            assert_eq!(inv % 2, 0);
        }
        assert_eq!(perm_order(&g.s_perm), 5);
        assert_eq!(perm_order(&g.t_perm), 2);
    }
}
