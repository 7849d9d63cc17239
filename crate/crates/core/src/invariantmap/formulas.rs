//! Closed-form symmetric functions of the Segre forms, as polynomials in
//! `(alpha, beta, gamma)`.

use crate::abcpoly::AbcPoly;
use crate::scalar::Scalar;

/// `f1 f2`.
pub const F1F2: AbcPoly = AbcPoly::new(&[(1, [4, 0, 0]), (-1, [0, 3, 0]), (1, [1, 1, 1])]);

/// `H1 H2`.
pub const H1H2: AbcPoly = AbcPoly::new(&[
    (1, [0, 0, 4]),
    (40, [2, 1, 2]),
    (-192, [5, 0, 1]),
    (-120, [1, 3, 1]),
    (640, [4, 2, 0]),
    (-144, [0, 5, 0]),
]);

/// `T1 T2`.
pub const T1T2: AbcPoly = AbcPoly::new(&[
    (1, [0, 0, 6]),
    (60, [2, 1, 4]),
    (576, [5, 0, 3]),
    (-180, [1, 3, 3]),
    (648, [0, 5, 2]),
    (-2760, [4, 2, 2]),
    (7200, [7, 1, 1]),
    (-1728, [10, 0, 0]),
    (9360, [3, 4, 1]),
    (-2080, [6, 3, 0]),
    (-16200, [2, 6, 0]),
]);

/// First factor of `2q` (weight 20).
pub const Q_FIRST: AbcPoly = AbcPoly::new(&[
    (-8, [5, 0, 1]),
    (-40, [4, 2, 0]),
    (10, [2, 1, 2]),
    (45, [1, 3, 1]),
    (-81, [0, 5, 0]),
    (-1, [0, 0, 4]),
]);

/// Second factor of `2q` (weight 30).
pub const Q_SECOND: AbcPoly = AbcPoly::new(&[
    (64, [10, 0, 0]),
    (40, [7, 1, 1]),
    (-160, [6, 3, 0]),
    (1, [5, 0, 3]),
    (-5, [4, 2, 2]),
    (5, [3, 4, 1]),
    (-25, [2, 6, 0]),
    (-1, [0, 5, 2]),
]);

/// Twice the symmetric part of `M1 f2`; the antisymmetric part is
/// `-alpha nabla / 2`.
pub const M_SYM2: AbcPoly = AbcPoly::new(&[(11, [3, 1, 0]), (2, [0, 2, 1]), (-1, [1, 0, 2])]);

/// `2r`, twice the symmetric part of `N1 f1^2 T2`.
pub const R2: AbcPoly = AbcPoly::new(&[
    (1, [2, 0, 5]),
    (-1, [1, 2, 4]),
    (53, [4, 1, 3]),
    (64, [7, 0, 2]),
    (-7, [0, 4, 3]),
    (-225, [3, 3, 2]),
    (-12, [6, 2, 1]),
    (216, [9, 1, 0]),
    (717, [2, 5, 1]),
    (-464, [5, 4, 0]),
    (-720, [1, 7, 0]),
]);

/// `2s`, so that `N1 f1^2 T2 = r + nabla s`.
pub const S2: AbcPoly = AbcPoly::new(&[
    (-1, [2, 0, 3]),
    (3, [1, 2, 2]),
    (-9, [0, 4, 1]),
    (-4, [4, 1, 1]),
    (-8, [7, 0, 0]),
    (-80, [3, 3, 0]),
]);

/// `(f1 f2, H1 H2, T1 T2)`.
pub fn resolvent_products<T: Scalar>(a: &T, b: &T, c: &T) -> (T, T, T) {
    (F1F2.eval(a, b, c), H1H2.eval(a, b, c), T1T2.eval(a, b, c))
}

/// `p` from the product of the two syzygies:
/// `2p = 12^3 (f1f2)^5 + 12^-3 (H1H2)^3 - 12^-3 (T1T2)^2`.
pub fn p_from_products<T: Scalar>(f1f2: &T, h1h2: &T, t1t2: &T) -> T {
    f1f2.pow_pos(5).scaled(864, 1) + h1h2.pow_pos(3).scaled(1, 3456)
        - t1t2.pow_pos(2).scaled(1, 3456)
}

/// `q` for the sign `+1`; the other sign is its negative.
pub fn q_plus<T: Scalar>(a: &T, b: &T, c: &T) -> T {
    (Q_FIRST.eval(a, b, c) * Q_SECOND.eval(a, b, c)).scaled(1, 2)
}
