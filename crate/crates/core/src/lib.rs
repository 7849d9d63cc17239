//! Klein's icosahedral solution of the quintic.
//!
//! The pipeline reduces a monic quintic to the canonical form
//! `y^5 + 5 a y^2 + 5 b y + c`, computes its icosahedral invariant, inverts
//! the icosahedral quotient map, and rebuilds the roots with Gordon's
//! rational formulas. Every polynomial identity the pipeline relies on is
//! re-derived in exact arithmetic over `Q(e^{2 pi i / 5})` by [`certify`].
//!
//! Numerical code is generic over the floating type (`f32`/`f64`) through
//! [`scalar::Real`]; the closed-form resolvent formulas are generic over
//! any ring implementing [`scalar::Scalar`], which includes exact rationals,
//! cyclotomic numbers and polynomials.

pub mod abcpoly;
pub mod bjseries;
pub mod certify;
pub mod error;
pub mod exactfield;
pub mod icosa;
pub mod invariantmap;
pub mod inverter;
pub mod polyalg;
pub mod roots;
pub mod quintic;
pub mod recovery;
pub mod scalar;
pub mod solve;

pub use error::{Error, Result};
pub use exactfield::CycQ;
pub use num_complex::Complex;
pub use polyalg::MPoly;

/// Arbitrary-precision rational number.
pub type Rat = num_rational::BigRational;
/// Double-precision complex number, the default numeric carrier.
pub type Complex64 = Complex<f64>;
/// Single-precision complex number.
pub type Complex32 = Complex<f32>;


pub use solve::{solve, Solution, SolveMethod};

pub type GeneralQuintic64 = quintic::GeneralQuintic<f64>;
pub type CanonicalQuintic64 = quintic::CanonicalQuintic<f64>;
pub type TschirnhausRecord64 = quintic::TschirnhausRecord<f64>;
pub type RootSet64 = recovery::RootSet<f64>;
pub type Solution64 = solve::Solution<f64>;
pub type ExtComplex64 = icosa::ExtComplex<f64>;
