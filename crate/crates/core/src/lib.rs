//! Exact evaluation of the cosine-power integrals
//! `W_k = ∫₀^{π/2} cos^k x dx`, `I_k = ∫₀^{π/2} x cos^k x dx` and
//! `J_k = ∫₀^{π/2} x cos^k 2x dx`, each by several independent routes,
//! plus the sawtooth-wave sector areas they were introduced for.
//!
//! The routes are generic over a [`Scalar`]; use the aliases below for the
//! exact ([`Rational`]) and floating-point instantiations.

pub mod combinatorics;
pub mod error;
pub mod families;
pub mod pi_expr;
pub mod quadrature;
pub mod rational;
pub mod sawtooth;
pub mod scalar;
pub mod series;
pub mod verify;

pub use error::{Error, Result};
pub use families::{Family, Route};
pub use pi_expr::PiExpr;
pub use rational::Rational;
pub use scalar::Scalar;

pub type ExactPiExpr = PiExpr<Rational>;
pub type FloatPiExpr = PiExpr<f64>;
pub type ExactFamilyValue = families::FamilyValue<Rational>;
pub type FloatFamilyValue = families::FamilyValue<f64>;
pub type ExactICoeffs = families::ICoeffs<Rational>;
pub type WaveGeometry = sawtooth::WaveGeometry<f64>;
