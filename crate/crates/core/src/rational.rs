//! Exact rational arithmetic on [`Rational`].

use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::scalar::Scalar;

pub type Rational = BigRational;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RatOp {
    Add,
    Sub,
    Mul,
    Div,
}

/// Applies `op` to two scalars. Division by zero is an error, never a panic.
pub fn rational_arith<S: Scalar>(a: &S, b: &S, op: RatOp) -> Result<S> {
    Ok(match op {
        RatOp::Add => a.clone() + b.clone(),
        RatOp::Sub => a.clone() - b.clone(),
        RatOp::Mul => a.clone() * b.clone(),
        RatOp::Div => a.checked_div(b).ok_or(Error::DivisionByZero)?,
    })
}

/// Shorthand for small literal fractions.
pub fn ratio<S: Scalar>(numer: i64, denom: i64) -> S {
    S::from_ratio(&numer.into(), &denom.into())
}
