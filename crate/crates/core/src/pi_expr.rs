//! Numbers of the form `q₋₁/π + q₀ + q₁π + q₂π²`.
//!
//! This is the value type of every integral and average in the crate. The
//! exponent basis is closed: there is scaling by a scalar and shifting by a
//! power of π, but no general product, and a shift that would leave the
//! basis is an error.

use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::str::FromStr;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::rational::Rational;
use crate::scalar::Scalar;

pub const MIN_EXPONENT: i32 = -1;
pub const MAX_EXPONENT: i32 = 2;
const SLOTS: usize = (MAX_EXPONENT - MIN_EXPONENT + 1) as usize;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PiOp {
    Add,
    Sub,
}

#[derive(Debug, Clone, PartialEq)]
pub struct PiExpr<S> {
    // slot i holds the coefficient of pi^(i + MIN_EXPONENT)
    coeffs: [S; SLOTS],
}

fn slot(exponent: i32) -> Result<usize> {
    if (MIN_EXPONENT..=MAX_EXPONENT).contains(&exponent) {
        Ok((exponent - MIN_EXPONENT) as usize)
    } else {
        Err(Error::ExponentOutOfRange(exponent))
    }
}

impl<S: Scalar> PiExpr<S> {
    pub fn zero() -> Self {
        PiExpr {
            coeffs: std::array::from_fn(|_| S::zero()),
        }
    }

    /// The single term `coeff · π^exponent`.
    pub fn term(exponent: i32, coeff: S) -> Result<Self> {
        let mut e = Self::zero();
        e.coeffs[slot(exponent)?] = coeff;
        Ok(e)
    }

    pub fn constant(coeff: S) -> Self {
        Self::term(0, coeff).expect("exponent 0 is in range")
    }

    pub fn pi(coeff: S) -> Self {
        Self::term(1, coeff).expect("exponent 1 is in range")
    }

    pub fn pi_squared(coeff: S) -> Self {
        Self::term(2, coeff).expect("exponent 2 is in range")
    }

    /// Builds from `(exponent, coefficient)` pairs; repeated exponents add.
    pub fn from_terms<I: IntoIterator<Item = (i32, S)>>(terms: I) -> Result<Self> {
        let mut e = Self::zero();
        for (exp, c) in terms {
            let i = slot(exp)?;
            e.coeffs[i] = e.coeffs[i].clone() + c;
        }
        Ok(e)
    }

    /// Coefficient of `π^exponent`; zero for exponents outside the basis.
    pub fn coeff(&self, exponent: i32) -> S {
        slot(exponent)
            .map(|i| self.coeffs[i].clone())
            .unwrap_or_else(|_| S::zero())
    }

    /// Nonzero terms, exponent-descending.
    pub fn terms(&self) -> impl Iterator<Item = (i32, &S)> {
        (MIN_EXPONENT..=MAX_EXPONENT)
            .rev()
            .map(move |e| (e, &self.coeffs[(e - MIN_EXPONENT) as usize]))
            .filter(|(_, c)| !c.is_zero())
    }

    pub fn exponents(&self) -> Vec<i32> {
        self.terms().map(|(e, _)| e).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn combine(&self, other: &Self, op: PiOp) -> Self {
        PiExpr {
            coeffs: std::array::from_fn(|i| {
                let (a, b) = (self.coeffs[i].clone(), other.coeffs[i].clone());
                match op {
                    PiOp::Add => a + b,
                    PiOp::Sub => a - b,
                }
            }),
        }
    }

    pub fn scale(&self, s: &S) -> Self {
        PiExpr {
            coeffs: std::array::from_fn(|i| self.coeffs[i].clone() * s.clone()),
        }
    }

    /// Multiplies by `π^j`.
    pub fn shift(&self, j: i32) -> Result<Self> {
        let mut out = Self::zero();
        for (e, c) in self.terms() {
            out.coeffs[slot(e + j)?] = c.clone();
        }
        Ok(out)
    }

    /// Floating-point value, summed from the highest power of π down.
    pub fn eval(&self) -> f64 {
        let pi = std::f64::consts::PI;
        self.terms()
            .map(|(e, c)| c.to_f64() * pi.powi(e))
            .fold(0.0, |acc, t| acc + t)
    }

    /// Coefficient-wise [`Scalar::agrees`].
    pub fn agrees(&self, other: &Self) -> bool {
        self.coeffs.iter().zip(&other.coeffs).all(|(a, b)| a.agrees(b))
    }
}

impl<S: Scalar> Add for PiExpr<S> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        self.combine(&rhs, PiOp::Add)
    }
}

impl<S: Scalar> Sub for PiExpr<S> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self.combine(&rhs, PiOp::Sub)
    }
}

impl<S: Scalar> Neg for PiExpr<S> {
    type Output = Self;
    fn neg(self) -> Self {
        PiExpr {
            coeffs: self.coeffs.map(Neg::neg),
        }
    }
}

fn pi_power(e: i32) -> &'static str {
    match e {
        2 => "pi^2",
        1 => "pi",
        -1 => "pi^-1",
        _ => unreachable!("exponent {e} has no spelling"),
    }
}

/// Renders as e.g. `3/64*pi^2 - 1/4`; zero renders `0`.
impl<S: Scalar> fmt::Display for PiExpr<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (e, c) in self.terms() {
            let negative = *c < S::zero();
            let mag = if negative { -c.clone() } else { c.clone() };
            match (first, negative) {
                (true, true) => f.write_str("-")?,
                (true, false) => {}
                (false, true) => f.write_str(" - ")?,
                (false, false) => f.write_str(" + ")?,
            }
            first = false;
            if e == 0 {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                f.write_str(pi_power(e))?;
            } else {
                write!(f, "{mag}*{}", pi_power(e))?;
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

/// Inverse of the `Display` rendering for exact expressions.
impl FromStr for PiExpr<Rational> {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(s.to_string());
        let mut rest = s.trim();
        let mut negative = false;
        if let Some(r) = rest.strip_prefix('-') {
            negative = true;
            rest = r;
        }
        let mut out = PiExpr::<Rational>::zero();
        loop {
            let (term, next) = match (rest.find(" + "), rest.find(" - ")) {
                (Some(p), Some(m)) if p < m => (&rest[..p], Some((false, &rest[p + 3..]))),
                (_, Some(m)) => (&rest[..m], Some((true, &rest[m + 3..]))),
                (Some(p), None) => (&rest[..p], Some((false, &rest[p + 3..]))),
                (None, None) => (rest, None),
            };
            let (exp, mag) = parse_term(term).ok_or_else(bad)?;
            let i = slot(exp)?;
            out.coeffs[i] = out.coeffs[i].clone() + if negative { -mag } else { mag };
            match next {
                Some((neg, r)) => {
                    negative = neg;
                    rest = r;
                }
                None => break,
            }
        }
        Ok(out)
    }
}

fn parse_term(term: &str) -> Option<(i32, Rational)> {
    let (coeff, power) = match term.split_once('*') {
        Some((c, p)) => (Some(c), Some(p)),
        None if term.starts_with("pi") => (None, Some(term)),
        None => (Some(term), None),
    };
    let exp = match power {
        None => 0,
        Some("pi") => 1,
        Some("pi^2") => 2,
        Some("pi^-1") => -1,
        Some(_) => return None,
    };
    let mag = match coeff {
        None => Rational::one(),
        Some(c) => c.parse::<Rational>().ok()?,
    };
    Some((exp, mag))
}
