//! Coefficients of `(1-x)^{-1/2}` and `(1-x)^{-3/2}` and how they encode the
//! even `J`, even `W` and odd `W` values.

use std::fmt;

use crate::combinatorics::double_factorial;
use crate::error::{Error, Result};
use crate::families::{wallis_closed, Family, FamilyValue, Route};
use crate::pi_expr::PiExpr;
use crate::rational::ratio;
use crate::scalar::Scalar;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Series {
    /// `(1-x)^{-1/2}`
    InvSqrt,
    /// `(1-x)^{-3/2}`
    InvThreeHalves,
}

impl fmt::Display for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Series::InvSqrt => f.write_str("(1-x)^(-1/2)"),
            Series::InvThreeHalves => f.write_str("(1-x)^(-3/2)"),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SeriesCoeff<S> {
    pub series: Series,
    pub n: usize,
    pub value: S,
}

impl<S: Scalar> SeriesCoeff<S> {
    pub fn new(series: Series, n: usize) -> Self {
        let value = match series {
            Series::InvSqrt => inv_sqrt_coeff(n),
            Series::InvThreeHalves => inv_three_halves_coeff(n),
        };
        SeriesCoeff { series, n, value }
    }
}

fn df_ratio<S: Scalar>(top: i64, bottom: i64) -> S {
    S::from_ratio(
        &double_factorial(top).expect("top >= -1").into(),
        &double_factorial(bottom).expect("bottom >= -1").into(),
    )
}

/// Coefficient of `xⁿ` in `(1-x)^{-1/2}`: `(2n-1)!!/(2n)!!`.
pub fn inv_sqrt_coeff<S: Scalar>(n: usize) -> S {
    let n = n as i64;
    df_ratio(2 * n - 1, 2 * n)
}

/// Coefficient of `xⁿ` in `(1-x)^{-3/2}`: `(2n+1)!!/(2n)!!`.
pub fn inv_three_halves_coeff<S: Scalar>(n: usize) -> S {
    let n = n as i64;
    df_ratio(2 * n + 1, 2 * n)
}

/// `J_{2n}` read off `1/√(1-x) = (8/π²) Σ J_{2n} xⁿ`.
pub fn j_even_from_series<S: Scalar>(n: usize) -> PiExpr<S> {
    PiExpr::pi_squared(inv_sqrt_coeff::<S>(n) * ratio(1, 8))
}

/// `W_{2n}` read off `1/√(1-x) = (2/π) Σ W_{2n} xⁿ`.
pub fn w_even_from_series<S: Scalar>(n: usize) -> PiExpr<S> {
    PiExpr::pi(inv_sqrt_coeff::<S>(n) * ratio(1, 2))
}

/// `1/W_{2n+1}`, checked against the coefficient of `xⁿ` in `(1-x)^{-3/2}`.
pub fn w_odd_reciprocal_check<S: Scalar>(n: usize) -> Result<S> {
    let k = 2 * n + 1;
    let w = wallis_closed::<S>(k).value;
    let recip = S::one().checked_div(&w.coeff(0)).ok_or(Error::DivisionByZero)?;
    let coeff: S = inv_three_halves_coeff(n);
    if !recip.agrees(&coeff) {
        return Err(Error::RouteMismatch {
            family: 'W',
            k,
            left: recip.to_string(),
            right: coeff.to_string(),
        });
    }
    Ok(recip)
}

/// `W_{2n+1}` as the reciprocal of a `(1-x)^{-3/2}` coefficient.
pub fn w_odd_from_series<S: Scalar>(n: usize) -> Result<PiExpr<S>> {
    let c: S = inv_three_halves_coeff(n);
    let w = S::one().checked_div(&c).ok_or(Error::DivisionByZero)?;
    Ok(PiExpr::constant(w))
}

/// Series route for `W_k` or even `J_k`; `None` where no series applies.
pub fn series_value<S: Scalar>(family: Family, k: usize) -> Option<Result<FamilyValue<S>>> {
    let value = match (family, k % 2) {
        (Family::W, 0) => Ok(w_even_from_series(k / 2)),
        (Family::W, _) => w_odd_from_series(k / 2),
        (Family::J, 0) => Ok(j_even_from_series(k / 2)),
        _ => return None,
    };
    Some(value.map(|v| FamilyValue::new(family, k, v, Route::SeriesCoefficient)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::half_binomial;
    use crate::families::j_from_relation;
    use crate::rational::Rational;

    fn q(n: i64, d: i64) -> Rational {
        ratio(n, d)
    }

    /// c_{n+1} = c_n (2n+1)/(2n+2), started at 1.
    fn incremental_inv_sqrt(count: usize) -> Vec<Rational> {
        let mut out = vec![q(1, 1)];
        for n in 0..count.saturating_sub(1) as i64 {
            let next = out.last().unwrap() * q(2 * n + 1, 2 * n + 2);
            out.push(next);
        }
        out
    }

    /// c_{n+1} = c_n (2n+3)/(2n+2), started at 1.
    fn incremental_inv_three_halves(count: usize) -> Vec<Rational> {
        let mut out = vec![q(1, 1)];
        for n in 0..count.saturating_sub(1) as i64 {
            let next = out.last().unwrap() * q(2 * n + 3, 2 * n + 2);
            out.push(next);
        }
        out
    }

    #[test]
    fn inv_sqrt_examples() {
        assert_eq!(inv_sqrt_coeff::<Rational>(0), q(1, 1));
        assert_eq!(inv_sqrt_coeff::<Rational>(1), q(1, 2));
        assert_eq!(inv_sqrt_coeff::<Rational>(3), q(5, 16));
    }

    #[test]
    fn inv_three_halves_examples() {
        assert_eq!(inv_three_halves_coeff::<Rational>(0), q(1, 1));
        assert_eq!(inv_three_halves_coeff::<Rational>(1), q(3, 2));
        assert_eq!(inv_three_halves_coeff::<Rational>(2), q(15, 8));
    }

    #[test]
    fn coefficients_match_incremental_oracle() {
        let a = incremental_inv_sqrt(101);
        let b = incremental_inv_three_halves(101);
        for n in 0..=100 {
            assert_eq!(inv_sqrt_coeff::<Rational>(n), a[n]);
            assert_eq!(inv_three_halves_coeff::<Rational>(n), b[n]);
        }
    }

    #[test]
    fn coefficients_match_half_binomials() {
        for n in 0..=100u64 {
            let s = if n % 2 == 0 { q(1, 1) } else { q(-1, 1) };
            assert_eq!(inv_sqrt_coeff::<Rational>(n as usize), &s * half_binomial::<Rational>(-1, n));
            assert_eq!(
                inv_three_halves_coeff::<Rational>(n as usize),
                &s * half_binomial::<Rational>(-3, n)
            );
        }
    }

    #[test]
    fn coefficient_bounds() {
        for n in 0..=100 {
            let c = SeriesCoeff::<Rational>::new(Series::InvSqrt, n).value;
            assert!(c > q(0, 1) && c <= q(1, 1));
            let d = SeriesCoeff::<Rational>::new(Series::InvThreeHalves, n).value;
            assert!(d >= q(1, 1));
        }
    }

    #[test]
    fn j_even_examples() {
        assert_eq!(j_even_from_series::<Rational>(0), PiExpr::pi_squared(q(1, 8)));
        assert_eq!(j_even_from_series::<Rational>(3), PiExpr::pi_squared(q(5, 128)));
        assert_eq!(j_even_from_series::<Rational>(2), PiExpr::pi_squared(q(3, 64)));
        assert_eq!(j_even_from_series::<Rational>(2), j_from_relation::<Rational>(4).unwrap().value);
    }

    #[test]
    fn j_even_binomial_form() {
        for n in 0..=40u64 {
            let s = if n % 2 == 0 { q(1, 1) } else { q(-1, 1) };
            let via_binomial = PiExpr::pi_squared(s * half_binomial::<Rational>(-1, n) * q(1, 8));
            assert_eq!(j_even_from_series::<Rational>(n as usize), via_binomial);
        }
    }

    #[test]
    fn w_even_examples() {
        assert_eq!(w_even_from_series::<Rational>(0), PiExpr::pi(q(1, 2)));
        assert_eq!(w_even_from_series::<Rational>(1), PiExpr::pi(q(1, 4)));
        assert_eq!(w_even_from_series::<Rational>(2), PiExpr::pi(q(3, 16)));
        assert_eq!(w_even_from_series::<Rational>(2), wallis_closed::<Rational>(4).value);
    }

    #[test]
    fn w_odd_reciprocal_examples() {
        assert_eq!(w_odd_reciprocal_check::<Rational>(0).unwrap(), q(1, 1));
        assert_eq!(w_odd_reciprocal_check::<Rational>(1).unwrap(), q(3, 2));
        assert_eq!(w_odd_reciprocal_check::<Rational>(3).unwrap(), q(35, 16));
    }

    #[test]
    fn series_value_coverage() {
        assert!(series_value::<Rational>(Family::I, 4).is_none());
        assert!(series_value::<Rational>(Family::J, 3).is_none());
        let w5 = series_value::<Rational>(Family::W, 5).unwrap().unwrap();
        assert_eq!(w5.value, wallis_closed::<Rational>(5).value);
    }

    #[test]
    fn truncated_series_at_quarter() {
        let x = 0.25f64;
        let sum: f64 = (0..=60)
            .map(|n| inv_sqrt_coeff::<f64>(n) * x.powi(n as i32))
            .sum();
        assert!((sum - 2.0 / 3f64.sqrt()).abs() < 1e-6);
    }
}
