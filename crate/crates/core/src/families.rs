//! The three integral families on `[0, π/2]`:
//!
//! * `W_k = ∫ cos^k x dx` (Wallis integrals),
//! * `I_k = ∫ x cos^k x dx`,
//! * `J_k = ∫ x cos^k 2x dx`,
//!
//! each evaluated by several independent routes. Every route returns a
//! [`FamilyValue`] tagged with the [`Route`] that produced it; with an exact
//! scalar, agreement between routes is plain equality.

use std::fmt;

use num_bigint::BigInt;

use crate::combinatorics::{binomial, double_factorial, wallis_ratio};
use crate::error::{Error, Result};
use crate::pi_expr::PiExpr;
use crate::rational::ratio;
use crate::scalar::Scalar;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    W,
    I,
    J,
}

impl Family {
    pub const ALL: [Family; 3] = [Family::W, Family::I, Family::J];

    pub fn letter(self) -> char {
        match self {
            Family::W => 'W',
            Family::I => 'I',
            Family::J => 'J',
        }
    }

    /// Exponents of π that may carry a nonzero coefficient for index `k`.
    pub fn allowed_exponents(self, k: usize) -> &'static [i32] {
        let even = k % 2 == 0;
        match (self, even) {
            (Family::W, true) => &[1],
            (Family::W, false) => &[0],
            (Family::I, true) => &[2, 0],
            (Family::I, false) => &[1, 0],
            (Family::J, true) => &[2],
            (Family::J, false) => &[1, 0],
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(self.letter().encode_utf8(&mut [0; 4]))
    }
}

impl std::str::FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "W" | "w" => Ok(Family::W),
            "I" | "i" => Ok(Family::I),
            "J" | "j" => Ok(Family::J),
            _ => Err(Error::InvalidParameter(format!("unknown family {s:?}"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Route {
    ClosedForm,
    Recurrence,
    Unrolled,
    CrossRelation,
    PascalSum,
    SeriesCoefficient,
}

impl fmt::Display for Route {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            Route::ClosedForm => "closed",
            Route::Recurrence => "recurrence",
            Route::Unrolled => "unrolled",
            Route::CrossRelation => "relation",
            Route::PascalSum => "pascal",
            Route::SeriesCoefficient => "series",
        };
        f.pad(name)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct FamilyValue<S> {
    pub family: Family,
    pub k: usize,
    pub value: PiExpr<S>,
    pub route: Route,
}

impl<S: Scalar> FamilyValue<S> {
    pub fn new(family: Family, k: usize, value: PiExpr<S>, route: Route) -> Self {
        FamilyValue {
            family,
            k,
            value,
            route,
        }
    }

    /// Only the π-exponents permitted for this family and parity are nonzero
    /// (up to [`Scalar::agrees`] for inexact scalars).
    pub fn has_parity_structure(&self) -> bool {
        let allowed = self.family.allowed_exponents(self.k);
        self.value
            .terms()
            .all(|(e, c)| allowed.contains(&e) || c.agrees(&S::zero()))
    }
}

/// `I_{2n} = a·π² + b`.
#[derive(Debug, Clone, PartialEq)]
pub struct EvenCoeffs<S> {
    pub a: S,
    pub b: S,
}

/// `I_{2n+1} = c·π + d`.
#[derive(Debug, Clone, PartialEq)]
pub struct OddCoeffs<S> {
    pub c: S,
    pub d: S,
}

#[derive(Debug, Clone, PartialEq)]
pub enum ICoeffs<S> {
    Even(EvenCoeffs<S>),
    Odd(OddCoeffs<S>),
}

impl<S: Scalar> ICoeffs<S> {
    pub fn to_pi_expr(&self) -> PiExpr<S> {
        match self {
            ICoeffs::Even(EvenCoeffs { a, b }) => {
                PiExpr::pi_squared(a.clone()) + PiExpr::constant(b.clone())
            }
            ICoeffs::Odd(OddCoeffs { c, d }) => PiExpr::pi(c.clone()) + PiExpr::constant(d.clone()),
        }
    }
}

fn mismatch<S: Scalar>(family: Family, k: usize, left: &PiExpr<S>, right: &PiExpr<S>) -> Error {
    Error::RouteMismatch {
        family: family.letter(),
        k,
        left: left.to_string(),
        right: right.to_string(),
    }
}

fn sign<S: Scalar>(k: usize) -> S {
    if k % 2 == 0 {
        S::one()
    } else {
        -S::one()
    }
}

fn w0<S: Scalar>() -> PiExpr<S> {
    PiExpr::pi(ratio(1, 2))
}

fn w1<S: Scalar>() -> PiExpr<S> {
    PiExpr::constant(S::one())
}

fn i0<S: Scalar>() -> PiExpr<S> {
    PiExpr::pi_squared(ratio(1, 8))
}

fn i1<S: Scalar>() -> PiExpr<S> {
    PiExpr::pi(ratio(1, 2)) - PiExpr::constant(S::one())
}

pub fn wallis_closed<S: Scalar>(k: usize) -> FamilyValue<S> {
    let r: S = wallis_ratio(k);
    let value = if k % 2 == 0 {
        PiExpr::pi(r * ratio(1, 2))
    } else {
        PiExpr::constant(r)
    };
    FamilyValue::new(Family::W, k, value, Route::ClosedForm)
}

/// `W_0 ..= W_{k_max}` by `W_k = (k-1)/k · W_{k-2}`.
pub fn wallis_recurrence_table<S: Scalar>(k_max: usize) -> Vec<PiExpr<S>> {
    let mut table: Vec<PiExpr<S>> = Vec::with_capacity(k_max + 1);
    for k in 0..=k_max {
        let w = match k {
            0 => w0(),
            1 => w1(),
            _ => table[k - 2].scale(&ratio((k - 1) as i64, k as i64)),
        };
        table.push(w);
    }
    table
}

pub fn wallis_recurrence<S: Scalar>(k: usize) -> FamilyValue<S> {
    let mut w = if k % 2 == 0 { w0() } else { w1() };
    for m in (k % 2 + 2..=k).step_by(2) {
        w = w.scale(&ratio((m - 1) as i64, m as i64));
    }
    FamilyValue::new(Family::W, k, w, Route::Recurrence)
}

/// `I_0 ..= I_{k_max}` by `I_k = (k-1)/k · I_{k-2} - 1/k²`.
pub fn i_recurrence_table<S: Scalar>(k_max: usize) -> Vec<PiExpr<S>> {
    let mut table: Vec<PiExpr<S>> = Vec::with_capacity(k_max + 1);
    for k in 0..=k_max {
        let v = match k {
            0 => i0(),
            1 => i1(),
            _ => i_step(&table[k - 2], k),
        };
        table.push(v);
    }
    table
}

fn i_step<S: Scalar>(prev: &PiExpr<S>, k: usize) -> PiExpr<S> {
    let k = k as i64;
    prev.scale(&ratio(k - 1, k)) - PiExpr::constant(ratio(1, k * k))
}

pub fn i_recurrence<S: Scalar>(k: usize) -> FamilyValue<S> {
    let mut v = if k % 2 == 0 { i0() } else { i1() };
    for m in (k % 2 + 2..=k).step_by(2) {
        v = i_step(&v, m);
    }
    FamilyValue::new(Family::I, k, v, Route::Recurrence)
}

/// The recurrence unrolled `n` times:
///
/// `I_k = I_{k-2n} Π_{j<n} (k-2j-1)/(k-2j) - (1/k² + Σ_{i=1}^{n-1} 1/(k-2i)² Π_{j<i} (k-2j-1)/(k-2j))`
pub fn i_unrolled<S: Scalar>(k: usize, n: usize) -> Result<FamilyValue<S>> {
    if n < 1 || k < 2 * n {
        return Err(Error::InvalidParameter(format!(
            "unrolled form needs n >= 1 and k >= 2n, got k = {k}, n = {n}"
        )));
    }
    let kk = k as i64;
    let factor = |j: i64| ratio::<S>(kk - 2 * j - 1, kk - 2 * j);

    // prefix = Π_{j=0}^{i-1} factor(j), extended one index per step
    let mut prefix = S::one();
    let mut tail: S = ratio(1, kk * kk);
    for i in 1..n as i64 {
        prefix = prefix * factor(i - 1);
        let d = kk - 2 * i;
        tail = tail + ratio::<S>(1, d * d) * prefix.clone();
    }
    let full = prefix * factor(n as i64 - 1);

    let base = i_recurrence::<S>(k - 2 * n).value;
    let value = base.scale(&full) - PiExpr::constant(tail);
    Ok(FamilyValue::new(Family::I, k, value, Route::Unrolled))
}

/// `Σ_{j=1}^{n} (1/j²)(2j)!!/(2j-1)!!`
pub fn double_factorial_sum<S: Scalar>(n: usize) -> S {
    (1..=n as i64).fold(S::zero(), |acc, j| {
        let num = BigInt::from(double_factorial(2 * j).expect("2j >= 0"));
        let den = BigInt::from(double_factorial(2 * j - 1).expect("2j - 1 >= -1")) * (j * j);
        acc + S::from_ratio(&num, &den)
    })
}

/// The same sum written with central binomials: `Σ_{j=1}^{n} 2^{2j} / (j² C(2j, j))`.
pub fn central_binomial_sum<S: Scalar>(n: usize) -> S {
    (1..=n as u64).fold(S::zero(), |acc, j| {
        let num = BigInt::from(1) << (2 * j);
        let den = BigInt::from(binomial(2 * j, j)) * (j * j);
        acc + S::from_ratio(&num, &den)
    })
}

/// `a_{2n} = (1/8)(2n-1)!!/(2n)!!`, the π² coefficient of `I_{2n}`.
pub fn even_pi_squared_coeff<S: Scalar>(n: usize) -> S {
    wallis_ratio::<S>(2 * n) * ratio(1, 8)
}

/// `b_{2n} = -((2n-1)!!/(4(2n)!!)) Σ_{j=1}^{n} (1/j²)(2j)!!/(2j-1)!!`.
pub fn even_constant_coeff<S: Scalar>(n: usize) -> S {
    -(wallis_ratio::<S>(2 * n) * ratio(1, 4) * double_factorial_sum(n))
}

/// Closed form of `I_{2n}` for `n >= 1`.
///
/// Built from the coefficient formulas for `a_{2n}` and `b_{2n}`, then
/// checked against `(1/4) W_{2n} (π - (2/π) Σ ...)`.
pub fn i_even_closed<S: Scalar>(n: usize) -> Result<FamilyValue<S>> {
    if n == 0 {
        return Err(Error::InvalidParameter(
            "even closed form needs n >= 1; I_0 is a base case".into(),
        ));
    }
    let k = 2 * n;
    let value = PiExpr::pi_squared(even_pi_squared_coeff(n)) + PiExpr::constant(even_constant_coeff(n));

    let w = wallis_closed::<S>(k).value;
    let sum: S = double_factorial_sum(n);
    let via_wallis = w.shift(1)?.scale(&ratio(1, 4)) - w.shift(-1)?.scale(&(sum * ratio(1, 2)));
    if !value.agrees(&via_wallis) {
        return Err(mismatch(Family::I, k, &value, &via_wallis));
    }
    Ok(FamilyValue::new(Family::I, k, value, Route::ClosedForm))
}

/// `(a, b)` for even `k`, `(c, d)` for odd `k`, read off the recurrence value.
pub fn i_coeffs<S: Scalar>(k: usize) -> ICoeffs<S> {
    let v = i_recurrence::<S>(k).value;
    if k % 2 == 0 {
        ICoeffs::Even(EvenCoeffs {
            a: v.coeff(2),
            b: v.coeff(0),
        })
    } else {
        ICoeffs::Odd(OddCoeffs {
            c: v.coeff(1),
            d: v.coeff(0),
        })
    }
}

/// `J_k = (1/4)(I_k + (-1)^{k+1} I_k + (-1)^k π W_k)`, valid for every `k`.
pub fn j_relation_general<S: Scalar>(k: usize, i_k: &PiExpr<S>, w_k: &PiExpr<S>) -> Result<PiExpr<S>> {
    let s: S = sign(k);
    let sum = i_k.clone() + i_k.scale(&-s.clone()) + w_k.shift(1)?.scale(&s);
    Ok(sum.scale(&ratio(1, 4)))
}

/// Parity-specialized relation: `(π/4) W_k` for even `k`,
/// `(1/2) I_k - ((k-1)!!/k!!)(π/4)` for odd `k`.
pub fn j_relation_parity<S: Scalar>(k: usize, i_k: &PiExpr<S>, w_k: &PiExpr<S>) -> Result<PiExpr<S>> {
    if k % 2 == 0 {
        Ok(w_k.shift(1)?.scale(&ratio(1, 4)))
    } else {
        Ok(i_k.scale(&ratio(1, 2)) - PiExpr::pi(wallis_ratio::<S>(k) * ratio(1, 4)))
    }
}

/// `J_k` from `I_k` and `W_k`. Both the general and the parity-specialized
/// relation are evaluated and must agree.
pub fn j_from_relation<S: Scalar>(k: usize) -> Result<FamilyValue<S>> {
    let i_k = i_recurrence::<S>(k).value;
    let w_k = wallis_closed::<S>(k).value;
    let general = j_relation_general(k, &i_k, &w_k)?;
    let special = j_relation_parity(k, &i_k, &w_k)?;
    if !general.agrees(&special) {
        return Err(mismatch(Family::J, k, &general, &special));
    }
    Ok(FamilyValue::new(Family::J, k, special, Route::CrossRelation))
}

/// `I_{2n} = J_{2n} - ((2n-1)!!/(4(2n)!!)) Σ_{j=1}^{n} (1/j²)(2j)!!/(2j-1)!!`.
///
/// Also checks the rewritten form `J_{2n}(1 - (2/π²) Σ 2^{2j}/(j² C(2j,j)))`,
/// working on the rational π² coefficient of `J_{2n}`.
pub fn i_even_via_j<S: Scalar>(n: usize) -> Result<FamilyValue<S>> {
    if n == 0 {
        return Err(Error::InvalidParameter("I_2n via J needs n >= 1".into()));
    }
    let k = 2 * n;
    let j = j_from_relation::<S>(k)?.value;
    let value = j.clone()
        - PiExpr::constant(wallis_ratio::<S>(k) * ratio(1, 4) * double_factorial_sum(n));

    let a = j.coeff(2);
    let rewritten = PiExpr::pi_squared(a.clone())
        + PiExpr::constant(-(a * ratio(2, 1) * central_binomial_sum(n)));
    if !value.agrees(&rewritten) {
        return Err(mismatch(Family::I, k, &value, &rewritten));
    }
    Ok(FamilyValue::new(Family::I, k, value, Route::CrossRelation))
}

/// `I_{2n} = 2^{-n} Σ_{i=0}^{n} C(n, i) J_i`, with every `J_i` taken from the
/// cross-family relation (odd `i` included).
pub fn i_even_pascal<S: Scalar>(n: usize) -> Result<FamilyValue<S>> {
    if n == 0 {
        return Err(Error::InvalidParameter("Pascal sum needs n >= 1".into()));
    }
    let i_table = i_recurrence_table::<S>(n);
    let mut total = PiExpr::zero();
    for (i, i_i) in i_table.iter().enumerate() {
        let w_i = wallis_closed::<S>(i).value;
        let j_i = j_relation_parity(i, i_i, &w_i)?;
        let c = S::from_ratio(&binomial(n as u64, i as u64).into(), &BigInt::from(1));
        total = total + j_i.scale(&c);
    }
    let value = total.scale(&S::from_ratio(&BigInt::from(1), &(BigInt::from(1) << n)));
    Ok(FamilyValue::new(Family::I, 2 * n, value, Route::PascalSum))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::Rational;

    type E = PiExpr<Rational>;

    fn q(n: i64, d: i64) -> Rational {
        ratio(n, d)
    }

    fn pi2(a: Rational, b: Rational) -> E {
        E::pi_squared(a) + E::constant(b)
    }

    fn pi1(c: Rational, d: Rational) -> E {
        E::pi(c) + E::constant(d)
    }

    #[test]
    fn wallis_closed_examples() {
        assert_eq!(wallis_closed::<Rational>(0).value, E::pi(q(1, 2)));
        assert_eq!(wallis_closed::<Rational>(2).value, E::pi(q(1, 4)));
        assert_eq!(wallis_closed::<Rational>(3).value, E::constant(q(2, 3)));
        assert_eq!(wallis_closed::<Rational>(3).route, Route::ClosedForm);
    }

    #[test]
    fn wallis_recurrence_examples() {
        assert_eq!(wallis_recurrence::<Rational>(1).value, E::constant(q(1, 1)));
        assert_eq!(wallis_recurrence::<Rational>(4).value, E::pi(q(3, 16)));
        assert_eq!(wallis_recurrence::<Rational>(7).value, E::constant(q(16, 35)));
        for k in 0..40 {
            assert_eq!(wallis_recurrence::<Rational>(k).value, wallis_closed::<Rational>(k).value);
        }
    }

    #[test]
    fn i_recurrence_listed_values() {
        let i = |k| i_recurrence::<Rational>(k).value;
        assert_eq!(i(0), E::pi_squared(q(1, 8)));
        assert_eq!(i(1), pi1(q(1, 2), q(-1, 1)));
        assert_eq!(i(2), pi2(q(1, 16), q(-1, 4)));
        assert_eq!(i(3), pi1(q(1, 3), q(-7, 9)));
        assert_eq!(i(4), pi2(q(3, 64), q(-1, 4)));
        assert_eq!(i(5), pi1(q(4, 15), q(-149, 225)));
        assert_eq!(i(6), pi2(q(5, 128), q(-17, 72)));
        assert_eq!(i(8), pi2(q(35, 1024), q(-2, 9)));
    }

    #[test]
    fn tables_match_single_evaluations() {
        let it = i_recurrence_table::<Rational>(25);
        let wt = wallis_recurrence_table::<Rational>(25);
        for k in 0..=25 {
            assert_eq!(it[k], i_recurrence::<Rational>(k).value);
            assert_eq!(wt[k], wallis_recurrence::<Rational>(k).value);
        }
    }

    #[test]
    fn unrolled_examples() {
        assert_eq!(i_unrolled::<Rational>(2, 1).unwrap().value, pi2(q(1, 16), q(-1, 4)));
        assert_eq!(i_unrolled::<Rational>(6, 3).unwrap().value, pi2(q(5, 128), q(-17, 72)));
        assert_eq!(
            i_unrolled::<Rational>(8, 1).unwrap().value,
            i_recurrence::<Rational>(8).value
        );
        assert_eq!(i_unrolled::<Rational>(8, 1).unwrap().value, pi2(q(35, 1024), q(-2, 9)));
    }

    #[test]
    fn unrolled_parameter_errors() {
        assert!(matches!(i_unrolled::<Rational>(4, 0), Err(Error::InvalidParameter(_))));
        assert!(matches!(i_unrolled::<Rational>(5, 3), Err(Error::InvalidParameter(_))));
        assert!(i_unrolled::<Rational>(5, 2).is_ok());
    }

    #[test]
    fn unrolled_every_n_matches_recurrence() {
        for k in 2..=40 {
            let r = i_recurrence::<Rational>(k).value;
            for n in 1..=k / 2 {
                assert_eq!(i_unrolled::<Rational>(k, n).unwrap().value, r, "k = {k}, n = {n}");
            }
        }
    }

    #[test]
    fn even_closed_examples() {
        assert_eq!(i_even_closed::<Rational>(1).unwrap().value, pi2(q(1, 16), q(-1, 4)));
        assert_eq!(i_even_closed::<Rational>(2).unwrap().value, pi2(q(3, 64), q(-1, 4)));
        assert_eq!(i_even_closed::<Rational>(4).unwrap().value, pi2(q(35, 1024), q(-2, 9)));
        assert!(i_even_closed::<Rational>(0).is_err());
    }

    #[test]
    fn coeff_examples() {
        assert_eq!(
            i_coeffs::<Rational>(4),
            ICoeffs::Even(EvenCoeffs { a: q(3, 64), b: q(-1, 4) })
        );
        assert_eq!(i_coeffs::<Rational>(3), ICoeffs::Odd(OddCoeffs { c: q(1, 3), d: q(-7, 9) }));
        assert_eq!(i_coeffs::<Rational>(0), ICoeffs::Even(EvenCoeffs { a: q(1, 8), b: q(0, 1) }));
        assert_eq!(i_coeffs::<Rational>(9).to_pi_expr(), i_recurrence::<Rational>(9).value);
    }

    #[test]
    fn a_coefficient_is_quarter_wallis() {
        for n in 1..=30 {
            let ICoeffs::Even(c) = i_coeffs::<Rational>(2 * n) else { unreachable!() };
            assert_eq!(c.a, even_pi_squared_coeff::<Rational>(n));
            let w = wallis_closed::<Rational>(2 * n).value.coeff(1);
            assert_eq!(c.a, w * q(1, 4));
        }
    }

    #[test]
    fn j_relation_examples() {
        assert_eq!(j_from_relation::<Rational>(0).unwrap().value, E::pi_squared(q(1, 8)));
        assert_eq!(j_from_relation::<Rational>(6).unwrap().value, E::pi_squared(q(5, 128)));
        assert_eq!(j_from_relation::<Rational>(1).unwrap().value, E::constant(q(-1, 2)));
    }

    #[test]
    fn j_general_catches_sign_errors() {
        let i3 = i_recurrence::<Rational>(3).value;
        let w3 = wallis_closed::<Rational>(3).value;
        let good = j_relation_general(3, &i3, &w3).unwrap();
        assert_eq!(good, j_relation_parity(3, &i3, &w3).unwrap());
        // feeding the even-k sign into an odd index must not coincide
        let wrong = (i3.clone() - i3.clone() + w3.shift(1).unwrap()).scale(&q(1, 4));
        assert_ne!(good, wrong);
    }

    #[test]
    fn via_j_examples() {
        assert_eq!(i_even_via_j::<Rational>(3).unwrap().value, pi2(q(5, 128), q(-17, 72)));
        assert_eq!(i_even_via_j::<Rational>(1).unwrap().value, pi2(q(1, 16), q(-1, 4)));
        assert_eq!(i_even_via_j::<Rational>(2).unwrap().value, pi2(q(3, 64), q(-1, 4)));
        assert!(i_even_via_j::<Rational>(0).is_err());
    }

    #[test]
    fn pascal_examples() {
        assert_eq!(i_even_pascal::<Rational>(1).unwrap().value, pi2(q(1, 16), q(-1, 4)));
        assert_eq!(i_even_pascal::<Rational>(2).unwrap().value, pi2(q(3, 64), q(-1, 4)));
        assert_eq!(i_even_pascal::<Rational>(4).unwrap().value, pi2(q(35, 1024), q(-2, 9)));
    }

    #[test]
    fn b_coefficients_are_negative() {
        for n in 1..=60 {
            assert!(even_constant_coeff::<Rational>(n) < q(0, 1), "n = {n}");
        }
    }

    #[test]
    fn parity_structure_on_all_routes() {
        for k in 0..=60 {
            assert!(wallis_closed::<Rational>(k).has_parity_structure());
            assert!(wallis_recurrence::<Rational>(k).has_parity_structure());
            assert!(i_recurrence::<Rational>(k).has_parity_structure());
            assert!(j_from_relation::<Rational>(k).unwrap().has_parity_structure());
        }
    }

    #[test]
    fn parity_structure_rejects_stray_terms() {
        let v = FamilyValue::new(Family::J, 4, pi2(q(3, 64), q(1, 1)), Route::CrossRelation);
        assert!(!v.has_parity_structure());
    }

    #[test]
    fn float_routes_track_exact() {
        for k in 0..=60 {
            let exact = i_recurrence::<Rational>(k).value.eval();
            let float = i_recurrence::<f64>(k).value.eval();
            assert!((exact - float).abs() < 1e-12, "k = {k}");
            let jf = j_from_relation::<f64>(k).unwrap().value.eval();
            let je = j_from_relation::<Rational>(k).unwrap().value.eval();
            assert!((jf - je).abs() < 1e-12, "k = {k}");
        }
        for n in 1..=30 {
            assert!(i_even_closed::<f64>(n).is_ok());
            assert!(i_even_via_j::<f64>(n).is_ok());
            let p = i_even_pascal::<f32>(n).unwrap().value.eval();
            let e = i_recurrence::<Rational>(2 * n).value.eval();
            assert!((p - e).abs() < 1e-5, "n = {n}");
        }
    }
}
