//! Factorials, double factorials and binomial coefficients over big integers.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::scalar::Scalar;

pub fn factorial(n: u64) -> BigUint {
    (2..=n).fold(BigUint::one(), |acc, i| acc * i)
}

/// `n!!` with the conventions `(-1)!! = 0!! = 1`.
pub fn double_factorial(n: i64) -> Result<BigUint> {
    if n < -1 {
        return Err(Error::NegativeDoubleFactorial(n));
    }
    let mut acc = BigUint::one();
    let mut i = n;
    while i > 1 {
        acc *= i as u64;
        i -= 2;
    }
    Ok(acc)
}

/// `(n-1)!! / n!!` for `n >= 0`, the Wallis ratio.
pub fn wallis_ratio<S: Scalar>(n: usize) -> S {
    let n = n as i64;
    let num = double_factorial(n - 1).expect("n - 1 >= -1");
    let den = double_factorial(n).expect("n >= 0");
    S::from_ratio(&num.into(), &den.into())
}

/// `C(n, k)`, zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    // each prefix product is itself a binomial coefficient, so the division is exact
    (0..k).fold(BigUint::one(), |acc, i| acc * (n - i) / (i + 1))
}

/// Generalized binomial `C(alpha_num / 2, n)`; the upper argument is a
/// half-integer when `alpha_num` is odd.
pub fn half_binomial<S: Scalar>(alpha_num: i64, n: u64) -> S {
    // prod_{i<n} (alpha_num/2 - i) / n!  =  prod (alpha_num - 2i) / (2^n n!)
    let numer = (0..n as i64).fold(BigInt::one(), |acc, i| acc * (alpha_num - 2 * i));
    let denom = BigInt::from(factorial(n)) << n;
    S::from_ratio(&numer, &denom)
}
