//! Exact rational scalars and the handful of combinatorial quantities the
//! identity checks need (factorials, binomials, powers of four).

use std::sync::Mutex;

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Exact rational coefficient: unbounded numerator, positive denominator,
/// always in lowest terms (enforced by `num_rational`).
pub type Rational = num_rational::BigRational;

/// `n` as a rational.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Exact `n!`, served from a growing shared table.
pub fn factorial(n: u64) -> BigInt {
    static TABLE: Mutex<Vec<BigInt>> = Mutex::new(Vec::new());
    let mut table = TABLE.lock().unwrap();
    if table.is_empty() {
        table.push(BigInt::one());
    }
    while (table.len() as u64) <= n {
        let next = table.last().unwrap() * table.len();
        table.push(next);
    }
    table[n as usize].clone()
}

/// Exact binomial coefficient `C(n, k)`; zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut res = BigInt::one();
    for i in 0..k {
        res = res * (n - i) / (i + 1);
    }
    res
}

/// Exact `4^k`.
pub fn pow4(k: u32) -> BigInt {
    BigInt::one() << (2 * k as usize)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomial_values() {
        assert_eq!(binomial(0, 0), BigInt::from(1));
        assert_eq!(binomial(5, 2), BigInt::from(10));
        assert_eq!(binomial(12, 6), BigInt::from(924));
        assert_eq!(binomial(3, 7), BigInt::from(0));
        assert_eq!(binomial(1000, 2), BigInt::from(499500));
    }

    #[test]
    fn factorial_values() {
        assert_eq!(factorial(0), BigInt::from(1));
        assert_eq!(factorial(5), BigInt::from(120));
        assert_eq!(factorial(7), BigInt::from(5040));
        // 20! fits in u64, handy as a cross check
        assert_eq!(factorial(20), BigInt::from(2_432_902_008_176_640_000u64));
    }

    #[test]
    fn pow4_values() {
        assert_eq!(pow4(0), BigInt::from(1));
        assert_eq!(pow4(3), BigInt::from(64));
    }

    #[test]
    fn rational_normal_form() {
        let r = Rational::new(BigInt::from(4), BigInt::from(-6));
        assert_eq!(r.numer(), &BigInt::from(-2));
        assert_eq!(r.denom(), &BigInt::from(3));
        assert_eq!(r.to_string(), "-2/3");
        assert_eq!(rat(7).to_string(), "7");
    }
}
