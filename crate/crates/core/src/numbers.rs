//! Small exact-arithmetic helpers.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{arithmetic, Result};

pub fn factorial(n: usize) -> BigUint {
    (2..=n as u64).fold(BigUint::one(), |acc, k| acc * k)
}

/// `binom(n, k)`, zero when `k > n`.
pub fn binomial(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc *= (n - i) as u64;
        acc /= (i + 1) as u64;
    }
    acc
}

pub fn pow(base: u64, exp: usize) -> BigUint {
    num_traits::pow(BigUint::from(base), exp)
}

/// Divides exactly, failing loudly on a nonzero remainder.
pub fn exact_div(num: &BigInt, den: &BigUint, what: &str) -> Result<BigInt> {
    let den = BigInt::from(den.clone());
    let (q, r) = num.div_rem(&den);
    if !r.is_zero() {
        return Err(arithmetic(alloc::format!("{what}: {num} is not divisible by {den}")));
    }
    Ok(q)
}

/// Converts a result that must be a nonnegative integer.
pub fn to_natural(v: BigInt, what: &str) -> Result<BigUint> {
    if v.is_negative() {
        return Err(arithmetic(alloc::format!("{what}: negative value {v}")));
    }
    Ok(v.magnitude().clone())
}

/// Natural logarithm of a positive big integer, accurate to f64 precision.
pub fn ln_biguint(x: &BigUint) -> f64 {
    let bits = x.bits();
    if bits <= 52 {
        let v: u64 = x.iter_u64_digits().next().unwrap_or(0);
        return libm::log(v as f64);
    }
    let shift = bits - 53;
    let top: BigUint = x >> shift;
    let mantissa = top.iter_u64_digits().next().unwrap_or(0) as f64;
    libm::log(mantissa) + shift as f64 * core::f64::consts::LN_2
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basics() {
        assert_eq!(factorial(0), BigUint::one());
        assert_eq!(factorial(5), BigUint::from(120u32));
        assert_eq!(binomial(5, 2), BigUint::from(10u32));
        assert_eq!(binomial(3, 5), BigUint::zero());
        assert_eq!(binomial(0, 0), BigUint::one());
        assert_eq!(pow(3, 4), BigUint::from(81u32));
    }

    #[test]
    fn exact_division() {
        let six = BigInt::from(6);
        assert_eq!(exact_div(&six, &BigUint::from(3u32), "t").unwrap(), BigInt::from(2));
        assert!(exact_div(&six, &BigUint::from(4u32), "t").is_err());
    }

    #[test]
    fn logs() {
        assert!((ln_biguint(&BigUint::from(16u32)) - libm::log(16.0)).abs() < 1e-12);
        let big = factorial(30);
        let expect: f64 = (2..=30).map(|k| libm::log(k as f64)).sum();
        assert!((ln_biguint(&big) - expect).abs() / expect < 1e-12);
    }
}
