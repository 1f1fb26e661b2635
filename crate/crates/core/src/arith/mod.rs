//! Exact rational, combinatorial, cyclotomic, and interval arithmetic.

pub mod bernoulli;
pub mod bigfloat;
pub mod cyclotomic;
pub mod expr;
pub mod interval;
pub mod stirling;

use num_bigint::BigInt;
use num_traits::{One, Zero};

pub use bernoulli::{bernoulli_number, bernoulli_poly, zeta_even};
pub use bigfloat::{BigFloat, Round};
pub use cyclotomic::{cyclo_zero_test, CyclotomicNumber};
pub use expr::{interval_eval, Expr};
pub use interval::Interval;
pub use stirling::stirling_first;

/// `C(n, k)`, zero for `k > n`.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

pub fn factorial(n: u64) -> BigInt {
    (2..=n).fold(BigInt::one(), |acc, i| acc * BigInt::from(i))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomials() {
        assert_eq!(binomial(10, 3), BigInt::from(120));
        assert_eq!(binomial(3, 5), BigInt::zero());
        assert_eq!(binomial(0, 0), BigInt::one());
        for n in 1..40u64 {
            for k in 1..n {
                assert_eq!(binomial(n, k), binomial(n - 1, k - 1) + binomial(n - 1, k));
            }
        }
        assert_eq!(factorial(10), BigInt::from(3_628_800));
    }
}
