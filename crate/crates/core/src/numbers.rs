//! Exact combinatorial numbers used throughout the identity checks.

use num_bigint::BigInt;
use num_traits::One;

use crate::rational::Rational;

pub fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * i)
}

/// `binom(a, k) = a(a-1)...(a-k+1)/k!` for integer `k >= 0`, and 0 for `k < 0`.
///
/// The upper argument is an arbitrary rational, so the binomial theorem
/// `(1+x)^a = sum binom(a,k) x^k` holds for every `a`.
pub fn binomial(a: &Rational, k: i64) -> Rational {
    if k < 0 {
        return Rational::zero();
    }
    let mut acc = Rational::one();
    for i in 0..k {
        acc = acc * (a - Rational::from(i)) / Rational::from(i + 1);
    }
    acc
}

/// Integer binomial with integer (possibly negative) upper argument.
pub fn binom(a: i64, k: i64) -> BigInt {
    if k < 0 {
        return BigInt::from(0);
    }
    if a >= 0 && k > a {
        return BigInt::from(0);
    }
    let mut acc = BigInt::one();
    for i in 0..k {
        acc *= a - i;
        acc /= i + 1;
    }
    acc
}

pub fn binom_q(a: i64, k: i64) -> Rational {
    Rational::from(binom(a, k))
}

/// `n! / (k_1! k_2! ...)`, zero when the parts do not sum to `n`.
pub fn multinomial(n: u64, parts: &[u64]) -> BigInt {
    if parts.iter().sum::<u64>() != n {
        return BigInt::from(0);
    }
    let mut acc = factorial(n);
    for &p in parts {
        acc /= factorial(p);
    }
    acc
}

/// `base^exp` with `0^0 = 1`; a negative exponent requires a nonzero base.
pub fn ipow(base: i64, exp: i64) -> Rational {
    Rational::from(base).pow(exp)
}

/// Stirling numbers of the second kind by the triangle recurrence.
pub fn stirling2(n: usize, k: usize) -> BigInt {
    let mut row = vec![BigInt::from(0); k + 1];
    row[0] = BigInt::one();
    for i in 1..=n {
        let mut next = vec![BigInt::from(0); k + 1];
        for j in 1..=k.min(i) {
            next[j] = &row[j] * j + &row[j - 1];
        }
        row = next;
    }
    row[k].clone()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomials() {
        assert_eq!(binom(5, 2), BigInt::from(10));
        assert_eq!(binom(3, 5), BigInt::from(0));
        assert_eq!(binom(-1, 3), BigInt::from(-1));
        assert_eq!(binom(-3, 2), BigInt::from(6));
        assert_eq!(binom(4, -1), BigInt::from(0));
        assert_eq!(binomial(&Rational::new(1, 2), 2), Rational::new(-1, 8));
        for a in -6..8 {
            for k in -1..8 {
                assert_eq!(binomial(&Rational::from(a), k), binom_q(a, k));
            }
        }
    }

    #[test]
    fn multinomials_and_stirling() {
        assert_eq!(multinomial(4, &[2, 1, 1]), BigInt::from(12));
        assert_eq!(multinomial(4, &[2, 1]), BigInt::from(0));
        assert_eq!(stirling2(4, 2), BigInt::from(7));
        assert_eq!(stirling2(0, 0), BigInt::from(1));
        assert_eq!(stirling2(5, 0), BigInt::from(0));
    }
}
