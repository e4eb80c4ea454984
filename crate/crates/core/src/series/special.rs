//! Frequently used closed-form series.

use super::PowerSeries;
use crate::numbers::factorial;
use crate::rational::Rational;
use crate::scalar::Scalar;

/// `e^{c x} = sum c^n x^n / n!`
pub fn exp_scaled<S: Scalar>(c: &S, order: usize) -> PowerSeries<S> {
    let mut coeffs = Vec::with_capacity(order);
    let mut term = S::one();
    for n in 0..order {
        if n > 0 {
            term = term.mul_ref(c).scale(&Rational::new(1, n as i64));
        }
        coeffs.push(term.clone());
    }
    PowerSeries::new(coeffs, order)
}

pub fn exp_x<S: Scalar>(order: usize) -> PowerSeries<S> {
    PowerSeries::from_fn(order, |n| {
        S::from_rational(Rational::one() / Rational::from(factorial(n as u64)))
    })
}

/// `1 / (1 - x)`
pub fn geometric<S: Scalar>(order: usize) -> PowerSeries<S> {
    PowerSeries::from_fn(order, |_| S::one())
}

/// `(1 + x)^e = sum binom(e, k) x^k`
pub fn binomial_series<S: Scalar>(e: &Rational, order: usize) -> PowerSeries<S> {
    let mut coeffs = Vec::with_capacity(order);
    let mut b = Rational::one();
    for k in 0..order as i64 {
        if k > 0 {
            b = b * (e - Rational::from(k - 1)) / Rational::from(k);
        }
        coeffs.push(S::from_rational(b.clone()));
    }
    PowerSeries::new(coeffs, order)
}

/// `log(1 + x)`
pub fn log1p<S: Scalar>(order: usize) -> PowerSeries<S> {
    PowerSeries::from_fn(order, |n| {
        if n == 0 {
            S::zero()
        } else {
            let sign = if n % 2 == 1 { 1 } else { -1 };
            S::from_rational(Rational::new(sign, n as i64))
        }
    })
}

/// Polynomial `sum c_i x^i` with integer coefficients.
pub fn poly<S: Scalar>(coeffs: &[i64], order: usize) -> PowerSeries<S> {
    PowerSeries::new(coeffs.iter().map(|&c| S::from_int(c)).collect(), order)
}
