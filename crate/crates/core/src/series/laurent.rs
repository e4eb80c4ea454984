use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::{mul_slices, PowerSeries, SeriesError};
use crate::rational::Rational;
use crate::scalar::Scalar;

/// `sum_{n >= m} c_n x^n + O(x^N)` with finitely many negative exponents.
///
/// Stored canonically: `coeffs[i]` is the coefficient of `x^(min + i)`,
/// `coeffs[0]` is nonzero, and `coeffs.len() == order - min`. The zero
/// series has `min == order` and no stored coefficients.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LaurentSeries<S> {
    min: i64,
    coeffs: Vec<S>,
    order: i64,
}

impl<S: Scalar> LaurentSeries<S> {
    pub fn new(min_exponent: i64, coeffs: Vec<S>, order: i64) -> Self {
        let len = (order - min_exponent).max(0) as usize;
        let mut coeffs = coeffs;
        coeffs.resize(len, S::zero());
        match coeffs.iter().position(|c| !c.is_zero()) {
            Some(lead) => {
                coeffs.drain(..lead);
                LaurentSeries {
                    min: min_exponent + lead as i64,
                    coeffs,
                    order,
                }
            }
            None => LaurentSeries::zero(order),
        }
    }

    pub fn zero(order: i64) -> Self {
        LaurentSeries {
            min: order,
            coeffs: Vec::new(),
            order,
        }
    }

    pub fn one(order: i64) -> Self {
        LaurentSeries::monomial(S::one(), 0, order)
    }

    pub fn monomial(c: S, exponent: i64, order: i64) -> Self {
        LaurentSeries::new(exponent, vec![c], order)
    }

    pub fn from_power_series(a: &PowerSeries<S>) -> Self {
        LaurentSeries::new(0, a.coeffs().to_vec(), a.order() as i64)
    }

    /// Smallest exponent with a nonzero coefficient; equal to `order` for the
    /// zero series.
    pub fn min_exponent(&self) -> i64 {
        self.min
    }

    pub fn order(&self) -> i64 {
        self.order
    }

    pub fn valuation(&self) -> Option<i64> {
        (!self.is_zero()).then_some(self.min)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Coefficients for exponents `min_exponent..order`.
    pub fn coeffs(&self) -> &[S] {
        &self.coeffs
    }

    pub fn coeff(&self, n: i64) -> Result<S, SeriesError> {
        if n >= self.order {
            return Err(SeriesError::OutOfPrecision {
                exponent: n,
                order: self.order,
            });
        }
        if n < self.min {
            return Ok(S::zero());
        }
        Ok(self.coeffs[(n - self.min) as usize].clone())
    }

    /// Coefficient of `x^{-1}`.
    pub fn residue(&self) -> Result<S, SeriesError> {
        self.coeff(-1)
    }

    pub fn truncate(&self, order: i64) -> Self {
        if order >= self.order {
            return self.clone();
        }
        LaurentSeries::new(self.min, self.coeffs.clone(), order)
    }

    pub fn to_power_series(&self) -> Result<PowerSeries<S>, SeriesError> {
        if self.min < 0 {
            return Err(SeriesError::NotAPowerSeries);
        }
        let order = self.order.max(0) as usize;
        let mut coeffs = vec![S::zero(); (self.min as usize).min(order)];
        coeffs.extend(self.coeffs.iter().cloned());
        Ok(PowerSeries::new(coeffs, order))
    }

    /// `self = x^m u(x)` with `u(0) != 0`; returns `(m, u)` where `u` carries
    /// the relative precision `order - m`.
    fn split_unit(&self) -> (i64, PowerSeries<S>) {
        let len = self.coeffs.len();
        (self.min, PowerSeries::new(self.coeffs.clone(), len))
    }

    fn from_unit(m: i64, u: PowerSeries<S>) -> Self {
        let order = m + u.order() as i64;
        LaurentSeries::new(m, u.into_coeffs(), order)
    }

    pub fn map<T: Scalar>(&self, f: impl FnMut(&S) -> T) -> LaurentSeries<T> {
        LaurentSeries::new(self.min, self.coeffs.iter().map(f).collect(), self.order)
    }

    pub fn scale(&self, c: &S) -> Self {
        self.map(|a| a.mul_ref(c))
    }

    pub fn scale_rational(&self, c: &Rational) -> Self {
        self.map(|a| a.scale(c))
    }

    /// Multiply by `x^k`.
    pub fn shift(&self, k: i64) -> Self {
        LaurentSeries::new(self.min + k, self.coeffs.clone(), self.order + k)
    }

    fn combine(&self, other: &Self, negate: bool) -> Self {
        let order = self.order.min(other.order);
        let lo = self.min.min(other.min).min(order);
        let mut out = vec![S::zero(); (order - lo) as usize];
        for (i, c) in self.coeffs.iter().enumerate() {
            let e = self.min + i as i64;
            if e < order {
                out[(e - lo) as usize] += c;
            }
        }
        for (i, c) in other.coeffs.iter().enumerate() {
            let e = other.min + i as i64;
            if e < order {
                if negate {
                    out[(e - lo) as usize] -= c;
                } else {
                    out[(e - lo) as usize] += c;
                }
            }
        }
        LaurentSeries::new(lo, out, order)
    }

    pub fn checked_mul(&self, other: &Self) -> Self {
        let order = (self.order + other.min).min(other.order + self.min);
        let lo = self.min + other.min;
        let len = (order - lo).max(0) as usize;
        LaurentSeries::new(lo, mul_slices(&self.coeffs, &other.coeffs, len), order)
    }

    pub fn inverse(&self) -> Result<Self, SeriesError> {
        if self.is_zero() {
            return Err(SeriesError::DivisionByZeroSeries);
        }
        let (m, u) = self.split_unit();
        Ok(LaurentSeries::from_unit(-m, u.inverse()?))
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self, SeriesError> {
        Ok(self.checked_mul(&other.inverse()?))
    }

    /// Integer power. `0^0` is the exact series 1.
    pub fn powi(&self, e: i64) -> Result<Self, SeriesError> {
        if self.is_zero() {
            return match e {
                0 => Ok(LaurentSeries::one(i64::MAX / 4)),
                e if e > 0 => Ok(LaurentSeries::zero(self.order.saturating_mul(e))),
                _ => Err(SeriesError::DivisionByZeroSeries),
            };
        }
        let (m, u) = self.split_unit();
        Ok(LaurentSeries::from_unit(m * e, u.powi(e)?))
    }

    /// Rational power of `x^m u` with `u(0) = 1`; `m e` must be an integer.
    pub fn pow_rational(&self, e: &Rational) -> Result<Self, SeriesError> {
        if let Some(i) = e.to_i64() {
            return self.powi(i);
        }
        if self.is_zero() {
            return Ok(LaurentSeries::zero(self.order));
        }
        let (m, u) = self.split_unit();
        let shift = e * &Rational::from(m);
        let shift = shift.to_i64().ok_or(SeriesError::BadConstantTerm(
            "fractional power of a monomial factor",
        ))?;
        Ok(LaurentSeries::from_unit(shift, u.pow_rational(e)?))
    }

    pub fn derivative(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| c.scale(&Rational::from(self.min + i as i64)))
            .collect();
        LaurentSeries::new(self.min - 1, coeffs, self.order - 1)
    }

    pub fn integrate(&self) -> Result<Self, SeriesError> {
        if self.order > -1 && !self.coeff(-1)?.is_zero() {
            return Err(SeriesError::NonIntegrableResidue);
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| {
                let e = self.min + i as i64;
                if e == -1 {
                    S::zero()
                } else {
                    c.scale(&Rational::new(1, e + 1))
                }
            })
            .collect();
        Ok(LaurentSeries::new(self.min + 1, coeffs, self.order + 1))
    }

    /// `self(inner)`. Negative exponents in `self` need `inner` of valuation
    /// exactly 1 so that `inner^{-1}` is again a Laurent series.
    pub fn compose(&self, inner: &PowerSeries<S>) -> Result<Self, SeriesError> {
        if !inner.constant_term().is_zero() {
            return Err(SeriesError::InadmissibleComposition(
                "inner series must have zero constant term",
            ));
        }
        if self.min >= 0 {
            return Ok(LaurentSeries::from_power_series(
                &self.to_power_series()?.compose(inner)?,
            ));
        }
        if inner.valuation() != Some(1) {
            return Err(SeriesError::InadmissibleComposition(
                "negative exponents need an inner series of valuation 1",
            ));
        }
        let (m, q) = self.split_unit();
        let g = LaurentSeries::from_power_series(inner);
        let gm = g.powi(m)?;
        let qg = LaurentSeries::from_power_series(&q.compose(inner)?);
        Ok(&gm * &qg)
    }
}

impl<S: Scalar> fmt::Display for LaurentSeries<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match self.min + i as i64 {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})*x")?,
                e => write!(f, "({c})*x^{e}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O(x^{})", self.order)
    }
}

impl<S: Scalar> fmt::Debug for LaurentSeries<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl<S: Scalar> Add<&LaurentSeries<S>> for &LaurentSeries<S> {
    type Output = LaurentSeries<S>;
    fn add(self, rhs: &LaurentSeries<S>) -> LaurentSeries<S> {
        self.combine(rhs, false)
    }
}

impl<S: Scalar> Sub<&LaurentSeries<S>> for &LaurentSeries<S> {
    type Output = LaurentSeries<S>;
    fn sub(self, rhs: &LaurentSeries<S>) -> LaurentSeries<S> {
        self.combine(rhs, true)
    }
}

impl<S: Scalar> Mul<&LaurentSeries<S>> for &LaurentSeries<S> {
    type Output = LaurentSeries<S>;
    fn mul(self, rhs: &LaurentSeries<S>) -> LaurentSeries<S> {
        self.checked_mul(rhs)
    }
}

impl<S: Scalar> Add for LaurentSeries<S> {
    type Output = LaurentSeries<S>;
    fn add(self, rhs: LaurentSeries<S>) -> LaurentSeries<S> {
        &self + &rhs
    }
}

impl<S: Scalar> Sub for LaurentSeries<S> {
    type Output = LaurentSeries<S>;
    fn sub(self, rhs: LaurentSeries<S>) -> LaurentSeries<S> {
        &self - &rhs
    }
}

impl<S: Scalar> Mul for LaurentSeries<S> {
    type Output = LaurentSeries<S>;
    fn mul(self, rhs: LaurentSeries<S>) -> LaurentSeries<S> {
        &self * &rhs
    }
}

impl<S: Scalar> Neg for &LaurentSeries<S> {
    type Output = LaurentSeries<S>;
    fn neg(self) -> LaurentSeries<S> {
        self.map(|c| c.neg_ref())
    }
}

impl<S: Scalar> Neg for LaurentSeries<S> {
    type Output = LaurentSeries<S>;
    fn neg(self) -> LaurentSeries<S> {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    type Ls = LaurentSeries<Rational>;

    fn ls(min: i64, cs: &[i64], order: i64) -> Ls {
        LaurentSeries::new(min, cs.iter().map(|&c| Rational::from(c)).collect(), order)
    }

    #[test]
    fn canonical_form() {
        let a = ls(-2, &[0, 0, 3, 1], 5);
        assert_eq!(a.min_exponent(), 0);
        assert_eq!(a.coeffs().len(), 5);
        let z = ls(-2, &[0, 0], 5);
        assert!(z.is_zero());
        assert_eq!(z.min_exponent(), 5);
        assert_eq!(z.coeff(-7).unwrap(), Rational::zero());
        assert!(z.coeff(5).is_err());
    }

    #[test]
    fn quotient_with_shift() {
        // x / (x - x^2) = 1/(1-x)
        let n = 8;
        let q = ls(1, &[1], n).checked_div(&ls(1, &[1, -1], n)).unwrap();
        assert_eq!(q.min_exponent(), 0);
        for e in 0..q.order() {
            assert_eq!(q.coeff(e).unwrap(), Rational::one());
        }
        assert_eq!(ls(0, &[], n).inverse(), Err(SeriesError::DivisionByZeroSeries));
    }

    #[test]
    fn precision_is_tracked() {
        let inv = ls(1, &[1, 1], 6).inverse().unwrap();
        assert_eq!(inv.min_exponent(), -1);
        assert_eq!(inv.order(), 4);
        assert!(matches!(
            inv.coeff(4),
            Err(SeriesError::OutOfPrecision { exponent: 4, order: 4 })
        ));
        let sum = &inv + &ls(0, &[1], 10);
        assert_eq!(sum.order(), 4);
    }

    #[test]
    fn residues_and_calculus() {
        assert_eq!(ls(-1, &[1], 4).residue().unwrap(), Rational::one());
        let a = ls(-3, &[2, 5, 7, 1, 1], 6);
        assert!(a.derivative().residue().unwrap().is_zero());
        assert_eq!(a.integrate(), Err(SeriesError::NonIntegrableResidue));
        let b = ls(-3, &[2, 0, 0, 1], 4);
        assert_eq!(b.integrate().unwrap().derivative(), b);
    }

    #[test]
    fn compose_negative_exponents() {
        // (1/x) o (x/(1-x)) = (1-x)/x
        let n = 8;
        let g = PowerSeries::from_fn(n as usize, |i| {
            if i == 0 { Rational::zero() } else { Rational::one() }
        });
        let r = ls(-1, &[1], n).compose(&g).unwrap();
        assert_eq!(r.coeff(-1).unwrap(), Rational::one());
        assert_eq!(r.coeff(0).unwrap(), Rational::from(-1));
        for e in 1..r.order() {
            assert!(r.coeff(e).unwrap().is_zero());
        }
        let g2 = PowerSeries::new(vec![Rational::zero(), Rational::zero(), Rational::one()], 8);
        assert!(ls(-1, &[1], n).compose(&g2).is_err());
    }
}
