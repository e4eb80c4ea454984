use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::{mul_slices, LaurentSeries, SeriesError};
use crate::rational::Rational;
use crate::scalar::Scalar;

/// `c_0 + c_1 x + ... + c_{N-1} x^{N-1} + O(x^N)`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PowerSeries<S> {
    coeffs: Vec<S>,
}

impl<S: Scalar> PowerSeries<S> {
    /// Series of the given order from leading coefficients; missing
    /// coefficients are zero and extra ones are dropped.
    pub fn new(mut coeffs: Vec<S>, order: usize) -> Self {
        coeffs.resize(order, S::zero());
        PowerSeries { coeffs }
    }

    pub fn from_fn(order: usize, f: impl FnMut(usize) -> S) -> Self {
        PowerSeries {
            coeffs: (0..order).map(f).collect(),
        }
    }

    pub fn zero(order: usize) -> Self {
        PowerSeries::new(Vec::new(), order)
    }

    pub fn one(order: usize) -> Self {
        PowerSeries::constant(S::one(), order)
    }

    pub fn constant(c: S, order: usize) -> Self {
        PowerSeries::new(vec![c], order)
    }

    pub fn x(order: usize) -> Self {
        PowerSeries::monomial(S::one(), 1, order)
    }

    pub fn monomial(c: S, power: usize, order: usize) -> Self {
        let mut coeffs = vec![S::zero(); order];
        if power < order {
            coeffs[power] = c;
        }
        PowerSeries { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[S] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<S> {
        self.coeffs
    }

    pub fn coeff(&self, n: usize) -> Result<S, SeriesError> {
        self.coeffs
            .get(n)
            .cloned()
            .ok_or(SeriesError::OutOfPrecision {
                exponent: n as i64,
                order: self.order() as i64,
            })
    }

    pub fn constant_term(&self) -> S {
        self.coeffs.first().cloned().unwrap_or_else(S::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// Index of the first nonzero coefficient.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    /// Drop coefficients at and above `order`; never extends.
    pub fn truncate(&self, order: usize) -> Self {
        PowerSeries {
            coeffs: self.coeffs[..order.min(self.order())].to_vec(),
        }
    }

    /// Treat the known coefficients as an exact polynomial and re-truncate
    /// at `order`, padding with zeros.
    pub fn as_polynomial_with_order(&self, order: usize) -> Self {
        PowerSeries::new(self.coeffs.clone(), order)
    }

    pub fn map<T: Scalar>(&self, f: impl FnMut(&S) -> T) -> PowerSeries<T> {
        PowerSeries {
            coeffs: self.coeffs.iter().map(f).collect(),
        }
    }

    fn same_order(&self, other: &Self) -> Result<(), SeriesError> {
        if self.order() != other.order() {
            return Err(SeriesError::OrderMismatch {
                left: self.order() as i64,
                right: other.order() as i64,
            });
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self, SeriesError> {
        self.same_order(other)?;
        Ok(PowerSeries {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a.add_ref(b))
                .collect(),
        })
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self, SeriesError> {
        self.same_order(other)?;
        Ok(PowerSeries {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a.sub_ref(b))
                .collect(),
        })
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self, SeriesError> {
        self.same_order(other)?;
        Ok(PowerSeries {
            coeffs: mul_slices(&self.coeffs, &other.coeffs, self.order()),
        })
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self, SeriesError> {
        self.same_order(other)?;
        Ok(self * &other.inverse()?)
    }

    pub fn scale(&self, c: &S) -> Self {
        self.map(|a| a.mul_ref(c))
    }

    pub fn scale_rational(&self, c: &Rational) -> Self {
        self.map(|a| a.scale(c))
    }

    /// Multiply by `x^k`, keeping the order.
    pub fn shift(&self, k: usize) -> Self {
        let n = self.order();
        let mut coeffs = vec![S::zero(); k.min(n)];
        coeffs.extend(self.coeffs.iter().take(n.saturating_sub(k)).cloned());
        PowerSeries { coeffs }
    }

    /// Divide by `x^k`; the first `k` coefficients must vanish. The order
    /// drops by `k`.
    pub fn div_x_pow(&self, k: usize) -> Result<Self, SeriesError> {
        if self.coeffs.iter().take(k).any(|c| !c.is_zero()) {
            return Err(SeriesError::DivisionByNonUnit);
        }
        Ok(PowerSeries {
            coeffs: self.coeffs.iter().skip(k).cloned().collect(),
        })
    }

    /// Multiplicative inverse; the constant term must be a unit.
    pub fn inverse(&self) -> Result<Self, SeriesError> {
        let n = self.order();
        if n == 0 {
            return Ok(self.clone());
        }
        let inv0 = self.coeffs[0]
            .inverse()
            .ok_or(SeriesError::DivisionByNonUnit)?;
        let mut out: Vec<S> = Vec::with_capacity(n);
        out.push(inv0.clone());
        for i in 1..n {
            let acc = S::dot((1..=i).map(|j| (&self.coeffs[j], &out[i - j])));
            out.push(acc.mul_ref(&inv0).neg_ref());
        }
        Ok(PowerSeries { coeffs: out })
    }

    /// Termwise derivative; the last coefficient becomes unknown, so the
    /// order drops by one.
    pub fn derivative(&self) -> Self {
        PowerSeries {
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c.scale(&Rational::from(i)))
                .collect(),
        }
    }

    /// Antiderivative with zero constant of integration; order grows by one.
    pub fn integrate(&self) -> Self {
        let mut coeffs = Vec::with_capacity(self.order() + 1);
        coeffs.push(S::zero());
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs.push(c.scale(&Rational::new(1, i as i64 + 1)));
        }
        PowerSeries { coeffs }
    }

    /// `exp(a)` for `a` with zero constant term.
    pub fn exp(&self) -> Result<Self, SeriesError> {
        if !self.constant_term().is_zero() {
            return Err(SeriesError::BadConstantTerm("exp requires constant term 0"));
        }
        let n = self.order();
        let mut out: Vec<S> = Vec::with_capacity(n);
        if n == 0 {
            return Ok(self.clone());
        }
        out.push(S::one());
        // e' = a' e
        for i in 1..n {
            let mut acc = S::zero();
            for k in 1..=i {
                if self.coeffs[k].is_zero() {
                    continue;
                }
                acc += &self.coeffs[k]
                    .mul_ref(&out[i - k])
                    .scale(&Rational::from(k));
            }
            out.push(acc.scale(&Rational::new(1, i as i64)));
        }
        Ok(PowerSeries { coeffs: out })
    }

    /// `log(a)` for `a` with constant term 1.
    pub fn log(&self) -> Result<Self, SeriesError> {
        if self.constant_term() != S::one() {
            return Err(SeriesError::BadConstantTerm("log requires constant term 1"));
        }
        let n = self.order();
        let mut out: Vec<S> = vec![S::zero(); n];
        // a l' = a'
        for i in 1..n {
            let mut acc = self.coeffs[i].scale(&Rational::from(i));
            for (k, lk) in out.iter().enumerate().take(i).skip(1) {
                if lk.is_zero() {
                    continue;
                }
                acc -= &lk
                    .mul_ref(&self.coeffs[i - k])
                    .scale(&Rational::from(k));
            }
            out[i] = acc.scale(&Rational::new(1, i as i64));
        }
        Ok(PowerSeries { coeffs: out })
    }

    /// Integer power; negative powers need an invertible constant term.
    pub fn powi(&self, e: i64) -> Result<Self, SeriesError> {
        let base = if e < 0 { self.inverse()? } else { self.clone() };
        let mut e = e.unsigned_abs();
        let mut acc = PowerSeries::one(self.order());
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &sq;
            }
            e >>= 1;
            if e > 0 {
                sq = &sq * &sq;
            }
        }
        Ok(acc)
    }

    /// `a^e` for rational `e`, as `(1+h)^e = sum binom(e,k) h^k` with
    /// `h = a - 1`. Integer exponents fall back to [`PowerSeries::powi`].
    pub fn pow_rational(&self, e: &Rational) -> Result<Self, SeriesError> {
        if let Some(i) = e.to_i64() {
            return self.powi(i);
        }
        if self.constant_term() != S::one() {
            return Err(SeriesError::BadConstantTerm(
                "non-integer power requires constant term 1",
            ));
        }
        let mut h = self.clone();
        h.coeffs[0] = S::zero();
        let binom: PowerSeries<S> = super::special::binomial_series(e, self.order());
        binom.compose(&h)
    }

    /// `self(inner)` for `inner` with zero constant term. The result is exact
    /// through `min(inner.order, v * self.order)` where `v` is the valuation
    /// of `inner`.
    pub fn compose(&self, inner: &Self) -> Result<Self, SeriesError> {
        if !inner.constant_term().is_zero() {
            return Err(SeriesError::InadmissibleComposition(
                "inner series must have zero constant term",
            ));
        }
        let v = inner.valuation().unwrap_or(usize::MAX);
        let order = inner.order().min(v.saturating_mul(self.order()));
        // terms c_n g^n with n v >= order vanish at this precision
        let terms = self.order().min(order.div_ceil(v.max(1)));
        Ok(self.horner(inner, order, terms))
    }

    /// Substitute into the known coefficients read as an exact polynomial;
    /// `inner` may have any constant term.
    pub fn compose_polynomial(&self, inner: &Self) -> Self {
        self.horner(inner, inner.order(), self.order())
    }

    fn horner(&self, inner: &Self, order: usize, terms: usize) -> Self {
        let inner_c = &inner.coeffs[..order.min(inner.order())];
        let mut acc: Vec<S> = vec![S::zero(); order];
        for c in self.coeffs[..terms].iter().rev() {
            acc = mul_slices(&acc, inner_c, order);
            if order > 0 {
                acc[0] += c;
            }
        }
        PowerSeries { coeffs: acc }
    }

    /// Compositional inverse by solving `f(g(x)) = x` one coefficient at a
    /// time. `[x^n] g^j` for `j >= 2` only involves `g_1..g_{n-1}`, so each
    /// new coefficient is a triangular solve against the running powers.
    pub fn reversion(&self) -> Result<Self, SeriesError> {
        let n = self.order();
        if !self.constant_term().is_zero() {
            return Err(SeriesError::NotReversible("constant term is nonzero"));
        }
        if n < 2 {
            return Ok(PowerSeries::zero(n));
        }
        let f1_inv = self.coeffs[1]
            .inverse()
            .ok_or(SeriesError::NotReversible("linear coefficient is not invertible"))?;
        // powers[j][m] = [x^m] g^(j+1)
        let mut powers: Vec<Vec<S>> = vec![vec![S::zero(); n]];
        powers[0][1] = f1_inv;
        for m in 2..n {
            // [x^m] g^j for j >= 2, from g and g^(j-1)
            for j in 2..=m {
                if powers.len() < j {
                    powers.push(vec![S::zero(); n]);
                }
                let acc = S::dot((1..=(m - j + 1)).map(|i| (&powers[0][i], &powers[j - 2][m - i])));
                powers[j - 1][m] = acc;
            }
            let rest = S::dot((2..=m).map(|j| (&self.coeffs[j], &powers[j - 1][m])));
            powers[0][m] = rest.mul_ref(&powers[0][1]).neg_ref();
        }
        Ok(PowerSeries {
            coeffs: powers.swap_remove(0),
        })
    }

    pub fn to_laurent(&self) -> LaurentSeries<S> {
        LaurentSeries::new(0, self.coeffs.clone(), self.order() as i64)
    }
}

impl<S: Scalar> fmt::Display for PowerSeries<S> {
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
            match i {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})*x")?,
                _ => write!(f, "({c})*x^{i}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O(x^{})", self.order())
    }
}

impl<S: Scalar> fmt::Debug for PowerSeries<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

macro_rules! series_op {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl<S: Scalar> $trait<&PowerSeries<S>> for &PowerSeries<S> {
            type Output = PowerSeries<S>;
            fn $method(self, rhs: &PowerSeries<S>) -> PowerSeries<S> {
                self.$checked(rhs).expect("power series truncation orders differ")
            }
        }
        impl<S: Scalar> $trait<PowerSeries<S>> for PowerSeries<S> {
            type Output = PowerSeries<S>;
            fn $method(self, rhs: PowerSeries<S>) -> PowerSeries<S> {
                (&self).$method(&rhs)
            }
        }
        impl<S: Scalar> $trait<&PowerSeries<S>> for PowerSeries<S> {
            type Output = PowerSeries<S>;
            fn $method(self, rhs: &PowerSeries<S>) -> PowerSeries<S> {
                (&self).$method(rhs)
            }
        }
        impl<S: Scalar> $trait<PowerSeries<S>> for &PowerSeries<S> {
            type Output = PowerSeries<S>;
            fn $method(self, rhs: PowerSeries<S>) -> PowerSeries<S> {
                self.$method(&rhs)
            }
        }
    };
}

series_op!(Add, add, checked_add);
series_op!(Sub, sub, checked_sub);
series_op!(Mul, mul, checked_mul);

impl<S: Scalar> Neg for &PowerSeries<S> {
    type Output = PowerSeries<S>;
    fn neg(self) -> PowerSeries<S> {
        self.map(|c| c.neg_ref())
    }
}

impl<S: Scalar> Neg for PowerSeries<S> {
    type Output = PowerSeries<S>;
    fn neg(self) -> PowerSeries<S> {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numbers::factorial;

    type Ps = PowerSeries<Rational>;

    fn ps(cs: &[i64], order: usize) -> Ps {
        PowerSeries::new(cs.iter().map(|&c| Rational::from(c)).collect(), order)
    }

    fn q(n: i64) -> Rational {
        Rational::from(n)
    }

    #[test]
    fn product_and_quotient() {
        let a = ps(&[1, 1], 5);
        let b = ps(&[1, -1], 5);
        assert_eq!(&a * &b, ps(&[1, 0, -1], 5));
        let geom = ps(&[1], 6).checked_div(&ps(&[1, -1], 6)).unwrap();
        assert_eq!(geom, ps(&[1, 1, 1, 1, 1, 1], 6));
        assert_eq!(
            ps(&[1], 4).checked_div(&ps(&[0, 1], 4)),
            Err(SeriesError::DivisionByNonUnit)
        );
    }

    #[test]
    fn mixing_orders_is_an_error() {
        assert_eq!(
            ps(&[1], 3).checked_add(&ps(&[1], 4)),
            Err(SeriesError::OrderMismatch { left: 3, right: 4 })
        );
    }

    #[test]
    fn calculus() {
        assert_eq!(ps(&[0, 0, 0, 1], 5).derivative(), ps(&[0, 0, 3], 4));
        assert_eq!(ps(&[1, 2], 3).integrate(), ps(&[0, 1, 1], 4));
    }

    #[test]
    fn exp_log_pow() {
        let n = 10;
        let x = Ps::x(n);
        let one_plus_x = ps(&[1, 1], n);
        assert_eq!(one_plus_x.log().unwrap().exp().unwrap(), one_plus_x);
        let e = x.exp().unwrap();
        for i in 0..n {
            assert_eq!(e.coeff(i).unwrap(), Rational::new(1, 1) / Rational::from(factorial(i as u64)));
        }
        let inv = one_plus_x.pow_rational(&q(-1)).unwrap();
        assert_eq!(inv, Ps::from_fn(n, |i| q(if i % 2 == 0 { 1 } else { -1 })));
        let half = one_plus_x.pow_rational(&Rational::new(1, 2)).unwrap();
        assert_eq!(&half * &half, one_plus_x);
        assert!(ps(&[1, 1], n).exp().is_err());
        assert!(ps(&[2, 1], n).log().is_err());
        assert!(ps(&[2, 1], n).pow_rational(&Rational::new(1, 3)).is_err());
    }

    #[test]
    fn composition() {
        let n = 8;
        let f = ps(&[3, 1, 4, 1, 5], n);
        assert_eq!(f.compose(&Ps::x(n)).unwrap(), f);
        let geom = Ps::from_fn(n, |_| q(1));
        assert_eq!(geom.compose(&Ps::x(n)).unwrap(), geom);
        assert!(f.compose(&ps(&[1, 1], n)).is_err());
        // polynomial outer may take any inner
        let p = ps(&[0, 0, 1], n);
        assert_eq!(p.compose_polynomial(&ps(&[1, 1], n)), ps(&[1, 2, 1], n));
    }

    #[test]
    fn reversion_basics() {
        let n = 10;
        assert_eq!(Ps::x(n).reversion().unwrap(), Ps::x(n));
        // (x - x^2)^<-1> = x c(x)
        let g = ps(&[0, 1, -1], n).reversion().unwrap();
        let catalan = [0, 1, 1, 2, 5, 14, 42, 132, 429, 1430];
        assert_eq!(g, ps(&catalan, n));
        assert!(ps(&[1, 1], n).reversion().is_err());
        assert!(ps(&[0, 0, 1], n).reversion().is_err());
    }
}
