//! Truncated formal power series and Laurent series.
//!
//! A [`PowerSeries`] of order `N` knows its coefficients for exponents
//! `0..N`. Binary operations between power series require equal orders; a
//! mismatch is an error rather than a silent loss of precision.
//!
//! A [`LaurentSeries`] carries its own order. Multiplying by a series with
//! negative valuation lowers the number of exactly known coefficients, and
//! the result records exactly what is still known, so reading a coefficient
//! beyond it fails with [`SeriesError::OutOfPrecision`].

mod laurent;
mod power;
mod serial;
pub mod special;

pub use laurent::LaurentSeries;
pub use power::PowerSeries;
pub use serial::SeriesRecord;

use thiserror::Error;

use crate::scalar::Scalar;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeriesError {
    #[error("truncation orders differ ({left} vs {right})")]
    OrderMismatch { left: i64, right: i64 },
    #[error("divisor has a non-invertible constant term")]
    DivisionByNonUnit,
    #[error("division by the zero series")]
    DivisionByZeroSeries,
    #[error("cannot integrate a series with nonzero coefficient at x^-1")]
    NonIntegrableResidue,
    #[error("bad constant term: {0}")]
    BadConstantTerm(&'static str),
    #[error("inadmissible composition: {0}")]
    InadmissibleComposition(&'static str),
    #[error("series is not reversible: {0}")]
    NotReversible(&'static str),
    #[error("coefficient of x^{exponent} is beyond the known precision (order {order})")]
    OutOfPrecision { exponent: i64, order: i64 },
    #[error("series has negative exponents")]
    NotAPowerSeries,
    #[error("truncation order must be at least 1")]
    InvalidOrder,
}

/// The shared truncation order of one computation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TruncationContext {
    order: usize,
}

impl TruncationContext {
    pub fn new(order: usize) -> Result<Self, SeriesError> {
        if order == 0 {
            return Err(SeriesError::InvalidOrder);
        }
        Ok(TruncationContext { order })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn series<S: Scalar>(&self, coeffs: Vec<S>) -> PowerSeries<S> {
        PowerSeries::new(coeffs, self.order)
    }

    pub fn zero<S: Scalar>(&self) -> PowerSeries<S> {
        PowerSeries::zero(self.order)
    }

    pub fn one<S: Scalar>(&self) -> PowerSeries<S> {
        PowerSeries::one(self.order)
    }

    pub fn x<S: Scalar>(&self) -> PowerSeries<S> {
        PowerSeries::x(self.order)
    }

    pub fn laurent<S: Scalar>(&self, min_exponent: i64, coeffs: Vec<S>) -> LaurentSeries<S> {
        LaurentSeries::new(min_exponent, coeffs, self.order as i64)
    }
}

/// `a * b` truncated to `order` coefficients, treating missing entries as 0.
pub(crate) fn mul_slices<S: Scalar>(a: &[S], b: &[S], order: usize) -> Vec<S> {
    let a_nz: Vec<usize> = (0..a.len().min(order)).filter(|&i| !a[i].is_zero()).collect();
    (0..order)
        .map(|k| {
            S::dot(
                a_nz.iter()
                    .take_while(|&&i| i <= k)
                    .filter(|&&i| k - i < b.len())
                    .map(|&i| (&a[i], &b[k - i])),
            )
        })
        .collect()
}
