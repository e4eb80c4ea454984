//! JSON form of a series: `{"min_exponent", "order", "coefficients"}`.

use serde::{Deserialize, Serialize};

use super::{LaurentSeries, PowerSeries, SeriesError};
use crate::scalar::Scalar;

/// `coefficients[i]` is the coefficient of `x^(min_exponent + i)`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SeriesRecord<S> {
    pub min_exponent: i64,
    pub order: i64,
    pub coefficients: Vec<S>,
}

impl<S: Scalar> From<&LaurentSeries<S>> for SeriesRecord<S> {
    fn from(a: &LaurentSeries<S>) -> Self {
        SeriesRecord {
            min_exponent: a.min_exponent(),
            order: a.order(),
            coefficients: a.coeffs().to_vec(),
        }
    }
}

impl<S: Scalar> From<&PowerSeries<S>> for SeriesRecord<S> {
    fn from(a: &PowerSeries<S>) -> Self {
        SeriesRecord {
            min_exponent: 0,
            order: a.order() as i64,
            coefficients: a.coeffs().to_vec(),
        }
    }
}

impl<S: Scalar> SeriesRecord<S> {
    pub fn to_laurent(&self) -> Result<LaurentSeries<S>, SeriesError> {
        if self.coefficients.len() as i64 > self.order - self.min_exponent {
            return Err(SeriesError::OutOfPrecision {
                exponent: self.min_exponent + self.coefficients.len() as i64 - 1,
                order: self.order,
            });
        }
        Ok(LaurentSeries::new(
            self.min_exponent,
            self.coefficients.clone(),
            self.order,
        ))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::Rational;

    #[test]
    fn round_trip() {
        let a = LaurentSeries::new(
            -2,
            vec![Rational::new(1, 2), Rational::zero(), Rational::from(-3)],
            3,
        );
        let json = serde_json::to_string(&SeriesRecord::from(&a)).unwrap();
        assert_eq!(
            json,
            r#"{"min_exponent":-2,"order":3,"coefficients":["1/2","0/1","-3/1","0/1","0/1"]}"#
        );
        let back: SeriesRecord<Rational> = serde_json::from_str(&json).unwrap();
        assert_eq!(back.to_laurent().unwrap(), a);
    }
}
