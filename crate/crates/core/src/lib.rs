//! Exact formal power series, Lagrange inversion in all its classical forms,
//! and machine checks of the identities it produces.

pub mod multipoly;
pub mod combinat;
pub mod identities;
pub mod lagrange;
pub mod numbers;
pub mod rational;
pub mod scalar;
pub mod series;

pub use multipoly::MultiPoly;
pub use rational::Rational;
pub use scalar::Scalar;
pub use series::{LaurentSeries, PowerSeries, SeriesError, TruncationContext};
