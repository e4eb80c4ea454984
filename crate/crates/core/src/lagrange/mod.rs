//! Lagrange inversion: solvers for `f = xR(f)` and `f = R(f)`, the five
//! equivalent coefficient formulas, derivative forms, and explicit
//! multinomial coefficient sums.

mod derivative;
mod explicit;
mod forms;
mod solve;

pub use derivative::{
    cauchy_convolution_check, derivative_form, solve_x_plus_zh, CauchyCheck, DerivativeForms,
};
pub use explicit::{explicit_coefficient, explicit_from_inverse, raney_coefficient};
pub use forms::{
    coeff_all_forms, constant_term_supplement, form_value, log_f_over_x, power_coefficient,
    schur_jabotinsky_check, Form, FormsReport, SchurJabotinsky,
};
pub use solve::{solve_indeterminate, solve_xr, verify_xr};

use thiserror::Error;

use crate::series::SeriesError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LagrangeError {
    #[error(transparent)]
    Series(#[from] SeriesError),
    #[error("form A is undefined at n = 0")]
    FormAUndefined,
    #[error("coefficient r_{index} has a term free of every parameter")]
    UnguardedCoefficient { index: usize },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}
