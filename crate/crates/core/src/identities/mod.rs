//! Named verification routines for the identities produced by Lagrange
//! inversion. Each check returns an [`IdentityReport`]; failures are data,
//! not errors.

mod catalan;
mod fc_poly;
mod fuss_catalan;
mod misc;
mod narayana;
mod polys;
mod stirling;
mod tree;

use std::collections::BTreeMap;
use std::fmt;
use std::time::Instant;

use serde::Serialize;
use serde_json::Value;
use thiserror::Error;

pub use catalan::{catalan_series, check_catalan_suite};
pub use fc_poly::{check_fc_polynomiality, fc_sum_series, primitive_integer_form};
pub use fuss_catalan::{check_fuss_catalan, check_jensen, check_rothe_hagen, fuss_catalan_series};
pub use misc::{
    check_hirzebruch_residue, check_raney, check_rational_expansion, check_schur_jabotinsky,
};
pub use narayana::{check_fuss_narayana, check_narayana_suite};
pub use polys::{
    check_p_l, check_q_l, check_r_m, compute_p_l, compute_q_l, compute_r_m, RatFunc,
};
pub use stirling::{
    check_ffd_lemma, check_ws_egf, finite_difference, weighted_stirling, weighted_stirling_poly,
};
pub use tree::{check_abel, check_lacasse, check_tree_function_suite, tree_function};

/// Every identity name accepted by [`run_identity`].
pub const IDENTITY_NAMES: [&str; 19] = [
    "catalan",
    "fuss-catalan",
    "jensen",
    "rothe-hagen",
    "tree-function",
    "lacasse",
    "abel",
    "weighted-stirling",
    "p-l",
    "r-m",
    "q-l",
    "fc-polynomial",
    "narayana",
    "fuss-narayana",
    "rational-expansion",
    "finite-difference-lemma",
    "raney",
    "schur-jabotinsky",
    "hirzebruch-residue",
];

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IdentityError {
    #[error("unknown identity '{0}'")]
    UnknownIdentity(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("polynomial r_{m} has degree {degree} in {variable}, above {m}")]
    DegreeViolation {
        m: usize,
        variable: &'static str,
        degree: u32,
    },
    #[error("sequence has {available} values, {needed} needed")]
    InsufficientRange { needed: usize, available: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
        })
    }
}

/// The first check that did not hold.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Failure {
    pub check: String,
    /// Coefficient index or parameter tuple where the check failed.
    pub location: BTreeMap<String, Value>,
    pub expected: String,
    pub actual: String,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct IdentityReport {
    pub identity: String,
    pub params: BTreeMap<String, Value>,
    pub order: usize,
    pub status: Status,
    pub first_failure: Option<Failure>,
    /// Number of individual equalities verified.
    pub checks: u64,
    #[serde(skip)]
    pub elapsed_ms: u128,
    #[serde(skip_serializing_if = "BTreeMap::is_empty")]
    pub details: BTreeMap<String, Value>,
}

impl IdentityReport {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

/// Marker returned through `?` once a check has failed.
#[derive(Debug)]
pub(crate) struct Stop;

pub(crate) type Step = Result<(), Stop>;

/// Collects equality checks for one report, stopping at the first failure.
pub(crate) struct Checker {
    name: String,
    order: usize,
    params: BTreeMap<String, Value>,
    details: BTreeMap<String, Value>,
    failure: Option<Failure>,
    checks: u64,
    start: Instant,
}

impl Checker {
    pub(crate) fn new(name: &str, order: usize) -> Self {
        Checker {
            name: name.to_string(),
            order,
            params: BTreeMap::new(),
            details: BTreeMap::new(),
            failure: None,
            checks: 0,
            start: Instant::now(),
        }
    }

    pub(crate) fn param(&mut self, key: &str, value: impl Into<Value>) -> &mut Self {
        self.params.insert(key.to_string(), value.into());
        self
    }

    pub(crate) fn detail(&mut self, key: &str, value: impl Into<Value>) {
        self.details.insert(key.to_string(), value.into());
    }

    pub(crate) fn eq<T: PartialEq + fmt::Display>(
        &mut self,
        check: &str,
        location: &[(&str, i64)],
        expected: &T,
        actual: &T,
    ) -> Step {
        self.checks += 1;
        if expected == actual {
            return Ok(());
        }
        self.fail(check, location, expected.to_string(), actual.to_string())
    }

    pub(crate) fn truth(&mut self, check: &str, location: &[(&str, i64)], holds: bool) -> Step {
        self.checks += 1;
        if holds {
            return Ok(());
        }
        self.fail(check, location, "true".into(), "false".into())
    }

    pub(crate) fn fail(
        &mut self,
        check: &str,
        location: &[(&str, i64)],
        expected: String,
        actual: String,
    ) -> Step {
        self.failure = Some(Failure {
            check: check.to_string(),
            location: location
                .iter()
                .map(|(k, v)| (k.to_string(), Value::from(*v)))
                .collect(),
            expected,
            actual,
        });
        Err(Stop)
    }

    pub(crate) fn finish(self, _outcome: Step) -> IdentityReport {
        IdentityReport {
            identity: self.name,
            params: self.params,
            order: self.order,
            status: if self.failure.is_none() {
                Status::Pass
            } else {
                Status::Fail
            },
            first_failure: self.failure,
            checks: self.checks,
            elapsed_ms: self.start.elapsed().as_millis(),
            details: self.details,
        }
    }
}

/// Optional overrides for [`run_identity`]; unset fields take the defaults
/// of each check.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct IdentityParams {
    pub k: Option<i64>,
    pub p: Option<i64>,
    pub i: Option<i64>,
    pub j: Option<i64>,
    pub r: Option<i64>,
    pub n_max: Option<i64>,
    pub seed: Option<u64>,
}

fn one_or(v: Option<i64>, default: std::ops::RangeInclusive<i64>) -> Vec<i64> {
    match v {
        Some(x) => vec![x],
        None => default.collect(),
    }
}

fn nonneg(name: &str, v: Option<i64>, default: i64) -> Result<usize, IdentityError> {
    let v = v.unwrap_or(default);
    usize::try_from(v).map_err(|_| IdentityError::InvalidParameter(format!("{name} must be >= 0")))
}

/// Run a named identity check at truncation order `order`.
pub fn run_identity(
    name: &str,
    params: &IdentityParams,
    order: usize,
) -> Result<IdentityReport, IdentityError> {
    if order == 0 {
        return Err(IdentityError::InvalidParameter("order must be >= 1".into()));
    }
    let seed = params.seed.unwrap_or(1);
    let report = match name {
        "catalan" => check_catalan_suite(&one_or(params.k, -5..=5), order),
        "fuss-catalan" => check_fuss_catalan(&one_or(params.p, 2..=5), &one_or(params.k, -3..=5), order),
        "jensen" => {
            let n_max = nonneg("n-max", params.n_max, 8)?;
            check_jensen(
                &one_or(params.p, 0..=4),
                &one_or(params.j, -6..=6),
                &one_or(params.r, -6..=6),
                n_max,
            )
        }
        "rothe-hagen" => {
            let n_max = nonneg("n-max", params.n_max, 8)?;
            check_rothe_hagen(&one_or(params.p, 0..=4), &one_or(params.k, -6..=6), n_max)
        }
        "tree-function" => check_tree_function_suite(&one_or(params.k, -3..=5), order),
        "lacasse" => check_lacasse(order),
        "abel" => check_abel(nonneg("n-max", params.n_max, 8)?),
        "weighted-stirling" => check_ws_egf(nonneg("j", params.j, 5)?, order),
        "p-l" => check_p_l(nonneg("n-max", params.n_max, 4)?.max(1), order),
        "q-l" => check_q_l(nonneg("n-max", params.n_max, 4)?.max(1), order),
        "r-m" => check_r_m(nonneg("n-max", params.n_max, 4)?, order)?,
        "fc-polynomial" => {
            let p = params.p.unwrap_or(3);
            if p < 1 {
                return Err(IdentityError::InvalidParameter("p must be >= 1".into()));
            }
            let i = nonneg("i", params.i, 0)?;
            let j = nonneg("j", params.j, 2)?;
            check_fc_polynomiality(p, i, j, order)
        }
        "narayana" => check_narayana_suite(order.min(12)),
        "fuss-narayana" => check_fuss_narayana(&one_or(params.k, 1..=3), order.min(8)),
        "rational-expansion" => check_rational_expansion(
            &one_or(params.r, 0..=4),
            &one_or(params.j, 0..=4),
            order.min(12),
        ),
        "finite-difference-lemma" => check_ffd_lemma(nonneg("n-max", params.n_max, 6)?, seed),
        "raney" => check_raney(nonneg("n-max", params.n_max, 5)?, &one_or(params.k, 1..=2)),
        "schur-jabotinsky" => check_schur_jabotinsky(20, 6, order.max(16), seed),
        "hirzebruch-residue" => check_hirzebruch_residue(order.max(22), 30, seed),
        other => return Err(IdentityError::UnknownIdentity(other.to_string())),
    };
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unknown_name_is_rejected() {
        assert_eq!(
            run_identity("nope", &IdentityParams::default(), 10),
            Err(IdentityError::UnknownIdentity("nope".into()))
        );
    }

    #[test]
    fn checker_stops_at_first_failure() {
        let mut ck = Checker::new("t", 3);
        let outcome = (|| -> Step {
            ck.eq("a", &[("n", 0)], &1, &1)?;
            ck.eq("b", &[("n", 1)], &1, &2)?;
            ck.eq("c", &[("n", 2)], &1, &3)?;
            Ok(())
        })();
        let r = ck.finish(outcome);
        assert_eq!(r.status, Status::Fail);
        assert_eq!(r.checks, 2);
        let f = r.first_failure.unwrap();
        assert_eq!(f.check, "b");
        assert_eq!(f.location["n"], Value::from(1));
    }
}
