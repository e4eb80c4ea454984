//! Brute-force enumeration of trees, forests and code sequences, used as an
//! independent check on the coefficient formulas.

mod forest;
mod labeled;
mod tables;

use thiserror::Error;

pub use forest::{
    count_by_profile, cycle_lemma_count, decode_reduced, enumerate_ordered_forests,
    forest_census_polynomial, forest_profile_formula, reduced_code, suffix_code, OrderedForest,
    OrderedTree,
};
pub use labeled::{
    cayley_degree_sum, count_degree_trees, count_labeled_forests, degree_tree_formula,
    enumerate_labeled_trees, labeled_forest_formula, labeled_forest_profile_count,
    ltree_formula, prufer_decode, prufer_encode, rexp_formula, LabeledForest,
};
pub use tables::{
    cycle_lemma_table, degree_trees_table, labeled_forest_table, ordered_forest_table,
    prufer_table, OracleRow, ORACLE_KINDS,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("{what} = {got} exceeds the exhaustive limit {limit}")]
    SizeLimit {
        what: &'static str,
        limit: usize,
        got: usize,
    },
    #[error("invalid code: {0}")]
    InvalidCode(String),
    #[error("bad sequence: {0}")]
    BadSequence(String),
    #[error("not a tree: {0}")]
    NotATree(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub(crate) fn limit(what: &'static str, got: usize, limit: usize) -> Result<(), OracleError> {
    if got > limit {
        Err(OracleError::SizeLimit { what, limit, got })
    } else {
        Ok(())
    }
}
