use std::collections::BTreeMap;

use num_bigint::BigInt;
use serde::Serialize;

use super::forest::{enumerate_ordered_forests, forest_profile_formula};
use super::labeled::{
    cayley_degree_sum, degree_tree_formula, enumerate_labeled_forests, enumerate_labeled_trees,
    labeled_forest_formula, ltree_formula, prufer_decode, prufer_encode, rexp_formula,
};
use super::{cycle_lemma_count, limit, OracleError};
use crate::numbers::multinomial;
use crate::rational::Rational;

pub const ORACLE_KINDS: [&str; 5] = [
    "ordered-forest",
    "labeled-forest",
    "prufer",
    "cycle-lemma",
    "degree-trees",
];

/// One line of an oracle comparison: an exhaustive count next to the
/// formula it should equal.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OracleRow {
    pub label: String,
    pub oracle: String,
    pub formula: String,
    pub matches: bool,
}

impl OracleRow {
    fn new(label: String, oracle: impl ToString, formula: impl ToString) -> Self {
        let (oracle, formula) = (oracle.to_string(), formula.to_string());
        OracleRow {
            matches: oracle == formula,
            label,
            oracle,
            formula,
        }
    }
}

fn join<T: ToString>(v: &[T]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

fn tally(
    map: &mut BTreeMap<Vec<u64>, u64>,
    key: Vec<u64>,
) {
    *map.entry(key).or_insert(0) += 1;
}

/// Ordered `k`-forests on `n` vertices grouped by child-count profile.
pub fn ordered_forest_table(n: usize, k: usize) -> Result<Vec<OracleRow>, OracleError> {
    let mut by_profile = BTreeMap::new();
    for f in enumerate_ordered_forests(n, k)? {
        tally(&mut by_profile, f.profile());
    }
    Ok(by_profile
        .into_iter()
        .map(|(p, c)| {
            OracleRow::new(
                format!("profile {}", join(&p)),
                c,
                forest_profile_formula(n, k, &p).to_string(),
            )
        })
        .collect())
}

/// Labeled `k`-forests on `[n]` grouped by profile, with the label-class
/// count obtained by dividing out the multinomial, then grouped by the
/// child count of every vertex.
pub fn labeled_forest_table(n: usize, k: usize) -> Result<Vec<OracleRow>, OracleError> {
    let forests = enumerate_labeled_forests(n, k)?;
    let mut by_profile = BTreeMap::new();
    let mut by_children = BTreeMap::new();
    for f in &forests {
        let e = f.child_counts();
        let mut prof = vec![0u64; *e.iter().max().unwrap_or(&0) as usize + 1];
        for &c in &e {
            prof[c as usize] += 1;
        }
        tally(&mut by_profile, prof);
        tally(&mut by_children, e);
    }
    let mut rows = Vec::new();
    for (p, &c) in &by_profile {
        rows.push(OracleRow::new(
            format!("profile {}", join(p)),
            c,
            ltree_formula(n, k, p).to_string(),
        ));
        let classes = Rational::from(c as i64) / Rational::from_int(multinomial(n as u64, p));
        rows.push(OracleRow::new(
            format!("label classes {}", join(p)),
            classes.to_string(),
            rexp_formula(n, k, p).to_string(),
        ));
    }
    for (e, &c) in &by_children {
        rows.push(OracleRow::new(
            format!("children {}", join(e)),
            c,
            labeled_forest_formula(n, k, e),
        ));
    }
    // binom(n-1, k-1) n^(n-k) forests in all
    let total = multinomial(n as u64 - 1, &[k as u64 - 1, (n - k) as u64])
        * BigInt::from(n).pow((n - k) as u32);
    rows.push(OracleRow::new("total".into(), forests.len(), total));
    Ok(rows)
}

/// Trees on `[m]`: the total against `m^(m-2)`, encode then decode on
/// every tree, decode then encode on every code, and the degree property
/// of the code.
pub fn prufer_table(m: usize) -> Result<Vec<OracleRow>, OracleError> {
    if m < 2 {
        return Err(OracleError::InvalidArgument("m must be at least 2".into()));
    }
    let trees = enumerate_labeled_trees(m)?;
    let cayley = BigInt::from(m).pow(m as u32 - 2);
    let mut round_trip = 0usize;
    let mut degree_ok = 0usize;
    for t in &trees {
        let code = prufer_encode(m, t)?;
        if &prufer_decode(m, &code)? == t {
            round_trip += 1;
        }
        let mut deg = vec![0usize; m + 1];
        for &(a, b) in t {
            deg[a] += 1;
            deg[b] += 1;
        }
        if (1..=m).all(|v| code.iter().filter(|&&c| c == v).count() + 1 == deg[v]) {
            degree_ok += 1;
        }
    }
    let mut code_trip = 0usize;
    let mut codes = 0usize;
    let mut code = vec![1usize; m - 2];
    loop {
        codes += 1;
        if prufer_encode(m, &prufer_decode(m, &code)?)? == code {
            code_trip += 1;
        }
        // next code in lexicographic order
        let mut i = code.len();
        while i > 0 && code[i - 1] == m {
            code[i - 1] = 1;
            i -= 1;
        }
        if i == 0 {
            break;
        }
        code[i - 1] += 1;
    }
    Ok(vec![
        OracleRow::new(format!("trees on [{m}]"), trees.len(), &cayley),
        OracleRow::new("decode(encode(t)) = t".into(), round_trip, trees.len()),
        OracleRow::new("encode(decode(c)) = c".into(), code_trip, codes),
        OracleRow::new("codes".into(), codes, &cayley),
        OracleRow::new("degree d appears d-1 times".into(), degree_ok, trees.len()),
    ])
}

/// Every sequence over `alphabet` of length `1..=len` with negative sum
/// `-k`; each row counts the sequences with exactly `k` good rotations
/// against the number of sequences.
pub fn cycle_lemma_table(alphabet: &[i64], len: usize) -> Result<Vec<OracleRow>, OracleError> {
    if alphabet.is_empty() {
        return Err(OracleError::BadSequence("empty alphabet".into()));
    }
    if let Some(bad) = alphabet.iter().find(|&&a| a < -1) {
        return Err(OracleError::BadSequence(format!("entry {bad} is below -1")));
    }
    let mut alpha = alphabet.to_vec();
    alpha.sort_unstable();
    alpha.dedup();
    let size = (alpha.len() as f64).powi(len as i32);
    limit("alphabet^len", size.min(usize::MAX as f64) as usize, 1 << 22)?;
    // (len, k) -> (sequences, sequences with count k)
    let mut stats: BTreeMap<(usize, i64), (u64, u64)> = BTreeMap::new();
    for l in 1..=len {
        let mut idx = vec![0usize; l];
        loop {
            let seq: Vec<i64> = idx.iter().map(|&i| alpha[i]).collect();
            let sum: i64 = seq.iter().sum();
            if sum < 0 {
                let count = cycle_lemma_count(&seq)?;
                let e = stats.entry((l, -sum)).or_insert((0, 0));
                e.0 += 1;
                if count as i64 == -sum {
                    e.1 += 1;
                }
            }
            let mut i = l;
            while i > 0 && idx[i - 1] + 1 == alpha.len() {
                idx[i - 1] = 0;
                i -= 1;
            }
            if i == 0 {
                break;
            }
            idx[i - 1] += 1;
        }
    }
    Ok(stats
        .into_iter()
        .map(|((l, k), (all, good))| OracleRow::new(format!("len {l}, k {k}"), good, all))
        .collect())
}

/// Trees on `[m]` grouped by degree sequence, then the sum of the formula
/// over all valid degree sequences against `m^(m-2)`.
pub fn degree_trees_table(m: usize) -> Result<Vec<OracleRow>, OracleError> {
    let mut by_degree = BTreeMap::new();
    for t in enumerate_labeled_trees(m)? {
        let mut deg = vec![0u64; m];
        for (a, b) in t {
            deg[a - 1] += 1;
            deg[b - 1] += 1;
        }
        tally(&mut by_degree, deg);
    }
    let mut rows: Vec<OracleRow> = by_degree
        .iter()
        .map(|(d, &c)| OracleRow::new(format!("degrees {}", join(d)), c, degree_tree_formula(d)))
        .collect();
    if m >= 2 {
        let cayley = BigInt::from(m).pow(m as u32 - 2);
        rows.push(OracleRow::new(
            "sum over degree sequences".into(),
            cayley_degree_sum(m),
            cayley,
        ));
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tables_match() {
        for rows in [
            ordered_forest_table(1, 1).unwrap(),
            ordered_forest_table(6, 2).unwrap(),
            labeled_forest_table(4, 2).unwrap(),
            prufer_table(5).unwrap(),
            cycle_lemma_table(&[-1, 0, 1], 6).unwrap(),
            degree_trees_table(5).unwrap(),
        ] {
            assert!(rows.iter().all(|r| r.matches), "{rows:?}");
        }
        let p = prufer_table(5).unwrap();
        assert_eq!(p[0].oracle, "125");
        assert_eq!(p[0].formula, "125");
        let single = ordered_forest_table(1, 1).unwrap();
        assert_eq!(single.len(), 1);
        assert_eq!(single[0].oracle, "1");
    }
}
