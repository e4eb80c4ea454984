use super::{limit, OracleError};
use crate::multipoly::MultiPoly;
use crate::numbers::multinomial;
use crate::rational::Rational;

/// A rooted tree whose children are linearly ordered.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct OrderedTree {
    pub children: Vec<OrderedTree>,
}

impl OrderedTree {
    pub fn leaf() -> Self {
        OrderedTree {
            children: Vec::new(),
        }
    }

    pub fn vertex_count(&self) -> usize {
        1 + self.children.iter().map(|c| c.vertex_count()).sum::<usize>()
    }

    fn push_suffix(&self, out: &mut Vec<u32>) {
        for c in &self.children {
            c.push_suffix(out);
        }
        out.push(self.children.len() as u32);
    }
}

/// A `k`-tuple of ordered trees.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct OrderedForest {
    pub trees: Vec<OrderedTree>,
}

impl OrderedForest {
    pub fn k(&self) -> usize {
        self.trees.len()
    }

    pub fn vertex_count(&self) -> usize {
        self.trees.iter().map(|t| t.vertex_count()).sum()
    }

    /// `n_i`, the number of vertices with `i` children, trailing zeros trimmed.
    pub fn profile(&self) -> Vec<u64> {
        let mut p = Vec::new();
        for c in suffix_code(self) {
            let c = c as usize;
            if p.len() <= c {
                p.resize(c + 1, 0);
            }
            p[c] += 1;
        }
        p
    }
}

/// Postorder child counts: `c(T) = c(T_1) ... c(T_j) j`.
pub fn suffix_code(forest: &OrderedForest) -> Vec<u32> {
    let mut out = Vec::new();
    for t in &forest.trees {
        t.push_suffix(&mut out);
    }
    out
}

/// The suffix code with one subtracted from each entry.
pub fn reduced_code(forest: &OrderedForest) -> Vec<i64> {
    suffix_code(forest).into_iter().map(|c| c as i64 - 1).collect()
}

/// The forest with the given reduced code; the code must sum to `-k` with
/// every partial sum negative.
pub fn decode_reduced(code: &[i64], k: usize) -> Result<OrderedForest, OracleError> {
    let mut stack: Vec<OrderedTree> = Vec::new();
    let mut partial = 0i64;
    for (i, &a) in code.iter().enumerate() {
        if a < -1 {
            return Err(OracleError::InvalidCode(format!("entry {a} at {i} is below -1")));
        }
        partial += a;
        if partial >= 0 {
            return Err(OracleError::InvalidCode(format!(
                "partial sum {partial} at {i} is not negative"
            )));
        }
        let take = (a + 1) as usize;
        let children = stack.split_off(stack.len() - take);
        stack.push(OrderedTree { children });
    }
    if partial != -(k as i64) {
        return Err(OracleError::InvalidCode(format!(
            "sum is {partial}, expected {}",
            -(k as i64)
        )));
    }
    Ok(OrderedForest { trees: stack })
}

fn codes(n: usize, k: usize, cur: &mut Vec<i64>, partial: i64, out: &mut Vec<Vec<i64>>) {
    let left = n - cur.len();
    let target = -(k as i64);
    if left == 0 {
        if partial == target {
            out.push(cur.clone());
        }
        return;
    }
    // each remaining entry is at least -1
    let hi = target - partial + left as i64 - 1;
    for a in -1..=hi {
        let p = partial + a;
        if p >= 0 {
            break;
        }
        cur.push(a);
        codes(n, k, cur, p, out);
        cur.pop();
    }
}

/// Every ordered `k`-forest on `n` vertices, generated from the valid
/// reduced codes in lexicographic order.
pub fn enumerate_ordered_forests(n: usize, k: usize) -> Result<Vec<OrderedForest>, OracleError> {
    limit("n", n, 12)?;
    if k < 1 || k > n {
        return Err(OracleError::InvalidArgument("need 1 <= k <= n".into()));
    }
    let mut all = Vec::new();
    codes(n, k, &mut Vec::new(), 0, &mut all);
    all.iter().map(|c| decode_reduced(c, k)).collect()
}

fn trim(profile: &[u64]) -> Vec<u64> {
    let mut p = profile.to_vec();
    while p.last() == Some(&0) {
        p.pop();
    }
    p
}

/// Number of ordered `k`-forests on `n` vertices in which `profile[i]`
/// vertices have `i` children, by enumeration.
pub fn count_by_profile(n: usize, k: usize, profile: &[u64]) -> Result<u64, OracleError> {
    let want = trim(profile);
    Ok(enumerate_ordered_forests(n, k)?
        .iter()
        .filter(|f| f.profile() == want)
        .count() as u64)
}

/// `(k/n) multinomial(n; n_0, n_1, ...)` when `sum n_i = n` and
/// `sum i n_i = n - k`, else 0.
pub fn forest_profile_formula(n: usize, k: usize, profile: &[u64]) -> Rational {
    let total: u64 = profile.iter().sum();
    let weight: u64 = profile.iter().enumerate().map(|(i, &c)| i as u64 * c).sum();
    if n == 0 || total != n as u64 || weight + k as u64 != n as u64 {
        return Rational::zero();
    }
    Rational::from(k as i64) / Rational::from(n as i64)
        * Rational::from_int(multinomial(n as u64, profile))
}

/// `sum over ordered k-forests on n vertices of prod_v s_(children(v))`,
/// where `s_i` is variable `i`; forests with a vertex of more than
/// `max_children` children are dropped.
pub fn forest_census_polynomial(
    n: usize,
    k: usize,
    max_children: usize,
) -> Result<MultiPoly, OracleError> {
    let mut out = MultiPoly::zero();
    for f in enumerate_ordered_forests(n, k)? {
        let p = f.profile();
        if p.len() > max_children + 1 {
            continue;
        }
        out.add_term(p.iter().map(|&c| c as u32).collect(), Rational::one());
    }
    Ok(out)
}

/// Number of rotations of `seq` with every partial sum negative. The
/// entries must be at least `-1` and sum to a negative number.
pub fn cycle_lemma_count(seq: &[i64]) -> Result<usize, OracleError> {
    if let Some(bad) = seq.iter().find(|&&a| a < -1) {
        return Err(OracleError::BadSequence(format!("entry {bad} is below -1")));
    }
    let sum: i64 = seq.iter().sum();
    if sum >= 0 {
        return Err(OracleError::BadSequence(format!("sum {sum} is not negative")));
    }
    let n = seq.len();
    let mut count = 0;
    for start in 0..n {
        let mut partial = 0;
        let ok = (0..n).all(|i| {
            partial += seq[(start + i) % n];
            partial < 0
        });
        if ok {
            count += 1;
        }
    }
    Ok(count)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tree(children: Vec<OrderedTree>) -> OrderedTree {
        OrderedTree { children }
    }

    #[test]
    fn figure_forest() {
        let f = OrderedForest {
            trees: vec![
                tree(vec![OrderedTree::leaf(), OrderedTree::leaf()]),
                tree(vec![OrderedTree::leaf()]),
            ],
        };
        assert_eq!(suffix_code(&f), vec![0, 0, 2, 0, 1]);
        assert_eq!(reduced_code(&f), vec![-1, -1, 1, -1, 0]);
        assert_eq!(decode_reduced(&[-1, -1, 1, -1, 0], 2).unwrap(), f);
        let single = OrderedForest {
            trees: vec![OrderedTree::leaf()],
        };
        assert_eq!(suffix_code(&single), vec![0]);
        assert_eq!(reduced_code(&single), vec![-1]);
    }

    #[test]
    fn invalid_codes() {
        assert!(matches!(decode_reduced(&[0], 1), Err(OracleError::InvalidCode(_))));
        assert!(matches!(decode_reduced(&[-1, -1], 1), Err(OracleError::InvalidCode(_))));
        assert!(matches!(decode_reduced(&[-2], 2), Err(OracleError::InvalidCode(_))));
    }

    #[test]
    fn counts() {
        assert_eq!(enumerate_ordered_forests(4, 1).unwrap().len(), 5);
        assert_eq!(count_by_profile(3, 1, &[2, 0, 1]).unwrap(), 1);
        assert_eq!(count_by_profile(3, 1, &[1, 2]).unwrap(), 1);
        assert_eq!(count_by_profile(3, 1, &[3]).unwrap(), 0);
        assert_eq!(forest_profile_formula(3, 1, &[3]), Rational::zero());
        assert!(matches!(
            enumerate_ordered_forests(13, 1),
            Err(OracleError::SizeLimit { .. })
        ));
    }

    #[test]
    fn round_trip_small() {
        for n in 1..=7 {
            for k in 1..=n.min(3) {
                for f in enumerate_ordered_forests(n, k).unwrap() {
                    assert_eq!(decode_reduced(&reduced_code(&f), k).unwrap(), f);
                }
            }
        }
    }

    #[test]
    fn cycle_lemma() {
        assert_eq!(cycle_lemma_count(&[-1]).unwrap(), 1);
        assert_eq!(cycle_lemma_count(&[-1, -1, 1, -1, 0]).unwrap(), 2);
        assert!(cycle_lemma_count(&[1, -1]).is_err());
        assert!(cycle_lemma_count(&[-2, 0]).is_err());
    }
}
