use num_bigint::BigInt;

use super::{limit, OracleError};
use crate::numbers::{factorial, multinomial};
use crate::rational::Rational;

/// A forest of rooted trees on `[n]`; `parent[v - 1]` is `None` for a root.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabeledForest {
    pub n: usize,
    pub parent: Vec<Option<usize>>,
}

impl LabeledForest {
    pub fn roots(&self) -> Vec<usize> {
        (1..=self.n).filter(|&v| self.parent[v - 1].is_none()).collect()
    }

    /// Number of children of each vertex, indexed from vertex 1.
    pub fn child_counts(&self) -> Vec<u64> {
        let mut c = vec![0; self.n];
        for p in self.parent.iter().flatten() {
            c[p - 1] += 1;
        }
        c
    }
}

fn canonical(mut edges: Vec<(usize, usize)>) -> Vec<(usize, usize)> {
    for e in edges.iter_mut() {
        if e.0 > e.1 {
            *e = (e.1, e.0);
        }
    }
    edges.sort_unstable();
    edges
}

fn find(uf: &mut [usize], mut a: usize) -> usize {
    while uf[a] != a {
        uf[a] = uf[uf[a]];
        a = uf[a];
    }
    a
}

/// Validates `edges` as a tree on `[m]` and returns the sorted edge list.
fn check_tree(m: usize, edges: &[(usize, usize)]) -> Result<Vec<(usize, usize)>, OracleError> {
    if edges.len() + 1 != m {
        return Err(OracleError::NotATree(format!(
            "{} edges on {m} vertices",
            edges.len()
        )));
    }
    let mut uf: Vec<usize> = (0..=m).collect();
    for &(a, b) in edges {
        if a == 0 || b == 0 || a > m || b > m || a == b {
            return Err(OracleError::NotATree(format!("bad edge ({a}, {b})")));
        }
        let (ra, rb) = (find(&mut uf, a), find(&mut uf, b));
        if ra == rb {
            return Err(OracleError::NotATree(format!("edge ({a}, {b}) closes a cycle")));
        }
        uf[ra] = rb;
    }
    Ok(canonical(edges.to_vec()))
}

/// Every tree on `[m]` as a sorted edge list, by testing each set of
/// `m - 1` edges.
pub fn enumerate_labeled_trees(m: usize) -> Result<Vec<Vec<(usize, usize)>>, OracleError> {
    limit("m", m, 8)?;
    if m == 0 {
        return Err(OracleError::InvalidArgument("m must be positive".into()));
    }
    let all: Vec<(usize, usize)> = (1..=m)
        .flat_map(|a| (a + 1..=m).map(move |b| (a, b)))
        .collect();
    let mut out = Vec::new();
    let mut pick = Vec::with_capacity(m - 1);
    fn rec(
        all: &[(usize, usize)],
        start: usize,
        need: usize,
        m: usize,
        pick: &mut Vec<(usize, usize)>,
        out: &mut Vec<Vec<(usize, usize)>>,
    ) {
        if need == 0 {
            if let Ok(t) = check_tree(m, pick) {
                out.push(t);
            }
            return;
        }
        for i in start..=all.len() - need {
            pick.push(all[i]);
            rec(all, i + 1, need - 1, m, pick, out);
            pick.pop();
        }
    }
    rec(&all, 0, m - 1, m, &mut pick, &mut out);
    Ok(out)
}

/// Prüfer code: repeatedly remove the least leaf and record its neighbor.
pub fn prufer_encode(m: usize, edges: &[(usize, usize)]) -> Result<Vec<usize>, OracleError> {
    if m < 2 {
        return Err(OracleError::InvalidArgument("m must be at least 2".into()));
    }
    let edges = check_tree(m, edges)?;
    let mut adj = vec![Vec::new(); m + 1];
    for &(a, b) in &edges {
        adj[a].push(b);
        adj[b].push(a);
    }
    let mut removed = vec![false; m + 1];
    let mut degree: Vec<usize> = adj.iter().map(|v| v.len()).collect();
    let mut code = Vec::with_capacity(m - 2);
    for _ in 0..m - 2 {
        let leaf = (1..=m)
            .find(|&v| !removed[v] && degree[v] == 1)
            .expect("a tree has a leaf");
        let nb = adj[leaf]
            .iter()
            .copied()
            .find(|&u| !removed[u])
            .expect("a leaf has a neighbor");
        code.push(nb);
        removed[leaf] = true;
        degree[nb] -= 1;
    }
    Ok(code)
}

/// The tree on `[m]` with the given Prüfer code.
pub fn prufer_decode(m: usize, code: &[usize]) -> Result<Vec<(usize, usize)>, OracleError> {
    if m < 2 || code.len() + 2 != m {
        return Err(OracleError::InvalidCode(format!(
            "a code of length {} does not describe a tree on {m} vertices",
            code.len()
        )));
    }
    if let Some(bad) = code.iter().find(|&&b| b == 0 || b > m) {
        return Err(OracleError::InvalidCode(format!("entry {bad} is outside 1..={m}")));
    }
    let mut degree = vec![1usize; m + 1];
    for &b in code {
        degree[b] += 1;
    }
    let mut edges = Vec::with_capacity(m - 1);
    for &b in code {
        let leaf = (1..=m).find(|&v| degree[v] == 1).expect("a leaf remains");
        edges.push((leaf, b));
        degree[leaf] = 0;
        degree[b] -= 1;
    }
    let rest: Vec<usize> = (1..=m).filter(|&v| degree[v] == 1).collect();
    edges.push((rest[0], rest[1]));
    Ok(canonical(edges))
}

/// `multinomial(m-2; d_1-1, ..., d_m-1)` when every `d_i >= 1` and
/// `sum d_i = 2(m-1)`, else 0.
pub fn degree_tree_formula(degrees: &[u64]) -> BigInt {
    let m = degrees.len() as u64;
    if m < 2 || degrees.contains(&0) || degrees.iter().sum::<u64>() != 2 * (m - 1) {
        return BigInt::from(u64::from(m == 1 && degrees == [0]));
    }
    let parts: Vec<u64> = degrees.iter().map(|d| d - 1).collect();
    multinomial(m - 2, &parts)
}

/// Trees on `[m]` in which vertex `i` has degree `degrees[i-1]`, by
/// enumeration.
pub fn count_degree_trees(m: usize, degrees: &[u64]) -> Result<u64, OracleError> {
    limit("m", m, 8)?;
    if degrees.len() != m {
        return Err(OracleError::InvalidArgument(format!(
            "{} degrees for {m} vertices",
            degrees.len()
        )));
    }
    let mut count = 0;
    for t in enumerate_labeled_trees(m)? {
        let mut deg = vec![0u64; m];
        for (a, b) in t {
            deg[a - 1] += 1;
            deg[b - 1] += 1;
        }
        if deg == degrees {
            count += 1;
        }
    }
    Ok(count)
}

fn degree_sequences(m: usize, left: u64, cur: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
    if cur.len() == m {
        if left == 0 {
            out.push(cur.clone());
        }
        return;
    }
    let slots = (m - cur.len() - 1) as u64;
    if left < slots + 1 {
        return;
    }
    for d in 1..=left - slots {
        cur.push(d);
        degree_sequences(m, left - d, cur, out);
        cur.pop();
    }
}

/// Sum of the degree formula over every degree sequence on `[m]`; equals
/// `m^(m-2)`.
pub fn cayley_degree_sum(m: usize) -> BigInt {
    if m < 2 {
        return BigInt::from(1);
    }
    let mut seqs = Vec::new();
    degree_sequences(m, 2 * (m as u64 - 1), &mut Vec::new(), &mut seqs);
    seqs.iter().map(|d| degree_tree_formula(d)).sum()
}

/// Calls `visit` with the parent array (`0` marks a root) of every forest
/// of `k` rooted trees on `[n]` whose child counts stay within `cap`.
fn visit_forests(n: usize, k: usize, cap: &[u64], visit: &mut dyn FnMut(&[usize])) {
    fn reaches(parent: &[usize], from: usize, target: usize) -> bool {
        let mut v = from;
        loop {
            if v == target {
                return true;
            }
            if v == 0 || parent[v] == usize::MAX {
                return false;
            }
            v = parent[v];
        }
    }
    #[allow(clippy::too_many_arguments)]
    fn rec(
        v: usize,
        n: usize,
        k: usize,
        roots: usize,
        cap: &[u64],
        children: &mut [u64],
        parent: &mut [usize],
        visit: &mut dyn FnMut(&[usize]),
    ) {
        if v > n {
            if roots == k {
                visit(&parent[1..]);
            }
            return;
        }
        if roots + (n - v + 1) < k {
            return;
        }
        if roots < k {
            parent[v] = 0;
            rec(v + 1, n, k, roots + 1, cap, children, parent, visit);
        }
        for p in 1..=n {
            if p == v || children[p] >= cap[p - 1] || reaches(parent, p, v) {
                continue;
            }
            parent[v] = p;
            children[p] += 1;
            rec(v + 1, n, k, roots, cap, children, parent, visit);
            children[p] -= 1;
        }
        parent[v] = usize::MAX;
    }
    let mut parent = vec![usize::MAX; n + 1];
    let mut children = vec![0u64; n + 1];
    rec(1, n, k, 0, cap, &mut children, &mut parent, visit);
}

/// Forests of `k` rooted trees on `[n]` in which vertex `i` has
/// `child_counts[i-1]` children, by parent-function search.
pub fn count_labeled_forests(n: usize, k: usize, child_counts: &[u64]) -> Result<u64, OracleError> {
    limit("n", n, 7)?;
    if child_counts.len() != n || k == 0 {
        return Err(OracleError::InvalidArgument(
            "need n child counts and k >= 1".into(),
        ));
    }
    let mut count = 0;
    visit_forests(n, k, child_counts, &mut |parent| {
        let mut c = vec![0u64; n];
        for &p in parent {
            if p > 0 {
                c[p - 1] += 1;
            }
        }
        if c == child_counts {
            count += 1;
        }
    });
    Ok(count)
}

/// `multinomial(n-1; k-1, e_1, ..., e_n)` when `sum e_i = n - k`, else 0.
pub fn labeled_forest_formula(n: usize, k: usize, child_counts: &[u64]) -> BigInt {
    if k == 0 || k > n || child_counts.iter().sum::<u64>() + k as u64 != n as u64 {
        return BigInt::from(0);
    }
    let mut parts = vec![k as u64 - 1];
    parts.extend_from_slice(child_counts);
    multinomial(n as u64 - 1, &parts)
}

fn profile_of(parent: &[usize], n: usize) -> Vec<u64> {
    let mut c = vec![0usize; n];
    for &p in parent {
        if p > 0 {
            c[p - 1] += 1;
        }
    }
    let mut prof = Vec::new();
    for x in c {
        if prof.len() <= x {
            prof.resize(x + 1, 0);
        }
        prof[x] += 1;
    }
    prof
}

/// Every forest of `k` rooted trees on `[n]`.
pub fn enumerate_labeled_forests(n: usize, k: usize) -> Result<Vec<LabeledForest>, OracleError> {
    limit("n", n, 7)?;
    if k == 0 || k > n {
        return Err(OracleError::InvalidArgument("need 1 <= k <= n".into()));
    }
    let mut out = Vec::new();
    let cap = vec![n as u64; n];
    visit_forests(n, k, &cap, &mut |parent| {
        out.push(LabeledForest {
            n,
            parent: parent.iter().map(|&p| (p > 0).then_some(p)).collect(),
        });
    });
    Ok(out)
}

/// Forests of `k` rooted trees on `[n]` in which `profile[i]` vertices
/// have `i` children.
pub fn labeled_forest_profile_count(n: usize, k: usize, profile: &[u64]) -> Result<u64, OracleError> {
    limit("n", n, 7)?;
    let mut want = profile.to_vec();
    while want.last() == Some(&0) {
        want.pop();
    }
    let cap = vec![n as u64; n];
    let mut count = 0;
    visit_forests(n, k, &cap, &mut |parent| {
        if profile_of(parent, n) == want {
            count += 1;
        }
    });
    Ok(count)
}

fn profile_valid(n: usize, k: usize, profile: &[u64]) -> bool {
    let total: u64 = profile.iter().sum();
    let weight: u64 = profile.iter().enumerate().map(|(i, &c)| i as u64 * c).sum();
    k >= 1 && total == n as u64 && weight + k as u64 == n as u64
}

/// `(n-1)! / ((k-1)! prod i!^(n_i))`: forests in which the vertices with
/// `i` children are labeled `1..n_i`.
pub fn rexp_formula(n: usize, k: usize, profile: &[u64]) -> Rational {
    if !profile_valid(n, k, profile) {
        return Rational::zero();
    }
    let mut v = Rational::from_int(factorial(n as u64 - 1)) / Rational::from_int(factorial(k as u64 - 1));
    for (i, &c) in profile.iter().enumerate() {
        v = v / Rational::from_int(factorial(i as u64)).pow(c as i64);
    }
    v
}

/// The labeled count: the label-class count times `multinomial(n; n_0, n_1, ...)`.
pub fn ltree_formula(n: usize, k: usize, profile: &[u64]) -> Rational {
    rexp_formula(n, k, profile) * Rational::from_int(multinomial(n as u64, profile))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prufer_examples() {
        assert_eq!(prufer_encode(3, &[(1, 2), (2, 3)]).unwrap(), vec![2]);
        assert_eq!(prufer_encode(4, &[(1, 4), (2, 4), (3, 4)]).unwrap(), vec![4, 4]);
        assert_eq!(prufer_decode(4, &[4, 4]).unwrap(), vec![(1, 4), (2, 4), (3, 4)]);
        assert!(matches!(
            prufer_encode(3, &[(1, 2), (2, 1)]),
            Err(OracleError::NotATree(_))
        ));
        assert_eq!(enumerate_labeled_trees(5).unwrap().len(), 125);
    }

    #[test]
    fn degree_trees() {
        assert_eq!(count_degree_trees(4, &[1, 1, 1, 3]).unwrap(), 1);
        assert_eq!(degree_tree_formula(&[1, 1, 1, 3]), BigInt::from(1));
        assert_eq!(count_degree_trees(4, &[1, 1, 1, 1]).unwrap(), 0);
        assert_eq!(degree_tree_formula(&[1, 1, 1, 1]), BigInt::from(0));
        assert_eq!(cayley_degree_sum(5), BigInt::from(125));
    }

    #[test]
    fn labeled_forests() {
        assert_eq!(count_labeled_forests(3, 1, &[2, 0, 0]).unwrap(), 1);
        assert_eq!(labeled_forest_formula(3, 1, &[2, 0, 0]), BigInt::from(1));
        assert_eq!(labeled_forest_profile_count(2, 1, &[1, 1]).unwrap(), 2);
        assert_eq!(ltree_formula(2, 1, &[1, 1]), Rational::from(2));
        assert_eq!(labeled_forest_profile_count(4, 4, &[4]).unwrap(), 1);
        // rooted forests on [n] with k trees: binom(n-1, k-1) n^(n-k)
        assert_eq!(enumerate_labeled_forests(4, 2).unwrap().len(), 3 * 16);
        assert!(matches!(
            count_labeled_forests(8, 1, &[0; 8]),
            Err(OracleError::SizeLimit { .. })
        ));
    }
}
