use std::fmt;

use super::{Checker, IdentityError, IdentityReport, Step};
use crate::identities::{tree_function, weighted_stirling_poly};
use crate::multipoly::MultiPoly;
use crate::numbers::{binom_q, factorial};
use crate::rational::Rational;
use crate::series::PowerSeries;

const U: usize = 0;
const K: usize = 1;
const NAMES: [&str; 2] = ["u", "k"];

fn q(n: i64) -> Rational {
    Rational::from(n)
}

fn u() -> MultiPoly {
    MultiPoly::var(U)
}

/// `k + c`.
fn k_plus(c: i64) -> MultiPoly {
    &MultiPoly::var(K) + &MultiPoly::constant(q(c))
}

fn cst(c: Rational) -> MultiPoly {
    MultiPoly::constant(c)
}

/// A polynomial in `u` whose coefficients are rational functions of `k`,
/// stored as a numerator in `Q[u, k]` over a denominator in `Q[k]`.
/// Equality is by cross-multiplication.
#[derive(Clone)]
pub struct RatFunc {
    pub num: MultiPoly,
    pub den: MultiPoly,
}

impl RatFunc {
    pub fn new(num: MultiPoly, den: MultiPoly) -> Self {
        RatFunc { num, den }
    }

    /// The polynomial in `u` at a rational `k`; `None` at a pole.
    pub fn at_k(&self, k: &Rational) -> Option<MultiPoly> {
        let d = self.den.substitute(K, k).as_constant()?;
        let inv = d.recip()?;
        Some(self.num.substitute(K, k).scale(&inv))
    }

    pub fn degree_in_u(&self) -> Option<u32> {
        self.num.degree_in(U)
    }
}

impl PartialEq for RatFunc {
    fn eq(&self, other: &Self) -> bool {
        &self.num * &other.den == &other.num * &self.den
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({}) / ({})",
            self.num.display_with(&NAMES),
            self.den.display_with(&NAMES)
        )
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// `p_l(u) = sum_{j<l} u^j/j! sum_{n<=j} (-1)^(j-n) binom(j,n) (n+k)^(-(l-j))`
/// over the common denominator `prod_{i<l} (k+i)^l`.
pub fn compute_p_l(l: usize) -> RatFunc {
    assert!(l >= 1, "p_l needs l >= 1");
    let li = l as i64;
    let den = (0..li).fold(MultiPoly::one(), |acc, i| &acc * &k_plus(i).pow(l as u32));
    let mut num = MultiPoly::zero();
    for j in 0..li {
        let mut inner = MultiPoly::zero();
        for n in 0..=j {
            let others = (0..li)
                .filter(|&i| i != n)
                .fold(MultiPoly::one(), |acc, i| &acc * &k_plus(i).pow(l as u32));
            let mut c = binom_q(j, n);
            if (j - n) % 2 == 1 {
                c = -c;
            }
            inner += &(&k_plus(n).pow(j as u32) * &others).scale(&c);
        }
        let uj = u().pow(j as u32).scale(&(Rational::one() / Rational::from(factorial(j as u64))));
        num += &(&uj * &inner);
    }
    RatFunc::new(num, den)
}

/// `q_l(u) = p_l(u)` at `k = 1`, a polynomial in `u`.
pub fn compute_q_l(l: usize) -> MultiPoly {
    compute_p_l(l).at_k(&q(1)).expect("k = 1 is not a pole")
}

fn printed_p(l: usize) -> Option<RatFunc> {
    let k = MultiPoly::var(K);
    match l {
        1 => Some(RatFunc::new(MultiPoly::one(), k)),
        2 => Some(RatFunc::new(
            &k_plus(1) - &(&k * &u()),
            &(&k * &k) * &k_plus(1),
        )),
        3 => {
            let k1 = k_plus(1);
            let k2 = k_plus(2);
            let a = &(&k1 * &k1) * &k2;
            let b = &(&(&k_plus(0).scale(&q(2)) + &cst(q(1))) * &k) * &k2;
            let c = &(&k * &k) * &k1;
            let num = &(&a - &(&b * &u())) + &(&c * &u().pow(2));
            let den = &(&k.pow(3) * &k1.pow(2)) * &k2;
            Some(RatFunc::new(num, den))
        }
        _ => None,
    }
}

fn printed_r(m: usize) -> Option<MultiPoly> {
    let k = MultiPoly::var(K);
    match m {
        0 => Some(MultiPoly::one()),
        1 => Some(&k + &(&(&cst(q(1)) - &k) * &u())),
        2 => {
            let k2 = k.pow(2);
            let c1 = &(&cst(q(1)) + &k.scale(&q(3))) - &k2.scale(&q(2));
            let c2 = &(&cst(q(2)) - &k.scale(&q(3))) + &k2;
            Some(&(&k2 + &(&c1 * &u())) + &(&c2 * &u().pow(2)))
        }
        _ => None,
    }
}

/// `p(T)` for a polynomial in `u` alone.
fn eval_in_u(p: &MultiPoly, t: &PowerSeries<Rational>) -> PowerSeries<Rational> {
    let deg = p.degree_in(U).unwrap_or(0);
    let order = t.order();
    let mut acc = PowerSeries::zero(order);
    for d in (0..=deg).rev() {
        acc = &(&acc * t) + &PowerSeries::constant(p.coeff(&[d]), order);
    }
    acc
}

fn k_samples(l: i64) -> Vec<Rational> {
    let mut v: Vec<Rational> = [1, 2, 3, 4, -l - 1, -l - 2].iter().map(|&k| q(k)).collect();
    v.push(Rational::new(1, 2));
    v.push(Rational::new(-7, 3));
    v
}

fn exp_kt(k: &Rational, t: &PowerSeries<Rational>) -> PowerSeries<Rational> {
    t.scale_rational(k).exp().expect("T(0) = 0")
}

/// Printed `p_1, p_2, p_3`, degree `l - 1` in `u`, and
/// `sum (n+k)^(n-l) x^n/n! = e^(kT) p_l(T)` at sampled `k`.
pub fn check_p_l(l_max: usize, order: usize) -> IdentityReport {
    let mut ck = Checker::new("p-l", order);
    ck.param("l_max", l_max as i64);
    let t = tree_function(order);
    let mut printed = serde_json::Map::new();
    let outcome = (|| -> Step {
        for l in 1..=l_max {
            let li = l as i64;
            let p = compute_p_l(l);
            printed.insert(format!("p_{l}"), p.to_string().into());
            if let Some(expected) = printed_p(l) {
                ck.eq("printed p_l", &[("l", li)], &expected, &p)?;
            }
            ck.eq(
                "deg_u p_l = l - 1",
                &[("l", li)],
                &(l as u32 - 1),
                &p.degree_in_u().unwrap_or(0),
            )?;
            for k in k_samples(li) {
                let pk = p.at_k(&k).expect("sample avoids the poles");
                let lhs = PowerSeries::from_fn(order, |n| {
                    (Rational::from(n as i64) + k.clone()).pow(n as i64 - li)
                        / Rational::from(factorial(n as u64))
                });
                let rhs = &exp_kt(&k, &t) * &eval_in_u(&pk, &t);
                if lhs != rhs {
                    return ck.fail(
                        "sum (n+k)^(n-l) x^n/n! = e^(kT) p_l(T)",
                        &[("l", li)],
                        format!("{rhs} at k = {k}"),
                        lhs.to_string(),
                    );
                }
                ck.truth("sum (n+k)^(n-l) x^n/n! = e^(kT) p_l(T)", &[("l", li)], true)?;
            }
        }
        Ok(())
    })();
    ck.detail("polynomials", serde_json::Value::Object(printed));
    ck.finish(outcome)
}

/// `q_l = p_l(k = 1)` and `sum_{n>=1} n^(n-l) x^n/n! = T q_l(T)`.
pub fn check_q_l(l_max: usize, order: usize) -> IdentityReport {
    let mut ck = Checker::new("q-l", order);
    ck.param("l_max", l_max as i64);
    let t = tree_function(order);
    let mut printed = serde_json::Map::new();
    let outcome = (|| -> Step {
        for l in 1..=l_max {
            let li = l as i64;
            let ql = compute_q_l(l);
            printed.insert(format!("q_{l}"), ql.display_with(&NAMES).to_string().into());
            if let Some(p) = printed_p(l) {
                ck.eq("q_l = printed p_l at k = 1", &[("l", li)], &p.at_k(&q(1)).unwrap(), &ql)?;
            }
            let lhs = PowerSeries::from_fn(order, |n| {
                if n == 0 {
                    Rational::zero()
                } else {
                    q(n as i64).pow(n as i64 - li) / Rational::from(factorial(n as u64))
                }
            });
            let rhs = &t * &eval_in_u(&ql, &t);
            ck.eq("sum n^(n-l) x^n/n! = T q_l(T)", &[("l", li)], &rhs, &lhs)?;
        }
        Ok(())
    })();
    ck.detail("polynomials", serde_json::Value::Object(printed));
    ck.finish(outcome)
}

fn to_k_var(p: &MultiPoly) -> MultiPoly {
    let mut out = MultiPoly::zero();
    for (m, c) in p.terms() {
        out.add_term(vec![0, m.first().copied().unwrap_or(0)], c.clone());
    }
    out
}

fn r_m_raw(m: usize) -> (MultiPoly, MultiPoly) {
    let width = 2 * m + 1;
    let terms = 2 * width + 1;
    let rs: Vec<MultiPoly> = (0..terms).map(|j| to_k_var(&weighted_stirling_poly(j + m, j))).collect();
    let mut kept = MultiPoly::zero();
    let mut tail = MultiPoly::zero();
    for d in 0..terms {
        let mut c = MultiPoly::zero();
        for i in 0..=d.min(width) {
            let mut b = binom_q(width as i64, i as i64);
            if i % 2 == 1 {
                b = -b;
            }
            c += &rs[d - i].scale(&b);
        }
        let term = &c * &u().pow(d as u32);
        if d < width {
            kept += &term;
        } else {
            tail += &term;
        }
    }
    (kept, tail)
}

/// `r_m(u, k)` from `sum_j R(j+m, j, k) u^j = r_m(u,k)/(1-u)^(2m+1)`.
pub fn compute_r_m(m: usize) -> Result<MultiPoly, IdentityError> {
    let (r, _) = r_m_raw(m);
    for (var, name) in [(U, "u"), (K, "k")] {
        let degree = r.degree_in(var).unwrap_or(0);
        if degree as usize > m {
            return Err(IdentityError::DegreeViolation {
                m,
                variable: name,
                degree,
            });
        }
    }
    Ok(r)
}

/// Printed `r_0, r_1, r_2`, termination of the product with
/// `(1-u)^(2m+1)`, integer coefficients, `deg_u r_m = m`, and
/// `sum (n+k)^(n+m) x^n/n! = e^(kT) r_m(T,k)/(1-T)^(2m+1)` at integer `k`.
pub fn check_r_m(m_max: usize, order: usize) -> Result<IdentityReport, IdentityError> {
    let mut ck = Checker::new("r-m", order);
    ck.param("m_max", m_max as i64);
    let t = tree_function(order);
    let one = PowerSeries::one(order);
    let inv = (&one - &t).inverse().expect("T(0) = 0");
    let mut printed = serde_json::Map::new();
    let mut polys = Vec::new();
    for m in 0..=m_max {
        polys.push(compute_r_m(m)?);
    }
    let outcome = (|| -> Step {
        for (m, r) in polys.iter().enumerate() {
            let mi = m as i64;
            printed.insert(format!("r_{m}"), r.display_with(&NAMES).to_string().into());
            let (_, tail) = r_m_raw(m);
            ck.eq("series times (1-u)^(2m+1) terminates", &[("m", mi)], &MultiPoly::zero(), &tail)?;
            ck.truth(
                "r_m has integer coefficients",
                &[("m", mi)],
                r.terms().all(|(_, c)| c.is_integer()),
            )?;
            ck.eq("deg_u r_m = m", &[("m", mi)], &(m as u32), &r.degree_in(U).unwrap_or(0))?;
            if let Some(expected) = printed_r(m) {
                ck.eq("printed r_m", &[("m", mi)], &expected, r)?;
            }
            let denom = inv.powi(2 * mi + 1).unwrap();
            for k in -3..=3i64 {
                let kq = q(k);
                let lhs = PowerSeries::from_fn(order, |n| {
                    q(n as i64 + k).pow(n as i64 + mi) / Rational::from(factorial(n as u64))
                });
                let rk = r.substitute(K, &kq);
                let rhs = &(&exp_kt(&kq, &t) * &eval_in_u(&rk, &t)) * &denom;
                ck.eq(
                    "sum (n+k)^(n+m) x^n/n! = e^(kT) r_m(T,k)/(1-T)^(2m+1)",
                    &[("m", mi), ("k", k)],
                    &rhs,
                    &lhs,
                )?;
            }
        }
        Ok(())
    })();
    ck.detail("polynomials", serde_json::Value::Object(printed));
    ck.detail("degree_in_u_evidence", "empirical for the computed range");
    Ok(ck.finish(outcome))
}
