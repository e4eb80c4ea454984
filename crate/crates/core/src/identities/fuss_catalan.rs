use std::collections::BTreeMap;

use super::{Checker, IdentityReport, Step};
use crate::numbers::{binom_q, ipow};
use crate::rational::Rational;
use crate::series::special::poly;
use crate::series::PowerSeries;

fn q(n: i64) -> Rational {
    Rational::from(n)
}

/// `c_p = 1 + x c_p^p` by fixed-point iteration; any integer `p`.
pub fn fuss_catalan_series(p: i64, order: usize) -> PowerSeries<Rational> {
    let x = PowerSeries::x(order);
    let one = PowerSeries::one(order);
    let mut c = one.clone();
    for _ in 0..order {
        c = &one + &(&x * &c.powi(p).expect("c_p(0) = 1"));
    }
    c
}

/// `k/(pn+k) binom(pn+k, n)`, or the equal `k/((p-1)n+k) binom(pn+k-1, n)`
/// where the first denominator vanishes.
fn fc_ballot(p: i64, k: i64, n: i64) -> Option<Rational> {
    if p * n + k != 0 {
        Some(q(k) / q(p * n + k) * binom_q(p * n + k, n))
    } else if (p - 1) * n + k != 0 {
        Some(q(k) / q((p - 1) * n + k) * binom_q(p * n + k - 1, n))
    } else {
        None
    }
}

fn flip_sign(a: &PowerSeries<Rational>) -> PowerSeries<Rational> {
    PowerSeries::from_fn(a.order(), |n| {
        let c = a.coeffs()[n].clone();
        if n % 2 == 1 {
            -c
        } else {
            c
        }
    })
}

/// Coefficients of `c_p^k`, the weighted sums, the three compositional
/// inverses, the derivative, duality, composition, and both convolutions.
pub fn check_fuss_catalan(ps: &[i64], ks: &[i64], order: usize) -> IdentityReport {
    let mut ck = Checker::new("fuss-catalan", order);
    ck.param("p", ps.to_vec()).param("k", ks.to_vec());
    let outcome = (|| -> Step {
        for &p in ps {
            fuss_catalan_for_p(&mut ck, p, ks, order)?;
        }
        let conv_n = order.min(9) - 1;
        rothe_hagen(&mut ck, ps, &(-6..=6).collect::<Vec<_>>(), conv_n)
    })();
    ck.finish(outcome)
}

fn fuss_catalan_for_p(ck: &mut Checker, p: i64, ks: &[i64], order: usize) -> Step {
    let n_ord = order as i64;
    let c = fuss_catalan_series(p, order);
    let x = PowerSeries::x(order);
    let one = PowerSeries::one(order);
    let cp1 = c.powi(p - 1).unwrap();
    // 1 - p x c^(p-1)
    let weight = &one - &(&x * &cp1).scale_rational(&q(p));
    let weight_inv = weight.inverse().unwrap();
    let alt = (&one - &(&c - &one).scale_rational(&q(p - 1))).inverse().unwrap();
    for &k in ks {
        let ck_series = c.powi(k).unwrap();
        let ck1 = &ck_series * &c;
        let lhs1 = &ck_series * &weight_inv;
        let lhs2 = &ck1 * &alt;
        for n in 0..n_ord {
            let loc = [("p", p), ("k", k), ("n", n)];
            let actual = ck_series.coeff(n as usize).unwrap();
            if p * n + k != 0 {
                let v = q(k) / q(p * n + k) * binom_q(p * n + k, n);
                ck.eq("c_p^k = sum k/(pn+k) binom(pn+k,n) x^n", &loc, &v, &actual)?;
            }
            let b = binom_q(p * n + k, n);
            ck.eq(
                "sum binom(pn+k,n) x^n = c_p^k / (1 - p x c_p^(p-1))",
                &loc,
                &b,
                &lhs1.coeff(n as usize).unwrap(),
            )?;
            ck.eq(
                "sum binom(pn+k,n) x^n = c_p^(k+1) / (1 - (p-1)(c_p - 1))",
                &loc,
                &b,
                &lhs2.coeff(n as usize).unwrap(),
            )?;
        }
        // the same sums after substituting the two inverse series
        let bsum = PowerSeries::from_fn(order, |n| binom_q(p * n as i64 + k, n as i64));
        let y1 = (&x * &poly::<Rational>(&[1, 1], order).powi(-p).unwrap()).truncate(order);
        let lhs = bsum.compose(&y1).unwrap();
        let rhs = &poly::<Rational>(&[1, 1], order).powi(k + 1).unwrap()
            * &poly::<Rational>(&[1, -(p - 1)], order).inverse().unwrap();
        ck.eq(
            "sum binom(pn+k,n) (x/(1+x)^p)^n = (1+x)^(k+1) / (1 - (p-1)x)",
            &[("p", p), ("k", k)],
            &rhs,
            &lhs,
        )?;
        let y2 = &x * &poly::<Rational>(&[1, -1], order).powi(p - 1).unwrap();
        let lhs = bsum.compose(&y2).unwrap();
        let rhs = (&poly::<Rational>(&[1, -p], order)
            * &poly::<Rational>(&[1, -1], order).powi(k).unwrap())
            .inverse()
            .unwrap();
        ck.eq(
            "sum binom(pn+k,n) (x(1-x)^(p-1))^n = 1 / ((1-px)(1-x)^k)",
            &[("p", p), ("k", k)],
            &rhs,
            &lhs,
        )?;
    }
    // compositional inverses
    let inv1 = (&x * &poly::<Rational>(&[1, 1], order).powi(-p).unwrap())
        .reversion()
        .unwrap();
    ck.eq("(x/(1+x)^p)^<-1> = c_p - 1", &[("p", p)], &(&c - &one), &inv1)?;
    let inv2 = (&x * &poly::<Rational>(&[1, -1], order).powi(p - 1).unwrap())
        .reversion()
        .unwrap();
    ck.eq("(x(1-x)^(p-1))^<-1> = x c_p^(p-1)", &[("p", p)], &(&x * &cp1), &inv2)?;
    if p >= 2 {
        let mut g = vec![Rational::zero(); order];
        if order > 1 {
            g[1] = q(1);
        }
        if (p as usize) < order {
            g[p as usize] = q(-1);
        }
        let inv3 = PowerSeries::new(g, order).reversion().unwrap();
        let xp = PowerSeries::monomial(q(1), p as usize - 1, order);
        let rhs = c.compose(&xp).unwrap().shift(1);
        ck.eq("(x - x^p)^<-1> = x c_p(x^(p-1))", &[("p", p)], &rhs, &inv3)?;
    }
    // c_p' = c_p^p / (1 - p x c_p^(p-1))
    let lhs = c.derivative();
    let rhs = (&c.powi(p).unwrap() * &weight_inv).truncate(order - 1);
    ck.eq("c_p' = c_p^p / (1 - p x c_p^(p-1))", &[("p", p)], &rhs, &lhs)?;
    // duality c_{-p}(x) = 1 / c_{p+1}(-x)
    let lhs = fuss_catalan_series(-p, order);
    let rhs = flip_sign(&fuss_catalan_series(p + 1, order)).inverse().unwrap();
    ck.eq("c_{-p}(x) = 1 / c_{p+1}(-x)", &[("p", p)], &rhs, &lhs)?;
    // c_{p+q}(x) = c_p(x c_{p+q}(x)^q)
    for qq in 1..=3 {
        let cpq = fuss_catalan_series(p + qq, order);
        let inner = &x * &cpq.powi(qq).unwrap();
        let rhs = c.compose(&inner).unwrap();
        ck.eq(
            "c_{p+q}(x) = c_p(x c_{p+q}(x)^q)",
            &[("p", p), ("q", qq)],
            &cpq,
            &rhs,
        )?;
    }
    Ok(())
}

fn rothe_hagen(ck: &mut Checker, ps: &[i64], ks: &[i64], n_max: usize) -> Step {
    let n_max = n_max as i64;
    for &p in ps {
        let kmin = ks.iter().min().copied().unwrap_or(0).min(0);
        let kmax = ks.iter().max().copied().unwrap_or(0).max(0);
        let mut ballots = BTreeMap::new();
        let mut binoms = BTreeMap::new();
        for k in 2 * kmin..=2 * kmax {
            for n in 0..=n_max {
                ballots.insert((k, n), fc_ballot(p, k, n));
                binoms.insert((k, n), binom_q(p * n + k, n));
            }
        }
        for &k in ks {
            for &l in ks {
                for n in 0..=n_max {
                    let loc = [("p", p), ("k", k), ("l", l), ("n", n)];
                    if let Some(rhs) = &ballots[&(k + l, n)] {
                        let mut lhs = Some(Rational::zero());
                        for i in 0..=n {
                            lhs = match (lhs, &ballots[&(k, i)], &ballots[&(l, n - i)]) {
                                (Some(acc), Some(a), Some(b)) => Some(acc + a * b),
                                _ => None,
                            };
                        }
                        if let Some(lhs) = lhs {
                            ck.eq("Rothe-Hagen ballot convolution", &loc, rhs, &lhs)?;
                        }
                    }
                    let mut lhs = Some(Rational::zero());
                    for i in 0..=n {
                        lhs = match (lhs, &ballots[&(k, i)]) {
                            (Some(acc), Some(a)) => Some(acc + a * &binoms[&(l, n - i)]),
                            _ => None,
                        };
                    }
                    if let Some(lhs) = lhs {
                        ck.eq(
                            "Rothe-Hagen binomial convolution",
                            &loc,
                            &binoms[&(k + l, n)],
                            &lhs,
                        )?;
                    }
                }
            }
        }
    }
    Ok(())
}

/// Both Rothe-Hagen convolutions over an integer grid of `k` and `l`.
pub fn check_rothe_hagen(ps: &[i64], ks: &[i64], n_max: usize) -> IdentityReport {
    let mut ck = Checker::new("rothe-hagen", n_max + 1);
    ck.param("p", ps.to_vec())
        .param("k", ks.to_vec())
        .param("l", ks.to_vec())
        .param("n_max", n_max as i64);
    let outcome = rothe_hagen(&mut ck, ps, ks, n_max);
    ck.finish(outcome)
}

/// `sum_l binom(j+pl, l) binom(r-pl, n-l) = sum_i binom(j+r-i, n-i) p^i`.
pub fn check_jensen(ps: &[i64], js: &[i64], rs: &[i64], n_max: usize) -> IdentityReport {
    let mut ck = Checker::new("jensen", n_max + 1);
    ck.param("p", ps.to_vec())
        .param("j", js.to_vec())
        .param("r", rs.to_vec())
        .param("n_max", n_max as i64);
    let outcome = (|| -> Step {
        for &p in ps {
            for &j in js {
                for &r in rs {
                    for n in 0..=n_max as i64 {
                        let lhs: Rational = (0..=n)
                            .map(|l| binom_q(j + p * l, l) * binom_q(r - p * l, n - l))
                            .sum();
                        let rhs: Rational = (0..=n)
                            .map(|i| binom_q(j + r - i, n - i) * ipow(p, i))
                            .sum();
                        ck.eq(
                            "Jensen",
                            &[("p", p), ("j", j), ("r", r), ("n", n)],
                            &rhs,
                            &lhs,
                        )?;
                    }
                }
            }
        }
        Ok(())
    })();
    ck.finish(outcome)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::identities::catalan_series;

    #[test]
    fn p_two_is_catalan() {
        assert_eq!(fuss_catalan_series(2, 15), catalan_series(15));
    }

    #[test]
    fn printed_values() {
        assert_eq!(fc_ballot(3, 1, 2).unwrap(), q(3));
        let c3 = fuss_catalan_series(3, 6);
        assert_eq!(c3.coeff(2).unwrap(), q(3));
    }

    #[test]
    fn jensen_examples() {
        assert!(check_jensen(&[0], &[1], &[2], 5).passed());
        assert!(check_jensen(&[3], &[1], &[10], 4).passed());
    }

    #[test]
    fn rothe_hagen_example() {
        assert!(check_rothe_hagen(&[3], &[1, 2], 3).passed());
    }

    #[test]
    fn small_suite() {
        let r = check_fuss_catalan(&[2, 3], &[-1, 0, 2], 10);
        assert!(r.passed(), "{:?}", r.first_failure);
    }
}
