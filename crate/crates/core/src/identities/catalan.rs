use std::collections::BTreeMap;

use super::{Checker, IdentityReport, Step};
use crate::numbers::binom_q;
use crate::rational::Rational;
use crate::series::special::poly;
use crate::series::PowerSeries;

/// `c(x) = (1 - sqrt(1 - 4x)) / (2x)` through `x^(order - 1)`.
pub fn catalan_series(order: usize) -> PowerSeries<Rational> {
    let root = poly::<Rational>(&[1, -4], order + 1)
        .pow_rational(&Rational::new(1, 2))
        .expect("constant term is 1");
    let num = &PowerSeries::one(order + 1) - &root;
    num.div_x_pow(1)
        .expect("numerator vanishes at 0")
        .scale_rational(&Rational::new(1, 2))
}

fn q(n: i64) -> Rational {
    Rational::from(n)
}

/// `k/(2n+k) binom(2n+k, n)`, falling back to `k/(n+k) binom(2n+k-1, n)`
/// at the excluded index of the first form; `None` when both are excluded.
fn ballot(k: i64, n: i64) -> Option<Rational> {
    if 2 * n + k != 0 {
        Some(q(k) / q(2 * n + k) * binom_q(2 * n + k, n))
    } else if n + k != 0 {
        Some(q(k) / q(n + k) * binom_q(2 * n + k - 1, n))
    } else {
        None
    }
}

/// Coefficients of `c^k` against the four closed forms, the
/// central-binomial weighting, `log c`, and the two convolutions.
pub fn check_catalan_suite(ks: &[i64], order: usize) -> IdentityReport {
    let conv_max = order.min(41);
    let mut ck = Checker::new("catalan", order);
    ck.param("k", ks.to_vec());
    ck.detail("convolution_n_max", conv_max as i64 - 1);
    ck.detail(
        "central_binomial_form",
        "c^k / sqrt(1-4x) = sum binom(2n+k, n) x^n",
    );
    let outcome = run(&mut ck, ks, order, conv_max);
    ck.finish(outcome)
}

fn run(ck: &mut Checker, ks: &[i64], order: usize, conv_max: usize) -> Step {
    let c = catalan_series(order);
    let c_rec = &PowerSeries::one(order) + &PowerSeries::x(order).checked_mul(&(&c * &c)).unwrap();
    ck.eq("c = 1 + x c^2", &[], &c, &c_rec)?;
    let inv_root = poly::<Rational>(&[1, -4], order)
        .pow_rational(&Rational::new(-1, 2))
        .expect("constant term is 1");
    for &k in ks {
        let ck_series = c.powi(k).expect("c(0) = 1");
        for n in 0..order as i64 {
            let loc = [("k", k), ("n", n)];
            let actual = ck_series.coeff(n as usize).unwrap();
            if 2 * n + k != 0 {
                let v = q(k) / q(2 * n + k) * binom_q(2 * n + k, n);
                ck.eq("ballot k/(2n+k) binom(2n+k,n)", &loc, &v, &actual)?;
            }
            if n + k != 0 {
                let v = q(k) / q(n + k) * binom_q(2 * n + k - 1, n);
                ck.eq("ballot k/(n+k) binom(2n+k-1,n)", &loc, &v, &actual)?;
            }
            let v = binom_q(2 * n + k - 1, n) - binom_q(2 * n + k - 1, n - 1);
            ck.eq("difference binom(2n+k-1,n) - binom(2n+k-1,n-1)", &loc, &v, &actual)?;
            let v = binom_q(2 * n + k, n) - q(2) * binom_q(2 * n + k - 1, n - 1);
            ck.eq("difference binom(2n+k,n) - 2 binom(2n+k-1,n-1)", &loc, &v, &actual)?;
        }
        let weighted = &ck_series * &inv_root;
        for n in 0..conv_max as i64 {
            ck.eq(
                "c^k / sqrt(1-4x)",
                &[("k", k), ("n", n)],
                &binom_q(2 * n + k, n),
                &weighted.coeff(n as usize).unwrap(),
            )?;
        }
    }
    let log_c = c.log().expect("c(0) = 1");
    for m in 1..order as i64 {
        ck.eq(
            "log c = sum binom(2m,m)/(2m) x^m",
            &[("m", m)],
            &(binom_q(2 * m, m) / q(2 * m)),
            &log_c.coeff(m as usize).unwrap(),
        )?;
    }
    let kmin = ks.iter().min().copied().unwrap_or(0);
    let kmax = ks.iter().max().copied().unwrap_or(0);
    let span = (2 * kmin.min(0))..=(2 * kmax.max(0));
    let ballots: BTreeMap<(i64, i64), Option<Rational>> = span
        .clone()
        .flat_map(|k| (0..conv_max as i64).map(move |n| ((k, n), ballot(k, n))))
        .collect();
    let central: BTreeMap<(i64, i64), Rational> = span
        .flat_map(|k| (0..conv_max as i64).map(move |n| ((k, n), binom_q(2 * n + k, n))))
        .collect();
    for &k in ks {
        for &l in ks {
            for n in 0..conv_max as i64 {
                let loc = [("k", k), ("l", l), ("n", n)];
                if let Some(rhs) = &ballots[&(k + l, n)] {
                    let mut lhs = Some(Rational::zero());
                    for i in 0..=n {
                        lhs = match (lhs, &ballots[&(k, i)], &ballots[&(l, n - i)]) {
                            (Some(acc), Some(a), Some(b)) => Some(acc + a * b),
                            _ => None,
                        };
                    }
                    if let Some(lhs) = lhs {
                        ck.eq("ballot convolution", &loc, rhs, &lhs)?;
                    }
                }
                let mut lhs = Some(Rational::zero());
                for i in 0..=n {
                    lhs = match (lhs, &ballots[&(k, i)]) {
                        (Some(acc), Some(a)) => Some(acc + a * &central[&(l, n - i)]),
                        _ => None,
                    };
                }
                if let Some(lhs) = lhs {
                    ck.eq(
                        "ballot-central convolution",
                        &loc,
                        &central[&(k + l, n)],
                        &lhs,
                    )?;
                }
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalan_numbers() {
        let c = catalan_series(8);
        let expect = [1, 1, 2, 5, 14, 42, 132, 429];
        for (n, e) in expect.iter().enumerate() {
            assert_eq!(c.coeff(n).unwrap(), q(*e));
        }
    }

    #[test]
    fn printed_values() {
        assert_eq!(ballot(1, 5).unwrap(), q(42));
        assert_eq!(ballot(3, 2).unwrap(), q(9));
        assert_eq!(ballot(1, 0).unwrap(), q(1));
        // the first form is excluded here and the second is used
        assert_eq!(ballot(-2, 1).unwrap(), q(-2));
        assert!(ballot(0, 0).is_none());
    }

    #[test]
    fn small_suite_passes() {
        let r = check_catalan_suite(&[-2, 0, 1, 3], 12);
        assert!(r.passed(), "{:?}", r.first_failure);
    }

    #[test]
    fn central_binomial_uses_lower_index_n() {
        // the weighting gives binom(2n+k, n); binom(2n+k, k) differs at n=2, k=1
        let c = catalan_series(6);
        let inv_root = poly::<Rational>(&[1, -4], 6)
            .pow_rational(&Rational::new(-1, 2))
            .unwrap();
        let w = &c * &inv_root;
        assert_eq!(w.coeff(2).unwrap(), q(10));
        assert_ne!(binom_q(5, 1), q(10));
    }
}
