use super::{Checker, IdentityReport, Step};
use crate::lagrange::solve_xr;
use crate::numbers::{binom_q, factorial, ipow};
use crate::rational::Rational;
use crate::series::special::{exp_scaled, exp_x};
use crate::series::PowerSeries;

fn q(n: i64) -> Rational {
    Rational::from(n)
}

fn egf(n: i64, value: Rational) -> Rational {
    value / Rational::from(factorial(n as u64))
}

/// `k (n+k)^(n-1)`, read as 1 at `n = 0` for every `k`.
fn forest_count(k: i64, n: i64) -> Rational {
    if n == 0 {
        q(1)
    } else {
        q(k) * ipow(n + k, n - 1)
    }
}

/// The tree function `T = x e^T`, as the reversion of `x e^(-x)`.
pub fn tree_function(order: usize) -> PowerSeries<Rational> {
    let g = exp_scaled(&q(-1), order).shift(1);
    g.reversion().expect("x e^(-x) is reversible")
}

/// `T`, `F^k`, `T^k/k!`, the prime parking form, `F^k/(1-T)`, Lacasse,
/// both convolutions and Abel's identity.
pub fn check_tree_function_suite(ks: &[i64], order: usize) -> IdentityReport {
    let mut ck = Checker::new("tree-function", order);
    ck.param("k", ks.to_vec());
    let outcome = (|| -> Step {
        tree_steps(&mut ck, ks, order)?;
        lacasse_steps(&mut ck, order.min(20))?;
        let n_conv = (order as i64 - 1).min(8);
        convolution_steps(&mut ck, -4..=4, n_conv)?;
        abel_steps(&mut ck, n_conv.max(0) as usize)
    })();
    ck.finish(outcome)
}

fn tree_steps(ck: &mut Checker, ks: &[i64], order: usize) -> Step {
    let t = tree_function(order);
    let t_solved = solve_xr(&exp_x::<Rational>(order), order);
    ck.eq("T by reversion = T by x R(T)", &[], &t, &t_solved)?;
    let f = t.exp().expect("T(0) = 0");
    ck.eq("T = x e^T", &[], &t, &f.shift(1))?;
    for n in 0..order as i64 {
        let v = if n == 0 { q(0) } else { egf(n, ipow(n, n - 1)) };
        ck.eq("[x^n] T = n^(n-1)/n!", &[("n", n)], &v, &t.coeff(n as usize).unwrap())?;
    }
    let one = PowerSeries::one(order);
    let inv_1mt = (&one - &t).inverse().unwrap();
    for &k in ks {
        let fk = f.powi(k).unwrap();
        let via_exp = t.scale_rational(&q(k)).exp().unwrap();
        ck.eq("F^k = e^(kT)", &[("k", k)], &fk, &via_exp)?;
        let f1 = &fk * &inv_1mt;
        for n in 0..order as i64 {
            let loc = [("k", k), ("n", n)];
            ck.eq(
                "[x^n] F^k = k (n+k)^(n-1)/n!",
                &loc,
                &egf(n, forest_count(k, n)),
                &fk.coeff(n as usize).unwrap(),
            )?;
            ck.eq(
                "[x^n] F^k/(1-T) = (n+k)^n/n!",
                &loc,
                &egf(n, ipow(n + k, n)),
                &f1.coeff(n as usize).unwrap(),
            )?;
        }
        if k >= 1 {
            let tk = t.powi(k).unwrap().scale_rational(&egf(k, q(1)));
            for n in 0..order as i64 {
                let v = if n < k {
                    q(0)
                } else {
                    egf(n, q(k) * ipow(n, n - k - 1) * binom_q(n, k))
                };
                ck.eq(
                    "[x^n] T^k/k! = k n^(n-k-1) binom(n,k)/n!",
                    &[("k", k), ("n", n)],
                    &v,
                    &tk.coeff(n as usize).unwrap(),
                )?;
            }
        }
    }
    let park = PowerSeries::from_fn(order, |n| {
        if n == 0 {
            q(1)
        } else {
            -egf(n as i64, ipow(n as i64 - 1, n as i64 - 1))
        }
    });
    ck.eq(
        "F = (1 - sum (n-1)^(n-1) x^n/n!)^(-1)",
        &[],
        &f,
        &park.inverse().unwrap(),
    )?;
    Ok(())
}

fn lacasse_steps(ck: &mut Checker, order: usize) -> Step {
    let t = tree_function(order);
    let one = PowerSeries::one(order);
    let u = PowerSeries::from_fn(order, |n| egf(n as i64, ipow(n as i64, n as i64)));
    let inv_1mt = (&one - &t).inverse().unwrap();
    ck.eq("U = 1/(1-T)", &[], &u, &inv_1mt)?;
    let lhs = &(&(&u * &u) * &u) - &(&u * &u);
    let rhs = PowerSeries::from_fn(order, |n| egf(n as i64, ipow(n as i64, n as i64 + 1)));
    ck.eq("U^3 - U^2 = sum n^(n+1) x^n/n!", &[], &rhs, &lhs)?;
    let closed = &t * &inv_1mt.powi(3).unwrap();
    ck.eq("sum n^(n+1) x^n/n! = T/(1-T)^3", &[], &closed, &rhs)?;
    Ok(())
}

/// `U^3 - U^2 = sum n^(n+1) x^n/n! = T/(1-T)^3` with `U = 1/(1-T)`.
pub fn check_lacasse(order: usize) -> IdentityReport {
    let mut ck = Checker::new("lacasse", order);
    let outcome = lacasse_steps(&mut ck, order);
    ck.finish(outcome)
}

fn convolution_steps(
    ck: &mut Checker,
    grid: std::ops::RangeInclusive<i64>,
    n_max: i64,
) -> Step {
    for k in grid.clone() {
        for l in grid.clone() {
            for n in 0..=n_max {
                let loc = [("k", k), ("l", l), ("n", n)];
                let lhs: Rational = (0..=n)
                    .map(|i| binom_q(n, i) * forest_count(k, i) * ipow(n - i + l, n - i))
                    .sum();
                ck.eq(
                    "(n+k+l)^n = sum binom(n,i) k(i+k)^(i-1) (n-i+l)^(n-i)",
                    &loc,
                    &ipow(n + k + l, n),
                    &lhs,
                )?;
                let lhs: Rational = (0..=n)
                    .map(|i| binom_q(n, i) * forest_count(k, i) * forest_count(l, n - i))
                    .sum();
                ck.eq(
                    "(k+l)(n+k+l)^(n-1) = sum binom(n,i) k(i+k)^(i-1) l(n-i+l)^(n-i-1)",
                    &loc,
                    &forest_count(k + l, n),
                    &lhs,
                )?;
            }
        }
    }
    Ok(())
}

/// `x (x + i z)^(i-1)`, read as 1 at `i = 0`.
fn abel_head(x: i64, i: i64, z: i64) -> Rational {
    if i == 0 {
        q(1)
    } else {
        q(x) * ipow(x + i * z, i - 1)
    }
}

fn abel_steps(ck: &mut Checker, n_max: usize) -> Step {
    for (grid_xy, grid_z) in [(-3..=3, -2..=2), (-4..=4, -4..=4)] {
        for x in grid_xy.clone() {
            for y in grid_xy.clone() {
                for z in grid_z.clone() {
                    for n in 0..=n_max as i64 {
                        let lhs: Rational = (0..=n)
                            .map(|i| binom_q(n, i) * abel_head(x, i, z) * ipow(y - i * z, n - i))
                            .sum();
                        ck.eq(
                            "(x+y)^n = sum binom(n,i) x (x+iz)^(i-1) (y-iz)^(n-i)",
                            &[("x", x), ("y", y), ("z", z), ("n", n)],
                            &ipow(x + y, n),
                            &lhs,
                        )?;
                    }
                }
            }
        }
    }
    Ok(())
}

/// Abel's identity in homogeneous form on the stated integer grid and on a
/// grid of 9 points per variable, which certifies it as a polynomial
/// identity for `n <= 8`.
pub fn check_abel(n_max: usize) -> IdentityReport {
    let mut ck = Checker::new("abel", n_max + 1);
    ck.param("n_max", n_max as i64);
    ck.detail("grid", "x,y in -3..3, z in -2..2; certifying grid x,y,z in -4..4");
    let outcome = abel_steps(&mut ck, n_max);
    ck.finish(outcome)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn nine_rooted_trees_on_three() {
        let t = tree_function(5);
        assert_eq!(t.coeff(3).unwrap() * Rational::from(factorial(3)), q(9));
    }

    #[test]
    fn lacasse_at_four() {
        let t = tree_function(6);
        let one = PowerSeries::one(6);
        let s = &t * &(&one - &t).inverse().unwrap().powi(3).unwrap();
        assert_eq!(s.coeff(4).unwrap(), Rational::new(128, 3));
        assert!(check_lacasse(12).passed());
    }

    #[test]
    fn abel_with_z_zero_is_binomial() {
        for n in 0..6 {
            let lhs: Rational = (0..=n)
                .map(|i| binom_q(n, i) * abel_head(2, i, 0) * ipow(5, n - i))
                .sum();
            assert_eq!(lhs, ipow(7, n));
        }
    }

    #[test]
    fn small_suite() {
        let r = check_tree_function_suite(&[-1, 0, 2], 10);
        assert!(r.passed(), "{:?}", r.first_failure);
    }
}
