use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{Checker, IdentityError, IdentityReport, Step};
use crate::multipoly::MultiPoly;
use crate::numbers::{binom_q, factorial, stirling2};
use crate::rational::Rational;
use crate::scalar::Scalar;
use crate::series::special::{exp_scaled, exp_x};
use crate::series::PowerSeries;

/// `R(n, j, k) = (1/j!) sum_i (-1)^(j-i) binom(j, i) (k+i)^n`.
pub fn weighted_stirling(n: usize, j: usize, k: &Rational) -> Rational {
    let mut acc = Rational::zero();
    for i in 0..=j {
        let term = binom_q(j as i64, i as i64) * (k + &Rational::from(i as i64)).pow(n as i64);
        if (j - i).is_multiple_of(2) {
            acc += term;
        } else {
            acc -= term;
        }
    }
    acc / Rational::from(factorial(j as u64))
}

/// `R(n, j, k)` as a polynomial in `k` (variable 0).
pub fn weighted_stirling_poly(n: usize, j: usize) -> MultiPoly {
    let k = MultiPoly::var(0);
    let mut acc = MultiPoly::zero();
    for i in 0..=j {
        let base = &k + &MultiPoly::constant(Rational::from(i as i64));
        let mut c = binom_q(j as i64, i as i64);
        if (j - i) % 2 == 1 {
            c = -c;
        }
        acc += &base.pow(n as u32).scale(&c);
    }
    acc.scale(&(Rational::one() / Rational::from(factorial(j as u64))))
}

fn egf_rhs<S: Scalar>(k: &S, j: usize, order: usize) -> PowerSeries<S> {
    let ex1 = &exp_x::<S>(order) - &PowerSeries::one(order);
    let inv_fact = Rational::one() / Rational::from(factorial(j as u64));
    (&exp_scaled(k, order) * &ex1.powi(j as i64).unwrap()).scale_rational(&inv_fact)
}

/// `sum_n R(n,j,k) x^n/n! = e^(kx) (e^x - 1)^j / j!` for `j <= j_max`, at
/// integer `k` and with `k` symbolic; also `R(n, j, 0) = S(n, j)`.
pub fn check_ws_egf(j_max: usize, order: usize) -> IdentityReport {
    let mut ck = Checker::new("weighted-stirling", order);
    ck.param("j_max", j_max as i64);
    let outcome = (|| -> Step {
        for j in 0..=j_max {
            for k in -3..=3i64 {
                let kq = Rational::from(k);
                let lhs = PowerSeries::from_fn(order, |n| {
                    weighted_stirling(n, j, &kq) / Rational::from(factorial(n as u64))
                });
                ck.eq(
                    "sum R(n,j,k) x^n/n! = e^(kx)(e^x-1)^j/j!",
                    &[("j", j as i64), ("k", k)],
                    &egf_rhs(&kq, j, order),
                    &lhs,
                )?;
            }
            let lhs = PowerSeries::from_fn(order, |n| {
                weighted_stirling_poly(n, j).scale(&(Rational::one() / Rational::from(factorial(n as u64))))
            });
            ck.eq(
                "symbolic k: sum R(n,j,k) x^n/n! = e^(kx)(e^x-1)^j/j!",
                &[("j", j as i64)],
                &egf_rhs(&MultiPoly::var(0), j, order),
                &lhs,
            )?;
            for n in 0..order {
                ck.eq(
                    "R(n,j,0) = S(n,j)",
                    &[("n", n as i64), ("j", j as i64)],
                    &Rational::from(stirling2(n, j)),
                    &weighted_stirling(n, j, &Rational::zero()),
                )?;
            }
        }
        Ok(())
    })();
    ck.finish(outcome)
}

/// `(Delta^k s)(n) = sum_i (-1)^(k-i) binom(k,i) s(n+i)`, where `s[m]` is
/// the value at `m`.
pub fn finite_difference(s: &[Rational], k: usize, n: usize) -> Result<Rational, IdentityError> {
    let needed = n + k + 1;
    if s.len() < needed {
        return Err(IdentityError::InsufficientRange {
            needed,
            available: s.len(),
        });
    }
    let mut acc = Rational::zero();
    for i in 0..=k {
        let term = binom_q(k as i64, i as i64) * &s[n + i];
        if (k - i).is_multiple_of(2) {
            acc += term;
        } else {
            acc -= term;
        }
    }
    Ok(acc)
}

fn eval_int_poly(coeffs: &[i64], x: i64) -> Rational {
    coeffs
        .iter()
        .rev()
        .fold(Rational::zero(), |acc, &c| acc * Rational::from(x) + Rational::from(c))
}

/// For random integer polynomials of degree `d <= d_max`, `Delta^d` is the
/// constant `d! L` and higher differences vanish.
pub fn check_ffd_lemma(d_max: usize, seed: u64) -> IdentityReport {
    let mut ck = Checker::new("finite-difference-lemma", d_max + 1);
    ck.param("d_max", d_max as i64).param("seed", seed);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let outcome = (|| -> Step {
        for trial in 0..20i64 {
            let d = rng.gen_range(0..=d_max);
            let mut coeffs: Vec<i64> = (0..=d).map(|_| rng.gen_range(-9..=9)).collect();
            if coeffs[d] == 0 {
                coeffs[d] = rng.gen_range(1..=9);
            }
            let points = 2 * d_max + 4;
            let values: Vec<Rational> = (0..points as i64).map(|x| eval_int_poly(&coeffs, x)).collect();
            let lead = Rational::from(factorial(d as u64)) * Rational::from(coeffs[d]);
            for n in 0..=d_max {
                let loc = [("trial", trial), ("d", d as i64), ("n", n as i64)];
                let top = finite_difference(&values, d, n).expect("range is long enough");
                ck.eq("Delta^d s = d! L", &loc, &lead, &top)?;
                let beyond = finite_difference(&values, d + 1, n).expect("range is long enough");
                ck.eq("Delta^(d+1) s = 0", &loc, &Rational::zero(), &beyond)?;
            }
        }
        Ok(())
    })();
    ck.finish(outcome)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> Rational {
        Rational::from(n)
    }

    #[test]
    fn printed_values() {
        assert_eq!(weighted_stirling(4, 2, &q(0)), q(7));
        assert_eq!(weighted_stirling(3, 1, &q(1)), q(7));
        for n in 0..6 {
            assert_eq!(weighted_stirling(n, 0, &q(3)), q(3).pow(n as i64));
        }
        let p = weighted_stirling_poly(3, 1);
        assert_eq!(p.evaluate(&[q(1)]), q(7));
    }

    #[test]
    fn differences() {
        let sq: Vec<Rational> = (0..6).map(|n| q(n * n)).collect();
        assert_eq!(finite_difference(&sq, 2, 1).unwrap(), q(2));
        let cubic: Vec<Rational> = (0..8).map(|n| q(n * n * n - n)).collect();
        assert_eq!(finite_difference(&cubic, 4, 0).unwrap(), q(0));
        let five: Vec<Rational> = (0..8).map(|n| q(5 * n * n * n)).collect();
        assert_eq!(finite_difference(&five, 3, 2).unwrap(), q(30));
        assert_eq!(
            finite_difference(&sq, 6, 0),
            Err(IdentityError::InsufficientRange { needed: 7, available: 6 })
        );
    }

    #[test]
    fn egf_suite() {
        let r = check_ws_egf(3, 8);
        assert!(r.passed(), "{:?}", r.first_failure);
        assert!(check_ffd_lemma(6, 7).passed());
    }
}
