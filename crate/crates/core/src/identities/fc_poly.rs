use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{Checker, IdentityReport, Step};
use crate::identities::fuss_catalan_series;
use crate::multipoly::MultiPoly;
use crate::numbers::factorial;
use crate::rational::Rational;
use crate::series::special::poly;
use crate::series::PowerSeries;

fn q(n: i64) -> Rational {
    Rational::from(n)
}

/// `(pn+i)! / (n! ((p-1)n+j)!)`.
fn a_coeff(p: i64, i: usize, j: usize, n: usize) -> Rational {
    let n = n as i64;
    let top = (p * n + i as i64) as u64;
    let low = ((p - 1) * n + j as i64) as u64;
    Rational::from(factorial(top)) / (Rational::from(factorial(n as u64)) * Rational::from(factorial(low)))
}

/// `sum_n (pn+i)!/(n! ((p-1)n+j)!) x^n/(1+x)^(pn+i+1)` through `x^(order-1)`,
/// for `p >= 1`.
pub fn fc_sum_series(p: i64, i: usize, j: usize, order: usize) -> PowerSeries<Rational> {
    assert!(p >= 1, "p must be at least 1");
    let a = PowerSeries::from_fn(order, |n| a_coeff(p, i, j, n));
    let one_plus_x = poly::<Rational>(&[1, 1], order);
    let y = &PowerSeries::x(order) * &one_plus_x.powi(-p).unwrap();
    let base = one_plus_x.powi(-(i as i64) - 1).unwrap();
    &base * &a.compose(&y).expect("y(0) = 0")
}

/// The integer multiple of `coeffs` with coprime entries and a positive
/// lowest nonzero coefficient.
pub fn primitive_integer_form(coeffs: &[Rational]) -> Vec<BigInt> {
    let mut lcm = BigInt::one();
    for c in coeffs {
        lcm = lcm.lcm(c.denom());
    }
    let mut ints: Vec<BigInt> = coeffs
        .iter()
        .map(|c| c.numer() * (&lcm / c.denom()))
        .collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, v| acc.gcd(v));
    if !g.is_zero() {
        for v in ints.iter_mut() {
            *v = &*v / &g;
        }
    }
    if ints.iter().find(|v| !v.is_zero()).is_some_and(|v| v.is_negative()) {
        for v in ints.iter_mut() {
            *v = -&*v;
        }
    }
    ints
}

fn show(coeffs: &[Rational]) -> String {
    MultiPoly::univariate(0, coeffs).display_with(&["x"]).to_string()
}

/// The general-`i` closed forms of `u_{i,i+d}` for `d = 1, 2, 3`.
fn printed_u(p: i64, i: i64, d: usize) -> Option<Vec<Rational>> {
    let r = |n: i64, m: i64| Rational::new(n, m);
    match d {
        1 => Some(vec![r(1, i + 1)]),
        2 => Some(vec![
            r(1, (i + 1) * (i + 2)),
            -r(p - 1, (i + 2) * (p + i + 1)),
        ]),
        3 => Some(vec![
            r(1, (i + 1) * (i + 2) * (i + 3)),
            -r(
                (p - 1) * (p + 2 * i + 4),
                (i + 2) * (i + 3) * (p + i + 1) * (p + i + 2),
            ),
            r((p - 1) * (p - 1), (i + 3) * (p + i + 2) * (2 * p + i + 1)),
        ]),
        _ => None,
    }
}

/// Polynomiality of the Fuss-Catalan sum. For `i < j` the sum is checked to
/// be a polynomial of degree exactly `j - i - 1` and to invert back to
/// `sum A_n x^n = c_p^(i+1) u(c_p - 1)`. For `i >= j` the product with
/// `(1-(p-1)x)^(2(i-j)+1)` is checked to have degree at most `i - j`; that
/// statement is recorded as empirical.
pub fn check_fc_polynomiality(p: i64, i: usize, j: usize, order: usize) -> IdentityReport {
    let mut ck = Checker::new("fc-polynomial", order);
    ck.param("p", p).param("i", i as i64).param("j", j as i64);
    let ii = i as i64;
    let jj = j as i64;
    let s = fc_sum_series(p, i, j, order);
    let (series, deg_bound) = if i < j {
        ck.detail("evidence", "proved");
        (s.clone(), j - i - 1)
    } else {
        ck.detail("evidence", "empirical");
        let w = poly::<Rational>(&[1, -(p - 1)], order)
            .powi(2 * (ii - jj) + 1)
            .unwrap();
        (&w * &s, i - j)
    };
    let u: Vec<Rational> = series.coeffs().iter().take(deg_bound + 1).cloned().collect();
    let ints = primitive_integer_form(&u);
    let int_coeffs: Vec<Rational> = ints.iter().map(|v| Rational::from_int(v.clone())).collect();
    ck.detail("polynomial", show(&int_coeffs));
    ck.detail("u", show(&u));
    let outcome = (|| -> Step {
        for m in deg_bound + 1..order {
            ck.eq(
                "coefficient beyond the degree bound vanishes",
                &[("m", m as i64)],
                &Rational::zero(),
                &series.coeff(m).unwrap(),
            )?;
        }
        if i < j {
            if deg_bound < order {
                ck.truth(
                    "degree is exactly j - i - 1",
                    &[("m", deg_bound as i64)],
                    !series.coeff(deg_bound).unwrap().is_zero(),
                )?;
            }
            if let Some(mut expected) = printed_u(p, ii, j - i) {
                // below the degree only the known coefficients can be compared
                expected.truncate(order);
                let expected = show(&expected);
                ck.eq("printed u_{i,j}", &[("i", ii), ("j", jj)], &expected, &show(&u))?;
            }
            let c = fuss_catalan_series(p, order);
            let y = &c - &PowerSeries::one(order);
            let u_series = PowerSeries::new(u.clone(), order);
            let rhs = &c.powi(ii + 1).unwrap() * &u_series.compose(&y).unwrap();
            let lhs = PowerSeries::from_fn(order, |n| a_coeff(p, i, j, n));
            ck.eq("sum A_n x^n = c_p^(i+1) u(c_p - 1)", &[], &lhs, &rhs)?;
            if p == 3 && i == 0 && j == 2 {
                // 2-stack-sortable permutations, a_n = 4 A_n
                let a = lhs.scale_rational(&q(4));
                let c2 = &c * &c;
                let rhs = &c.scale_rational(&q(3)) - &c2;
                ck.eq("sum a_n x^n = 3 c_3 - c_3^2", &[], &rhs, &a)?;
            }
        }
        Ok(())
    })();
    ck.finish(outcome)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_stack_sortable() {
        let r = check_fc_polynomiality(3, 0, 2, 20);
        assert!(r.passed(), "{:?}", r.first_failure);
        assert_eq!(r.details["polynomial"], "2 - x");
        assert_eq!(r.details["u"], "1/2 - 1/4*x");
    }

    #[test]
    fn printed_family() {
        for p in 2..=4 {
            for i in 0..=2 {
                for d in 1..=3 {
                    let r = check_fc_polynomiality(p, i, i + d, 14);
                    assert!(r.passed(), "p={p} i={i} d={d}: {:?}", r.first_failure);
                }
            }
        }
    }

    #[test]
    fn i_at_least_j() {
        let r = check_fc_polynomiality(3, 2, 1, 16);
        assert!(r.passed(), "{:?}", r.first_failure);
        assert_eq!(r.details["evidence"], "empirical");
    }

    #[test]
    fn primitive_form() {
        let v = primitive_integer_form(&[Rational::new(-1, 2), Rational::new(1, 4)]);
        assert_eq!(v, vec![BigInt::from(2), BigInt::from(-1)]);
    }
}
