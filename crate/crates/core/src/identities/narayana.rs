use super::{Checker, IdentityReport, Step};
use crate::lagrange::solve_indeterminate;
use crate::multipoly::MultiPoly;
use crate::numbers::binom_q;
use crate::rational::Rational;
use crate::series::PowerSeries;

fn q(n: i64) -> Rational {
    Rational::from(n)
}

/// Exponent vectors in `nvars` variables of total degree at most `max`.
fn monomials(nvars: usize, max: u32) -> Vec<Vec<u32>> {
    let mut out = vec![Vec::new()];
    for _ in 0..nvars {
        let mut next = Vec::new();
        for m in &out {
            let used: u32 = m.iter().sum();
            for e in 0..=max - used {
                let mut m2 = m.clone();
                m2.push(e);
                next.push(m2);
            }
        }
        out = next;
    }
    out
}

fn total(m: &[u32]) -> i64 {
    m.iter().map(|&e| e as i64).sum()
}

/// `[x^m]` of a series graded by total degree.
fn graded_coeff(f: &PowerSeries<MultiPoly>, m: &[u32]) -> Rational {
    f.coeffs()
        .get(total(m) as usize)
        .map(|p| p.coeff(m))
        .unwrap_or_else(Rational::zero)
}

/// `R(t) = prod_l (1 + sign x_l t)^(e_l)` graded by total degree in the
/// `x_l`, through degree `degree`; the coefficient of `t^n` is homogeneous
/// of degree `n`.
fn product_kernel(exps: &[i64], sign: i64, degree: u32) -> PowerSeries<MultiPoly> {
    let nv = exps.len();
    PowerSeries::from_fn(degree as usize + 1, |n| {
        let mut p = MultiPoly::zero();
        for m in monomials(nv, n as u32) {
            if total(&m) != n as i64 {
                continue;
            }
            let mut c = q(1);
            for (l, &e) in m.iter().enumerate() {
                c = c * binom_q(exps[l], e as i64) * q(sign).pow(e as i64);
            }
            p.add_term(m, c);
        }
        p
    })
}

fn narayana_number(n: i64, i: i64) -> Rational {
    binom_q(n, i) * binom_q(n, i - 1) / q(n)
}

/// Solves `f = (1+xf)(1+yf)` and checks the coefficients of `f^k`, the
/// Narayana form and its symmetry, the closed quadratic solution, and the
/// three-variable quadratic `f = (1+xf)(1+yf)/(1-zf)`.
pub fn check_narayana_suite(degree: usize) -> IdentityReport {
    let mut ck = Checker::new("narayana", degree + 1);
    let d = degree as u32;
    let outcome = (|| -> Step {
        let x = MultiPoly::var(0);
        let y = MultiPoly::var(1);
        let xy = &x * &y;
        let r = PowerSeries::new(vec![MultiPoly::one(), &x + &y, xy.clone()], degree + 1);
        let f = solve_indeterminate(&r, d).expect("kernel is guarded");
        let flat = f.coeffs().iter().fold(MultiPoly::zero(), |acc, p| &acc + p);
        let fx = &MultiPoly::one() + &x.mul_truncated(&flat, d);
        let fy = &MultiPoly::one() + &y.mul_truncated(&flat, d);
        let resid = &flat - &fx.mul_truncated(&fy, d);
        ck.eq("f = (1+xf)(1+yf) by re-substitution", &[], &MultiPoly::zero(), &resid)?;
        for k in 1..=3i64 {
            let fk = f.powi(k).unwrap();
            for m in monomials(2, d) {
                let (i, j) = (m[0] as i64, m[1] as i64);
                let n = i + j + k;
                let v = q(k) / q(n) * binom_q(n, i) * binom_q(n, j);
                ck.eq(
                    "[x^i y^j] f^k = k/(i+j+k) binom(i+j+k,i) binom(i+j+k,j)",
                    &[("k", k), ("i", i), ("j", j)],
                    &v,
                    &graded_coeff(&fk, &m),
                )?;
            }
        }
        for n in 1..=degree as i64 + 1 {
            for i in 0..n {
                let m = [i as u32, (n - i - 1) as u32];
                ck.eq(
                    "[x^i y^(n-i-1)] f = N(n, i+1)",
                    &[("n", n), ("i", i)],
                    &narayana_number(n, i + 1),
                    &graded_coeff(&f, &m),
                )?;
            }
            for i in 1..=n {
                ck.eq(
                    "N(n,i) = N(n,n+1-i)",
                    &[("n", n), ("i", i)],
                    &narayana_number(n, n + 1 - i),
                    &narayana_number(n, i),
                )?;
            }
        }
        // 2xy f = 1 - x - y - sqrt((1-x-y)^2 - 4xy)
        let top = degree + 3;
        let one_xy = &(&MultiPoly::one() - &x) - &y;
        let disc = PowerSeries::new(
            vec![
                MultiPoly::one(),
                (&x + &y).scale(&q(-2)),
                &(&x + &y).pow(2) - &xy.scale(&q(4)),
            ],
            top,
        );
        let root = disc.pow_rational(&Rational::new(1, 2)).unwrap();
        let num = &PowerSeries::new(vec![one_xy.homogeneous_part(0), one_xy.homogeneous_part(1)], top)
            - &root;
        for lowest in 0..2 {
            ck.eq(
                "closed form numerator has no terms below degree 2",
                &[("degree", lowest)],
                &MultiPoly::zero(),
                &num.coeffs()[lowest as usize],
            )?;
        }
        for dd in 0..=degree {
            let closed = num.coeffs()[dd + 2]
                .div_monomial(&[1, 1])
                .map(|p| p.scale(&Rational::new(1, 2)));
            match closed {
                Some(c) => ck.eq(
                    "f = (1-x-y-sqrt((1-x-y)^2-4xy))/(2xy)",
                    &[("degree", dd as i64)],
                    &f.coeffs()[dd],
                    &c,
                )?,
                None => ck.truth("numerator divisible by xy", &[("degree", dd as i64)], false)?,
            }
        }
        three_variable(&mut ck, d.min(7))
    })();
    ck.finish(outcome)
}

fn three_variable(ck: &mut Checker, d: u32) -> Step {
    let x = MultiPoly::var(0);
    let y = MultiPoly::var(1);
    let z = MultiPoly::var(2);
    let quad = &(&x * &y) + &z;
    let r = PowerSeries::new(vec![MultiPoly::one(), &x + &y, quad.clone()], d as usize + 1);
    let f = solve_indeterminate(&r, d).expect("kernel is guarded");
    let flat = f.coeffs().iter().fold(MultiPoly::zero(), |acc, p| &acc + p);
    // (xy + z) f^2 - (1 - x - y) f + 1 = 0
    let one_xy = &(&MultiPoly::one() - &x) - &y;
    let resid = &(&quad.mul_truncated(&flat.mul_truncated(&flat, d), d)
        - &one_xy.mul_truncated(&flat, d))
        + &MultiPoly::one();
    ck.eq(
        "(xy+z) f^2 - (1-x-y) f + 1 = 0",
        &[],
        &MultiPoly::zero(),
        &resid.truncate_total_degree(d),
    )?;
    for k in 1..=2i64 {
        let fk = f.powi(k).unwrap();
        for m in monomials(3, d) {
            let n = total(&m) + k;
            let (a, b, c) = (m[0] as i64, m[1] as i64, m[2] as i64);
            let v = q(k) / q(n) * binom_q(n, a) * binom_q(n, b) * binom_q(n + c - 1, c);
            ck.eq(
                "[x^a y^b z^c] f^k = k/n binom(n,a) binom(n,b) binom(n+c-1,c)",
                &[("k", k), ("a", a), ("b", b), ("c", c)],
                &v,
                &graded_coeff(&fk, &m),
            )?;
        }
    }
    Ok(())
}

const R_PROFILES: [&[i64]; 5] = [&[2], &[1, 1], &[1, 2], &[3, -1], &[2, -2, 1]];
const S_PROFILES: [&[i64]; 4] = [&[1], &[1, 1], &[2, 1], &[1, 1, 1]];

/// Coefficients of `f^k` for `f = prod (1+x_l f)^(r_l)` and of `g^k` for
/// `g = prod (1-x_l g)^(-s_l)` against the generalized Fuss-Narayana
/// formulas, over integer exponent profiles with at most three variables.
pub fn check_fuss_narayana(ks: &[i64], degree: usize) -> IdentityReport {
    let mut ck = Checker::new("fuss-narayana", degree + 1);
    ck.param("k", ks.to_vec());
    ck.detail(
        "r_profiles",
        R_PROFILES.iter().map(|p| p.to_vec()).collect::<Vec<_>>(),
    );
    ck.detail(
        "s_profiles",
        S_PROFILES.iter().map(|p| p.to_vec()).collect::<Vec<_>>(),
    );
    let d = degree as u32;
    let outcome = (|| -> Step {
        for (kind, profiles, sign) in [("r", &R_PROFILES[..], 1i64), ("s", &S_PROFILES[..], -1i64)] {
            for (idx, prof) in profiles.iter().enumerate() {
                let exps: Vec<i64> = if sign == 1 {
                    prof.to_vec()
                } else {
                    prof.iter().map(|s| -s).collect()
                };
                let kernel = product_kernel(&exps, sign, d);
                let f = solve_indeterminate(&kernel, d).expect("kernel is guarded");
                for &k in ks {
                    let fk = f.powi(k).unwrap();
                    for m in monomials(prof.len(), d) {
                        let n = total(&m) + k;
                        if n == 0 {
                            continue;
                        }
                        let mut v = q(k) / q(n);
                        for (l, &e) in m.iter().enumerate() {
                            let e = e as i64;
                            v = v * if sign == 1 {
                                binom_q(prof[l] * n, e)
                            } else {
                                binom_q(prof[l] * n + e - 1, e)
                            };
                        }
                        let mut loc = vec![("profile", idx as i64), ("k", k)];
                        let names = ["i1", "i2", "i3"];
                        for (l, &e) in m.iter().enumerate() {
                            loc.push((names[l], e as i64));
                        }
                        let check = if kind == "r" {
                            "[x^I] f^k = k/n prod binom(r_l n, i_l)"
                        } else {
                            "[x^I] g^k = k/n prod binom(s_l n + i_l - 1, i_l)"
                        };
                        ck.eq(check, &loc, &v, &graded_coeff(&fk, &m))?;
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

    #[test]
    fn narayana_value() {
        assert_eq!(narayana_number(4, 2), q(6));
    }

    #[test]
    fn suites_pass() {
        let r = check_narayana_suite(6);
        assert!(r.passed(), "{:?}", r.first_failure);
        let r = check_fuss_narayana(&[-1, 1, 2], 5);
        assert!(r.passed(), "{:?}", r.first_failure);
    }

    #[test]
    fn monomial_count() {
        assert_eq!(monomials(2, 3).len(), 10);
        assert_eq!(monomials(3, 2).len(), 10);
    }
}
