use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{Checker, IdentityReport, Step};
use crate::identities::catalan_series;
use crate::lagrange::{raney_coefficient, schur_jabotinsky_check, solve_indeterminate};
use crate::multipoly::MultiPoly;
use crate::numbers::{binom_q, factorial};
use crate::rational::Rational;
use crate::series::special::exp_scaled;
use crate::series::{LaurentSeries, PowerSeries};

fn q(n: i64) -> Rational {
    Rational::from(n)
}

fn small_rational(rng: &mut ChaCha8Rng) -> Rational {
    Rational::new(rng.gen_range(-3..=3i64), rng.gen_range(1..=3i64))
}

fn nonzero_rational(rng: &mut ChaCha8Rng) -> Rational {
    loop {
        let c = small_rational(rng);
        if !c.is_zero() {
            return c;
        }
    }
}

/// `g_1 x + g_2 x^2 + ...` with `g_1 != 0` and random low coefficients.
fn random_reversible(rng: &mut ChaCha8Rng, degree: usize, order: usize) -> PowerSeries<Rational> {
    let mut c = vec![Rational::zero(), nonzero_rational(rng)];
    for _ in 2..=degree {
        c.push(small_rational(rng));
    }
    PowerSeries::new(c, order)
}

/// `(1+a)^r (1+b)^s / (1-ab)^(r+s+1) = sum binom(r+j,i) binom(s+i,j) a^i b^j`
/// for `i, j < bound`.
pub fn check_rational_expansion(rs: &[i64], ss: &[i64], bound: usize) -> IdentityReport {
    let mut ck = Checker::new("rational-expansion", bound);
    ck.param("r", rs.to_vec()).param("s", ss.to_vec());
    let nb = bound as u32;
    let keep = |m: &[u32]| m.iter().all(|&e| e < nb);
    let a = MultiPoly::var(0);
    let b = MultiPoly::var(1);
    let ab = &a * &b;
    let outcome = (|| -> Step {
        for &r in rs {
            for &s in ss {
                let mut geo = MultiPoly::zero();
                for n in 0..bound as i64 {
                    geo += &ab.pow(n as u32).scale(&binom_q(r + s + n, n));
                }
                let pa = (&MultiPoly::one() + &a).pow(r as u32);
                let pb = (&MultiPoly::one() + &b).pow(s as u32);
                let lhs = pa.mul_filtered(&pb, keep).mul_filtered(&geo, keep);
                for i in 0..bound as i64 {
                    for j in 0..bound as i64 {
                        ck.eq(
                            "[a^i b^j] = binom(r+j,i) binom(s+i,j)",
                            &[("r", r), ("s", s), ("i", i), ("j", j)],
                            &(binom_q(r + j, i) * binom_q(s + i, j)),
                            &lhs.coeff(&[i as u32, j as u32]),
                        )?;
                    }
                }
            }
        }
        Ok(())
    })();
    ck.finish(outcome)
}

/// Raney's coefficient formula for `f = A_1 e^(B_1 f) + A_2 e^(B_2 f)`
/// against the coefficients of `f^k` from the indeterminate solver, for all
/// exponent profiles with `i_1 + i_2 <= sum_i_max`.
pub fn check_raney(sum_i_max: usize, ks: &[i64]) -> IdentityReport {
    let degree = (2 * sum_i_max as u32).saturating_sub(1).max(1);
    let mut ck = Checker::new("raney", degree as usize + 1);
    ck.param("sum_i_max", sum_i_max as i64).param("k", ks.to_vec());
    let outcome = (|| -> Step {
        // r_n = (A_1 B_1^n + A_2 B_2^n) / n!, variables A_1, A_2, B_1, B_2
        let kernel = PowerSeries::from_fn(degree as usize + 1, |n| {
            let inv = Rational::one() / Rational::from(factorial(n as u64));
            let t1 = &MultiPoly::var(0) * &MultiPoly::var(2).pow(n as u32);
            let t2 = &MultiPoly::var(1) * &MultiPoly::var(3).pow(n as u32);
            (&t1 + &t2).scale(&inv)
        });
        let f = solve_indeterminate(&kernel, degree).expect("kernel is guarded");
        for &k in ks {
            if k < 1 {
                return ck.fail("k is a positive integer", &[("k", k)], ">= 1".into(), k.to_string());
            }
            let fk = f.powi(k).unwrap();
            for i1 in 0..=sum_i_max as u32 {
                for i2 in 0..=sum_i_max as u32 - i1 {
                    let sj_max = (i1 + i2).saturating_sub(k as u32) + 1;
                    for j1 in 0..=sj_max {
                        for j2 in 0..=sj_max - j1 {
                            let m = [i1, i2, j1, j2];
                            let deg: u32 = m.iter().sum();
                            if deg > degree {
                                continue;
                            }
                            let expected =
                                raney_coefficient(&[i1 as u64, i2 as u64], &[j1 as u64, j2 as u64], k as u64);
                            let actual = fk.coeffs()[deg as usize].coeff(&m);
                            ck.eq(
                                "Raney coefficient of A^i B^j in f^k",
                                &[
                                    ("k", k),
                                    ("i1", i1 as i64),
                                    ("i2", i2 as i64),
                                    ("j1", j1 as i64),
                                    ("j2", j2 as i64),
                                ],
                                &expected,
                                &actual,
                            )?;
                        }
                    }
                }
            }
        }
        Ok(())
    })();
    ck.finish(outcome)
}

/// `[x^n] f^k = (k/n) [x^(-k)] g^(-n)` with `g` the reversion of `f`, for
/// `count` random `f` and `f = x c(x)`, `|n|, |k| <= bound`, `n != 0`.
pub fn check_schur_jabotinsky(count: usize, bound: i64, order: usize, seed: u64) -> IdentityReport {
    let mut ck = Checker::new("schur-jabotinsky", order);
    ck.param("count", count as i64)
        .param("bound", bound)
        .param("seed", seed);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut cases = vec![catalan_series(order).shift(1)];
    for _ in 0..count {
        cases.push(random_reversible(&mut rng, 4, order));
    }
    let outcome = (|| -> Step {
        // the worked pair: f = x c(x) has inverse x - x^2
        let g = cases[0].reversion().unwrap();
        let expected = PowerSeries::new(vec![q(0), q(1), q(-1)], order);
        ck.eq("(x c(x))^<-1> = x - x^2", &[], &expected, &g)?;
        let sj = schur_jabotinsky_check(&cases[0], 3, 2).unwrap();
        ck.truth("worked pair via the inversion module", &[("n", 3), ("k", 2)], sj.pass)?;
        for (case, f) in cases.iter().enumerate() {
            let g = f.reversion().unwrap();
            let lf = LaurentSeries::from_power_series(f);
            let lg = LaurentSeries::from_power_series(&g);
            let f_pows: Vec<LaurentSeries<Rational>> =
                (-bound..=bound).map(|k| lf.powi(k).unwrap()).collect();
            let g_pows: Vec<LaurentSeries<Rational>> =
                (-bound..=bound).map(|n| lg.powi(-n).unwrap()).collect();
            for n in -bound..=bound {
                if n == 0 {
                    continue;
                }
                for k in -bound..=bound {
                    let a = f_pows[(k + bound) as usize].coeff(n).unwrap();
                    let b = g_pows[(n + bound) as usize].coeff(-k).unwrap();
                    ck.eq(
                        "[x^n] f^k = (k/n) [x^-k] g^-n",
                        &[("case", case as i64), ("n", n), ("k", k)],
                        &a,
                        &(b * Rational::new(k, n)),
                    )?;
                }
            }
        }
        Ok(())
    })();
    ck.finish(outcome)
}

/// `res (f/x)^n = 1` for `f = x/(1-e^(-x))` and `1 <= n <= order - 2`,
/// recovery of `f` from those conditions alone, `res g'/g = 1`, and
/// `res a = res a(g) g'` for `pairs` random Laurent `a` and power series `g`.
pub fn check_hirzebruch_residue(order: usize, pairs: usize, seed: u64) -> IdentityReport {
    let mut ck = Checker::new("hirzebruch-residue", order);
    ck.param("pairs", pairs as i64).param("seed", seed);
    let n_max = order as i64 - 2;
    let outcome = (|| -> Step {
        let one = PowerSeries::one(order);
        let w = &one - &exp_scaled(&q(-1), order);
        let lw = LaurentSeries::from_power_series(&w);
        for n in 1..=n_max {
            // (f/x)^n = (1 - e^(-x))^(-n)
            let res = lw.powi(-n).unwrap().residue().unwrap();
            ck.eq("res (f/x)^n = 1", &[("n", n)], &q(1), &res)?;
        }
        // f is forced coefficient by coefficient: [x^(n-1)] f^n = 1
        let len = n_max as usize;
        let mut f = vec![Rational::zero(); len];
        for n in 1..=n_max {
            let idx = n as usize - 1;
            f[idx] = Rational::zero();
            let fs = PowerSeries::new(f.clone(), len);
            let c = fs.powi(n).unwrap().coeff(idx).unwrap();
            f[idx] = if n == 1 {
                q(1)
            } else {
                (q(1) - c) / q(n)
            };
        }
        let forced = PowerSeries::new(f, len);
        let closed = w.div_x_pow(1).unwrap().inverse().unwrap().truncate(len);
        ck.eq("unique f with res (f/x)^n = 1 is x/(1-e^(-x))", &[], &closed, &forced)?;

        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let po = 15usize;
        for pair in 0..pairs as i64 {
            let g = random_reversible(&mut rng, 5, po);
            let lg = LaurentSeries::from_power_series(&g);
            let dlg = LaurentSeries::from_power_series(&g.derivative());
            let log_deriv = dlg.checked_div(&lg).unwrap();
            ck.eq("res g'/g = 1", &[("pair", pair)], &q(1), &log_deriv.residue().unwrap())?;
            let min = rng.gen_range(-3..=0i64);
            let coeffs: Vec<Rational> = (0..(po as i64 - min)).map(|_| small_rational(&mut rng)).collect();
            let a = LaurentSeries::new(min, coeffs, po as i64);
            let lhs = a.residue().unwrap();
            let rhs = (&a.compose(&g).unwrap() * &dlg).residue().unwrap();
            ck.eq("res a = res a(g) g'", &[("pair", pair)], &lhs, &rhs)?;
        }
        Ok(())
    })();
    ck.finish(outcome)
}
