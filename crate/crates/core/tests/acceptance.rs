//! Acceptance suite: one line per criterion, nonzero exit if any fails.
//!
//! Run with `cargo test -p lagrange-kit-core --test acceptance`.

mod common;

use std::time::{Duration, Instant};

use lagrange_kit::combinat::{
    cycle_lemma_table, degree_trees_table, forest_census_polynomial, labeled_forest_table,
    ordered_forest_table, prufer_table, OracleRow,
};
use lagrange_kit::identities::{
    check_abel, check_fc_polynomiality, check_fuss_catalan, check_hirzebruch_residue,
    check_jensen, check_lacasse, check_p_l, check_q_l, check_r_m, check_raney,
    check_rothe_hagen, check_schur_jabotinsky, check_tree_function_suite, check_catalan_suite,
    IdentityReport,
};
use lagrange_kit::lagrange::{cauchy_convolution_check, coeff_all_forms, derivative_form, solve_xr};
use lagrange_kit::{MultiPoly, PowerSeries};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use common::*;

type Outcome = Result<(), String>;
type Criterion = (&'static str, fn() -> Outcome, Option<u64>);

fn report(r: &IdentityReport) -> Outcome {
    if r.passed() {
        Ok(())
    } else {
        Err(format!("{}: {:?}", r.identity, r.first_failure))
    }
}

fn rows(kind: &str, rows: &[OracleRow]) -> Outcome {
    match rows.iter().find(|r| !r.matches) {
        None => Ok(()),
        Some(r) => Err(format!("{kind} {}: {} != {}", r.label, r.oracle, r.formula)),
    }
}

fn five_forms() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for pair in 0..50 {
        let r = random_r(&mut rng, 40);
        let phi = random_phi(&mut rng, 40);
        for n in -6..=20 {
            let rep = coeff_all_forms(&phi, &r, n).map_err(|e| e.to_string())?;
            if !rep.agree {
                return Err(format!("pair {pair}, n = {n}: {rep:?}"));
            }
            if n != 0 && rep.a.is_none() {
                return Err(format!("form A missing at n = {n}"));
            }
        }
    }
    Ok(())
}

fn reversion_round_trip() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    let x = PowerSeries::x(25);
    for case in 0..100 {
        let f = random_reversible(&mut rng, 9, 25);
        let g = f.reversion().map_err(|e| e.to_string())?;
        if f.compose(&g).unwrap() != x || g.compose(&f).unwrap() != x {
            return Err(format!("case {case}: f = {f}"));
        }
    }
    Ok(())
}

fn catalan() -> Outcome {
    let r = check_catalan_suite(&(-5..=5).collect::<Vec<_>>(), 51);
    if r.details.get("convolution_n_max") != Some(&40.into()) {
        return Err("convolutions stop short of n = 40".into());
    }
    report(&r)
}

fn tree_function() -> Outcome {
    report(&check_tree_function_suite(&(-3..=5).collect::<Vec<_>>(), 31))?;
    report(&check_lacasse(21))?;
    report(&check_abel(8))
}

fn printed_polynomials() -> Outcome {
    report(&check_p_l(3, 20))?;
    report(&check_q_l(3, 20))?;
    report(&check_r_m(2, 20).map_err(|e| e.to_string())?)?;
    for p in 2..=4 {
        for i in 0..=2 {
            for d in 1..=3 {
                report(&check_fc_polynomiality(p, i, i + d, 16))?;
            }
        }
    }
    Ok(())
}

fn fuss_catalan() -> Outcome {
    report(&check_fuss_catalan(&[2, 3, 4, 5], &(-3..=5).collect::<Vec<_>>(), 31))?;
    let ps: Vec<i64> = (0..=4).collect();
    let grid: Vec<i64> = (-6..=6).collect();
    report(&check_rothe_hagen(&ps, &grid, 8))?;
    report(&check_jensen(&ps, &grid, &grid, 8))
}

fn two_stack() -> Outcome {
    let r = check_fc_polynomiality(3, 0, 2, 20);
    report(&r)?;
    match r.details.get("polynomial").and_then(|v| v.as_str()) {
        Some("2 - x") => Ok(()),
        other => Err(format!("polynomial is {other:?}")),
    }
}

fn oracles() -> Outcome {
    // R = s_0 + s_1 t + ... + s_4 t^4 with symbolic s_i
    let r = PowerSeries::new((0..5).map(MultiPoly::var).collect(), 9);
    let f = solve_xr(&r, 9);
    for k in 1..=3i64 {
        let fk = f.powi(k).map_err(|e| e.to_string())?;
        for n in 1..=8usize {
            let census = if (k as usize) <= n {
                forest_census_polynomial(n, k as usize, 4).map_err(|e| e.to_string())?
            } else {
                MultiPoly::zero()
            };
            if fk.coeffs()[n] != census {
                return Err(format!("census n = {n}, k = {k}"));
            }
            if (k as usize) <= n {
                rows("ordered-forest", &ordered_forest_table(n, k as usize).unwrap())?;
            }
        }
    }
    for m in 1..=7 {
        rows("degree-trees", &degree_trees_table(m).map_err(|e| e.to_string())?)?;
    }
    for n in 1..=6 {
        for k in 1..=n {
            rows("labeled-forest", &labeled_forest_table(n, k).map_err(|e| e.to_string())?)?;
        }
    }
    for m in 2..=6 {
        rows("prufer", &prufer_table(m).map_err(|e| e.to_string())?)?;
    }
    rows("cycle-lemma", &cycle_lemma_table(&[-1, 0, 1, 2], 8).map_err(|e| e.to_string())?)
}

fn raney() -> Outcome {
    report(&check_raney(5, &[1, 2]))
}

fn hirzebruch() -> Outcome {
    let r = check_hirzebruch_residue(22, 30, 10);
    report(&r)
}

fn derivative_forms() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    for case in 0..20 {
        let phi = random_poly(&mut rng, 4);
        let psi = random_poly(&mut rng, 4);
        let h = random_poly(&mut rng, 3);
        if !derivative_form(&phi, &psi, &h, 6).pass {
            return Err(format!("derivative forms, case {case}"));
        }
        for n in 0..=5 {
            if !cauchy_convolution_check(&phi, &psi, &h, n).pass {
                return Err(format!("Cauchy identities, case {case}, n = {n}"));
            }
        }
    }
    Ok(())
}

fn schur_jabotinsky() -> Outcome {
    report(&check_schur_jabotinsky(20, 6, 16, 14))
}

fn main() {
    let criteria: [Criterion; 12] = [
        ("five-form agreement", five_forms, Some(10)),
        ("reversion round trip", reversion_round_trip, Some(5)),
        ("catalan suite", catalan, Some(5)),
        ("tree-function suite", tree_function, Some(10)),
        ("printed polynomials", printed_polynomials, None),
        ("fuss-catalan", fuss_catalan, Some(15)),
        ("2-stack-sortable", two_stack, None),
        ("combinatorial oracles", oracles, Some(60)),
        ("raney", raney, None),
        ("hirzebruch residue", hirzebruch, None),
        ("derivative forms and cauchy", derivative_forms, None),
        ("schur-jabotinsky", schur_jabotinsky, None),
    ];
    let mut failed = 0;
    for (i, (name, run, limit)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let mut outcome = run();
        let elapsed = start.elapsed();
        if let Some(secs) = limit {
            if outcome.is_ok() && elapsed > Duration::from_secs(*secs) {
                outcome = Err(format!("took {elapsed:.2?}, limit {secs} s"));
            }
        }
        match outcome {
            Ok(()) => println!("PASS {:>2} {name} ({elapsed:.2?})", i + 1),
            Err(e) => {
                failed += 1;
                println!("FAIL {:>2} {name} ({elapsed:.2?}): {e}", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
