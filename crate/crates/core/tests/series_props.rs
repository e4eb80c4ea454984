use lagrange_kit::{LaurentSeries, PowerSeries, Rational};
use proptest::collection::vec;
use proptest::prelude::*;

fn rat() -> impl Strategy<Value = Rational> {
    (-3i64..=3, 1i64..=3).prop_map(|(n, d)| Rational::new(n, d))
}

fn nonzero_rat() -> impl Strategy<Value = Rational> {
    rat().prop_filter("nonzero", |r| !r.is_zero())
}

fn series(order: usize) -> impl Strategy<Value = PowerSeries<Rational>> {
    vec(rat(), order).prop_map(move |c| PowerSeries::new(c, order))
}

fn unit_series(order: usize) -> impl Strategy<Value = PowerSeries<Rational>> {
    (nonzero_rat(), vec(rat(), order - 1)).prop_map(move |(c0, rest)| {
        let mut c = vec![c0];
        c.extend(rest);
        PowerSeries::new(c, order)
    })
}

fn laurent(order: i64) -> impl Strategy<Value = LaurentSeries<Rational>> {
    (-4i64..=2, vec(rat(), 0..10)).prop_map(move |(min, c)| LaurentSeries::new(min, c, order))
}

/// `x + c_2 x^2 + ... + c_9 x^9`
fn near_identity(order: usize) -> impl Strategy<Value = PowerSeries<Rational>> {
    vec(rat(), 8).prop_map(move |rest| {
        let mut c = vec![Rational::zero(), Rational::one()];
        c.extend(rest);
        PowerSeries::new(c, order)
    })
}

/// `g_1 x + ...` with `g_1 != 0`, up to degree 5.
fn reversible(order: usize) -> impl Strategy<Value = PowerSeries<Rational>> {
    (nonzero_rat(), vec(rat(), 4)).prop_map(move |(g1, rest)| {
        let mut c = vec![Rational::zero(), g1];
        c.extend(rest);
        PowerSeries::new(c, order)
    })
}

fn canonical(a: &LaurentSeries<Rational>) -> bool {
    a.is_zero() || !a.coeffs()[0].is_zero()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn ring_axioms(a in series(20), b in series(20), c in series(20)) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&(&a + &b) - &b, a);
    }

    #[test]
    fn division_inverts_multiplication(a in series(16), b in unit_series(16)) {
        let q = a.checked_div(&b).unwrap();
        prop_assert_eq!(&q * &b, a);
    }

    #[test]
    fn reversion_round_trip(f in near_identity(10)) {
        let g = f.reversion().unwrap();
        let x = PowerSeries::x(10);
        prop_assert_eq!(f.compose(&g).unwrap(), x.clone());
        prop_assert_eq!(g.compose(&f).unwrap(), x);
    }

    #[test]
    fn derivative_has_no_residue(a in laurent(12)) {
        prop_assert!(a.derivative().residue().unwrap().is_zero());
    }

    #[test]
    fn residue_change_of_variables(a in laurent(15), g in reversible(15)) {
        let dg = LaurentSeries::from_power_series(&g.derivative());
        let rhs = (&a.compose(&g).unwrap() * &dg).residue().unwrap();
        prop_assert_eq!(a.residue().unwrap(), rhs);
    }

    #[test]
    fn laurent_stays_canonical(a in laurent(12), b in laurent(12), e in -3i64..=3) {
        prop_assert!(canonical(&a));
        prop_assert!(canonical(&(&a + &b)));
        prop_assert!(canonical(&(&a - &a)));
        prop_assert!(canonical(&(&a * &b)));
        prop_assert!(canonical(&a.derivative()));
        if !b.is_zero() {
            prop_assert!(canonical(&a.checked_div(&b).unwrap()));
            prop_assert!(canonical(&b.powi(e).unwrap()));
        }
    }

    #[test]
    fn rationals_are_normalized(n in -50i64..=50, d in prop::sample::select(vec![-12i64, -3, -1, 1, 2, 6, 9])) {
        let r = Rational::new(n, d);
        prop_assert!(r.denom() > &0.into());
        prop_assert_eq!(Rational::new(2 * n, 2 * d), r.clone());
        let back: Rational = r.to_string().parse().unwrap();
        prop_assert_eq!(back, r);
    }
}

#[test]
fn order_mismatch_is_an_error() {
    let a = PowerSeries::<Rational>::one(5);
    let b = PowerSeries::<Rational>::one(6);
    assert!(a.checked_add(&b).is_err());
    assert!(a.checked_mul(&b).is_err());
}
