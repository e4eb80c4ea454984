#![allow(dead_code)]

use lagrange_kit::{LaurentSeries, PowerSeries, Rational};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub fn q(n: i64) -> Rational {
    Rational::from(n)
}

/// `p/q` with `|p| <= 3`, `1 <= q <= 3`.
pub fn small_rational(rng: &mut ChaCha8Rng) -> Rational {
    Rational::new(rng.gen_range(-3..=3i64), rng.gen_range(1..=3i64))
}

pub fn nonzero_rational(rng: &mut ChaCha8Rng) -> Rational {
    loop {
        let c = small_rational(rng);
        if !c.is_zero() {
            return c;
        }
    }
}

/// `1 + r_1 t + ... + r_d t^d`, `d <= 4`.
pub fn random_r(rng: &mut ChaCha8Rng, order: usize) -> PowerSeries<Rational> {
    let d = rng.gen_range(1..=4);
    let mut c = vec![q(1)];
    c.extend((0..d).map(|_| small_rational(rng)));
    PowerSeries::new(c, order)
}

/// Laurent polynomial with lowest exponent in `-3..=0` and up to six terms.
pub fn random_phi(rng: &mut ChaCha8Rng, order: i64) -> LaurentSeries<Rational> {
    let min = rng.gen_range(-3..=0i64);
    let len = rng.gen_range(1..=6);
    let mut c = vec![nonzero_rational(rng)];
    c.extend((1..len).map(|_| small_rational(rng)));
    LaurentSeries::new(min, c, order)
}

/// `g_1 x + ... + g_d x^d` with `g_1 != 0`.
pub fn random_reversible(rng: &mut ChaCha8Rng, degree: usize, order: usize) -> PowerSeries<Rational> {
    let mut c = vec![q(0), nonzero_rational(rng)];
    c.extend((2..=degree).map(|_| small_rational(rng)));
    PowerSeries::new(c, order)
}

/// Polynomial of degree below `len` with small rational coefficients.
pub fn random_poly(rng: &mut ChaCha8Rng, len: usize) -> PowerSeries<Rational> {
    PowerSeries::new((0..len).map(|_| small_rational(rng)).collect(), len)
}
