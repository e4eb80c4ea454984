use super::LagrangeError;
use crate::multipoly::MultiPoly;
use crate::scalar::Scalar;
use crate::series::PowerSeries;

/// The unique `f` with `f = x R(f)`, through order `min(order, R.order + 1)`.
///
/// Fixed-point iteration `f <- x R(f)`: after pass `n` the coefficients of
/// `x^1..x^n` are final, so each pass only has to evaluate the next
/// coefficient of `x R(f)`. The powers `f^j` are kept column by column so a
/// pass costs `O(n^2)` ring operations.
pub fn solve_xr<S: Scalar>(r: &PowerSeries<S>, order: usize) -> PowerSeries<S> {
    let order = order.min(r.order() + 1);
    let rc = r.coeffs();
    let mut f = vec![S::zero(); order];
    // powers[j - 1][m] = [x^m] f^j
    let mut powers: Vec<Vec<S>> = Vec::new();
    for n in 1..order {
        // [x^(n-1)] f^j for j >= 1 only needs f_1..f_(n-1)
        let m = n - 1;
        for j in 1..=m {
            if powers.len() < j {
                powers.push(vec![S::zero(); order]);
            }
            if j == 1 {
                powers[0][m] = f[m].clone();
                continue;
            }
            powers[j - 1][m] = S::dot((1..=(m + 1 - j)).map(|i| (&f[i], &powers[j - 2][m - i])));
        }
        if m == 0 {
            f[n] = rc[0].clone();
            continue;
        }
        f[n] = S::dot((1..=m.min(rc.len() - 1)).map(|j| (&rc[j], &powers[j - 1][m])));
    }
    let f = PowerSeries::new(f, order);
    debug_assert!(verify_xr(r, &f));
    f
}

/// Direct substitution check of `f = x R(f)` through the order of `f`.
pub fn verify_xr<S: Scalar>(r: &PowerSeries<S>, f: &PowerSeries<S>) -> bool {
    let n = f.order();
    if n == 0 {
        return true;
    }
    if !f.constant_term().is_zero() || n > r.order() + 1 {
        return false;
    }
    let inner = f.truncate(n - 1);
    match r.truncate(n - 1).compose(&inner) {
        Ok(rf) => rf.shift_into(n) == *f,
        Err(_) => false,
    }
}

impl<S: Scalar> PowerSeries<S> {
    /// `x * self` with order raised by one.
    fn shift_into(&self, order: usize) -> Self {
        let mut c = vec![S::zero()];
        c.extend(self.coeffs().iter().cloned());
        PowerSeries::new(c, order)
    }
}

/// The unique `f = R(f)` where every `r_n` with `n > 0` is divisible by some
/// parameter, computed modulo parameter monomials of total degree above
/// `degree_bound`.
///
/// The result is graded: the coefficient of `s^d` is the homogeneous part of
/// `f` of total degree `d`, so it has order `degree_bound + 1`.
pub fn solve_indeterminate(
    r: &PowerSeries<MultiPoly>,
    degree_bound: u32,
) -> Result<PowerSeries<MultiPoly>, LagrangeError> {
    for (index, c) in r.coeffs().iter().enumerate().skip(1) {
        if !c.constant_term().is_zero() {
            return Err(LagrangeError::UnguardedCoefficient { index });
        }
    }
    let rc: Vec<MultiPoly> = r
        .coeffs()
        .iter()
        .map(|c| c.truncate_total_degree(degree_bound))
        .collect();
    // the error f - f_i gains at least one degree per pass
    let mut f = MultiPoly::zero();
    for _ in 0..=degree_bound {
        let mut acc = MultiPoly::zero();
        for c in rc.iter().rev() {
            acc = acc.mul_truncated(&f, degree_bound);
            acc += c;
        }
        f = acc;
    }
    Ok(grade(&f, degree_bound))
}

/// Split a polynomial into homogeneous parts `0..=degree_bound`.
pub(crate) fn grade(f: &MultiPoly, degree_bound: u32) -> PowerSeries<MultiPoly> {
    PowerSeries::from_fn(degree_bound as usize + 1, |d| f.homogeneous_part(d as u32))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numbers::{binom, factorial};
    use crate::rational::Rational;
    use crate::series::special::{exp_x, poly};

    #[test]
    fn catalan_from_one_plus_t_squared() {
        let f = solve_xr(&poly::<Rational>(&[1, 2, 1], 12), 12);
        for n in 1..12i64 {
            let c = Rational::from(binom(2 * n, n)) / Rational::from(n + 1);
            assert_eq!(f.coeff(n as usize).unwrap(), c);
        }
    }

    #[test]
    fn tree_function_and_trivial() {
        let f = solve_xr(&exp_x::<Rational>(15), 15);
        for n in 1..15u64 {
            let expect = Rational::from(n as i64).pow(n as i64 - 1)
                / Rational::from(factorial(n));
            assert_eq!(f.coeff(n as usize).unwrap(), expect);
        }
        assert_eq!(solve_xr(&poly::<Rational>(&[1], 8), 8), PowerSeries::x(8));
        assert!(solve_xr(&poly::<Rational>(&[0, 1], 8), 8).is_zero());
    }

    #[test]
    fn short_r_limits_precision() {
        let f = solve_xr(&poly::<Rational>(&[1, 1], 3), 10);
        assert_eq!(f.order(), 4);
    }

    #[test]
    fn indeterminate_small() {
        // R = r0 + r1 t + r2 t^2
        let r = PowerSeries::new(
            vec![MultiPoly::var(0), MultiPoly::var(1), MultiPoly::var(2)],
            3,
        );
        let f = solve_indeterminate(&r, 3).unwrap();
        let (r0, r1, r2) = (MultiPoly::var(0), MultiPoly::var(1), MultiPoly::var(2));
        assert_eq!(f.coeff(1).unwrap(), r0);
        assert_eq!(f.coeff(2).unwrap(), &r0 * &r1);
        assert_eq!(
            f.coeff(3).unwrap(),
            &(&r0 * &(&r1 * &r1)) + &(&(&r0 * &r0) * &r2)
        );
        let only = solve_indeterminate(&PowerSeries::new(vec![MultiPoly::var(0)], 1), 4).unwrap();
        assert_eq!(only.coeff(1).unwrap(), MultiPoly::var(0));
        assert!(only.coeff(2).unwrap().is_zero());
    }

    #[test]
    fn unguarded_is_rejected() {
        let r = PowerSeries::new(vec![MultiPoly::var(0), MultiPoly::one()], 2);
        assert_eq!(
            solve_indeterminate(&r, 3),
            Err(LagrangeError::UnguardedCoefficient { index: 1 })
        );
    }
}
