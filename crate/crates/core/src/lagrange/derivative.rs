//! Derivative forms for `f = x + z H(f)`.
//!
//! Everything lives in `Q[x, z]` (variables 0 and 1). The input series are
//! read as exact polynomials in `x`, so every identity is checked exactly;
//! the only truncation is in the degree of `z`.

use crate::multipoly::MultiPoly;
use crate::numbers::{binom_q, factorial};
use crate::rational::Rational;
use crate::series::PowerSeries;

const X: usize = 0;
const Z: usize = 1;

fn poly_x(a: &PowerSeries<Rational>) -> MultiPoly {
    MultiPoly::univariate(X, a.coeffs())
}

fn dx(p: &MultiPoly, times: usize) -> MultiPoly {
    (0..times).fold(p.clone(), |acc, _| acc.derivative(X))
}

fn z_degree(m: &[u32]) -> u32 {
    m.get(Z).copied().unwrap_or(0)
}

fn mul_z(a: &MultiPoly, b: &MultiPoly, nz: u32) -> MultiPoly {
    a.mul_filtered(b, |m| z_degree(m) <= nz)
}

/// `p(u)` for the polynomial read from `coeffs`, truncated in `z`.
fn eval_at(coeffs: &PowerSeries<Rational>, u: &MultiPoly, nz: u32) -> MultiPoly {
    let mut acc = MultiPoly::zero();
    for c in coeffs.coeffs().iter().rev() {
        acc = mul_z(&acc, u, nz);
        acc += &MultiPoly::constant(c.clone());
    }
    acc
}

/// The solution of `f = x + z H(f)` through `z^nz`.
pub fn solve_x_plus_zh(h: &PowerSeries<Rational>, nz: u32) -> MultiPoly {
    let x = MultiPoly::var(X);
    let z = MultiPoly::var(Z);
    let mut f = x.clone();
    for _ in 0..nz {
        f = &x + &mul_z(&z, &eval_at(h, &f, nz), nz);
    }
    f
}

#[derive(Debug, Clone, PartialEq)]
pub struct DerivativeForms {
    /// `phi(f)` by the sum of `D^m(phi (1 - G') G^m / m!)`
    pub d1: MultiPoly,
    /// `phi(f)` by `phi + sum_{m >= 1} D^{m-1}(phi' G^m / m!)`
    pub d2: MultiPoly,
    /// `psi(f) / (1 - G'(f))` by the sum of `D^m(psi G^m / m!)`
    pub d3: MultiPoly,
    /// `phi(f)` by substitution into the solved `f`
    pub direct_phi: MultiPoly,
    /// `psi(f) / (1 - z H'(f))` by substitution
    pub direct_psi: MultiPoly,
    pub pass: bool,
}

/// The three derivative expansions with `G = z H`, each compared with
/// direct substitution, as polynomials in `x` and `z` through `z^nz`.
pub fn derivative_form(
    phi: &PowerSeries<Rational>,
    psi: &PowerSeries<Rational>,
    h: &PowerSeries<Rational>,
    nz: u32,
) -> DerivativeForms {
    let p = poly_x(phi);
    let s = poly_x(psi);
    let hx = poly_x(h);
    let z = MultiPoly::var(Z);
    let g = mul_z(&z, &hx, nz);
    let dg = g.derivative(X);
    let one_minus_dg = &MultiPoly::one() - &dg;
    let dp = p.derivative(X);

    let mut d1 = MultiPoly::zero();
    let mut d2 = p.clone();
    let mut d3 = MultiPoly::zero();
    let mut gm = MultiPoly::one();
    for m in 0..=nz as usize {
        let inv_fact = Rational::one() / Rational::from(factorial(m as u64));
        let gm_m = gm.scale(&inv_fact);
        d1 += &dx(&mul_z(&mul_z(&p, &one_minus_dg, nz), &gm_m, nz), m);
        if m >= 1 {
            d2 += &dx(&mul_z(&dp, &gm_m, nz), m - 1);
        }
        d3 += &dx(&mul_z(&s, &gm_m, nz), m);
        gm = mul_z(&gm, &g, nz);
    }

    let f = solve_x_plus_zh(h, nz);
    let direct_phi = eval_at(phi, &f, nz);
    let dh = h.derivative();
    let w = mul_z(&z, &eval_at(&dh, &f, nz), nz);
    // 1 / (1 - w) = sum w^j, and w carries a factor of z
    let mut geo = MultiPoly::one();
    let mut wj = MultiPoly::one();
    for _ in 0..nz {
        wj = mul_z(&wj, &w, nz);
        geo += &wj;
    }
    let direct_psi = mul_z(&eval_at(psi, &f, nz), &geo, nz);
    let pass = d1 == direct_phi && d2 == direct_phi && d3 == direct_psi;
    DerivativeForms {
        d1,
        d2,
        d3,
        direct_phi,
        direct_psi,
        pass,
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct CauchyCheck {
    pub lhs1: MultiPoly,
    pub rhs1: MultiPoly,
    pub lhs2: MultiPoly,
    pub rhs2: MultiPoly,
    pub pass: bool,
}

/// `D^{m-1}(a' H^m)`, read as `a` itself when `m = 0`.
fn dm1(m: usize, a: &MultiPoly, hx: &MultiPoly) -> MultiPoly {
    if m == 0 {
        return a.clone();
    }
    dx(&(&a.derivative(X) * &hx.pow(m as u32)), m - 1)
}

/// Both Cauchy convolution identities at `n`, as polynomial identities in `x`.
pub fn cauchy_convolution_check(
    phi: &PowerSeries<Rational>,
    psi: &PowerSeries<Rational>,
    h: &PowerSeries<Rational>,
    n: usize,
) -> CauchyCheck {
    let p = poly_x(phi);
    let s = poly_x(psi);
    let hx = poly_x(h);
    let mut lhs1 = MultiPoly::zero();
    let mut lhs2 = MultiPoly::zero();
    for m in 0..=n {
        let b = binom_q(n as i64, m as i64);
        let left = dm1(m, &p, &hx);
        let right1 = dx(&(&s * &hx.pow((n - m) as u32)), n - m);
        lhs1 += &(&left * &right1).scale(&b);
        lhs2 += &(&left * &dm1(n - m, &s, &hx)).scale(&b);
    }
    let ps = &p * &s;
    let rhs1 = dx(&(&ps * &hx.pow(n as u32)), n);
    let rhs2 = dm1(n, &ps, &hx);
    let pass = lhs1 == rhs1 && lhs2 == rhs2;
    CauchyCheck {
        lhs1,
        rhs1,
        lhs2,
        rhs2,
        pass,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::special::{exp_scaled, exp_x, poly};

    #[test]
    fn constant_h_is_taylor() {
        let phi = poly::<Rational>(&[1, -2, 0, 5, 1], 5);
        let one = poly::<Rational>(&[1], 1);
        let r = derivative_form(&phi, &phi, &one, 6);
        assert!(r.pass);
        // phi(x + z)
        let x_plus_z = &MultiPoly::var(X) + &MultiPoly::var(Z);
        assert_eq!(r.direct_phi, eval_at(&phi, &x_plus_z, 6));
        // z^0 part is phi(x)
        assert_eq!(r.d2.truncate_var_degree(Z, 0), poly_x(&phi));
    }

    #[test]
    fn exponential_h() {
        let h = exp_x::<Rational>(6);
        let phi = exp_scaled(&Rational::from(2), 6);
        assert!(derivative_form(&phi, &phi, &h, 5).pass);
    }

    #[test]
    fn cauchy_small() {
        let a = poly::<Rational>(&[1, 1], 2);
        for n in 0..=4 {
            assert!(cauchy_convolution_check(&a, &a, &a, n).pass);
        }
        let r = cauchy_convolution_check(&a, &poly(&[2, 0, 1], 3), &a, 0);
        assert_eq!(r.lhs1, r.rhs1);
    }
}
