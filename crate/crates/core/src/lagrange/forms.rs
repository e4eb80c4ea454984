use serde::Serialize;

use super::{solve_xr, LagrangeError};
use crate::rational::Rational;
use crate::scalar::Scalar;
use crate::series::{LaurentSeries, PowerSeries, SeriesError};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Form {
    A,
    B,
    C,
    D,
    E,
}

impl Form {
    pub const ALL: [Form; 5] = [Form::A, Form::B, Form::C, Form::D, Form::E];
}

/// Values of the five coefficient formulas at one `n` next to the values
/// obtained by solving `f = xR(f)` and substituting.
#[derive(Debug, Clone, PartialEq)]
pub struct FormsReport<S> {
    pub n: i64,
    /// `None` at `n = 0`, where form A is undefined.
    pub a: Option<S>,
    pub b: S,
    pub c: S,
    pub d: S,
    pub e: S,
    /// `[x^n] phi(f)`
    pub direct: S,
    /// `[x^n] phi(f) / (1 - x R'(f))`
    pub direct_d: S,
    /// `[x^n] phi(f) / (1 - f R'(f) / R(f))`
    pub direct_e: S,
    pub agree: bool,
}

fn lift<S: Scalar>(a: &PowerSeries<S>) -> LaurentSeries<S> {
    LaurentSeries::from_power_series(a)
}

/// `[t^e] fixed(t) R(t)^n`, truncating `R` to what the coefficient needs.
fn coeff_with_power<S: Scalar>(
    fixed: &LaurentSeries<S>,
    r: &PowerSeries<S>,
    n: i64,
    e: i64,
) -> Result<S, LagrangeError> {
    if fixed.is_zero() {
        return Ok(fixed.coeff(e)?);
    }
    let need = e - fixed.min_exponent() + 1;
    if need <= 0 {
        return Ok(S::zero());
    }
    let rn = lift(&r.truncate(need as usize)).powi(n)?;
    Ok((&fixed.truncate(e + 1) * &rn).coeff(e)?)
}

/// `1 - t R'(t) / R(t)` through `t^(order - 1)`.
fn log_derivative_weight<S: Scalar>(
    r: &PowerSeries<S>,
    order: usize,
) -> Result<LaurentSeries<S>, LagrangeError> {
    let rt = lift(&r.truncate(order + 1));
    let q = rt.derivative().shift(1).checked_div(&rt)?;
    Ok(&LaurentSeries::one(order as i64) - &q)
}

/// The value of one form at `n`. Forms D and E give `[t^n] phi R^n`; D
/// reads it directly and E as `[t^0] phi(t) / g(t)^n` with `g = t / R`.
pub fn form_value<S: Scalar>(
    form: Form,
    phi: &LaurentSeries<S>,
    r: &PowerSeries<S>,
    n: i64,
) -> Result<S, LagrangeError> {
    let need = (n - phi.min_exponent() + 1).max(1);
    match form {
        Form::A => {
            if n == 0 {
                return Err(LagrangeError::FormAUndefined);
            }
            let v = coeff_with_power(&phi.derivative(), r, n, n - 1)?;
            Ok(v.scale(&Rational::new(1, n)))
        }
        Form::B => {
            let w = log_derivative_weight(r, need as usize)?;
            coeff_with_power(&(phi * &w), r, n, n)
        }
        Form::C => {
            let first = coeff_with_power(phi, r, n, n)?;
            let rd = lift(&r.truncate(need as usize + 1).derivative());
            let second = coeff_with_power(&(phi * &rd), r, n - 1, n - 1)?;
            Ok(first.sub_ref(&second))
        }
        Form::D => coeff_with_power(phi, r, n, n),
        Form::E => {
            let g = lift(&r.truncate(need as usize)).inverse()?.shift(1);
            let gn = g.powi(-n)?;
            Ok((&phi.truncate(n + 1) * &gn).coeff(0)?)
        }
    }
}

/// `[x^n] phi(f)` together with the two weighted variants, by solving for
/// `f` and substituting.
fn direct_values<S: Scalar>(
    phi: &LaurentSeries<S>,
    r: &PowerSeries<S>,
    n: i64,
) -> Result<(S, S, S), LagrangeError> {
    let nf = (n - phi.min_exponent().min(0) + 2).max(2) as usize;
    let f = solve_xr(&r.truncate(nf + 1), nf);
    let phi_f = phi.truncate(n + 1).compose(&f)?;
    let rd_f = lift(&r.truncate(nf + 1).derivative().compose(&f)?);
    let r_f = lift(&r.truncate(nf).compose(&f)?);
    let one = LaurentSeries::one(nf as i64);
    let x = LaurentSeries::monomial(S::one(), 1, nf as i64);
    let denom_d = &one - &(&x * &rd_f);
    let denom_e = &one - &(&lift(&f) * &rd_f).checked_div(&r_f)?;
    Ok((
        phi_f.coeff(n)?,
        phi_f.checked_div(&denom_d)?.coeff(n)?,
        phi_f.checked_div(&denom_e)?.coeff(n)?,
    ))
}

/// Every form at `n`, checked against direct substitution.
pub fn coeff_all_forms<S: Scalar>(
    phi: &LaurentSeries<S>,
    r: &PowerSeries<S>,
    n: i64,
) -> Result<FormsReport<S>, LagrangeError> {
    if r.constant_term().inverse().is_none() {
        return Err(SeriesError::DivisionByNonUnit.into());
    }
    let a = match form_value(Form::A, phi, r, n) {
        Ok(v) => Some(v),
        Err(LagrangeError::FormAUndefined) => None,
        Err(e) => return Err(e),
    };
    let b = form_value(Form::B, phi, r, n)?;
    let c = form_value(Form::C, phi, r, n)?;
    let d = form_value(Form::D, phi, r, n)?;
    let e = form_value(Form::E, phi, r, n)?;
    let (direct, direct_d, direct_e) = direct_values(phi, r, n)?;
    let agree = a.as_ref().is_none_or(|a| *a == direct)
        && b == direct
        && c == direct
        && d == direct_d
        && e == direct_e;
    Ok(FormsReport {
        n,
        a,
        b,
        c,
        d,
        e,
        direct,
        direct_d,
        direct_e,
        agree,
    })
}

/// `[x^0] phi(f) = [t^0] phi + [t^-1] phi'(t) log(R(t) / r_0)`.
pub fn constant_term_supplement<S: Scalar>(
    phi: &LaurentSeries<S>,
    r: &PowerSeries<S>,
) -> Result<S, LagrangeError> {
    let r0_inv = r
        .constant_term()
        .inverse()
        .ok_or(SeriesError::BadConstantTerm("R(0) must be invertible"))?;
    let head = phi.coeff(0)?;
    let dphi = phi.derivative();
    if dphi.is_zero() || dphi.min_exponent() >= -1 {
        return Ok(head);
    }
    let len = (-dphi.min_exponent()) as usize;
    let log = lift(&r.truncate(len).scale(&r0_inv).log()?);
    let tail = (&dphi.truncate(0) * &log).coeff(-1)?;
    Ok(head.add_ref(&tail))
}

/// `[x^m] log(f/x) = (1/m) [t^m] R(t)^m` for `R(0) = 1`.
pub fn log_f_over_x<S: Scalar>(r: &PowerSeries<S>, m: i64) -> Result<S, LagrangeError> {
    if m < 1 {
        return Err(LagrangeError::InvalidArgument(format!(
            "m must be positive, got {m}"
        )));
    }
    if r.constant_term() != S::one() {
        return Err(SeriesError::BadConstantTerm("R(0) must be 1").into());
    }
    let v = r.truncate(m as usize + 1).powi(m)?.coeff(m as usize)?;
    Ok(v.scale(&Rational::new(1, m)))
}

/// `[x^n] f^k = (k/n) [t^(n-k)] R(t)^n` for `n != 0`.
pub fn power_coefficient<S: Scalar>(
    r: &PowerSeries<S>,
    n: i64,
    k: i64,
) -> Result<S, LagrangeError> {
    if n == 0 {
        return Err(LagrangeError::FormAUndefined);
    }
    if n < k {
        return Ok(S::zero());
    }
    let e = n - k;
    let rn = if n > 0 {
        r.truncate(e as usize + 1).powi(n)?
    } else {
        r.truncate(e as usize + 1).inverse()?.powi(-n)?
    };
    Ok(rn.coeff(e as usize)?.scale(&Rational::new(k, n)))
}

#[derive(Debug, Clone, PartialEq)]
pub struct SchurJabotinsky<S> {
    /// `[x^n] f^k`
    pub a: S,
    /// `[x^-k] g^-n` for `g` the compositional inverse of `f`
    pub b: S,
    pub pass: bool,
}

/// `a_{n,k} = (k/n) b_{-k,-n}` from independent Laurent expansions of `f^k`
/// and `g^{-n}`.
pub fn schur_jabotinsky_check<S: Scalar>(
    f: &PowerSeries<S>,
    n: i64,
    k: i64,
) -> Result<SchurJabotinsky<S>, LagrangeError> {
    if n == 0 {
        return Err(LagrangeError::InvalidArgument("n must be nonzero".into()));
    }
    let g = f.reversion()?;
    let a = lift(f).powi(k)?.coeff(n)?;
    let b = lift(&g).powi(-n)?.coeff(-k)?;
    let pass = a == b.scale(&Rational::new(k, n));
    Ok(SchurJabotinsky { a, b, pass })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numbers::binom_q;
    use crate::series::special::{binomial_series, exp_x, poly};

    fn q(n: i64) -> Rational {
        Rational::from(n)
    }

    fn one_plus_t_pow(k: i64, order: usize) -> LaurentSeries<Rational> {
        LaurentSeries::from_power_series(&binomial_series(&q(k), order))
    }

    #[test]
    fn catalan_every_form() {
        let r = poly::<Rational>(&[1, 2, 1], 30);
        let rep = coeff_all_forms(&one_plus_t_pow(1, 30), &r, 3).unwrap();
        assert!(rep.agree);
        for v in [rep.a.clone().unwrap(), rep.b, rep.c, rep.direct] {
            assert_eq!(v, q(5));
        }
        for n in 0..8 {
            for k in [-3, -1, 2, 4] {
                let phi = one_plus_t_pow(k, 30);
                let b = form_value(Form::B, &phi, &r, n).unwrap();
                assert_eq!(b, binom_q(2 * n + k - 1, n) - binom_q(2 * n + k - 1, n - 1));
            }
        }
    }

    #[test]
    fn form_b_constant() {
        let r = exp_x::<Rational>(10);
        let phi = LaurentSeries::one(10);
        assert_eq!(form_value(Form::B, &phi, &r, 0).unwrap(), q(1));
        assert_eq!(
            form_value(Form::A, &phi, &r, 0),
            Err(LagrangeError::FormAUndefined)
        );
    }

    #[test]
    fn negative_exponents_in_phi() {
        let r = poly::<Rational>(&[1, 3, 0, -1], 40);
        let phi = LaurentSeries::new(-3, vec![q(2), q(0), q(-1), q(5), q(1)], 40);
        for n in -6..=12 {
            let rep = coeff_all_forms(&phi, &r, n).unwrap();
            assert!(rep.agree, "n = {n}: {rep:?}");
        }
    }

    #[test]
    fn supplement() {
        let r = poly::<Rational>(&[1, 2, 1], 10);
        let phi = LaurentSeries::monomial(q(1), -1, 10);
        assert_eq!(constant_term_supplement(&phi, &r).unwrap(), q(-2));
        let rep = coeff_all_forms(&phi, &r, 0).unwrap();
        assert_eq!(rep.direct, q(-2));
        let plain = LaurentSeries::new(0, vec![q(7), q(1)], 10);
        assert_eq!(constant_term_supplement(&plain, &r).unwrap(), q(7));
        // r_0 != 1 goes through log(R / r_0)
        let r3 = poly::<Rational>(&[3, 1], 10);
        let phi2 = LaurentSeries::new(-2, vec![q(1), q(4)], 10);
        let direct = coeff_all_forms(&phi2, &r3, 0).unwrap().direct;
        assert_eq!(constant_term_supplement(&phi2, &r3).unwrap(), direct);
    }

    #[test]
    fn log_over_x() {
        let r = poly::<Rational>(&[1, 2, 1], 20);
        for m in 1..8 {
            assert_eq!(
                log_f_over_x(&r, m).unwrap(),
                binom_q(2 * m, m) / q(m)
            );
        }
        assert!(log_f_over_x(&poly::<Rational>(&[1], 5), 3).unwrap().is_zero());
        assert!(log_f_over_x(&r, 0).is_err());
    }

    #[test]
    fn schur_jabotinsky_catalan() {
        let g = poly::<Rational>(&[0, 1, -1], 12);
        let f = g.reversion().unwrap();
        let sj = schur_jabotinsky_check(&f, 3, 1).unwrap();
        assert_eq!(sj.a, q(2));
        assert_eq!(sj.b, q(6));
        assert!(sj.pass);
        let x = PowerSeries::<Rational>::x(10);
        for n in [-3, -1, 1, 2, 4] {
            for k in -3..=4 {
                let sj = schur_jabotinsky_check(&x, n, k).unwrap();
                assert!(sj.pass);
                assert_eq!(sj.a, if n == k { q(1) } else { q(0) });
            }
        }
    }
}
