use super::LagrangeError;
use crate::numbers::factorial;
use crate::rational::Rational;
use crate::scalar::Scalar;
use crate::series::{PowerSeries, SeriesError};

fn spow<S: Scalar>(s: &S, e: u64) -> S {
    let mut acc = S::one();
    for _ in 0..e {
        acc = acc.mul_ref(s);
    }
    acc
}

/// Every `(n_lo, .., n_hi)` with `sum (i - shift) n_i = weight` and
/// `sum n_i <= max_count`, indices starting at `lo`.
fn profiles(lo: usize, hi: usize, shift: usize, weight: u64, max_count: u64) -> Vec<Vec<u64>> {
    fn rec(
        i: usize,
        hi: usize,
        shift: usize,
        weight: u64,
        count: u64,
        cur: &mut Vec<u64>,
        out: &mut Vec<Vec<u64>>,
    ) {
        if i > hi {
            if weight == 0 {
                out.push(cur.clone());
            }
            return;
        }
        let w = (i - shift) as u64;
        let most = (weight / w).min(count);
        for c in 0..=most {
            cur.push(c);
            rec(i + 1, hi, shift, weight - c * w, count - c, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if lo > hi {
        if weight == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    rec(lo, hi, shift, weight, max_count, &mut Vec::new(), &mut out);
    out
}

/// `[x^n] f^k` for `f = x R(f)`, `R = sum r_i t^i`, as the multinomial sum
/// over `n_0 + n_1 + ... = n`, `n_1 + 2 n_2 + ... = n - k` of
/// `k (n-1)! / (n_0! n_1! ...) r_0^{n_0} r_1^{n_1} ...`.
pub fn explicit_coefficient<S: Scalar>(r: &[S], n: i64, k: i64) -> Result<S, LagrangeError> {
    if n < 0 {
        return Err(LagrangeError::InvalidArgument(
            "n must be nonnegative".into(),
        ));
    }
    if n == 0 {
        return match k {
            0 => Ok(S::one()),
            k if k > 0 => Ok(S::zero()),
            _ => Err(LagrangeError::InvalidArgument(
                "[x^0] f^k for k < 0 needs the logarithmic supplement".into(),
            )),
        };
    }
    if n < k || r.is_empty() {
        return Ok(S::zero());
    }
    let weight = (n - k) as u64;
    let head = Rational::from(k) * Rational::from(factorial(n as u64 - 1));
    let mut acc = S::zero();
    for prof in profiles(1, r.len() - 1, 0, weight, n as u64) {
        let n0 = n as u64 - prof.iter().sum::<u64>();
        let mut c = head.clone() / Rational::from(factorial(n0));
        let mut term = spow(&r[0], n0);
        for (idx, &ni) in prof.iter().enumerate() {
            c = c / Rational::from(factorial(ni));
            term = term.mul_ref(&spow(&r[idx + 1], ni));
        }
        acc += &term.scale(&c);
    }
    Ok(acc)
}

/// `[x^m] f^k` where `f` is the compositional inverse of
/// `g = x - g_2 x^2 - g_3 x^3 - ...`, as the sum over
/// `n_2 + 2 n_3 + ... = m - k` of `k (n-1)! / (m! n_2! n_3! ...) g_2^{n_2} ...`
/// with `n = m + n_2 + n_3 + ...`.
pub fn explicit_from_inverse<S: Scalar>(
    g: &PowerSeries<S>,
    m: i64,
    k: i64,
) -> Result<S, LagrangeError> {
    if m < 1 {
        return Err(LagrangeError::InvalidArgument("m must be positive".into()));
    }
    if g.order() < 2 || !g.constant_term().is_zero() || g.coeffs()[1] != S::one() {
        return Err(LagrangeError::InvalidArgument(
            "g must have the form x - g_2 x^2 - ...".into(),
        ));
    }
    if m < k {
        return Ok(S::zero());
    }
    let weight = (m - k) as u64;
    let top = weight as usize + 1;
    if top >= g.order() && weight > 0 {
        return Err(SeriesError::OutOfPrecision {
            exponent: top as i64,
            order: g.order() as i64,
        }
        .into());
    }
    let gi: Vec<S> = (0..=top)
        .map(|i| g.coeffs().get(i).map(|c| c.neg_ref()).unwrap_or_else(S::zero))
        .collect();
    let mut acc = S::zero();
    for prof in profiles(2, top, 1, weight, u64::MAX) {
        let n = m as u64 + prof.iter().sum::<u64>();
        let mut c = Rational::from(k) * Rational::from(factorial(n - 1))
            / Rational::from(factorial(m as u64));
        let mut term = S::one();
        for (idx, &ni) in prof.iter().enumerate() {
            c = c / Rational::from(factorial(ni));
            term = term.mul_ref(&spow(&gi[idx + 2], ni));
        }
        acc += &term.scale(&c);
    }
    Ok(acc)
}

/// Coefficient of `A_1^{i_1} A_2^{i_2} ... B_1^{j_1} B_2^{j_2} ...` in `f^k`
/// where `f = sum_m A_m exp(B_m f)`.
pub fn raney_coefficient(i: &[u64], j: &[u64], k: u64) -> Rational {
    let si: u64 = i.iter().sum();
    let sj: u64 = j.iter().sum();
    if k == 0 || si != k + sj {
        return Rational::zero();
    }
    let mut c = Rational::from(k as i64) * Rational::from(factorial(si - 1));
    for t in 0..i.len().max(j.len()) {
        let it = i.get(t).copied().unwrap_or(0);
        let jt = j.get(t).copied().unwrap_or(0);
        c = c / Rational::from(factorial(it)) * Rational::from(it as i64).pow(jt as i64)
            / Rational::from(factorial(jt));
    }
    c
}
