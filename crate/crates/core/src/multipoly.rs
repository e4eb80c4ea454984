//! Sparse multivariate polynomials over exact rationals.
//!
//! Variables are identified by index; names only matter for display. An
//! exponent vector is stored with trailing zeros trimmed, which makes the
//! derived `Vec` ordering agree with lexicographic order on the padded
//! vectors. That ordering is used only for canonical output.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

use crate::rational::Rational;

pub type Monomial = Vec<u32>;

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct MultiPoly {
    terms: BTreeMap<Monomial, Rational>,
}

fn trim(mut m: Monomial) -> Monomial {
    while m.last() == Some(&0) {
        m.pop();
    }
    m
}

fn mono_mul(a: &[u32], b: &[u32]) -> Monomial {
    let (long, short) = if a.len() >= b.len() { (a, b) } else { (b, a) };
    let mut out = long.to_vec();
    for (o, e) in out.iter_mut().zip(short) {
        *o += e;
    }
    out
}

fn mono_degree(m: &[u32]) -> u32 {
    m.iter().sum()
}

impl MultiPoly {
    pub fn zero() -> Self {
        MultiPoly::default()
    }

    pub fn one() -> Self {
        MultiPoly::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        MultiPoly::monomial(Vec::new(), c)
    }

    /// The polynomial consisting of variable `index`.
    pub fn var(index: usize) -> Self {
        let mut m = vec![0; index + 1];
        m[index] = 1;
        MultiPoly::monomial(m, Rational::one())
    }

    pub fn monomial(exponents: Monomial, coeff: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(trim(exponents), coeff);
        }
        MultiPoly { terms }
    }

    /// `sum c_i v^i` in the single variable `var`.
    pub fn univariate(var: usize, coeffs: &[Rational]) -> Self {
        let mut p = MultiPoly::zero();
        for (i, c) in coeffs.iter().enumerate() {
            let mut m = vec![0; var + 1];
            m[var] = i as u32;
            p.add_term(m, c.clone());
        }
        p
    }

    pub fn add_term(&mut self, exponents: Monomial, coeff: Rational) {
        if coeff.is_zero() {
            return;
        }
        let key = trim(exponents);
        let remove = match self.terms.get_mut(&key) {
            Some(c) => {
                *c += &coeff;
                c.is_zero()
            }
            None => {
                self.terms.insert(key.clone(), coeff);
                false
            }
        };
        if remove {
            self.terms.remove(&key);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    /// Coefficient of the given monomial (trailing zeros optional).
    pub fn coeff(&self, exponents: &[u32]) -> Rational {
        self.terms
            .get(&trim(exponents.to_vec()))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn constant_term(&self) -> Rational {
        self.coeff(&[])
    }

    /// The rational value when the polynomial is constant.
    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => self.terms.get(&Vec::new()).cloned(),
            _ => None,
        }
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|m| mono_degree(m)).max()
    }

    /// Smallest total degree of a term, `None` for zero.
    pub fn min_degree(&self) -> Option<u32> {
        self.terms.keys().map(|m| mono_degree(m)).min()
    }

    pub fn degree_in(&self, var: usize) -> Option<u32> {
        self.terms
            .keys()
            .map(|m| m.get(var).copied().unwrap_or(0))
            .max()
    }

    pub fn num_vars(&self) -> usize {
        self.terms.keys().map(|m| m.len()).max().unwrap_or(0)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return MultiPoly::zero();
        }
        MultiPoly {
            terms: self
                .terms
                .iter()
                .map(|(m, v)| (m.clone(), v * c))
                .collect(),
        }
    }

    pub fn filter_terms(&self, keep: impl Fn(&[u32]) -> bool) -> Self {
        MultiPoly {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| keep(m))
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn truncate_total_degree(&self, max: u32) -> Self {
        self.filter_terms(|m| mono_degree(m) <= max)
    }

    pub fn truncate_var_degree(&self, var: usize, max: u32) -> Self {
        self.filter_terms(|m| m.get(var).copied().unwrap_or(0) <= max)
    }

    pub fn homogeneous_part(&self, degree: u32) -> Self {
        self.filter_terms(|m| mono_degree(m) == degree)
    }

    /// Product with every term of total degree above `max` dropped.
    pub fn mul_truncated(&self, other: &Self, max: u32) -> Self {
        self.mul_filtered(other, |m| mono_degree(m) <= max)
    }

    /// Product keeping only monomials accepted by `keep`; the filter must be
    /// monotone (rejecting `m` rejects every multiple of `m`).
    pub fn mul_filtered(&self, other: &Self, keep: impl Fn(&[u32]) -> bool) -> Self {
        let mut out = MultiPoly::zero();
        for (ma, ca) in &self.terms {
            if !keep(ma) {
                continue;
            }
            for (mb, cb) in &other.terms {
                let m = mono_mul(ma, mb);
                if keep(&m) {
                    out.add_term(m, ca * cb);
                }
            }
        }
        out
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = MultiPoly::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    pub fn derivative(&self, var: usize) -> Self {
        let mut out = MultiPoly::zero();
        for (m, c) in &self.terms {
            let e = m.get(var).copied().unwrap_or(0);
            if e == 0 {
                continue;
            }
            let mut m2 = m.clone();
            m2[var] -= 1;
            out.add_term(m2, c * &Rational::from(e as i64));
        }
        out
    }

    /// Substitute a rational value for one variable.
    pub fn substitute(&self, var: usize, value: &Rational) -> Self {
        let mut out = MultiPoly::zero();
        for (m, c) in &self.terms {
            let e = m.get(var).copied().unwrap_or(0);
            let mut m2 = m.clone();
            if var < m2.len() {
                m2[var] = 0;
            }
            out.add_term(m2, c * &value.pow(e as i64));
        }
        out
    }

    /// Evaluate at a point; missing coordinates are treated as zero.
    pub fn evaluate(&self, point: &[Rational]) -> Rational {
        let mut acc = Rational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (i, &e) in m.iter().enumerate() {
                if e > 0 {
                    let v = point.get(i).cloned().unwrap_or_else(Rational::zero);
                    t = t * v.pow(e as i64);
                }
            }
            acc += t;
        }
        acc
    }

    /// Exact division by a monomial, `None` if some term is not divisible.
    pub fn div_monomial(&self, monomial: &[u32]) -> Option<Self> {
        let mut out = MultiPoly::zero();
        for (m, c) in &self.terms {
            let mut m2 = m.clone();
            if m2.len() < monomial.len() {
                m2.resize(monomial.len(), 0);
            }
            for (a, b) in m2.iter_mut().zip(monomial) {
                if *a < *b {
                    return None;
                }
                *a -= b;
            }
            out.add_term(m2, c.clone());
        }
        Some(out)
    }

    /// Coefficients of powers of `var`, each a polynomial in the others.
    pub fn collect_in(&self, var: usize) -> BTreeMap<u32, MultiPoly> {
        let mut out: BTreeMap<u32, MultiPoly> = BTreeMap::new();
        for (m, c) in &self.terms {
            let e = m.get(var).copied().unwrap_or(0);
            let mut m2 = m.clone();
            if var < m2.len() {
                m2[var] = 0;
            }
            out.entry(e).or_default().add_term(m2, c.clone());
        }
        out
    }

    pub fn display_with<'a>(&'a self, names: &'a [&'a str]) -> impl fmt::Display + 'a {
        Named { poly: self, names }
    }

    /// Terms in display order: ascending total degree, then variables of
    /// lower index first.
    fn display_order(&self) -> Vec<(&Monomial, &Rational)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|(a, _), (b, _)| mono_degree(a).cmp(&mono_degree(b)).then(b.cmp(a)));
        v
    }

    /// Map keyed by the comma-joined exponent vector padded to `nvars`.
    pub fn to_exponent_map(&self, nvars: usize) -> BTreeMap<String, String> {
        let width = nvars.max(self.num_vars()).max(1);
        self.terms
            .iter()
            .map(|(m, c)| {
                let mut padded = m.clone();
                padded.resize(width, 0);
                let key = padded
                    .iter()
                    .map(|e| e.to_string())
                    .collect::<Vec<_>>()
                    .join(",");
                (key, c.to_fraction_string())
            })
            .collect()
    }
}

struct Named<'a> {
    poly: &'a MultiPoly,
    names: &'a [&'a str],
}

fn var_name(names: &[&str], i: usize) -> String {
    names
        .get(i)
        .map(|s| s.to_string())
        .unwrap_or_else(|| format!("v{i}"))
}

impl fmt::Display for Named<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.poly.display_order();
        if terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, (m, c)) in terms.into_iter().enumerate() {
            let negative = c.is_negative();
            let mag = c.abs();
            if idx == 0 {
                if negative {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if negative { " - " } else { " + " })?;
            }
            let mut factors = Vec::new();
            if !mag.is_one() || m.is_empty() {
                factors.push(mag.to_string());
            }
            for (i, &e) in m.iter().enumerate() {
                match e {
                    0 => {}
                    1 => factors.push(var_name(self.names, i)),
                    _ => factors.push(format!("{}^{}", var_name(self.names, i), e)),
                }
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display_with(&[]))
    }
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for MultiPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let map = self.to_exponent_map(0);
        let mut s = serializer.serialize_map(Some(map.len()))?;
        for (k, v) in &map {
            s.serialize_entry(k, v)?;
        }
        s.end()
    }
}

impl From<Rational> for MultiPoly {
    fn from(c: Rational) -> Self {
        MultiPoly::constant(c)
    }
}

impl AddAssign<&MultiPoly> for MultiPoly {
    fn add_assign(&mut self, rhs: &MultiPoly) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), c.clone());
        }
    }
}

impl SubAssign<&MultiPoly> for MultiPoly {
    fn sub_assign(&mut self, rhs: &MultiPoly) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), -c);
        }
    }
}

impl Add<&MultiPoly> for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub<&MultiPoly> for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Mul<&MultiPoly> for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        self.mul_filtered(rhs, |_| true)
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        self.scale(&Rational::from(-1))
    }
}

macro_rules! owned_variants {
    ($trait:ident, $method:ident) => {
        impl $trait<MultiPoly> for MultiPoly {
            type Output = MultiPoly;
            fn $method(self, rhs: MultiPoly) -> MultiPoly {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&MultiPoly> for MultiPoly {
            type Output = MultiPoly;
            fn $method(self, rhs: &MultiPoly) -> MultiPoly {
                (&self).$method(rhs)
            }
        }
        impl $trait<MultiPoly> for &MultiPoly {
            type Output = MultiPoly;
            fn $method(self, rhs: MultiPoly) -> MultiPoly {
                self.$method(&rhs)
            }
        }
    };
}

owned_variants!(Add, add);
owned_variants!(Sub, sub);
owned_variants!(Mul, mul);

impl Neg for MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> Rational {
        Rational::from(n)
    }

    #[test]
    fn no_zero_terms_survive() {
        let x = MultiPoly::var(0);
        let y = MultiPoly::var(1);
        let p = &(&x + &y) - &y;
        assert_eq!(p, x);
        assert_eq!(p.len(), 1);
        assert!((&x - &x).is_zero());
    }

    #[test]
    fn product_matches_dense_evaluation() {
        let x = MultiPoly::var(0);
        let y = MultiPoly::var(1);
        let a = &(&x + &MultiPoly::constant(q(2))) * &y;
        let b = &(&x * &x) - &y.scale(&q(3));
        let ab = &a * &b;
        for px in -2..3 {
            for py in -2..3 {
                let pt = [q(px), q(py)];
                assert_eq!(ab.evaluate(&pt), a.evaluate(&pt) * b.evaluate(&pt));
            }
        }
    }

    #[test]
    fn display_is_canonical() {
        let x = MultiPoly::var(0);
        let p = &MultiPoly::constant(q(2)) - &x;
        assert_eq!(p.display_with(&["x"]).to_string(), "2 - x");
        let y = MultiPoly::var(1);
        let r = &(&x * &y).scale(&Rational::new(-1, 2)) + &y.pow(2);
        assert_eq!(r.display_with(&["u", "k"]).to_string(), "-1/2*u*k + k^2");
        assert_eq!(MultiPoly::zero().to_string(), "0");
    }

    #[test]
    fn derivative_and_division() {
        let x = MultiPoly::var(0);
        let y = MultiPoly::var(1);
        let p = &(&x.pow(3) * &y) + &x;
        assert_eq!(
            p.derivative(0),
            &(&x.pow(2) * &y).scale(&q(3)) + &MultiPoly::one()
        );
        assert_eq!((&x * &y).div_monomial(&[1, 1]), Some(MultiPoly::one()));
        assert_eq!(p.div_monomial(&[1, 1]), None);
        assert_eq!(p.truncate_total_degree(2), x);
    }

    #[test]
    fn serializes_exponent_vectors() {
        let x = MultiPoly::var(0);
        let p = &x.scale(&Rational::new(1, 2)) + &MultiPoly::var(1);
        let json = serde_json::to_string(&p).unwrap();
        assert_eq!(json, r#"{"0,1":"1/1","1,0":"1/2"}"#);
    }
}
