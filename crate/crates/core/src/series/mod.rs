//! Truncated Laurent series in `q` with exact rational coefficients.
//!
//! A [`LaurentSeries`] knows its coefficients for every exponent up to and
//! including its truncation order. Everything below the valuation is zero.
//! Every operation reports the tightest order at which all of its output
//! coefficients are determined by its inputs, so mixing precisions can never
//! produce an unverified coefficient.

mod bivariate;
mod json;

pub use bivariate::BiSeries;

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::Rational;

#[derive(Clone, Debug)]
pub struct LaurentSeries {
    /// Exponent of `coeffs[0]`. For the zero series this is `order + 1`.
    valuation: i64,
    /// Highest exponent whose coefficient is known.
    order: i64,
    /// Coefficients of `q^valuation ..= q^order`; `coeffs[0]` is nonzero.
    coeffs: Vec<Rational>,
}

impl LaurentSeries {
    /// The zero series, known to vanish through `q^order`.
    pub fn zero(order: i64) -> Self {
        LaurentSeries {
            valuation: order.saturating_add(1),
            order,
            coeffs: Vec::new(),
        }
    }

    pub fn one(order: i64) -> Self {
        Self::monomial(0, Rational::one(), order)
    }

    /// `c * q^exponent`, known through `q^order`.
    pub fn monomial(exponent: i64, c: Rational, order: i64) -> Self {
        Self::from_coeffs(exponent, vec![c], order)
    }

    /// Builds a series from coefficients of `q^start, q^(start+1), ...`.
    ///
    /// Entries past `order` are dropped and missing entries up to `order`
    /// are zero.
    pub fn from_coeffs(start: i64, coeffs: Vec<Rational>, order: i64) -> Self {
        let mut s = LaurentSeries {
            valuation: start,
            order,
            coeffs,
        };
        s.normalize();
        s
    }

    pub fn from_ints(start: i64, coeffs: &[i64], order: i64) -> Self {
        Self::from_coeffs(
            start,
            coeffs
                .iter()
                .map(|&c| Rational::from_integer(c.into()))
                .collect(),
            order,
        )
    }

    /// Builds a series from sparse `(exponent, coefficient)` terms.
    pub fn from_terms(terms: &[(i64, Rational)], order: i64) -> Self {
        let Some(start) = terms.iter().map(|(e, _)| *e).min() else {
            return Self::zero(order);
        };
        if start > order {
            return Self::zero(order);
        }
        let mut coeffs = vec![Rational::zero(); (order - start + 1) as usize];
        for (e, c) in terms {
            if *e <= order {
                coeffs[(e - start) as usize] += c;
            }
        }
        Self::from_coeffs(start, coeffs, order)
    }

    fn normalize(&mut self) {
        if self.valuation > self.order {
            self.coeffs.clear();
        } else {
            self.coeffs
                .resize((self.order - self.valuation + 1) as usize, Rational::zero());
        }
        let lead = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead == self.coeffs.len() {
            self.coeffs.clear();
            self.valuation = self.order.saturating_add(1);
        } else if lead > 0 {
            self.coeffs.drain(..lead);
            self.valuation += lead as i64;
        }
    }

    /// Lowest exponent with a nonzero coefficient (`order + 1` for zero).
    pub fn valuation(&self) -> i64 {
        self.valuation
    }

    /// Truncation order: coefficients are known through `q^order`.
    pub fn order(&self) -> i64 {
        self.order
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Leading (lowest-exponent) coefficient, if the series is nonzero.
    pub fn leading_coefficient(&self) -> Option<&Rational> {
        self.coeffs.first()
    }

    /// Exact coefficient of `q^n`.
    pub fn coefficient(&self, n: i64) -> Result<Rational> {
        if n > self.order {
            return Err(Error::BeyondTruncation {
                exponent: n,
                order: self.order,
            });
        }
        Ok(self.coeff_or_zero(n))
    }

    /// Coefficient of `q^n` assuming `n <= order`.
    pub(crate) fn coeff_or_zero(&self, n: i64) -> Rational {
        self.coeff_ref(n).cloned().unwrap_or_else(Rational::zero)
    }

    pub(crate) fn coeff_ref(&self, n: i64) -> Option<&Rational> {
        if n < self.valuation {
            return None;
        }
        self.coeffs.get((n - self.valuation) as usize)
    }

    /// `(exponent, coefficient)` pairs for every nonzero known coefficient.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &Rational)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(i, c)| (self.valuation + i as i64, c))
    }

    /// Dense coefficients of `q^valuation ..= q^order`.
    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }

    /// Lowers the truncation order. Raising it is never allowed.
    pub fn truncate(&self, order: i64) -> Self {
        if order >= self.order {
            return self.clone();
        }
        if order < self.valuation {
            return Self::zero(order);
        }
        let keep = (order - self.valuation + 1) as usize;
        Self::from_coeffs(self.valuation, self.coeffs[..keep].to_vec(), order)
    }

    /// Principal part together with the constant term: all terms with exponent <= 0.
    pub fn nonpositive_part(&self) -> Vec<(i64, Rational)> {
        self.terms()
            .take_while(|(e, _)| *e <= 0)
            .map(|(e, c)| (e, c.clone()))
            .collect()
    }

    /// Multiplies by `q^k`. Exact, so the order shifts too.
    pub fn shift(&self, k: i64) -> Self {
        LaurentSeries {
            valuation: self.valuation + k,
            order: self.order + k,
            coeffs: self.coeffs.clone(),
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(self.order);
        }
        LaurentSeries {
            valuation: self.valuation,
            order: self.order,
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let order = self.order.min(other.order);
        let start = self.valuation.min(other.valuation);
        if start > order {
            return Self::zero(order);
        }
        let coeffs = (start..=order)
            .map(|n| match (self.coeff_ref(n), other.coeff_ref(n)) {
                (Some(a), Some(b)) => a + b,
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => Rational::zero(),
            })
            .collect();
        Self::from_coeffs(start, coeffs, order)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        LaurentSeries {
            valuation: self.valuation,
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    /// Cauchy product (schoolbook convolution).
    ///
    /// The result is known through `min(N_f + v_g, N_g + v_f)`.
    pub fn mul(&self, other: &Self) -> Self {
        let order = (self.order as i128 + other.valuation as i128)
            .min(other.order as i128 + self.valuation as i128);
        let order = order.clamp(i64::MIN as i128 / 4, i64::MAX as i128 / 4) as i64;
        if self.is_zero() || other.is_zero() {
            return Self::zero(order);
        }
        let valuation = self.valuation + other.valuation;
        if valuation > order {
            return Self::zero(order);
        }
        let len = (order - valuation + 1) as usize;
        let coeffs = convolve(&self.coeffs, &other.coeffs, len);
        Self::from_coeffs(valuation, coeffs, order)
    }

    /// Integer power, `n >= 0`.
    pub fn pow(&self, mut n: u32) -> Self {
        let mut base = self.clone();
        let mut acc: Option<Self> = None;
        while n > 0 {
            if n & 1 == 1 {
                acc = Some(match acc {
                    None => base.clone(),
                    Some(a) => &a * &base,
                });
            }
            n >>= 1;
            if n > 0 {
                base = &base * &base;
            }
        }
        acc.unwrap_or_else(|| {
            // f^0 = 1, known as far as f is relative to its leading term.
            Self::one(self.order - self.valuation)
        })
    }

    /// Multiplicative inverse. For `f = c q^v (1 + ...)` known through `q^N`
    /// the inverse is known through `q^(N - 2v)`.
    pub fn inv(&self) -> Result<Self> {
        let Some(lead) = self.coeffs.first() else {
            return Err(Error::NonInvertible);
        };
        let len = self.coeffs.len();
        let mut w: Vec<Rational> = Vec::with_capacity(len);
        let unit_int = self.is_integral() && lead.abs().is_one();
        if unit_int {
            let u: Vec<BigInt> = self.coeffs.iter().map(|c| c.to_integer()).collect();
            let lead_sign = u[0].clone();
            let mut wi: Vec<BigInt> = Vec::with_capacity(len);
            wi.push(lead_sign.clone());
            for n in 1..len {
                let mut acc = BigInt::zero();
                for k in 1..=n {
                    acc += &u[k] * &wi[n - k];
                }
                wi.push(-(acc * &lead_sign));
            }
            w.extend(wi.into_iter().map(Rational::from_integer));
        } else {
            let inv_lead = lead.recip();
            w.push(inv_lead.clone());
            for n in 1..len {
                let mut acc = Rational::zero();
                for k in 1..=n {
                    acc += &self.coeffs[k] * &w[n - k];
                }
                w.push(-(acc * &inv_lead));
            }
        }
        let order = self.order - 2 * self.valuation;
        Ok(Self::from_coeffs(-self.valuation, w, order))
    }

    /// Formal exponential of a series with valuation at least 1.
    pub fn exp(&self) -> Result<Self> {
        if self.valuation < 1 && !self.is_zero() {
            return Err(Error::ExpDomain);
        }
        let order = self.order;
        if order < 0 {
            return Ok(Self::zero(order));
        }
        let n_max = order as usize;
        // k * f_k, indexed by k
        let df: Vec<Rational> = (0..=n_max)
            .map(|k| self.coeff_or_zero(k as i64) * Rational::from_integer(k.into()))
            .collect();
        let mut g: Vec<Rational> = Vec::with_capacity(n_max + 1);
        g.push(Rational::one());
        for n in 1..=n_max {
            let mut acc = Rational::zero();
            for k in 1..=n {
                if !df[k].is_zero() {
                    acc += &df[k] * &g[n - k];
                }
            }
            g.push(acc / Rational::from_integer(n.into()));
        }
        Ok(Self::from_coeffs(0, g, order))
    }

    /// Formal logarithm of a series `1 + O(q)`.
    pub fn log(&self) -> Result<Self> {
        if self.is_zero() || self.valuation != 0 || !self.coeffs[0].is_one() {
            return Err(Error::LogDomain);
        }
        let order = self.order;
        let n_max = order as usize;
        let f = &self.coeffs;
        // n L_n = n f_n - sum_{k=1}^{n-1} k L_k f_{n-k}
        let mut l: Vec<Rational> = vec![Rational::zero(); n_max + 1];
        for n in 1..=n_max {
            let nr = Rational::from_integer(n.into());
            let mut acc = &f[n] * &nr;
            for k in 1..n {
                if !l[k].is_zero() && !f[n - k].is_zero() {
                    acc -= &l[k] * Rational::from_integer(k.into()) * &f[n - k];
                }
            }
            l[n] = acc / nr;
        }
        Ok(Self::from_coeffs(0, l, order))
    }

    /// Substitutes `q -> q^m`.
    ///
    /// The first unknown coefficient moves to `q^(m(N+1))`, so the result
    /// is known through `q^(m(N+1) - 1)`.
    pub fn substitute_power(&self, m: u32) -> Result<Self> {
        if m == 0 {
            return Err(Error::ZeroPower);
        }
        let m = m as i64;
        let order = m * (self.order + 1) - 1;
        if self.is_zero() {
            return Ok(Self::zero(order));
        }
        let valuation = m * self.valuation;
        let mut coeffs = vec![Rational::zero(); (order - valuation + 1) as usize];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i * m as usize] = c.clone();
        }
        Ok(Self::from_coeffs(valuation, coeffs, order))
    }

    /// Formal derivative `q d/dq`, which keeps the order unchanged.
    pub fn theta(&self) -> Self {
        LaurentSeries {
            valuation: self.valuation,
            order: self.order,
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| c * Rational::from_integer((self.valuation + i as i64).into()))
                .collect(),
        }
        .renormalized()
    }

    fn renormalized(mut self) -> Self {
        self.normalize();
        self
    }

    /// Exact division of every coefficient by an integer, failing if any
    /// quotient is not an integer.
    pub fn div_exact_integer(&self, d: &BigInt) -> Result<Self> {
        let mut out = Vec::with_capacity(self.coeffs.len());
        for (i, c) in self.coeffs.iter().enumerate() {
            if !c.is_integer() {
                return Err(Error::Integrality {
                    exponent: self.valuation + i as i64,
                });
            }
            let (q, r) = c.to_integer().div_rem(d);
            if !r.is_zero() {
                return Err(Error::Integrality {
                    exponent: self.valuation + i as i64,
                });
            }
            out.push(Rational::from_integer(q));
        }
        Ok(Self::from_coeffs(self.valuation, out, self.order))
    }
}

/// Truncated convolution `c_i = sum_j a_j b_{i-j}` for `i < len`.
fn convolve(a: &[Rational], b: &[Rational], len: usize) -> Vec<Rational> {
    if a.iter().chain(b).all(|c| c.is_integer()) {
        let ai: Vec<BigInt> = a.iter().map(|c| c.to_integer()).collect();
        let bi: Vec<BigInt> = b.iter().map(|c| c.to_integer()).collect();
        return (0..len)
            .map(|i| {
                let lo = i.saturating_sub(bi.len().saturating_sub(1));
                let hi = i.min(ai.len().saturating_sub(1));
                let mut acc = BigInt::zero();
                for j in lo..=hi {
                    if !ai[j].is_zero() && !bi[i - j].is_zero() {
                        acc += &ai[j] * &bi[i - j];
                    }
                }
                Rational::from_integer(acc)
            })
            .collect();
    }
    (0..len)
        .map(|i| {
            let lo = i.saturating_sub(b.len().saturating_sub(1));
            let hi = i.min(a.len().saturating_sub(1));
            let mut acc = Rational::zero();
            for j in lo..=hi {
                if !a[j].is_zero() && !b[i - j].is_zero() {
                    acc += &a[j] * &b[i - j];
                }
            }
            acc
        })
        .collect()
}

/// Equality coefficient by coefficient through the smaller of the two orders.
impl PartialEq for LaurentSeries {
    fn eq(&self, other: &Self) -> bool {
        let order = self.order.min(other.order);
        let start = self.valuation.min(other.valuation);
        (start..=order).all(|n| self.coeff_or_zero(n) == other.coeff_or_zero(n))
    }
}

impl fmt::Display for LaurentSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (e, c) in self.terms() {
            let (neg, mag) = if c.is_negative() {
                (true, -c)
            } else {
                (false, c.clone())
            };
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let show_coeff = !mag.is_one() || e == 0;
            if show_coeff {
                write!(f, "{mag}")?;
            }
            match e {
                0 => {}
                1 => write!(f, "{}q", if show_coeff { "*" } else { "" })?,
                _ => write!(f, "{}q^{e}", if show_coeff { "*" } else { "" })?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O(q^{})", self.order.saturating_add(1))
    }
}

macro_rules! forward_binop {
    ($tr:ident, $m:ident) => {
        impl $tr<&LaurentSeries> for &LaurentSeries {
            type Output = LaurentSeries;
            fn $m(self, rhs: &LaurentSeries) -> LaurentSeries {
                LaurentSeries::$m(self, rhs)
            }
        }
        impl $tr<LaurentSeries> for LaurentSeries {
            type Output = LaurentSeries;
            fn $m(self, rhs: LaurentSeries) -> LaurentSeries {
                LaurentSeries::$m(&self, &rhs)
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);

impl Neg for &LaurentSeries {
    type Output = LaurentSeries;
    fn neg(self) -> LaurentSeries {
        LaurentSeries::neg(self)
    }
}

impl Neg for LaurentSeries {
    type Output = LaurentSeries;
    fn neg(self) -> LaurentSeries {
        LaurentSeries::neg(&self)
    }
}

/// Converts an exact integer-valued rational to `i64`, if it fits.
pub fn rational_to_i64(r: &Rational) -> Option<i64> {
    if r.is_integer() {
        r.to_integer().to_i64()
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(num: i64) -> Rational {
        Rational::from_integer(num.into())
    }

    fn frac(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    #[test]
    fn add_examples() {
        let a = LaurentSeries::monomial(-1, q(1), 10);
        assert_eq!(&a + &a, LaurentSeries::monomial(-1, q(2), 10));
        let f = LaurentSeries::from_ints(-1, &[1, 0, 5, 7], 4);
        assert_eq!(&f + &LaurentSeries::zero(10), f);
        assert_eq!((&f + &LaurentSeries::zero(10)).order(), 4);
        let s = LaurentSeries::from_ints(0, &[1, 1], 8) + LaurentSeries::from_ints(0, &[1, -1], 8);
        assert_eq!(s, LaurentSeries::from_ints(0, &[2], 8));
        assert_eq!(s.valuation(), 0);
    }

    #[test]
    fn add_takes_min_order() {
        let a = LaurentSeries::from_ints(0, &[1, 2, 3], 5);
        let b = LaurentSeries::from_ints(0, &[1], 2);
        assert_eq!((&a + &b).order(), 2);
    }

    #[test]
    fn cancellation_to_zero() {
        let a = LaurentSeries::from_ints(-2, &[1, 3], 4);
        let z = &a - &a;
        assert!(z.is_zero());
        assert_eq!(z.order(), 4);
        assert_eq!(z.valuation(), 5);
    }

    #[test]
    fn mul_examples() {
        let a = LaurentSeries::monomial(-1, q(1), 10);
        let b = LaurentSeries::monomial(1, q(1), 10);
        let p = &a * &b;
        assert_eq!(p, LaurentSeries::one(9));
        assert_eq!(p.order(), 9);
        let p =
            LaurentSeries::from_ints(0, &[1, 1], 10) * LaurentSeries::from_ints(0, &[1, -1], 10);
        assert_eq!(p, LaurentSeries::from_ints(0, &[1, 0, -1], 10));
        assert_eq!(p.order(), 10);
    }

    #[test]
    fn mul_order_accounts_for_valuations() {
        // q^-2 (known to q^3) times q^5 (known to q^6): min(3 + 5, 6 - 2) = 4
        let a = LaurentSeries::monomial(-2, q(1), 3);
        let b = LaurentSeries::monomial(5, q(1), 6);
        assert_eq!((&a * &b).order(), 4);
    }

    #[test]
    fn mul_by_zero_keeps_sound_order() {
        let a = LaurentSeries::from_ints(-1, &[1, 0, 2], 6);
        let z = LaurentSeries::zero(4);
        let p = &a * &z;
        assert!(p.is_zero());
        assert_eq!(p.order(), 3);
    }

    #[test]
    fn inv_examples() {
        let g = LaurentSeries::from_ints(0, &[1, -1], 10).inv().unwrap();
        assert_eq!(g, LaurentSeries::from_ints(0, &[1; 11], 10));
        assert_eq!(g.order(), 10);
        let g = LaurentSeries::monomial(-1, q(1), 10).inv().unwrap();
        assert_eq!(g, LaurentSeries::monomial(1, q(1), 12));
        assert_eq!(g.order(), 12);
    }

    #[test]
    fn inv_rational_leading() {
        let f = LaurentSeries::from_coeffs(0, vec![q(2), q(1)], 6);
        let g = f.inv().unwrap();
        assert_eq!(g.coefficient(0).unwrap(), frac(1, 2));
        assert_eq!(g.coefficient(1).unwrap(), frac(-1, 4));
        assert_eq!(&f * &g, LaurentSeries::one(6));
    }

    #[test]
    fn inv_of_zero_fails() {
        assert_eq!(
            LaurentSeries::zero(5).inv().unwrap_err(),
            Error::NonInvertible
        );
        let z = LaurentSeries::from_ints(0, &[0, 0, 0], 2);
        assert_eq!(z.inv().unwrap_err().to_string(), "non-invertible series");
    }

    #[test]
    fn exp_examples() {
        assert_eq!(LaurentSeries::zero(8).exp().unwrap(), LaurentSeries::one(8));
        let e = LaurentSeries::monomial(1, q(1), 4).exp().unwrap();
        let want =
            LaurentSeries::from_coeffs(0, vec![q(1), q(1), frac(1, 2), frac(1, 6), frac(1, 24)], 4);
        assert_eq!(e, want);
        let log1p = LaurentSeries::from_ints(0, &[1, 1], 12).log().unwrap();
        assert_eq!(
            log1p.exp().unwrap(),
            LaurentSeries::from_ints(0, &[1, 1], 12)
        );
    }

    #[test]
    fn exp_rejects_constant_or_poles() {
        assert_eq!(LaurentSeries::one(5).exp().unwrap_err(), Error::ExpDomain);
        let pole = LaurentSeries::monomial(-1, q(1), 5);
        assert_eq!(
            pole.exp().unwrap_err().to_string(),
            "exp of non-positive-valuation series"
        );
    }

    #[test]
    fn log_examples() {
        assert!(LaurentSeries::one(7).log().unwrap().is_zero());
        let l = LaurentSeries::from_ints(0, &[1, -1], 5).log().unwrap();
        let want = LaurentSeries::from_coeffs(
            0,
            vec![
                q(0),
                q(-1),
                frac(-1, 2),
                frac(-1, 3),
                frac(-1, 4),
                frac(-1, 5),
            ],
            5,
        );
        assert_eq!(l, want);
        let g = LaurentSeries::from_ints(1, &[1, 1], 9);
        assert_eq!(g.exp().unwrap().log().unwrap(), g);
    }

    #[test]
    fn log_rejects_bad_constant() {
        assert_eq!(
            LaurentSeries::from_ints(0, &[2, 1], 5).log().unwrap_err(),
            Error::LogDomain
        );
        assert_eq!(
            LaurentSeries::from_ints(1, &[1], 5).log().unwrap_err(),
            Error::LogDomain
        );
    }

    #[test]
    fn substitute_power_examples() {
        let f = LaurentSeries::from_ints(-1, &[1, 0, 1], 5);
        let g = f.substitute_power(2).unwrap();
        assert_eq!(g, LaurentSeries::from_terms(&[(-2, q(1)), (2, q(1))], 11));
        assert_eq!(g.order(), 11);
        assert_eq!(f.substitute_power(1).unwrap(), f);
        let h = LaurentSeries::from_ints(0, &[1, 1, 1], 2)
            .substitute_power(3)
            .unwrap();
        assert_eq!(
            h,
            LaurentSeries::from_terms(&[(0, q(1)), (3, q(1)), (6, q(1))], 8)
        );
        assert_eq!(h.order(), 8);
        assert_eq!(f.substitute_power(0).unwrap_err(), Error::ZeroPower);
    }

    #[test]
    fn coefficient_window() {
        let f = LaurentSeries::from_ints(-1, &[1, 0, 3], 1);
        assert_eq!(f.coefficient(-5).unwrap(), q(0));
        assert_eq!(f.coefficient(1).unwrap(), q(3));
        assert_eq!(
            f.coefficient(2).unwrap_err(),
            Error::BeyondTruncation {
                exponent: 2,
                order: 1
            }
        );
        assert!(f
            .coefficient(2)
            .unwrap_err()
            .to_string()
            .starts_with("coefficient beyond truncation"));
    }

    #[test]
    fn display_is_readable() {
        let f = LaurentSeries::from_ints(-1, &[1, 0, -3, 2], 2);
        assert_eq!(f.to_string(), "q^-1 - 3*q + 2*q^2 + O(q^3)");
    }

    #[test]
    fn pow_matches_repeated_mul() {
        let f = LaurentSeries::from_ints(-1, &[1, 0, 2, -1], 6);
        assert_eq!(f.pow(3), &(&f * &f) * &f);
        assert_eq!(f.pow(3).order(), (&(&f * &f) * &f).order());
    }

    #[test]
    fn div_exact_integer_detects_remainder() {
        let f = LaurentSeries::from_ints(0, &[1728, 3456], 3);
        let g = f.div_exact_integer(&BigInt::from(1728)).unwrap();
        assert_eq!(g, LaurentSeries::from_ints(0, &[1, 2], 3));
        let bad = LaurentSeries::from_ints(0, &[1728, 5], 3);
        assert_eq!(
            bad.div_exact_integer(&BigInt::from(1728)).unwrap_err(),
            Error::Integrality { exponent: 1 }
        );
    }
}
