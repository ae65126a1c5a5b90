//! Truncated power series in an outer variable `t` whose coefficients are
//! Laurent series in an inner variable `q`.

use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::LaurentSeries;
use crate::error::{Error, Result};
use crate::Rational;

#[derive(Clone, Debug)]
pub struct BiSeries {
    /// Coefficients of `t^0 ..= t^t_order`.
    coeffs: Vec<LaurentSeries>,
}

impl BiSeries {
    /// Builds a series from its `t^0 ..= t^T` coefficients. Needs at least one.
    pub fn new(coeffs: Vec<LaurentSeries>) -> Self {
        assert!(!coeffs.is_empty(), "a BiSeries needs a t^0 coefficient");
        BiSeries { coeffs }
    }

    /// The unit series, every coefficient known through `q^inner_order`.
    pub fn one(t_order: usize, inner_order: i64) -> Self {
        let mut coeffs = vec![LaurentSeries::one(inner_order)];
        coeffs.extend((0..t_order).map(|_| LaurentSeries::zero(inner_order)));
        BiSeries { coeffs }
    }

    /// Embeds a single `q`-series as the `t^0` coefficient.
    pub fn constant(c: LaurentSeries, t_order: usize) -> Self {
        let pad = c.order();
        let mut coeffs = vec![c];
        coeffs.extend((0..t_order).map(|_| LaurentSeries::zero(pad)));
        BiSeries { coeffs }
    }

    pub fn t_order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, m: usize) -> Option<&LaurentSeries> {
        self.coeffs.get(m)
    }

    pub fn coeffs(&self) -> &[LaurentSeries] {
        &self.coeffs
    }

    /// Smallest inner truncation order over all `t` coefficients.
    pub fn inner_floor(&self) -> i64 {
        self.coeffs
            .iter()
            .map(LaurentSeries::order)
            .min()
            .unwrap_or(0)
    }

    /// Coefficient of `t^m q^n`.
    pub fn coefficient(&self, m: usize, n: i64) -> Result<Rational> {
        let c = self
            .coeffs
            .get(m)
            .ok_or_else(|| Error::Precision(format!("t^{m} beyond t-order {}", self.t_order())))?;
        c.coefficient(n)
    }

    pub fn truncate_t(&self, t_order: usize) -> Self {
        BiSeries {
            coeffs: self.coeffs.iter().take(t_order + 1).cloned().collect(),
        }
    }

    /// An inner order large enough that an exactly known series (a unit or a
    /// zero pad) never limits the precision of a product with any coefficient.
    fn exact_pad_order(&self) -> i64 {
        let max_order = self
            .coeffs
            .iter()
            .map(LaurentSeries::order)
            .max()
            .unwrap_or(0);
        let max_pole = self
            .coeffs
            .iter()
            .map(|c| (-c.valuation()).max(0))
            .max()
            .unwrap_or(0);
        max_order.max(0) + max_pole
    }

    pub fn add(&self, other: &Self) -> Self {
        BiSeries {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        BiSeries {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn neg(&self) -> Self {
        BiSeries {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let t_order = self.t_order().min(other.t_order());
        let coeffs = (0..=t_order)
            .map(|m| {
                (0..=m)
                    .map(|k| &self.coeffs[k] * &other.coeffs[m - k])
                    .reduce(|a, b| a + b)
                    .expect("m + 1 >= 1 terms")
            })
            .collect();
        BiSeries { coeffs }
    }

    /// Multiplies every `t` coefficient by the same `q`-series.
    pub fn mul_inner(&self, s: &LaurentSeries) -> Self {
        BiSeries {
            coeffs: self.coeffs.iter().map(|c| c * s).collect(),
        }
    }

    /// Multiplies by `q^k` in the inner variable.
    pub fn shift_inner(&self, k: i64) -> Self {
        BiSeries {
            coeffs: self.coeffs.iter().map(|c| c.shift(k)).collect(),
        }
    }

    /// Multiplies by `t^k`; the t-order grows by `k`.
    pub fn shift_t(&self, k: usize) -> Self {
        let pad = self.exact_pad_order();
        let mut coeffs: Vec<LaurentSeries> = (0..k).map(|_| LaurentSeries::zero(pad)).collect();
        coeffs.extend(self.coeffs.iter().cloned());
        BiSeries { coeffs }
    }

    /// Substitutes `t -> -t`.
    pub fn negate_t(&self) -> Self {
        BiSeries {
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .map(|(m, c)| if m % 2 == 1 { -c } else { c.clone() })
                .collect(),
        }
    }

    pub fn scale(&self, r: &Rational) -> Self {
        BiSeries {
            coeffs: self.coeffs.iter().map(|c| c.scale(r)).collect(),
        }
    }

    pub fn inv(&self) -> Result<Self> {
        let w0 = self.coeffs[0].inv()?;
        let mut w = vec![w0.clone()];
        for m in 1..=self.t_order() {
            let acc = (1..=m)
                .map(|k| &self.coeffs[k] * &w[m - k])
                .reduce(|a, b| a + b)
                .expect("m >= 1");
            w.push(-(&w0 * &acc));
        }
        Ok(BiSeries { coeffs: w })
    }

    /// Exponential of a series with zero `t^0` coefficient.
    pub fn exp(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::ExpDomain);
        }
        let mut e = vec![LaurentSeries::one(self.exact_pad_order())];
        for m in 1..=self.t_order() {
            let acc = (1..=m)
                .map(|k| (&self.coeffs[k] * &e[m - k]).scale(&Rational::from_integer(k.into())))
                .reduce(|a, b| a + b)
                .expect("m >= 1");
            e.push(acc.scale(&Rational::new(1.into(), m.into())));
        }
        Ok(BiSeries { coeffs: e })
    }

    /// Logarithm of a series whose `t^0` coefficient is exactly 1.
    pub fn log(&self) -> Result<Self> {
        let c0 = &self.coeffs[0];
        if c0.valuation() != 0
            || !c0.coeffs().first().is_some_and(One::is_one)
            || c0.coeffs()[1..].iter().any(|c| !c.is_zero())
        {
            return Err(Error::LogDomain);
        }
        let mut l = vec![LaurentSeries::zero(self.exact_pad_order())];
        for m in 1..=self.t_order() {
            let mut acc = self.coeffs[m].clone();
            if m > 1 {
                let corr = (1..m)
                    .map(|k| &l[k] * &self.coeffs[m - k].scale(&Rational::from_integer(k.into())))
                    .reduce(|a, b| a + b)
                    .expect("m >= 2")
                    .scale(&Rational::new(1.into(), m.into()));
                acc = &acc - &corr;
            }
            l.push(acc);
        }
        Ok(BiSeries { coeffs: l })
    }
}

/// Coefficientwise equality through the common `t`-order, each `q`-series
/// compared through its own common truncation order.
impl PartialEq for BiSeries {
    fn eq(&self, other: &Self) -> bool {
        self.coeffs.iter().zip(&other.coeffs).all(|(a, b)| a == b)
    }
}

impl Add for &BiSeries {
    type Output = BiSeries;
    fn add(self, rhs: &BiSeries) -> BiSeries {
        BiSeries::add(self, rhs)
    }
}

impl Sub for &BiSeries {
    type Output = BiSeries;
    fn sub(self, rhs: &BiSeries) -> BiSeries {
        BiSeries::sub(self, rhs)
    }
}

impl Mul for &BiSeries {
    type Output = BiSeries;
    fn mul(self, rhs: &BiSeries) -> BiSeries {
        BiSeries::mul(self, rhs)
    }
}

impl Neg for &BiSeries {
    type Output = BiSeries;
    fn neg(self) -> BiSeries {
        BiSeries::neg(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64) -> Rational {
        Rational::from_integer(n.into())
    }

    // 1 - t/q, the exterior power of a single line with eigenvalue 1/q.
    fn one_minus_t_over_q(t_order: usize, q_order: i64) -> BiSeries {
        let mut c = vec![
            LaurentSeries::one(q_order),
            LaurentSeries::monomial(-1, r(-1), q_order),
        ];
        c.extend((2..=t_order).map(|_| LaurentSeries::zero(q_order)));
        BiSeries::new(c)
    }

    #[test]
    fn inverse_is_geometric() {
        let b = one_minus_t_over_q(6, 10);
        let w = b.inv().unwrap();
        for m in 0..=6 {
            assert_eq!(
                w.coeff(m).unwrap(),
                &LaurentSeries::monomial(-(m as i64), r(1), 10)
            );
        }
        let prod = &b * &w;
        assert_eq!(prod, BiSeries::one(6, 10));
    }

    #[test]
    fn log_exp_round_trip() {
        let b = one_minus_t_over_q(8, 12);
        let l = b.log().unwrap();
        // log(1 - t/q) = -sum q^-m t^m / m
        for m in 1..=8usize {
            let want = LaurentSeries::monomial(
                -(m as i64),
                Rational::new((-1).into(), (m as i64).into()),
                12,
            );
            assert_eq!(l.coeff(m).unwrap(), &want);
            // each product with the q^-1 row costs one order
            assert_eq!(l.coeff(m).unwrap().order(), 13 - m as i64);
        }
        assert_eq!(l.exp().unwrap(), b);
    }

    #[test]
    fn exp_requires_zero_constant() {
        assert_eq!(BiSeries::one(3, 5).exp().unwrap_err(), Error::ExpDomain);
        assert_eq!(
            BiSeries::one(3, 5).scale(&r(2)).log().unwrap_err(),
            Error::LogDomain
        );
    }

    #[test]
    fn shift_t_pads_with_exact_zeros() {
        let b = one_minus_t_over_q(3, 7);
        let s = b.shift_t(2);
        assert_eq!(s.t_order(), 5);
        assert!(s.coeff(0).unwrap().is_zero());
        assert!(s.coeff(0).unwrap().order() >= 7);
        assert_eq!(s.coeff(3).unwrap(), b.coeff(1).unwrap());
    }

    #[test]
    fn negate_t_flips_odd_rows() {
        let b = one_minus_t_over_q(3, 4).negate_t();
        assert_eq!(b.coefficient(1, -1).unwrap(), r(1));
        assert_eq!(b.coefficient(0, 0).unwrap(), r(1));
        assert!(b.coefficient(4, 0).is_err());
    }
}
