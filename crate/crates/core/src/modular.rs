//! q-expansions of `E4`, `E6`, `Delta`, `j` and the Moonshine function `J`.
//!
//! `Delta` is built from the Eisenstein series and can be checked against the
//! independent product `q * prod (1 - q^n)^24` via [`delta_product`].

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::series::LaurentSeries;
use crate::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FormName {
    E4,
    E6,
    Delta,
    /// The modular invariant `j = E4^3 / Delta`.
    #[serde(rename = "j")]
    SmallJ,
    /// `J = j - 744`.
    #[serde(rename = "J")]
    MoonshineJ,
}

impl FormName {
    pub fn weight(self) -> i64 {
        match self {
            FormName::E4 => 4,
            FormName::E6 => 6,
            FormName::Delta => 12,
            FormName::SmallJ | FormName::MoonshineJ => 0,
        }
    }
}

impl fmt::Display for FormName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            FormName::E4 => "E4",
            FormName::E6 => "E6",
            FormName::Delta => "Delta",
            FormName::SmallJ => "j",
            FormName::MoonshineJ => "J",
        };
        f.write_str(s)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct NamedForm {
    pub name: FormName,
    pub weight: i64,
    pub expansion: LaurentSeries,
}

impl NamedForm {
    pub fn compute(name: FormName, order: i64) -> Result<Self> {
        let expansion = match name {
            FormName::E4 => eisenstein(4, order)?,
            FormName::E6 => eisenstein(6, order)?,
            FormName::Delta => delta(order)?,
            FormName::SmallJ => j_invariant(order)?,
            FormName::MoonshineJ => moonshine_j(order)?,
        };
        Ok(NamedForm {
            name,
            weight: name.weight(),
            expansion,
        })
    }
}

/// `sigma_m(n) = sum_{d | n} d^m` by trial division up to `sqrt(n)`.
pub fn divisor_sigma(m: u32, n: u64) -> BigInt {
    assert!(n > 0, "sigma is defined for n >= 1");
    let mut total = BigInt::zero();
    let mut d = 1u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            total += BigInt::from(d).pow(m);
            let e = n / d;
            if e != d {
                total += BigInt::from(e).pow(m);
            }
        }
        d += 1;
    }
    total
}

/// Normalized Eisenstein series with constant term 1, for `k` in {4, 6}.
pub fn eisenstein(k: i64, order: i64) -> Result<LaurentSeries> {
    let (scale, power) = match k {
        4 => (BigInt::from(240), 3),
        6 => (BigInt::from(-504), 5),
        _ => return Err(Error::UnsupportedWeight(k)),
    };
    if order < 0 {
        return Err(Error::InvalidArgument(format!(
            "Eisenstein order must be >= 0, got {order}"
        )));
    }
    let mut coeffs = Vec::with_capacity(order as usize + 1);
    coeffs.push(Rational::one());
    for n in 1..=order as u64 {
        coeffs.push(Rational::from_integer(&scale * divisor_sigma(power, n)));
    }
    Ok(LaurentSeries::from_coeffs(0, coeffs, order))
}

/// `Delta = (E4^3 - E6^2) / 1728`, every coefficient divided exactly.
pub fn delta(order: i64) -> Result<LaurentSeries> {
    if order < 1 {
        return Err(Error::InvalidArgument(format!(
            "Delta order must be >= 1, got {order}"
        )));
    }
    let e4 = eisenstein(4, order)?;
    let e6 = eisenstein(6, order)?;
    let diff = &e4.pow(3) - &e6.pow(2);
    diff.div_exact_integer(&BigInt::from(1728))
}

/// `q * prod_{n >= 1} (1 - q^n)^24`, built without any Eisenstein input.
pub fn delta_product(order: i64) -> Result<LaurentSeries> {
    if order < 1 {
        return Err(Error::InvalidArgument(format!(
            "Delta order must be >= 1, got {order}"
        )));
    }
    // prod (1 - q^n) to q^(order-1)
    let len = order as usize;
    let mut eta: Vec<BigInt> = vec![BigInt::zero(); len];
    eta[0] = BigInt::one();
    for n in 1..len {
        for i in (n..len).rev() {
            let t = eta[i - n].clone();
            eta[i] -= t;
        }
    }
    let eta = LaurentSeries::from_coeffs(
        0,
        eta.into_iter().map(Rational::from_integer).collect(),
        order - 1,
    );
    Ok(eta.pow(24).shift(1))
}

/// `j = E4^3 / Delta`, integral with valuation -1. Requires `order >= -1`.
pub fn j_invariant(order: i64) -> Result<LaurentSeries> {
    if order < -1 {
        return Err(Error::InvalidArgument(format!(
            "j order must be >= -1, got {order}"
        )));
    }
    let e4_cubed = eisenstein(4, order + 1)?.pow(3);
    let d = delta(order + 2)?;
    let j = &e4_cubed * &d.inv()?;
    debug_assert_eq!(j.order(), order);
    if let Some((e, _)) = j.terms().find(|(_, c)| !c.is_integer()) {
        return Err(Error::Integrality { exponent: e });
    }
    Ok(j)
}

/// The Moonshine function `J = j - 744 = q^-1 + 196884 q + ...`.
pub fn moonshine_j(order: i64) -> Result<LaurentSeries> {
    let j = j_invariant(order)?;
    if order < 0 {
        return Ok(j);
    }
    Ok(&j - &LaurentSeries::monomial(0, Rational::from_integer(744.into()), order))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn int(n: i64) -> Rational {
        Rational::from_integer(n.into())
    }

    // sigma by literal definition over all d <= n
    fn sigma_naive(m: u32, n: u64) -> BigInt {
        (1..=n)
            .filter(|d| n.is_multiple_of(*d))
            .map(|d| BigInt::from(d).pow(m))
            .sum()
    }

    #[test]
    fn sigma_matches_naive() {
        for n in 1..200 {
            assert_eq!(divisor_sigma(3, n), sigma_naive(3, n));
            assert_eq!(divisor_sigma(5, n), sigma_naive(5, n));
        }
        assert_eq!(divisor_sigma(5, 2), BigInt::from(33));
    }

    #[test]
    fn eisenstein_examples() {
        let e4 = eisenstein(4, 5).unwrap();
        assert_eq!(e4.coefficient(0).unwrap(), int(1));
        assert_eq!(e4.coefficient(1).unwrap(), int(240));
        let e6 = eisenstein(6, 5).unwrap();
        assert_eq!(e6.coefficient(2).unwrap(), int(-16632));
        assert_eq!(eisenstein(8, 5).unwrap_err(), Error::UnsupportedWeight(8));
    }

    #[test]
    fn delta_examples() {
        let d = delta(10).unwrap();
        assert_eq!(d.valuation(), 1);
        assert_eq!(d.coefficient(1).unwrap(), int(1));
        assert_eq!(d.coefficient(2).unwrap(), int(-24));
        assert_eq!(d.coefficient(3).unwrap(), int(252));
        assert_eq!(d.order(), 10);
    }

    #[test]
    fn delta_two_constructions_agree() {
        let a = delta(50).unwrap();
        let b = delta_product(50).unwrap();
        assert_eq!(a.order(), 50);
        assert_eq!(b.order(), 50);
        assert_eq!(a, b);
    }

    #[test]
    fn delta_product_low_terms_by_hand() {
        // (1-q)^24 (1-q^2)^24 ... : q^2 coefficient of q*prod is -24,
        // q^3 coefficient is C(24,2) - 24 = 252.
        let d = delta_product(3).unwrap();
        assert_eq!(d.coefficient(2).unwrap(), int(-24));
        assert_eq!(d.coefficient(3).unwrap(), int(252));
    }

    #[test]
    fn j_examples() {
        let j = j_invariant(3).unwrap();
        assert_eq!(j.valuation(), -1);
        assert_eq!(j.coefficient(-1).unwrap(), int(1));
        assert_eq!(j.coefficient(0).unwrap(), int(744));
        assert_eq!(j.coefficient(1).unwrap(), int(196884));
        assert_eq!(j.coefficient(2).unwrap(), int(21493760));
        assert_eq!(j.coefficient(3).unwrap(), int(864299970));
        assert_eq!(j.order(), 3);
    }

    #[test]
    fn j_matches_long_division_by_delta() {
        // independent route: 1/Delta by long division against the product form
        let n = 12;
        let d = delta_product(n + 2).unwrap();
        let dc: Vec<BigInt> = (1..=n + 2)
            .map(|e| d.coefficient(e).unwrap().to_integer())
            .collect();
        let mut inv = vec![BigInt::one()];
        for i in 1..dc.len() {
            let mut acc = BigInt::zero();
            for k in 1..=i {
                acc += &dc[k] * &inv[i - k];
            }
            inv.push(-acc);
        }
        // E4^3 by direct triple convolution of the divisor-sum coefficients
        let e4: Vec<BigInt> = (0..=n + 1)
            .map(|k| {
                if k == 0 {
                    BigInt::one()
                } else {
                    BigInt::from(240) * sigma_naive(3, k as u64)
                }
            })
            .collect();
        let mut sq = vec![BigInt::zero(); e4.len()];
        for a in 0..e4.len() {
            for b in 0..e4.len() - a {
                sq[a + b] += &e4[a] * &e4[b];
            }
        }
        let mut cube = vec![BigInt::zero(); e4.len()];
        for a in 0..e4.len() {
            for b in 0..e4.len() - a {
                cube[a + b] += &sq[a] * &e4[b];
            }
        }
        let j = j_invariant(n).unwrap();
        for m in -1..=n {
            let idx = (m + 1) as usize;
            let want: BigInt = (0..=idx).map(|a| &cube[a] * &inv[idx - a]).sum();
            assert_eq!(
                j.coefficient(m).unwrap(),
                Rational::from_integer(want),
                "q^{m}"
            );
        }
    }

    #[test]
    fn moonshine_j_examples() {
        let big_j = moonshine_j(2).unwrap();
        assert_eq!(big_j.coefficient(-1).unwrap(), int(1));
        assert_eq!(big_j.coefficient(0).unwrap(), int(0));
        assert_eq!(big_j.coefficient(1).unwrap(), int(196884));
        assert_eq!(big_j.coefficient(2).unwrap(), int(21493760));
    }

    #[test]
    fn j_square_constant_term() {
        let big_j = moonshine_j(4).unwrap();
        let sq = &big_j * &big_j;
        assert_eq!(sq.coefficient(0).unwrap(), int(2 * 196884));
    }

    #[test]
    fn integrality_and_weights() {
        assert!(j_invariant(60).unwrap().is_integral());
        assert_eq!(FormName::E4.weight() * 3, 12);
        assert_eq!(FormName::E6.weight() * 2, 12);
        assert_eq!(FormName::Delta.weight(), 12);
        assert_eq!(FormName::SmallJ.weight(), 0);
        let f = NamedForm::compute(FormName::MoonshineJ, 3).unwrap();
        assert_eq!(f.weight, 0);
        assert_eq!(f.expansion.coefficient(0).unwrap(), int(0));
    }
}
