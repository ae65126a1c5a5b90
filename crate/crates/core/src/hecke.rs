//! Weight-zero Hecke operators on q-expansions at the cusp.
//!
//! `T_k f = (1/k) sum_{ad = k, 0 <= b < d} psi^a(f)((a tau + b) / d)`.
//! Summing over `b` keeps exactly the coefficients `c_n` with `d | n` and
//! multiplies them by `d`, which gives the closed form
//!
//! `[q^M] k T_k f = sum_{a | gcd(k, M)} (k / a) c_{k M / a^2}`
//!
//! with `gcd(k, 0) = k`. The scaled operator `k T_k` has integer
//! coefficients whenever `f` does.

use num_integer::Integer;
use num_traits::Zero;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::series::LaurentSeries;
use crate::Rational;

/// Adams operation `psi^a` applied to the coefficients of `f`.
///
/// Rational coefficients are fixed by every `psi^a`, so this returns `f`.
/// Coefficients in a representation ring would need a real action here.
pub fn adams_on_series(f: &LaurentSeries, a: u64) -> LaurentSeries {
    assert!(a >= 1, "Adams operations are indexed by a >= 1");
    f.clone()
}

pub fn divisors(k: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= k {
        if k.is_multiple_of(d) {
            small.push(d);
            if d != k / d {
                large.push(k / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

/// Highest exponent of `k T_k f` determined by `f`.
pub fn scaled_output_order(input_order: i64, k: u64) -> i64 {
    Integer::div_floor(&input_order, &(k as i64))
}

/// `k T_k f` to the highest order `f` determines, `floor(N / k)`.
pub fn hecke_scaled(f: &LaurentSeries, k: u64) -> Result<LaurentSeries> {
    if k == 0 {
        return Err(Error::InvalidArgument("Hecke index must be >= 1".into()));
    }
    let order = scaled_output_order(f.order(), k);
    hecke_scaled_to(f, k, order)
}

/// `k T_k f` through `q^order`; fails if `f` is not known through `q^(k * order)`.
pub fn hecke_scaled_to(f: &LaurentSeries, k: u64, order: i64) -> Result<LaurentSeries> {
    if k == 0 {
        return Err(Error::InvalidArgument("Hecke index must be >= 1".into()));
    }
    let ki = k as i64;
    let needed = ki * order;
    if f.order() < needed {
        return Err(Error::HeckePrecision {
            k,
            needed,
            available: f.order(),
        });
    }
    let divs = divisors(k);
    if f.is_zero() {
        return Ok(LaurentSeries::zero(order));
    }
    // Lowest exponent that can receive a contribution: a * ceil(v / d).
    let v = f.valuation();
    let start = divs
        .iter()
        .map(|&a| a as i64 * Integer::div_ceil(&v, &(ki / a as i64)))
        .min()
        .expect("k has at least one divisor");
    if start > order {
        return Ok(LaurentSeries::zero(order));
    }
    let images: Vec<(i64, LaurentSeries)> = divs
        .iter()
        .map(|&a| (a as i64, adams_on_series(f, a)))
        .collect();
    let coeffs = (start..=order)
        .map(|m| {
            let mut acc = Rational::zero();
            for (a, fa) in &images {
                if m % a != 0 {
                    continue;
                }
                let idx = ki * m / (a * a);
                if let Some(c) = fa.coeff_ref(idx) {
                    acc += c * Rational::from_integer((ki / a).into());
                }
            }
            acc
        })
        .collect();
    Ok(LaurentSeries::from_coeffs(start, coeffs, order))
}

/// `T_k f` itself, carrying the `1/k` normalization.
pub fn hecke(f: &LaurentSeries, k: u64) -> Result<LaurentSeries> {
    let scaled = hecke_scaled(f, k)?;
    Ok(scaled.scale(&Rational::new(1.into(), (k as i64).into())))
}

#[derive(Clone, Debug, Serialize)]
pub struct HeckeImage {
    pub k: u64,
    pub source: LaurentSeries,
    /// `k T_k source`.
    pub scaled_image: LaurentSeries,
}

impl HeckeImage {
    pub fn new(source: LaurentSeries, k: u64, order: i64) -> Result<Self> {
        let scaled_image = hecke_scaled_to(&source, k, order)?;
        Ok(HeckeImage {
            k,
            source,
            scaled_image,
        })
    }
}
