//! Faber polynomials of a normalized Laurent series `f = q^-1 + c_0 + c_1 q + ...`.
//!
//! `P_{n,f}` is the unique monic degree-`n` polynomial with
//! `q^-n - P_{n,f}(f(q))` vanishing in every exponent `<= 0`. It is found by
//! elimination on the principal parts of `f^0, ..., f^n`, which form a
//! unitriangular system.

use std::fmt;

use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::series::{BiSeries, LaurentSeries};
use crate::Rational;

/// Dense polynomial in one variable with exact rational coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DensePolynomial {
    /// Coefficients of `X^0, X^1, ...`, without trailing zeros.
    coeffs: Vec<Rational>,
}

impl DensePolynomial {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        DensePolynomial { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(
            coeffs
                .iter()
                .map(|&c| Rational::from_integer(c.into()))
                .collect(),
        )
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coefficient(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(One::is_one)
    }

    /// Horner evaluation at a series. `one_order` is the order of the unit
    /// used for the constant term.
    pub fn eval_series(&self, x: &LaurentSeries) -> LaurentSeries {
        let one_order = x.order() - x.valuation().min(x.order());
        let mut acc = LaurentSeries::zero(one_order.max(x.order()));
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * x) + &LaurentSeries::monomial(0, c.clone(), one_order.max(x.order()));
        }
        acc
    }
}

impl fmt::Display for DensePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if c.is_negative() { '-' } else { '+' })?;
            }
            first = false;
            let show = !mag.is_one() || i == 0;
            if show {
                write!(f, "{mag}")?;
            }
            match i {
                0 => {}
                1 => write!(f, "{}X", if show { "*" } else { "" })?,
                _ => write!(f, "{}X^{i}", if show { "*" } else { "" })?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FaberPolynomial {
    pub n: usize,
    pub poly: DensePolynomial,
}

impl Serialize for FaberPolynomial {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("FaberPolynomial", 3)?;
        st.serialize_field("n", &self.n)?;
        let coeffs: Vec<[String; 2]> = self
            .poly
            .coeffs()
            .iter()
            .map(|c| [c.numer().to_string(), c.denom().to_string()])
            .collect();
        st.serialize_field("coeffs", &coeffs)?;
        st.serialize_field("display", &self.poly.to_string())?;
        st.end()
    }
}

fn check_normalized(f: &LaurentSeries) -> Result<()> {
    if f.valuation() != -1 {
        return Err(Error::NotNormalized(format!(
            "valuation must be -1, got {}",
            f.valuation()
        )));
    }
    if !f.leading_coefficient().is_some_and(One::is_one) {
        return Err(Error::NotNormalized("leading coefficient must be 1".into()));
    }
    Ok(())
}

/// `P_{n,f}` by elimination against the principal parts of `f^m`, `m <= n`.
pub fn faber_poly(f: &LaurentSeries, n: usize) -> Result<FaberPolynomial> {
    check_normalized(f)?;
    if n == 0 {
        return Err(Error::InvalidArgument("Faber index must be >= 1".into()));
    }
    let needed = n as i64 - 1;
    if f.order() < needed {
        return Err(Error::Precision(format!(
            "P_{n} needs f through q^{needed}, have q^{}",
            f.order()
        )));
    }
    // f^m through q^0 needs f through q^(m-1); truncating to q^(n-1) suffices for all m <= n.
    let base = f.truncate(needed);
    let mut powers = Vec::with_capacity(n + 1);
    powers.push(LaurentSeries::one(n as i64));
    for m in 1..=n {
        let next = &powers[m - 1] * &base;
        debug_assert!(next.order() >= 0);
        powers.push(next);
    }
    // b_m chosen top-down so the q^-m coefficient of sum b_i f^i matches q^-n.
    let mut b = vec![Rational::zero(); n + 1];
    b[n] = Rational::one();
    for m in (0..n).rev() {
        let e = -(m as i64);
        let mut acc = Rational::zero();
        for (i, bi) in b.iter().enumerate().skip(m + 1) {
            if !bi.is_zero() {
                acc += bi * powers[i].coeff_or_zero(e);
            }
        }
        // target coefficient is 0 for every e > -n
        b[m] = -acc;
    }
    Ok(FaberPolynomial {
        n,
        poly: DensePolynomial::new(b),
    })
}

/// `q^-n - P(f(q))` through `q^order`; its nonpositive part must vanish.
pub fn faber_residual(f: &LaurentSeries, p: &FaberPolynomial) -> LaurentSeries {
    let value = p.poly.eval_series(f);
    let target = LaurentSeries::monomial(-(p.n as i64), Rational::one(), value.order());
    &target - &value
}

/// Whether `q^-n - P(f(q))` has no terms of exponent `<= 0`.
pub fn satisfies_faber_property(f: &LaurentSeries, p: &FaberPolynomial) -> bool {
    let r = faber_residual(f, p);
    r.order() >= 0 && r.valuation() >= 1
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum IdentitySign {
    /// `log[q(f(q) - f(p))] = -sum P_n(f(p)) q^n / n`
    Minus,
    /// `log[q(f(q) - f(p))] = +sum P_n(f(p)) q^n / n`
    Plus,
    Neither,
}

#[derive(Clone, Debug, Serialize)]
pub struct NewtonLogReport {
    pub order_q: usize,
    pub order_p: i64,
    pub minus_holds: bool,
    pub plus_holds: bool,
    pub sign: IdentitySign,
    /// First `(q^m, p^e)` cell where the minus-sign form fails, if any.
    pub first_minus_mismatch: Option<(usize, i64)>,
}

impl NewtonLogReport {
    pub fn holds(&self) -> bool {
        self.sign != IdentitySign::Neither
    }
}

/// `log[q(f(q) - f(p))]` as a power series in `q` with Laurent coefficients in `p`.
pub fn newton_log_lhs(f: &LaurentSeries, order_q: usize, order_p: i64) -> Result<BiSeries> {
    check_normalized(f)?;
    let inner = order_p + order_q as i64;
    if f.order() < inner {
        return Err(Error::Precision(format!(
            "Newton-log check needs f through q^{inner}, have q^{}",
            f.order()
        )));
    }
    let f_p = f.truncate(inner);
    // q f(q) = 1 + c_0 q + c_1 q^2 + ...; the q^1 coefficient also carries -f(p).
    let mut rows = Vec::with_capacity(order_q + 1);
    rows.push(LaurentSeries::one(inner));
    for m in 1..=order_q {
        let c = LaurentSeries::monomial(0, f.coefficient(m as i64 - 1)?, inner);
        rows.push(if m == 1 { &c - &f_p } else { c });
    }
    BiSeries::new(rows).log()
}

/// `sum_{n >= 1} P_{n,f}(f(p)) q^n / n`, the right side without its sign.
pub fn newton_log_rhs(f: &LaurentSeries, order_q: usize, order_p: i64) -> Result<BiSeries> {
    let inner = order_p + order_q as i64;
    let f_p = f.truncate(inner);
    let mut rows = vec![LaurentSeries::zero(inner)];
    for n in 1..=order_q {
        let p = faber_poly(f, n)?;
        let v = p.poly.eval_series(&f_p);
        rows.push(v.scale(&Rational::new(1.into(), (n as i64).into())));
    }
    Ok(BiSeries::new(rows))
}

fn first_mismatch(
    lhs: &BiSeries,
    rhs: &BiSeries,
    order_q: usize,
    order_p: i64,
) -> Result<Option<(usize, i64)>> {
    for m in 0..=order_q {
        let a = lhs.coeff(m).expect("t-order checked");
        let b = rhs.coeff(m).expect("t-order checked");
        if a.order() < order_p || b.order() < order_p {
            return Err(Error::Precision(format!(
                "q^{m} row known only through p^{}",
                a.order().min(b.order())
            )));
        }
        let lo = a.valuation().min(b.valuation()).min(0);
        for e in lo..=order_p {
            if a.coeff_or_zero(e) != b.coeff_or_zero(e) {
                return Ok(Some((m, e)));
            }
        }
    }
    Ok(None)
}

/// Compares both sign conventions of the Newton-log identity on the grid
/// `q^0..=q^order_q`, `p^..=p^order_p` and reports which one holds.
pub fn newton_log_identity_check(
    f: &LaurentSeries,
    order_q: usize,
    order_p: i64,
) -> Result<NewtonLogReport> {
    let lhs = newton_log_lhs(f, order_q, order_p)?;
    let rhs = newton_log_rhs(f, order_q, order_p)?;
    let minus = first_mismatch(&lhs, &rhs.neg(), order_q, order_p)?;
    let plus = first_mismatch(&lhs, &rhs, order_q, order_p)?;
    let sign = match (minus.is_none(), plus.is_none()) {
        (true, _) => IdentitySign::Minus,
        (false, true) => IdentitySign::Plus,
        (false, false) => IdentitySign::Neither,
    };
    Ok(NewtonLogReport {
        order_q,
        order_p,
        minus_holds: minus.is_none(),
        plus_holds: plus.is_none(),
        sign,
        first_minus_mismatch: minus,
    })
}
