//! Hecke-built exponential operations on q-series and the replicability checks.
//!
//! The symmetric power is `S_t(x) = exp(sum_k (k T_k x) t^k / k)`: the
//! operation sitting in the Newton-Adams slot is the scaled Hecke operator
//! `k T_k`, the analogue of `psi^k`. Its inverse `Lambda_{-t}(x)` is the
//! exterior power. For `J` these turn replicability into
//! `t (J(t) - J(q)) = Lambda_{-t}(J(q))`.

use std::fmt;

use num_traits::Zero;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::faber::faber_poly;
use crate::hecke::hecke_scaled_to;
use crate::modular::moonshine_j;
use crate::series::{BiSeries, LaurentSeries};
use crate::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum ExponentialKind {
    SymmetricS,
    ExteriorLambda,
}

/// `S_t(x)` or `Lambda_t(x)` as a power series in `t` over q-series.
#[derive(Clone, Debug)]
pub struct ExponentialSeries {
    pub kind: ExponentialKind,
    /// Coefficients of `t^m`: `S^m(x)` or `Lambda^m(x)`.
    pub body: BiSeries,
}

impl ExponentialSeries {
    /// The series with `t` replaced by `-t`; for `Lambda` this is `Lambda_{-t}`.
    pub fn at_minus_t(&self) -> BiSeries {
        self.body.negate_t()
    }
}

/// Input q-order that makes every coefficient of `S_t(x)` through
/// `t^t_order` known through `q^q_order`, for `x` of the given valuation.
///
/// The `t^k` Hecke row is later multiplied by poles down to
/// `q^(-V (t_order - k))` with `V = max(0, -valuation)`, so it is needed
/// through `q^(q_order + V (t_order - k))`, which costs `k` times that on
/// the input.
pub fn required_input_order(valuation: i64, t_order: usize, q_order: i64) -> i64 {
    let pole = (-valuation).max(0);
    let t = t_order as i64;
    (1..=t)
        .map(|k| k * (q_order + pole * (t - k)))
        .max()
        .unwrap_or(0)
        .max(q_order)
}

fn check_rows(body: &BiSeries, q_order: i64, what: &str) -> Result<()> {
    for (m, c) in body.coeffs().iter().enumerate() {
        if c.order() < q_order {
            return Err(Error::Precision(format!(
                "{what}: t^{m} coefficient known only through q^{}, need q^{q_order}",
                c.order()
            )));
        }
    }
    Ok(())
}

/// `S_t(x) = exp(sum_{1 <= k <= t_order} (k T_k x) t^k / k)`.
pub fn ganter_s(x: &LaurentSeries, t_order: usize, q_order: i64) -> Result<ExponentialSeries> {
    let v = if x.is_zero() { 0 } else { x.valuation() };
    if v < -1 {
        return Err(Error::InvalidArgument(format!(
            "x must have valuation >= -1, got {v}"
        )));
    }
    let needed = required_input_order(v, t_order, q_order);
    if x.order() < needed {
        return Err(Error::Precision(format!(
            "S_t to (t^{t_order}, q^{q_order}) needs input through q^{needed}, have q^{}",
            x.order()
        )));
    }
    // Row k is multiplied by series with poles down to q^(-V (t_order - k)),
    // so it is needed through q^(q_order + V (t_order - k)) and no further.
    let pole = (-v).max(0);
    let mut rows = vec![LaurentSeries::zero(q_order + pole * t_order as i64)];
    for k in 1..=t_order {
        let target = q_order + pole * (t_order - k) as i64;
        let scaled = hecke_scaled_to(x, k as u64, target)?;
        rows.push(scaled.scale(&Rational::new(1.into(), (k as i64).into())));
    }
    let body = BiSeries::new(rows).exp()?;
    check_rows(&body, q_order, "S_t")?;
    Ok(ExponentialSeries {
        kind: ExponentialKind::SymmetricS,
        body,
    })
}

/// `Lambda_t(x)`, defined through `Lambda_{-t}(x) = S_t(x)^{-1}`.
pub fn ganter_lambda(x: &LaurentSeries, t_order: usize, q_order: i64) -> Result<ExponentialSeries> {
    let s = ganter_s(x, t_order, q_order)?;
    let lambda_minus_t = s.body.inv()?;
    check_rows(&lambda_minus_t, q_order, "Lambda_t")?;
    Ok(ExponentialSeries {
        kind: ExponentialKind::ExteriorLambda,
        body: lambda_minus_t.negate_t(),
    })
}

fn check_replicable_shape(f: &LaurentSeries) -> Result<()> {
    if f.valuation() != -1 || !f.leading_coefficient().is_some_and(num_traits::One::is_one) {
        return Err(Error::NotNormalized("expected q^-1 + O(1)".into()));
    }
    Ok(())
}

#[derive(Clone, Debug, Serialize)]
pub struct FaberFormRow {
    pub k: usize,
    pub holds: bool,
    /// Lowest exponent where `P_k(f) - k T_k f` is nonzero.
    pub first_nonzero: Option<i64>,
}

#[derive(Clone, Debug, Serialize)]
pub struct FaberFormReport {
    pub q_order: i64,
    pub rows: Vec<FaberFormRow>,
}

impl FaberFormReport {
    pub fn holds(&self) -> bool {
        self.rows.iter().all(|r| r.holds)
    }
}

/// `P_{k,f}(f(q)) - k T_k f` through `q^q_order` for every `k <= k_max`.
pub fn replicability_faber_form(
    f: &LaurentSeries,
    k_max: usize,
    q_order: i64,
) -> Result<FaberFormReport> {
    check_replicable_shape(f)?;
    let mut rows = Vec::with_capacity(k_max);
    for k in 1..=k_max {
        let hecke_side = hecke_scaled_to(f, k as u64, q_order)?;
        let faber_side = faber_poly(f, k)?.poly.eval_series(f);
        if faber_side.order() < q_order {
            return Err(Error::Precision(format!(
                "P_{k}(f) known only through q^{}",
                faber_side.order()
            )));
        }
        let diff = (&faber_side - &hecke_side).truncate(q_order);
        rows.push(FaberFormRow {
            k,
            holds: diff.is_zero(),
            first_nonzero: (!diff.is_zero()).then(|| diff.valuation()),
        });
    }
    Ok(FaberFormReport { q_order, rows })
}

/// Faber-form replicability of `J` for `k = 1..=k_max` through `q^q_order`.
pub fn replicability_check_faber_form(k_max: usize, q_order: i64) -> Result<FaberFormReport> {
    let needed = (k_max as i64 * q_order).max(q_order + k_max as i64);
    let j = moonshine_j(needed)?;
    replicability_faber_form(&j, k_max, q_order)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GridMismatch {
    /// Exponent of the outer variable `t`.
    pub t: i64,
    /// Exponent of the inner variable `q`.
    pub q: i64,
    pub lhs: String,
    pub rhs: String,
}

impl fmt::Display for GridMismatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "(t^{}, q^{}): left {} != right {}",
            self.t, self.q, self.lhs, self.rhs
        )
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct GridReport {
    pub t_order: usize,
    pub q_order: i64,
    pub cells_checked: usize,
    pub holds: bool,
    pub first_mismatch: Option<GridMismatch>,
}

fn compare_grid(
    lhs: &BiSeries,
    rhs: &BiSeries,
    t_order: usize,
    q_order: i64,
) -> Result<GridReport> {
    let mut cells = 0;
    for m in 0..=t_order {
        let (a, b) = (lhs.coeff(m), rhs.coeff(m));
        let (Some(a), Some(b)) = (a, b) else {
            return Err(Error::Precision(format!("t^{m} missing from one side")));
        };
        if a.order() < q_order || b.order() < q_order {
            return Err(Error::Precision(format!(
                "t^{m} row known only through q^{}",
                a.order().min(b.order())
            )));
        }
        let lo = a.valuation().min(b.valuation()).min(0);
        for n in lo..=q_order {
            cells += 1;
            let (x, y) = (a.coeff_or_zero(n), b.coeff_or_zero(n));
            if x != y {
                return Ok(GridReport {
                    t_order,
                    q_order,
                    cells_checked: cells,
                    holds: false,
                    first_mismatch: Some(GridMismatch {
                        t: m as i64,
                        q: n,
                        lhs: x.to_string(),
                        rhs: y.to_string(),
                    }),
                });
            }
        }
    }
    Ok(GridReport {
        t_order,
        q_order,
        cells_checked: cells,
        holds: true,
        first_mismatch: None,
    })
}

/// `t (f(t) - f(q))` as a power series in `t` over q-series:
/// `1 + (c_0 - f(q)) t + sum_{m >= 2} c_{m-1} t^m`.
pub fn theorem_lhs(f: &LaurentSeries, t_order: usize, q_order: i64) -> Result<BiSeries> {
    let inner = q_order;
    let f_q = f.truncate(inner);
    let mut rows = vec![LaurentSeries::one(inner)];
    for m in 1..=t_order {
        let c = LaurentSeries::monomial(0, f.coefficient(m as i64 - 1)?, inner);
        rows.push(if m == 1 { &c - &f_q } else { c });
    }
    Ok(BiSeries::new(rows))
}

/// Compares `t (f(t) - f(q))` with `Lambda_{-t}(f(q))` on `t^0..=t^t_order`,
/// `q^..=q^q_order`.
pub fn replicability_theorem_form(
    f: &LaurentSeries,
    t_order: usize,
    q_order: i64,
) -> Result<GridReport> {
    check_replicable_shape(f)?;
    let lhs = theorem_lhs(f, t_order, q_order)?;
    let rhs = ganter_lambda(f, t_order, q_order)?.at_minus_t();
    compare_grid(&lhs, &rhs, t_order, q_order)
}

/// The exterior-power form of replicability for `J`.
pub fn replicability_check_theorem_form(t_order: usize, q_order: i64) -> Result<GridReport> {
    let j = moonshine_j(required_input_order(-1, t_order, q_order))?;
    replicability_theorem_form(&j, t_order, q_order)
}

#[derive(Clone, Debug, Serialize)]
pub struct SymmetryReport {
    pub t_order: usize,
    pub q_order: i64,
    pub cells_checked: usize,
    pub equal: bool,
    pub integral: bool,
    pub pole_free: bool,
    pub first_mismatch: Option<GridMismatch>,
    pub first_non_integral: Option<(i64, i64)>,
    pub first_pole: Option<(i64, i64)>,
}

impl SymmetryReport {
    pub fn holds(&self) -> bool {
        self.equal && self.integral && self.pole_free
    }
}

/// Checks `q Lambda_{-t}(J(q)) = -t Lambda_{-q}(J(t))` on `t^0..=t^t_order`,
/// `q^0..=q^q_order`, along with integrality and absence of poles on both sides.
///
/// Both sides are read off one bivariate series `B(s, r) = Lambda_{-s}(J(r))`:
/// the left side at `t^m q^n` is `B[m][n-1]`, the right side is `-B[n][m-1]`.
pub fn symmetry_check(t_order: usize, q_order: i64) -> Result<SymmetryReport> {
    let size = t_order.max(q_order.max(0) as usize);
    let j = moonshine_j(required_input_order(-1, size, size as i64))?;
    let b = ganter_lambda(&j, size, size as i64)?.at_minus_t();
    let cell = |outer: i64, inner: i64| -> Result<Rational> {
        if outer < 0 {
            return Ok(Rational::zero());
        }
        b.coefficient(outer as usize, inner)
    };
    let lhs = |m: i64, n: i64| -> Result<Rational> { cell(m, n - 1) };
    let rhs = |m: i64, n: i64| -> Result<Rational> { Ok(-cell(n, m - 1)?) };

    let mut report = SymmetryReport {
        t_order,
        q_order,
        cells_checked: 0,
        equal: true,
        integral: true,
        pole_free: true,
        first_mismatch: None,
        first_non_integral: None,
        first_pole: None,
    };
    let t_max = t_order as i64;
    // Left side lives in ((q))[[t]]: the row t^m can reach down to q^(-m).
    for m in 0..=t_max {
        for n in (-m - 1)..0 {
            if !lhs(m, n)?.is_zero() && report.first_pole.is_none() {
                report.pole_free = false;
                report.first_pole = Some((m, n));
            }
        }
    }
    // Right side lives in ((t))[[q]].
    for n in 0..=q_order {
        for m in (-n - 1)..0 {
            if !rhs(m, n)?.is_zero() && report.first_pole.is_none() {
                report.pole_free = false;
                report.first_pole = Some((m, n));
            }
        }
    }
    for m in 0..=t_max {
        for n in 0..=q_order {
            report.cells_checked += 1;
            let (a, c) = (lhs(m, n)?, rhs(m, n)?);
            if !a.is_integer() || !c.is_integer() {
                report.integral = false;
                report.first_non_integral.get_or_insert((m, n));
            }
            if a != c && report.first_mismatch.is_none() {
                report.equal = false;
                report.first_mismatch = Some(GridMismatch {
                    t: m,
                    q: n,
                    lhs: a.to_string(),
                    rhs: c.to_string(),
                });
            }
        }
    }
    Ok(report)
}
