//! Classical lambda-ring operations on finite-rank bundles, computed on
//! their multisets of eigenvalue monomials.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::Rational;

/// Exponent vector over a fixed alphabet of indeterminates.
pub type Monomial = Vec<i32>;

/// A Laurent polynomial in several indeterminates with rational coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SymPoly {
    terms: BTreeMap<Monomial, Rational>,
}

impl SymPoly {
    pub fn zero() -> Self {
        SymPoly::default()
    }

    pub fn constant(c: Rational, vars: usize) -> Self {
        Self::term(vec![0; vars], c)
    }

    pub fn term(m: Monomial, c: Rational) -> Self {
        let mut p = SymPoly::zero();
        p.add_term(m, c);
        p
    }

    fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
            Entry::Vacant(v) => {
                v.insert(c);
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-Rational::one()))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        let mut out = SymPoly::zero();
        for (m, v) in &self.terms {
            out.add_term(m.clone(), v * c);
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = SymPoly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let m: Monomial = ma.iter().zip(mb).map(|(x, y)| x + y).collect();
                out.add_term(m, ca * cb);
            }
        }
        out
    }
}

/// Truncated power series in `t` with [`SymPoly`] coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TSeries {
    pub coeffs: Vec<SymPoly>,
}

impl TSeries {
    pub fn one(t_order: usize, vars: usize) -> Self {
        let mut coeffs = vec![SymPoly::constant(Rational::one(), vars)];
        coeffs.resize(t_order + 1, SymPoly::zero());
        TSeries { coeffs }
    }

    pub fn t_order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn mul(&self, other: &Self) -> Self {
        let n = self.t_order().min(other.t_order());
        let coeffs = (0..=n)
            .map(|m| {
                (0..=m).fold(SymPoly::zero(), |acc, k| {
                    acc.add(&self.coeffs[k].mul(&other.coeffs[m - k]))
                })
            })
            .collect();
        TSeries { coeffs }
    }

    /// `t -> -t`.
    pub fn negate_t(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(m, c)| {
                if m % 2 == 1 {
                    c.scale(&-Rational::one())
                } else {
                    c.clone()
                }
            })
            .collect();
        TSeries { coeffs }
    }

    /// Exponential of a series with zero constant term, by `m E_m = sum k F_k E_{m-k}`.
    pub fn exp(&self, vars: usize) -> Self {
        assert!(self.coeffs[0].is_zero(), "exp needs a zero t^0 coefficient");
        let mut e = vec![SymPoly::constant(Rational::one(), vars)];
        for m in 1..=self.t_order() {
            let acc = (1..=m).fold(SymPoly::zero(), |acc, k| {
                acc.add(
                    &self.coeffs[k]
                        .mul(&e[m - k])
                        .scale(&Rational::from_integer(k.into())),
                )
            });
            e.push(acc.scale(&Rational::new(1.into(), m.into())));
        }
        TSeries { coeffs: e }
    }

    pub fn is_one(&self, vars: usize) -> bool {
        self.coeffs[0] == SymPoly::constant(Rational::one(), vars)
            && self.coeffs[1..].iter().all(SymPoly::is_zero)
    }
}

/// A finite-rank bundle given by the multiset of its eigenvalue monomials.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VirtualBundle {
    vars: usize,
    eigenvalues: Vec<Monomial>,
}

impl VirtualBundle {
    pub fn new(vars: usize, eigenvalues: Vec<Monomial>) -> Result<Self> {
        if let Some(bad) = eigenvalues.iter().find(|m| m.len() != vars) {
            return Err(Error::InvalidArgument(format!(
                "eigenvalue {bad:?} does not have {vars} exponents"
            )));
        }
        Ok(VirtualBundle { vars, eigenvalues })
    }

    /// Trivial bundle of the given rank: every eigenvalue is 1.
    pub fn trivial(rank: usize, vars: usize) -> Self {
        VirtualBundle {
            vars,
            eigenvalues: vec![vec![0; vars]; rank],
        }
    }

    pub fn rank(&self) -> usize {
        self.eigenvalues.len()
    }

    pub fn vars(&self) -> usize {
        self.vars
    }

    pub fn eigenvalues(&self) -> &[Monomial] {
        &self.eigenvalues
    }

    pub fn direct_sum(&self, other: &Self) -> Result<Self> {
        if self.vars != other.vars {
            return Err(Error::InvalidArgument(
                "bundles use different alphabets".into(),
            ));
        }
        let mut eigenvalues = self.eigenvalues.clone();
        eigenvalues.extend(other.eigenvalues.iter().cloned());
        Ok(VirtualBundle {
            vars: self.vars,
            eigenvalues,
        })
    }

    fn eigen_poly(&self, i: usize, power: i32) -> SymPoly {
        SymPoly::term(
            self.eigenvalues[i].iter().map(|e| e * power).collect(),
            Rational::one(),
        )
    }
}

/// `Lambda_t(V) = prod (1 + x_i t) = sum e_k t^k`.
pub fn lambda_t(v: &VirtualBundle, t_order: usize) -> TSeries {
    let mut acc = TSeries::one(t_order, v.vars);
    for i in 0..v.rank() {
        let mut factor = TSeries::one(t_order, v.vars);
        if t_order >= 1 {
            factor.coeffs[1] = v.eigen_poly(i, 1);
        }
        acc = acc.mul(&factor);
    }
    acc
}

/// `S_t(V) = prod 1 / (1 - x_i t) = sum h_k t^k`.
pub fn symmetric_t(v: &VirtualBundle, t_order: usize) -> TSeries {
    let mut acc = TSeries::one(t_order, v.vars);
    for i in 0..v.rank() {
        let factor = TSeries {
            coeffs: (0..=t_order).map(|k| v.eigen_poly(i, k as i32)).collect(),
        };
        acc = acc.mul(&factor);
    }
    acc
}

/// Adams operation `psi^k(V)`: the power sum of the eigenvalues.
pub fn adams_psi(v: &VirtualBundle, k: u32) -> SymPoly {
    assert!(k >= 1, "Adams operations are indexed by k >= 1");
    (0..v.rank()).fold(SymPoly::zero(), |acc, i| {
        acc.add(&v.eigen_poly(i, k as i32))
    })
}

/// `exp(sum_{k >= 1} psi^k(V) t^k / k)`.
pub fn adams_exponential(v: &VirtualBundle, t_order: usize) -> TSeries {
    let mut coeffs = vec![SymPoly::zero()];
    for k in 1..=t_order {
        coeffs.push(adams_psi(v, k as u32).scale(&Rational::new(1.into(), (k as i64).into())));
    }
    TSeries { coeffs }.exp(v.vars)
}

/// Checks `k e_k = sum_{i=1}^k (-1)^(i-1) e_{k-i} p_i` for `k <= k_max`.
pub fn newton_identities_hold(v: &VirtualBundle, k_max: usize) -> bool {
    let e = lambda_t(v, k_max).coeffs;
    let p: Vec<SymPoly> = (0..=k_max)
        .map(|i| {
            if i == 0 {
                SymPoly::zero()
            } else {
                adams_psi(v, i as u32)
            }
        })
        .collect();
    (1..=k_max).all(|k| {
        let lhs = e[k].scale(&Rational::from_integer(k.into()));
        let rhs = (1..=k).fold(SymPoly::zero(), |acc, i| {
            let term = e[k - i].mul(&p[i]);
            if i % 2 == 1 {
                acc.add(&term)
            } else {
                acc.sub(&term)
            }
        });
        lhs == rhs
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x() -> Monomial {
        vec![1, 0]
    }
    fn y() -> Monomial {
        vec![0, 1]
    }
    fn one() -> Rational {
        Rational::one()
    }

    #[test]
    fn rank_zero_is_one() {
        let v = VirtualBundle::trivial(0, 2);
        assert!(lambda_t(&v, 5).is_one(2));
        assert!(symmetric_t(&v, 5).is_one(2));
    }

    #[test]
    fn two_eigenvalues() {
        let v = VirtualBundle::new(2, vec![x(), y()]).unwrap();
        let l = lambda_t(&v, 4);
        assert_eq!(
            l.coeffs[1],
            SymPoly::term(x(), one()).add(&SymPoly::term(y(), one()))
        );
        assert_eq!(l.coeffs[2], SymPoly::term(vec![1, 1], one()));
        assert!(l.coeffs[3].is_zero() && l.coeffs[4].is_zero());
        assert_eq!(
            adams_psi(&v, 2),
            SymPoly::term(vec![2, 0], one()).add(&SymPoly::term(vec![0, 2], one()))
        );
    }

    #[test]
    fn single_eigenvalue_symmetric_is_geometric() {
        let v = VirtualBundle::new(2, vec![x()]).unwrap();
        let s = symmetric_t(&v, 5);
        for k in 0..=5 {
            assert_eq!(s.coeffs[k], SymPoly::term(vec![k as i32, 0], one()));
        }
    }

    #[test]
    fn psi_one_is_sum() {
        let v = VirtualBundle::new(2, vec![x(), y(), vec![1, 1]]).unwrap();
        assert_eq!(adams_psi(&v, 1), lambda_t(&v, 1).coeffs[1]);
    }

    #[test]
    fn identities_on_fixed_bundle() {
        let v = VirtualBundle::new(2, vec![x(), y(), vec![-1, 2]]).unwrap();
        let w = VirtualBundle::new(2, vec![vec![0, 0], vec![3, -1]]).unwrap();
        let vw = v.direct_sum(&w).unwrap();
        assert_eq!(lambda_t(&vw, 8), lambda_t(&v, 8).mul(&lambda_t(&w, 8)));
        assert!(lambda_t(&v, 8)
            .negate_t()
            .mul(&symmetric_t(&v, 8))
            .is_one(2));
        assert_eq!(adams_exponential(&v, 8), symmetric_t(&v, 8));
        assert!(newton_identities_hold(&v, 8));
    }

    #[test]
    fn alphabet_mismatch_rejected() {
        assert!(VirtualBundle::new(2, vec![vec![1]]).is_err());
        let a = VirtualBundle::trivial(1, 2);
        let b = VirtualBundle::trivial(1, 3);
        assert!(a.direct_sum(&b).is_err());
    }
}
