//! Supersingular j-invariants in characteristic `p` through the Legendre
//! family, and the scan for primes whose supersingular invariants all lie in
//! the prime field.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};

pub const DEFAULT_MAX_PRIME: u64 = 1000;
pub const MAX_PRIME_ENV: &str = "MOONSHINE_MAX_PRIME";

/// Order of the Monster group, as published.
pub const MONSTER_ORDER: &str = "808017424794512875886459904961710757005754368000000000";

pub fn max_prime() -> u64 {
    std::env::var(MAX_PRIME_ENV)
        .ok()
        .and_then(|s| s.parse().ok())
        .unwrap_or(DEFAULT_MAX_PRIME)
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1 % p;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    r
}

/// `F_p` and its quadratic extension `F_p[sqrt(delta)]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct PrimeField {
    pub p: u64,
    /// Smallest positive quadratic non-residue.
    pub delta: u64,
}

/// `a + b sqrt(delta)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Fp2 {
    pub a: u64,
    pub b: u64,
}

impl fmt::Display for Fp2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b == 0 {
            write!(f, "{}", self.a)
        } else {
            write!(f, "{}+{}r", self.a, self.b)
        }
    }
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if p == 2 {
            // x^2 + x + 1 is the irreducible quadratic; no square-root model.
            return Err(Error::SmallPrime(p));
        }
        let delta = (2..p)
            .find(|&d| pow_mod(d, (p - 1) / 2, p) == p - 1)
            .expect("odd primes have non-residues");
        Ok(PrimeField { p, delta })
    }

    pub fn is_non_residue(&self, x: u64) -> bool {
        pow_mod(x, (self.p - 1) / 2, self.p) == self.p - 1
    }

    pub fn from_int(&self, x: i64) -> Fp2 {
        Fp2 {
            a: x.rem_euclid(self.p as i64) as u64,
            b: 0,
        }
    }

    pub fn zero(&self) -> Fp2 {
        Fp2 { a: 0, b: 0 }
    }

    pub fn one(&self) -> Fp2 {
        Fp2 { a: 1, b: 0 }
    }

    pub fn add(&self, x: Fp2, y: Fp2) -> Fp2 {
        Fp2 {
            a: (x.a + y.a) % self.p,
            b: (x.b + y.b) % self.p,
        }
    }

    pub fn sub(&self, x: Fp2, y: Fp2) -> Fp2 {
        Fp2 {
            a: (x.a + self.p - y.a) % self.p,
            b: (x.b + self.p - y.b) % self.p,
        }
    }

    pub fn mul(&self, x: Fp2, y: Fp2) -> Fp2 {
        let p = self.p;
        Fp2 {
            a: (x.a * y.a + x.b * y.b % p * self.delta) % p,
            b: (x.a * y.b + x.b * y.a) % p,
        }
    }

    /// Frobenius `x -> x^p`, which negates the `sqrt(delta)` part.
    pub fn conjugate(&self, x: Fp2) -> Fp2 {
        Fp2 {
            a: x.a,
            b: (self.p - x.b) % self.p,
        }
    }

    pub fn inv(&self, x: Fp2) -> Result<Fp2> {
        let p = self.p;
        // x * conj(x) = a^2 - delta b^2 lies in F_p
        let norm = (x.a * x.a % p + p - x.b * x.b % p * self.delta % p) % p;
        if norm == 0 {
            return Err(Error::InvalidArgument("inverse of zero in F_p^2".into()));
        }
        let n_inv = pow_mod(norm, p - 2, p);
        let c = self.conjugate(x);
        Ok(Fp2 {
            a: c.a * n_inv % p,
            b: c.b * n_inv % p,
        })
    }

    pub fn elements(&self) -> impl Iterator<Item = Fp2> + '_ {
        (0..self.p).flat_map(move |b| (0..self.p).map(move |a| Fp2 { a, b }))
    }
}

/// `H_p(lambda) = sum_{i=0}^m C(m, i)^2 lambda^i mod p`, `m = (p - 1) / 2`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HassePolynomial {
    pub p: u64,
    /// Coefficients in `0..p`, constant term first.
    pub coeffs: Vec<u64>,
}

impl HassePolynomial {
    pub fn eval(&self, field: &PrimeField, x: Fp2) -> Fp2 {
        self.coeffs.iter().rev().fold(field.zero(), |acc, &c| {
            field.add(field.mul(acc, x), Fp2 { a: c, b: 0 })
        })
    }
}

pub fn hasse_polynomial(p: u64) -> Result<HassePolynomial> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if p < 5 {
        return Err(Error::SmallPrime(p));
    }
    let m = (p - 1) / 2;
    let mut coeffs = Vec::with_capacity(m as usize + 1);
    let mut binom = 1u64;
    for i in 0..=m {
        if i > 0 {
            // C(m, i) = C(m, i-1) (m - i + 1) / i, and i < p is invertible
            binom = binom * ((m - i + 1) % p) % p * pow_mod(i, p - 2, p) % p;
        }
        coeffs.push(binom * binom % p);
    }
    Ok(HassePolynomial { p, coeffs })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SupersingularReport {
    pub p: u64,
    /// The non-residue used for `F_p^2`; absent for `p = 2`.
    pub delta: Option<u64>,
    pub j_set: BTreeSet<Fp2>,
    pub all_in_prime_field: bool,
}

/// `256 (l^2 - l + 1)^3 / (l^2 (l - 1)^2)`.
fn legendre_j(field: &PrimeField, l: Fp2) -> Result<Fp2> {
    let one = field.one();
    let l2 = field.mul(l, l);
    let s = field.add(field.sub(l2, l), one);
    let num = field.mul(field.from_int(256), field.mul(s, field.mul(s, s)));
    let lm1 = field.sub(l, one);
    let den = field.mul(l2, field.mul(lm1, lm1));
    Ok(field.mul(num, field.inv(den)?))
}

pub fn supersingular_j_set(p: u64) -> Result<SupersingularReport> {
    let limit = max_prime();
    if p > limit {
        return Err(Error::PrimeBound { bound: p, limit });
    }
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if p < 5 {
        // The Legendre model degenerates; j = 0 is the only supersingular invariant.
        return Ok(SupersingularReport {
            p,
            delta: PrimeField::new(p).ok().map(|f| f.delta),
            j_set: BTreeSet::from([Fp2 { a: 0, b: 0 }]),
            all_in_prime_field: true,
        });
    }
    let field = PrimeField::new(p)?;
    let h = hasse_polynomial(p)?;
    let m = h.coeffs.len() - 1;
    let mut roots = 0;
    let mut j_set = BTreeSet::new();
    for l in field.elements() {
        if h.eval(&field, l) != field.zero() {
            continue;
        }
        assert!(
            l != field.zero() && l != field.one(),
            "lambda = {l} is a root of H_{p}"
        );
        j_set.insert(legendre_j(&field, l)?);
        roots += 1;
        if roots == m {
            break;
        }
    }
    let all_in_prime_field = j_set.iter().all(|j| j.b == 0);
    Ok(SupersingularReport {
        p,
        delta: Some(field.delta),
        j_set,
        all_in_prime_field,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct OggScan {
    pub bound: u64,
    pub passing: Vec<u64>,
    pub failing: Vec<u64>,
    pub reports: Vec<SupersingularReport>,
}

pub fn ogg_scan(bound: u64) -> Result<OggScan> {
    let limit = max_prime();
    if bound > limit {
        return Err(Error::PrimeBound { bound, limit });
    }
    let reports = (2..=bound)
        .filter(|&p| is_prime(p))
        .map(supersingular_j_set)
        .collect::<Result<Vec<_>>>()?;
    let (pass, fail): (Vec<_>, Vec<_>) = reports.iter().partition(|r| r.all_in_prime_field);
    Ok(OggScan {
        bound,
        passing: pass.iter().map(|r| r.p).collect(),
        failing: fail.iter().map(|r| r.p).collect(),
        reports,
    })
}

/// Distinct prime divisors, by trial division.
pub fn prime_divisors(n: &BigUint) -> Vec<u64> {
    let mut n = n.clone();
    let mut out = Vec::new();
    let mut d = 2u64;
    while !n.is_one() && !n.is_zero() {
        let dd = BigUint::from(d);
        if &dd * &dd > n {
            out.push(n.to_u64().expect("remaining cofactor fits in u64"));
            break;
        }
        if n.is_multiple_of(&dd) {
            out.push(d);
            while n.is_multiple_of(&dd) {
                n /= &dd;
            }
        }
        d += 1;
    }
    out
}

pub fn monster_order() -> BigUint {
    MONSTER_ORDER.parse().expect("valid decimal literal")
}

pub fn monster_primes() -> Vec<u64> {
    prime_divisors(&monster_order())
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn fp(a: u64) -> Fp2 {
        Fp2 { a, b: 0 }
    }

    #[test]
    fn hasse_small() {
        assert_eq!(hasse_polynomial(5).unwrap().coeffs, vec![1, 4, 1]);
        assert_eq!(hasse_polynomial(7).unwrap().coeffs, vec![1, 2, 2, 1]);
        let want: Vec<u64> = [1u64, 25, 100, 100, 25, 1].iter().map(|c| c % 11).collect();
        assert_eq!(hasse_polynomial(11).unwrap().coeffs, want);
        assert!(hasse_polynomial(3).is_err());
        assert!(hasse_polynomial(9).is_err());
    }

    /// Roots found by plain evaluation over all of F_p^2, no early exit.
    fn oracle_j_set(p: u64) -> BTreeSet<Fp2> {
        let f = PrimeField::new(p).unwrap();
        let h = hasse_polynomial(p).unwrap();
        f.elements()
            .filter(|&l| h.eval(&f, l) == f.zero())
            .map(|l| legendre_j(&f, l).unwrap())
            .collect()
    }

    #[test]
    fn known_primes() {
        let r = supersingular_j_set(11).unwrap();
        assert_eq!(r.j_set, BTreeSet::from([fp(0), fp(1)]));
        assert!(r.all_in_prime_field);
        let r = supersingular_j_set(13).unwrap();
        assert_eq!(r.j_set, BTreeSet::from([fp(5)]));
        assert!(!supersingular_j_set(37).unwrap().all_in_prime_field);
        assert!(!supersingular_j_set(73).unwrap().all_in_prime_field);
        for p in [5, 7, 11, 13, 17, 37, 41, 43] {
            assert_eq!(
                supersingular_j_set(p).unwrap().j_set,
                oracle_j_set(p),
                "p = {p}"
            );
        }
    }

    #[test]
    fn special_primes() {
        for p in [2, 3] {
            let r = supersingular_j_set(p).unwrap();
            assert_eq!(r.j_set, BTreeSet::from([fp(0)]));
            assert!(r.all_in_prime_field);
        }
        assert!(supersingular_j_set(4).is_err());
    }

    #[test]
    fn scans() {
        assert_eq!(ogg_scan(12).unwrap().passing, vec![2, 3, 5, 7, 11]);
        let s = ogg_scan(100).unwrap();
        assert_eq!(
            s.passing,
            vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 41, 47, 59, 71]
        );
        assert_eq!(s.passing, monster_primes());
        assert!(s.failing.contains(&73));
        assert_eq!(ogg_scan(100).unwrap().reports, s.reports);
        for r in &s.reports {
            let n = r.j_set.len() as u64;
            assert!(n >= 1 && n <= r.p / 12 + 2, "p = {}", r.p);
            if let Ok(f) = PrimeField::new(r.p) {
                assert!(r.j_set.iter().all(|&j| r.j_set.contains(&f.conjugate(j))));
            }
        }
    }

    #[test]
    fn bound_enforced() {
        assert!(matches!(
            ogg_scan(max_prime() + 1),
            Err(Error::PrimeBound { .. })
        ));
    }

    #[test]
    fn field_axioms() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for p in [5u64, 13, 101, 997] {
            let f = PrimeField::new(p).unwrap();
            assert!(f.is_non_residue(f.delta));
            assert!((1..f.delta).all(|d| !f.is_non_residue(d)));
            for _ in 0..200 {
                let mut r = || Fp2 {
                    a: rng.gen_range(0..p),
                    b: rng.gen_range(0..p),
                };
                let (x, y, z) = (r(), r(), r());
                assert_eq!(f.mul(f.mul(x, y), z), f.mul(x, f.mul(y, z)));
                assert_eq!(f.mul(x, f.add(y, z)), f.add(f.mul(x, y), f.mul(x, z)));
                if x != f.zero() {
                    assert_eq!(f.mul(x, f.inv(x).unwrap()), f.one());
                }
            }
        }
    }

    #[test]
    fn monster_fixture() {
        assert_eq!(
            monster_primes(),
            vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 41, 47, 59, 71]
        );
    }
}
