//! The ten verification criteria at their default sizes, each producing a
//! pass/fail line with the location of the first failure.

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::Result;
use crate::faber::{newton_log_identity_check, IdentitySign};
use crate::lambda::{
    adams_exponential, lambda_t, newton_identities_hold, replicability_check_faber_form,
    replicability_check_theorem_form, symmetric_t, symmetry_check, VirtualBundle,
};
use crate::modular::{delta, delta_product, j_invariant, moonshine_j};
use crate::pairs::{
    alternating, cyclic, devoto_projections, dihedral, enumerate_pairs, quaternion8, symmetric,
    PermGroup, SL2Matrix,
};
use crate::series::LaurentSeries;
use crate::supersingular::{monster_primes, ogg_scan};
use crate::trees::{brute_force_rooted_trees, solve_tree_equation};
use crate::Rational;

pub const DEFAULT_SEED: u64 = 0x5EED_2024;

/// Sizes for every criterion. `Default` gives the documented defaults.
#[derive(Clone, Debug, Serialize)]
pub struct VerifyConfig {
    pub seed: u64,
    pub replicability_k_max: usize,
    pub replicability_order: i64,
    pub theorem_t: usize,
    pub theorem_q: i64,
    pub symmetry_t: usize,
    pub symmetry_q: i64,
    pub modular_order: i64,
    pub newton_q: usize,
    pub newton_p: i64,
    pub lambda_cases: usize,
    pub lambda_max_rank: usize,
    pub lambda_max_order: usize,
    pub ogg_bound: u64,
    pub tree_order: usize,
    pub tree_oracle: usize,
    pub kernel_cases: usize,
    pub kernel_max_order: i64,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            seed: DEFAULT_SEED,
            replicability_k_max: 10,
            replicability_order: 50,
            theorem_t: 12,
            theorem_q: 12,
            symmetry_t: 10,
            symmetry_q: 10,
            modular_order: 100,
            newton_q: 12,
            newton_p: 12,
            lambda_cases: 500,
            lambda_max_rank: 4,
            lambda_max_order: 8,
            ogg_bound: 100,
            tree_order: 20,
            tree_oracle: 8,
            kernel_cases: 1000,
            kernel_max_order: 30,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CriterionResult {
    pub id: u8,
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl CriterionResult {
    fn new(id: u8, name: &str, passed: bool, detail: impl Into<String>) -> Self {
        CriterionResult {
            id,
            name: name.to_string(),
            passed,
            detail: detail.into(),
        }
    }

    /// `PASS [n] name: detail` or `FAIL [n] ...`.
    pub fn line(&self) -> String {
        let tag = if self.passed { "PASS" } else { "FAIL" };
        format!("{tag} [{}] {}: {}", self.id, self.name, self.detail)
    }
}

fn finish(id: u8, name: &str, r: Result<(bool, String)>) -> CriterionResult {
    match r {
        Ok((passed, detail)) => CriterionResult::new(id, name, passed, detail),
        Err(e) => CriterionResult::new(id, name, false, format!("error: {e}")),
    }
}

pub fn replicability(cfg: &VerifyConfig) -> CriterionResult {
    let (k_max, order) = (cfg.replicability_k_max, cfg.replicability_order);
    finish(
        1,
        "replicability (Faber form)",
        (|| {
            let report = replicability_check_faber_form(k_max, order)?;
            let bad = report.rows.iter().find(|r| r.k >= 2 && !r.holds);
            Ok(match bad {
                None => (
                    true,
                    format!("P_k(J) = k T_k J for k = 2..={k_max} through q^{order}"),
                ),
                Some(r) => (
                    false,
                    format!("k = {} differs at q^{:?}", r.k, r.first_nonzero),
                ),
            })
        })(),
    )
}

pub fn theorem(cfg: &VerifyConfig) -> CriterionResult {
    let (t, q) = (cfg.theorem_t, cfg.theorem_q);
    finish(
        2,
        "replicability (exterior power form)",
        (|| {
            let r = replicability_check_theorem_form(t, q)?;
            Ok(match &r.first_mismatch {
                None => (
                    true,
                    format!(
                        "t(J(t) - J(q)) = Lambda_-t(J(q)) on {} cells, t <= {t}, q <= {q}",
                        r.cells_checked
                    ),
                ),
                Some(m) => (false, m.to_string()),
            })
        })(),
    )
}

pub fn symmetry(cfg: &VerifyConfig) -> CriterionResult {
    let (t, q) = (cfg.symmetry_t, cfg.symmetry_q);
    finish(
        3,
        "symmetry",
        (|| {
            let r = symmetry_check(t, q)?;
            Ok(if r.holds() {
                (
                    true,
                    format!(
                        "q Lambda_-t(J(q)) = -t Lambda_-q(J(t)) on {} integral cells",
                        r.cells_checked
                    ),
                )
            } else if let Some(m) = &r.first_mismatch {
                (false, m.to_string())
            } else if let Some((m, n)) = r.first_non_integral {
                (false, format!("non-integral coefficient at (t^{m}, q^{n})"))
            } else {
                (false, format!("unexpected pole at {:?}", r.first_pole))
            })
        })(),
    )
}

pub fn modular_kernel(cfg: &VerifyConfig) -> CriterionResult {
    let n = cfg.modular_order;
    finish(
        4,
        "modular kernel",
        (|| {
            let a = delta(n)?;
            let b = delta_product(n)?;
            if a != b {
                let d = &a - &b;
                return Ok((
                    false,
                    format!("Delta constructions differ at q^{}", d.valuation()),
                ));
            }
            let j = j_invariant(n)?;
            if j.order() < n || !j.is_integral() {
                return Ok((false, "j not integral through the requested order".into()));
            }
            let c0 = moonshine_j(n)?.coefficient(0)?;
            if !c0.is_zero() {
                return Ok((false, format!("J has constant term {c0}")));
            }
            Ok((
                true,
                format!("Delta agrees through q^{n}, j integral through q^{n}, J constant term 0"),
            ))
        })(),
    )
}

pub fn newton_log(cfg: &VerifyConfig) -> CriterionResult {
    let (nq, np) = (cfg.newton_q, cfg.newton_p);
    finish(
        5,
        "Newton-log identity",
        (|| {
            let q_inv = LaurentSeries::monomial(-1, Rational::one(), (np + nq as i64).max(0));
            let forced = newton_log_identity_check(&q_inv, nq, np)?.sign;
            if forced == IdentitySign::Neither {
                return Ok((false, "no sign works for f = q^-1".into()));
            }
            let j = moonshine_j(np + nq as i64)?;
            let r = newton_log_identity_check(&j, nq, np)?;
            let holds = match forced {
                IdentitySign::Minus => r.minus_holds,
                IdentitySign::Plus => r.plus_holds,
                IdentitySign::Neither => false,
            };
            let sign = if forced == IdentitySign::Minus {
                "minus"
            } else {
                "plus"
            };
            Ok(if holds {
                (
                    true,
                    format!("sign = {sign} (forced by f = q^-1); holds for J at (q^{nq}, p^{np})"),
                )
            } else {
                (
                    false,
                    format!(
                        "sign = {sign} fails for J, first mismatch {:?}",
                        r.first_minus_mismatch
                    ),
                )
            })
        })(),
    )
}

pub fn random_bundle(rng: &mut impl Rng, max_rank: usize, vars: usize) -> VirtualBundle {
    let rank = rng.gen_range(0..=max_rank);
    let eigen = (0..rank)
        .map(|_| (0..vars).map(|_| rng.gen_range(-2..=2)).collect())
        .collect();
    VirtualBundle::new(vars, eigen).expect("exponent vectors match the alphabet")
}

/// First failing identity in one random bundle case, if any.
pub fn lambda_case(rng: &mut impl Rng, max_rank: usize, max_order: usize) -> Option<String> {
    let vars = 2;
    let v = random_bundle(rng, max_rank, vars);
    let w = random_bundle(rng, max_rank, vars);
    let order = rng.gen_range(1..=max_order);
    let vw = v.direct_sum(&w).expect("same alphabet");
    if lambda_t(&vw, order) != lambda_t(&v, order).mul(&lambda_t(&w, order)) {
        return Some(format!("Lambda_t not multiplicative on {v:?} + {w:?}"));
    }
    if !lambda_t(&v, order)
        .negate_t()
        .mul(&symmetric_t(&v, order))
        .is_one(vars)
    {
        return Some(format!("Lambda_-t S_t != 1 on {v:?}"));
    }
    if adams_exponential(&v, order) != symmetric_t(&v, order) {
        return Some(format!("exp(sum psi^k t^k / k) != S_t on {v:?}"));
    }
    if !newton_identities_hold(&v, order) {
        return Some(format!("Newton identities fail on {v:?}"));
    }
    None
}

pub fn lambda_suite(cfg: &VerifyConfig) -> CriterionResult {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    for i in 0..cfg.lambda_cases {
        if let Some(msg) = lambda_case(&mut rng, cfg.lambda_max_rank, cfg.lambda_max_order) {
            return CriterionResult::new(6, "lambda-ring suite", false, format!("case {i}: {msg}"));
        }
    }
    CriterionResult::new(
        6,
        "lambda-ring suite",
        true,
        format!(
            "{} random bundles, rank <= {}, t-order <= {}",
            cfg.lambda_cases, cfg.lambda_max_rank, cfg.lambda_max_order
        ),
    )
}

/// Number of pair classes from class data alone: `sum_[g] #classes(C_G(g))`.
fn pair_count_from_classes(g: &PermGroup) -> usize {
    g.conjugacy_classes()
        .iter()
        .map(|c| g.conjugacy_classes_within(&g.centralizer(c[0])).len())
        .sum()
}

fn check_group(g: &PermGroup) -> Result<Option<String>> {
    let p = enumerate_pairs(g)?;
    let name = g.name();
    if p.len() != pair_count_from_classes(g) {
        return Ok(Some(format!("{name}: {} classes", p.len())));
    }
    let commuting: usize = (0..g.order()).map(|x| g.centralizer(x).len()).sum();
    if p.orbit_total() != commuting {
        return Ok(Some(format!(
            "{name}: orbit sizes sum to {}, expected {commuting}",
            p.orbit_total()
        )));
    }
    let gens = [
        SL2Matrix::IDENTITY,
        SL2Matrix::S,
        SL2Matrix::T,
        SL2Matrix::S.inverse(),
        SL2Matrix::T.inverse(),
        SL2Matrix::MINUS_IDENTITY,
    ];
    for c in 0..p.len() {
        if p.sl2_act(SL2Matrix::IDENTITY, c)? != c {
            return Ok(Some(format!("{name}: identity moves class {c}")));
        }
        for &a in &gens {
            if !p.sl2_well_defined(a, c) {
                return Ok(Some(format!("{name}: {a} not well defined on class {c}")));
            }
            for pair in &p.classes()[c].orbit {
                let (x, y) = p.act_on_pair(a, *pair);
                if !g.commute(x, y) {
                    return Ok(Some(format!("{name}: {a} breaks commutation")));
                }
            }
            for &b in &gens {
                if p.sl2_act(a * b, c)? != p.sl2_act(a, p.sl2_act(b, c)?)? {
                    return Ok(Some(format!(
                        "{name}: action not compatible with {a} * {b}"
                    )));
                }
            }
        }
    }
    if !p.atlas_covers()? {
        return Ok(Some(format!("{name}: cusp charts miss a class")));
    }
    for x in 0..g.order() {
        let r = devoto_projections(g, x, 1e-10)?;
        if !r.passed {
            return Ok(Some(format!(
                "{name}: projections fail for element {x}: {r:?}"
            )));
        }
    }
    Ok(None)
}

pub fn pairs_suite(_cfg: &VerifyConfig) -> CriterionResult {
    finish(
        7,
        "pairs orbifold",
        (|| {
            let s3 = enumerate_pairs(&symmetric(3)?)?.len();
            let z2 = enumerate_pairs(&cyclic(2)?)?.len();
            if (s3, z2) != (8, 4) {
                return Ok((false, format!("|Pairs(S3)| = {s3}, |Pairs(Z/2)| = {z2}")));
            }
            for g in [symmetric(3)?, dihedral(4)?, quaternion8()?, alternating(4)?] {
                if let Some(msg) = check_group(&g)? {
                    return Ok((false, msg));
                }
            }
            Ok((true, "|Pairs(S3)| = 8, |Pairs(Z/2)| = 4; S3, D4, Q8, A4 pass orbit, action, atlas and projection checks".into()))
        })(),
    )
}

pub fn ogg(cfg: &VerifyConfig) -> CriterionResult {
    let bound = cfg.ogg_bound;
    finish(
        8,
        "Ogg scan",
        (|| {
            let scan = ogg_scan(bound)?;
            let fixture: Vec<u64> = monster_primes()
                .into_iter()
                .filter(|&p| p <= bound)
                .collect();
            Ok(if scan.passing == fixture {
                (true, format!("passing primes <= {bound}: {:?}, equal to the Monster order's prime divisors", scan.passing))
            } else {
                (
                    false,
                    format!("passing {:?}, fixture {:?}", scan.passing, fixture),
                )
            })
        })(),
    )
}

pub fn trees(cfg: &VerifyConfig) -> CriterionResult {
    let (order, oracle_n) = (cfg.tree_order, cfg.tree_oracle);
    finish(
        9,
        "rooted trees",
        (|| {
            let t = solve_tree_equation(order)?;
            let oracle = brute_force_rooted_trees(oracle_n.min(order))?;
            for (i, want) in oracle.iter().enumerate() {
                if t.counts[i] != (*want).into() {
                    return Ok((
                        false,
                        format!(
                            "z^{}: equation gives {}, enumeration {want}",
                            i + 1,
                            t.counts[i]
                        ),
                    ));
                }
            }
            Ok((
                true,
                format!(
                    "agrees with enumeration for n <= {}, integral through z^{order}",
                    oracle.len()
                ),
            ))
        })(),
    )
}

fn random_rational(rng: &mut impl Rng) -> Rational {
    Rational::new(rng.gen_range(-9..=9).into(), rng.gen_range(1..=4).into())
}

pub fn random_series(rng: &mut impl Rng, valuation: i64, max_order: i64) -> LaurentSeries {
    let order = rng.gen_range(valuation.max(0)..=max_order.max(valuation));
    let n = (order - valuation + 1) as usize;
    let mut coeffs: Vec<Rational> = (0..n)
        .map(|_| {
            if rng.gen_bool(0.3) {
                Rational::zero()
            } else {
                random_rational(rng)
            }
        })
        .collect();
    if let Some(c) = coeffs.first_mut() {
        if c.is_zero() {
            *c = Rational::one();
        }
    }
    LaurentSeries::from_coeffs(valuation, coeffs, order)
}

fn exp_log_laws(a: &LaurentSeries, b: &LaurentSeries) -> Result<Option<String>> {
    let (ea, eb) = (a.exp()?, b.exp()?);
    if &ea.log()? != a {
        return Ok(Some(format!("log(exp(a)) != a for {a}")));
    }
    let one_plus = &LaurentSeries::one(a.order()) + a;
    if one_plus.log()?.exp()? != one_plus {
        return Ok(Some(format!("exp(log(1 + a)) != 1 + a for {a}")));
    }
    if (a + b).exp()? != &ea * &eb {
        return Ok(Some(format!("exp(a + b) != exp(a) exp(b) for {a}, {b}")));
    }
    Ok(None)
}

/// First failing ring, inverse or exp/log law in one random case, if any.
pub fn kernel_case(rng: &mut impl Rng, max_order: i64) -> Option<String> {
    let pick = |rng: &mut ChaCha8Rng| {
        let v = rng.gen_range(-3..=3);
        random_series(rng, v, max_order)
    };
    let mut local = ChaCha8Rng::seed_from_u64(rng.gen());
    let (f, g, h) = (pick(&mut local), pick(&mut local), pick(&mut local));
    if &(&f + &g) + &h != &f + &(&g + &h) || &f + &g != &g + &f {
        return Some(format!("addition laws fail on {f}, {g}, {h}"));
    }
    if &f * &g != &g * &f || &(&f * &g) * &h != &f * &(&g * &h) {
        return Some(format!("multiplication laws fail on {f}, {g}, {h}"));
    }
    if &f * &(&g + &h) != &(&f * &g) + &(&f * &h) {
        return Some(format!("distributivity fails on {f}, {g}, {h}"));
    }
    if !f.add(&f.neg()).is_zero() || &f * &LaurentSeries::one(f.order()) != f {
        return Some(format!("identities fail on {f}"));
    }
    if let Ok(fi) = f.inv() {
        let prod = &f * &fi;
        if prod != LaurentSeries::one(prod.order()) {
            return Some(format!("f * f^-1 != 1 for {f}"));
        }
    }
    let (va, vb) = (local.gen_range(1..=3), local.gen_range(1..=3));
    let a = random_series(&mut local, va, max_order);
    let b = random_series(&mut local, vb, max_order);
    match exp_log_laws(&a, &b) {
        Ok(None) => {}
        Ok(Some(msg)) => return Some(msg),
        Err(e) => return Some(format!("exp/log failed on {a}, {b}: {e}")),
    }
    None
}

pub fn kernel_suite(cfg: &VerifyConfig) -> CriterionResult {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ 0xA5A5);
    for i in 0..cfg.kernel_cases {
        if let Some(msg) = kernel_case(&mut rng, cfg.kernel_max_order) {
            return CriterionResult::new(
                10,
                "series kernel suite",
                false,
                format!("case {i}: {msg}"),
            );
        }
    }
    CriterionResult::new(
        10,
        "series kernel suite",
        true,
        format!(
            "{} random cases through order <= {}",
            cfg.kernel_cases, cfg.kernel_max_order
        ),
    )
}

pub fn run_criterion(id: u8, cfg: &VerifyConfig) -> Option<CriterionResult> {
    Some(match id {
        1 => replicability(cfg),
        2 => theorem(cfg),
        3 => symmetry(cfg),
        4 => modular_kernel(cfg),
        5 => newton_log(cfg),
        6 => lambda_suite(cfg),
        7 => pairs_suite(cfg),
        8 => ogg(cfg),
        9 => trees(cfg),
        10 => kernel_suite(cfg),
        _ => return None,
    })
}

pub fn run_all(cfg: &VerifyConfig) -> Vec<CriterionResult> {
    (1..=10).filter_map(|id| run_criterion(id, cfg)).collect()
}
