//! Rooted unlabelled trees: the generating function from
//! `T(z) = z exp(sum_{k >= 1} T(z^k) / k)`, and a brute-force count.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::series::LaurentSeries;

pub const MAX_ORACLE_NODES: usize = 10;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TreeSeries {
    pub order: usize,
    /// `counts[n - 1]` is the coefficient of `z^n`.
    pub counts: Vec<BigInt>,
    /// Passes of the fixed-point map until the coefficients stopped moving.
    pub iterations: usize,
}

impl TreeSeries {
    pub fn count(&self, n: usize) -> Option<&BigInt> {
        n.checked_sub(1).and_then(|i| self.counts.get(i))
    }
}

/// One pass of `T -> z exp(sum_k T(z^k) / k)`, truncated at `z^order`.
pub fn tree_step(t: &LaurentSeries, order: i64) -> Result<LaurentSeries> {
    let mut sum = LaurentSeries::zero(order - 1);
    for k in 1..order.max(1) {
        let term = t
            .substitute_power(k as u32)?
            .scale(&BigRational::new(BigInt::one(), BigInt::from(k)));
        sum = sum.add(&term.truncate(order - 1));
    }
    Ok(sum.exp()?.shift(1))
}

pub fn solve_tree_equation(order: usize) -> Result<TreeSeries> {
    if order == 0 {
        return Err(Error::InvalidArgument(
            "tree series order must be at least 1".into(),
        ));
    }
    let n = order as i64;
    let mut t = LaurentSeries::monomial(1, BigRational::one(), n);
    let mut iterations = 0;
    // z^n on the right depends on t_1..t_{n-1} only, so n passes settle everything.
    loop {
        let next = tree_step(&t, n)?;
        iterations += 1;
        if next == t {
            break;
        }
        t = next;
        if iterations > order + 1 {
            return Err(Error::Precision("tree iteration did not stabilize".into()));
        }
    }
    let mut counts = Vec::with_capacity(order);
    for e in 1..=n {
        let c = t.coefficient(e)?;
        if !c.is_integer() || c < BigRational::zero() {
            return Err(Error::TreeIntegrality(e as usize));
        }
        counts.push(c.to_integer());
    }
    Ok(TreeSeries {
        order,
        counts,
        iterations,
    })
}

/// Counts of rooted unlabelled trees on `1..=n_max` nodes, by generating
/// canonical nested-parenthesis encodings.
pub fn brute_force_rooted_trees(n_max: usize) -> Result<Vec<u64>> {
    if n_max > MAX_ORACLE_NODES {
        return Err(Error::TreeOracleBound(n_max));
    }
    // catalog[s] holds every tree with s nodes
    let mut catalog: Vec<Vec<String>> = vec![Vec::new()];
    for size in 1..=n_max {
        let mut found = BTreeSet::new();
        let mut children = Vec::new();
        forests(&catalog, size - 1, &mut children, &mut found);
        catalog.push(found.into_iter().collect());
    }
    Ok(catalog[1..].iter().map(|c| c.len() as u64).collect())
}

/// Every multiset of trees with `remaining` nodes in total, each turned
/// into a rooted tree.
fn forests(
    catalog: &[Vec<String>],
    remaining: usize,
    children: &mut Vec<String>,
    out: &mut BTreeSet<String>,
) {
    if remaining == 0 {
        let mut sorted = children.clone();
        sorted.sort();
        out.insert(format!("({})", sorted.concat()));
        return;
    }
    for (size, trees) in catalog.iter().enumerate().take(remaining + 1).skip(1) {
        for tree in trees {
            // children are generated in non-decreasing (size, encoding) order
            if let Some(last) = children.last() {
                if (size, tree) < (last.len() / 2, last) {
                    continue;
                }
            }
            children.push(tree.clone());
            forests(catalog, remaining - size, children, out);
            children.pop();
        }
    }
}
