//! Small permutation groups with every element materialized.

use std::collections::{HashMap, HashSet, VecDeque};

use crate::error::{Error, Result};

/// Default cap on `|G|`; override with `MOONSHINE_MAX_GROUP_ORDER`.
pub const DEFAULT_MAX_GROUP_ORDER: usize = 10_000;
pub const MAX_GROUP_ORDER_ENV: &str = "MOONSHINE_MAX_GROUP_ORDER";

pub fn max_group_order() -> usize {
    std::env::var(MAX_GROUP_ORDER_ENV)
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(DEFAULT_MAX_GROUP_ORDER)
}

const TABLE_LIMIT: usize = 2048;

/// A permutation of `{0, .., n-1}` stored as its image tuple.
pub type Perm = Vec<usize>;

pub fn identity(n: usize) -> Perm {
    (0..n).collect()
}

/// `(a * b)(x) = a(b(x))`.
pub fn compose(a: &[usize], b: &[usize]) -> Perm {
    b.iter().map(|&x| a[x]).collect()
}

pub fn invert(a: &[usize]) -> Perm {
    let mut inv = vec![0; a.len()];
    for (i, &x) in a.iter().enumerate() {
        inv[x] = i;
    }
    inv
}

/// Parses a product of cycles such as `(0 1 2)(3,4)` on `degree` points.
pub fn parse_cycles(s: &str, degree: usize) -> Result<Perm> {
    let mut perm = identity(degree);
    let mut rest = s.trim();
    while !rest.is_empty() {
        let Some(open) = rest.strip_prefix('(') else {
            return Err(Error::GroupSpec(format!("expected '(' in {s:?}")));
        };
        let close = open
            .find(')')
            .ok_or_else(|| Error::GroupSpec(format!("unclosed cycle in {s:?}")))?;
        let points: Vec<usize> = open[..close]
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(|t| {
                t.parse::<usize>()
                    .map_err(|_| Error::GroupSpec(format!("bad point {t:?} in {s:?}")))
            })
            .collect::<Result<_>>()?;
        if points.iter().any(|&p| p >= degree) {
            return Err(Error::GroupSpec(format!("point out of range in {s:?}")));
        }
        let mut seen = points.clone();
        seen.sort_unstable();
        seen.dedup();
        if seen.len() != points.len() {
            return Err(Error::GroupSpec(format!("repeated point in cycle {s:?}")));
        }
        let mut cycle = identity(degree);
        for (i, &p) in points.iter().enumerate() {
            cycle[p] = points[(i + 1) % points.len()];
        }
        // cycles are applied left to right as written; any order works for disjoint cycles
        perm = compose(&cycle, &perm);
        rest = open[close + 1..].trim_start();
    }
    Ok(perm)
}

#[derive(Clone, Debug)]
pub struct PermGroup {
    name: String,
    degree: usize,
    generators: Vec<Perm>,
    /// All elements, sorted by image tuple. Index 0 is the identity.
    elements: Vec<Perm>,
    index: HashMap<Perm, usize>,
    /// Cayley table, only for groups up to `TABLE_LIMIT` elements.
    table: Option<Vec<u32>>,
    inverses: Vec<usize>,
}

impl PermGroup {
    /// Closes the generators under composition.
    pub fn generate(name: impl Into<String>, degree: usize, generators: Vec<Perm>) -> Result<Self> {
        Self::generate_with_limit(name, degree, generators, max_group_order())
    }

    pub fn generate_with_limit(
        name: impl Into<String>,
        degree: usize,
        generators: Vec<Perm>,
        limit: usize,
    ) -> Result<Self> {
        if degree == 0 {
            return Err(Error::GroupSpec("degree must be positive".into()));
        }
        for g in &generators {
            let mut img = g.clone();
            img.sort_unstable();
            if g.len() != degree || img != identity(degree) {
                return Err(Error::GroupSpec(format!(
                    "{g:?} is not a permutation of {degree} points"
                )));
            }
        }
        let id = identity(degree);
        let mut seen: HashSet<Perm> = HashSet::new();
        seen.insert(id.clone());
        let mut queue = VecDeque::from([id]);
        while let Some(x) = queue.pop_front() {
            for g in &generators {
                let y = compose(g, &x);
                if !seen.contains(&y) {
                    if seen.len() >= limit {
                        return Err(Error::GroupTooLarge {
                            order: seen.len() + 1,
                            limit,
                        });
                    }
                    seen.insert(y.clone());
                    queue.push_back(y);
                }
            }
        }
        let mut elements: Vec<Perm> = seen.into_iter().collect();
        elements.sort();
        let index: HashMap<Perm, usize> = elements
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, p)| (p, i))
            .collect();
        let n = elements.len();
        let table = (n <= TABLE_LIMIT).then(|| {
            let mut t = Vec::with_capacity(n * n);
            for a in &elements {
                for b in &elements {
                    t.push(index[&compose(a, b)] as u32);
                }
            }
            t
        });
        let inverses = elements.iter().map(|p| index[&invert(p)]).collect();
        Ok(PermGroup {
            name: name.into(),
            degree,
            generators,
            elements,
            index,
            table,
            inverses,
        })
    }

    /// Builds a group from a spec string: `sym:N`, `alt:N`, `cyclic:N`,
    /// `dihedral:N` (order `2N`), `quaternion8`, or
    /// `perm:<g1>;<g2>;...` with each generator a product of cycles.
    pub fn from_spec(spec: &str) -> Result<Self> {
        let spec = spec.trim();
        let (kind, arg) = spec.split_once(':').unwrap_or((spec, ""));
        let num = || -> Result<usize> {
            arg.trim()
                .parse::<usize>()
                .ok()
                .filter(|&n| n >= 1)
                .ok_or_else(|| Error::GroupSpec(format!("{spec:?} needs a positive integer")))
        };
        match kind {
            "sym" => symmetric(num()?),
            "alt" => alternating(num()?),
            "cyclic" => cyclic(num()?),
            "dihedral" => dihedral(num()?),
            "quaternion8" if arg.is_empty() => quaternion8(),
            "perm" => {
                let gens: Vec<&str> = arg
                    .split(';')
                    .map(str::trim)
                    .filter(|g| !g.is_empty())
                    .collect();
                let degree = gens
                    .iter()
                    .flat_map(|g| g.split(|c: char| !c.is_ascii_digit()))
                    .filter_map(|t| t.parse::<usize>().ok())
                    .max()
                    .map_or(1, |m| m + 1);
                let perms = gens
                    .iter()
                    .map(|g| parse_cycles(g, degree))
                    .collect::<Result<Vec<_>>>()?;
                PermGroup::generate(spec, degree, perms)
            }
            _ => Err(Error::GroupSpec(format!("unknown group spec {spec:?}"))),
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Perm] {
        &self.generators
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn element(&self, i: usize) -> &Perm {
        &self.elements[i]
    }

    pub fn elements(&self) -> &[Perm] {
        &self.elements
    }

    pub fn index_of(&self, p: &[usize]) -> Result<usize> {
        self.index.get(p).copied().ok_or(Error::NotInGroup)
    }

    pub fn identity_index(&self) -> usize {
        0
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        match &self.table {
            Some(t) => t[a * self.order() + b] as usize,
            None => self.index[&compose(&self.elements[a], &self.elements[b])],
        }
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverses[a]
    }

    pub fn pow(&self, a: usize, n: i64) -> usize {
        let base = if n < 0 { self.inv(a) } else { a };
        let mut e = n.unsigned_abs();
        let mut acc = 0;
        let mut b = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, b);
            }
            b = self.mul(b, b);
            e >>= 1;
        }
        acc
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut n = 1;
        while x != 0 {
            x = self.mul(x, a);
            n += 1;
        }
        n
    }

    /// `g x g^-1`.
    pub fn conjugate(&self, x: usize, g: usize) -> usize {
        self.mul(self.mul(g, x), self.inv(g))
    }

    pub fn commute(&self, a: usize, b: usize) -> bool {
        self.mul(a, b) == self.mul(b, a)
    }

    pub fn centralizer(&self, g: usize) -> Vec<usize> {
        (0..self.order()).filter(|&h| self.commute(g, h)).collect()
    }

    /// Conjugacy classes of the subgroup `sub` (conjugation by `sub` only),
    /// each sorted, listed in order of their least element.
    pub fn conjugacy_classes_within(&self, sub: &[usize]) -> Vec<Vec<usize>> {
        let mut assigned = vec![false; self.order()];
        let mut classes = Vec::new();
        for &x in sub {
            if assigned[x] {
                continue;
            }
            let mut class: Vec<usize> = sub.iter().map(|&g| self.conjugate(x, g)).collect();
            class.sort_unstable();
            class.dedup();
            for &y in &class {
                assigned[y] = true;
            }
            classes.push(class);
        }
        classes
    }

    pub fn conjugacy_classes(&self) -> Vec<Vec<usize>> {
        let all: Vec<usize> = (0..self.order()).collect();
        self.conjugacy_classes_within(&all)
    }
}

pub fn symmetric(n: usize) -> Result<PermGroup> {
    let mut gens = Vec::new();
    if n >= 2 {
        let mut swap = identity(n);
        swap.swap(0, 1);
        gens.push(swap);
        let cycle: Perm = (0..n).map(|i| (i + 1) % n).collect();
        gens.push(cycle);
    }
    PermGroup::generate(format!("sym:{n}"), n, gens)
}

pub fn alternating(n: usize) -> Result<PermGroup> {
    // 3-cycles (0 1 i) generate A_n
    let gens = (2..n)
        .map(|i| {
            let mut p = identity(n);
            p[0] = 1;
            p[1] = i;
            p[i] = 0;
            p
        })
        .collect();
    PermGroup::generate(format!("alt:{n}"), n, gens)
}

pub fn cyclic(n: usize) -> Result<PermGroup> {
    let cycle: Perm = (0..n).map(|i| (i + 1) % n).collect();
    PermGroup::generate(format!("cyclic:{n}"), n, vec![cycle])
}

/// Symmetries of a regular `n`-gon, order `2n`. For `n <= 2` the action is on
/// the `n` vertices plus whatever degree makes the group faithful.
pub fn dihedral(n: usize) -> Result<PermGroup> {
    if n <= 2 {
        // D_1 = Z/2, D_2 = Klein four group
        let gens = if n == 1 {
            vec![vec![1, 0]]
        } else {
            vec![vec![1, 0, 3, 2], vec![2, 3, 0, 1]]
        };
        return PermGroup::generate(format!("dihedral:{n}"), gens[0].len(), gens);
    }
    let rot: Perm = (0..n).map(|i| (i + 1) % n).collect();
    let refl: Perm = (0..n).map(|i| (n - i) % n).collect();
    PermGroup::generate(format!("dihedral:{n}"), n, vec![rot, refl])
}

/// The quaternion group acting on itself by left multiplication.
pub fn quaternion8() -> Result<PermGroup> {
    // points: 2*u + s, u in {1, i, j, k} = 0..4, s = 0 for +, 1 for -
    const UNIT: [[(usize, bool); 4]; 4] = [
        [(0, false), (1, false), (2, false), (3, false)],
        [(1, false), (0, true), (3, false), (2, true)],
        [(2, false), (3, true), (0, true), (1, false)],
        [(3, false), (2, false), (1, true), (0, true)],
    ];
    let left = |u: usize| -> Perm {
        (0..8)
            .map(|p| {
                let (v, s) = (p / 2, p % 2 == 1);
                let (w, neg) = UNIT[u][v];
                2 * w + usize::from(neg ^ s)
            })
            .collect()
    };
    PermGroup::generate("quaternion8", 8, vec![left(1), left(2)])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn group_orders() {
        assert_eq!(symmetric(1).unwrap().order(), 1);
        assert_eq!(symmetric(3).unwrap().order(), 6);
        assert_eq!(symmetric(4).unwrap().order(), 24);
        assert_eq!(alternating(4).unwrap().order(), 12);
        assert_eq!(alternating(5).unwrap().order(), 60);
        assert_eq!(cyclic(2).unwrap().order(), 2);
        assert_eq!(dihedral(4).unwrap().order(), 8);
        assert_eq!(dihedral(2).unwrap().order(), 4);
        assert_eq!(quaternion8().unwrap().order(), 8);
    }

    #[test]
    fn quaternion_has_one_involution() {
        let q = quaternion8().unwrap();
        let involutions = (0..8).filter(|&x| q.element_order(x) == 2).count();
        assert_eq!(involutions, 1);
        let order4 = (0..8).filter(|&x| q.element_order(x) == 4).count();
        assert_eq!(order4, 6);
    }

    #[test]
    fn identity_is_first_and_inverses_work() {
        let g = symmetric(4).unwrap();
        assert_eq!(g.element(0), &identity(4));
        for a in 0..g.order() {
            assert_eq!(g.mul(a, g.inv(a)), 0);
            assert_eq!(g.pow(a, g.element_order(a) as i64), 0);
            assert_eq!(g.pow(a, -1), g.inv(a));
        }
    }

    #[test]
    fn class_counts() {
        assert_eq!(symmetric(3).unwrap().conjugacy_classes().len(), 3);
        assert_eq!(symmetric(4).unwrap().conjugacy_classes().len(), 5);
        assert_eq!(alternating(4).unwrap().conjugacy_classes().len(), 4);
        assert_eq!(dihedral(4).unwrap().conjugacy_classes().len(), 5);
        assert_eq!(quaternion8().unwrap().conjugacy_classes().len(), 5);
    }

    #[test]
    fn spec_parsing() {
        assert_eq!(PermGroup::from_spec("sym:3").unwrap().order(), 6);
        assert_eq!(
            PermGroup::from_spec("perm:(0 1 2);(0,1)").unwrap().order(),
            6
        );
        assert_eq!(PermGroup::from_spec("perm:(0 1)(2 3)").unwrap().order(), 2);
        assert!(PermGroup::from_spec("perm:(0 1").is_err());
        assert!(PermGroup::from_spec("perm:(0 0)").is_err());
        assert!(PermGroup::from_spec("bogus:3").is_err());
        assert!(PermGroup::from_spec("sym:x").is_err());
    }

    #[test]
    fn size_limit() {
        let err = PermGroup::generate_with_limit(
            "s5",
            5,
            vec![vec![1, 0, 2, 3, 4], vec![1, 2, 3, 4, 0]],
            100,
        )
        .unwrap_err();
        assert!(matches!(err, Error::GroupTooLarge { limit: 100, .. }));
    }

    #[test]
    fn rejects_non_permutations() {
        assert!(PermGroup::generate("bad", 3, vec![vec![0, 0, 1]]).is_err());
    }
}
