//! Conjugacy classes of commuting pairs in a finite group, with the
//! `SL2(Z)` action `[h, g] -> [h^a g^b, h^c g^d]`, Adams operations
//! `[h, g] -> [h^n, g^n]`, cusp charts `h -> [h, g]` on centralizers, and the
//! Devoto eigenspace projections.

mod devoto;
mod group;

pub use devoto::{devoto_projections, CMatrix, DevotoReport};
pub use group::{
    alternating, compose, cyclic, dihedral, identity, invert, max_group_order, parse_cycles,
    quaternion8, symmetric, Perm, PermGroup, DEFAULT_MAX_GROUP_ORDER, MAX_GROUP_ORDER_ENV,
};

use std::collections::HashMap;
use std::fmt;
use std::ops::Mul;

use serde::Serialize;

use crate::error::{Error, Result};

/// An integer matrix of determinant 1.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct SL2Matrix {
    pub a: i64,
    pub b: i64,
    pub c: i64,
    pub d: i64,
}

impl SL2Matrix {
    pub fn new(a: i64, b: i64, c: i64, d: i64) -> Result<Self> {
        if a * d - b * c != 1 {
            return Err(Error::InvalidArgument(format!(
                "[[{a}, {b}], [{c}, {d}]] has determinant {}",
                a * d - b * c
            )));
        }
        Ok(SL2Matrix { a, b, c, d })
    }

    pub const IDENTITY: SL2Matrix = SL2Matrix {
        a: 1,
        b: 0,
        c: 0,
        d: 1,
    };
    pub const MINUS_IDENTITY: SL2Matrix = SL2Matrix {
        a: -1,
        b: 0,
        c: 0,
        d: -1,
    };
    /// `[[0, -1], [1, 0]]`
    pub const S: SL2Matrix = SL2Matrix {
        a: 0,
        b: -1,
        c: 1,
        d: 0,
    };
    /// `[[1, 1], [0, 1]]`
    pub const T: SL2Matrix = SL2Matrix {
        a: 1,
        b: 1,
        c: 0,
        d: 1,
    };

    pub fn translation(n: i64) -> Self {
        SL2Matrix {
            a: 1,
            b: n,
            c: 0,
            d: 1,
        }
    }

    pub fn inverse(self) -> Self {
        SL2Matrix {
            a: self.d,
            b: -self.b,
            c: -self.c,
            d: self.a,
        }
    }
}

impl Mul for SL2Matrix {
    type Output = SL2Matrix;
    fn mul(self, o: SL2Matrix) -> SL2Matrix {
        SL2Matrix {
            a: self.a * o.a + self.b * o.c,
            b: self.a * o.b + self.b * o.d,
            c: self.c * o.a + self.d * o.c,
            d: self.c * o.b + self.d * o.d,
        }
    }
}

impl fmt::Display for SL2Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[[{}, {}], [{}, {}]]", self.a, self.b, self.c, self.d)
    }
}

/// A commuting pair `(h, g)` of element indices.
pub type Pair = (usize, usize);

/// One conjugacy class of commuting pairs.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PairClass {
    /// Least pair of the orbit in the group's element order.
    pub representative: Pair,
    /// Every pair in the class, sorted.
    pub orbit: Vec<Pair>,
}

/// `Pairs_G`: all classes of commuting pairs of a group.
#[derive(Clone, Debug)]
pub struct PairsOrbifold {
    group: PermGroup,
    classes: Vec<PairClass>,
    class_of: HashMap<Pair, usize>,
}

/// Enumerates the classes of commuting pairs under simultaneous conjugation.
pub fn enumerate_pairs(group: &PermGroup) -> Result<PairsOrbifold> {
    let limit = max_group_order();
    if group.order() > limit {
        return Err(Error::GroupTooLarge {
            order: group.order(),
            limit,
        });
    }
    let n = group.order();
    let mut class_of: HashMap<Pair, usize> = HashMap::new();
    let mut classes = Vec::new();
    // (h, g) visited in lexicographic order, so the first member found is the least.
    for h in 0..n {
        for g in 0..n {
            if !group.commute(h, g) || class_of.contains_key(&(h, g)) {
                continue;
            }
            let mut orbit: Vec<Pair> = (0..n)
                .map(|x| (group.conjugate(h, x), group.conjugate(g, x)))
                .collect();
            orbit.sort_unstable();
            orbit.dedup();
            let id = classes.len();
            for p in &orbit {
                class_of.insert(*p, id);
            }
            classes.push(PairClass {
                representative: (h, g),
                orbit,
            });
        }
    }
    Ok(PairsOrbifold {
        group: group.clone(),
        classes,
        class_of,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct ChartEntry {
    /// Least element of the centralizer class `[h]`.
    pub h: usize,
    /// The centralizer class of `h`, as element indices.
    pub h_class: Vec<usize>,
    /// Index of the pair class `[h, g]`.
    pub pair_class: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct CuspChart {
    pub g: usize,
    pub centralizer_order: usize,
    pub entries: Vec<ChartEntry>,
}

impl PairsOrbifold {
    pub fn group(&self) -> &PermGroup {
        &self.group
    }

    pub fn classes(&self) -> &[PairClass] {
        &self.classes
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    /// Class index of a commuting pair.
    pub fn class_of(&self, p: Pair) -> Result<usize> {
        self.class_of.get(&p).copied().ok_or_else(|| {
            Error::InvalidArgument(format!("({}, {}) is not a commuting pair", p.0, p.1))
        })
    }

    /// Number of commuting pairs, as the total size of all orbits.
    pub fn orbit_total(&self) -> usize {
        self.classes.iter().map(|c| c.orbit.len()).sum()
    }

    /// `[h, g] -> [h^a g^b, h^c g^d]` on a single pair.
    pub fn act_on_pair(&self, m: SL2Matrix, (h, g): Pair) -> Pair {
        let grp = &self.group;
        (
            grp.mul(grp.pow(h, m.a), grp.pow(g, m.b)),
            grp.mul(grp.pow(h, m.c), grp.pow(g, m.d)),
        )
    }

    /// The `SL2(Z)` action on classes, through the stored representative.
    pub fn sl2_act(&self, m: SL2Matrix, class: usize) -> Result<usize> {
        let rep = self.classes[class].representative;
        self.class_of(self.act_on_pair(m, rep))
    }

    /// Whether acting on every member of the class lands in one class.
    pub fn sl2_well_defined(&self, m: SL2Matrix, class: usize) -> bool {
        let target = self.sl2_act(m, class).ok();
        self.classes[class]
            .orbit
            .iter()
            .all(|&p| self.class_of(self.act_on_pair(m, p)).ok() == target)
    }

    /// Adams operation `[h, g] -> [h^n, g^n]`.
    pub fn adams_on_pairs(&self, n: i64, class: usize) -> Result<usize> {
        let (h, g) = self.classes[class].representative;
        self.class_of((self.group.pow(h, n), self.group.pow(g, n)))
    }

    /// Partition of the classes into `SL2(Z)` orbits, generated by `S` and `T`.
    pub fn sl2_orbits(&self) -> Result<Vec<Vec<usize>>> {
        let mut seen = vec![false; self.len()];
        let mut orbits = Vec::new();
        for start in 0..self.len() {
            if seen[start] {
                continue;
            }
            let mut orbit = vec![start];
            seen[start] = true;
            let mut i = 0;
            while i < orbit.len() {
                let c = orbit[i];
                for m in [SL2Matrix::S, SL2Matrix::T] {
                    let next = self.sl2_act(m, c)?;
                    if !seen[next] {
                        seen[next] = true;
                        orbit.push(next);
                    }
                }
                i += 1;
            }
            orbit.sort_unstable();
            orbits.push(orbit);
        }
        Ok(orbits)
    }

    /// The chart `[h] -> [h, g]` from conjugacy classes of `C_G(g)`.
    pub fn cusp_chart(&self, g: usize) -> Result<CuspChart> {
        if g >= self.group.order() {
            return Err(Error::NotInGroup);
        }
        let centralizer = self.group.centralizer(g);
        let entries = self
            .group
            .conjugacy_classes_within(&centralizer)
            .into_iter()
            .map(|h_class| {
                let h = h_class[0];
                Ok(ChartEntry {
                    h,
                    pair_class: self.class_of((h, g))?,
                    h_class,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(CuspChart {
            g,
            centralizer_order: centralizer.len(),
            entries,
        })
    }

    /// One chart per conjugacy class of `G`, centred at its least element.
    pub fn atlas(&self) -> Result<Vec<CuspChart>> {
        self.group
            .conjugacy_classes()
            .iter()
            .map(|c| self.cusp_chart(c[0]))
            .collect()
    }

    /// Whether the chart images together cover every class.
    pub fn atlas_covers(&self) -> Result<bool> {
        let mut hit = vec![false; self.len()];
        for chart in self.atlas()? {
            for e in chart.entries {
                hit[e.pair_class] = true;
            }
        }
        Ok(hit.into_iter().all(|x| x))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn groups() -> Vec<PermGroup> {
        vec![
            symmetric(3).unwrap(),
            dihedral(4).unwrap(),
            quaternion8().unwrap(),
            alternating(4).unwrap(),
        ]
    }

    /// sum over classes [g] of the number of classes of C_G(g)
    fn class_count_oracle(g: &PermGroup) -> usize {
        g.conjugacy_classes()
            .iter()
            .map(|c| g.conjugacy_classes_within(&g.centralizer(c[0])).len())
            .sum()
    }

    #[test]
    fn class_counts() {
        assert_eq!(enumerate_pairs(&symmetric(1).unwrap()).unwrap().len(), 1);
        assert_eq!(enumerate_pairs(&cyclic(2).unwrap()).unwrap().len(), 4);
        let s3 = symmetric(3).unwrap();
        assert_eq!(class_count_oracle(&s3), 8);
        assert_eq!(enumerate_pairs(&s3).unwrap().len(), 8);
        for g in groups() {
            assert_eq!(
                enumerate_pairs(&g).unwrap().len(),
                class_count_oracle(&g),
                "{}",
                g.name()
            );
        }
    }

    #[test]
    fn orbit_sizes_count_commuting_pairs() {
        for g in groups() {
            let p = enumerate_pairs(&g).unwrap();
            let direct = (0..g.order())
                .map(|x| g.centralizer(x).len())
                .sum::<usize>();
            assert_eq!(p.orbit_total(), direct, "{}", g.name());
        }
    }

    #[test]
    fn representatives_are_least() {
        let p = enumerate_pairs(&symmetric(3).unwrap()).unwrap();
        for c in p.classes() {
            assert_eq!(c.representative, c.orbit[0]);
        }
    }

    #[test]
    fn identity_and_translation() {
        let g = symmetric(3).unwrap();
        let p = enumerate_pairs(&g).unwrap();
        for c in 0..p.len() {
            assert_eq!(p.sl2_act(SL2Matrix::IDENTITY, c).unwrap(), c);
            let (h, x) = p.classes()[c].representative;
            let want = p.class_of((g.mul(h, x), x)).unwrap();
            assert_eq!(p.sl2_act(SL2Matrix::T, c).unwrap(), want);
        }
        let trivial = p.class_of((0, 0)).unwrap();
        assert_eq!(
            p.sl2_act(SL2Matrix::MINUS_IDENTITY, trivial).unwrap(),
            trivial
        );
    }

    #[test]
    fn action_axioms_exhaustive() {
        let gens = [
            SL2Matrix::S,
            SL2Matrix::T,
            SL2Matrix::S.inverse(),
            SL2Matrix::T.inverse(),
            SL2Matrix::MINUS_IDENTITY,
        ];
        for g in groups() {
            let p = enumerate_pairs(&g).unwrap();
            for c in 0..p.len() {
                for &a in &gens {
                    assert!(p.sl2_well_defined(a, c));
                    for pair in &p.classes()[c].orbit {
                        let (x, y) = p.act_on_pair(a, *pair);
                        assert!(g.commute(x, y));
                    }
                    for &b in &gens {
                        let lhs = p.sl2_act(a * b, c).unwrap();
                        let rhs = p.sl2_act(a, p.sl2_act(b, c).unwrap()).unwrap();
                        assert_eq!(lhs, rhs, "{} {a} {b}", g.name());
                    }
                }
            }
        }
    }

    #[test]
    fn adams_operations() {
        let g = dihedral(4).unwrap();
        let p = enumerate_pairs(&g).unwrap();
        let trivial = p.class_of((0, 0)).unwrap();
        for c in 0..p.len() {
            assert_eq!(p.adams_on_pairs(1, c).unwrap(), c);
            assert_eq!(
                p.adams_on_pairs(-1, c).unwrap(),
                p.sl2_act(SL2Matrix::MINUS_IDENTITY, c).unwrap()
            );
            let (h, x) = p.classes()[c].representative;
            let kill = (g.element_order(h) * g.element_order(x)) as i64;
            assert_eq!(p.adams_on_pairs(kill, c).unwrap(), trivial);
            assert_eq!(p.adams_on_pairs(0, c).unwrap(), trivial);
            for m in -3..=3i64 {
                for n in -3..=3i64 {
                    let lhs = p
                        .adams_on_pairs(m, p.adams_on_pairs(n, c).unwrap())
                        .unwrap();
                    assert_eq!(lhs, p.adams_on_pairs(m * n, c).unwrap());
                }
            }
        }
    }

    #[test]
    fn charts() {
        let g = symmetric(3).unwrap();
        let p = enumerate_pairs(&g).unwrap();
        let chart = p.cusp_chart(0).unwrap();
        assert_eq!(chart.entries.len(), 3);
        assert_eq!(chart.centralizer_order, 6);
        let three_cycle = (0..6).find(|&x| g.element_order(x) == 3).unwrap();
        let chart = p.cusp_chart(three_cycle).unwrap();
        assert_eq!(chart.centralizer_order, 3);
        assert_eq!(chart.entries.len(), 3);
        // translation by g moves [h, g] to [h g^n, g]
        for e in &chart.entries {
            for n in 0..3 {
                let moved = p
                    .class_of((g.mul(e.h, g.pow(three_cycle, n)), three_cycle))
                    .unwrap();
                let acted = p.sl2_act(SL2Matrix::translation(n), e.pair_class).unwrap();
                assert_eq!(moved, acted);
            }
        }
        for grp in groups() {
            assert!(enumerate_pairs(&grp).unwrap().atlas_covers().unwrap());
        }
    }

    #[test]
    fn sl2_orbits_partition() {
        let p = enumerate_pairs(&symmetric(3).unwrap()).unwrap();
        let orbits = p.sl2_orbits().unwrap();
        let total: usize = orbits.iter().map(Vec::len).sum();
        assert_eq!(total, p.len());
        // the trivial pair is fixed by all of SL2(Z)
        let trivial = p.class_of((0, 0)).unwrap();
        assert!(orbits.contains(&vec![trivial]));
    }

    #[test]
    fn bad_matrix_rejected() {
        assert!(SL2Matrix::new(1, 1, 1, 1).is_err());
        assert_eq!(
            SL2Matrix::new(2, 1, 1, 1).unwrap() * SL2Matrix::new(2, 1, 1, 1).unwrap().inverse(),
            SL2Matrix::IDENTITY
        );
    }
}
