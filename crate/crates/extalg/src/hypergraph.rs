//! Hypergraphs on [n] with shadow, restriction, and density operators.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::{binomial_rat, Rational};
use crate::subset::SubsetNR;

/// A family of subsets of [n]. `uniform_rank` is set when every edge has
/// that cardinality; the empty family keeps whatever rank it was declared
/// with (or none).
#[derive(Clone, PartialEq, Eq)]
pub struct Hypergraph {
    ground_n: usize,
    edges: BTreeSet<SubsetNR>,
    uniform_rank: Option<usize>,
}

impl Hypergraph {
    /// Build from edges, inferring uniformity. An empty family gets no rank.
    pub fn from_edges<I>(ground_n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = SubsetNR>,
    {
        let mut set = BTreeSet::new();
        for e in edges {
            if e.ground_n() != ground_n {
                return Err(Error::GroundMismatch {
                    left: e.ground_n(),
                    right: ground_n,
                });
            }
            set.insert(e);
        }
        let mut ranks = set.iter().map(|e| e.card());
        let uniform_rank = match ranks.next() {
            None => None,
            Some(first) => ranks.all(|c| c == first).then_some(first),
        };
        Ok(Hypergraph {
            ground_n,
            edges: set,
            uniform_rank,
        })
    }

    /// Build a uniform family with a declared rank (required for the empty
    /// family, validated otherwise).
    pub fn with_rank<I>(ground_n: usize, rank: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = SubsetNR>,
    {
        let g = Self::from_edges(ground_n, edges)?;
        if g.edges.iter().any(|e| e.card() != rank) {
            return Err(Error::NonUniform);
        }
        Ok(Hypergraph {
            uniform_rank: Some(rank),
            ..g
        })
    }

    /// The complete r-uniform hypergraph on [n].
    pub fn full_level(ground_n: usize, r: usize) -> Self {
        Self::with_rank(ground_n, r, SubsetNR::level(ground_n, r)).expect("level is uniform")
    }

    pub fn ground_n(&self) -> usize {
        self.ground_n
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn uniform_rank(&self) -> Option<usize> {
        self.uniform_rank
    }

    pub fn edges(&self) -> impl Iterator<Item = &SubsetNR> {
        self.edges.iter()
    }

    pub fn contains(&self, e: &SubsetNR) -> bool {
        self.edges.contains(e)
    }

    pub fn is_subfamily_of(&self, other: &Hypergraph) -> bool {
        self.edges.is_subset(&other.edges)
    }

    /// |𝒜| / C(n, r) for a uniform family.
    pub fn density(&self) -> Result<Rational> {
        let r = self.uniform_rank.ok_or(Error::NonUniform)?;
        Ok(Rational::from_integer(self.len().into()) / binomial_rat(self.ground_n, r))
    }

    /// The b-th upper shadow: all (a+b)-sets containing some edge.
    pub fn upper_shadow(&self, b: usize) -> Result<Hypergraph> {
        let a = self.uniform_rank.ok_or(Error::NonUniform)?;
        if a + b > self.ground_n {
            return Err(Error::DegreeOverflow {
                degree: a + b,
                ground_n: self.ground_n,
            });
        }
        let shadow = SubsetNR::level(self.ground_n, a + b)
            .into_iter()
            .filter(|big| self.edges.iter().any(|e| e.is_subset_of(big)));
        Self::with_rank(self.ground_n, a + b, shadow)
    }

    /// Edges contained in B; the ground set is kept (no relabeling), so
    /// reverse-colex positions of surviving edges do not move.
    pub fn restriction(&self, b: &SubsetNR) -> Hypergraph {
        let edges = self
            .edges
            .iter()
            .filter(|e| e.is_subset_of(b))
            .copied()
            .collect::<Vec<_>>();
        Hypergraph {
            ground_n: self.ground_n,
            edges: edges.into_iter().collect(),
            uniform_rank: self.uniform_rank,
        }
    }

    /// Pairwise nonempty intersections, including each edge with itself;
    /// a family containing ∅ is never intersecting, the empty family is.
    pub fn is_intersecting(&self) -> bool {
        for a in &self.edges {
            for b in &self.edges {
                if !a.intersects(b) {
                    return false;
                }
            }
        }
        true
    }

    pub fn is_cross_intersecting(&self, other: &Hypergraph) -> bool {
        for a in &self.edges {
            for b in &other.edges {
                if !a.intersects(b) {
                    return false;
                }
            }
        }
        true
    }
}

/// Exact local LYM comparison for an a-uniform family: the density of the
/// b-th upper shadow against the density of the family.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct LocalLymReport {
    pub shadow_size: usize,
    pub family_size: usize,
    /// |∂ᵇ𝒜| / C(n, a+b) as "p/q"
    pub lhs: String,
    /// |𝒜| / C(n, a) as "p/q"
    pub rhs: String,
    pub holds: bool,
}

pub fn local_lym_check(family: &Hypergraph, b: usize) -> Result<(Rational, Rational, bool)> {
    let a = family.uniform_rank().ok_or(Error::NonUniform)?;
    let n = family.ground_n();
    let shadow = family.upper_shadow(b)?;
    let lhs = Rational::from_integer(shadow.len().into()) / binomial_rat(n, a + b);
    let rhs = Rational::from_integer(family.len().into()) / binomial_rat(n, a);
    let holds = lhs >= rhs;
    Ok((lhs, rhs, holds))
}

/// Among all b-sets B, find one maximizing |ρ_B(𝒜)| / C(b, a) and compare
/// the maximum against the global density |𝒜| / C(n, a). Ties break toward
/// the earliest B in canonical scan order.
pub fn density_projection_bound(
    family: &Hypergraph,
    b: usize,
) -> Result<(SubsetNR, Rational, Rational, bool)> {
    let a = family.uniform_rank().ok_or(Error::NonUniform)?;
    if b < a || b > family.ground_n() {
        return Err(Error::InvalidArgument(format!(
            "restriction size {b} outside [{a}, {}]",
            family.ground_n()
        )));
    }
    let n = family.ground_n();
    let denom = binomial_rat(b, a);
    let mut best: Option<(SubsetNR, Rational)> = None;
    for cand in SubsetNR::level(n, b) {
        let count = family.restriction(&cand).len();
        let ratio = Rational::from_integer(count.into()) / denom.clone();
        match &best {
            Some((_, r)) if *r >= ratio => {}
            _ => best = Some((cand, ratio)),
        }
    }
    let (best_b, max_ratio) = best.expect("at least one candidate");
    let global = Rational::from_integer(family.len().into()) / binomial_rat(n, a);
    let holds = max_ratio >= global;
    Ok((best_b, max_ratio, global, holds))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    fn s(n: usize, elems: &[usize]) -> SubsetNR {
        SubsetNR::from_elems(n, elems).unwrap()
    }

    #[test]
    fn upper_shadow_examples() {
        let single = Hypergraph::with_rank(3, 1, [s(3, &[1])]).unwrap();
        let sh = single.upper_shadow(1).unwrap();
        assert_eq!(
            sh.edges().copied().collect::<Vec<_>>(),
            vec![s(3, &[1, 2]), s(3, &[1, 3])]
        );

        let full = Hypergraph::full_level(4, 1);
        assert_eq!(full.upper_shadow(1).unwrap(), Hypergraph::full_level(4, 2));

        let two = Hypergraph::with_rank(4, 2, [s(4, &[1, 2]), s(4, &[3, 4])]).unwrap();
        assert_eq!(two.upper_shadow(1).unwrap(), Hypergraph::full_level(4, 3));

        assert!(two.upper_shadow(3).is_err());
        let mixed = Hypergraph::from_edges(4, [s(4, &[1]), s(4, &[1, 2])]).unwrap();
        assert!(mixed.upper_shadow(1).is_err());
    }

    #[test]
    fn restriction_examples() {
        let g = Hypergraph::with_rank(4, 2, [s(4, &[1, 2]), s(4, &[2, 3])]).unwrap();
        assert_eq!(g.restriction(&SubsetNR::full(4)), g);
        let r = g.restriction(&s(4, &[1, 2, 4]));
        assert_eq!(r.edges().copied().collect::<Vec<_>>(), vec![s(4, &[1, 2])]);
        assert!(g.restriction(&SubsetNR::empty(4)).is_empty());

        let with_empty = Hypergraph::from_edges(3, [SubsetNR::empty(3)]).unwrap();
        assert_eq!(with_empty.restriction(&SubsetNR::empty(3)).len(), 1);
    }

    #[test]
    fn intersecting_examples() {
        let star = Hypergraph::with_rank(
            4,
            2,
            [s(4, &[1, 2]), s(4, &[1, 3]), s(4, &[1, 4])],
        )
        .unwrap();
        assert!(star.is_intersecting());

        let disjoint = Hypergraph::with_rank(3, 1, [s(3, &[1]), s(3, &[2])]).unwrap();
        assert!(!disjoint.is_intersecting());

        let tri = Hypergraph::with_rank(4, 2, [s(4, &[1, 2]), s(4, &[1, 3]), s(4, &[2, 3])])
            .unwrap();
        assert!(tri.is_intersecting());

        // ∅ kills intersecting; the empty family is vacuously intersecting
        assert!(Hypergraph::with_rank(3, 1, []).unwrap().is_intersecting());
        assert!(!Hypergraph::from_edges(3, [SubsetNR::empty(3)])
            .unwrap()
            .is_intersecting());
    }

    #[test]
    fn cross_intersecting_examples() {
        let a = Hypergraph::with_rank(4, 2, [s(4, &[1, 2]), s(4, &[1, 3])]).unwrap();
        let b = Hypergraph::with_rank(4, 2, [s(4, &[1, 4])]).unwrap();
        assert!(a.is_cross_intersecting(&b));
        let c = Hypergraph::with_rank(4, 2, [s(4, &[3, 4])]).unwrap();
        assert!(!a.is_cross_intersecting(&c));
    }

    #[test]
    fn local_lym_examples() {
        let full = Hypergraph::full_level(4, 2);
        let (lhs, rhs, holds) = local_lym_check(&full, 1).unwrap();
        assert!(holds);
        assert_eq!(lhs, rhs);

        let empty = Hypergraph::with_rank(3, 1, []).unwrap();
        let (lhs, rhs, holds) = local_lym_check(&empty, 1).unwrap();
        assert!(holds);
        assert_eq!(lhs, rat(0, 1));
        assert_eq!(rhs, rat(0, 1));

        let single = Hypergraph::with_rank(3, 1, [s(3, &[1])]).unwrap();
        let (lhs, rhs, holds) = local_lym_check(&single, 1).unwrap();
        assert_eq!(lhs, rat(2, 3));
        assert_eq!(rhs, rat(1, 3));
        assert!(holds);
    }

    #[test]
    fn density_projection_examples() {
        let full = Hypergraph::full_level(4, 2);
        let (_, max_ratio, global, holds) = density_projection_bound(&full, 3).unwrap();
        assert!(holds);
        assert_eq!(max_ratio, global);

        let single = Hypergraph::with_rank(4, 2, [s(4, &[1, 2])]).unwrap();
        let (best, max_ratio, global, holds) = density_projection_bound(&single, 2).unwrap();
        assert_eq!(best, s(4, &[1, 2]));
        assert_eq!(max_ratio, rat(1, 1));
        assert_eq!(global, rat(1, 6));
        assert!(holds);
    }

    #[test]
    fn density_of_full_level_is_one() {
        assert_eq!(Hypergraph::full_level(5, 2).density().unwrap(), rat(1, 1));
    }
}

impl std::fmt::Debug for Hypergraph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Hypergraph(n={}, {{", self.ground_n)?;
        for (i, e) in self.edges.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "}})")
    }
}
