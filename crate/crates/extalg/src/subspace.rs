//! Subspaces of Λ^r ℚ^n kept as row-reduced bases.
//!
//! The basis rows are in reduced row echelon form with respect to the
//! canonical coordinate scan order (reverse colex descending), so the pivot
//! of each row is its initial set, the pivot list is the initial
//! hypergraph, and dim W = |H_F(W)| is structural rather than incidental.

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::frame::BasisFrame;
use crate::hypergraph::Hypergraph;
use crate::multivector::MultiVector;
use crate::rational::Rational;
use crate::subset::SubsetNR;

#[derive(Clone, PartialEq, Eq)]
pub struct Subspace {
    degree: usize,
    frame: BasisFrame,
    rows: Vec<MultiVector>,
    pivots: Vec<SubsetNR>,
}

impl Subspace {
    pub fn zero(frame: &BasisFrame, degree: usize) -> Self {
        Subspace {
            degree,
            frame: frame.clone(),
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    /// Row-reduce the given vectors into a canonical basis. All vectors
    /// must share the frame and degree; the empty input is the zero space.
    pub fn span(frame: &BasisFrame, degree: usize, vectors: &[MultiVector]) -> Result<Self> {
        for v in vectors {
            frame.check_compatible(v.frame())?;
            if v.degree() != degree {
                return Err(Error::DegreeMismatch {
                    expected: degree,
                    got: v.degree(),
                });
            }
        }
        // Sparse Gauss-Jordan: repeatedly take the row whose leading key is
        // earliest in scan order, normalize, eliminate that key everywhere.
        let mut work: Vec<BTreeMap<SubsetNR, Rational>> = vectors
            .iter()
            .filter(|v| !v.is_zero())
            .map(|v| v.terms().map(|(s, c)| (*s, c.clone())).collect())
            .collect();
        let mut reduced: Vec<BTreeMap<SubsetNR, Rational>> = Vec::new();

        while let Some(best) = (0..work.len())
            .filter(|&i| !work[i].is_empty())
            .min_by_key(|&i| *work[i].keys().next().unwrap())
        {
            let mut pivot_row = work.swap_remove(best);
            let pivot_set = *pivot_row.keys().next().unwrap();
            let lead = pivot_row[&pivot_set].clone();
            let inv = lead.recip();
            for c in pivot_row.values_mut() {
                *c *= &inv;
            }
            for other in work.iter_mut().chain(reduced.iter_mut()) {
                if let Some(factor) = other.get(&pivot_set).cloned() {
                    for (set, coeff) in &pivot_row {
                        let delta = &factor * coeff;
                        match other.entry(*set) {
                            std::collections::btree_map::Entry::Vacant(e) => {
                                if !delta.is_zero() {
                                    e.insert(-delta);
                                }
                            }
                            std::collections::btree_map::Entry::Occupied(mut e) => {
                                *e.get_mut() -= delta;
                                if e.get().is_zero() {
                                    e.remove();
                                }
                            }
                        }
                    }
                }
            }
            reduced.push(pivot_row);
            work.retain(|r| !r.is_empty());
        }

        reduced.sort_by_key(|row| *row.keys().next().unwrap());
        let pivots: Vec<SubsetNR> = reduced
            .iter()
            .map(|row| *row.keys().next().unwrap())
            .collect();
        let rows = reduced
            .into_iter()
            .map(|terms| MultiVector::from_terms(frame, degree, terms).expect("reduced row"))
            .collect();
        Ok(Subspace {
            degree,
            frame: frame.clone(),
            rows,
            pivots,
        })
    }

    /// The monomial space F(𝒜) = span{f_A : A ∈ 𝒜} for a uniform family.
    pub fn monomial_space(frame: &BasisFrame, family: &Hypergraph) -> Result<Self> {
        if family.ground_n() != frame.ground_n() {
            return Err(Error::GroundMismatch {
                left: family.ground_n(),
                right: frame.ground_n(),
            });
        }
        let Some(rank) = family.uniform_rank() else {
            return Err(Error::NonUniform);
        };
        let rows: Vec<MultiVector> = family
            .edges()
            .map(|a| MultiVector::monomial(frame, *a))
            .collect();
        Self::span(frame, rank, &rows)
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn ground_n(&self) -> usize {
        self.frame.ground_n()
    }

    pub fn frame(&self) -> &BasisFrame {
        &self.frame
    }

    pub fn basis_rows(&self) -> &[MultiVector] {
        &self.rows
    }

    pub fn pivots(&self) -> &[SubsetNR] {
        &self.pivots
    }

    /// The initial hypergraph H_F(W): exactly the pivot sets.
    pub fn initial_hypergraph(&self) -> Hypergraph {
        Hypergraph::with_rank(self.ground_n(), self.degree, self.pivots.iter().copied())
            .expect("pivots are degree-uniform")
    }

    /// Reduce w against the basis; the remainder is zero iff w ∈ W.
    pub fn reduce(&self, w: &MultiVector) -> Result<MultiVector> {
        self.frame.check_compatible(w.frame())?;
        if w.degree() != self.degree {
            return Err(Error::DegreeMismatch {
                expected: self.degree,
                got: w.degree(),
            });
        }
        let mut rem = w.clone();
        for (row, pivot) in self.rows.iter().zip(&self.pivots) {
            let c = rem.coeff(pivot);
            if !c.is_zero() {
                rem = rem.sub(&row.scale(&c))?;
            }
        }
        Ok(rem)
    }

    pub fn contains(&self, w: &MultiVector) -> Result<bool> {
        Ok(self.reduce(w)?.is_zero())
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.frame.check_compatible(&other.frame)?;
        let mut rows = self.rows.clone();
        rows.extend(other.rows.iter().cloned());
        Self::span(&self.frame, self.degree, &rows)
    }

    /// dim(U ∩ W) = dim U + dim W − dim(U + W).
    pub fn intersection_dim(&self, other: &Subspace) -> Result<usize> {
        let total = self.sum(other)?.dim();
        Ok(self.dim() + other.dim() - total)
    }

    /// True iff v ∧ w = 0 for all v, w in the space. Bilinearity reduces
    /// this to basis pairs; the diagonal i = j is included because w ∧ w
    /// can be nonzero in even degree.
    pub fn is_self_annihilating(&self) -> bool {
        for i in 0..self.rows.len() {
            for j in i..self.rows.len() {
                if !self.rows[i]
                    .wedge(&self.rows[j])
                    .expect("same frame")
                    .is_zero()
                {
                    return false;
                }
            }
        }
        true
    }

    /// True iff u ∧ w = 0 for all u ∈ self, w ∈ other.
    pub fn is_mutually_annihilating(&self, other: &Subspace) -> Result<bool> {
        self.frame.check_compatible(&other.frame)?;
        for u in &self.rows {
            for w in &other.rows {
                if !u.wedge(w)?.is_zero() {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Re-express every basis row in another frame and re-span there.
    pub fn to_frame(&self, target: &BasisFrame) -> Result<Subspace> {
        let rows: Vec<MultiVector> = self
            .rows
            .iter()
            .map(|r| r.to_frame(target))
            .collect::<Result<_>>()?;
        Self::span(target, self.degree, &rows)
    }

    /// span{v ∧ z : z ∈ Λ^{d} of the frame}, the annihilator-style space
    /// generated by one vector; for d = r − 1 this is the extremal
    /// self-annihilating subspace of Λ^r.
    pub fn vector_wedge_power(v: &MultiVector, d: usize) -> Result<Subspace> {
        let frame = v.frame().clone();
        let n = frame.ground_n();
        let rows: Vec<MultiVector> = SubsetNR::level(n, d)
            .into_iter()
            .map(|k| v.wedge(&MultiVector::monomial(&frame, k)))
            .collect::<Result<_>>()?;
        Self::span(&frame, v.degree() + d, &rows)
    }
}

impl std::fmt::Debug for Subspace {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "Subspace(dim {}, deg {}, pivots {:?})",
            self.dim(),
            self.degree,
            self.pivots
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat_int;

    fn s(n: usize, elems: &[usize]) -> SubsetNR {
        SubsetNR::from_elems(n, elems).unwrap()
    }

    fn mono(f: &BasisFrame, elems: &[usize]) -> MultiVector {
        MultiVector::monomial(f, s(f.ground_n(), elems))
    }

    #[test]
    fn span_hand_rref() {
        let f = BasisFrame::standard(3);
        let v1 = mono(&f, &[1, 2]).add(&mono(&f, &[1, 3])).unwrap();
        let v2 = mono(&f, &[1, 3]);
        let w = Subspace::span(&f, 2, &[v1, v2]).unwrap();
        assert_eq!(w.dim(), 2);
        assert_eq!(w.pivots(), &[s(3, &[1, 2]), s(3, &[1, 3])]);
        // fully reduced: first row is exactly e_{1,2}
        assert_eq!(w.basis_rows()[0], mono(&f, &[1, 2]));
    }

    #[test]
    fn span_empty_and_full() {
        let f = BasisFrame::standard(4);
        assert_eq!(Subspace::span(&f, 2, &[]).unwrap().dim(), 0);
        let all: Vec<MultiVector> = SubsetNR::level(4, 2)
            .into_iter()
            .map(|a| MultiVector::monomial(&f, a))
            .collect();
        assert_eq!(Subspace::span(&f, 2, &all).unwrap().dim(), 6);
    }

    #[test]
    fn monomial_space_round_trip() {
        let f = BasisFrame::standard(4);
        let fam = Hypergraph::with_rank(4, 2, [s(4, &[1, 2]), s(4, &[1, 3])]).unwrap();
        let w = Subspace::monomial_space(&f, &fam).unwrap();
        assert_eq!(w.dim(), 2);
        assert_eq!(w.initial_hypergraph(), fam);

        let empty = Hypergraph::with_rank(4, 2, []).unwrap();
        let z = Subspace::monomial_space(&f, &empty).unwrap();
        assert_eq!(z.dim(), 0);
        assert!(z.initial_hypergraph().is_empty());
    }

    #[test]
    fn self_annihilating_examples() {
        let f = BasisFrame::standard(4);
        // v ∧ Λ^1 for v = e_1 + 2e_2
        let v = mono(&f, &[1]).add(&mono(&f, &[2]).scale(&rat_int(2))).unwrap();
        let w = Subspace::vector_wedge_power(&v, 1).unwrap();
        assert_eq!(w.dim(), 3);
        assert!(w.is_self_annihilating());

        // full top-half level: r > n/2
        let full: Vec<MultiVector> = SubsetNR::level(4, 3)
            .into_iter()
            .map(|a| MultiVector::monomial(&f, a))
            .collect();
        let top = Subspace::span(&f, 3, &full).unwrap();
        assert!(top.is_self_annihilating());

        let bad = Subspace::span(&f, 2, &[mono(&f, &[1, 2]), mono(&f, &[3, 4])]).unwrap();
        assert!(!bad.is_self_annihilating());
    }

    #[test]
    fn mutually_annihilating_examples() {
        let f = BasisFrame::standard(5);
        let v = mono(&f, &[1]).add(&mono(&f, &[3])).unwrap();
        let u = Subspace::vector_wedge_power(&v, 1).unwrap();
        let w = Subspace::vector_wedge_power(&v, 2).unwrap();
        assert!(u.is_mutually_annihilating(&w).unwrap());
        assert!(u.is_mutually_annihilating(&u).unwrap());

        let a = Subspace::span(&f, 1, &[mono(&f, &[1])]).unwrap();
        let b = Subspace::span(&f, 1, &[mono(&f, &[2])]).unwrap();
        assert!(!a.is_mutually_annihilating(&b).unwrap());
    }

    #[test]
    fn membership_and_intersection() {
        let f = BasisFrame::standard(4);
        let w = Subspace::span(
            &f,
            2,
            &[
                mono(&f, &[1, 2]).add(&mono(&f, &[3, 4])).unwrap(),
                mono(&f, &[1, 3]),
            ],
        )
        .unwrap();
        assert!(w
            .contains(&mono(&f, &[1, 2]).add(&mono(&f, &[3, 4])).unwrap())
            .unwrap());
        assert!(!w.contains(&mono(&f, &[1, 2])).unwrap());

        let u = Subspace::span(&f, 2, &[mono(&f, &[1, 3]), mono(&f, &[1, 4])]).unwrap();
        assert_eq!(w.intersection_dim(&u).unwrap(), 1);
    }

    #[test]
    fn dim_is_frame_invariant() {
        let f = BasisFrame::standard(3);
        let g = BasisFrame::from_matrix(crate::matrix::RatMatrix::from_i64_rows(&[
            &[1, 2, 0],
            &[0, 1, 1],
            &[1, 0, 1],
        ]))
        .unwrap();
        let w = Subspace::span(
            &f,
            2,
            &[mono(&f, &[1, 2]).add(&mono(&f, &[2, 3])).unwrap()],
        )
        .unwrap();
        let wg = w.to_frame(&g).unwrap();
        assert_eq!(wg.dim(), w.dim());
        assert_eq!(wg.to_frame(&f).unwrap(), w);
    }
}
