//! Homogeneous multivectors: sparse elements of Λ^r ℚ^n in a fixed frame.
//!
//! A multivector stores a map from r-subsets to nonzero rationals; the
//! degree survives even when every coefficient cancels. Keys iterate in
//! canonical scan order (reverse colex descending), so the first key of a
//! nonzero multivector is its initial set.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::frame::BasisFrame;
use crate::rational::Rational;
use crate::subset::SubsetNR;

#[derive(Clone, PartialEq, Eq)]
pub struct MultiVector {
    degree: usize,
    frame: BasisFrame,
    terms: BTreeMap<SubsetNR, Rational>,
}

/// Wedge of two monomials: zero when the index sets meet, otherwise the
/// signed union. The sign is the parity of the permutation sorting the
/// concatenation (A ascending, then B ascending).
pub fn wedge_monomials(a: &SubsetNR, b: &SubsetNR) -> Option<(i8, SubsetNR)> {
    if a.intersects(b) {
        return None;
    }
    let sign = if a.inversions_against(b) % 2 == 0 {
        1
    } else {
        -1
    };
    Some((sign, a.union(b)))
}

impl MultiVector {
    pub fn zero(frame: &BasisFrame, degree: usize) -> Self {
        MultiVector {
            degree,
            frame: frame.clone(),
            terms: BTreeMap::new(),
        }
    }

    /// The frame monomial f_A.
    pub fn monomial(frame: &BasisFrame, set: SubsetNR) -> Self {
        assert_eq!(set.ground_n(), frame.ground_n(), "ground set mismatch");
        let mut terms = BTreeMap::new();
        terms.insert(set, Rational::one());
        MultiVector {
            degree: set.card(),
            frame: frame.clone(),
            terms,
        }
    }

    /// The scalar c ∈ Λ^0, keyed by the empty set.
    pub fn scalar(frame: &BasisFrame, c: Rational) -> Self {
        let mut mv = Self::zero(frame, 0);
        if !c.is_zero() {
            mv.terms.insert(SubsetNR::empty(frame.ground_n()), c);
        }
        mv
    }

    pub fn from_terms<I>(frame: &BasisFrame, degree: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (SubsetNR, Rational)>,
    {
        let mut mv = Self::zero(frame, degree);
        for (set, coeff) in terms {
            if set.ground_n() != frame.ground_n() {
                return Err(Error::GroundMismatch {
                    left: set.ground_n(),
                    right: frame.ground_n(),
                });
            }
            if set.card() != degree {
                return Err(Error::DegreeMismatch {
                    expected: degree,
                    got: set.card(),
                });
            }
            mv.add_term(set, coeff);
        }
        Ok(mv)
    }

    /// Degree-1 vector from coordinates in this frame.
    pub fn vector_from_coords(frame: &BasisFrame, coords: &[Rational]) -> Self {
        assert_eq!(coords.len(), frame.ground_n());
        let n = frame.ground_n();
        let terms = coords.iter().enumerate().filter_map(|(i, c)| {
            (!c.is_zero())
                .then(|| (SubsetNR::from_elems(n, &[i + 1]).unwrap(), c.clone()))
        });
        Self::from_terms(frame, 1, terms).expect("singleton terms")
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn ground_n(&self) -> usize {
        self.frame.ground_n()
    }

    pub fn frame(&self) -> &BasisFrame {
        self.frame_ref()
    }

    fn frame_ref(&self) -> &BasisFrame {
        &self.frame
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&SubsetNR, &Rational)> {
        self.terms.iter()
    }

    pub fn support(&self) -> impl Iterator<Item = &SubsetNR> {
        self.terms.keys()
    }

    pub fn coeff(&self, set: &SubsetNR) -> Rational {
        self.terms.get(set).cloned().unwrap_or_else(Rational::zero)
    }

    fn add_term(&mut self, set: SubsetNR, coeff: Rational) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(set) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += coeff;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// The reverse-colex maximum of the support, in this frame.
    pub fn initial_set(&self) -> Result<SubsetNR> {
        // Scan order is revcolex-descending, so the first key is the max.
        self.terms.keys().next().copied().ok_or(Error::ZeroVector)
    }

    pub fn add(&self, other: &MultiVector) -> Result<MultiVector> {
        self.frame.check_compatible(&other.frame)?;
        if self.degree != other.degree {
            return Err(Error::DegreeMismatch {
                expected: self.degree,
                got: other.degree,
            });
        }
        let mut out = self.clone();
        for (set, coeff) in &other.terms {
            out.add_term(*set, coeff.clone());
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Rational) -> MultiVector {
        if c.is_zero() {
            return Self::zero(&self.frame, self.degree);
        }
        let mut out = self.clone();
        for coeff in out.terms.values_mut() {
            *coeff *= c;
        }
        out
    }

    pub fn sub(&self, other: &MultiVector) -> Result<MultiVector> {
        self.add(&other.scale(&-Rational::one()))
    }

    /// Bilinear wedge product; zero when every term cancels or the
    /// combined degree exceeds n.
    pub fn wedge(&self, other: &MultiVector) -> Result<MultiVector> {
        self.frame.check_compatible(&other.frame)?;
        let degree = self.degree + other.degree;
        let mut out = Self::zero(&self.frame, degree);
        if degree > self.ground_n() {
            return Ok(out);
        }
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                if let Some((sign, union)) = wedge_monomials(a, b) {
                    let mut c = ca * cb;
                    if sign < 0 {
                        c = -c;
                    }
                    out.add_term(union, c);
                }
            }
        }
        Ok(out)
    }

    /// Coordinates in the frame's monomial basis along the canonical scan
    /// order of the r-level (dense).
    pub fn dense_coords(&self, level: &[SubsetNR]) -> Vec<Rational> {
        level.iter().map(|a| self.coeff(a)).collect()
    }

    /// The same abstract element of Λ^r, re-expressed in another frame of
    /// equal ground dimension: standard coordinates are compound(F, r) times
    /// the F-coordinates, and compound(G, r)⁻¹ = compound(G⁻¹, r) pulls them
    /// back into the target frame G.
    pub fn to_frame(&self, target: &BasisFrame) -> Result<MultiVector> {
        if self.ground_n() != target.ground_n() {
            return Err(Error::GroundMismatch {
                left: self.ground_n(),
                right: target.ground_n(),
            });
        }
        if self.frame.same_frame(target) {
            return Ok(self.clone());
        }
        let r = self.degree;
        let level = SubsetNR::level(self.ground_n(), r);
        let mut coords = self.dense_coords(&level);
        if !self.frame.is_standard() {
            coords = self.frame.compound(r)?.mul_vec(&coords);
        }
        if !target.is_standard() {
            coords = target.inverse_compound(r)?.mul_vec(&coords);
        }
        let terms = level.into_iter().zip(coords);
        Self::from_terms(target, r, terms)
    }
}

impl std::fmt::Debug for MultiVector {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return write!(f, "0 (deg {})", self.degree);
        }
        for (i, (set, coeff)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{coeff}·f{set}")?;
        }
        Ok(())
    }
}
