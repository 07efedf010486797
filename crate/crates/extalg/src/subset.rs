//! Subsets of [n] = {1, …, n} and the reverse colex order.
//!
//! Reverse colex compares equal-size sets: A > B exactly when the largest
//! element of the symmetric difference A △ B lies in B. The maximum of the
//! r-element level is {1, …, r}. Stored as bitmasks, this coincides with
//! *ascending* integer order on the mask, so the derived `Ord` enumerates
//! each level from the reverse-colex maximum downward. That enumeration is
//! the one global coordinate scan order used everywhere: matrix columns,
//! compound indices, and row-reduction pivots all agree with it, which is
//! what makes pivot sets equal initial sets.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};
use crate::rational::binomial_usize;

/// A subset of {1, …, ground_n}, at most 32 elements.
#[derive(Copy, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SubsetNR {
    bits: u32,
    ground_n: u32,
}

pub const MAX_GROUND: usize = 32;

impl SubsetNR {
    pub fn empty(ground_n: usize) -> Self {
        assert!(ground_n <= MAX_GROUND, "ground set too large");
        SubsetNR {
            bits: 0,
            ground_n: ground_n as u32,
        }
    }

    pub fn full(ground_n: usize) -> Self {
        assert!(ground_n <= MAX_GROUND);
        let bits = if ground_n == 32 {
            u32::MAX
        } else {
            (1u32 << ground_n) - 1
        };
        SubsetNR {
            bits,
            ground_n: ground_n as u32,
        }
    }

    /// Build from 1-based elements; duplicates collapse.
    pub fn from_elems(ground_n: usize, elems: &[usize]) -> Result<Self> {
        assert!(ground_n <= MAX_GROUND);
        let mut bits = 0u32;
        for &e in elems {
            if e == 0 || e > ground_n {
                return Err(Error::InvalidArgument(format!(
                    "element {e} outside ground set [{ground_n}]"
                )));
            }
            bits |= 1 << (e - 1);
        }
        Ok(SubsetNR {
            bits,
            ground_n: ground_n as u32,
        })
    }

    pub fn from_bits(ground_n: usize, bits: u32) -> Self {
        assert!(ground_n <= MAX_GROUND);
        if ground_n < 32 {
            assert_eq!(bits >> ground_n, 0, "bits outside ground set");
        }
        SubsetNR {
            bits,
            ground_n: ground_n as u32,
        }
    }

    /// The interval {1, …, k}.
    pub fn prefix(ground_n: usize, k: usize) -> Self {
        assert!(k <= ground_n);
        let bits = if k == 32 { u32::MAX } else { (1u32 << k) - 1 };
        Self::from_bits(ground_n, bits)
    }

    pub fn bits(&self) -> u32 {
        self.bits
    }

    pub fn ground_n(&self) -> usize {
        self.ground_n as usize
    }

    pub fn card(&self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.bits == 0
    }

    pub fn contains(&self, e: usize) -> bool {
        e >= 1 && e <= self.ground_n() && self.bits & (1 << (e - 1)) != 0
    }

    pub fn is_subset_of(&self, other: &SubsetNR) -> bool {
        self.bits & !other.bits == 0
    }

    pub fn intersects(&self, other: &SubsetNR) -> bool {
        self.bits & other.bits != 0
    }

    pub fn union(&self, other: &SubsetNR) -> SubsetNR {
        SubsetNR {
            bits: self.bits | other.bits,
            ground_n: self.ground_n.max(other.ground_n),
        }
    }

    pub fn intersection(&self, other: &SubsetNR) -> SubsetNR {
        SubsetNR {
            bits: self.bits & other.bits,
            ground_n: self.ground_n.max(other.ground_n),
        }
    }

    pub fn difference(&self, other: &SubsetNR) -> SubsetNR {
        SubsetNR {
            bits: self.bits & !other.bits,
            ground_n: self.ground_n,
        }
    }

    pub fn complement(&self) -> SubsetNR {
        SubsetNR {
            bits: Self::full(self.ground_n()).bits & !self.bits,
            ground_n: self.ground_n,
        }
    }

    /// Elements in increasing order, 1-based.
    pub fn members(&self) -> impl Iterator<Item = usize> + '_ {
        let bits = self.bits;
        (1..=self.ground_n()).filter(move |e| bits & (1 << (e - 1)) != 0)
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.members().collect()
    }

    /// Reverse colex comparison within one level: A > B iff max(A △ B) ∈ B.
    pub fn revcolex_cmp(&self, other: &SubsetNR) -> Result<Ordering> {
        if self.card() != other.card() {
            return Err(Error::CardinalityMismatch {
                left: self.card(),
                right: other.card(),
            });
        }
        // Larger bitmask means the top of the symmetric difference is on
        // our side, which makes us revcolex-smaller.
        Ok(other.bits.cmp(&self.bits))
    }

    /// Position of this set in the canonical scan order of its level
    /// (reverse colex descending; {1,…,r} has rank 0). Equals the colex
    /// rank Σ C(a_i − 1, i) over the sorted elements a_1 < … < a_r.
    pub fn level_rank(&self) -> usize {
        self.members()
            .enumerate()
            .map(|(i, a)| binomial_usize(a - 1, i + 1))
            .sum()
    }

    /// All r-subsets of [ground_n] in canonical scan order.
    pub fn level(ground_n: usize, r: usize) -> Vec<SubsetNR> {
        assert!(ground_n <= MAX_GROUND);
        if r > ground_n {
            return Vec::new();
        }
        if r == 0 {
            return vec![SubsetNR::empty(ground_n)];
        }
        let limit = SubsetNR::full(ground_n).bits;
        let mut out = Vec::with_capacity(binomial_usize(ground_n, r));
        let mut v = (1u32 << r) - 1;
        loop {
            out.push(SubsetNR::from_bits(ground_n, v));
            // Gosper's hack: next bitmask with the same popcount.
            let c = v & v.wrapping_neg();
            let rr = v + c;
            if rr > limit || c == 0 {
                break;
            }
            v = (((rr ^ v) >> 2) / c) | rr;
            if v > limit {
                break;
            }
        }
        out
    }

    /// All subsets of [ground_n] (every cardinality), ascending bitmask.
    pub fn power_set(ground_n: usize) -> Vec<SubsetNR> {
        let limit = SubsetNR::full(ground_n).bits as u64;
        (0..=limit)
            .map(|b| SubsetNR::from_bits(ground_n, b as u32))
            .collect()
    }

    /// Number of pairs (a, b) with a ∈ self, b ∈ other, a > b; the wedge
    /// sign of disjoint monomials is (−1) to this count.
    pub fn inversions_against(&self, other: &SubsetNR) -> usize {
        let mut count = 0usize;
        for b in other.members() {
            // elements of self strictly above b
            let above = self.bits & !((1u32 << b) - 1);
            count += above.count_ones() as usize;
        }
        count
    }
}

impl fmt::Debug for SubsetNR {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, e) in self.members().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "}}")
    }
}

impl fmt::Display for SubsetNR {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}
