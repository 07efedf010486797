//! Algebraic shifting of uniform hypergraphs.
//!
//! The shift of 𝒜 is the initial hypergraph of the standard monomial space
//! span{e_A : A ∈ 𝒜} recomputed in a generic frame. Genericity is sampled
//! and verified: the monomial space rides along in the genericity request,
//! and two independently sampled frames must produce the same shift before
//! it is accepted (disagreement triggers a full resample). The result has
//! exactly |𝒜| edges because initial hypergraphs preserve dimension.

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::generic::{sample_generic_basis, GenericityCertificate, GenericityRequest, SamplerConfig};
use crate::hypergraph::Hypergraph;
use crate::rng::stream;
use crate::subspace::Subspace;

/// How many frame-pair disagreements to tolerate before giving up.
pub const AGREEMENT_RETRY_LIMIT: u32 = 4;

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ShiftReport {
    pub seed: u64,
    /// sub-seeds handed to the two frame samplers per agreement round
    pub frame_seeds: Vec<(u64, u64)>,
    pub agreement_rounds: u32,
    pub certificate: GenericityCertificate,
    pub witness_certificate: GenericityCertificate,
}

fn shift_in_fresh_frame(
    family: &Hypergraph,
    sub_seed: u64,
    config: &SamplerConfig,
) -> Result<(Hypergraph, GenericityCertificate)> {
    let n = family.ground_n();
    let std = crate::frame::BasisFrame::standard(n);
    let space = Subspace::monomial_space(&std, family)?;
    let mut request = GenericityRequest::new(n);
    request.multivector_spaces.push(space.clone());
    let (frame, cert) = sample_generic_basis(&request, sub_seed, config)?;
    let shifted = space.to_frame(&frame)?;
    debug_assert_eq!(shifted.dim(), family.len());
    Ok((shifted.initial_hypergraph(), cert))
}

/// Shift 𝒜 into its generic initial hypergraph. Returns the shift and a
/// report embedding both frames' certificates.
pub fn algebraic_shift(family: &Hypergraph, seed: u64) -> Result<(Hypergraph, ShiftReport)> {
    algebraic_shift_with(family, seed, &SamplerConfig::default())
}

pub fn algebraic_shift_with(
    family: &Hypergraph,
    seed: u64,
    config: &SamplerConfig,
) -> Result<(Hypergraph, ShiftReport)> {
    if family.uniform_rank().is_none() {
        return Err(Error::NonUniform);
    }
    let mut frame_seeds = Vec::new();
    for round in 0..AGREEMENT_RETRY_LIMIT {
        let sa = stream(seed, &format!("shift/{round}/a")).gen::<u64>();
        let sb = stream(seed, &format!("shift/{round}/b")).gen::<u64>();
        frame_seeds.push((sa, sb));
        let (shift_a, cert_a) = shift_in_fresh_frame(family, sa, config)?;
        let (shift_b, cert_b) = shift_in_fresh_frame(family, sb, config)?;
        if shift_a == shift_b {
            return Ok((
                shift_a,
                ShiftReport {
                    seed,
                    frame_seeds,
                    agreement_rounds: round + 1,
                    certificate: cert_a,
                    witness_certificate: cert_b,
                },
            ));
        }
    }
    Err(Error::GenericityFailure {
        attempts: AGREEMENT_RETRY_LIMIT,
        failing: "independently sampled frames kept disagreeing on the shift".into(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::subset::SubsetNR;

    fn s(n: usize, elems: &[usize]) -> SubsetNR {
        SubsetNR::from_elems(n, elems).unwrap()
    }

    #[test]
    fn shift_preserves_size() {
        let fam = Hypergraph::with_rank(4, 2, [s(4, &[1, 3]), s(4, &[2, 4])]).unwrap();
        let (shift, _) = algebraic_shift(&fam, 0).unwrap();
        assert_eq!(shift.len(), fam.len());
        assert_eq!(shift.uniform_rank(), Some(2));
    }

    #[test]
    fn single_edge_shifts_to_prefix() {
        // one generic line in Λ^2 has every coordinate nonzero, so its
        // initial set is the reverse-colex maximum {1, 2}
        let fam = Hypergraph::with_rank(4, 2, [s(4, &[2, 4])]).unwrap();
        let (shift, _) = algebraic_shift(&fam, 1).unwrap();
        let edges: Vec<SubsetNR> = shift.edges().copied().collect();
        assert_eq!(edges, vec![s(4, &[1, 2])]);
    }

    #[test]
    fn full_level_is_fixed() {
        let fam = Hypergraph::full_level(4, 2);
        let (shift, _) = algebraic_shift(&fam, 2).unwrap();
        assert_eq!(shift, fam);
    }

    #[test]
    fn shift_is_deterministic_in_the_seed() {
        let fam = Hypergraph::with_rank(5, 2, [s(5, &[1, 4]), s(5, &[2, 5]), s(5, &[3, 4])])
            .unwrap();
        let (a, ra) = algebraic_shift(&fam, 7).unwrap();
        let (b, rb) = algebraic_shift(&fam, 7).unwrap();
        assert_eq!(a, b);
        assert_eq!(ra.frame_seeds, rb.frame_seeds);
    }

    #[test]
    fn non_uniform_is_rejected() {
        let fam = Hypergraph::from_edges(4, [s(4, &[1]), s(4, &[1, 2])]).unwrap();
        assert!(matches!(algebraic_shift(&fam, 0), Err(Error::NonUniform)));
    }
}
