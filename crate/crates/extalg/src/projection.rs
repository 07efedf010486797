//! Coordinate projections π_J and lifts W ∧ Λ^d V, with the exact
//! dimensional-fraction bounds relating them.
//!
//! In the frame of the operand, π_J keeps the coordinates indexed inside J
//! and kills the rest; on Λ^r this sends f_A to itself when A ⊆ J and to
//! zero otherwise, so it is an algebra map. The three checks here compare
//! dimensional fractions dim W / C(n, r) exactly:
//!
//! * some projection onto n−d coordinates is at least as dense as W;
//! * the lift W ∧ Λ^d V is at least as dense as the *average* projection,
//!   and for a certified generic frame at least as dense as the front
//!   projection π_{[n−d]};
//! * the lift W ∧ Λ^c V is at least as dense as W itself (local LYM for
//!   dimensional fractions).

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::frame::BasisFrame;
use crate::hypergraph::Hypergraph;
use crate::multivector::MultiVector;
use crate::rational::{binomial_rat, format_rational, Rational};
use crate::subset::SubsetNR;
use crate::subspace::Subspace;

/// Keep the degree-1 coordinates indexed by J.
pub fn project_vector(v: &MultiVector, j: &SubsetNR) -> MultiVector {
    assert_eq!(v.degree(), 1, "project_vector expects a degree-1 operand");
    project_multivector(v, j)
}

/// π_J on Λ^r: f_A survives iff A ⊆ J.
pub fn project_multivector(w: &MultiVector, j: &SubsetNR) -> MultiVector {
    let terms = w
        .terms()
        .filter(|(a, _)| a.is_subset_of(j))
        .map(|(a, c)| (*a, c.clone()));
    MultiVector::from_terms(w.frame(), w.degree(), terms).expect("filtered terms keep degree")
}

/// Span of the projected basis rows.
pub fn project_subspace(w: &Subspace, j: &SubsetNR) -> Subspace {
    let rows: Vec<MultiVector> = w
        .basis_rows()
        .iter()
        .map(|r| project_multivector(r, j))
        .collect();
    Subspace::span(w.frame(), w.degree(), &rows).expect("projection keeps frame and degree")
}

/// span{w ∧ f_K : w basis row, K a d-subset of `within`} in W's frame.
pub fn wedge_with_power_within(w: &Subspace, d: usize, within: &SubsetNR) -> Result<Subspace> {
    let n = w.ground_n();
    if w.degree() + d > n {
        return Err(Error::DegreeOverflow {
            degree: w.degree() + d,
            ground_n: n,
        });
    }
    let frame = w.frame();
    let mut rows = Vec::new();
    for k in SubsetNR::level(n, d) {
        if !k.is_subset_of(within) {
            continue;
        }
        let fk = MultiVector::monomial(frame, k);
        for row in w.basis_rows() {
            rows.push(row.wedge(&fk)?);
        }
    }
    Subspace::span(frame, w.degree() + d, &rows)
}

/// W ∧ Λ^d V over the whole ground set.
pub fn wedge_with_power(w: &Subspace, d: usize) -> Result<Subspace> {
    wedge_with_power_within(w, d, &SubsetNR::full(w.ground_n()))
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ProjectionBoundReport {
    pub dim_w: usize,
    pub codim: usize,
    /// a J of size n−d attaining the maximum projected dimension
    pub best_j: Vec<usize>,
    pub best_dim: usize,
    /// max_J dim π_J(W) / C(n−d, r), as "p/q"
    pub lhs: String,
    /// dim W / C(n, r), as "p/q"
    pub rhs: String,
    pub holds: bool,
}

/// Exhaustively over J of size n−d, verify
/// max_J dim π_J(W)/C(n−d, r) ≥ dim W/C(n, r).
pub fn check_projection_bound(w: &Subspace, d: usize) -> Result<ProjectionBoundReport> {
    let n = w.ground_n();
    let r = w.degree();
    if d > n {
        return Err(Error::InvalidArgument(format!(
            "codimension {d} exceeds n = {n}"
        )));
    }
    if r + d > n {
        return Err(Error::InvalidArgument(format!(
            "projection target has only {} coordinates for degree {r}",
            n - d
        )));
    }
    let mut best: Option<(SubsetNR, usize)> = None;
    for j in SubsetNR::level(n, n - d) {
        let dim = project_subspace(w, &j).dim();
        match best {
            Some((_, b)) if b >= dim => {}
            _ => best = Some((j, dim)),
        }
    }
    let (best_j, best_dim) = best.expect("at least one J");
    let lhs = Rational::from_integer(best_dim.into()) / binomial_rat(n - d, r);
    let rhs = Rational::from_integer(w.dim().into()) / binomial_rat(n, r);
    Ok(ProjectionBoundReport {
        dim_w: w.dim(),
        codim: d,
        best_j: best_j.to_vec(),
        best_dim,
        holds: lhs >= rhs,
        lhs: format_rational(&lhs),
        rhs: format_rational(&rhs),
    })
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct LiftBoundReport {
    pub dim_w: usize,
    pub lift_degree: usize,
    pub dim_lift: usize,
    /// dim(W ∧ Λ^d V) / C(n, r+d), as "p/q"
    pub lhs: String,
    /// average over J of size n−d of dim π_J(W) / C(n−d, r), as "p/q"
    pub average_rhs: String,
    /// dim π_{[n−d]}(W) / C(n−d, r), as "p/q"
    pub front_rhs: String,
    pub holds_average: bool,
    /// expected to hold for certified generic frames, where the front
    /// projection attains the maximum
    pub holds_front: bool,
}

/// Verify dim(W∧Λ^d V)/C(n, r+d) against both the average projected
/// fraction (holds for every frame) and the front projection π_{[n−d]}
/// (attains the maximum for certified generic frames).
pub fn check_lift_bound(w: &Subspace, d: usize) -> Result<LiftBoundReport> {
    let n = w.ground_n();
    let r = w.degree();
    if r + d > n {
        return Err(Error::DegreeOverflow {
            degree: r + d,
            ground_n: n,
        });
    }
    let lift = wedge_with_power(w, d)?;
    let lhs = Rational::from_integer(lift.dim().into()) / binomial_rat(n, r + d);

    let mut total = Rational::from_integer(0.into());
    let level = SubsetNR::level(n, n - d);
    let count = level.len();
    let mut front_dim = 0usize;
    let front = SubsetNR::prefix(n, n - d);
    for j in level {
        let dim = project_subspace(w, &j).dim();
        if j == front {
            front_dim = dim;
        }
        total += Rational::from_integer(dim.into());
    }
    let denom = binomial_rat(n - d, r);
    let average_rhs = total / (Rational::from_integer(count.into()) * denom.clone());
    let front_rhs = Rational::from_integer(front_dim.into()) / denom;

    Ok(LiftBoundReport {
        dim_w: w.dim(),
        lift_degree: d,
        dim_lift: lift.dim(),
        holds_average: lhs >= average_rhs,
        holds_front: lhs >= front_rhs,
        lhs: format_rational(&lhs),
        average_rhs: format_rational(&average_rhs),
        front_rhs: format_rational(&front_rhs),
    })
}

/// Local LYM for dimensional fractions:
/// dim(W ∧ Λ^c V)/C(n, r+c) ≥ dim W/C(n, r).
pub fn ext_lym_check(w: &Subspace, c: usize) -> Result<(Rational, Rational, bool)> {
    let n = w.ground_n();
    let r = w.degree();
    if r + c > n {
        return Err(Error::DegreeOverflow {
            degree: r + c,
            ground_n: n,
        });
    }
    let lift = wedge_with_power(w, c)?;
    let lhs = Rational::from_integer(lift.dim().into()) / binomial_rat(n, r + c);
    let rhs = Rational::from_integer(w.dim().into()) / binomial_rat(n, r);
    let holds = lhs >= rhs;
    Ok((lhs, rhs, holds))
}

/// The initial hypergraph of the lift contains the upper shadow of the
/// initial hypergraph: H(W ∧ Λ^c V) ⊇ ∂^c H(W).
pub fn initial_shadow_containment(w: &Subspace, c: usize) -> Result<bool> {
    let lift = wedge_with_power(w, c)?;
    if w.dim() == 0 {
        return Ok(true);
    }
    let shadow = w.initial_hypergraph().upper_shadow(c)?;
    Ok(shadow.is_subfamily_of(&lift.initial_hypergraph()))
}

/// π_{[k]} as a subset, for the nested front projections.
pub fn front(n: usize, k: usize) -> SubsetNR {
    SubsetNR::prefix(n, k)
}

/// The projection of a monomial space is the monomial space of the
/// restriction; exposed for tests and examples.
pub fn monomial_projection_identity(
    frame: &BasisFrame,
    family: &Hypergraph,
    j: &SubsetNR,
) -> Result<bool> {
    let space = Subspace::monomial_space(frame, family)?;
    let lhs = project_subspace(&space, j);
    let rhs = Subspace::monomial_space(frame, &family.restriction(j))?;
    Ok(lhs == rhs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, rat_int};

    fn s(n: usize, elems: &[usize]) -> SubsetNR {
        SubsetNR::from_elems(n, elems).unwrap()
    }

    fn mono(f: &BasisFrame, elems: &[usize]) -> MultiVector {
        MultiVector::monomial(f, s(f.ground_n(), elems))
    }

    #[test]
    fn project_vector_examples() {
        let f = BasisFrame::standard(3);
        let v = mono(&f, &[1])
            .add(&mono(&f, &[2]).scale(&rat_int(2)))
            .unwrap();
        assert_eq!(project_vector(&v, &SubsetNR::full(3)), v);
        assert!(project_vector(&v, &SubsetNR::empty(3)).is_zero());
        let p = project_vector(&v, &s(3, &[2]));
        assert_eq!(p.coeff(&s(3, &[2])), rat_int(2));
        assert_eq!(p.support().count(), 1);
    }

    #[test]
    fn project_multivector_examples() {
        let f = BasisFrame::standard(4);
        let j = s(4, &[1, 2, 3]);
        let a = mono(&f, &[1, 2]);
        assert_eq!(project_multivector(&a, &j), a);
        assert!(project_multivector(&mono(&f, &[1, 4]), &j).is_zero());
        let w = mono(&f, &[1, 2]).add(&mono(&f, &[1, 4])).unwrap();
        assert_eq!(project_multivector(&w, &j), a);
    }

    #[test]
    fn project_subspace_examples() {
        let f = BasisFrame::standard(4);
        let w = Subspace::span(
            &f,
            2,
            &[mono(&f, &[1, 2]).add(&mono(&f, &[3, 4])).unwrap()],
        )
        .unwrap();
        assert_eq!(project_subspace(&w, &SubsetNR::full(4)), w);
        let p = project_subspace(&w, &s(4, &[1, 2, 3]));
        assert_eq!(p.dim(), 1);
        assert_eq!(p.pivots(), &[s(4, &[1, 2])]);
    }

    #[test]
    fn monomial_projection_matches_restriction() {
        let f = BasisFrame::standard(4);
        let fam = Hypergraph::with_rank(4, 2, [s(4, &[1, 2]), s(4, &[2, 4])]).unwrap();
        for j in SubsetNR::power_set(4) {
            assert!(monomial_projection_identity(&f, &fam, &j).unwrap());
        }
    }

    #[test]
    fn wedge_with_power_examples() {
        let f = BasisFrame::standard(4);
        // monomial space: lifting equals the upper shadow space
        let fam = Hypergraph::with_rank(4, 2, [s(4, &[1, 2]), s(4, &[3, 4])]).unwrap();
        let space = Subspace::monomial_space(&f, &fam).unwrap();
        let lift = wedge_with_power(&space, 1).unwrap();
        let shadow_space = Subspace::monomial_space(&f, &fam.upper_shadow(1).unwrap()).unwrap();
        assert_eq!(lift, shadow_space);

        // d = 0 is the identity
        assert_eq!(wedge_with_power(&space, 0).unwrap(), space);

        // span{e12 + e34} wedged with each e_k gives the four independent
        // monomials e134, e234, e123, e124, i.e. all of Λ³
        let w = Subspace::span(
            &f,
            2,
            &[mono(&f, &[1, 2]).add(&mono(&f, &[3, 4])).unwrap()],
        )
        .unwrap();
        assert_eq!(wedge_with_power(&w, 1).unwrap().dim(), 4);

        assert!(matches!(
            wedge_with_power(&w, 3),
            Err(Error::DegreeOverflow { .. })
        ));
    }

    #[test]
    fn projection_bound_trivial_cases() {
        let f = BasisFrame::standard(4);
        let full = Subspace::monomial_space(&f, &Hypergraph::full_level(4, 2)).unwrap();
        let report = check_projection_bound(&full, 1).unwrap();
        assert!(report.holds);
        assert_eq!(report.lhs, report.rhs);

        let zero = Subspace::zero(&f, 2);
        let report = check_projection_bound(&zero, 1).unwrap();
        assert!(report.holds);
        assert_eq!(report.lhs, "0/1");
    }

    #[test]
    fn lift_bound_trivial_cases() {
        let f = BasisFrame::standard(4);
        let w = Subspace::span(
            &f,
            2,
            &[mono(&f, &[1, 2]).add(&mono(&f, &[3, 4])).unwrap()],
        )
        .unwrap();
        let report = check_lift_bound(&w, 0).unwrap();
        assert!(report.holds_average);
        assert_eq!(report.lhs, report.average_rhs);
        assert_eq!(report.lhs, report.front_rhs);
    }

    #[test]
    fn ext_lym_simple() {
        let f = BasisFrame::standard(4);
        let w = Subspace::span(
            &f,
            2,
            &[mono(&f, &[1, 2]).add(&mono(&f, &[3, 4])).unwrap()],
        )
        .unwrap();
        let (lhs, rhs, holds) = ext_lym_check(&w, 1).unwrap();
        assert!(holds);
        assert_eq!(rhs, rat(1, 6));
        assert_eq!(lhs, rat(1, 1));
    }

    #[test]
    fn projection_composition() {
        let f = BasisFrame::standard(5);
        let w = mono(&f, &[1, 3]).add(&mono(&f, &[2, 5])).unwrap();
        let j1 = s(5, &[1, 2, 3, 5]);
        let j2 = s(5, &[1, 3, 4, 5]);
        let a = project_multivector(&project_multivector(&w, &j1), &j2);
        let b = project_multivector(&w, &j1.intersection(&j2));
        assert_eq!(a, b);
    }
}
