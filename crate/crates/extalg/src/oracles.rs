//! Brute-force extremal oracles for intersecting families.
//!
//! These are independent small-n searches, used to cross-check the
//! algebraic dimension bounds: maximum intersecting r-uniform families
//! (the Erdős–Ko–Rado bound C(n−1, r−1) for r ≤ n/2), the global maximum
//! 2^{n−1}, and the maximum product |𝒜||ℬ| over cross-intersecting pairs.
//!
//! The uniform/global searches are branch and bound over families in
//! canonical candidate order. Finding the maximum uses symmetry pruning at
//! the root only: relabeling the ground set lets some maximum family
//! contain the canonical prefix set of one of its cardinalities, so root
//! branches are restricted to prefix sets. Witness enumeration then reruns
//! unpruned at the known maximum, so results are deterministic: the
//! maximum plus all maximum families in lexicographic order.

use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;
use crate::rational::binomial_usize;
use crate::subset::SubsetNR;

/// Exhaustive-mode cap for the uniform intersecting oracle.
pub const EKR_UNIFORM_CAP: usize = 7;
/// Exhaustive-mode cap for the all-cardinalities intersecting oracle.
pub const EKR_GLOBAL_CAP: usize = 5;
/// Cap for the cross-intersecting product oracle.
pub const CROSS_CAP: usize = 5;

fn family_from_bits(n: usize, bits: &[u32]) -> Hypergraph {
    Hypergraph::from_edges(n, bits.iter().map(|&b| SubsetNR::from_bits(n, b)))
        .expect("bits stay inside ground set")
}

/// Max-size search over pairwise-intersecting subfamilies of `cands`
/// (candidates in ascending order). `roots`, when given, restricts the
/// first chosen candidate.
fn find_max_intersecting(cands: &[u32], roots: Option<&[u32]>) -> usize {
    fn go(depth: usize, cands: &[u32], best: &mut usize) {
        if depth > *best {
            *best = depth;
        }
        for (i, &c) in cands.iter().enumerate() {
            if depth + (cands.len() - i) <= *best {
                break;
            }
            let rest: Vec<u32> = cands[i + 1..]
                .iter()
                .copied()
                .filter(|&d| d & c != 0)
                .collect();
            go(depth + 1, &rest, best);
        }
    }

    let mut best = 0usize;
    match roots {
        None => go(0, cands, &mut best),
        Some(roots) => {
            for &root in roots {
                if root == 0 {
                    continue;
                }
                let rest: Vec<u32> = cands
                    .iter()
                    .copied()
                    .filter(|&d| d != root && d & root != 0)
                    .collect();
                go(1, &rest, &mut best);
            }
        }
    }
    best
}

/// All pairwise-intersecting subfamilies of exactly `target` candidates,
/// in lexicographic order of the chosen index sequence.
fn enumerate_max_intersecting(cands: &[u32], target: usize) -> Vec<Vec<u32>> {
    fn go(acc: &mut Vec<u32>, cands: &[u32], target: usize, out: &mut Vec<Vec<u32>>) {
        if acc.len() == target {
            out.push(acc.clone());
            return;
        }
        for (i, &c) in cands.iter().enumerate() {
            if acc.len() + (cands.len() - i) < target {
                break;
            }
            let rest: Vec<u32> = cands[i + 1..]
                .iter()
                .copied()
                .filter(|&d| d & c != 0)
                .collect();
            if acc.len() + 1 + rest.len() >= target {
                acc.push(c);
                go(acc, &rest, target, out);
                acc.pop();
            }
        }
    }
    let mut out = Vec::new();
    if target == 0 {
        out.push(Vec::new());
        return out;
    }
    go(&mut Vec::new(), cands, target, &mut out);
    out
}

/// Maximum intersecting r-uniform family on [n], with every maximum
/// family as witness. For r > n/2 the whole level intersects pairwise.
pub fn ekr_oracle(n: usize, r: usize, cap: usize) -> Result<(usize, Vec<Hypergraph>)> {
    if n > cap {
        return Err(Error::CapExceeded {
            what: "ekr oracle ground dimension",
            value: n,
            cap,
        });
    }
    if r > n {
        return Ok((0, vec![family_from_bits(n, &[])]));
    }
    if r == 0 {
        // {∅} is not intersecting; only the empty family qualifies.
        return Ok((0, vec![family_from_bits(n, &[])]));
    }
    if 2 * r > n {
        return Ok((binomial_usize(n, r), vec![Hypergraph::full_level(n, r)]));
    }
    let cands: Vec<u32> = SubsetNR::level(n, r).iter().map(|s| s.bits()).collect();
    let root = SubsetNR::prefix(n, r).bits();
    let max = find_max_intersecting(&cands, Some(&[root]));
    let witnesses = enumerate_max_intersecting(&cands, max)
        .into_iter()
        .map(|bits| family_from_bits(n, &bits))
        .collect();
    Ok((max, witnesses))
}

/// Maximum intersecting family of arbitrary nonempty subsets of [n], with
/// all maximum families as witnesses; the maximum is 2^{n−1}.
pub fn intersecting_max_all(n: usize, cap: usize) -> Result<(usize, Vec<Hypergraph>)> {
    if n > cap {
        return Err(Error::CapExceeded {
            what: "global intersecting oracle ground dimension",
            value: n,
            cap,
        });
    }
    let cands: Vec<u32> = (1..(1u32 << n)).collect();
    let roots: Vec<u32> = (1..=n).map(|k| SubsetNR::prefix(n, k).bits()).collect();
    let max = find_max_intersecting(&cands, Some(&roots));
    let witnesses = enumerate_max_intersecting(&cands, max)
        .into_iter()
        .map(|bits| family_from_bits(n, &bits))
        .collect();
    Ok((max, witnesses))
}

/// Maximum of |𝒜||ℬ| over cross-intersecting pairs, 𝒜 r-uniform and ℬ
/// s-uniform on [n]. For a fixed 𝒜 the best ℬ is forced (every s-set
/// meeting all of 𝒜), so the search runs over 𝒜 alone with the product
/// as bound. Returns the earliest maximizing pair in lexicographic order.
pub fn cross_product_oracle(
    n: usize,
    r: usize,
    s: usize,
    cap: usize,
) -> Result<(usize, Hypergraph, Hypergraph)> {
    if n > cap {
        return Err(Error::CapExceeded {
            what: "cross-intersecting oracle ground dimension",
            value: n,
            cap,
        });
    }
    let level_r: Vec<u32> = SubsetNR::level(n, r).iter().map(|x| x.bits()).collect();
    let level_s: Vec<u32> = SubsetNR::level(n, s).iter().map(|x| x.bits()).collect();

    struct Search {
        best: usize,
        best_a: Vec<u32>,
        best_b: Vec<u32>,
    }

    fn go(
        acc: &mut Vec<u32>,
        cands: &[u32],
        compatible_b: Vec<u32>,
        search: &mut Search,
    ) {
        let value = acc.len() * compatible_b.len();
        if value > search.best {
            search.best = value;
            search.best_a = acc.clone();
            search.best_b = compatible_b.clone();
        }
        for (i, &c) in cands.iter().enumerate() {
            // adding sets can only shrink the compatible ℬ side
            let upper = (acc.len() + cands.len() - i) * compatible_b.len();
            if upper <= search.best {
                break;
            }
            let next_b: Vec<u32> = compatible_b
                .iter()
                .copied()
                .filter(|&b| b & c != 0)
                .collect();
            if next_b.is_empty() {
                continue;
            }
            acc.push(c);
            go(acc, &cands[i + 1..], next_b, search);
            acc.pop();
        }
    }

    let mut search = Search {
        best: 0,
        best_a: Vec::new(),
        best_b: Vec::new(),
    };
    go(&mut Vec::new(), &level_r, level_s, &mut search);
    Ok((
        search.best,
        family_from_bits(n, &search.best_a),
        family_from_bits(n, &search.best_b),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ekr_small_values() {
        let (max, wits) = ekr_oracle(4, 2, EKR_UNIFORM_CAP).unwrap();
        assert_eq!(max, 3);
        assert!(wits.iter().all(|w| w.len() == 3 && w.is_intersecting()));
        // n = 2r: one choice from each complementary pair
        assert_eq!(wits.len(), 8);

        let (max, _) = ekr_oracle(5, 2, EKR_UNIFORM_CAP).unwrap();
        assert_eq!(max, 4);

        // r > n/2: everything intersects
        let (max, wits) = ekr_oracle(4, 3, EKR_UNIFORM_CAP).unwrap();
        assert_eq!(max, 4);
        assert_eq!(wits.len(), 1);
        assert_eq!(wits[0], Hypergraph::full_level(4, 3));
    }

    #[test]
    fn ekr_stars_unique_below_half() {
        // r < n/2: the only maximum families are the n stars
        let (max, wits) = ekr_oracle(5, 2, EKR_UNIFORM_CAP).unwrap();
        assert_eq!(max, 4);
        assert_eq!(wits.len(), 5);
        for w in &wits {
            let common = w
                .edges()
                .fold(u32::MAX, |acc, e| acc & e.bits());
            assert_eq!(common.count_ones(), 1);
        }
    }

    #[test]
    fn ekr_cap_is_enforced() {
        assert!(matches!(
            ekr_oracle(8, 2, EKR_UNIFORM_CAP),
            Err(Error::CapExceeded { .. })
        ));
    }

    #[test]
    fn global_intersecting_max() {
        for n in 1..=4 {
            let (max, wits) = intersecting_max_all(n, EKR_GLOBAL_CAP).unwrap();
            assert_eq!(max, 1 << (n - 1));
            assert!(wits.iter().all(|w| w.is_intersecting()));
        }
        // number of maximum families = maximal intersecting families
        let (_, wits) = intersecting_max_all(3, EKR_GLOBAL_CAP).unwrap();
        assert_eq!(wits.len(), 4);
    }

    #[test]
    fn cross_product_values() {
        let (v, a, b) = cross_product_oracle(4, 2, 2, CROSS_CAP).unwrap();
        assert_eq!(v, 9);
        assert!(a.is_cross_intersecting(&b));

        let (v, _, _) = cross_product_oracle(4, 1, 2, CROSS_CAP).unwrap();
        assert_eq!(v, 3);

        let (v, a, b) = cross_product_oracle(2, 1, 1, CROSS_CAP).unwrap();
        assert_eq!(v, 1);
        assert_eq!(a, b);
    }
}
