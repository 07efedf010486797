//! Exact-arithmetic combinatorics in the exterior algebra Λ ℚ^n.
//!
//! This crate works with homogeneous subspaces of the exterior algebra of
//! ℚ^n through their initial hypergraphs: fixing an invertible matrix `F`
//! whose columns induce the monomial basis `f_A = ⋀_{a∈A} f_a`, every
//! subspace `W ⊆ Λ^r ℚ^n` determines an r-uniform hypergraph of the same
//! size as its dimension (the reverse-colex maxima of its nonzero
//! elements). The crate provides, all over exact rationals:
//!
//! * sparse multivectors, wedge products, frames, and row-reduced
//!   subspaces whose pivot sets are exactly the initial hypergraph
//!   ([`multivector`], [`subspace`], [`frame`]);
//! * hypergraph operators — upper shadows, restrictions, intersecting
//!   predicates, local LYM checks — plus brute-force intersecting-family
//!   oracles ([`hypergraph`], [`oracles`]);
//! * seeded sampling of generic bases with verified genericity
//!   certificates, coordinate projections, lifts `W ∧ Λ^d V`, and the
//!   projection/lift dimensional-fraction bounds ([`generic`],
//!   [`projection`]);
//! * algebraic shifting of uniform hypergraphs ([`shifting`]);
//! * set-pair and subspace-pair systems with the constructive certificate
//!   chain for the weighted skew two-families bound
//!   `Σ 1/C(a_i+b_i, a_i) ≤ 1`, example generators, and brute-force
//!   extremal searches ([`two_families`]).
//!
//! Everything is deterministic: randomness flows from a single 64-bit seed
//! through labeled streams (see [`rng`]), and all reports serialize to
//! stable JSON.
//!
//! The `examples/` directory contains one runnable example per major
//! capability; a thin `extalg` binary exposes the same operations as batch
//! subcommands (see [`cli`]).

// pub mod cli;
pub mod error;
pub mod frame;
pub mod generic;
pub mod hypergraph;
// pub mod json;
pub mod matrix;
pub mod multivector;
pub mod oracles;
pub mod projection;
pub mod rational;
pub mod rng;
pub mod shifting;
pub mod subset;
pub mod subspace;
// pub mod two_families;

pub use error::{Error, Result};
pub use frame::BasisFrame;
pub use hypergraph::Hypergraph;
pub use matrix::RatMatrix;
pub use multivector::MultiVector;
pub use rational::Rational;
pub use subset::SubsetNR;
pub use subspace::Subspace;
