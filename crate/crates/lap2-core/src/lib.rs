//! Exact-arithmetic toolkit for the Laplacian eigenvalue 2 of unicyclic and
//! bicyclic graphs.
//!
//! The crate builds the graph families in play (cycles, suns, broken suns,
//! `C(T_1,...,T_g)` and one-edge connections of those), computes integral
//! Laplacian eigenvalue multiplicities and characteristic polynomials over
//! arbitrary-precision integers, constructs eigenvalue-2 eigenvector
//! certificates by the structural procedures the families admit, and exposes
//! per-theorem checks that an exhaustive harness can run over enumerated
//! corpora.
//!
//! All verdicts that matter are computed in exact integer or rational
//! arithmetic; floating point appears only in the advisory spectrum used for
//! interlacing checks.
//!
//! The crate is `no_std` (with `alloc`), so the algorithmic kernel can be
//! embedded anywhere; IO, JSON and the CLI live in the companion `lap2-cli`
//! crate.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod checks;
pub mod eigvec;
pub mod exact;
pub mod families;
pub mod graph;
pub mod jacobi;
pub mod matching;
pub mod spectra;

pub use graph::{Graph, GraphClass, GraphError, GraphMeta, JoinEdge};
pub use matching::{Matching, MatchingError};
