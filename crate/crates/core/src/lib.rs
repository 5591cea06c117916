//! Rigidity degrees, relative syzygies and rigidity dimensions of the
//! self-injective Nakayama algebras `A(n, m)`.
//!
//! Modules are described by vertices `(x, t)` of the translation quiver
//! `ZA_{m-1}`; see [`quiver`] for the coordinates. [`arith`] holds the Euclidean
//! chain and the closed forms, [`resolution`] the relative syzygy machinery
//! behind `gldim End(M)`, and [`search`] the exhaustive cross-checks.

pub mod arith;
pub mod dim;
pub mod error;
pub mod quiver;
pub mod render;
pub mod resolution;
pub mod search;
pub mod verify;

pub use arith::{
    euclid_chain, rd_closed_form, rigdim_formula, witness_params, ChainInt, EuclidChain, Witness,
};
pub use dim::Dim;
pub use error::{Error, Result};
pub use quiver::{
    canonicalize, ext_nonzero, omega, rd_pair, region_contains, tau, AlgebraParams, Region,
    RegionKind, Vertex,
};
pub use resolution::{
    contains_complete_slice, delta_free, family_n, family_s, gldim_end, knit_step, mdim,
    min_approximation, omega_m, syzygy_shift, t_x, ApproxResult, Direction, GenCogenSet, GlobalDim,
    MdimOutcome,
};
pub use search::{
    brute_force_rigdim, delta_free_scan, rd_of_set, verify_witness, RigdimReport, SearchConfig,
};

/// Euclidean chain over `u64`, the width used by the algebra-level API.
pub type Chain = EuclidChain<u64>;
/// Euclidean chain over `u128`, for parameters whose weighted Fibonacci values overflow `u64`.
pub type WideChain = EuclidChain<u128>;
