//! Exact combinatorics for irreducible representations of `SO(N,1)` with
//! nonsingular integral infinitesimal character.
//!
//! The crate is `no_std` and only needs `alloc`. Everything is computed with
//! integers: half-integers are stored doubled, dimensions and period values
//! use big integers. Nothing here touches floating point.
//!
//! Layout:
//!
//! - [`weights`]: highest weights, infinitesimal characters, interlacing and
//!   the Weyl dimension formula for types B and D.
//! - [`reps`]: Langlands descriptors, enhanced θ-stable parameters
//!   `(weight, height, signature)`, classification of a block, Hasse and
//!   standard sequences.
//! - [`branching`]: the multiplicity decision for `SO(N,1) ↓ SO(N-1,1)`,
//!   enumeration of targets, symmetry breaking diagrams and the tempered
//!   Gross–Prasad check.
//! - [`periods`]: periods, `A_q(λ)` recognition, distinguishing chains and
//!   exact period values.
//! - [`cohomology`]: nonvanishing of bilinear forms on `(g,K)`-cohomology.
//! - [`oracle`]: exhaustive verification suites built on the classical
//!   compact branching rule.
//!
//! Group conventions: a [`GroupTag`] names `SO(N,1)`; `n = N - 1`, the
//! θ-weight has rank `⌊(N+1)/2⌋` and heights run over `0..=⌊N/2⌋`. When `N`
//! is odd the θ-weight must end in `0` (self-dual finite-dimensional
//! representations only).

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod branching;
pub mod cohomology;
mod error;
mod group;
pub mod oracle;
pub mod periods;
pub mod reps;
mod sign;
pub mod weights;

pub use error::{Error, Result};
pub use group::GroupTag;
pub use sign::{Sign, Signature};

pub use branching::{
    branch_enumerate, finite_dim_branch, gp_tempered_check, multiplicity, sb_diagram, Arrow,
    Diagram, FiniteDimComponent,
};
pub use cohomology::{
    bilinear_gate, bilinear_nonzero_trivial_rho, coefficient_weight, pairing, PairingConvention,
    PairingDescriptor, PairingSide,
};
pub use periods::{
    distinguished_subgroup, distinguishing_chain, has_period, is_aq_lambda,
    minimal_k_type_trivial_rho, period_value, AqDescriptor, KType, PeriodValue,
};
pub use reps::{
    classify, enhanced_from_langlands, hasse_sequence, height, langlands_from_enhanced, signature,
    standard_sequence, trivial_rho_member, twist_chi_minus, EnhancedParam, RepDescriptor,
    RepVariant,
};
pub use weights::{
    dominant_weights, enumerate_interlacing, infchar_finite_dim, infchar_principal_series,
    interlaces, validate_weight, weyl_dim, InfChar, Weight,
};
