//! Exact models of the double covers of symmetric groups.
//!
//! Elements live in a rank-n Clifford algebra over Z[√2, 1/2], with the
//! generator s_i represented by (e_i − e_{i+1})/√2 and the central element
//! z by the scalar −1. Choosing e_i² = −1 gives the cover with s_i² = z,
//! e_i² = +1 the one with s_i² = 1. The crate provides presentation
//! verification, lifts of permutations, conjugacy-class identification and
//! the trace data needed for indicator computations.

mod classdata;
mod clifford;
mod coeff;
mod cover;
mod perm;
mod presentation;

pub use classdata::{squared_cycle_type, CycleTraces};
pub use clifford::{CliffordElement, Cover};
pub use coeff::Sqrt2Dyadic;
pub use cover::{
    canonical_class_lift, class_of, enumerate_group, lift, square_class, ClassLabel, CoverElement,
    CoverError, CLASS_DEGREE_BOUND, ENUMERATION_DEGREE_BOUND,
};
pub use perm::Perm;
pub use presentation::{verify_on_images, verify_presentation, PresentationReport, RelationCheck};
