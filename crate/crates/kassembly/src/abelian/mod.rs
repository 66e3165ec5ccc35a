//! Exact arithmetic on the value domain `Z^r ⊕ torsion ⊕ Q^s`, Smith
//! normal form over the integers, and truncated directed colimits.
//!
//! Every value is immutable after construction and every operation is a
//! pure function, so the whole module is freely usable from concurrent
//! contexts.

mod colimit;
mod group;
mod matrix;

pub use colimit::{colimit, factorial_multiplier, DirectedSystem, TransitionRule};
pub use group::{normalize_invariant_factors, ExtAb};
pub use matrix::{cokernel, homology_of_pair, smith_normal_form, IntMatrix, Snf};
