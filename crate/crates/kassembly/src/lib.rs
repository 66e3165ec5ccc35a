//! Exact computation of algebraic K-groups of group rings `k[G]` for
//! torsionfree abelian `G = Z^a ⊕ Q^b` over a finite field `k = F_q`.
//!
//! The pipeline runs entirely in exact integer arithmetic on isomorphism
//! classes of abelian groups of the form `Z^r ⊕ Z/d₁ ⊕ … ⊕ Z/d_t ⊕ Q^s`:
//!
//! 1. [`kfield`] — Quillen's K-theory of finite fields, the coefficient
//!    spectrum's homotopy groups.
//! 2. [`homology`] — group homology `H_p(BG; A)` by the exterior-algebra
//!    formula, cross-checked by Koszul-complex and directed-colimit oracles.
//! 3. [`ahss`] — the Atiyah-Hirzebruch E² page `E²_{p,q} = H_p(BG; K_q(k))`,
//!    degree-reason differential analysis, and the abutment with a
//!    conservative extension solver.
//! 4. [`assembly`] — Farrell-Jones assembly `K_n(k[G]) ≅ H_n(BG; K(k))`,
//!    the smashing-localization check `k ⊗^L_R k ≃ k` via Tor vanishing,
//!    and the relative K-groups `K_*(R, k)` from the augmentation fiber
//!    sequence.
//!
//! Everything rests on [`abelian`]: Smith normal form over `Z`, cokernels,
//! tensor/Tor₁ arithmetic in invariant-factor form, and truncated directed
//! colimits with declared generating rules. [`oracle`] holds the
//! presentation-matrix routes used to validate the closed-form arithmetic.
//!
//! # Examples
//!
//! Each major capability has a runnable example:
//!
//! ```text
//! cargo run --example quillen_k            # K_*(F_q) tables
//! cargo run --example smith_normal_form    # SNF, unimodular factors, cokernels
//! cargo run --example colimit_of_rationals # Q as a directed colimit, torsion death
//! cargo run --example group_homology       # H_*(BG; A) for G = Q, Z^2, Z ⊕ Q
//! cargo run --example koszul_vs_formula    # oracle cross-checks
//! cargo run --example smashing_check       # Tor witnesses for k ⊗^L_R k ≃ k
//! cargo run --example e2_page              # the E² diagram and differential report
//! cargo run --example assemble_group_ring  # K_*(F₂[Q]) end to end
//! cargo run --example relative_k_groups    # K_*(R, k): Q in degree 1, 0 elsewhere
//! ```
//!
//! The `kassembly` binary exposes the same pipeline as subcommands
//! (`kfield`, `homology`, `tor`, `smashing`, `e2`, `assemble`, `relative`)
//! with `table` and `json` output.

pub mod abelian;
pub mod ahss;
pub mod assembly;
pub mod cli;
mod error;
pub mod homology;
pub mod kfield;
pub mod oracle;
pub mod render;

pub use error::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
