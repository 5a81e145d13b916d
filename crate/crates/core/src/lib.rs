//! Random walks on groups equipped with unitary representations.
//!
//! The crate simulates the random products `gₙ = wₙ ⋯ w₂ w₁` of i.i.d.
//! increments and studies the matrix coefficients `⟨π(gₙ)u, v⟩` along
//! sample paths, together with exact tools that do not need sampling:
//!
//! - [`padic`]: fixed-precision ℚ_p arithmetic and its standard additive
//!   character.
//! - [`group`]: finite Cayley-table groups, ℤ, and the affine group over ℚ_p;
//!   subgroup and normal closures, quotients.
//! - [`measure`]: finitely supported probability measures, exact
//!   convolution powers, total variation, adaptedness checks.
//! - [`rep`]: finite-dimensional unitary representations, invariant
//!   subspaces, and the induced representation of the p-adic affine group
//!   with its Følner vectors.
//! - [`walk`]: reproducible Monte Carlo path sampling and coefficient
//!   trajectories.
//! - [`analysis`]: convergence curves, rate-of-mixing tests, the quotient
//!   equivalence check and the regular-representation decay on ℤ.
//! - [`experiment`]: config-driven scenarios that write CSV/JSON artifacts;
//!   the `grwalk` binary is a thin wrapper around it.

pub mod analysis;
pub mod experiment;
pub mod group;
pub mod measure;
pub mod padic;
pub mod rep;
pub mod walk;
