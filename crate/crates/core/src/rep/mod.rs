//! Unitary representations.
//!
//! Finite-dimensional reps act on `DVector<Complex64>`; the induced
//! representation of the p-adic affine group acts on [`CellVector`]s, a
//! discretisation of L²(ℚ_p*) into valuation shells and unit classes.
//! Inner products are linear in the first argument.

mod induced;
mod matrix;

use nalgebra::DVector;
use num_complex::Complex64;
use thiserror::Error;

pub use induced::{character_sum_oracle, CellVector, FolnerSet, InducedAffineRep, OverflowPolicy};
pub use matrix::{
    invariant_span, orthogonal_invariant_check, FiniteDimRep, MatrixRep, RotationRep,
};

use crate::group::GroupError;
use crate::padic::FieldError;

/// Rank tolerance for invariant subspaces, relative to ‖u‖.
pub const SPAN_TOLERANCE: f64 = 1e-10;

/// Orthogonality tolerance for the invariant-subspace check.
pub const ORTHOGONALITY_TOLERANCE: f64 = 1e-9;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum RepError {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("not unitary or not a homomorphism: {0}")]
    Invalid(String),
    #[error("mass {leaked:e} left the valuation window [{vmin}, {vmax}]")]
    WindowOverflow { leaked: f64, vmin: i64, vmax: i64 },
    #[error("unit depth {depth} cannot resolve the character on shell {shell} (needs {needed})")]
    Resolution { depth: u32, shell: i64, needed: u32 },
    #[error("invariant span did not stabilise within dimension {0}")]
    SpanDiverged(usize),
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Field(#[from] FieldError),
}

/// Vectors of a Hilbert space.
pub trait HilbertVector: Clone + Send + Sync {
    fn inner(&self, other: &Self) -> Result<Complex64, RepError>;

    fn norm(&self) -> f64 {
        self.inner(self).map(|z| z.re.max(0.0).sqrt()).unwrap_or(f64::NAN)
    }
}

impl HilbertVector for DVector<Complex64> {
    fn inner(&self, other: &Self) -> Result<Complex64, RepError> {
        if self.len() != other.len() {
            return Err(RepError::DimensionMismatch {
                expected: self.len(),
                got: other.len(),
            });
        }
        Ok(other.dotc(self))
    }
}

/// A unitary representation `π` of a group with elements `Element`.
pub trait Representation: Sync {
    type Element;
    type Vector: HilbertVector;

    /// `π(g) x`.
    fn apply(&self, g: &Self::Element, x: &Self::Vector) -> Result<Self::Vector, RepError>;

    /// `⟨π(g)u, v⟩`.
    fn matrix_coefficient(
        &self,
        g: &Self::Element,
        u: &Self::Vector,
        v: &Self::Vector,
    ) -> Result<Complex64, RepError> {
        self.apply(g, u)?.inner(v)
    }
}

/// Real vector lifted to a complex column.
pub fn real_vector(xs: &[f64]) -> DVector<Complex64> {
    DVector::from_iterator(xs.len(), xs.iter().map(|&x| Complex64::new(x, 0.0)))
}

/// The `k`-th standard basis vector of ℂ^dim (0-based).
pub fn basis_vector(dim: usize, k: usize) -> DVector<Complex64> {
    let mut v = DVector::zeros(dim);
    v[k] = Complex64::new(1.0, 0.0);
    v
}
