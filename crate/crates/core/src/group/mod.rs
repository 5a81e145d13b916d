//! Group families: finite Cayley-table groups, the integer lattice ℤ, and
//! the affine group K* ⋉ Kⁿ over ℚ_p.

mod affine;
mod finite;
mod hom;

use std::fmt::Debug;
use std::hash::Hash;

use thiserror::Error;

pub use affine::AffineElement;
pub use finite::{parse_cayley_table, FiniteGroup};
pub use hom::GroupHom;

use crate::padic::FieldError;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum GroupError {
    #[error("not a group: {0}")]
    NotAGroup(String),
    #[error("malformed Cayley table: {0}")]
    Parse(String),
    #[error("element {0} out of range for group of order {1}")]
    OutOfRange(usize, usize),
    #[error("unknown element label {0:?}")]
    UnknownLabel(String),
    #[error("subset is not a normal subgroup")]
    NotNormal,
    #[error("mismatched group family: {0}")]
    FamilyMismatch(String),
    #[error("not a homomorphism: {0}")]
    NotAHomomorphism(String),
    #[error(transparent)]
    Field(#[from] FieldError),
}

/// A group whose operations cannot fail.
pub trait Group: Sync {
    type Element: Clone + Eq + Ord + Hash + Debug + Send + Sync;

    fn identity(&self) -> Self::Element;
    fn mul(&self, a: &Self::Element, b: &Self::Element) -> Self::Element;
    fn inv(&self, a: &Self::Element) -> Self::Element;
}

/// The additive group ℤ with exact integer elements.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct IntegerLattice;

impl Group for IntegerLattice {
    type Element = i64;

    fn identity(&self) -> i64 {
        0
    }

    fn mul(&self, a: &i64, b: &i64) -> i64 {
        a + b
    }

    fn inv(&self, a: &i64) -> i64 {
        -a
    }
}
