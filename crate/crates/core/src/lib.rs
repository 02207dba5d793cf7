//! Euclidean exterior/Clifford algebra over `R^n` and the calculus of
//! extensors built on it: extension, standard adjoint, generalization,
//! projectors, determinant, inversion and changing-basis extensors.

pub mod blade;
pub mod error;
pub mod extensor;
pub mod frame;
pub mod invariants;
pub mod laws;
pub mod multivector;
pub mod operators;
pub mod oracle;
pub mod random;
pub mod tolerance;

pub use error::{Error, Result};
pub use extensor::{
    AnyExtensor, ComponentKind, ComponentSet, ElementaryKExtensor, Family, GeneralExtensor,
    PqExtensor, SpaceDescriptor, Variance,
};
pub use frame::Frame;
pub use invariants::Pseudoscalar;
pub use multivector::{GradeSet, Involution, Multivector};
pub use operators::{Adjoint, FrameFormula};
pub use tolerance::Tolerance;

/// Largest supported dimension of the underlying vector space.
pub const MAX_DIM: usize = 12;
