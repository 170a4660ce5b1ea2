//! Exact integer linear algebra and lattice-point enumeration.

mod enumerate;
mod matrix;
mod normal_form;
mod vector;

pub use enumerate::{Constraint, InequalitySystem, LatticePoints, Relation};
pub use matrix::{dual_basis, rank_of, IntMatrix};
pub use normal_form::{hermite_normal_form, smith_normal_form, SmithForm};
pub use vector::{json_int, IntVector};

pub(crate) use matrix::rref;

/// Convenience wrapper around [`IntVector::primitive`].
pub fn primitive(v: &IntVector) -> crate::Result<IntVector> {
    v.primitive()
}

/// Convenience wrapper around [`IntMatrix::determinant`].
pub fn determinant(m: &IntMatrix) -> crate::Result<num_bigint::BigInt> {
    m.determinant()
}

/// Convenience wrapper around [`InequalitySystem::lattice_points`].
pub fn lattice_points(sys: &InequalitySystem) -> LatticePoints {
    sys.lattice_points()
}
