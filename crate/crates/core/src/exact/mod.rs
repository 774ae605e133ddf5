//! Exact arithmetic substrate, generic over the scalar type.

pub mod elimination;
pub mod lattice;
pub mod matrix;
pub mod poly;
pub mod ratfn;
pub mod scalar;
pub mod univariate;

pub use elimination::{
    determinant, is_positroid, maximal_minors, rank, rowspan_equal, rref, Echelon,
};
pub use lattice::{hermite_normal_form, kernel_lattice, lattice_index, smith_form, Hermite, Smith};
