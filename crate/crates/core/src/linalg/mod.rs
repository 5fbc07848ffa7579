//! Exact fields, sparse matrices and the elimination primitives everything else uses.

pub mod complex;
pub mod elim;
pub mod field;
pub mod mat;

pub use complex::ChainComplex;
pub use elim::{cokernel, cokernel_data, Cokernel, inverse, kernel_basis, rank, solve, Echelon};
pub use field::{Field, FieldTag, PrimeField, Rationals, Scalar};
pub use mat::{Mat, SpVec};
