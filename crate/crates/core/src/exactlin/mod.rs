//! Exact linear algebra over ℚ and GF(p).

mod echelon;
mod matrix;
mod space;

pub use echelon::{Echelon, SparseRow};
pub use matrix::{axpy, dot, is_zero_vector, kron_vec, unit_vector, vscale, vsub, zero_vector, Matrix, Vector};
pub use space::{
    hom_from_vector, hom_index, hom_to_vector, intertwiners, is_bijective, module_homs, nonzero_image_witness,
    quotient_by, quotient_by_sparse, solve_conditions, solve_sparse_conditions, QuotientSpace, Subspace,
};
