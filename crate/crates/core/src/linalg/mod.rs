//! Exact linear algebra: dense matrices over exact rings and integer
//! matrices with Smith normal form.

mod integer;
mod matrix;

pub use integer::{
    hermite_reduce, integer_kernel, saturated_row_basis, smith_normal_form, IntMatrix, RaggedRows, SmithForm,
};
pub use matrix::ExactMatrix;

/// Square matrix over `Q` or `Q(zeta_5)`.
pub type SquareExactMatrix<R> = ExactMatrix<R>;
