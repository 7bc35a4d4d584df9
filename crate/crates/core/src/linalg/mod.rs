//! Dense matrices and elimination kernels over exact rings.

mod matrix;
mod smith;

pub use matrix::Matrix;
pub use smith::{inverse, kernel_basis, rank, smith_normal_form, smith_with_transforms, SmithForm, SmithTransforms};
