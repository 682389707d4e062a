//! Exact linear algebra over the scalar tower, with ℤ/2-graded coordinate spaces.

mod eigen;
mod matrix;
mod subspace;

pub use eigen::{eigenspace, generalized_eigenspaces, joint_generalized_eigenspaces, Eigenspace, JointEigenspace};
pub use matrix::{
    conj_vec, dot, int_vec, is_zero_vec, lift_vec, unit_vec, vec_add, vec_axpy, vec_scale, vec_sub, zero_vec, Mat, Vector,
};
pub use subspace::{Echelon, GradedSpace, Subspace};
