//! Exact integer route: walk matrices, their rank, equitable partitions and
//! divisor matrices, and the closed forms used for paths and double stars.
//!
//! Nothing in this module uses a tolerance. The rank of the walk matrix
//! equals the number of main eigenvalues, which makes it the arbiter for
//! the floating-point classification in [`crate::spectra`].

mod bareiss;
mod closed_form;
mod equitable;
mod walk;

pub use bareiss::{exact_det, exact_rank};
pub use closed_form::{
    det_walk_divisor, double_star_charpoly, double_star_quartic, double_star_quartic_roots,
    path_eigenpair, IndexOutOfRange, IntPolynomial,
};
pub use equitable::{
    coarsest_equitable, divisor_walk_rank, verify_equitable, EquitablePartition, PartitionError,
};
pub use walk::{walk_matrix, walk_matrix_of, WalkMatrix};
