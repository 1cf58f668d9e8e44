//! Floating-point route to the main spectrum.
//!
//! The adjacency matrix is diagonalised by cyclic Jacobi rotations, the
//! sorted eigenvalues are merged into eigenspaces, and each eigenspace is
//! classified as main or non-main from the squared norm of the projection of
//! the all-ones vector onto it.
//!
//! Main-ness is an exact property; the thresholds here only separate clear
//! cases. A projection between the rounding floor and `10·τ_main` is
//! reported as [`SpectraError::ClassificationUncertain`] and must be settled
//! by the exact walk-matrix rank (see [`classify_main_with_rank`]).

mod jacobi;
mod main_spectrum;

use thiserror::Error;

pub use jacobi::{eigen_decompose, EigenDecomposition, MAX_SWEEPS};
pub use main_spectrum::{
    classify_main, classify_main_with_rank, decompose_all_ones, group_eigenvalues, EigenGroup,
    MainDecomposition, MainSpectrum,
};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SpectraError {
    #[error("Jacobi iteration did not converge after {sweeps} sweeps (residual {residual:e})")]
    ConvergenceFailure { sweeps: usize, residual: f64 },
    #[error(
        "eigenvector basis deviates from orthonormal by {deviation:e} (tolerance {tolerance:e})"
    )]
    NotOrthonormal { deviation: f64, tolerance: f64 },
    #[error("eigenpair residual {residual:e} exceeds {tolerance:e}")]
    Residual { residual: f64, tolerance: f64 },
    #[error("eigenvalue sum {trace:e} is not zero within {tolerance:e}")]
    Trace { trace: f64, tolerance: f64 },
    #[error("eigenvalue groups at {left} and {right} are closer than 3·τ_group = {limit:e}")]
    AmbiguousGrouping { left: f64, right: f64, limit: f64 },
    #[error(
        "projection ‖P j‖² = {projection_norm_sq:e} of eigenvalue {value} lies in the gray zone (τ_main = {tau_main:e})"
    )]
    ClassificationUncertain {
        group: usize,
        value: f64,
        projection_norm_sq: f64,
        tau_main: f64,
    },
    #[error("float route finds {float_count} main eigenvalues, exact rank is {exact_rank}")]
    RouteDisagreement {
        float_count: usize,
        exact_rank: usize,
    },
}
