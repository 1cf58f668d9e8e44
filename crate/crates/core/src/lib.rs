//! Main eigenvalues of graphs.
//!
//! An eigenvalue of the adjacency matrix is *main* when its eigenspace is
//! not orthogonal to the all-ones vector. This crate computes main spectra
//! by two independent routes and checks structural results about them:
//!
//! - [`spectra`]: Jacobi eigendecomposition, eigenspace grouping and the
//!   projection of the all-ones vector onto each eigenspace;
//! - [`exact`]: the walk matrix and its rank over the integers, plus the
//!   divisor matrix of the coarsest equitable partition;
//! - [`theorems`]: one checker per result, and sweep drivers over every
//!   labelled graph of an order or over named families.
//!
//! The two routes must agree on the number of main eigenvalues. Where the
//! float projections are too small to classify, the exact rank decides.
//!
//! ```
//! use mainspec::graph6::parse_graph6;
//! use mainspec::theorems::Spectral;
//!
//! // the path on four vertices
//! let a = Spectral::new(parse_graph6(b"Ch")?)?;
//! assert_eq!(a.s(), 2);
//! assert_eq!(a.walk_rank, 2);
//! # Ok::<(), Box<dyn std::error::Error>>(())
//! ```

pub mod cli;
pub mod edgelist;
pub mod enumerate;
pub mod exact;
pub mod families;
pub mod graph;
pub mod graph6;
pub mod spectra;
pub mod theorems;

pub use graph::Graph;
pub use theorems::{Analysis, Spectral, TheoremId, TheoremReport, Verdict};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../README.md")]
    mod readme {}
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/main-eigenvalues.md")]
    mod main_eigenvalues {}
    #[doc = include_str!("../../../book/src/walk-matrix.md")]
    mod walk_matrix {}
    #[doc = include_str!("../../../book/src/equitable-partitions.md")]
    mod equitable_partitions {}
    #[doc = include_str!("../../../book/src/harmonic-graphs.md")]
    mod harmonic_graphs {}
    #[doc = include_str!("../../../book/src/complements.md")]
    mod complements {}
    #[doc = include_str!("../../../book/src/paths.md")]
    mod paths {}
    #[doc = include_str!("../../../book/src/checkers.md")]
    mod checkers {}
    #[doc = include_str!("../../../book/src/command-line.md")]
    mod command_line {}
}
