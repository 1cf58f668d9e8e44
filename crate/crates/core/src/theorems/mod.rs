//! One checker per result. Each takes an [`Analysis`] (a graph and its
//! complement with spectra, main flags and exact walk ranks) and returns
//! [`TheoremReport`]s with a verdict and the witness values behind it.
//!
//! Biconditionals are checked in both directions on the single instance;
//! quantification over graphs is left to the sweep drivers in [`sweep`].
//! A report is not-applicable when the hypothesis of the result fails on
//! the instance.

mod analysis;
mod complement;
mod double_star;
mod harmonic;
mod paths;
mod report;
mod structure;
pub mod sweep;
mod two_main;

pub use analysis::{Analysis, Spectral};
pub use complement::{
    check_complement_pairing, check_complement_window, check_krr, complete_bipartite_analysis,
};
pub use double_star::{check_double_star, double_star_reports};
pub use harmonic::{
    check_harmonic, check_harmonic_characterizations, check_harmonic_tree, check_pseudo_regular,
    harmonic_tree_reports, HarmonicStatus,
};
pub use paths::{check_path_main, path_reports};
pub use report::{
    fmt_float, round_sig, TheoremId, TheoremReport, UnknownTheorem, Value, Verdict, Witness,
};
pub use structure::{check_rank_theorem, check_semiregular};
pub use two_main::{check_pendant_cycle, check_two_main_relation, pendant_reports};

/// Slack for equalities and inequalities between eigenvalues.
pub const EQ_TOL: f64 = 1e-8;
/// Relative tolerance for the two-main-eigenvalue relation.
pub const RELATION_TOL: f64 = 1e-6;
/// Main pairs `λ ∈ MS(G)`, `λ̄ ∈ MS(Ḡ)` must keep `|λ + λ̄ + 1|` above this.
pub const PAIR_GAP: f64 = 1e-6;
