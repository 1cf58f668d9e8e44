use crate::exact::path_eigenpair;
use crate::families::FamilySpec;
use crate::spectra::SpectraError;

use super::analysis::Analysis;
use super::report::{TheoremId, TheoremReport};
use super::EQ_TOL;

/// Checks on `P_n`, `n ≥ 2`, with eigenvalue `j` matched to sort position
/// `j − 1` (all eigenvalues of a path are simple):
///
/// * closed forms `2cos(jπ/(n+1))` and their eigenvectors,
/// * `λ_j` main iff `j` odd, so `λ_n` main iff `n` odd,
/// * `⌈n/2⌉` main eigenvalues,
/// * the complement has `⌈n/2⌉` main eigenvalues, and for even `n` its
///   second eigenvalue is `−1−λ_n`. For odd `n`, `λ_n` is main and simple, so
///   `−1−λ_n` is not an eigenvalue of the complement and the second
///   eigenvalue lies strictly below it.
pub fn path_reports(a: &Analysis, n: usize) -> Vec<TheoremReport> {
    let g = &a.g;
    let half = n.div_ceil(2);
    let vals = &g.eigen.eigenvalues;
    let simple = g.spectrum.p() == n;

    let mut worst_value = 0.0f64;
    let mut worst_residual = 0.0f64;
    for j in 1..=n {
        let (lambda, x) = path_eigenpair(n, j).expect("1 <= j <= n");
        worst_value = worst_value.max((vals[j - 1] - lambda).abs());
        let r = (0..n)
            .map(|v| (g.graph.neighbors(v).map(|u| x[u]).sum::<f64>() - lambda * x[v]).abs())
            .fold(0.0, f64::max);
        worst_residual = worst_residual.max(r);
    }
    let l41 = TheoremReport::new(TheoremId::L41, &a.instance, EQ_TOL)
        .float("max_eigenvalue_error", worst_value)
        .float("max_closed_form_residual", worst_residual)
        .float("residual_tolerance", 1e-10 * n as f64)
        .flag("all_simple", simple)
        .holds_if(simple && worst_value <= EQ_TOL && worst_residual <= 1e-10 * n as f64);

    let flags: Vec<bool> = g.spectrum.groups.iter().map(|x| x.is_main).collect();
    let parity_ok = simple
        && flags
            .iter()
            .enumerate()
            .all(|(i, &main)| main == (i % 2 == 0));
    let bottom_ok = g.bottom().is_main == (n % 2 == 1);
    let main_indices: Vec<f64> = flags
        .iter()
        .enumerate()
        .filter(|(_, &m)| m)
        .map(|(i, _)| (i + 1) as f64)
        .collect();
    let t42 = TheoremReport::new(TheoremId::T42, &a.instance, g.spectrum.tau_main)
        .floats("main_indices", main_indices)
        .flag("lambda_n_main", g.bottom().is_main)
        .flag("gray_zone", g.gray_zone)
        .holds_if(parity_ok && bottom_ok);

    let c43 = TheoremReport::new(TheoremId::C43, &a.instance, 0.0)
        .int("main_count", g.s())
        .int("walk_rank", g.walk_rank)
        .int("expected", half)
        .holds_if(g.s() == half && g.walk_rank == half);

    let h = &a.complement;
    let w = a.window();
    let l2c = h.lambda2().expect("n >= 2");
    let cor = TheoremReport::new(TheoremId::COR47, &a.instance, EQ_TOL)
        .int("complement_main_count", h.s())
        .int("expected", half)
        .float("complement_lambda2", l2c)
        .float("window", w);
    let cor = if n.is_multiple_of(2) {
        cor.holds_if(h.s() == half && (l2c - w).abs() <= EQ_TOL)
    } else {
        cor.note("odd order: λ_n is main and simple, so λ₂(Ḡ) < −1−λ_n")
            .holds_if(h.s() == half && l2c < w - EQ_TOL)
    };
    vec![l41, t42, c43, cor]
}

pub fn check_path_main(n: usize) -> Result<Vec<TheoremReport>, SpectraError> {
    assert!(n >= 2, "path checks need n >= 2");
    let spec = FamilySpec::Path { n };
    let a = Analysis::with_instance(spec.build().expect("n >= 1"), spec.to_string())?;
    Ok(path_reports(&a, n))
}
