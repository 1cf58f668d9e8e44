use num_traits::Zero;

use crate::exact::{
    det_walk_divisor, double_star_charpoly, double_star_quartic, double_star_quartic_roots,
    exact_det, verify_equitable, walk_matrix_of,
};
use crate::families::FamilySpec;
use crate::spectra::SpectraError;

use super::analysis::Analysis;
use super::report::{TheoremId, TheoremReport};
use super::EQ_TOL;

/// Checks on the double star `T(k, s)`:
///
/// * `det W(M) = −ks(s−k)²` for the four-cell divisor, computed exactly,
/// * the nonzero eigenvalues are the roots of `x⁴ − (k+s+1)x² + ks`, and
///   `0` has multiplicity `k + s − 2` as the characteristic polynomial says,
/// * `λ_n` is main iff `k ≠ s`; there are 4 main eigenvalues (exactly the
///   nonzero ones) when `k ≠ s` and 2 when `k = s`,
/// * for `k = s`, the complement has two main eigenvalues and
///   `λ₂(Ḡ) = −1−λ_n`.
pub fn double_star_reports(a: &Analysis, k: usize, s: usize) -> Vec<TheoremReport> {
    let g = &a.g;
    let n = g.n();
    let (ku, su) = (k as u64, s as u64);
    let balanced = k == s;

    let cells = vec![
        vec![0],
        vec![1],
        (2..2 + k).collect(),
        (2 + k..2 + k + s).collect(),
    ];
    let partition =
        verify_equitable(&g.graph, &cells).expect("the four cells of a double star are equitable");
    let walk = walk_matrix_of(&partition.quotient);
    let det = exact_det(&walk.rows());
    let expected_det = det_walk_divisor(ku, su);

    let charpoly = double_star_charpoly(ku, su);
    let quartic = double_star_quartic(ku, su);
    let zero_count = g
        .eigen
        .eigenvalues
        .iter()
        .filter(|x| x.abs() <= EQ_TOL)
        .count();
    let roots = double_star_quartic_roots(ku, su);
    let vals = &g.eigen.eigenvalues;
    let nonzero = [vals[0], vals[1], vals[n - 2], vals[n - 1]];
    let root_error = nonzero
        .iter()
        .zip(roots)
        .map(|(x, r)| (x - r).abs())
        .fold(0.0, f64::max);
    let quartic_residual = nonzero
        .iter()
        .map(|&x| quartic.eval(x).abs() / (1.0 + x.powi(4)))
        .fold(0.0, f64::max);

    let main_nonzero: Vec<f64> = g
        .main_groups()
        .map(|x| x.value)
        .filter(|x| x.abs() > EQ_TOL)
        .collect();
    let main_set_ok = if balanced {
        g.s() == 2
    } else {
        g.s() == 4 && main_nonzero.len() == 4
    };

    let t46 = TheoremReport::new(TheoremId::T46, &a.instance, EQ_TOL)
        .int("det_walk_divisor", det.clone())
        .int("expected_det", expected_det.clone())
        .int("divisor_walk_rank", walk.rank)
        .int("walk_rank", g.walk_rank)
        .int("main_count", g.s())
        .flag("lambda_n_main", g.bottom().is_main)
        .floats("nonzero_eigenvalues", nonzero.to_vec())
        .floats("quartic_roots", roots.to_vec())
        .float("max_root_error", root_error)
        .float("quartic_residual", quartic_residual)
        .int("zero_multiplicity", zero_count)
        .int("charpoly_degree", charpoly.degree())
        .holds_if(
            det == expected_det
                && det.is_zero() == balanced
                && walk.rank == g.walk_rank
                && g.bottom().is_main == !balanced
                && main_set_ok
                && root_error <= EQ_TOL
                && quartic_residual <= EQ_TOL
                && charpoly.degree() == n
                && zero_count == k + s - 2,
        );

    let cor = TheoremReport::new(TheoremId::COR47, &a.instance, EQ_TOL);
    let cor = if !balanced {
        cor.not_applicable("double star is not balanced")
    } else {
        let h = &a.complement;
        let w = a.window();
        let l2c = h.lambda2().expect("n >= 4");
        cor.int("complement_main_count", h.s())
            .float("complement_lambda2", l2c)
            .float("window", w)
            .holds_if(h.s() == 2 && (l2c - w).abs() <= EQ_TOL)
    };
    vec![t46, cor]
}

pub fn check_double_star(k: usize, s: usize) -> Result<Vec<TheoremReport>, SpectraError> {
    let spec = FamilySpec::DoubleStar { k, s };
    let g = spec.build().expect("k, s >= 1");
    let a = Analysis::with_instance(g, spec.to_string())?;
    Ok(double_star_reports(&a, k, s))
}
