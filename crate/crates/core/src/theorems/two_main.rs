use crate::families::FamilySpec;
use crate::spectra::SpectraError;

use super::analysis::Analysis;
use super::report::{TheoremId, TheoremReport};
use super::{EQ_TOL, RELATION_TOL};

/// Two main eigenvalues `λ₁ > λ_i` satisfy
/// `λ_i = (Σd² − 2mλ₁) / (2m − nλ₁)`, and `λ_i = 0` forces `λ₁ = Σd²/2m`.
///
/// Returns the reports for both statements; each is not-applicable unless
/// the graph has exactly two main eigenvalues (and, for the second, the
/// other one is zero).
pub fn check_two_main_relation(a: &Analysis) -> Vec<TheoremReport> {
    let g = &a.g;
    let p21 = TheoremReport::new(TheoremId::P21, &a.instance, RELATION_TOL);
    let c22 = TheoremReport::new(TheoremId::C22, &a.instance, EQ_TOL);
    if g.s() != 2 {
        let why = format!("{} main eigenvalues", g.s());
        return vec![p21.not_applicable(why.clone()), c22.not_applicable(why)];
    }
    let mains = g.spectrum.main_values();
    let (l1, li) = (mains[0], mains[1]);
    let n = g.n() as f64;
    let m = g.degrees.m as f64;
    let sum_sq = g.degrees.sum_of_squares as f64;
    let denominator = 2.0 * m - n * l1;

    let p21 = p21
        .float("lambda1", l1)
        .float("lambda_i", li)
        .int("n", g.n())
        .int("m", g.degrees.m)
        .int("sum_d2", g.degrees.sum_of_squares);
    let p21 = if denominator.abs() <= 1e-9 * n * (1.0 + l1) {
        // 2m = nλ₁ leaves only the case λ_i = −λ₁ with λ₁² = Σd²/n
        let ok = (li + l1).abs() <= RELATION_TOL * (1.0 + l1)
            && (l1 * l1 - sum_sq / n).abs() <= RELATION_TOL * (1.0 + l1 * l1);
        p21.float("sum_d2_over_n", sum_sq / n)
            .note("2m = nλ₁: checked λ_i = −λ₁ and λ₁² = Σd²/n")
            .holds_if(ok)
    } else {
        let rhs = (sum_sq - 2.0 * m * l1) / denominator;
        let mut ok = (li - rhs).abs() <= RELATION_TOL * (1.0 + li.abs());
        if (li + l1).abs() <= g.spectrum.tau_group {
            ok &= (l1 * l1 - sum_sq / n).abs() <= RELATION_TOL * (1.0 + l1 * l1);
        }
        p21.float("rhs", rhs).holds_if(ok)
    };

    let c22 = if li.abs() > g.spectrum.tau_group {
        c22.not_applicable("second main eigenvalue is not zero")
    } else {
        let ratio = sum_sq / (2.0 * m);
        c22.float("lambda1", l1)
            .float("sum_d2_over_2m", ratio)
            .holds_if((l1 - ratio).abs() <= EQ_TOL * (1.0 + l1))
    };
    vec![p21, c22]
}

/// Pendant decoration `H^q` of a `k`-regular base: the two main eigenvalues
/// are `(k ± √(k² + 4q)) / 2`, i.e. `1 ± √(1+q)` over a cycle.
pub fn pendant_reports(a: &Analysis, k: usize, q: usize) -> TheoremReport {
    let g = &a.g;
    let (k, qf) = (k as f64, q as f64);
    let root = (k * k + 4.0 * qf).sqrt();
    let expected = [(k + root) / 2.0, (k - root) / 2.0];
    let mains = g.spectrum.main_values();
    let relation = check_two_main_relation(a).remove(0);
    let close = mains.len() == 2
        && mains
            .iter()
            .zip(expected)
            .all(|(x, want)| (x - want).abs() <= EQ_TOL);
    TheoremReport::new(TheoremId::P21, &a.instance, EQ_TOL)
        .floats("main_eigenvalues", mains)
        .floats("expected", expected.to_vec())
        .with(
            "relation",
            super::report::Value::Text(relation.verdict.to_string()),
        )
        .holds_if(close && relation.verdict == super::report::Verdict::Holds)
}

/// Builds `H^q` over the cycle `C_p` and checks its main eigenvalues.
pub fn check_pendant_cycle(p: usize, q: usize) -> Result<TheoremReport, SpectraError> {
    let spec = FamilySpec::PendantDecorated {
        base: Box::new(FamilySpec::Cycle { n: p }),
        q,
    };
    let g = spec
        .build()
        .expect("pendant parameters are validated by the caller");
    let a = Analysis::with_instance(g, spec.to_string())?;
    Ok(pendant_reports(&a, 2, q))
}
