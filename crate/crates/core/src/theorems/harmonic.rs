use crate::families::FamilySpec;
use crate::graph::Graph;
use crate::spectra::SpectraError;

use super::analysis::Analysis;
use super::report::{TheoremId, TheoremReport};
use super::EQ_TOL;

/// Exact harmonic test: `A·d = ℓ·d` for an integer `ℓ`.
///
/// The rational ratio `(A·d)_i / d_i` is an eigenvalue of an integer matrix,
/// hence an integer when it exists. A graph without edges has `d = 0` and is
/// reported harmonic with `ℓ = 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HarmonicStatus {
    pub is_harmonic: bool,
    pub ell: Option<u64>,
}

fn neighbour_degree_sums(g: &Graph) -> Vec<u64> {
    (0..g.order())
        .map(|v| g.neighbors(v).map(|u| g.degree(u) as u64).sum())
        .collect()
}

pub fn check_harmonic(g: &Graph) -> HarmonicStatus {
    let d: Vec<u64> = (0..g.order()).map(|v| g.degree(v) as u64).collect();
    let ad = neighbour_degree_sums(g);
    let not = HarmonicStatus {
        is_harmonic: false,
        ell: None,
    };
    let ell = match d.iter().position(|&x| x > 0) {
        None => 0,
        Some(v) if ad[v].is_multiple_of(d[v]) => ad[v] / d[v],
        Some(_) => return not,
    };
    if d.iter().zip(&ad).all(|(&di, &adi)| adi == ell * di) {
        HarmonicStatus {
            is_harmonic: true,
            ell: Some(ell),
        }
    } else {
        not
    }
}

/// Pseudo-regular: the average neighbour degree `(A·d)_i / d_i` is the same
/// at every vertex, compared by cross-multiplication. `None` when some
/// vertex is isolated.
pub fn check_pseudo_regular(g: &Graph) -> Option<bool> {
    let d: Vec<u64> = (0..g.order()).map(|v| g.degree(v) as u64).collect();
    if d.contains(&0) {
        return None;
    }
    let ad = neighbour_degree_sums(g);
    Some((1..d.len()).all(|i| ad[i] * d[0] == ad[0] * d[i]))
}

fn harmonic_witness(r: TheoremReport, h: HarmonicStatus) -> TheoremReport {
    let r = r.flag("harmonic", h.is_harmonic);
    match h.ell {
        Some(ell) => r.int("ell", ell),
        None => r,
    }
}

/// `λ₁ = Σd²/2m` within `EQ_TOL·(1+λ₁)`. Requires `m ≥ 1`.
fn index_matches_degree_ratio(a: &Analysis) -> (f64, bool) {
    let deg = &a.g.degrees;
    let ratio = deg.sum_of_squares as f64 / (2 * deg.m) as f64;
    let l1 = a.g.lambda1();
    (ratio, (l1 - ratio).abs() <= EQ_TOL * (1.0 + l1))
}

/// Lemma on bipartite harmonic graphs, the `{0, λ₁}` characterisation, the
/// `Σd²/2m` characterisation and harmonic ⇔ pseudo-regular.
pub fn check_harmonic_characterizations(a: &Analysis) -> Vec<TheoremReport> {
    let g = &a.g;
    let h = check_harmonic(&g.graph);
    let l1 = g.lambda1();
    let tau = g.spectrum.tau_group;
    let m = g.degrees.m;

    let l23 = {
        let r = TheoremReport::new(TheoremId::L23, &a.instance, g.spectrum.tau_main);
        if !(h.is_harmonic && m >= 1 && g.graph.is_bipartite()) {
            r.not_applicable("requires a bipartite harmonic graph with at least one edge")
        } else {
            let r = harmonic_witness(r, h).float("lambda1", l1);
            match g.spectrum.find(-l1) {
                Some(grp) => r
                    .float("projection_norm_sq", grp.projection_norm_sq)
                    .flag("main", grp.is_main)
                    .holds_if(!grp.is_main && grp.projection_norm_sq <= g.spectrum.tau_main),
                None => r.flag("minus_lambda1_present", false).holds_if(false),
            }
        }
    };

    let mains = g.spectrum.main_values();
    let in_zero_or_index = mains
        .iter()
        .all(|&mu| mu.abs() <= tau || (mu - l1).abs() <= tau);
    let p24 = harmonic_witness(TheoremReport::new(TheoremId::P24, &a.instance, tau), h)
        .floats("main_eigenvalues", mains.clone())
        .float("lambda1", l1)
        .flag("main_subset_of_zero_and_index", in_zero_or_index)
        .holds_if(h.is_harmonic == in_zero_or_index);

    let p25 = {
        let r = TheoremReport::new(TheoremId::P25, &a.instance, EQ_TOL);
        if m == 0 {
            r.not_applicable("requires at least one edge")
        } else {
            let (ratio, eq) = index_matches_degree_ratio(a);
            let rhs = eq && g.s() <= 2;
            harmonic_witness(r, h)
                .float("lambda1", l1)
                .float("sum_d2_over_2m", ratio)
                .int("main_count", g.s())
                .holds_if(h.is_harmonic == rhs)
        }
    };

    let p26 = {
        let r = TheoremReport::new(TheoremId::P26, &a.instance, 0.0);
        match check_pseudo_regular(&g.graph) {
            None => r.not_applicable("graph has an isolated vertex"),
            Some(pr) => harmonic_witness(r, h)
                .flag("pseudo_regular", pr)
                .holds_if(pr == h.is_harmonic),
        }
    };

    vec![l23, p24, p25, p26]
}

/// Harmonic tree `T_ℓ`: harmonic with the given `ℓ`, `λ₁ = ℓ = Σd²/2m`,
/// at most two main eigenvalues, all in `{0, λ₁}`.
pub fn harmonic_tree_reports(a: &Analysis, ell: usize) -> TheoremReport {
    let g = &a.g;
    let h = check_harmonic(&g.graph);
    let (ratio, eq) = index_matches_degree_ratio(a);
    let l1 = g.lambda1();
    let tau = g.spectrum.tau_group;
    let mains = g.spectrum.main_values();
    let subset = mains
        .iter()
        .all(|&mu| mu.abs() <= tau || (mu - l1).abs() <= tau);
    let index_is_ell = (l1 - ell as f64).abs() <= EQ_TOL * (1.0 + l1);
    harmonic_witness(TheoremReport::new(TheoremId::P25, &a.instance, EQ_TOL), h)
        .int("expected_ell", ell)
        .float("lambda1", l1)
        .float("sum_d2_over_2m", ratio)
        .floats("main_eigenvalues", mains)
        .flag(
            "tree",
            g.graph.is_connected() && g.degrees.m as usize + 1 == g.n(),
        )
        .holds_if(
            h.ell == Some(ell as u64)
                && eq
                && index_is_ell
                && subset
                && g.s() <= 2
                && g.graph.is_connected()
                && g.degrees.m as usize + 1 == g.n(),
        )
}

pub fn check_harmonic_tree(ell: usize) -> Result<TheoremReport, SpectraError> {
    let spec = FamilySpec::HarmonicTree { ell };
    let g = spec
        .build()
        .expect("harmonic tree parameters are validated by the caller");
    let a = Analysis::with_instance(g, spec.to_string())?;
    Ok(harmonic_tree_reports(&a, ell))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::theorems::report::Verdict;

    fn build(spec: FamilySpec) -> Graph {
        spec.build().unwrap()
    }

    #[test]
    fn harmonic_examples() {
        let t2 = build(FamilySpec::HarmonicTree { ell: 2 });
        assert_eq!(
            check_harmonic(&t2),
            HarmonicStatus {
                is_harmonic: true,
                ell: Some(2)
            }
        );
        assert_eq!(
            check_harmonic(&build(FamilySpec::Cycle { n: 7 })).ell,
            Some(2)
        );
        assert_eq!(
            check_harmonic(&build(FamilySpec::Complete { n: 5 })).ell,
            Some(4)
        );
        // A·d = (2,3,3,2) is not a multiple of d = (1,2,2,1)
        assert!(!check_harmonic(&build(FamilySpec::Path { n: 4 })).is_harmonic);
        assert_eq!(
            check_harmonic(&build(FamilySpec::Empty { n: 3 })).ell,
            Some(0)
        );
    }

    #[test]
    fn pseudo_regular_agrees_without_isolated_vertices() {
        assert_eq!(
            check_pseudo_regular(&build(FamilySpec::Path { n: 4 })),
            Some(false)
        );
        assert_eq!(
            check_pseudo_regular(&build(FamilySpec::HarmonicTree { ell: 3 })),
            Some(true)
        );
        assert_eq!(
            check_pseudo_regular(&build(FamilySpec::Empty { n: 2 })),
            None
        );
        // a harmonic graph with components of equal index is still harmonic
        let two_triangles =
            Graph::from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]).unwrap();
        assert_eq!(check_harmonic(&two_triangles).ell, Some(2));
    }

    #[test]
    fn characterizations_on_examples() {
        for spec in [
            FamilySpec::HarmonicTree { ell: 2 },
            FamilySpec::Cycle { n: 5 },
            FamilySpec::Star { leaves: 3 },
            FamilySpec::Path { n: 6 },
            FamilySpec::CompleteBipartite { r: 2, s: 2 },
        ] {
            let a = Analysis::with_instance(build(spec.clone()), spec.to_string()).unwrap();
            for r in check_harmonic_characterizations(&a) {
                assert_ne!(r.verdict, Verdict::Fails, "{r}");
            }
        }
    }

    #[test]
    fn lemma_applies_to_even_cycles_only() {
        let c6 = Analysis::new(build(FamilySpec::Cycle { n: 6 })).unwrap();
        let reports = check_harmonic_characterizations(&c6);
        assert_eq!(reports[0].verdict, Verdict::Holds);
        let c5 = Analysis::new(build(FamilySpec::Cycle { n: 5 })).unwrap();
        assert_eq!(
            check_harmonic_characterizations(&c5)[0].verdict,
            Verdict::NotApplicable
        );
    }

    #[test]
    fn t2_degree_ratio_is_two() {
        let r = check_harmonic_tree(2).unwrap();
        assert_eq!(r.verdict, Verdict::Holds, "{r}");
        let ratio = match r.witness("sum_d2_over_2m") {
            Some(crate::theorems::report::Value::Float(x)) => *x,
            _ => unreachable!(),
        };
        // degrees (3,2,2,2,1,1,1): 24 / 12
        assert_eq!(ratio, 2.0);
    }

    #[test]
    fn harmonic_trees_up_to_four() {
        for ell in 2..=4 {
            let r = check_harmonic_tree(ell).unwrap();
            assert_eq!(r.verdict, Verdict::Holds, "{r}");
        }
    }
}
