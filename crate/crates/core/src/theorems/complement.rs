use crate::families::FamilySpec;
use crate::spectra::{EigenGroup, SpectraError};

use super::analysis::{Analysis, Spectral};
use super::report::{TheoremId, TheoremReport};
use super::{EQ_TOL, PAIR_GAP};

/// Unit vector in the group's eigenspace orthogonal to `j`, if one exists.
///
/// For a multiple eigenvalue with basis `v₁, v₂, …` and `cᵢ = jᵀvᵢ`, the
/// vector `c₂v₁ − c₁v₂` is such a vector. A simple eigenvalue has one only
/// when it is non-main.
fn orthogonal_eigenvector(s: &Spectral, grp: &EigenGroup) -> Option<Vec<f64>> {
    let vecs = &s.eigen.eigenvectors;
    let sum = |v: &[f64]| v.iter().sum::<f64>();
    let x: Vec<f64> = if grp.multiplicity >= 2 {
        let (v1, v2) = (&vecs[grp.start], &vecs[grp.start + 1]);
        let (c1, c2) = (sum(v1), sum(v2));
        if c1.abs() < 1e-12 && c2.abs() < 1e-12 {
            v1.clone()
        } else {
            v1.iter().zip(v2).map(|(a, b)| c2 * a - c1 * b).collect()
        }
    } else if grp.is_main {
        return None;
    } else {
        vecs[grp.start].clone()
    };
    let norm = x.iter().map(|t| t * t).sum::<f64>().sqrt();
    Some(x.into_iter().map(|t| t / norm).collect())
}

/// `‖Ax − λx‖∞` for the graph's adjacency matrix.
fn residual(s: &Spectral, x: &[f64], lambda: f64) -> f64 {
    (0..s.n())
        .map(|v| (s.graph.neighbors(v).map(|u| x[u]).sum::<f64>() - lambda * x[v]).abs())
        .fold(0.0, f64::max)
}

/// Equal main-spectrum sizes for `G` and `Ḡ`, no main pair summing to
/// `−1`, the three-way equivalence for every eigenvalue of `G`, and
/// non-main-ness of simple eigenvalues `−1−λ` of `Ḡ`.
pub fn check_complement_pairing(a: &Analysis) -> Vec<TheoremReport> {
    let (g, h) = (&a.g, &a.complement);

    let min_gap = g
        .main_groups()
        .flat_map(|x| {
            h.main_groups()
                .map(move |y| (x.value + y.value + 1.0).abs())
        })
        .fold(f64::INFINITY, f64::min);
    let t31 = TheoremReport::new(TheoremId::T31, &a.instance, PAIR_GAP)
        .int("main_count", g.s())
        .int("complement_main_count", h.s())
        .float("min_pair_gap", min_gap)
        .holds_if(g.s() == h.s() && min_gap > PAIR_GAP);
    let t31 = if g.s() == h.s() && min_gap <= PAIR_GAP {
        t31.note(a.tolerance_note(min_gap))
    } else {
        t31
    };

    let mut p32 = TheoremReport::new(TheoremId::P32, &a.instance, g.spectrum.tau_group)
        .int("groups", g.spectrum.p());
    let mut p32_ok = true;
    let mut p32_note = None;
    let mut c33 = TheoremReport::new(TheoremId::C33, &a.instance, h.spectrum.tau_main);
    let mut c33_cases = 0;
    let mut c33_ok = true;
    for grp in &g.spectrum.groups {
        let non_main_or_multiple = !grp.is_main || grp.multiplicity > 1;
        let orthogonal = orthogonal_eigenvector(g, grp).is_some_and(|x| {
            x.iter().sum::<f64>().powi(2) <= g.spectrum.tau_main
                && residual(g, &x, grp.value)
                    <= g.eigen.residual_tolerance() + grp.multiplicity as f64 * g.spectrum.tau_group
        });
        let partner = h.spectrum.find(-1.0 - grp.value);
        let in_complement = partner.is_some();
        if !(non_main_or_multiple == orthogonal && orthogonal == in_complement) && p32_ok {
            p32_ok = false;
            p32 = p32
                .float("lambda", grp.value)
                .int("multiplicity", grp.multiplicity)
                .flag("main", grp.is_main)
                .float("projection_norm_sq", grp.projection_norm_sq)
                .flag("orthogonal_eigenvector", orthogonal)
                .flag("minus_one_minus_lambda_in_complement", in_complement);
            p32_note = partner.map(|p| a.tolerance_note((p.value + 1.0 + grp.value).abs()));
        }
        if let Some(p) = partner.filter(|p| p.multiplicity == 1) {
            c33_cases += 1;
            if p.is_main && c33_ok {
                c33_ok = false;
                c33 = c33
                    .float("lambda", grp.value)
                    .float("complement_eigenvalue", p.value)
                    .float("projection_norm_sq", p.projection_norm_sq);
                c33 = c33.note(a.tolerance_note((p.value + 1.0 + grp.value).abs()));
            }
        }
    }
    let p32 = match p32_note {
        Some(note) => p32.note(note),
        None => p32,
    }
    .holds_if(p32_ok);
    let c33 = if c33_cases == 0 {
        c33.not_applicable("no simple eigenvalue of the complement of the form −1−λ")
    } else {
        c33.int("simple_partners", c33_cases).holds_if(c33_ok)
    };
    vec![t31, p32, c33]
}

/// The window `λ₂(Ḡ) ≤ −1−λ_n(G) ≤ λ₁(Ḡ)`, the empty open interval, and the
/// characterisations of equality at either end.
pub fn check_complement_window(a: &Analysis) -> Vec<TheoremReport> {
    let (g, h) = (&a.g, &a.complement);
    let w = a.window();
    let l1c = h.lambda1();
    let l2c = h.lambda2();
    let bottom = g.bottom();
    let top_c = h.top();

    let ineq = {
        let r = TheoremReport::new(TheoremId::INEQ2, &a.instance, EQ_TOL)
            .float("window", w)
            .float("complement_lambda1", l1c);
        let upper = w <= l1c + EQ_TOL;
        match l2c {
            Some(l2) => r
                .float("complement_lambda2", l2)
                .holds_if(upper && l2 <= w + EQ_TOL),
            None => r
                .note("order 1: only the upper bound applies")
                .holds_if(upper),
        }
    };

    let inside: Vec<f64> = h
        .eigen
        .eigenvalues
        .iter()
        .copied()
        .filter(|&mu| mu > w + EQ_TOL && mu < l1c - EQ_TOL)
        .collect();
    let p34 = TheoremReport::new(TheoremId::P34, &a.instance, EQ_TOL)
        .float("window", w)
        .float("complement_lambda1", l1c)
        .floats("inside", inside.clone())
        .holds_if(inside.is_empty());

    let top_equal = (l1c - w).abs() <= EQ_TOL;
    let p35_rhs = !bottom.is_main && top_c.multiplicity > 1;
    let p35 = TheoremReport::new(TheoremId::P35, &a.instance, EQ_TOL)
        .float("window", w)
        .float("complement_lambda1", l1c)
        .flag("lambda_n_main", bottom.is_main)
        .int("complement_lambda1_multiplicity", top_c.multiplicity)
        .holds_if(top_equal == p35_rhs);

    let p36 = {
        let r = TheoremReport::new(TheoremId::P36, &a.instance, EQ_TOL);
        match l2c {
            None => r.not_applicable("order 1 has no second eigenvalue"),
            Some(l2) => {
                let lhs = (l2 - w).abs() <= EQ_TOL && w < l1c - EQ_TOL;
                let rhs = (bottom.is_main && bottom.multiplicity > 1)
                    || (!bottom.is_main && top_c.multiplicity == 1);
                let r = r
                    .float("window", w)
                    .float("complement_lambda1", l1c)
                    .float("complement_lambda2", l2)
                    .flag("lambda_n_main", bottom.is_main)
                    .int("lambda_n_multiplicity", bottom.multiplicity)
                    .int("complement_lambda1_multiplicity", top_c.multiplicity)
                    .holds_if(lhs == rhs);
                if lhs && !rhs {
                    r.note(a.tolerance_note((l2 - w).abs()))
                } else {
                    r
                }
            }
        }
    };
    vec![ineq, p34, p35, p36]
}

/// Connected bipartite graphs: `λ₁(Ḡ) = −1−λ_n(G)` iff `G = K_{r,r}`.
pub fn check_krr(a: &Analysis) -> TheoremReport {
    let g = &a.g;
    let r = TheoremReport::new(TheoremId::T37, &a.instance, EQ_TOL);
    let Some(parts) = g.graph.bipartition().filter(|_| g.graph.is_connected()) else {
        return r.not_applicable("requires a connected bipartite graph");
    };
    let (p, q) = parts.sizes();
    let balanced_complete = p == q && g.degrees.m as usize == p * q;
    let w = a.window();
    let l1c = a.complement.lambda1();
    let equal = (l1c - w).abs() <= EQ_TOL;
    r.float("window", w)
        .float("complement_lambda1", l1c)
        .flag("equality", equal)
        .int("part_a", p)
        .int("part_b", q)
        .flag("balanced_complete", balanced_complete)
        .holds_if(equal == balanced_complete)
}

/// `K_{r,s}` analysed under its family name.
pub fn complete_bipartite_analysis(r: usize, s: usize) -> Result<Analysis, SpectraError> {
    let spec = FamilySpec::CompleteBipartite { r, s };
    Analysis::with_instance(spec.build().expect("r, s >= 1"), spec.to_string())
}
