use crate::exact::{coarsest_equitable, divisor_walk_rank};

use super::analysis::{Analysis, Spectral};
use super::report::{TheoremId, TheoremReport};
use super::EQ_TOL;

/// Connected non-trivial graphs: semi-regular bipartite iff the main
/// spectrum is `{λ₁, −λ₁}`. Hofmeister's bound `Σd² ≤ nλ₁²` is checked on
/// every input, with equality `λ₁ = √(Σd²/n)` for semi-regular bipartite
/// graphs.
///
/// Regular bipartite graphs are semi-regular but have the single main
/// eigenvalue `λ₁`; they are reported not-applicable.
pub fn check_semiregular(a: &Analysis) -> TheoremReport {
    let g = &a.g;
    let n = g.n() as f64;
    let l1 = g.lambda1();
    let sum_sq = g.degrees.sum_of_squares as f64;
    let hofmeister = sum_sq <= n * l1 * l1 * (1.0 + 1e-12) + EQ_TOL;
    let r = TheoremReport::new(TheoremId::T44, &a.instance, EQ_TOL)
        .float("lambda1", l1)
        .float("sqrt_sum_d2_over_n", (sum_sq / n).sqrt())
        .flag("hofmeister", hofmeister);
    if !hofmeister {
        return r.holds_if(false);
    }
    if g.n() < 2 || !g.graph.is_connected() {
        return r.not_applicable("requires a connected graph on at least two vertices");
    }
    if g.graph.is_regular() {
        return r
            .not_applicable("regular graph: one main eigenvalue, semi-regularity is ambiguous");
    }
    let semi = g.graph.is_semiregular_bipartite();
    let tau = g.spectrum.tau_group;
    let mains = g.spectrum.main_values();
    let symmetric_pair =
        mains.len() == 2 && (mains[0] - l1).abs() <= tau && (mains[1] + l1).abs() <= tau;
    let mut ok = semi == symmetric_pair;
    if semi {
        ok &= (l1 - (sum_sq / n).sqrt()).abs() <= EQ_TOL * (1.0 + l1);
    }
    r.flag("semiregular_bipartite", semi)
        .floats("main_eigenvalues", mains)
        .holds_if(ok)
}

fn rank_report(r: TheoremReport, s: &Spectral, prefix: &str) -> (TheoremReport, bool) {
    let p = coarsest_equitable(&s.graph);
    let divisor_rank = divisor_walk_rank(&p);
    let ok = s.s() == s.walk_rank && divisor_rank == s.walk_rank;
    let r = r
        .int(&format!("{prefix}walk_rank"), s.walk_rank)
        .int(&format!("{prefix}main_count"), s.s())
        .int(&format!("{prefix}divisor_walk_rank"), divisor_rank)
        .int(&format!("{prefix}cells"), p.len())
        .flag(&format!("{prefix}gray_zone"), s.gray_zone);
    (r, ok)
}

/// Rank of the walk matrix equals the number of main eigenvalues, and so
/// does the walk rank of the coarsest divisor; for `G` and `Ḡ`.
pub fn check_rank_theorem(a: &Analysis) -> TheoremReport {
    let r = TheoremReport::new(TheoremId::T45, &a.instance, 0.0);
    let (r, ok_g) = rank_report(r, &a.g, "");
    let (r, ok_c) = rank_report(r, &a.complement, "complement_");
    r.holds_if(ok_g && ok_c)
}
