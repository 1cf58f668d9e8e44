//! Sweep drivers: run every checker over a set of instances and tally the
//! verdicts.
//!
//! Instances are processed in parallel in fixed chunks and merged in index
//! order, so the output does not depend on scheduling.

use std::collections::BTreeMap;
use std::fmt;

use rand::rngs::StdRng;
use rand::SeedableRng;
use rayon::prelude::*;
use serde::Serialize;

use crate::enumerate::{EnumerationError, LabeledGraphs};
use crate::families::FamilySpec;
use crate::graph::Graph;
use crate::spectra::SpectraError;

use super::analysis::Analysis;
use super::report::{TheoremId, TheoremReport, Verdict};
use super::{
    check_complement_pairing, check_complement_window, check_harmonic_characterizations, check_krr,
    check_rank_theorem, check_semiregular, check_two_main_relation, double_star_reports,
    harmonic_tree_reports, path_reports, pendant_reports,
};

const CHUNK: u64 = 1 << 12;

/// Every checker that applies to an arbitrary graph.
pub fn graph_reports(a: &Analysis) -> Vec<TheoremReport> {
    let mut out = check_two_main_relation(a);
    out.extend(check_harmonic_characterizations(a));
    out.extend(check_complement_pairing(a));
    out.extend(check_complement_window(a));
    out.push(check_krr(a));
    out.push(check_semiregular(a));
    out.push(check_rank_theorem(a));
    out
}

/// A named family member; gets the graph checkers plus its own.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Family {
    Path(usize),
    DoubleStar(usize, usize),
    CompleteBipartite(usize, usize),
    HarmonicTree(usize),
    /// `q` pendant vertices on every vertex of the cycle `C_p`.
    PendantCycle {
        p: usize,
        q: usize,
    },
}

impl Family {
    pub fn spec(&self) -> FamilySpec {
        match *self {
            Family::Path(n) => FamilySpec::Path { n },
            Family::DoubleStar(k, s) => FamilySpec::DoubleStar { k, s },
            Family::CompleteBipartite(r, s) => FamilySpec::CompleteBipartite { r, s },
            Family::HarmonicTree(ell) => FamilySpec::HarmonicTree { ell },
            Family::PendantCycle { p, q } => FamilySpec::PendantDecorated {
                base: Box::new(FamilySpec::Cycle { n: p }),
                q,
            },
        }
    }

    /// Analysis plus all reports for this instance.
    pub fn analyse(&self) -> Result<(Analysis, Vec<TheoremReport>), SweepError> {
        let spec = self.spec();
        let g = spec
            .build()
            .map_err(|e| SweepError::Family(e.to_string()))?;
        let a = Analysis::with_instance(g, spec.to_string())?;
        let mut reports = graph_reports(&a);
        match *self {
            Family::Path(n) if n >= 2 => reports.extend(path_reports(&a, n)),
            Family::DoubleStar(k, s) => reports.extend(double_star_reports(&a, k, s)),
            Family::HarmonicTree(ell) => reports.push(harmonic_tree_reports(&a, ell)),
            Family::PendantCycle { q, .. } => reports.push(pendant_reports(&a, 2, q)),
            _ => {}
        }
        Ok((a, reports))
    }
}

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum SweepError {
    #[error(transparent)]
    Spectra(#[from] SpectraError),
    #[error(transparent)]
    Enumeration(#[from] EnumerationError),
    #[error("{0}")]
    Family(String),
}

/// Which labeled graphs of one order to visit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphSet {
    pub n: usize,
    pub connected_only: bool,
    pub bipartite_only: bool,
    /// Visit this many edge masks drawn without replacement instead of all.
    pub sample: Option<(u64, u64)>,
}

impl GraphSet {
    pub fn exhaustive(n: usize) -> Self {
        GraphSet {
            n,
            connected_only: false,
            bipartite_only: false,
            sample: None,
        }
    }

    fn admits(&self, g: &Graph) -> bool {
        (!self.connected_only || g.is_connected()) && (!self.bipartite_only || g.is_bipartite())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Source {
    Graphs(GraphSet),
    Families(Vec<Family>),
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct Tally {
    pub holds: u64,
    pub not_applicable: u64,
    pub fails: u64,
}

impl Tally {
    fn add(&mut self, v: Verdict) {
        match v {
            Verdict::Holds => self.holds += 1,
            Verdict::NotApplicable => self.not_applicable += 1,
            Verdict::Fails => self.fails += 1,
        }
    }

    fn merge(&mut self, o: &Tally) {
        self.holds += o.holds;
        self.not_applicable += o.not_applicable;
        self.fails += o.fails;
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct InstanceError {
    pub instance: String,
    pub error: String,
    /// The float and exact routes disagreed on the number of main
    /// eigenvalues.
    pub disagreement: bool,
}

#[derive(Debug, Clone)]
pub struct SweepOptions {
    /// Theorems to tally; empty means all.
    pub theorems: Vec<TheoremId>,
    /// Keep every selected report, not only failures.
    pub keep_reports: bool,
}

impl SweepOptions {
    pub fn all() -> Self {
        SweepOptions {
            theorems: Vec::new(),
            keep_reports: false,
        }
    }

    pub fn only(ids: &[TheoremId]) -> Self {
        SweepOptions {
            theorems: ids.to_vec(),
            keep_reports: false,
        }
    }

    pub fn keeping_reports(mut self) -> Self {
        self.keep_reports = true;
        self
    }

    fn selects(&self, id: TheoremId) -> bool {
        self.theorems.is_empty() || self.theorems.contains(&id)
    }
}

#[derive(Debug, Clone, Default, PartialEq, Serialize)]
pub struct SweepSummary {
    pub instances: u64,
    /// Instances where either graph needed the exact rank to settle the
    /// classification.
    pub gray_zone: u64,
    /// Largest `residual_bound / residual_tolerance` seen.
    pub worst_residual_ratio: f64,
    pub tallies: BTreeMap<TheoremId, Tally>,
    pub failures: Vec<TheoremReport>,
    pub errors: Vec<InstanceError>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub reports: Vec<TheoremReport>,
}

impl SweepSummary {
    /// No failed verdict and no instance error.
    pub fn passed(&self) -> bool {
        self.failures.is_empty() && self.errors.is_empty()
    }

    pub fn tally(&self, id: TheoremId) -> Tally {
        self.tallies.get(&id).copied().unwrap_or_default()
    }

    pub fn disagreements(&self) -> usize {
        self.errors.iter().filter(|e| e.disagreement).count()
    }

    fn record(
        &mut self,
        opts: &SweepOptions,
        outcome: Result<(Analysis, Vec<TheoremReport>), (String, SweepError)>,
    ) {
        self.instances += 1;
        match outcome {
            Ok((a, reports)) => {
                if a.g.gray_zone || a.complement.gray_zone {
                    self.gray_zone += 1;
                }
                for s in [&a.g, &a.complement] {
                    let ratio = s.eigen.residual_bound / s.eigen.residual_tolerance();
                    self.worst_residual_ratio = self.worst_residual_ratio.max(ratio);
                }
                for r in reports.into_iter().filter(|r| opts.selects(r.theorem)) {
                    self.tallies.entry(r.theorem).or_default().add(r.verdict);
                    if r.verdict == Verdict::Fails {
                        self.failures.push(r.clone());
                    }
                    if opts.keep_reports {
                        self.reports.push(r);
                    }
                }
            }
            Err((instance, error)) => self.errors.push(InstanceError {
                instance,
                disagreement: matches!(
                    error,
                    SweepError::Spectra(SpectraError::RouteDisagreement { .. })
                ),
                error: error.to_string(),
            }),
        }
    }

    /// Appends `other`, which must come later in instance order.
    pub fn merge(mut self, other: SweepSummary) -> SweepSummary {
        self.instances += other.instances;
        self.gray_zone += other.gray_zone;
        self.worst_residual_ratio = self.worst_residual_ratio.max(other.worst_residual_ratio);
        for (id, t) in &other.tallies {
            self.tallies.entry(*id).or_default().merge(t);
        }
        self.failures.extend(other.failures);
        self.errors.extend(other.errors);
        self.reports.extend(other.reports);
        self
    }
}

impl fmt::Display for SweepSummary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "{} instances, {} settled by exact rank, {} errors",
            self.instances,
            self.gray_zone,
            self.errors.len()
        )?;
        writeln!(
            f,
            "{:<6} {:>10} {:>15} {:>6}",
            "id", "holds", "not-applicable", "fails"
        )?;
        for (id, t) in &self.tallies {
            writeln!(
                f,
                "{:<6} {:>10} {:>15} {:>6}",
                id, t.holds, t.not_applicable, t.fails
            )?;
        }
        Ok(())
    }
}

fn analyse_graph(g: Graph) -> Result<(Analysis, Vec<TheoremReport>), (String, SweepError)> {
    let instance = crate::graph6::to_graph6_string(&g);
    match Analysis::with_instance(g, instance.clone()) {
        Ok(a) => {
            let reports = graph_reports(&a);
            Ok((a, reports))
        }
        Err(e) => Err((instance, e.into())),
    }
}

fn sample_masks(total: u64, count: u64, seed: u64) -> Vec<u64> {
    let mut rng = StdRng::seed_from_u64(seed);
    let count = count.min(total) as usize;
    let mut masks: Vec<u64> = rand::seq::index::sample(&mut rng, total as usize, count)
        .into_iter()
        .map(|i| i as u64)
        .collect();
    masks.sort_unstable();
    masks
}

/// Runs the checkers over `source`.
pub fn run_sweep(source: &Source, opts: &SweepOptions) -> Result<SweepSummary, SweepError> {
    match source {
        Source::Graphs(set) => {
            let graphs = LabeledGraphs::new(set.n)?;
            let visit = |masks: &mut dyn Iterator<Item = u64>| {
                let mut s = SweepSummary::default();
                for mask in masks {
                    let g = graphs.graph(mask);
                    if set.admits(&g) {
                        s.record(opts, analyse_graph(g));
                    }
                }
                s
            };
            let parts: Vec<SweepSummary> = match set.sample {
                None => {
                    let total = graphs.count();
                    let chunks = total.div_ceil(CHUNK);
                    (0..chunks)
                        .into_par_iter()
                        .map(|c| visit(&mut (c * CHUNK..((c + 1) * CHUNK).min(total))))
                        .collect()
                }
                Some((count, seed)) => {
                    let masks = sample_masks(graphs.count(), count, seed);
                    masks
                        .par_chunks(CHUNK as usize)
                        .map(|chunk| visit(&mut chunk.iter().copied()))
                        .collect()
                }
            };
            Ok(parts
                .into_iter()
                .fold(SweepSummary::default(), SweepSummary::merge))
        }
        Source::Families(list) => {
            let parts: Vec<SweepSummary> = list
                .par_iter()
                .map(|f| {
                    let mut s = SweepSummary::default();
                    let outcome = f.analyse().map_err(|e| (f.spec().to_string(), e));
                    s.record(opts, outcome);
                    s
                })
                .collect();
            Ok(parts
                .into_iter()
                .fold(SweepSummary::default(), SweepSummary::merge))
        }
    }
}

/// `P_n` for `n` in `lo..=hi`.
pub fn paths(lo: usize, hi: usize) -> Vec<Family> {
    (lo..=hi).map(Family::Path).collect()
}

/// `T(k, s)` for `1 ≤ k, s ≤ max`.
pub fn double_stars(max: usize) -> Vec<Family> {
    (1..=max)
        .flat_map(|k| (1..=max).map(move |s| Family::DoubleStar(k, s)))
        .collect()
}

/// `K_{r,s}` for `1 ≤ r, s ≤ max`.
pub fn complete_bipartite(max: usize) -> Vec<Family> {
    (1..=max)
        .flat_map(|r| (1..=max).map(move |s| Family::CompleteBipartite(r, s)))
        .collect()
}

/// `T_ℓ` for `2 ≤ ℓ ≤ max`.
pub fn harmonic_trees(max: usize) -> Vec<Family> {
    (2..=max).map(Family::HarmonicTree).collect()
}

/// Pendant-decorated cycles `C_p`, `3 ≤ p ≤ max_p`, `1 ≤ q ≤ max_q`.
pub fn pendant_cycles(max_p: usize, max_q: usize) -> Vec<Family> {
    (3..=max_p)
        .flat_map(|p| (1..=max_q).map(move |q| Family::PendantCycle { p, q }))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exhaustive_four_has_no_failures() {
        let s = run_sweep(
            &Source::Graphs(GraphSet::exhaustive(4)),
            &SweepOptions::all(),
        )
        .unwrap();
        assert_eq!(s.instances, 64);
        assert!(s.passed(), "{s}\n{:?}", s.failures);
        assert_eq!(s.tally(TheoremId::T45).holds, 64);
    }

    #[test]
    fn filters_restrict_instances() {
        let set = GraphSet {
            connected_only: true,
            ..GraphSet::exhaustive(4)
        };
        let s = run_sweep(&Source::Graphs(set), &SweepOptions::only(&[TheoremId::T45])).unwrap();
        assert_eq!(s.instances, 38);
        assert_eq!(s.tallies.len(), 1);
    }

    #[test]
    fn sampling_is_deterministic() {
        let set = GraphSet {
            sample: Some((50, 7)),
            ..GraphSet::exhaustive(6)
        };
        let opts = SweepOptions::only(&[TheoremId::T31]).keeping_reports();
        let a = run_sweep(&Source::Graphs(set.clone()), &opts).unwrap();
        let b = run_sweep(&Source::Graphs(set), &opts).unwrap();
        assert_eq!(a.instances, 50);
        assert_eq!(a, b);
    }

    #[test]
    fn small_families() {
        let mut list = paths(2, 8);
        list.extend(double_stars(3));
        list.extend(complete_bipartite(3));
        list.extend(harmonic_trees(3));
        list.extend(pendant_cycles(4, 2));
        let s = run_sweep(&Source::Families(list), &SweepOptions::all()).unwrap();
        assert!(s.passed(), "{s}\n{:?}", s.failures);
        assert_eq!(s.tally(TheoremId::C43).holds, 7);
        assert_eq!(s.tally(TheoremId::T46).holds, 9);
    }
}
