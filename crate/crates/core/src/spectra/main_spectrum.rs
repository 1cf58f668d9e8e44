use crate::graph::{DegreeVector, Graph};

use super::{EigenDecomposition, SpectraError};

/// One eigenspace: a run of numerically equal eigenvalues.
#[derive(Debug, Clone, PartialEq)]
pub struct EigenGroup {
    /// Mean of the merged eigenvalues.
    pub value: f64,
    pub multiplicity: usize,
    /// Index of the first member in the sorted eigenvalue list.
    pub start: usize,
    /// `‖P_μ j‖²`, summed over the group's basis vectors.
    pub projection_norm_sq: f64,
    /// Largest `‖P_μ j‖²` rounding alone can produce for a non-main group.
    pub noise_floor: f64,
    pub is_main: bool,
}

impl EigenGroup {
    pub fn members(&self) -> std::ops::Range<usize> {
        self.start..self.start + self.multiplicity
    }
}

/// Distinct eigenvalues, strictly decreasing, with main flags.
#[derive(Debug, Clone, PartialEq)]
pub struct MainSpectrum {
    pub groups: Vec<EigenGroup>,
    pub tau_group: f64,
    pub tau_main: f64,
}

impl MainSpectrum {
    /// Projections in this range are neither clearly main nor clearly
    /// rounding noise: `[noise_floor, 10·τ_main]`.
    pub fn gray_zone(&self, group: &EigenGroup) -> std::ops::RangeInclusive<f64> {
        group.noise_floor..=10.0 * self.tau_main
    }

    /// Number of main eigenvalues.
    pub fn s(&self) -> usize {
        self.groups.iter().filter(|g| g.is_main).count()
    }

    /// Number of distinct eigenvalues.
    pub fn p(&self) -> usize {
        self.groups.len()
    }

    pub fn main_values(&self) -> Vec<f64> {
        self.groups
            .iter()
            .filter(|g| g.is_main)
            .map(|g| g.value)
            .collect()
    }

    pub fn largest(&self) -> &EigenGroup {
        &self.groups[0]
    }

    pub fn smallest(&self) -> &EigenGroup {
        self.groups.last().unwrap()
    }

    /// The group whose representative is within `τ_group` of `x`.
    pub fn find(&self, x: f64) -> Option<&EigenGroup> {
        self.groups
            .iter()
            .find(|g| (g.value - x).abs() <= self.tau_group)
    }

    pub fn contains(&self, x: f64) -> bool {
        self.find(x).is_some()
    }
}

/// Merges sorted eigenvalues into eigenspaces by single linkage with
/// tolerance `τ_group = 1e-7 · max(1, max|λ|)`.
///
/// The returned groups carry no projection data yet.
pub fn group_eigenvalues(d: &EigenDecomposition) -> Result<MainSpectrum, SpectraError> {
    let tau_group = 1e-7 * d.spectral_radius().max(1.0);
    let tau_main = 1e-6 * d.order() as f64;
    let vals = &d.eigenvalues;

    let mut groups: Vec<EigenGroup> = Vec::new();
    let mut start = 0;
    for i in 1..=vals.len() {
        if i == vals.len() || vals[i - 1] - vals[i] > tau_group {
            let members = &vals[start..i];
            groups.push(EigenGroup {
                value: members.iter().sum::<f64>() / members.len() as f64,
                multiplicity: members.len(),
                start,
                projection_norm_sq: 0.0,
                noise_floor: 0.0,
                is_main: false,
            });
            start = i;
        }
    }
    for w in groups.windows(2) {
        if w[0].value - w[1].value < 3.0 * tau_group {
            return Err(SpectraError::AmbiguousGrouping {
                left: w[0].value,
                right: w[1].value,
                limit: 3.0 * tau_group,
            });
        }
    }
    Ok(MainSpectrum {
        groups,
        tau_group,
        tau_main,
    })
}

/// Sets projections and noise floors. A computed eigenspace of dimension
/// `k` whose vectors have residuals at most `r` (∞-norm) is within angle
/// `θ ≤ √(k·n)·r / gap` of the true one, so a non-main group shows
/// `‖P j‖² ≤ n·θ²`; the floor is a hundred times that.
fn with_projections(d: &EigenDecomposition) -> Result<MainSpectrum, SpectraError> {
    let mut ms = group_eigenvalues(d)?;
    let n = d.order() as f64;
    let r = d
        .residual_bound
        .max(n * f64::EPSILON * d.spectral_radius().max(1.0));
    let values: Vec<f64> = ms.groups.iter().map(|g| g.value).collect();
    for (i, group) in ms.groups.iter_mut().enumerate() {
        group.projection_norm_sq = group
            .members()
            .map(|i| {
                let dot: f64 = d.eigenvectors[i].iter().sum();
                dot * dot
            })
            .sum();
        let gap = [i.checked_sub(1), Some(i + 1)]
            .into_iter()
            .flatten()
            .filter_map(|k| values.get(k))
            .map(|v| (v - group.value).abs())
            .fold(f64::INFINITY, f64::min)
            .min(d.spectral_radius().max(1.0));
        let theta_sq = group.multiplicity as f64 * n * r * r / (gap * gap);
        group.noise_floor = 100.0 * n * theta_sq;
    }
    Ok(ms)
}

/// Classifies every eigenspace as main (`‖P_μ j‖² > τ_main`, with
/// `τ_main = 1e-6·n`) or non-main.
///
/// Fails with [`SpectraError::ClassificationUncertain`] when a projection
/// lies in [`MainSpectrum::gray_zone`]. The zone reaches down to the
/// group's rounding floor rather than to `τ_main/10`: from order 8 on,
/// genuine main eigenspaces with `‖P_μ j‖²` as small as `1e-12` occur and
/// would otherwise be called non-main with confidence.
pub fn classify_main(g: &Graph, d: &EigenDecomposition) -> Result<MainSpectrum, SpectraError> {
    debug_assert_eq!(g.order(), d.order());
    let mut ms = with_projections(d)?;
    let tau = ms.tau_main;
    for i in 0..ms.groups.len() {
        let gray = ms.gray_zone(&ms.groups[i]);
        let group = &mut ms.groups[i];
        let x = group.projection_norm_sq;
        if gray.contains(&x) {
            return Err(SpectraError::ClassificationUncertain {
                group: i,
                value: group.value,
                projection_norm_sq: x,
                tau_main: tau,
            });
        }
        group.is_main = x > tau;
    }
    Ok(ms)
}

/// Classification arbitrated by the exact number of main eigenvalues.
///
/// Outside the gray zone this is [`classify_main`] plus a check that the
/// count equals `exact_rank`. In the gray zone the `exact_rank` eigenspaces
/// with the largest projections are declared main, provided they are
/// separated from the rest by at least a factor of 100 and include every
/// eigenspace that is clearly above the gray zone.
pub fn classify_main_with_rank(
    g: &Graph,
    d: &EigenDecomposition,
    exact_rank: usize,
) -> Result<MainSpectrum, SpectraError> {
    match classify_main(g, d) {
        Ok(ms) => {
            if ms.s() != exact_rank {
                return Err(SpectraError::RouteDisagreement {
                    float_count: ms.s(),
                    exact_rank,
                });
            }
            Ok(ms)
        }
        Err(SpectraError::ClassificationUncertain { .. }) => {
            let mut ms = with_projections(d)?;
            let clear = ms
                .groups
                .iter()
                .filter(|g| g.projection_norm_sq > 10.0 * ms.tau_main)
                .count();
            let mut order: Vec<usize> = (0..ms.groups.len()).collect();
            order.sort_by(|&a, &b| {
                ms.groups[b]
                    .projection_norm_sq
                    .total_cmp(&ms.groups[a].projection_norm_sq)
            });
            let disagree = SpectraError::RouteDisagreement {
                float_count: clear,
                exact_rank,
            };
            if exact_rank == 0 || exact_rank > order.len() || clear > exact_rank {
                return Err(disagree);
            }
            let weakest_main = ms.groups[order[exact_rank - 1]].projection_norm_sq;
            let strongest_rest = order
                .get(exact_rank)
                .map_or(0.0, |&i| ms.groups[i].projection_norm_sq);
            if weakest_main < 100.0 * strongest_rest {
                return Err(disagree);
            }
            for &i in &order[..exact_rank] {
                ms.groups[i].is_main = true;
            }
            Ok(ms)
        }
        Err(e) => Err(e),
    }
}

/// Squared coefficients of the all-ones vector in the main eigenspaces.
///
/// Writing `j = Σ_μ c_μ u_μ` with unit `u_μ ∈ ε(μ)`, the entries are
/// `(μ, c_μ²)`. They satisfy `Σ c² = n`, `Σ μ c² = 2m` and
/// `Σ μ² c² = Σ d_i²`, since these are `jᵀj`, `jᵀAj` and `jᵀA²j`.
#[derive(Debug, Clone, PartialEq)]
pub struct MainDecomposition {
    pub coefficients: Vec<(f64, f64)>,
}

impl MainDecomposition {
    /// `(Σ c², Σ μ c², Σ μ² c²)`.
    pub fn moments(&self) -> (f64, f64, f64) {
        self.coefficients
            .iter()
            .fold((0.0, 0.0, 0.0), |(a, b, c), &(mu, w)| {
                (a + w, b + mu * w, c + mu * mu * w)
            })
    }

    pub fn moment_tolerance(&self, n: usize) -> f64 {
        let l1 = self.coefficients.first().map_or(0.0, |c| c.0);
        1e-6 * n as f64 * (1.0 + l1 * l1)
    }

    /// Largest deviation of the three moments from `n`, `2m`, `Σ d²`.
    pub fn moment_error(&self, degrees: &DegreeVector) -> f64 {
        let (i, ii, iii) = self.moments();
        (i - degrees.n() as f64)
            .abs()
            .max((ii - 2.0 * degrees.m as f64).abs())
            .max((iii - degrees.sum_of_squares as f64).abs())
    }
}

pub fn decompose_all_ones(g: &Graph, ms: &MainSpectrum) -> MainDecomposition {
    debug_assert_eq!(
        g.order(),
        ms.groups.iter().map(|x| x.multiplicity).sum::<usize>()
    );
    MainDecomposition {
        coefficients: ms
            .groups
            .iter()
            .filter(|x| x.is_main)
            .map(|x| (x.value, x.projection_norm_sq))
            .collect(),
    }
}
