use crate::exact::walk_matrix;
use crate::graph::{DegreeVector, Graph};
use crate::graph6::to_graph6_string;
use crate::spectra::{
    classify_main, classify_main_with_rank, eigen_decompose, EigenDecomposition, EigenGroup,
    MainSpectrum, SpectraError,
};

/// Everything the checkers need about one graph.
///
/// The main flags are always consistent with the exact walk-matrix rank:
/// construction fails with [`SpectraError::RouteDisagreement`] otherwise.
#[derive(Debug, Clone)]
pub struct Spectral {
    pub graph: Graph,
    pub degrees: DegreeVector,
    pub eigen: EigenDecomposition,
    pub spectrum: MainSpectrum,
    pub walk_rank: usize,
    /// The float classification hit the gray zone and was settled by the
    /// exact rank.
    pub gray_zone: bool,
}

impl Spectral {
    pub fn new(graph: Graph) -> Result<Self, SpectraError> {
        let eigen = eigen_decompose(&graph)?;
        eigen.check_invariants()?;
        let walk_rank = walk_matrix(&graph).rank;
        let (spectrum, gray_zone) = match classify_main(&graph, &eigen) {
            Ok(ms) if ms.s() == walk_rank => (ms, false),
            Ok(ms) => {
                return Err(SpectraError::RouteDisagreement {
                    float_count: ms.s(),
                    exact_rank: walk_rank,
                })
            }
            Err(SpectraError::ClassificationUncertain { .. }) => {
                (classify_main_with_rank(&graph, &eigen, walk_rank)?, true)
            }
            Err(e) => return Err(e),
        };
        let degrees = graph.degree_data();
        Ok(Spectral {
            graph,
            degrees,
            eigen,
            spectrum,
            walk_rank,
            gray_zone,
        })
    }

    pub fn n(&self) -> usize {
        self.graph.order()
    }

    pub fn lambda1(&self) -> f64 {
        self.eigen.largest()
    }

    pub fn lambda_n(&self) -> f64 {
        self.eigen.smallest()
    }

    /// Second largest eigenvalue, counted with multiplicity.
    pub fn lambda2(&self) -> Option<f64> {
        self.eigen.eigenvalues.get(1).copied()
    }

    /// Every computed eigenvalue is within this distance of a true one: the
    /// 2-norm residual of a unit vector is at most `√n·‖r‖∞`, doubled to
    /// cover the slack in orthonormality.
    pub fn eigenvalue_error(&self) -> f64 {
        2.0 * (self.n() as f64).sqrt() * self.eigen.residual_bound
    }

    pub fn top(&self) -> &EigenGroup {
        self.spectrum.largest()
    }

    pub fn bottom(&self) -> &EigenGroup {
        self.spectrum.smallest()
    }

    pub fn s(&self) -> usize {
        self.spectrum.s()
    }

    pub fn main_groups(&self) -> impl Iterator<Item = &EigenGroup> {
        self.spectrum.groups.iter().filter(|g| g.is_main)
    }
}

/// A graph and its complement, both analysed.
#[derive(Debug, Clone)]
pub struct Analysis {
    /// Family descriptor or graph6 line.
    pub instance: String,
    pub g: Spectral,
    pub complement: Spectral,
}

impl Analysis {
    /// Uses the graph6 line as the instance descriptor.
    pub fn new(graph: Graph) -> Result<Self, SpectraError> {
        let instance = to_graph6_string(&graph);
        Self::with_instance(graph, instance)
    }

    pub fn with_instance(graph: Graph, instance: impl Into<String>) -> Result<Self, SpectraError> {
        let complement = Spectral::new(graph.complement())?;
        let g = Spectral::new(graph)?;
        Ok(Analysis {
            instance: instance.into(),
            g,
            complement,
        })
    }

    /// Explains a failed comparison between an eigenvalue of `G` and one of
    /// `Ḡ` that came out inside a fixed tolerance. Above the combined
    /// eigenvalue error bound the two values are provably distinct and the
    /// tolerance is too coarse for the instance; below it floating point
    /// cannot separate them.
    pub fn tolerance_note(&self, distance: f64) -> String {
        let bound = 100.0 * (self.g.eigenvalue_error() + self.complement.eigenvalue_error());
        let (d, b) = (super::fmt_float(distance), super::fmt_float(bound));
        if distance > bound {
            format!("values differ by {d}, above the eigenvalue error bound {b}: a near-coincidence inside the tolerance, not a counterexample")
        } else {
            format!("values differ by {d}, within the eigenvalue error bound {b}: floating point cannot separate them")
        }
    }

    /// `−1 − λ_n(G)`.
    pub fn window(&self) -> f64 {
        -1.0 - self.g.lambda_n()
    }
}
