use crate::graph::Graph;

use super::SpectraError;

/// Maximum number of full cyclic sweeps before giving up.
pub const MAX_SWEEPS: usize = 100;

/// Eigenvalues in non-increasing order with an orthonormal eigenvector basis.
#[derive(Debug, Clone)]
pub struct EigenDecomposition {
    pub eigenvalues: Vec<f64>,
    /// `eigenvectors[i]` belongs to `eigenvalues[i]`.
    pub eigenvectors: Vec<Vec<f64>>,
    /// `max_i ‖A v_i − λ_i v_i‖∞`.
    pub residual_bound: f64,
    pub sweeps: usize,
}

impl EigenDecomposition {
    pub fn order(&self) -> usize {
        self.eigenvalues.len()
    }

    pub fn largest(&self) -> f64 {
        self.eigenvalues[0]
    }

    pub fn smallest(&self) -> f64 {
        *self.eigenvalues.last().unwrap()
    }

    pub fn spectral_radius(&self) -> f64 {
        self.eigenvalues.iter().fold(0.0f64, |m, x| m.max(x.abs()))
    }

    pub fn residual_tolerance(&self) -> f64 {
        1e-9 * (1.0 + self.spectral_radius()) * self.order() as f64
    }

    /// Checks orthonormality, the residual bound and the zero trace of an
    /// adjacency matrix.
    pub fn check_invariants(&self) -> Result<(), SpectraError> {
        let n = self.order();
        let ortho_tol = 1e-10 * n as f64;
        let mut worst = 0.0f64;
        for i in 0..n {
            for j in i..n {
                let dot: f64 = self.eigenvectors[i]
                    .iter()
                    .zip(&self.eigenvectors[j])
                    .map(|(a, b)| a * b)
                    .sum();
                let delta = if i == j { 1.0 } else { 0.0 };
                worst = worst.max((dot - delta).abs());
            }
        }
        if worst > ortho_tol {
            return Err(SpectraError::NotOrthonormal {
                deviation: worst,
                tolerance: ortho_tol,
            });
        }
        if self.residual_bound > self.residual_tolerance() {
            return Err(SpectraError::Residual {
                residual: self.residual_bound,
                tolerance: self.residual_tolerance(),
            });
        }
        let trace: f64 = self.eigenvalues.iter().sum();
        let trace_tol = 1e-8 * n as f64 * self.spectral_radius().max(1.0);
        if trace.abs() > trace_tol {
            return Err(SpectraError::Trace {
                trace,
                tolerance: trace_tol,
            });
        }
        Ok(())
    }
}

/// Full eigendecomposition of the adjacency matrix by cyclic Jacobi
/// rotations. Pairs are visited in row order, so the result is
/// deterministic for a fixed graph.
pub fn eigen_decompose(g: &Graph) -> Result<EigenDecomposition, SpectraError> {
    let n = g.order();
    let mut a = vec![0.0f64; n * n];
    for (u, v) in g.edges() {
        a[u * n + v] = 1.0;
        a[v * n + u] = 1.0;
    }
    let original = a.clone();
    let (values, vectors, sweeps) = jacobi_symmetric(a, n)?;

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| values[j].total_cmp(&values[i]).then(i.cmp(&j)));

    let eigenvalues: Vec<f64> = order.iter().map(|&i| values[i]).collect();
    let eigenvectors: Vec<Vec<f64>> = order
        .iter()
        .map(|&i| (0..n).map(|k| vectors[k * n + i]).collect())
        .collect();

    let mut residual_bound = 0.0f64;
    for (lambda, v) in eigenvalues.iter().zip(&eigenvectors) {
        for k in 0..n {
            let av: f64 = (0..n).map(|t| original[k * n + t] * v[t]).sum();
            residual_bound = residual_bound.max((av - lambda * v[k]).abs());
        }
    }

    let d = EigenDecomposition {
        eigenvalues,
        eigenvectors,
        residual_bound,
        sweeps,
    };
    if d.residual_bound > d.residual_tolerance() {
        return Err(SpectraError::ConvergenceFailure {
            sweeps,
            residual: d.residual_bound,
        });
    }
    Ok(d)
}

/// Diagonalises the dense symmetric row-major `n × n` matrix `a`.
///
/// Returns the (unsorted) diagonal, the accumulated rotations as a row-major
/// matrix whose columns are eigenvectors, and the number of sweeps used.
pub(crate) fn jacobi_symmetric(
    mut a: Vec<f64>,
    n: usize,
) -> Result<(Vec<f64>, Vec<f64>, usize), SpectraError> {
    let mut v = vec![0.0f64; n * n];
    for i in 0..n {
        v[i * n + i] = 1.0;
    }
    let frob2: f64 = a.iter().map(|x| x * x).sum();
    let target = (1e-14 * n as f64).powi(2) * frob2;

    let mut sweeps = 0;
    loop {
        let mut off2 = 0.0;
        for p in 0..n {
            for q in p + 1..n {
                off2 += 2.0 * a[p * n + q] * a[p * n + q];
            }
        }
        if off2 <= target {
            break;
        }
        if sweeps == MAX_SWEEPS {
            return Err(SpectraError::ConvergenceFailure {
                sweeps,
                residual: off2.sqrt(),
            });
        }
        sweeps += 1;

        for p in 0..n {
            for q in p + 1..n {
                let apq = a[p * n + q];
                if apq == 0.0 {
                    continue;
                }
                let theta = (a[q * n + q] - a[p * n + p]) / (2.0 * apq);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;

                for k in 0..n {
                    let akp = a[k * n + p];
                    let akq = a[k * n + q];
                    a[k * n + p] = c * akp - s * akq;
                    a[k * n + q] = s * akp + c * akq;
                }
                for k in 0..n {
                    let apk = a[p * n + k];
                    let aqk = a[q * n + k];
                    a[p * n + k] = c * apk - s * aqk;
                    a[q * n + k] = s * apk + c * aqk;
                }
                a[p * n + q] = 0.0;
                a[q * n + p] = 0.0;

                for k in 0..n {
                    let vkp = v[k * n + p];
                    let vkq = v[k * n + q];
                    v[k * n + p] = c * vkp - s * vkq;
                    v[k * n + q] = s * vkp + c * vkq;
                }
            }
        }
    }
    let diag = (0..n).map(|i| a[i * n + i]).collect();
    Ok((diag, v, sweeps))
}
