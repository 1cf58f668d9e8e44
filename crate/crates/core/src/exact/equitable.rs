use num_bigint::BigInt;
use thiserror::Error;

use crate::graph::Graph;

use super::walk::walk_matrix_of;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PartitionError {
    #[error("vertex {0} is in no cell or in more than one")]
    NotAPartition(usize),
    #[error("cell {0} is empty")]
    EmptyCell(usize),
    #[error(
        "not equitable: vertex {vertex} has {found} neighbours in cell {cell}, vertex {reference} of the same cell has {expected}"
    )]
    NotEquitable {
        vertex: usize,
        reference: usize,
        cell: usize,
        found: usize,
        expected: usize,
    },
}

/// An equitable partition with its divisor matrix.
///
/// `quotient[i][j]` is the number of neighbours in cell `j` of any vertex of
/// cell `i`, so `quotient · j` gives the degree of each cell.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EquitablePartition {
    pub cells: Vec<Vec<usize>>,
    pub quotient: Vec<Vec<BigInt>>,
}

impl EquitablePartition {
    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn quotient_i64(&self) -> Vec<Vec<i64>> {
        self.quotient
            .iter()
            .map(|row| row.iter().map(|x| i64::try_from(x).unwrap()).collect())
            .collect()
    }
}

/// Checks that `cells` partition the vertex set equitably and builds the
/// divisor matrix. Every vertex is checked against the first vertex of its
/// cell.
pub fn verify_equitable(
    g: &Graph,
    cells: &[Vec<usize>],
) -> Result<EquitablePartition, PartitionError> {
    let n = g.order();
    let mut cell_of = vec![usize::MAX; n];
    for (c, cell) in cells.iter().enumerate() {
        if cell.is_empty() {
            return Err(PartitionError::EmptyCell(c));
        }
        for &v in cell {
            if v >= n || cell_of[v] != usize::MAX {
                return Err(PartitionError::NotAPartition(v.min(n.saturating_sub(1))));
            }
            cell_of[v] = c;
        }
    }
    if let Some(v) = cell_of.iter().position(|&c| c == usize::MAX) {
        return Err(PartitionError::NotAPartition(v));
    }

    let k = cells.len();
    let counts = |v: usize| {
        let mut row = vec![0usize; k];
        for u in g.neighbors(v) {
            row[cell_of[u]] += 1;
        }
        row
    };
    let mut quotient = Vec::with_capacity(k);
    for cell in cells {
        let reference = cell[0];
        let expected = counts(reference);
        for &v in &cell[1..] {
            let found = counts(v);
            if let Some(j) = (0..k).find(|&j| found[j] != expected[j]) {
                return Err(PartitionError::NotEquitable {
                    vertex: v,
                    reference,
                    cell: j,
                    found: found[j],
                    expected: expected[j],
                });
            }
        }
        quotient.push(expected.into_iter().map(BigInt::from).collect());
    }
    Ok(EquitablePartition {
        cells: cells.to_vec(),
        quotient,
    })
}

/// Coarsest equitable partition, by colour refinement from the one-cell
/// partition. Cells are ordered by their smallest vertex.
pub fn coarsest_equitable(g: &Graph) -> EquitablePartition {
    let n = g.order();
    let mut colour = vec![0usize; n];
    let mut classes = 1;
    let mut order: Vec<usize> = (0..n).collect();
    loop {
        // row v of `sig` is (colour of v, neighbour count per colour)
        let width = classes + 1;
        let mut sig = vec![0usize; n * width];
        for v in 0..n {
            sig[v * width] = colour[v];
            for u in g.neighbors(v) {
                sig[v * width + 1 + colour[u]] += 1;
            }
        }
        let row = |v: usize| &sig[v * width..(v + 1) * width];
        order.sort_by(|&a, &b| row(a).cmp(row(b)));
        let mut refined = vec![0usize; n];
        let mut count = 0;
        for (i, &v) in order.iter().enumerate() {
            if i > 0 && row(order[i - 1]) != row(v) {
                count += 1;
            }
            refined[v] = count;
        }
        let count = count + 1;
        colour = refined;
        if count == classes {
            break;
        }
        classes = count;
    }

    let mut cell_of_colour = vec![usize::MAX; classes];
    let mut cells: Vec<Vec<usize>> = Vec::new();
    for (v, &c) in colour.iter().enumerate() {
        if cell_of_colour[c] == usize::MAX {
            cell_of_colour[c] = cells.len();
            cells.push(Vec::new());
        }
        cells[cell_of_colour[c]].push(v);
    }
    verify_equitable(g, &cells).expect("colour refinement yields an equitable partition")
}

/// Exact rank of the walk matrix of the divisor matrix.
pub fn divisor_walk_rank(p: &EquitablePartition) -> usize {
    walk_matrix_of(&p.quotient).rank
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{build_family, FamilySpec};

    fn graph(spec: FamilySpec) -> Graph {
        build_family(&spec).unwrap()
    }

    #[test]
    fn double_star_divisor() {
        for (k, s) in [(2usize, 3usize), (1, 4), (5, 5)] {
            let g = graph(FamilySpec::DoubleStar { k, s });
            let cells = vec![
                vec![0],
                vec![1],
                (2..2 + k).collect(),
                (2 + k..2 + k + s).collect(),
            ];
            let p = verify_equitable(&g, &cells).unwrap();
            let (k, s) = (k as i64, s as i64);
            assert_eq!(
                p.quotient_i64(),
                vec![
                    vec![0, 1, k, 0],
                    vec![1, 0, 0, s],
                    vec![1, 0, 0, 0],
                    vec![0, 1, 0, 0]
                ]
            );
        }
    }

    #[test]
    fn single_cell() {
        let p = verify_equitable(&graph(FamilySpec::Cycle { n: 5 }), &[(0..5).collect()]).unwrap();
        assert_eq!(p.quotient_i64(), vec![vec![2]]);
        assert_eq!(divisor_walk_rank(&p), 1);

        let err =
            verify_equitable(&graph(FamilySpec::Path { n: 3 }), &[(0..3).collect()]).unwrap_err();
        assert!(matches!(
            err,
            PartitionError::NotEquitable { vertex: 1, .. }
        ));
    }

    #[test]
    fn malformed_partitions() {
        let g = graph(FamilySpec::Path { n: 3 });
        assert_eq!(
            verify_equitable(&g, &[vec![0, 1]]),
            Err(PartitionError::NotAPartition(2))
        );
        assert_eq!(
            verify_equitable(&g, &[vec![0, 1], vec![1, 2]]),
            Err(PartitionError::NotAPartition(1))
        );
        assert_eq!(
            verify_equitable(&g, &[vec![0, 1, 2], vec![]]),
            Err(PartitionError::EmptyCell(1))
        );
    }

    #[test]
    fn coarsest_examples() {
        assert_eq!(
            coarsest_equitable(&graph(FamilySpec::Cycle { n: 6 })).len(),
            1
        );

        let star = coarsest_equitable(&graph(FamilySpec::Star { leaves: 3 }));
        assert_eq!(star.cells, vec![vec![0], vec![1, 2, 3]]);

        let t = coarsest_equitable(&graph(FamilySpec::DoubleStar { k: 2, s: 3 }));
        assert_eq!(t.cells, vec![vec![0], vec![1], vec![2, 3], vec![4, 5, 6]]);
        assert_eq!(divisor_walk_rank(&t), 4);

        let balanced = coarsest_equitable(&graph(FamilySpec::DoubleStar { k: 3, s: 3 }));
        assert_eq!(balanced.cells, vec![vec![0, 1], (2..8).collect()]);
        assert!(divisor_walk_rank(&balanced) < 4);
    }
}
