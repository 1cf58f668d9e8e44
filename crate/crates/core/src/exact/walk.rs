use num_bigint::BigInt;
use num_traits::ToPrimitive;

use crate::graph::Graph;

use super::bareiss::checked_rank_i128;
use super::exact_rank;

/// `W = [j, Aj, A²j, …, A^{n−1}j]` with exact entries.
///
/// Entry `(i, c)` is the number of walks of length `c` that start at `i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WalkMatrix {
    /// Column-major: `columns[c][i]`.
    pub columns: Vec<Vec<BigInt>>,
    pub rank: usize,
}

impl WalkMatrix {
    pub fn order(&self) -> usize {
        self.columns.len()
    }

    pub fn entry(&self, vertex: usize, length: usize) -> &BigInt {
        &self.columns[length][vertex]
    }

    pub fn rows(&self) -> Vec<Vec<BigInt>> {
        transpose(&self.columns)
    }
}

fn transpose<T: Clone>(columns: &[Vec<T>]) -> Vec<Vec<T>> {
    let n = columns.first().map_or(0, Vec::len);
    (0..n)
        .map(|i| columns.iter().map(|col| col[i].clone()).collect())
        .collect()
}

/// Builds `[j, Mj, …]` by repeated `step`, first in checked `i128` and, on
/// overflow anywhere, again in `BigInt`.
fn build(
    r: usize,
    step_small: impl Fn(&[i128]) -> Option<Vec<i128>>,
    step_big: impl Fn(&[BigInt]) -> Vec<BigInt>,
) -> WalkMatrix {
    let mut small: Vec<Vec<i128>> = Vec::with_capacity(r);
    if r > 0 {
        small.push(vec![1; r]);
    }
    for c in 1..r {
        match step_small(&small[c - 1]) {
            Some(next) => small.push(next),
            None => break,
        }
    }
    if small.len() == r {
        let columns = small
            .iter()
            .map(|col| col.iter().map(|&x| BigInt::from(x)).collect())
            .collect();
        let mut w = WalkMatrix { columns, rank: 0 };
        w.rank = checked_rank_i128(transpose(&small)).unwrap_or_else(|| exact_rank(&w.rows()));
        return w;
    }
    let mut columns: Vec<Vec<BigInt>> = Vec::with_capacity(r);
    columns.push(vec![BigInt::from(1); r]);
    for c in 1..r {
        let next = step_big(&columns[c - 1]);
        columns.push(next);
    }
    let mut w = WalkMatrix { columns, rank: 0 };
    w.rank = exact_rank(&w.rows());
    w
}

/// Walk matrix of the adjacency matrix of `g`.
pub fn walk_matrix(g: &Graph) -> WalkMatrix {
    let n = g.order();
    let neighbours: Vec<Vec<usize>> = (0..n).map(|v| g.neighbors(v).collect()).collect();
    build(
        n,
        |prev| {
            neighbours
                .iter()
                .map(|nb| {
                    nb.iter()
                        .try_fold(0i128, |acc, &u| acc.checked_add(prev[u]))
                })
                .collect()
        },
        |prev| {
            neighbours
                .iter()
                .map(|nb| nb.iter().map(|&u| &prev[u]).sum())
                .collect()
        },
    )
}

/// Walk matrix `[j, Mj, …, M^{r−1}j]` of an arbitrary square integer matrix.
pub fn walk_matrix_of(m: &[Vec<BigInt>]) -> WalkMatrix {
    let r = m.len();
    let small_m: Option<Vec<Vec<i128>>> = m
        .iter()
        .map(|row| row.iter().map(|x| x.to_i128()).collect())
        .collect();
    build(
        r,
        |prev| {
            let sm = small_m.as_ref()?;
            sm.iter()
                .map(|row| {
                    row.iter()
                        .zip(prev)
                        .try_fold(0i128, |acc, (a, b)| acc.checked_add(a.checked_mul(*b)?))
                })
                .collect()
        },
        |prev| {
            m.iter()
                .map(|row| row.iter().zip(prev).map(|(a, b)| a * b).sum())
                .collect()
        },
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::enumerate_graphs;
    use crate::families::{build_family, FamilySpec};

    fn ints(col: &[BigInt]) -> Vec<i64> {
        col.iter().map(|x| i64::try_from(x).unwrap()).collect()
    }

    /// Counts walks by explicit depth-first enumeration.
    fn brute_walks(g: &Graph, start: usize, len: usize) -> u64 {
        if len == 0 {
            return 1;
        }
        g.neighbors(start).map(|u| brute_walks(g, u, len - 1)).sum()
    }

    #[test]
    fn p3_columns() {
        let w = walk_matrix(&build_family(&FamilySpec::Path { n: 3 }).unwrap());
        assert_eq!(ints(&w.columns[0]), vec![1, 1, 1]);
        assert_eq!(ints(&w.columns[1]), vec![1, 2, 1]);
        assert_eq!(ints(&w.columns[2]), vec![2, 2, 2]);
        assert_eq!(w.rank, 2);
    }

    #[test]
    fn k2_and_p4() {
        let w = walk_matrix(&build_family(&FamilySpec::Complete { n: 2 }).unwrap());
        assert_eq!(ints(&w.columns[1]), vec![1, 1]);
        assert_eq!(w.rank, 1);
        let w = walk_matrix(&build_family(&FamilySpec::DoubleStar { k: 1, s: 1 }).unwrap());
        assert_eq!(w.rank, 2);
    }

    #[test]
    fn entries_count_walks() {
        for n in 1..=5 {
            for g in enumerate_graphs(n, false).unwrap() {
                let w = walk_matrix(&g);
                for len in 0..n.min(5) {
                    for v in 0..n {
                        assert_eq!(*w.entry(v, len), BigInt::from(brute_walks(&g, v, len)));
                    }
                }
            }
        }
    }

    #[test]
    fn walks_on_six_vertices_up_to_length_four() {
        let g = build_family(&FamilySpec::DoubleStar { k: 2, s: 2 }).unwrap();
        let w = walk_matrix(&g);
        for len in 0..=4 {
            for v in 0..6 {
                assert_eq!(*w.entry(v, len), BigInt::from(brute_walks(&g, v, len)));
            }
        }
    }

    #[test]
    fn overflowing_columns_fall_back_to_bigint() {
        // 39^39 does not fit in i128
        let k40 = build_family(&FamilySpec::Complete { n: 40 }).unwrap();
        let w = walk_matrix(&k40);
        assert_eq!(w.rank, 1);
        assert_eq!(*w.entry(7, 39), BigInt::from(39).pow(39));

        let huge = BigInt::from(2).pow(100);
        let m = vec![
            vec![huge.clone(), BigInt::from(1)],
            vec![BigInt::from(1), BigInt::from(0)],
        ];
        let w = walk_matrix_of(&m);
        assert_eq!(w.rank, 2);
        assert_eq!(*w.entry(0, 1), &huge + 1);
    }
}
