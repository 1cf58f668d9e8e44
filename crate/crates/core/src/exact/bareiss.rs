//! Fraction-free Gaussian elimination over the integers.
//!
//! Each step picks the entry of largest magnitude in the remaining
//! submatrix as pivot and updates
//! `a[i][j] ← (a[k][k]·a[i][j] − a[i][k]·a[k][j]) / prev_pivot`,
//! where the division is exact. Inputs whose entries fit run on checked
//! `i128` first and restart on [`BigInt`] as soon as an operation would
//! overflow, so the result is always exact.

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};

trait Scalar: Clone + Sized {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn magnitude_gt(&self, other: &Self) -> bool;
    fn neg(&self) -> Option<Self>;
    /// `(a·b − c·d) / e`, or `None` on overflow.
    fn cross_div(a: &Self, b: &Self, c: &Self, d: &Self, e: &Self) -> Option<Self>;
}

macro_rules! checked_scalar {
    ($t:ty) => {
        impl Scalar for $t {
            fn zero() -> Self {
                0
            }
            fn one() -> Self {
                1
            }
            fn is_zero(&self) -> bool {
                *self == 0
            }
            fn magnitude_gt(&self, other: &Self) -> bool {
                self.unsigned_abs() > other.unsigned_abs()
            }
            fn neg(&self) -> Option<Self> {
                self.checked_neg()
            }
            fn cross_div(a: &Self, b: &Self, c: &Self, d: &Self, e: &Self) -> Option<Self> {
                let z = a.checked_mul(*b)?.checked_sub(c.checked_mul(*d)?)?;
                debug_assert_eq!(z % e, 0, "Bareiss division must be exact");
                z.checked_div(*e)
            }
        }
    };
}

checked_scalar!(i64);
checked_scalar!(i128);

impl Scalar for BigInt {
    fn zero() -> Self {
        <BigInt as Zero>::zero()
    }
    fn one() -> Self {
        BigInt::from(1)
    }
    fn is_zero(&self) -> bool {
        <BigInt as Zero>::is_zero(self)
    }
    fn magnitude_gt(&self, other: &Self) -> bool {
        self.abs() > other.abs()
    }
    fn neg(&self) -> Option<Self> {
        Some(-self)
    }
    fn cross_div(a: &Self, b: &Self, c: &Self, d: &Self, e: &Self) -> Option<Self> {
        Some((a * b - c * d) / e)
    }
}

struct Elimination<T> {
    rank: usize,
    /// Determinant for square inputs; zero otherwise.
    det: T,
}

fn eliminate<T: Scalar>(mut a: Vec<Vec<T>>) -> Option<Elimination<T>> {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut prev = T::one();
    let mut negate = false;
    let mut rank = 0;

    for k in 0..rows.min(cols) {
        let mut pivot: Option<(usize, usize)> = None;
        for (i, row) in a.iter().enumerate().skip(k) {
            for (j, x) in row.iter().enumerate().skip(k) {
                if x.is_zero() {
                    continue;
                }
                match pivot {
                    Some((pi, pj)) if !x.magnitude_gt(&a[pi][pj]) => {}
                    _ => pivot = Some((i, j)),
                }
            }
        }
        let Some((pi, pj)) = pivot else {
            break;
        };
        if pi != k {
            a.swap(pi, k);
            negate = !negate;
        }
        if pj != k {
            for row in a.iter_mut() {
                row.swap(pj, k);
            }
            negate = !negate;
        }
        let (top, bottom) = a.split_at_mut(k + 1);
        let pivot_row = &top[k];
        for row in bottom.iter_mut() {
            for j in k + 1..cols {
                row[j] = T::cross_div(&pivot_row[k], &row[j], &row[k], &pivot_row[j], &prev)?;
            }
            row[k] = T::zero();
        }
        prev = pivot_row[k].clone();
        rank += 1;
    }

    let det = if rows != cols || rank < rows {
        T::zero()
    } else if rows == 0 {
        T::one()
    } else if negate {
        prev.neg()?
    } else {
        prev
    };
    Some(Elimination { rank, det })
}

fn narrow(m: &[Vec<BigInt>]) -> Option<Vec<Vec<i128>>> {
    m.iter()
        .map(|row| row.iter().map(|x| x.to_i128()).collect())
        .collect()
}

fn run(m: &[Vec<BigInt>]) -> Elimination<BigInt> {
    let tiny: Option<Vec<Vec<i64>>> = m
        .iter()
        .map(|row| row.iter().map(|x| x.to_i64()).collect())
        .collect();
    if let Some(e) = tiny.and_then(eliminate) {
        return Elimination {
            rank: e.rank,
            det: BigInt::from(e.det),
        };
    }
    if let Some(small) = narrow(m) {
        if let Some(e) = eliminate(small) {
            return Elimination {
                rank: e.rank,
                det: BigInt::from(e.det),
            };
        }
    }
    eliminate(m.to_vec()).expect("BigInt arithmetic does not overflow")
}

/// Rank of a machine-integer matrix; `None` if an intermediate overflows.
pub(crate) fn checked_rank_i128(m: Vec<Vec<i128>>) -> Option<usize> {
    let narrow: Option<Vec<Vec<i64>>> = m
        .iter()
        .map(|row| row.iter().map(|&x| i64::try_from(x).ok()).collect())
        .collect();
    if let Some(e) = narrow.and_then(eliminate) {
        return Some(e.rank);
    }
    eliminate(m).map(|e| e.rank)
}

/// Rank over the rationals of a rectangular integer matrix given as rows.
pub fn exact_rank(m: &[Vec<BigInt>]) -> usize {
    run(m).rank
}

/// Determinant of a square integer matrix.
pub fn exact_det(m: &[Vec<BigInt>]) -> BigInt {
    assert!(
        m.iter().all(|row| row.len() == m.len()),
        "matrix must be square"
    );
    run(m).det
}
