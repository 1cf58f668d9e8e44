use std::f64::consts::PI;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};
use thiserror::Error;

/// Monic polynomial with integer coefficients, lowest degree first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntPolynomial {
    coefficients: Vec<BigInt>,
}

impl IntPolynomial {
    /// Fails unless the leading coefficient is 1.
    pub fn monic(coefficients: Vec<BigInt>) -> Option<Self> {
        let mut c = coefficients;
        while c.len() > 1 && c.last().is_some_and(Zero::is_zero) {
            c.pop();
        }
        c.last()
            .is_some_and(One::is_one)
            .then_some(IntPolynomial { coefficients: c })
    }

    pub fn x_pow(k: usize) -> Self {
        let mut c = vec![BigInt::zero(); k + 1];
        c[k] = BigInt::one();
        IntPolynomial { coefficients: c }
    }

    pub fn degree(&self) -> usize {
        self.coefficients.len() - 1
    }

    pub fn coefficients(&self) -> &[BigInt] {
        &self.coefficients
    }

    pub fn mul(&self, other: &IntPolynomial) -> IntPolynomial {
        let mut c = vec![BigInt::zero(); self.degree() + other.degree() + 1];
        for (i, a) in self.coefficients.iter().enumerate() {
            for (j, b) in other.coefficients.iter().enumerate() {
                c[i + j] += a * b;
            }
        }
        IntPolynomial { coefficients: c }
    }

    pub fn eval(&self, x: f64) -> f64 {
        self.coefficients
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * x + c.to_f64().unwrap_or(f64::NAN))
    }

    pub fn eval_int(&self, x: &BigInt) -> BigInt {
        self.coefficients
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coefficients.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c < &BigInt::zero();
            let mag = if neg { -c } else { c.clone() };
            match (first, neg) {
                (true, true) => write!(f, "-")?,
                (true, false) => {}
                (false, true) => write!(f, " - ")?,
                (false, false) => write!(f, " + ")?,
            }
            first = false;
            let coeff = if mag.is_one() && k > 0 {
                String::new()
            } else {
                mag.to_string()
            };
            match k {
                0 => write!(f, "{coeff}")?,
                1 => write!(f, "{coeff}x")?,
                _ => write!(f, "{coeff}x^{k}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// `x⁴ − (k+s+1)x² + ks`, the characteristic polynomial of the divisor of
/// `T(k, s)`.
pub fn double_star_quartic(k: u64, s: u64) -> IntPolynomial {
    let z = BigInt::zero;
    IntPolynomial {
        coefficients: vec![
            BigInt::from(k) * BigInt::from(s),
            z(),
            -BigInt::from(k + s + 1),
            z(),
            BigInt::one(),
        ],
    }
}

/// Characteristic polynomial of `T(k, s)`: `x^{k+s−2} (x⁴ − (k+s+1)x² + ks)`.
pub fn double_star_charpoly(k: u64, s: u64) -> IntPolynomial {
    assert!(k >= 1 && s >= 1, "double star needs k, s >= 1");
    IntPolynomial::x_pow((k + s - 2) as usize).mul(&double_star_quartic(k, s))
}

/// `det W(M) = −ks(s−k)²` for the four-cell divisor of `T(k, s)`.
pub fn det_walk_divisor(k: u64, s: u64) -> BigInt {
    let diff = BigInt::from(s) - BigInt::from(k);
    -(BigInt::from(k) * BigInt::from(s) * &diff * &diff)
}

/// The four real roots of the double-star quartic, decreasing.
pub fn double_star_quartic_roots(k: u64, s: u64) -> [f64; 4] {
    let b = (k + s + 1) as f64;
    let disc = (b * b - 4.0 * (k * s) as f64).sqrt();
    let hi = ((b + disc) / 2.0).sqrt();
    let lo = ((b - disc) / 2.0).sqrt();
    [hi, lo, -lo, -hi]
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("eigen index {j} is outside 1..={n}")]
pub struct IndexOutOfRange {
    pub n: usize,
    pub j: usize,
}

/// `j`-th eigenpair of the path `P_n`, `1 <= j <= n`: eigenvalue
/// `2cos(jπ/(n+1))` and eigenvector entries `sin(i·jπ/(n+1))`, `i = 1..=n`.
pub fn path_eigenpair(n: usize, j: usize) -> Result<(f64, Vec<f64>), IndexOutOfRange> {
    if j == 0 || j > n {
        return Err(IndexOutOfRange { n, j });
    }
    let step = j as f64 * PI / (n + 1) as f64;
    let lambda = 2.0 * step.cos();
    let x = (1..=n).map(|i| (i as f64 * step).sin()).collect();
    Ok((lambda, x))
}
