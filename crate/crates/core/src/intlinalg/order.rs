use std::fmt;

use num_integer::Integer;

use super::matrix::IntMatrix;
use crate::error::Result;

/// Order of a square matrix in `GL(n, Z)`, as far as a bounded search can
/// tell.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MatrixOrder {
    Finite(u64),
    Infinite,
}

impl MatrixOrder {
    pub fn finite(self) -> Option<u64> {
        match self {
            MatrixOrder::Finite(n) => Some(n),
            MatrixOrder::Infinite => None,
        }
    }
}

impl fmt::Display for MatrixOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MatrixOrder::Finite(n) => write!(f, "{n}"),
            MatrixOrder::Infinite => write!(f, "infinite"),
        }
    }
}

pub fn euler_phi(mut n: u64) -> u64 {
    let mut result = n;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            while n.is_multiple_of(p) {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

/// `lcm{m : φ(m) <= size}`: every finite-order element of `GL(size, Z)` has
/// order dividing this number (12 for size 2, 120 for size 4).
pub fn default_order_cap(size: usize) -> u64 {
    // φ(m) >= sqrt(m / 2), so m <= 2·size² bounds the search.
    let bound = 2 * (size as u64).pow(2) + 2;
    (1..=bound)
        .filter(|&m| euler_phi(m) <= size as u64)
        .fold(1u64, |acc, m| acc.lcm(&m))
}

/// Smallest `n <= cap` with `M^n = I`, else [`MatrixOrder::Infinite`].
/// `cap` defaults to [`default_order_cap`] of the matrix size, which makes
/// the answer exact.
pub fn matrix_order(m: &IntMatrix, cap: Option<u64>) -> Result<MatrixOrder> {
    m.require_square()?;
    let cap = cap.unwrap_or_else(|| default_order_cap(m.rows()));
    let mut power = m.clone();
    for n in 1..=cap {
        if power.is_identity() {
            return Ok(MatrixOrder::Finite(n));
        }
        if n < cap {
            power = &power * m;
        }
    }
    Ok(MatrixOrder::Infinite)
}
