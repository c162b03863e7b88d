use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::matrix::IntMatrix;
use super::snf::smith_normal_form;
use crate::error::{Error, Result};

/// A finitely generated abelian group in invariant-factor form.
///
/// Factors satisfy `d_1 | d_2 | ... | d_k`, every torsion factor is at least
/// 2, and each infinite cyclic factor is encoded as `0` at the end of the
/// list. The trivial group has no factors.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AbelianGroup {
    invariant_factors: Vec<BigInt>,
}

impl AbelianGroup {
    pub fn trivial() -> Self {
        AbelianGroup {
            invariant_factors: Vec::new(),
        }
    }

    pub fn cyclic(n: u64) -> Self {
        Self::from_cyclic_orders([BigInt::from(n)])
    }

    /// `Z^rank`.
    pub fn free(rank: usize) -> Self {
        AbelianGroup {
            invariant_factors: vec![BigInt::zero(); rank],
        }
    }

    /// Accepts factors already in canonical form and checks them.
    pub fn from_invariant_factors(factors: Vec<BigInt>) -> Result<Self> {
        let mut seen_zero = false;
        for (i, d) in factors.iter().enumerate() {
            if d.is_zero() {
                seen_zero = true;
                continue;
            }
            if seen_zero {
                return Err(Error::invalid("infinite factors must come last"));
            }
            if *d < BigInt::from(2) {
                return Err(Error::invalid(format!("invariant factor {d} is not >= 2")));
            }
            if i > 0 && !d.is_multiple_of(&factors[i - 1]) {
                return Err(Error::invalid(format!(
                    "{} does not divide {d}",
                    factors[i - 1]
                )));
            }
        }
        Ok(AbelianGroup {
            invariant_factors: factors,
        })
    }

    /// Direct sum of cyclic groups `Z/n` for the given orders (`0` meaning
    /// `Z`, `1` and `-1` meaning the trivial group), normalized.
    pub fn from_cyclic_orders(orders: impl IntoIterator<Item = BigInt>) -> Self {
        let mut free = 0usize;
        let mut torsion = Vec::new();
        for n in orders {
            let n = n.abs();
            if n.is_zero() {
                free += 1;
            } else if !n.is_one() {
                torsion.push(n);
            }
        }
        let mut factors: Vec<BigInt> = if torsion.len() <= 1 {
            torsion
        } else {
            smith_normal_form(&IntMatrix::diagonal(&torsion))
                .diagonal()
                .into_iter()
                .filter(|d| !d.is_one())
                .collect()
        };
        factors.extend(std::iter::repeat_n(BigInt::zero(), free));
        AbelianGroup {
            invariant_factors: factors,
        }
    }

    pub fn direct_sum(&self, other: &AbelianGroup) -> AbelianGroup {
        Self::from_cyclic_orders(
            self.invariant_factors
                .iter()
                .chain(&other.invariant_factors)
                .cloned(),
        )
    }

    pub fn invariant_factors(&self) -> &[BigInt] {
        &self.invariant_factors
    }

    pub fn torsion_factors(&self) -> &[BigInt] {
        let k = self.invariant_factors.len() - self.rank();
        &self.invariant_factors[..k]
    }

    /// Number of infinite cyclic factors.
    pub fn rank(&self) -> usize {
        self.invariant_factors
            .iter()
            .filter(|d| d.is_zero())
            .count()
    }

    pub fn is_trivial(&self) -> bool {
        self.invariant_factors.is_empty()
    }

    pub fn is_finite(&self) -> bool {
        self.rank() == 0
    }

    pub fn is_cyclic(&self) -> bool {
        self.invariant_factors.len() <= 1
    }

    /// Group order, or `None` for an infinite group.
    pub fn order(&self) -> Option<BigInt> {
        self.is_finite()
            .then(|| self.invariant_factors.iter().product())
    }

    /// Elementary divisors `p^k`, grouped by prime in increasing order.
    pub fn primary_factors(&self) -> Vec<BigInt> {
        let mut out: Vec<(BigInt, BigInt)> = Vec::new();
        for d in self.torsion_factors() {
            for (p, k) in factorize(d) {
                out.push((p.clone(), p.pow(k)));
            }
        }
        out.sort();
        out.into_iter().map(|(_, q)| q).collect()
    }
}

fn factorize(n: &BigInt) -> Vec<(BigInt, u32)> {
    let mut n = n.abs();
    let mut out = Vec::new();
    let mut p = BigInt::from(2);
    while &p * &p <= n {
        let mut k = 0;
        while (&n % &p).is_zero() {
            n /= &p;
            k += 1;
        }
        if k > 0 {
            out.push((p.clone(), k));
        }
        p += 1;
    }
    if n > BigInt::one() {
        out.push((n, 1));
    }
    out
}

/// `0` for the trivial group, otherwise e.g. `Z/2 + Z/10 + Z`.
impl fmt::Display for AbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .invariant_factors
            .iter()
            .map(|d| {
                if d.is_zero() {
                    "Z".to_string()
                } else {
                    format!("Z/{d}")
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}
