use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::matrix::IntMatrix;
use crate::error::{Error, Result};

/// Integer polynomial in `t`, coefficients stored lowest degree first with no
/// trailing zeros. The zero polynomial has no coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::from_i64(&[1])
    }

    /// `t^n - 1`.
    pub fn x_pow_minus_one(n: usize) -> Self {
        let mut c = vec![BigInt::zero(); n + 1];
        c[0] = BigInt::from(-1);
        c[n] += BigInt::one();
        Self::new(c)
    }

    /// The `n`-th cyclotomic polynomial, obtained by dividing `t^n - 1` by
    /// every `Φ_d` with `d | n`, `d < n`.
    pub fn cyclotomic(n: usize) -> Self {
        assert!(n >= 1, "cyclotomic index must be positive");
        let mut p = Self::x_pow_minus_one(n);
        for d in (1..n).filter(|d| n.is_multiple_of(*d)) {
            let (q, r) = p
                .div_rem_monic(&Self::cyclotomic(d))
                .expect("cyclotomic polynomials are monic");
            debug_assert!(r.is_zero());
            p = q;
        }
        p
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, with `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(One::is_one)
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut c = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                c[i + j] += a * b;
            }
        }
        Self::new(c)
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let zero = BigInt::zero();
        Self::new(
            (0..n)
                .map(|i| self.coeffs.get(i).unwrap_or(&zero) + other.coeffs.get(i).unwrap_or(&zero))
                .collect(),
        )
    }

    pub fn neg(&self) -> Self {
        Self::new(self.coeffs.iter().map(|c| -c).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(), |acc, _| acc.mul(self))
    }

    /// Quotient and remainder by a monic divisor; exact over the integers.
    pub fn div_rem_monic(&self, divisor: &Self) -> Result<(Self, Self)> {
        if !divisor.is_monic() {
            return Err(Error::invalid("divisor must be monic"));
        }
        let dd = divisor.coeffs.len() - 1;
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((Self::zero(), self.clone()));
        }
        let mut quot = vec![BigInt::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = std::mem::take(&mut rem[k + dd]);
            if c.is_zero() {
                continue;
            }
            for (j, dc) in divisor.coeffs[..dd].iter().enumerate() {
                rem[k + j] -= &c * dc;
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        Ok((Self::new(quot), Self::new(rem)))
    }

    pub fn divides(&self, other: &Self) -> Result<bool> {
        Ok(other.div_rem_monic(self)?.1.is_zero())
    }

    /// Evaluates at an integer point.
    pub fn eval(&self, t: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * t + c)
    }

    /// Whether this polynomial factors completely into cyclotomic
    /// polynomials `Φ_d` with `d | n`, i.e. whether all its roots are
    /// `n`-th roots of unity.
    pub fn is_product_of_cyclotomics_dividing(&self, n: usize) -> bool {
        if !self.is_monic() || n == 0 {
            return false;
        }
        let mut rest = self.clone();
        for d in (1..=n).filter(|d| n.is_multiple_of(*d)) {
            let phi = Self::cyclotomic(d);
            loop {
                if rest.degree() == Some(0) {
                    return true;
                }
                let (q, r) = rest.div_rem_monic(&phi).expect("monic");
                if !r.is_zero() {
                    break;
                }
                rest = q;
            }
        }
        rest.degree() == Some(0)
    }
}

/// Characteristic polynomial `det(t·I - M)` by the Faddeev–LeVerrier
/// recurrence; every division in it is exact over the integers.
pub fn char_poly(m: &IntMatrix) -> Result<IntPolynomial> {
    m.require_square()?;
    let n = m.rows();
    let mut coeffs = vec![BigInt::zero(); n + 1];
    coeffs[n] = BigInt::one();
    let mut mk = IntMatrix::zeros(n, n);
    for k in 1..=n {
        // M_k = A·M_{k-1} + c_{n-k+1}·I
        let mut next = m * &mk;
        for i in 0..n {
            let v = next.get(i, i) + &coeffs[n - k + 1];
            next.set(i, i, v);
        }
        let tr = (m * &next).trace()?;
        let (q, r) = tr.div_rem(&BigInt::from(k));
        debug_assert!(r.is_zero());
        coeffs[n - k] = -q;
        mk = next;
    }
    Ok(IntPolynomial::new(coeffs))
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            let a = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let show_coeff = !a.is_one() || k == 0;
            match (show_coeff, k) {
                (true, 0) => write!(f, "{a}")?,
                (true, 1) => write!(f, "{a}t")?,
                (true, _) => write!(f, "{a}t^{k}")?,
                (false, 1) => write!(f, "t")?,
                (false, _) => write!(f, "t^{k}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclotomic_table() {
        assert_eq!(
            IntPolynomial::cyclotomic(1),
            IntPolynomial::from_i64(&[-1, 1])
        );
        assert_eq!(
            IntPolynomial::cyclotomic(4),
            IntPolynomial::from_i64(&[1, 0, 1])
        );
        assert_eq!(
            IntPolynomial::cyclotomic(6),
            IntPolynomial::from_i64(&[1, -1, 1])
        );
        assert_eq!(
            IntPolynomial::cyclotomic(10),
            IntPolynomial::from_i64(&[1, -1, 1, -1, 1])
        );
        assert_eq!(
            IntPolynomial::cyclotomic(12),
            IntPolynomial::from_i64(&[1, 0, -1, 0, 1])
        );
    }

    #[test]
    fn division() {
        let p = IntPolynomial::x_pow_minus_one(6);
        let (q, r) = p.div_rem_monic(&IntPolynomial::from_i64(&[-1, 1])).unwrap();
        assert!(r.is_zero());
        assert_eq!(q, IntPolynomial::from_i64(&[1, 1, 1, 1, 1, 1]));
        let (_, r) = IntPolynomial::from_i64(&[1, 0, 1])
            .div_rem_monic(&IntPolynomial::from_i64(&[-1, 1]))
            .unwrap();
        assert_eq!(r, IntPolynomial::from_i64(&[2]));
        assert!(IntPolynomial::one()
            .div_rem_monic(&IntPolynomial::from_i64(&[1, 2]))
            .is_err());
    }

    #[test]
    fn char_poly_small() {
        assert_eq!(
            char_poly(&IntMatrix::identity(2)).unwrap(),
            IntPolynomial::from_i64(&[1, -2, 1])
        );
        assert_eq!(
            char_poly(&IntMatrix::zeros(3, 3)).unwrap(),
            IntPolynomial::from_i64(&[0, 0, 0, 1])
        );
        assert!(char_poly(&IntMatrix::zeros(2, 3)).is_err());
    }

    #[test]
    fn cyclotomic_product_check() {
        let p = IntPolynomial::cyclotomic(10);
        assert!(p.is_product_of_cyclotomics_dividing(10));
        assert!(!p.is_product_of_cyclotomics_dividing(5));
        let sq = IntPolynomial::cyclotomic(1).pow(2);
        assert!(sq.is_product_of_cyclotomics_dividing(1));
        assert!(!IntPolynomial::from_i64(&[1, -3, 1]).is_product_of_cyclotomics_dividing(12));
    }

    #[test]
    fn display() {
        assert_eq!(
            IntPolynomial::cyclotomic(10).to_string(),
            "t^4 - t^3 + t^2 - t + 1"
        );
        assert_eq!(
            IntPolynomial::from_i64(&[0, -2, 0, 1]).to_string(),
            "t^3 - 2t"
        );
        assert_eq!(IntPolynomial::zero().to_string(), "0");
    }
}
