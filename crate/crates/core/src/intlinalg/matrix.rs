use std::fmt;
use std::ops::{Mul, Neg};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Dense matrix of arbitrary-precision integers, stored row-major.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BigInt>,
}

impl IntMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<BigInt>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::Dimension(format!(
                "{} entries supplied for a {rows}x{cols} matrix",
                entries.len()
            )));
        }
        Ok(IntMatrix {
            rows,
            cols,
            entries,
        })
    }

    /// Builds a matrix from nested rows. All rows must have the same length.
    pub fn from_rows<T, R>(rows: &[R]) -> Result<Self>
    where
        T: Into<BigInt> + Clone,
        R: AsRef<[T]>,
    {
        let cols = rows.first().map_or(0, |r| r.as_ref().len());
        let mut entries = Vec::with_capacity(rows.len() * cols);
        for (i, row) in rows.iter().enumerate() {
            let row = row.as_ref();
            if row.len() != cols {
                return Err(Error::Dimension(format!(
                    "row {i} has {} entries, expected {cols}",
                    row.len()
                )));
            }
            entries.extend(row.iter().cloned().map(Into::into));
        }
        Ok(IntMatrix {
            rows: rows.len(),
            cols,
            entries,
        })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            entries: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.entries[i * n + i] = BigInt::one();
        }
        m
    }

    pub fn diagonal(values: &[BigInt]) -> Self {
        let n = values.len();
        let mut m = Self::zeros(n, n);
        for (i, v) in values.iter().enumerate() {
            m.entries[i * n + i] = v.clone();
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn entries(&self) -> &[BigInt] {
        &self.entries
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: BigInt) {
        self.entries[i * self.cols + j] = value;
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.entries[j * self.rows + i] = self.get(i, j).clone();
            }
        }
        t
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    let e = self.get(i, j);
                    if i == j {
                        e.is_one()
                    } else {
                        e.is_zero()
                    }
                })
            })
    }

    pub fn is_diagonal(&self) -> bool {
        (0..self.rows).all(|i| (0..self.cols).all(|j| i == j || self.get(i, j).is_zero()))
    }

    pub fn checked_mul(&self, rhs: &IntMatrix) -> Result<IntMatrix> {
        if self.cols != rhs.rows {
            return Err(Error::Dimension(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let mut out = Self::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.get(k, j);
                    if !b.is_zero() {
                        out.entries[i * rhs.cols + j] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    /// Non-negative integer power by repeated squaring.
    pub fn pow(&self, exp: u64) -> Result<IntMatrix> {
        self.require_square()?;
        let mut result = Self::identity(self.rows);
        let mut base = self.clone();
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        Ok(result)
    }

    pub fn trace(&self) -> Result<BigInt> {
        self.require_square()?;
        Ok((0..self.rows).map(|i| self.get(i, i).clone()).sum())
    }

    /// Determinant by fraction-free (Bareiss) elimination.
    pub fn determinant(&self) -> Result<BigInt> {
        self.require_square()?;
        let n = self.rows;
        if n == 0 {
            return Ok(BigInt::one());
        }
        let mut a = self.row_vecs();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if a[k][k].is_zero() {
                match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                    Some(i) => {
                        a.swap(i, k);
                        sign = -sign;
                    }
                    None => return Ok(BigInt::zero()),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                    a[i][j] = v.div_floor(&prev);
                }
            }
            prev = a[k][k].clone();
        }
        Ok(sign * &a[n - 1][n - 1])
    }

    pub fn is_unimodular(&self) -> bool {
        self.determinant().is_ok_and(|d| d.abs().is_one())
    }

    pub(crate) fn require_square(&self) -> Result<()> {
        if self.is_square() {
            Ok(())
        } else {
            Err(Error::NonSquare {
                rows: self.rows,
                cols: self.cols,
            })
        }
    }

    // Elementary operations used by the Smith reduction.

    pub(crate) fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.entries.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub(crate) fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.entries.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// row[target] += factor * row[source]
    pub(crate) fn add_row_multiple(&mut self, target: usize, source: usize, factor: &BigInt) {
        if factor.is_zero() {
            return;
        }
        for j in 0..self.cols {
            let v = &self.entries[source * self.cols + j] * factor;
            self.entries[target * self.cols + j] += v;
        }
    }

    /// col[target] += factor * col[source]
    pub(crate) fn add_col_multiple(&mut self, target: usize, source: usize, factor: &BigInt) {
        if factor.is_zero() {
            return;
        }
        for i in 0..self.rows {
            let v = &self.entries[i * self.cols + source] * factor;
            self.entries[i * self.cols + target] += v;
        }
    }

    pub(crate) fn negate_row(&mut self, i: usize) {
        for j in 0..self.cols {
            let e = &mut self.entries[i * self.cols + j];
            *e = -std::mem::take(e);
        }
    }
}

impl Mul for &IntMatrix {
    type Output = IntMatrix;

    /// Panics on a dimension mismatch; use [`IntMatrix::checked_mul`] otherwise.
    fn mul(self, rhs: &IntMatrix) -> IntMatrix {
        self.checked_mul(rhs).expect("matrix dimensions must agree")
    }
}

impl Neg for &IntMatrix {
    type Output = IntMatrix;

    fn neg(self) -> IntMatrix {
        IntMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|e| -e).collect(),
        }
    }
}

/// Row per line, entries separated by single spaces, no brackets.
impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let line: Vec<String> = self.row(i).iter().map(ToString::to_string).collect();
            writeln!(f, "{}", line.join(" "))?;
        }
        Ok(())
    }
}

/// Text format: a header line `rows cols` followed by `rows` lines of
/// whitespace-separated integers. Blank lines and `#` comments are skipped.
impl FromStr for IntMatrix {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(n, l)| (n + 1, l.split('#').next().unwrap_or("").trim()))
            .filter(|(_, l)| !l.is_empty());

        let (header_line, header) = lines
            .next()
            .ok_or_else(|| Error::parse("", 1, "missing `rows cols` header"))?;
        let dims: Vec<&str> = header.split_whitespace().collect();
        if dims.len() != 2 {
            return Err(Error::parse(
                header,
                header_line,
                "header must be `rows cols`",
            ));
        }
        let parse_dim = |tok: &str| {
            tok.parse::<usize>()
                .map_err(|_| Error::parse(tok, header_line, "expected a non-negative dimension"))
        };
        let rows = parse_dim(dims[0])?;
        let cols = parse_dim(dims[1])?;

        let mut entries = Vec::with_capacity(rows * cols);
        let mut seen_rows = 0;
        for (line_no, line) in lines {
            if seen_rows == rows {
                return Err(Error::parse(line, line_no, "more rows than declared"));
            }
            let before = entries.len();
            for tok in line.split_whitespace() {
                let v = tok
                    .parse::<BigInt>()
                    .map_err(|_| Error::parse(tok, line_no, "expected an integer"))?;
                entries.push(v);
            }
            if entries.len() - before != cols {
                return Err(Error::parse(
                    line,
                    line_no,
                    format!(
                        "row has {} entries, expected {cols}",
                        entries.len() - before
                    ),
                ));
            }
            seen_rows += 1;
        }
        if seen_rows != rows {
            return Err(Error::parse(
                "",
                header_line,
                format!("declared {rows} rows but found {seen_rows}"),
            ));
        }
        IntMatrix::new(rows, cols, entries)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> IntMatrix {
        IntMatrix::from_rows(rows).unwrap()
    }

    #[test]
    fn multiply_and_power() {
        let r = m(&[&[0, 1], &[-1, 0]]);
        assert_eq!(&r * &r, -&IntMatrix::identity(2));
        assert!(r.pow(4).unwrap().is_identity());
        assert!(r.pow(0).unwrap().is_identity());
        let shear = m(&[&[1, 1], &[0, 1]]);
        assert_eq!(shear.pow(5).unwrap(), m(&[&[1, 5], &[0, 1]]));
    }

    #[test]
    fn dimension_errors() {
        let a = m(&[&[1, 2, 3]]);
        assert!(a.checked_mul(&a).is_err());
        assert_eq!(a.pow(2), Err(Error::NonSquare { rows: 1, cols: 3 }));
        assert!(IntMatrix::new(2, 2, vec![BigInt::one()]).is_err());
    }

    #[test]
    fn determinant_small_cases() {
        assert_eq!(
            m(&[&[2, 4], &[6, 8]]).determinant().unwrap(),
            BigInt::from(-8)
        );
        assert_eq!(
            m(&[&[0, 1, 0], &[0, 0, 1], &[1, 0, 0]])
                .determinant()
                .unwrap(),
            BigInt::one()
        );
        assert_eq!(
            m(&[&[1, 2], &[2, 4]]).determinant().unwrap(),
            BigInt::zero()
        );
        assert_eq!(IntMatrix::zeros(0, 0).determinant().unwrap(), BigInt::one());
    }

    #[test]
    fn text_format_round_trip() {
        let text = "2 3\n1 -2 3\n0 0 7\n";
        let a: IntMatrix = text.parse().unwrap();
        assert_eq!(a, m(&[&[1, -2, 3], &[0, 0, 7]]));
        assert_eq!(a.to_string(), "1 -2 3\n0 0 7\n");
    }

    #[test]
    fn text_format_errors_name_the_token() {
        let err = "2 2\n1 x\n3 4\n".parse::<IntMatrix>().unwrap_err();
        assert!(matches!(err, Error::Parse { ref token, position: 2, .. } if token == "x"));
        assert!("2 2\n1 2\n".parse::<IntMatrix>().is_err());
        assert!("1 2\n1 2 3\n".parse::<IntMatrix>().is_err());
        assert!("".parse::<IntMatrix>().is_err());
    }
}
