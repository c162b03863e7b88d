//! Small independent reference implementations used to check the library.
//! They work on plain `i128` data and share no code with the crate.

#![allow(dead_code)]

pub type Mat = Vec<Vec<i128>>;

/// Chain-curve classes in the chain basis `c1..c2g`: `c_k` is the `k`-th
/// unit vector and `c_{2g+1} = -(c1 + c3 + ... + c_{2g-1})`.
pub fn chain_classes(g: usize) -> Vec<Vec<i128>> {
    let n = 2 * g;
    let mut out: Vec<Vec<i128>> = (0..n)
        .map(|k| (0..n).map(|i| i128::from(i == k)).collect())
        .collect();
    out.push((0..n).map(|i| if i % 2 == 0 { -1 } else { 0 }).collect());
    out
}

/// `<x, y>` for the chain form: consecutive basis curves meet with sign +1.
pub fn chain_pairing(x: &[i128], y: &[i128]) -> i128 {
    (0..x.len().saturating_sub(1))
        .map(|i| x[i] * y[i + 1] - x[i + 1] * y[i])
        .sum()
}

pub fn chain_form(n: usize) -> Mat {
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if j == i + 1 {
                        1
                    } else if i == j + 1 {
                        -1
                    } else {
                        0
                    }
                })
                .collect()
        })
        .collect()
}

/// `T_c^e(x) = x + e <x, c> c`.
pub fn twist_vector(x: &[i128], c: &[i128], e: i128) -> Vec<i128> {
    let k = e * chain_pairing(x, c);
    x.iter().zip(c).map(|(a, b)| a + k * b).collect()
}

/// Homology matrix of a word over `chain(g)` given as `(curve index, ±1)`
/// letters: row `i` is the image of basis vector `i`, the rightmost letter
/// acting first.
pub fn chain_word_matrix(g: usize, letters: &[(usize, i128)]) -> Mat {
    let classes = chain_classes(g);
    let n = 2 * g;
    (0..n)
        .map(|i| {
            let mut x: Vec<i128> = (0..n).map(|j| i128::from(i == j)).collect();
            for &(c, e) in letters.iter().rev() {
                x = twist_vector(&x, &classes[c], e);
            }
            x
        })
        .collect()
}

pub fn mat_mul(a: &Mat, b: &Mat) -> Mat {
    let (n, m, p) = (a.len(), b.len(), b.first().map_or(0, Vec::len));
    (0..n)
        .map(|i| {
            (0..p)
                .map(|j| (0..m).map(|k| a[i][k] * b[k][j]).sum())
                .collect()
        })
        .collect()
}

pub fn transpose(a: &Mat) -> Mat {
    let cols = a.first().map_or(0, Vec::len);
    (0..cols)
        .map(|j| a.iter().map(|r| r[j]).collect())
        .collect()
}

pub fn identity(n: usize) -> Mat {
    (0..n)
        .map(|i| (0..n).map(|j| i128::from(i == j)).collect())
        .collect()
}

/// Order by repeated multiplication, giving up (returning `None`) past
/// `limit` or once entries exceed `bound`.
pub fn brute_order(m: &Mat, limit: u64, bound: i128) -> Option<u64> {
    let id = identity(m.len());
    let mut p = m.clone();
    for k in 1..=limit {
        if p == id {
            return Some(k);
        }
        if p.iter().flatten().any(|x| x.abs() > bound) {
            return None;
        }
        p = mat_mul(&p, m);
    }
    None
}

pub fn gcd(a: i128, b: i128) -> i128 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Determinant by cofactor expansion.
pub fn det(m: &Mat) -> i128 {
    let n = m.len();
    if n == 0 {
        return 1;
    }
    if n == 1 {
        return m[0][0];
    }
    (0..n)
        .map(|j| {
            let minor: Mat = m[1..]
                .iter()
                .map(|r| {
                    r.iter()
                        .enumerate()
                        .filter(|&(k, _)| k != j)
                        .map(|(_, &v)| v)
                        .collect()
                })
                .collect();
            let sign = if j % 2 == 0 { 1 } else { -1 };
            sign * m[0][j] * det(&minor)
        })
        .sum()
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![Vec::new()];
    }
    if n < k {
        return Vec::new();
    }
    let mut with: Vec<Vec<usize>> = subsets(n - 1, k - 1);
    for s in &mut with {
        s.push(n - 1);
    }
    with.extend(subsets(n - 1, k));
    with
}

/// Invariant factors from determinantal divisors: `d_k = D_k / D_{k-1}`
/// with `D_k` the gcd of all `k × k` minors. Zero factors mark rank loss.
pub fn invariant_factors(m: &Mat) -> Vec<i128> {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut out = Vec::new();
    let mut prev = 1i128;
    for k in 1..=rows.min(cols) {
        let mut dk = 0i128;
        for rs in subsets(rows, k) {
            for cs in subsets(cols, k) {
                let minor: Mat = rs
                    .iter()
                    .map(|&i| cs.iter().map(|&j| m[i][j]).collect())
                    .collect();
                dk = gcd(dk, det(&minor));
            }
        }
        if dk == 0 {
            out.extend(std::iter::repeat_n(0, rows.min(cols) + 1 - k));
            break;
        }
        out.push(dk / prev);
        prev = dk;
    }
    out
}

/// Image of a point under a product of adjacent transpositions
/// `(i_1 i_1+1) ... (i_k i_k+1)`, the rightmost acting first.
pub fn braid_image(strands: usize, indices: &[usize]) -> Vec<usize> {
    (1..=strands)
        .map(|mut x| {
            for &i in indices.iter().rev() {
                if x == i {
                    x = i + 1;
                } else if x == i + 1 {
                    x = i;
                }
            }
            x
        })
        .collect()
}

/// Order of the cyclic abelianization of the genus-0 braid presentation on
/// `r` points: every half-twist has the same class `x`, and the remaining
/// relators say `2(r-1) x = 0` and `r(r-1) x = 0`.
pub fn genus0_abelianization_order(r: i128) -> i128 {
    gcd(2 * (r - 1), r * (r - 1))
}
