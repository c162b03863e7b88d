//! Orbit and Euler-characteristic arithmetic for cyclic symmetries of
//! `Σ_{g,r}`, plus the permutations they induce on boundary components.

use std::fmt;

use crate::error::{Error, Result};

/// A model `Z_n` action on a closed surface, remembered through its
/// exceptional orbits. Boundary components are obtained by removing a union
/// of orbits; the special ones can be used at most once each, free orbits of
/// size `n` any number of times.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CyclicSymmetrySpec {
    pub order: u32,
    pub genus: u32,
    pub special_orbits: Vec<u32>,
}

impl CyclicSymmetrySpec {
    pub fn new(order: u32, genus: u32, mut special_orbits: Vec<u32>) -> Result<Self> {
        if order < 2 {
            return Err(Error::invalid("symmetry order must be >= 2"));
        }
        if let Some(o) = special_orbits
            .iter()
            .find(|&&o| o == 0 || o >= order || !order.is_multiple_of(o))
        {
            return Err(Error::invalid(format!(
                "special orbit size {o} must be a proper divisor of {order}"
            )));
        }
        special_orbits.sort_unstable();
        Ok(CyclicSymmetrySpec {
            order,
            genus,
            special_orbits,
        })
    }

    pub fn fixed_points(&self) -> usize {
        self.special_orbits.iter().filter(|&&o| o == 1).count()
    }
}

/// Looks up a built-in symmetry: `tau4`, `tau5`, `tau6`, and `tau2`/`tau3`
/// with a genus written `tau2(G)` or `tau2:g=G`.
pub fn builtin_spec(name: &str) -> Result<CyclicSymmetrySpec> {
    let lower = name.trim().to_ascii_lowercase();
    match lower.as_str() {
        "tau4" => return CyclicSymmetrySpec::new(4, 1, vec![1, 1, 2]),
        "tau5" => return CyclicSymmetrySpec::new(5, 2, vec![1, 1, 1]),
        "tau6" => return CyclicSymmetrySpec::new(6, 1, vec![1, 2, 3]),
        _ => {}
    }
    let unknown = || Error::UnknownName(name.to_string());
    let (base, genus) = if let Some(rest) = lower.strip_suffix(')') {
        let (base, g) = rest.split_once('(').ok_or_else(unknown)?;
        (base, g)
    } else {
        let (base, g) = lower.split_once(":g=").ok_or_else(unknown)?;
        (base, g)
    };
    let g: u32 = genus.trim().parse().map_err(|_| unknown())?;
    match base {
        "tau2" => CyclicSymmetrySpec::new(2, g, vec![1; 2 * g as usize + 2]),
        "tau3" => CyclicSymmetrySpec::new(3, g, vec![1; g as usize + 2]),
        _ => Err(unknown()),
    }
}

/// Whether `r` points can be removed as a union of orbits: some subset of
/// the special orbits plus any number of free orbits.
pub fn realizable_boundary_count(spec: &CyclicSymmetrySpec, r: u64) -> bool {
    let n = u64::from(spec.order);
    let total: u64 = spec.special_orbits.iter().map(|&o| u64::from(o)).sum();
    let mut sums = vec![false; total as usize + 1];
    sums[0] = true;
    for &o in &spec.special_orbits {
        for s in (o as usize..sums.len()).rev() {
            sums[s] |= sums[s - o as usize];
        }
    }
    sums.iter()
        .enumerate()
        .any(|(s, &ok)| ok && (s as u64) <= r && (r - s as u64).is_multiple_of(n))
}

/// Genus `g'` of the quotient of a free `Z_n` action on `Σ_{g,b}`, from
/// `2 - 2g - b = n (2 - 2g' - b)`, if an integer solution `g' >= 0` exists.
pub fn free_quotient_genus(g: u32, n: u32, b: u32) -> Result<Option<u32>> {
    if n < 2 {
        return Err(Error::invalid("free quotient needs n >= 2"));
    }
    let (g, n, b) = (i64::from(g), i64::from(n), i64::from(b));
    let chi = 2 - 2 * g - b;
    if chi % n != 0 {
        return Ok(None);
    }
    let twice = 2 - b - chi / n;
    if twice < 0 || twice % 2 != 0 {
        return Ok(None);
    }
    Ok(Some((twice / 2) as u32))
}

/// All `(g', t)` with `t = 2 + g - 2g'` fixed points, `t >= 0` and
/// `0 <= g' <= g` (a quotient never has larger genus), by increasing `g'`.
pub fn z3_fixed_point_profiles(g: u32) -> Vec<(u32, u32)> {
    (0..=g.min((g + 2) / 2))
        .map(|gq| (gq, 2 + g - 2 * gq))
        .collect()
}

/// Whether an involution of `Σ_{g,r}` (`g >= 1`) can leave exactly `k`
/// boundary components invariant.
pub fn involution_exists(g: u32, r: u32, k: u32) -> Result<bool> {
    if g == 0 {
        return Err(Error::invalid("involution criterion needs genus >= 1"));
    }
    Ok(k <= 3 && k <= r && (r - k).is_multiple_of(2))
}

/// A permutation of `{1, ..., n}`, stored 0-based.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (0..n).collect(),
        }
    }

    /// From 1-based one-line notation.
    pub fn from_images(images: &[usize]) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in images {
            if x == 0 || x > n || seen[x - 1] {
                return Err(Error::invalid(format!("{images:?} is not a permutation")));
            }
            seen[x - 1] = true;
        }
        Ok(Permutation {
            images: images.iter().map(|x| x - 1).collect(),
        })
    }

    /// From 1-based disjoint or overlapping cycles, composed right to left.
    pub fn from_cycles(n: usize, cycles: &[&[usize]]) -> Result<Self> {
        let mut p = Self::identity(n);
        for cycle in cycles.iter().rev() {
            let mut c = Self::identity(n);
            for (k, &x) in cycle.iter().enumerate() {
                let y = cycle[(k + 1) % cycle.len()];
                if x == 0 || x > n || y == 0 || y > n {
                    return Err(Error::invalid(format!("cycle entry out of range 1..={n}")));
                }
                c.images[x - 1] = y - 1;
            }
            if Self::from_images(&c.images.iter().map(|x| x + 1).collect::<Vec<_>>()).is_err() {
                return Err(Error::invalid(format!("{cycle:?} repeats a point")));
            }
            p = c.compose(&p);
        }
        Ok(p)
    }

    pub fn transposition(n: usize, i: usize, j: usize) -> Result<Self> {
        if i == j {
            return Err(Error::invalid("transposition needs distinct points"));
        }
        Self::from_cycles(n, &[&[i, j]])
    }

    pub fn size(&self) -> usize {
        self.images.len()
    }

    /// Image of the 1-based point `x`.
    pub fn apply(&self, x: usize) -> usize {
        self.images[x - 1] + 1
    }

    /// 1-based one-line notation.
    pub fn images(&self) -> Vec<usize> {
        self.images.iter().map(|x| x + 1).collect()
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.size(), other.size(), "permutation sizes differ");
        Permutation {
            images: other.images.iter().map(|&x| self.images[x]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.size()];
        for (x, &y) in self.images.iter().enumerate() {
            images[y] = x;
        }
        Permutation { images }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(x, &y)| x == y)
    }

    pub fn is_involution(&self) -> bool {
        self.compose(self).is_identity()
    }

    /// 1-based fixed points in increasing order.
    pub fn fixed_points(&self) -> Vec<usize> {
        (0..self.size())
            .filter(|&x| self.images[x] == x)
            .map(|x| x + 1)
            .collect()
    }

    /// Nontrivial cycles, each starting at its least point, ordered by it.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.size()];
        let mut out = Vec::new();
        for start in 0..self.size() {
            if seen[start] || self.images[start] == start {
                continue;
            }
            let mut cycle = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                cycle.push(x + 1);
                x = self.images[x];
            }
            out.push(cycle);
        }
        out
    }
}

/// Cycle notation, e.g. `(1 6)(2 5)(3 4)`; the identity is `()`.
impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return f.write_str("()");
        }
        for c in cycles {
            let body: Vec<String> = c.iter().map(usize::to_string).collect();
            write!(f, "({})", body.join(" "))?;
        }
        Ok(())
    }
}

/// Writes `(i j) = α ∘ β` with α, β involutions of `{1..n}` fixing at most
/// three points each.
///
/// For `(1 2)`: `α = (1 2)(3 4)...` and `β = (3 4)...`, pairing consecutive
/// points from 3 on and leaving the last point alone when `n` is odd. The
/// general case relabels `1 ↦ i`, `2 ↦ j` and the rest in increasing order.
pub fn transposition_as_two_involutions(
    n: usize,
    i: usize,
    j: usize,
) -> Result<(Permutation, Permutation)> {
    if n < 2 {
        return Err(Error::invalid("need n >= 2"));
    }
    if i == j {
        return Err(Error::invalid("i and j must differ"));
    }
    if i == 0 || j == 0 || i > n || j > n {
        return Err(Error::invalid(format!("indices must lie in 1..={n}")));
    }
    let mut label = vec![i, j];
    label.extend((1..=n).filter(|&x| x != i && x != j));

    let mut pairs: Vec<[usize; 2]> = (2..n - 1)
        .step_by(2)
        .map(|k| [label[k], label[k + 1]])
        .collect();
    let beta_cycles: Vec<&[usize]> = pairs.iter().map(|p| p.as_slice()).collect();
    let beta = Permutation::from_cycles(n, &beta_cycles)?;
    pairs.push([i, j]);
    let alpha_cycles: Vec<&[usize]> = pairs.iter().map(|p| p.as_slice()).collect();
    let alpha = Permutation::from_cycles(n, &alpha_cycles)?;
    Ok((alpha, beta))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtins() {
        assert_eq!(builtin_spec("tau5").unwrap().special_orbits, vec![1, 1, 1]);
        assert_eq!(builtin_spec("tau6").unwrap().special_orbits, vec![1, 2, 3]);
        assert_eq!(builtin_spec("tau4").unwrap().special_orbits, vec![1, 1, 2]);
        assert_eq!(builtin_spec("tau2(2)").unwrap().fixed_points(), 6);
        assert_eq!(
            builtin_spec("tau2:g=2").unwrap(),
            builtin_spec("tau2(2)").unwrap()
        );
        assert_eq!(builtin_spec("tau3(4)").unwrap().fixed_points(), 6);
        assert!(builtin_spec("tau7").is_err());
        assert!(builtin_spec("tau2(x)").is_err());
        assert!(CyclicSymmetrySpec::new(4, 1, vec![3]).is_err());
        assert!(CyclicSymmetrySpec::new(1, 1, vec![]).is_err());
    }

    #[test]
    fn boundary_counts() {
        let t5 = builtin_spec("tau5").unwrap();
        assert!(!realizable_boundary_count(&t5, 9));
        assert!(realizable_boundary_count(&t5, 8));
        assert!(realizable_boundary_count(&t5, 0));
        assert!(!realizable_boundary_count(&t5, 4));
        let t6 = builtin_spec("tau6").unwrap();
        assert!((0..40).all(|r| realizable_boundary_count(&t6, r)));
    }

    #[test]
    fn free_quotients() {
        assert_eq!(free_quotient_genus(2, 5, 3).unwrap(), Some(0));
        assert_eq!(free_quotient_genus(2, 5, 4).unwrap(), None);
        assert_eq!(free_quotient_genus(3, 2, 0).unwrap(), Some(2));
        assert!(free_quotient_genus(2, 1, 0).is_err());
    }

    #[test]
    fn z3_profiles() {
        assert_eq!(z3_fixed_point_profiles(1), vec![(0, 3), (1, 1)]);
        assert_eq!(z3_fixed_point_profiles(0), vec![(0, 2)]);
        assert_eq!(
            z3_fixed_point_profiles(5).iter().map(|p| p.1).max(),
            Some(7)
        );
    }

    #[test]
    fn involutions() {
        assert!(involution_exists(1, 5, 3).unwrap());
        assert!(!involution_exists(2, 4, 1).unwrap());
        assert!(involution_exists(3, 0, 0).unwrap());
        assert!(!involution_exists(1, 8, 4).unwrap());
        assert!(involution_exists(0, 0, 0).is_err());
    }

    #[test]
    fn permutation_basics() {
        let p = Permutation::from_cycles(6, &[&[1, 6], &[2, 5], &[3, 4]]).unwrap();
        assert_eq!(p.to_string(), "(1 6)(2 5)(3 4)");
        assert!(p.is_involution());
        assert_eq!(Permutation::identity(3).to_string(), "()");
        let a = Permutation::transposition(3, 1, 2).unwrap();
        let b = Permutation::transposition(3, 2, 3).unwrap();
        // Apply b first: 1 -> 1 -> 2, 2 -> 3 -> 3, 3 -> 2 -> 1.
        assert_eq!(a.compose(&b).to_string(), "(1 2 3)");
        assert_eq!(a.compose(&b).inverse(), b.compose(&a));
        assert!(Permutation::from_images(&[1, 1]).is_err());
    }

    #[test]
    fn transposition_examples() {
        let (a, b) = transposition_as_two_involutions(4, 1, 2).unwrap();
        assert_eq!(a.to_string(), "(1 2)(3 4)");
        assert_eq!(b.to_string(), "(3 4)");
        assert_eq!(b.fixed_points(), vec![1, 2]);
        let (a, b) = transposition_as_two_involutions(5, 1, 2).unwrap();
        assert_eq!(b.fixed_points(), vec![1, 2, 5]);
        assert_eq!(a.compose(&b), Permutation::transposition(5, 1, 2).unwrap());
        assert!(transposition_as_two_involutions(4, 2, 2).is_err());
        assert!(transposition_as_two_involutions(4, 1, 5).is_err());
    }
}
