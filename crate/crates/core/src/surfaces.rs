//! Surfaces `Σ_{g,r}` and named systems of curves and arcs on them.
//!
//! A curve system stores declared intersection data rather than embedded
//! curves: each curve carries a kind, an optional homology class in the
//! coordinates of a fixed basis of `H_1` of the capped surface, and the
//! pairwise algebraic and geometric intersection numbers. Arcs and
//! boundary-parallel curves have no class; separating curves have class 0.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::intlinalg::IntMatrix;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Surface {
    pub genus: u32,
    pub boundary: u32,
}

impl Surface {
    pub fn new(genus: u32, boundary: u32) -> Self {
        Surface { genus, boundary }
    }

    pub fn euler_characteristic(&self) -> i64 {
        2 - 2 * i64::from(self.genus) - i64::from(self.boundary)
    }

    /// Rank of `H_1` of the capped (closed) surface.
    pub fn homology_rank(&self) -> usize {
        2 * self.genus as usize
    }
}

impl fmt::Display for Surface {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Σ_{{{},{}}}", self.genus, self.boundary)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CurveKind {
    Nonseparating,
    Separating,
    BoundaryParallel,
    Arc,
}

impl CurveKind {
    pub fn is_arc(self) -> bool {
        self == CurveKind::Arc
    }

    /// Whether curves of this kind carry a homology class.
    pub fn has_class(self) -> bool {
        matches!(self, CurveKind::Nonseparating | CurveKind::Separating)
    }
}

impl fmt::Display for CurveKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            CurveKind::Nonseparating => "nonseparating",
            CurveKind::Separating => "separating",
            CurveKind::BoundaryParallel => "boundary_parallel",
            CurveKind::Arc => "arc",
        };
        f.write_str(s)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Curve {
    pub name: String,
    pub kind: CurveKind,
    pub class: Option<Vec<BigInt>>,
}

impl Curve {
    pub fn new(name: impl Into<String>, kind: CurveKind, class: Option<Vec<BigInt>>) -> Self {
        Curve {
            name: name.into(),
            kind,
            class,
        }
    }

    fn classed(name: impl Into<String>, kind: CurveKind, class: &[i64]) -> Self {
        Self::new(
            name,
            kind,
            Some(class.iter().map(|&c| BigInt::from(c)).collect()),
        )
    }
}

/// First violated invariant of a [`CurveSystem`], naming the curves involved.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation(pub String);

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for Violation {}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CurveSystem {
    surface: Surface,
    curves: Vec<Curve>,
    /// Intersection form on the class coordinates (`2g x 2g`).
    form: IntMatrix,
    /// Algebraic intersection numbers between curves (`n x n`).
    pairing: IntMatrix,
    /// Geometric intersection counts between curves (`n x n`).
    adjacency: IntMatrix,
}

impl CurveSystem {
    /// Assembles a system, checking only shapes. Use [`CurveSystem::validate`]
    /// for the semantic invariants.
    pub fn new(
        surface: Surface,
        curves: Vec<Curve>,
        form: IntMatrix,
        pairing: IntMatrix,
        adjacency: IntMatrix,
    ) -> Result<Self> {
        let n = curves.len();
        let rank = surface.homology_rank();
        if form.rows() != rank || form.cols() != rank {
            return Err(Error::Dimension(format!(
                "intersection form must be {rank}x{rank}, got {}x{}",
                form.rows(),
                form.cols()
            )));
        }
        for (what, m) in [("pairing", &pairing), ("adjacency", &adjacency)] {
            if m.rows() != n || m.cols() != n {
                return Err(Error::Dimension(format!(
                    "{what} must be {n}x{n}, got {}x{}",
                    m.rows(),
                    m.cols()
                )));
            }
        }
        for c in &curves {
            if let Some(class) = &c.class {
                if class.len() != rank {
                    return Err(Error::Dimension(format!(
                        "class of `{}` has length {}, expected {rank}",
                        c.name,
                        class.len()
                    )));
                }
            }
        }
        Ok(CurveSystem {
            surface,
            curves,
            form,
            pairing,
            adjacency,
        })
    }

    /// Builds a system whose pairing is computed from the classes and the
    /// form, with geometric intersections given as a list of meeting pairs.
    fn from_classes(
        surface: Surface,
        curves: Vec<Curve>,
        form: IntMatrix,
        meets: &[(usize, usize)],
    ) -> Self {
        let n = curves.len();
        let mut pairing = IntMatrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                if let (Some(a), Some(b)) = (&curves[i].class, &curves[j].class) {
                    pairing.set(i, j, bilinear(a, &form, b));
                }
            }
        }
        let mut adjacency = IntMatrix::zeros(n, n);
        for &(i, j) in meets {
            adjacency.set(i, j, BigInt::one());
            adjacency.set(j, i, BigInt::one());
        }
        Self::new(surface, curves, form, pairing, adjacency).expect("built-in system shapes agree")
    }

    pub fn surface(&self) -> Surface {
        self.surface
    }

    pub fn genus(&self) -> u32 {
        self.surface.genus
    }

    pub fn curves(&self) -> &[Curve] {
        &self.curves
    }

    pub fn curve(&self, index: usize) -> &Curve {
        &self.curves[index]
    }

    pub fn form(&self) -> &IntMatrix {
        &self.form
    }

    pub fn pairing(&self) -> &IntMatrix {
        &self.pairing
    }

    pub fn adjacency(&self) -> &IntMatrix {
        &self.adjacency
    }

    /// Index of the curve with this name, compared case-insensitively so
    /// that `C1` names the twist on `c1`.
    pub fn find(&self, name: &str) -> Option<usize> {
        self.curves
            .iter()
            .position(|c| c.name.eq_ignore_ascii_case(name))
    }

    /// Checks every invariant and reports the first one that fails.
    pub fn validate(&self) -> std::result::Result<(), Violation> {
        let n = self.curves.len();
        let zero = BigInt::zero();

        for i in 0..n {
            for j in 0..i {
                if self.curves[i]
                    .name
                    .eq_ignore_ascii_case(&self.curves[j].name)
                {
                    return Err(Violation(format!(
                        "duplicate curve name `{}`",
                        self.curves[i].name
                    )));
                }
            }
        }

        for c in &self.curves {
            match (&c.class, c.kind.has_class()) {
                (None, true) => {
                    return Err(Violation(format!(
                        "{} curve `{}` has no class",
                        c.kind, c.name
                    )))
                }
                (Some(_), false) => {
                    return Err(Violation(format!(
                        "{} `{}` must not carry a class",
                        c.kind, c.name
                    )))
                }
                _ => {}
            }
            if let Some(class) = &c.class {
                let content = class.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
                match c.kind {
                    CurveKind::Separating if !content.is_zero() => {
                        return Err(Violation(format!(
                            "separating curve `{}` has nonzero class",
                            c.name
                        )))
                    }
                    CurveKind::Nonseparating if !content.is_one() => {
                        return Err(Violation(format!(
                            "nonseparating curve `{}` has non-primitive class",
                            c.name
                        )))
                    }
                    _ => {}
                }
            }
        }

        let rank = self.surface.homology_rank();
        for i in 0..rank {
            for j in 0..rank {
                if *self.form.get(i, j) != -self.form.get(j, i) {
                    return Err(Violation(format!(
                        "intersection form is not antisymmetric at ({}, {})",
                        i + 1,
                        j + 1
                    )));
                }
            }
        }

        for i in 0..n {
            for j in 0..n {
                let (ci, cj) = (&self.curves[i], &self.curves[j]);
                let p = self.pairing.get(i, j);
                let a = self.adjacency.get(i, j);
                if *p != -self.pairing.get(j, i) {
                    return Err(Violation(format!(
                        "pairing not antisymmetric for `{}`, `{}`",
                        ci.name, cj.name
                    )));
                }
                if a != self.adjacency.get(j, i) {
                    return Err(Violation(format!(
                        "adjacency not symmetric for `{}`, `{}`",
                        ci.name, cj.name
                    )));
                }
                if i != j && !(a.is_zero() || a.is_one()) {
                    return Err(Violation(format!(
                        "`{}` and `{}` meet {a} times; curves must be disjoint or meet once",
                        ci.name, cj.name
                    )));
                }
                if i == j && !a.is_zero() {
                    return Err(Violation(format!(
                        "adjacency diagonal must be 0 for `{}`",
                        ci.name
                    )));
                }
                match (&ci.class, &cj.class) {
                    (Some(x), Some(y)) => {
                        if p.abs() > *a && i != j {
                            return Err(Violation(format!(
                                "|<{}, {}>| = {} exceeds geometric intersection {a}",
                                ci.name,
                                cj.name,
                                p.abs()
                            )));
                        }
                        let expect = bilinear(x, &self.form, y);
                        if *p != expect {
                            return Err(Violation(format!(
                                "pairing <{}, {}> = {p} disagrees with classes ({expect})",
                                ci.name, cj.name
                            )));
                        }
                    }
                    _ => {
                        if *p != zero {
                            return Err(Violation(format!(
                                "pairing between `{}` and `{}` must be 0: one has no class",
                                ci.name, cj.name
                            )));
                        }
                    }
                }
            }
        }
        Ok(())
    }

    /// Resolves a built-in system by name: `torus`, `chain:g=G`,
    /// `planar:r=R` or `torus-arc`.
    pub fn builtin(name: &str) -> Result<CurveSystem> {
        let name = name.trim();
        let param =
            |prefix: &str, key: &str| -> Option<Result<u32>> {
                let rest = name.strip_prefix(prefix)?.strip_prefix(':')?;
                let value = rest.strip_prefix(key)?.strip_prefix('=')?;
                Some(value.parse::<u32>().map_err(|_| {
                    Error::parse(value, prefix.len() + key.len() + 3, "expected a count")
                }))
            };
        if name == "torus" {
            return Ok(torus_system());
        }
        if name == "torus-arc" {
            return Ok(torus_with_arc_system());
        }
        if let Some(g) = param("chain", "g") {
            return chain_system(g?);
        }
        if let Some(r) = param("planar", "r") {
            return planar_arc_system(r?);
        }
        Err(Error::UnknownName(name.to_string()))
    }
}

/// `x · form · yᵀ`
pub(crate) fn bilinear(x: &[BigInt], form: &IntMatrix, y: &[BigInt]) -> BigInt {
    let mut acc = BigInt::zero();
    for (i, xi) in x.iter().enumerate() {
        if xi.is_zero() {
            continue;
        }
        for (j, yj) in y.iter().enumerate() {
            if !yj.is_zero() {
                acc += xi * form.get(i, j) * yj;
            }
        }
    }
    acc
}

/// Antisymmetric form with `+1` on the superdiagonal: the intersection form
/// of a chain of curves meeting consecutively once.
fn chain_form(n: usize) -> IntMatrix {
    let mut j = IntMatrix::zeros(n, n);
    for i in 0..n.saturating_sub(1) {
        j.set(i, i + 1, BigInt::one());
        j.set(i + 1, i, BigInt::from(-1));
    }
    j
}

/// Two curves `a`, `b` on the torus meeting once with `<a, b> = +1`.
pub fn torus_system() -> CurveSystem {
    let curves = vec![
        Curve::classed("a", CurveKind::Nonseparating, &[1, 0]),
        Curve::classed("b", CurveKind::Nonseparating, &[0, 1]),
    ];
    CurveSystem::from_classes(Surface::new(1, 0), curves, chain_form(2), &[(0, 1)])
}

/// The chain `c_1, ..., c_{2g+1}` on the closed genus-`g` surface.
///
/// `c_1..c_{2g}` form the homology basis with `<c_i, c_{i+1}> = +1`.
/// The last curve meets only `c_{2g}`; its class solves
/// `<c_i, x> = 0` for `i < 2g` and `<c_{2g}, x> = 1`, which gives
/// `x = -(c_1 + c_3 + ... + c_{2g-1})`.
pub fn chain_system(g: u32) -> Result<CurveSystem> {
    if g < 1 {
        return Err(Error::invalid("chain system needs genus >= 1"));
    }
    let rank = 2 * g as usize;
    let mut curves: Vec<Curve> = (0..rank)
        .map(|i| {
            let mut class = vec![0i64; rank];
            class[i] = 1;
            Curve::classed(format!("c{}", i + 1), CurveKind::Nonseparating, &class)
        })
        .collect();
    let last: Vec<i64> = (0..rank).map(|i| if i % 2 == 0 { -1 } else { 0 }).collect();
    curves.push(Curve::classed(
        format!("c{}", rank + 1),
        CurveKind::Nonseparating,
        &last,
    ));
    let meets: Vec<(usize, usize)> = (0..rank).map(|i| (i, i + 1)).collect();
    Ok(CurveSystem::from_classes(
        Surface::new(g, 0),
        curves,
        chain_form(rank),
        &meets,
    ))
}

/// Arcs `a_1, ..., a_{r-1}` on the `r`-holed sphere, `a_i` joining the
/// boundaries `B_i` and `B_{i+1}`. Consecutive arcs share a boundary.
pub fn planar_arc_system(r: u32) -> Result<CurveSystem> {
    if r < 3 {
        return Err(Error::invalid("planar arc system needs r >= 3"));
    }
    let n = r as usize - 1;
    let curves = (1..=n)
        .map(|i| Curve::new(format!("a{i}"), CurveKind::Arc, None))
        .collect();
    let meets: Vec<(usize, usize)> = (0..n - 1).map(|i| (i, i + 1)).collect();
    Ok(CurveSystem::from_classes(
        Surface::new(0, r),
        curves,
        IntMatrix::zeros(0, 0),
        &meets,
    ))
}

/// Torus with two boundary components: the curves `a`, `b` of
/// [`torus_system`], an arc `s` joining the two boundaries, and the
/// separating curve `d` bounding the pair of pants around `s`, so that the
/// half-twist along `s` squares to the twist along `d`.
pub fn torus_with_arc_system() -> CurveSystem {
    let curves = vec![
        Curve::classed("a", CurveKind::Nonseparating, &[1, 0]),
        Curve::classed("b", CurveKind::Nonseparating, &[0, 1]),
        Curve::new("s", CurveKind::Arc, None),
        Curve::classed("d", CurveKind::Separating, &[0, 0]),
    ];
    CurveSystem::from_classes(Surface::new(1, 2), curves, chain_form(2), &[(0, 1)])
}
