//! Finitely presented groups and their abelianizations, the braid-type
//! presentation of the genus-0 mapping class group, and the `H_1`
//! constraints that torsion and lantern relations impose on the class of a
//! nonseparating twist.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::intlinalg::{cokernel, smith_normal_form, AbelianGroup, IntMatrix};
use crate::surfaces::torus_with_arc_system;
use crate::words::{abelian_image, parse_word, AbelianImage, FreeWord};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    generators: Vec<String>,
    relators: Vec<FreeWord>,
}

impl Presentation {
    pub fn new(generators: Vec<String>, relators: Vec<FreeWord>) -> Result<Self> {
        let n = generators.len();
        for (i, r) in relators.iter().enumerate() {
            if r.letters().iter().any(|s| s.generator >= n) {
                return Err(Error::invalid(format!(
                    "relator {} uses a generator outside the {n} declared",
                    i + 1
                )));
            }
        }
        Ok(Presentation {
            generators,
            relators,
        })
    }

    pub fn generators(&self) -> &[String] {
        &self.generators
    }

    pub fn relators(&self) -> &[FreeWord] {
        &self.relators
    }

    pub fn find(&self, name: &str) -> Option<usize> {
        self.generators.iter().position(|g| g == name)
    }

    pub fn with_relator(&self, relator: FreeWord) -> Result<Self> {
        let mut relators = self.relators.clone();
        relators.push(relator);
        Self::new(self.generators.clone(), relators)
    }

    /// Parses a relator word over this presentation's generators.
    pub fn parse_relator(&self, text: &str) -> Result<FreeWord> {
        FreeWord::parse_with(text, |tok| {
            if tok.forced.is_some() {
                return Err(Error::parse(
                    &tok.name,
                    tok.position,
                    "kind markers are not allowed here",
                ));
            }
            self.find(&tok.name).ok_or_else(|| Error::UnknownGenerator {
                name: tok.name.clone(),
                position: tok.position,
            })
        })
    }

    /// Rows are relators, columns generators, entries exponent sums.
    pub fn relation_matrix(&self) -> IntMatrix {
        let n = self.generators.len();
        let rows: Vec<Vec<i64>> = self.relators.iter().map(|r| r.exponent_sums(n)).collect();
        if rows.is_empty() {
            return IntMatrix::zeros(0, n);
        }
        IntMatrix::from_rows(&rows).expect("rows share the generator count")
    }

    pub fn relator_to_string(&self, r: &FreeWord) -> String {
        r.display_with(|g| self.generators[g].clone())
    }
}

/// Text form: one `gens: A1 A2 ...` line, then `rel: <word>` lines. Blank
/// lines and `#` comments are ignored.
impl FromStr for Presentation {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let mut generators: Option<Vec<String>> = None;
        let mut rel_lines = Vec::new();
        for (line_no, raw) in text.lines().enumerate() {
            let line_no = line_no + 1;
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            if let Some(rest) = line.strip_prefix("gens:") {
                if generators.is_some() {
                    return Err(Error::parse(line, line_no, "duplicate `gens:` line"));
                }
                let names: Vec<String> = rest.split_whitespace().map(str::to_string).collect();
                for (i, n) in names.iter().enumerate() {
                    if names[..i].contains(n) {
                        return Err(Error::parse(n, line_no, "duplicate generator"));
                    }
                }
                generators = Some(names);
            } else if let Some(rest) = line.strip_prefix("rel:") {
                rel_lines.push((line_no, rest.trim().to_string()));
            } else {
                return Err(Error::parse(line, line_no, "expected `gens:` or `rel:`"));
            }
        }
        let generators = generators.ok_or_else(|| Error::parse("", 1, "missing `gens:` line"))?;
        let mut p = Presentation::new(generators, Vec::new())?;
        for (line_no, rel) in rel_lines {
            let w = p.parse_relator(&rel).map_err(|e| match e {
                Error::UnknownGenerator { name, position } => Error::parse(
                    name,
                    position,
                    format!("unknown generator on line {line_no}"),
                ),
                Error::Parse {
                    token,
                    position,
                    message,
                } => Error::parse(token, position, format!("{message} on line {line_no}")),
                other => other,
            })?;
            p.relators.push(w);
        }
        Ok(p)
    }
}

impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "gens: {}", self.generators.join(" "))?;
        for r in &self.relators {
            writeln!(f, "rel: {}", self.relator_to_string(r))?;
        }
        Ok(())
    }
}

/// The abelianization of a presentation and where each generator lands.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Abelianization {
    pub group: AbelianGroup,
    /// Image of each generator in invariant-factor coordinates, one entry per
    /// invariant factor; torsion coordinates are reduced to `[0, d)`.
    pub generator_images: Vec<Vec<BigInt>>,
}

pub fn abelianize(p: &Presentation) -> Abelianization {
    let rel = p.relation_matrix();
    let group = cokernel(&rel);
    let snf = smith_normal_form(&rel);
    let n = p.generators.len();
    let rank = snf.rank();
    let diag = snf.diagonal();

    // x ↦ x·V identifies Z^n / rowspan(R) with ⊕ Z/d_j; coordinates where
    // d_j = 1 vanish.
    let coords: Vec<(usize, BigInt)> = (0..n)
        .filter_map(|j| {
            let d = if j < rank {
                diag[j].clone()
            } else {
                BigInt::zero()
            };
            (d != BigInt::from(1)).then_some((j, d))
        })
        .collect();
    let generator_images = (0..n)
        .map(|i| {
            coords
                .iter()
                .map(|(j, d)| {
                    let x = snf.v.get(i, *j).clone();
                    if d.is_zero() {
                        x
                    } else {
                        x.mod_floor(d)
                    }
                })
                .collect()
        })
        .collect();
    Abelianization {
        group,
        generator_images,
    }
}

/// Presentation of `Γ*_{0,r}` on half-twists `A1, ..., A(r-1)`:
/// far commutation, braid relations, `A1 ... A(r-2) A(r-1)^2 A(r-2) ... A1`,
/// and `(A1 ... A(r-1))^r`, the last exponent being the order of the
/// `2π/r` rotation.
pub fn gamma_0r_presentation(r: u32) -> Result<Presentation> {
    if r < 3 {
        return Err(Error::invalid("genus-0 presentation needs r >= 3"));
    }
    let n = r as usize - 1;
    let generators: Vec<String> = (1..=n).map(|i| format!("A{i}")).collect();
    let g = |i: usize| FreeWord::power_of(i, 1);
    let ginv = |i: usize| FreeWord::power_of(i, -1);
    let mut relators = Vec::new();

    for i in 0..n {
        for j in i + 2..n {
            relators.push(g(i).commutator(&g(j)));
        }
    }
    for i in 0..n - 1 {
        // A_i A_{i+1} A_i (A_{i+1} A_i A_{i+1})⁻¹
        relators.push(
            g(i).concat(&g(i + 1))
                .concat(&g(i))
                .concat(&ginv(i + 1))
                .concat(&ginv(i))
                .concat(&ginv(i + 1)),
        );
    }
    let mut chain = FreeWord::empty();
    for i in 0..n - 1 {
        chain = chain.concat(&g(i));
    }
    chain = chain.concat(&FreeWord::power_of(n - 1, 2));
    for i in (0..n - 1).rev() {
        chain = chain.concat(&g(i));
    }
    relators.push(chain);

    let rotation = (0..n).fold(FreeWord::empty(), |w, i| w.concat(&g(i)));
    relators.push(rotation.pow(i64::from(r)));

    Presentation::new(generators, relators)
}

/// A relation `w^order = 1` seen through `H_1`: it forces
/// `order · exponent_sum · [D] = 0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct TorsionRelation {
    /// Signed count of nonseparating-twist letters in `w`.
    pub exponent_sum: i64,
    pub order: u64,
}

impl TorsionRelation {
    pub fn new(exponent_sum: i64, order: u64) -> Result<Self> {
        if order < 1 {
            return Err(Error::invalid("torsion order must be >= 1"));
        }
        Ok(TorsionRelation {
            exponent_sum,
            order,
        })
    }
}

/// The cyclic group `<[D]>` cut out by the given relations: the cokernel of
/// the one-column matrix with entries `order · exponent_sum`.
pub fn torsion_order_constraints(relations: &[TorsionRelation]) -> Result<AbelianGroup> {
    if relations.is_empty() {
        return Err(Error::invalid("at least one relation is required"));
    }
    let rows: Vec<[BigInt; 1]> = relations
        .iter()
        .map(|r| [BigInt::from(r.order) * BigInt::from(r.exponent_sum)])
        .collect();
    Ok(cokernel(&IntMatrix::from_rows(&rows)?))
}

/// Genus-1 relations `(ABA)^4 = 1` and `(AB)^6 = 1`.
pub fn genus1_relations() -> Vec<TorsionRelation> {
    vec![
        TorsionRelation {
            exponent_sum: 3,
            order: 4,
        },
        TorsionRelation {
            exponent_sum: 2,
            order: 6,
        },
    ]
}

/// Genus-2 relations: the hyperelliptic involution (ten twists) squared and
/// the order-5 element (fourteen twists) to the fifth.
pub fn genus2_relations() -> Vec<TorsionRelation> {
    vec![
        TorsionRelation {
            exponent_sum: 10,
            order: 2,
        },
        TorsionRelation {
            exponent_sum: 14,
            order: 5,
        },
    ]
}

/// The lantern relation `ABCD = XYZ` with all seven curves nonseparating,
/// read as `(ABCD)(XYZ)⁻¹ = 1`: exponent sum `4 - 3 = 1`.
pub fn lantern_relation() -> TorsionRelation {
    TorsionRelation {
        exponent_sum: 1,
        order: 1,
    }
}

/// What the 3-holed-sphere lantern argument says in `H_1(Γ*_{g,r})`, checked
/// on the torus with two boundary components.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LanternConsequence {
    /// Image of the twist on the curve `d` bounding the pair of pants.
    pub separating_twist: AbelianImage,
    /// Nonseparating exponent sum of `A' A⁻¹ C' C⁻¹`, the lantern
    /// expression for that twist.
    pub lantern_exponent_sum: i64,
    /// Image of the half-twist `s` with `s² = d`.
    pub halftwist: AbelianImage,
    pub halftwist_squared: AbelianImage,
}

impl LanternConsequence {
    /// The half-twist has order exactly 2 and its square dies.
    pub fn holds(&self) -> bool {
        self.separating_twist.is_zero()
            && self.lantern_exponent_sum == 0
            && self.halftwist_squared.is_zero()
            && self.halftwist_squared.twist_component == self.separating_twist.twist_component
            && !self.halftwist.is_zero()
            && self.halftwist.scale(2).is_zero()
    }
}

pub fn lantern_3hole_consequence() -> Result<LanternConsequence> {
    let system = Arc::new(torus_with_arc_system());
    let surface = system.surface();
    let (g, r) = (surface.genus, surface.boundary);
    let d = parse_word("D", &system)?;
    let s = parse_word("S", &system)?;
    Ok(LanternConsequence {
        separating_twist: abelian_image(&d, g, r)?,
        // A' A^-1 C' C^-1 once the boundary-parallel twists are trivial.
        lantern_exponent_sum: [1i64, -1, 1, -1].iter().sum(),
        halftwist: abelian_image(&s, g, r)?,
        halftwist_squared: abelian_image(&s.pow(2), g, r)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn cyclic_of_order_two() {
        let p: Presentation = "gens: x\nrel: x^2\n".parse().unwrap();
        let ab = abelianize(&p);
        assert_eq!(ab.group, AbelianGroup::cyclic(2));
        assert_eq!(ab.generator_images, vec![ints(&[1])]);
    }

    #[test]
    fn free_abelian() {
        let p: Presentation = "gens: x y".parse().unwrap();
        let ab = abelianize(&p);
        assert_eq!(ab.group, AbelianGroup::free(2));
        assert_eq!(ab.generator_images.len(), 2);
    }

    #[test]
    fn trivial_group_images_are_empty() {
        let p: Presentation = "gens: x\nrel: x".parse().unwrap();
        let ab = abelianize(&p);
        assert!(ab.group.is_trivial());
        assert_eq!(ab.generator_images, vec![Vec::<BigInt>::new()]);
    }

    #[test]
    fn genus_zero_small_cases() {
        let p3 = gamma_0r_presentation(3).unwrap();
        assert_eq!(p3.generators(), ["A1", "A2"]);
        // braid, chain and rotation relators; no far commutation.
        assert_eq!(p3.relators().len(), 3);
        assert_eq!(
            abelianize(&gamma_0r_presentation(4).unwrap()).group,
            AbelianGroup::cyclic(6)
        );
        assert_eq!(
            abelianize(&gamma_0r_presentation(5).unwrap()).group,
            AbelianGroup::cyclic(4)
        );
        let ab6 = abelianize(&gamma_0r_presentation(6).unwrap());
        assert_eq!(ab6.group, AbelianGroup::cyclic(10));
        assert!(ab6.generator_images.windows(2).all(|w| w[0] == w[1]));
        assert!(gamma_0r_presentation(2).is_err());
    }

    #[test]
    fn constraints() {
        assert_eq!(
            torsion_order_constraints(&genus2_relations()).unwrap(),
            AbelianGroup::cyclic(10)
        );
        assert_eq!(
            torsion_order_constraints(&genus1_relations()).unwrap(),
            AbelianGroup::cyclic(12)
        );
        assert!(torsion_order_constraints(&[lantern_relation()])
            .unwrap()
            .is_trivial());
        assert!(torsion_order_constraints(&[]).is_err());
        assert!(TorsionRelation::new(1, 0).is_err());
    }

    #[test]
    fn lantern_consequence() {
        let c = lantern_3hole_consequence().unwrap();
        assert!(c.separating_twist.is_zero());
        assert_eq!(c.halftwist_squared.twist_component, 0);
        assert_eq!(c.halftwist_squared.halftwist_component, 0);
        assert_eq!(c.halftwist.halftwist_component, 1);
        assert!(c.holds());
    }

    #[test]
    fn text_format() {
        let p: Presentation = "# comment\ngens: a b\nrel: a b a^-1 b^-1\nrel: a^3\n"
            .parse()
            .unwrap();
        assert_eq!(p.relators().len(), 2);
        assert_eq!(p.to_string(), "gens: a b\nrel: a b a^-1 b^-1\nrel: a^3\n");
        let err = "gens: a\nrel: a q".parse::<Presentation>().unwrap_err();
        assert!(matches!(err, Error::Parse { ref token, position: 3, .. } if token == "q"));
        assert!("rel: a".parse::<Presentation>().is_err());
        assert!("gens: a a".parse::<Presentation>().is_err());
        assert!("gens: a\nfoo".parse::<Presentation>().is_err());
    }
}
