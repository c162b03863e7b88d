//! Which mapping class groups `Γ*_{g,r}` are generated by torsion, the
//! torsion image in `H_1`, and a cross-check that recomputes every verdict
//! from the other modules.

use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::actions::{builtin_spec, realizable_boundary_count};
use crate::braids::{braid_to_genus2_word, delta_star_word};
use crate::error::{Error, Result};
use crate::homrep::HomologyRep;
use crate::intlinalg::{AbelianGroup, MatrixOrder};
use crate::presentations::{
    abelianize, gamma_0r_presentation, genus1_relations, genus2_relations, lantern_relation,
    torsion_order_constraints,
};
use crate::surfaces::{chain_system, torus_system};
use crate::words::{abelian_image, closed_h1_order, parse_word};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub generated_by_torsion: bool,
    /// Orders of a generating set of torsion elements; empty when the group
    /// is not generated by torsion.
    pub generator_orders: BTreeSet<u64>,
    pub torsion_subgroup_index: u64,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.generated_by_torsion {
            let orders: Vec<String> = self.generator_orders.iter().map(u64::to_string).collect();
            write!(f, "generated by torsion; orders {}", orders.join(", "))
        } else {
            write!(
                f,
                "not generated by torsion; index {}",
                self.torsion_subgroup_index
            )
        }
    }
}

/// `Γ*_{g,r}` is generated by torsion unless `g = 2` and `r ≡ 4 (mod 5)`, in
/// which case the torsion elements generate an index-5 subgroup.
pub fn torsion_generation_verdict(g: u32, r: u32) -> Result<Verdict> {
    if g == 0 && r < 3 {
        return Err(Error::invalid("genus 0 needs r >= 3"));
    }
    if g == 2 && r % 5 == 4 {
        return Ok(Verdict {
            generated_by_torsion: false,
            generator_orders: BTreeSet::new(),
            torsion_subgroup_index: 5,
        });
    }
    let orders: BTreeSet<u64> = match g {
        0 => [u64::from(r) - 1, u64::from(r)].into(),
        1 => [2, 3, 4].into(),
        2 => [2, 5].into(),
        _ => [2].into(),
    };
    Ok(Verdict {
        generated_by_torsion: true,
        generator_orders: orders,
        torsion_subgroup_index: 1,
    })
}

/// `H_1(Γ*_{g,r})` for `g >= 1`: the closed-surface part `Z/12`, `Z/10` or
/// `0`, plus `Z/2` from permuting boundary components when `r >= 2`.
pub fn h1_of_mcg(g: u32, r: u32) -> Result<AbelianGroup> {
    if g == 0 {
        return Err(Error::invalid(
            "genus 0 has no closed formula here; abelianize the braid presentation",
        ));
    }
    let closed = AbelianGroup::cyclic(closed_h1_order(g));
    let perm = AbelianGroup::cyclic(if r >= 2 { 2 } else { 1 });
    Ok(closed.direct_sum(&perm))
}

/// The subgroup of a finite `G` generated by all elements killed by some
/// allowed order, and its index.
///
/// In `Z/d` the elements killed by `m` form the subgroup of order
/// `gcd(d, m)`, so factor by factor the generated subgroup has order
/// `lcm_m gcd(d, m)`.
pub fn torsion_image_subgroup(
    group: &AbelianGroup,
    allowed_orders: &BTreeSet<u64>,
) -> Result<(AbelianGroup, BigInt)> {
    if !group.is_finite() {
        return Err(Error::InfiniteGroup(group.to_string()));
    }
    if allowed_orders.is_empty() {
        return Err(Error::invalid("allowed orders must be nonempty"));
    }
    if let Some(m) = allowed_orders.iter().find(|&&m| m < 2) {
        return Err(Error::invalid(format!("torsion order {m} is not >= 2")));
    }
    let sub_orders: Vec<BigInt> = group
        .invariant_factors()
        .iter()
        .map(|d| {
            allowed_orders
                .iter()
                .map(|&m| d.gcd(&BigInt::from(m)))
                .fold(BigInt::one(), |acc, x| acc.lcm(&x))
        })
        .collect();
    let sub_order: BigInt = sub_orders.iter().product();
    let index = group.order().expect("finite") / sub_order;
    Ok((AbelianGroup::from_cyclic_orders(sub_orders), index))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrossCheckReport {
    pub genus: u32,
    pub boundary: u32,
    pub h1: AbelianGroup,
    pub allowed_orders: BTreeSet<u64>,
    pub index: BigInt,
    pub verdict: Verdict,
    pub checks: Vec<Check>,
}

impl CrossCheckReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    fn check(&mut self, name: impl Into<String>, passed: bool) {
        self.checks.push(Check {
            name: name.into(),
            passed,
        });
    }
}

impl fmt::Display for CrossCheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let orders: Vec<String> = self.allowed_orders.iter().map(u64::to_string).collect();
        writeln!(
            f,
            "g={} r={}: H1 = {}; torsion orders {{{}}}; index {}; {}",
            self.genus,
            self.boundary,
            self.h1,
            orders.join(", "),
            self.index,
            if self.passed() { "PASS" } else { "FAIL" }
        )?;
        for c in &self.checks {
            writeln!(f, "  [{}] {}", if c.passed { "ok" } else { "FAIL" }, c.name)?;
        }
        Ok(())
    }
}

fn realizable(spec: &str, r: u32) -> Result<bool> {
    Ok(realizable_boundary_count(
        &builtin_spec(spec)?,
        u64::from(r),
    ))
}

/// Recomputes the verdict for `(g, r)` from symmetry realizability, `H_1`
/// and the homology representation, recording each step as a named check.
pub fn cross_check(g: u32, r: u32) -> Result<CrossCheckReport> {
    let verdict = torsion_generation_verdict(g, r)?;

    let mut allowed = BTreeSet::new();
    let h1 = if g == 0 {
        allowed.insert(u64::from(r) - 1);
        allowed.insert(u64::from(r));
        abelianize(&gamma_0r_presentation(r)?).group
    } else {
        let specs: Vec<(String, u64)> = match g {
            1 => vec![
                ("tau2(1)".into(), 2),
                ("tau3(1)".into(), 3),
                ("tau4".into(), 4),
            ],
            2 => vec![
                ("tau2(2)".into(), 2),
                ("tau3(2)".into(), 3),
                ("tau5".into(), 5),
            ],
            _ => vec![(format!("tau2({g})"), 2)],
        };
        for (spec, n) in specs {
            if realizable(&spec, r)? {
                allowed.insert(n);
            }
        }
        h1_of_mcg(g, r)?
    };
    let (_, index) = torsion_image_subgroup(&h1, &allowed)?;

    let mut report = CrossCheckReport {
        genus: g,
        boundary: r,
        h1,
        allowed_orders: allowed,
        index,
        verdict: verdict.clone(),
        checks: Vec::new(),
    };
    report.check(
        "index agrees with verdict",
        report.index == BigInt::from(verdict.torsion_subgroup_index),
    );
    report.check(
        "generated by torsion iff index 1",
        verdict.generated_by_torsion == (verdict.torsion_subgroup_index == 1),
    );
    report.check(
        "generator orders are realizable",
        verdict.generator_orders.is_subset(&report.allowed_orders),
    );

    match g {
        0 => genus0_checks(&mut report, r)?,
        1 => genus1_checks(&mut report)?,
        2 => genus2_checks(&mut report, r)?,
        _ => {
            let lantern = torsion_order_constraints(&[lantern_relation()])?;
            report.check("lantern relation kills [D]", lantern.is_trivial());
        }
    }
    Ok(report)
}

fn genus0_checks(report: &mut CrossCheckReport, r: u32) -> Result<()> {
    let ab = abelianize(&gamma_0r_presentation(r)?);
    let n = u64::from(r - 1) * if r.is_multiple_of(2) { 2 } else { 1 };
    report.check(
        format!("abelianization is Z/{n}"),
        ab.group == AbelianGroup::cyclic(n),
    );
    let same = ab.generator_images.windows(2).all(|w| w[0] == w[1]);
    report.check("half-twists share one class", same);
    // The rotations (A1...A(r-1)) and (A1...A(r-2) A(r-1)^2) have orders r
    // and r-1 and exponent sums r-1 and r.
    let x = ab
        .generator_images
        .first()
        .and_then(|v| v.first())
        .cloned()
        .unwrap_or_else(BigInt::zero);
    let n = BigInt::from(n);
    let (a, b) = (&x * (r - 1), &x * r);
    report.check(
        "rotation images are killed by their orders",
        (&a * r).is_multiple_of(&n) && (&b * (r - 1)).is_multiple_of(&n),
    );
    report.check("rotation images generate", a.gcd(&b).gcd(&n).is_one());
    Ok(())
}

fn genus1_checks(report: &mut CrossCheckReport) -> Result<()> {
    let system = Arc::new(torus_system());
    let rep = HomologyRep::new(system.clone())?;
    let r = report.boundary;
    let tau3 = parse_word("A B A B", &system)?;
    let tau4 = parse_word("A B A", &system)?;
    let a = parse_word("A", &system)?;
    let quotient = tau3.concat(&tau4.inverse())?;

    report.check(
        "order of ABAB is 3",
        rep.certify_periodic_order(&tau3)? == MatrixOrder::Finite(3),
    );
    report.check(
        "order of ABA is 4",
        rep.certify_periodic_order(&tau4)? == MatrixOrder::Finite(4),
    );
    report.check(
        "A = (ABAB)(ABA)^-1 on homology",
        rep.word_matrix(&quotient)? == rep.word_matrix(&a)?,
    );
    let i3 = abelian_image(&tau3, 1, r)?;
    let i4 = abelian_image(&tau4, 1, r)?;
    let ia = abelian_image(&quotient, 1, r)?;
    report.check(
        "torsion images 4 and 3 in Z/12",
        i3.twist_component == 4 && i4.twist_component == 3,
    );
    report.check(
        "A has image 1",
        ia.twist_component == 1 && ia == abelian_image(&a, 1, r)?,
    );
    report.check(
        "torsion relations give Z/12",
        torsion_order_constraints(&genus1_relations())? == AbelianGroup::cyclic(12),
    );
    Ok(())
}

fn genus2_checks(report: &mut CrossCheckReport, r: u32) -> Result<()> {
    let system = Arc::new(chain_system(2)?);
    let rep = HomologyRep::new(system.clone())?;
    let tau5 = parse_word("C1 C2 C3 C4 C5^2 C4 C3 C2 C1 C1 C2 C3 C4", &system)?;
    let delta = braid_to_genus2_word(&delta_star_word())?;

    report.check(
        "tau5 has order 5",
        rep.certify_periodic_order(&tau5)? == MatrixOrder::Finite(5),
    );
    report.check(
        "delta squares to the identity on homology",
        rep.word_matrix(&delta.pow(2))?.is_identity(),
    );
    let i5 = abelian_image(&tau5, 2, r)?;
    let id = abelian_image(&delta, 2, r)?;
    report.check(
        "torsion images 4 and 5 in Z/10",
        i5.twist_component == 4 && id.twist_component == 5,
    );
    report.check(
        "images 4 and 5 generate Z/10",
        i5.twist_component.gcd(&id.twist_component).gcd(&10) == 1,
    );
    report.check(
        "images are killed by the element orders",
        i5.scale(5).twist_component == 0 && id.scale(2).twist_component == 0,
    );
    report.check(
        "torsion relations give Z/10",
        torsion_order_constraints(&genus2_relations())? == AbelianGroup::cyclic(10),
    );
    report.check(
        "order-5 symmetry exists iff r is not 4 mod 5",
        report.allowed_orders.contains(&5) == (r % 5 != 4),
    );
    Ok(())
}
