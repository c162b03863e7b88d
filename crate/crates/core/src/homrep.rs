//! Action of twist words on `H_1` of the capped surface.
//!
//! Conventions (they reproduce the genus-2 matrix of `C1 C2 C3 C4` exactly):
//!
//! * a twist on `c` acts by the transvection `x ↦ x + <x, c> c`;
//! * words act rightmost letter first;
//! * matrices act on row vectors, row `i` being the image of basis vector
//!   `i`, so `w = g_1 ... g_k` evaluates to `M(g_k) ··· M(g_1)`.
//!
//! Half-twists become point exchanges once boundaries are capped, so they act
//! trivially here, as do twists on curves without a nonzero class.

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::intlinalg::{matrix_order, IntMatrix, MatrixOrder};
use crate::surfaces::CurveSystem;
use crate::words::Word;

#[derive(Clone, Debug)]
pub struct HomologyRep {
    system: Arc<CurveSystem>,
}

impl HomologyRep {
    /// Fails unless the system has positive genus and a unimodular
    /// antisymmetric intersection form.
    pub fn new(system: Arc<CurveSystem>) -> Result<Self> {
        if system.genus() == 0 {
            return Err(Error::invalid("homology representation needs genus >= 1"));
        }
        let form = system.form();
        if form.transpose() != -form {
            return Err(Error::invalid("intersection form is not antisymmetric"));
        }
        if !form.is_unimodular() {
            return Err(Error::invalid("intersection form is not unimodular"));
        }
        Ok(HomologyRep { system })
    }

    pub fn system(&self) -> &Arc<CurveSystem> {
        &self.system
    }

    pub fn dimension(&self) -> usize {
        self.system.surface().homology_rank()
    }

    /// The basis pairing matrix `J`.
    pub fn pairing(&self) -> &IntMatrix {
        self.system.form()
    }

    /// Transvection along the class of curve `index` (inverse if `inverse`).
    pub fn twist_matrix(&self, index: usize, inverse: bool) -> IntMatrix {
        let n = self.dimension();
        let mut m = IntMatrix::identity(n);
        let curve = self.system.curve(index);
        let Some(class) = curve
            .class
            .as_ref()
            .filter(|c| c.iter().any(|x| !x.is_zero()))
        else {
            return m;
        };
        // Row i gains <e_i, c> · c, and <e_i, c> = (J cᵀ)_i.
        let form = self.pairing();
        for i in 0..n {
            let mut coeff: BigInt = (0..n).map(|k| form.get(i, k) * &class[k]).sum();
            if coeff.is_zero() {
                continue;
            }
            if inverse {
                coeff = -coeff;
            }
            for (j, cj) in class.iter().enumerate() {
                let v = m.get(i, j) + &coeff * cj;
                m.set(i, j, v);
            }
        }
        m
    }

    /// Twist matrix by curve name.
    pub fn twist_matrix_named(&self, name: &str) -> Result<IntMatrix> {
        let idx = self.system.find(name).ok_or_else(|| Error::UnknownCurve {
            name: name.to_string(),
            position: 1,
        })?;
        Ok(self.twist_matrix(idx, false))
    }

    fn check_system(&self, w: &Word) -> Result<()> {
        if Arc::ptr_eq(w.system(), &self.system) || **w.system() == *self.system {
            Ok(())
        } else {
            Err(Error::MixedSystems)
        }
    }

    pub fn word_matrix(&self, w: &Word) -> Result<IntMatrix> {
        self.check_system(w)?;
        let mut m = IntMatrix::identity(self.dimension());
        for s in w.free_word().letters() {
            let t = self.twist_matrix(s.generator, s.inverse);
            m = &t * &m;
        }
        Ok(m)
    }

    /// Order of the homology matrix of `w`.
    ///
    /// Homology detects periodic mapping classes of closed surfaces of
    /// positive genus, so when `w` is known to be periodic this is its order
    /// in the mapping class group. Without that assumption it only divides
    /// the mapping-class order; see [`order_certificate`].
    pub fn certify_periodic_order(&self, w: &Word) -> Result<MatrixOrder> {
        matrix_order(&self.word_matrix(w)?, None)
    }

    pub fn order_certificate(&self, w: &Word, assert_periodic: bool) -> Result<OrderCertificate> {
        Ok(OrderCertificate {
            order: self.certify_periodic_order(w)?,
            periodic_asserted: assert_periodic,
        })
    }

    /// Compares homology matrices. `Distinct` proves the mapping classes
    /// differ; `Equal` is conclusive only in genus 1.
    pub fn check_relation_homology(&self, u: &Word, v: &Word) -> Result<RelationCheck> {
        let same = self.word_matrix(u)? == self.word_matrix(v)?;
        Ok(if same {
            RelationCheck::Equal
        } else {
            RelationCheck::Distinct
        })
    }

    /// Whether `M · J · Mᵀ = J`.
    pub fn preserves_pairing(&self, m: &IntMatrix) -> bool {
        let j = self.pairing();
        &(m * j) * &m.transpose() == *j
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RelationCheck {
    Equal,
    Distinct,
}

impl RelationCheck {
    /// Homology is faithful on the torus mapping class group `SL(2, Z)`.
    pub fn is_conclusive(self, genus: u32) -> bool {
        self == RelationCheck::Distinct || genus == 1
    }
}

impl fmt::Display for RelationCheck {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RelationCheck::Equal => "equal",
            RelationCheck::Distinct => "distinct",
        })
    }
}

/// A homology order together with what it proves about the mapping class.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OrderCertificate {
    pub order: MatrixOrder,
    pub periodic_asserted: bool,
}

impl OrderCertificate {
    /// An infinite homology order rules out periodicity outright; a finite
    /// one is the mapping-class order only for a periodic class.
    pub fn is_certified(&self) -> bool {
        self.periodic_asserted || self.order == MatrixOrder::Infinite
    }
}

impl fmt::Display for OrderCertificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.order, self.is_certified()) {
            (MatrixOrder::Infinite, _) => write!(f, "infinite (certified)"),
            (MatrixOrder::Finite(n), true) => write!(f, "{n} (certified)"),
            (MatrixOrder::Finite(n), false) => write!(
                f,
                "{n} (homology order; the mapping-class order is a multiple of {n})"
            ),
        }
    }
}
