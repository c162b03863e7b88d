mod common;

use std::collections::BTreeSet;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;

use mcg_torsion::actions::{
    builtin_spec, realizable_boundary_count, transposition_as_two_involutions,
};
use mcg_torsion::braids::{braid_permutation, exponent_sum, BraidLetter, BraidWord};
use mcg_torsion::homrep::HomologyRep;
use mcg_torsion::intlinalg::{smith_normal_form, AbelianGroup, IntMatrix};
use mcg_torsion::surfaces::{chain_system, CurveSystem};
use mcg_torsion::theorem::torsion_image_subgroup;
use mcg_torsion::words::{abelian_image, FreeWord, Syllable, Word};

fn chain(g: u32) -> Arc<CurveSystem> {
    Arc::new(chain_system(g).unwrap())
}

fn word_strategy(curves: usize, max_len: usize) -> impl Strategy<Value = Vec<(usize, bool)>> {
    prop::collection::vec((0..curves, any::<bool>()), 0..max_len)
}

fn word(system: &Arc<CurveSystem>, letters: &[(usize, bool)]) -> Word {
    let free = FreeWord::new(
        letters
            .iter()
            .map(|&(g, inv)| Syllable::new(g, inv))
            .collect(),
    );
    Word::new(system.clone(), free).unwrap()
}

fn matrix_strategy() -> impl Strategy<Value = Vec<Vec<i64>>> {
    (1usize..=5, 1usize..=5)
        .prop_flat_map(|(r, c)| prop::collection::vec(prop::collection::vec(-9i64..=9, c), r))
}

proptest! {
    #[test]
    fn twist_words_preserve_the_form(g in 1u32..=3, letters in word_strategy(7, 12)) {
        let system = chain(g);
        let letters: Vec<_> = letters.into_iter().map(|(c, i)| (c % (2 * g as usize + 1), i)).collect();
        let rep = HomologyRep::new(system.clone()).unwrap();
        let m = rep.word_matrix(&word(&system, &letters)).unwrap();
        prop_assert!(rep.preserves_pairing(&m));
        prop_assert!(m.determinant().unwrap().is_one());
    }

    #[test]
    fn word_matrix_is_an_antihomomorphism(u in word_strategy(5, 8), v in word_strategy(5, 8)) {
        let system = chain(2);
        let rep = HomologyRep::new(system.clone()).unwrap();
        let (u, v) = (word(&system, &u), word(&system, &v));
        let uv = u.concat(&v).unwrap();
        let lhs = rep.word_matrix(&uv).unwrap();
        let rhs = &rep.word_matrix(&v).unwrap() * &rep.word_matrix(&u).unwrap();
        prop_assert_eq!(lhs, rhs);
        let inv = rep.word_matrix(&u.inverse()).unwrap();
        prop_assert!((&inv * &rep.word_matrix(&u).unwrap()).is_identity());
    }

    #[test]
    fn smith_form_postconditions(rows in matrix_strategy()) {
        let m = IntMatrix::from_rows(&rows).unwrap();
        let snf = smith_normal_form(&m);
        prop_assert_eq!(&(&snf.u * &m) * &snf.v, snf.d.clone());
        prop_assert!(snf.u.is_unimodular() && snf.v.is_unimodular());
        prop_assert!(snf.d.is_diagonal());
        let diag = snf.diagonal();
        prop_assert!(diag.iter().all(|d| !d.is_negative()));
        for w in diag.windows(2) {
            let divides = if w[0].is_zero() { w[1].is_zero() } else { (&w[1] % &w[0]).is_zero() };
            prop_assert!(divides);
        }
        let oracle: Vec<BigInt> = common::invariant_factors(
            &rows.iter().map(|r| r.iter().map(|&x| i128::from(x)).collect()).collect(),
        ).into_iter().map(BigInt::from).collect();
        prop_assert_eq!(diag, oracle);
    }

    #[test]
    fn abelian_image_is_additive_and_conjugation_invariant(
        u in word_strategy(5, 10), v in word_strategy(5, 10), r in 0u32..10,
    ) {
        let system = chain(2);
        let (u, v) = (word(&system, &u), word(&system, &v));
        let iu = abelian_image(&u, 2, r).unwrap();
        let iv = abelian_image(&v, 2, r).unwrap();
        prop_assert_eq!(abelian_image(&u.concat(&v).unwrap(), 2, r).unwrap(), iu + iv);
        prop_assert_eq!(abelian_image(&u.conjugate(&v).unwrap(), 2, r).unwrap(), iu);
        prop_assert!(abelian_image(&u.commutator(&v).unwrap(), 2, r).unwrap().is_zero());
    }

    #[test]
    fn realizability_is_periodic(r in 0u64..200, spec in prop::sample::select(vec!["tau2(1)", "tau3(2)", "tau4", "tau5", "tau6"])) {
        let spec = builtin_spec(spec).unwrap();
        prop_assert_eq!(
            realizable_boundary_count(&spec, r),
            realizable_boundary_count(&spec, r + u64::from(spec.order))
        );
    }

    #[test]
    fn transpositions_split_into_two_involutions(n in 2usize..40, a in 0usize..40, b in 0usize..40) {
        let (i, j) = (a % n + 1, b % n + 1);
        prop_assume!(i != j);
        let (alpha, beta) = transposition_as_two_involutions(n, i, j).unwrap();
        prop_assert!(alpha.is_involution() && beta.is_involution());
        prop_assert!(alpha.fixed_points().len() <= 3 && beta.fixed_points().len() <= 3);
        let composed = alpha.compose(&beta);
        prop_assert_eq!(composed.cycles(), vec![vec![i.min(j), i.max(j)]]);
    }

    #[test]
    fn braid_permutation_reverses_concatenation(
        strands in 2usize..9,
        u in prop::collection::vec((1usize..8, any::<bool>()), 0..15),
        v in prop::collection::vec((1usize..8, any::<bool>()), 0..15),
    ) {
        let mk = |ls: &[(usize, bool)]| BraidWord::new(
            strands,
            ls.iter().map(|&(i, inverse)| BraidLetter { index: (i - 1) % (strands - 1) + 1, inverse }).collect(),
        ).unwrap();
        let (u, v) = (mk(&u), mk(&v));
        let uv = u.concat(&v).unwrap();
        // With the rightmost letter acting first, v acts before u.
        prop_assert_eq!(braid_permutation(&uv), braid_permutation(&u).compose(&braid_permutation(&v)));
        prop_assert_eq!(exponent_sum(&uv), exponent_sum(&u) + exponent_sum(&v));
        prop_assert_eq!(exponent_sum(&u.inverse()), -exponent_sum(&u));
    }

    #[test]
    fn torsion_image_grows_with_allowed_orders(
        factors in prop::collection::vec(1u64..40, 0..4),
        small in prop::collection::btree_set(2u64..12, 1..3),
        extra in prop::collection::btree_set(2u64..12, 0..3),
    ) {
        let g = AbelianGroup::from_cyclic_orders(factors.into_iter().map(BigInt::from));
        let big: BTreeSet<u64> = small.union(&extra).copied().collect();
        let (sub_small, i_small) = torsion_image_subgroup(&g, &small).unwrap();
        let (sub_big, i_big) = torsion_image_subgroup(&g, &big).unwrap();
        prop_assert!((&i_small % &i_big).is_zero());
        prop_assert!((sub_big.order().unwrap() % sub_small.order().unwrap()).is_zero());
    }
}
