mod common;

use bsarr::arrangement::{Arrangement, Factorization};
use bsarr::bsideals::{
    coarsen, diagonal_roots, generic_ideal, lower_locus, maisonobe_element, pullback_locus, upper_locus, walther_bfunction, CoarseningMap,
};
use bsarr::Rational;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn arrangement_rows() -> impl Strategy<Value = Vec<Vec<i64>>> {
    (2usize..=3).prop_flat_map(|n| prop::collection::vec(prop::collection::vec(-3i64..=3, n), 1..=6))
}

fn reduced(rows: &[Vec<i64>]) -> Option<Arrangement> {
    if rows.iter().any(|r| r.iter().all(|&c| c == 0)) {
        return None;
    }
    let refs: Vec<&[i64]> = rows.iter().map(Vec::as_slice).collect();
    Arrangement::from_int_rows(&refs).ok().filter(Arrangement::is_reduced)
}

/// Partition of `0..r` from a list of block labels.
fn blocks_from_labels(labels: &[usize]) -> Vec<Vec<usize>> {
    let mut seen: Vec<usize> = Vec::new();
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    for (i, &l) in labels.iter().enumerate() {
        match seen.iter().position(|&s| s == l) {
            Some(b) => blocks[b].push(i),
            None => {
                seen.push(l);
                blocks.push(vec![i]);
            }
        }
    }
    blocks
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn coarsening_commutes_with_bounds(rows in arrangement_rows(), labels in prop::collection::vec(0usize..3, 6)) {
        let Some(a) = reduced(&rows) else { return Ok(()) };
        let d = a.degree();
        let f = Factorization::linear(d);
        let c = CoarseningMap::new(blocks_from_labels(&labels[..d]), d).unwrap();
        let coarse = coarsen(&f, &c).unwrap();
        for bound in [lower_locus, upper_locus] {
            let fine = bound(&a, &f).unwrap().locus;
            let pulled = pullback_locus(&fine, &c).unwrap();
            prop_assert!(!pulled.entire_space);
            prop_assert_eq!(pulled.locus, bound(&a, &coarse).unwrap().locus);
        }
    }

    #[test]
    fn pullback_is_functorial(rows in arrangement_rows(), l1 in prop::collection::vec(0usize..4, 6), l2 in prop::collection::vec(0usize..2, 6)) {
        let Some(a) = reduced(&rows) else { return Ok(()) };
        let d = a.degree();
        let c1 = CoarseningMap::new(blocks_from_labels(&l1[..d]), d).unwrap();
        let c2 = CoarseningMap::new(blocks_from_labels(&l2[..c1.m()]), c1.m()).unwrap();
        let locus = upper_locus(&a, &Factorization::linear(d)).unwrap().locus;
        let step = pullback_locus(&pullback_locus(&locus, &c1).unwrap().locus, &c2).unwrap().locus;
        let direct = pullback_locus(&locus, &c1.then(&c2).unwrap()).unwrap().locus;
        prop_assert_eq!(step, direct);
    }

    #[test]
    fn scaling_forms_changes_nothing(rows in arrangement_rows(), scales in prop::collection::vec(prop_oneof![-3i64..=-1, 1i64..=3], 6)) {
        let Some(a) = reduced(&rows) else { return Ok(()) };
        let scaled: Vec<Vec<i64>> = rows.iter().zip(&scales).map(|(r, s)| r.iter().map(|c| c * s).collect()).collect();
        let b = reduced(&scaled).unwrap();
        let f = Factorization::linear(a.degree());
        prop_assert_eq!(lower_locus(&a, &f).unwrap().locus, lower_locus(&b, &f).unwrap().locus);
        prop_assert_eq!(upper_locus(&a, &f).unwrap().locus, upper_locus(&b, &f).unwrap().locus);
    }

    #[test]
    fn permuting_forms_permutes_coordinates(rows in arrangement_rows(), seed in any::<u64>()) {
        let Some(a) = reduced(&rows) else { return Ok(()) };
        let d = a.degree();
        let mut perm: Vec<usize> = (0..d).collect();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rand::seq::SliceRandom::shuffle(perm.as_mut_slice(), &mut rng);
        let permuted: Vec<Vec<i64>> = perm.iter().map(|&i| rows[i].clone()).collect();
        let b = reduced(&permuted).unwrap();
        // form i of b is form perm[i] of a, so group {i} of b matches group {perm[i]} of a
        let fa = Factorization::new((0..d).map(|i| vec![perm[i]]).collect(), d).unwrap();
        let fb = Factorization::linear(d);
        prop_assert_eq!(lower_locus(&a, &fa).unwrap().locus, lower_locus(&b, &fb).unwrap().locus);
        prop_assert_eq!(upper_locus(&a, &Factorization::trivial(d)).unwrap().locus, upper_locus(&b, &Factorization::trivial(d)).unwrap().locus);
    }

    #[test]
    fn lower_inside_upper(rows in arrangement_rows()) {
        let Some(a) = reduced(&rows) else { return Ok(()) };
        let d = a.degree();
        for f in [Factorization::linear(d), Factorization::trivial(d)] {
            prop_assert!(lower_locus(&a, &f).unwrap().locus.is_subset(&upper_locus(&a, &f).unwrap().locus));
        }
    }

    #[test]
    fn generic_data_is_consistent(n in 2usize..=4, extra in 1usize..=3, seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let d = n + extra;
        let a = common::random_generic(&mut rng, n, d);
        let lin = Factorization::linear(d);
        let g = generic_ideal(&a, &lin).unwrap();
        let gen = g.generator.unwrap();
        prop_assert!(gen.is_reduced());
        prop_assert!(gen.divides(&maisonobe_element(&a, &lin, 2 * d - n - 2).unwrap()));
        prop_assert_eq!(diagonal_roots(&g.locus).roots, walther_bfunction(n, d).unwrap().roots());
        // the generic locus sits between the two tame bounds
        prop_assert!(lower_locus(&a, &lin).unwrap().locus.is_subset(&g.locus));
        prop_assert!(g.locus.is_subset(&upper_locus(&a, &lin).unwrap().locus));
    }
}

#[test]
fn walther_multiplicity_of_minus_one() {
    for n in 2..=5 {
        for d in n + 1..=n + 4 {
            let b = walther_bfunction(n, d).unwrap();
            let minus_one = b.factors().iter().filter(|(h, _)| h.root() == Some(Rational::from(-1))).map(|(_, &m)| m).sum::<u32>();
            let extra = u32::from((0..=2 * d - n - 2).any(|i| i + n == d));
            assert_eq!(minus_one, (n - 1) as u32 + extra, "n={n} d={d}");
            assert_eq!(b.total_degree() as usize, n - 1 + 2 * d - n - 1);
        }
    }
}
