mod common;

use std::collections::BTreeSet;

use bsarr::arrangement::{edge_sets, intersection_lattice, is_indecomposable, lattice_isomorphic, Arrangement};
use bsarr::QMatrix;
use proptest::prelude::*;

fn rank(a: &Arrangement, idx: &[usize]) -> usize {
    if idx.is_empty() {
        return 0;
    }
    QMatrix::from_rows(a.n(), idx.iter().map(|&i| a.forms()[i].coeffs.clone()).collect()).unwrap().rank()
}

/// Closed subsets with their ranks, by enumerating every subset.
fn brute_force(a: &Arrangement) -> BTreeSet<(Vec<usize>, usize)> {
    let d = a.forms().len();
    (0u32..1 << d)
        .map(|mask| {
            let s: Vec<usize> = (0..d).filter(|i| mask >> i & 1 == 1).collect();
            let r = rank(a, &s);
            let closure = (0..d)
                .filter(|&i| {
                    let mut t = s.clone();
                    t.push(i);
                    rank(a, &t) == r
                })
                .collect();
            (closure, r)
        })
        .collect()
}

/// A flat decomposes iff its forms split into two nonempty parts whose ranks add up.
fn brute_force_indecomposable(a: &Arrangement, forms: &[usize]) -> bool {
    let k = forms.len();
    if k == 0 {
        return false;
    }
    let total = rank(a, forms);
    (1u32..(1 << k) - 1).all(|mask| {
        let (l, r): (Vec<usize>, Vec<usize>) = (0..k).partition(|i| mask >> i & 1 == 1);
        let l: Vec<usize> = l.iter().map(|&i| forms[i]).collect();
        let r: Vec<usize> = r.iter().map(|&i| forms[i]).collect();
        rank(a, &l) + rank(a, &r) != total
    })
}

fn check(a: &Arrangement) {
    let lat = intersection_lattice(a);
    let expected = brute_force(a);
    let got: BTreeSet<(Vec<usize>, usize)> = lat.edges.iter().map(|e| (e.form_indices.clone(), e.rank)).collect();
    assert_eq!(got, expected);
    assert_eq!(edge_sets(&lat).len(), lat.edges.len());
    for e in &lat.edges {
        assert_eq!(e.indecomposable, brute_force_indecomposable(a, &e.form_indices), "{:?}", e.form_indices);
        assert_eq!(e.indecomposable, is_indecomposable(e, a));
    }
    for &(lo, hi) in &lat.containment {
        let (x, y) = (&lat.edges[lo], &lat.edges[hi]);
        assert!(y.form_indices.iter().all(|i| x.form_indices.contains(i)) && x.rank > y.rank);
    }
}

#[test]
fn fixtures_match_brute_force() {
    for (name, a) in common::named_fixtures() {
        eprintln!("{name}");
        check(&a);
    }
}

#[test]
fn isomorphism_examples() {
    let (f, g) = common::walther_pair();
    assert!(lattice_isomorphic(&f, &g).unwrap());
    let a = common::arr(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1], &[1, 1, 0]]);
    let b = common::arr(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1], &[1, 1, 1]]);
    assert!(!lattice_isomorphic(&a, &b).unwrap());
    let c = common::arr(&[&[0, 0, 1], &[1, 0, 0], &[0, 1, 1], &[0, 1, 0]]);
    assert!(lattice_isomorphic(&a, &c).unwrap());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn random_arrangements_match_brute_force(n in 2usize..=4, rows in prop::collection::vec(prop::collection::vec(-2i64..=2, 4), 1..=7)) {
        let rows: Vec<Vec<i64>> = rows.into_iter().map(|r| r[..n].to_vec()).filter(|r| r.iter().any(|&c| c != 0)).collect();
        prop_assume!(!rows.is_empty());
        let refs: Vec<&[i64]> = rows.iter().map(Vec::as_slice).collect();
        let a = Arrangement::from_int_rows(&refs).unwrap();
        prop_assume!(a.is_reduced());
        check(&a);
        prop_assert!(lattice_isomorphic(&a, &a).unwrap());
    }
}
