#![allow(dead_code)]

use bsarr::arrangement::{is_generic, Arrangement};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub fn arr(rows: &[&[i64]]) -> Arrangement {
    Arrangement::from_int_rows(rows).unwrap()
}

/// Two arrangements with the same intersection lattice and different b-functions.
pub fn walther_pair() -> (Arrangement, Arrangement) {
    let f = arr(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1], &[1, 0, 3], &[1, 1, 1], &[1, 2, 3], &[2, 1, 1], &[2, 3, 1], &[2, 3, 4]]);
    let g = arr(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1], &[1, 0, 5], &[1, 1, 1], &[1, 3, 5], &[2, 1, 1], &[2, 3, 1], &[2, 3, 4]]);
    (f, g)
}

pub fn named_fixtures() -> Vec<(&'static str, Arrangement)> {
    let (f, g) = walther_pair();
    vec![
        ("xy", arr(&[&[1, 0], &[0, 1]])),
        ("xy(x+y)", arr(&[&[1, 0], &[0, 1], &[1, 1]])),
        ("four lines", arr(&[&[1, 0], &[0, 1], &[1, 1], &[1, -1]])),
        ("xyz", arr(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]])),
        ("xyz(x+y)", arr(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1], &[1, 1, 0]])),
        ("generic 3,4", arr(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1], &[1, 1, 1]])),
        ("generic 3,5", arr(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1], &[1, 1, 1], &[1, 2, 3]])),
        ("braid A3", arr(&[&[1, -1, 0], &[1, 0, -1], &[0, 1, -1], &[1, 0, 0], &[0, 1, 0], &[0, 0, 1]])),
        ("near pencil", arr(&[&[1, 0, 0], &[0, 1, 0], &[1, 1, 0], &[1, 2, 0], &[0, 0, 1]])),
        ("x1x2x3x4", arr(&[&[1, 0, 0, 0], &[0, 1, 0, 0], &[0, 0, 1, 0], &[0, 0, 0, 1]])),
        ("generic 4,6", arr(&[&[1, 0, 0, 0], &[0, 1, 0, 0], &[0, 0, 1, 0], &[0, 0, 0, 1], &[1, 1, 1, 1], &[1, 2, 3, 4]])),
        ("Walther f", f),
        ("Walther g", g),
    ]
}

pub fn random_rows(rng: &mut ChaCha8Rng, n: usize, d: usize, bound: i64) -> Vec<Vec<i64>> {
    (0..d).map(|_| (0..n).map(|_| rng.gen_range(-bound..=bound)).collect()).collect()
}

fn build(rows: &[Vec<i64>]) -> Option<Arrangement> {
    if rows.iter().any(|r| r.iter().all(|&c| c == 0)) {
        return None;
    }
    let refs: Vec<&[i64]> = rows.iter().map(Vec::as_slice).collect();
    Arrangement::from_int_rows(&refs).ok()
}

pub fn random_reduced(rng: &mut ChaCha8Rng, n: usize, d: usize) -> Arrangement {
    loop {
        if let Some(a) = build(&random_rows(rng, n, d, 3)) {
            if a.is_reduced() {
                return a;
            }
        }
    }
}

pub fn random_generic(rng: &mut ChaCha8Rng, n: usize, d: usize) -> Arrangement {
    loop {
        if let Some(a) = build(&random_rows(rng, n, d, 5)) {
            if a.is_reduced() && is_generic(&a).unwrap() {
                return a;
            }
        }
    }
}
