use bsarr::groebner::{buchberger, graded_minimal_resolution, ModuleOrder, PolyModule};
use bsarr::{Monomial, Poly};

const VARS: [&str; 3] = ["x", "y", "z"];

fn binom(n: i64, k: i64) -> i64 {
    if k < 0 || n < k {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

fn monomials(n: usize, t: u32) -> Vec<Monomial> {
    if n == 0 {
        return if t == 0 { vec![Monomial(vec![])] } else { vec![] };
    }
    (0..=t)
        .flat_map(|e| {
            monomials(n - 1, t - e).into_iter().map(move |mut m| {
                m.0.insert(0, e);
                m
            })
        })
        .collect()
}

/// `dim I_t` as monomials of degree `t` outside the initial ideal, subtracted from all monomials.
fn hilbert_from_basis(ideal: &PolyModule, t: u32) -> i64 {
    let gb = buchberger(ideal, ModuleOrder::default()).unwrap();
    let leads: Vec<Monomial> = gb.elements().iter().map(|e| e[0].leading_monomial().unwrap().clone()).collect();
    monomials(3, t).iter().filter(|m| leads.iter().any(|l| l.divides(m))).count() as i64
}

/// Alternating sum of shifted Hilbert functions of the free modules in the resolution.
fn hilbert_from_betti(graded: &[Vec<i64>], t: i64) -> i64 {
    graded
        .iter()
        .enumerate()
        .map(|(i, degs)| {
            let sign = if i % 2 == 0 { 1 } else { -1 };
            sign * degs.iter().map(|&a| binom(t - a + 2, 2)).sum::<i64>()
        })
        .sum()
}

#[test]
fn betti_numbers_reproduce_hilbert_functions() {
    let ideals: &[&[&str]] = &[
        &["x", "y", "z"],
        &["x^2", "y^2", "z^2"],
        &["x*y", "y*z", "x*z"],
        &["x^2", "x*y", "y^3"],
        &["x^2 - y*z", "y^2 - x*z", "z^2 - x*y"],
        &["x^3 + y^3 + z^3"],
    ];
    for gens in ideals {
        let m = PolyModule::ideal(gens.iter().map(|s| Poly::parse_with_vars(s, &VARS).unwrap()).collect()).unwrap();
        let res = graded_minimal_resolution(&m, 4).unwrap();
        assert!(res.proj_dim.is_some_and(|p| p <= 2), "{gens:?}");
        for t in 0..8 {
            assert_eq!(hilbert_from_betti(&res.graded, t as i64), hilbert_from_basis(&m, t), "{gens:?} t={t}");
        }
    }
}

#[test]
fn determinantal_ideal_betti() {
    let m = PolyModule::ideal(
        ["x^2 - y*z", "y^2 - x*z", "z^2 - x*y"].iter().map(|s| Poly::parse_with_vars(s, &VARS).unwrap()).collect(),
    )
    .unwrap();
    let res = graded_minimal_resolution(&m, 4).unwrap();
    assert_eq!(res.betti, vec![3, 2]);
    assert_eq!(res.graded, vec![vec![2, 2, 2], vec![3, 3]]);
}
