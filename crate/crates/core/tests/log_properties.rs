use bsarr::groebner::{membership, module_equal};
use bsarr::logarithmic::{
    annihilator_generators, contraction_check, is_free_saito, is_log_derivation, is_log_form_numerator, log_derivations, log_k_forms, pairing_check,
    top_duality_check, verify_twist_identity,
};
use bsarr::Poly;
use proptest::prelude::*;

const VARS: [&str; 3] = ["x", "y", "z"];

fn p(s: &str) -> Poly {
    Poly::parse_with_vars(s, &VARS).unwrap()
}

fn linear_form(c: &[i64]) -> Poly {
    let mut out = Poly::zero(Poly::make_vars(&VARS));
    for (i, &a) in c.iter().enumerate() {
        out = &out + &Poly::var(out.vars().clone(), i).scale(&a.into());
    }
    out
}

/// Products of powers of nonzero linear forms in three variables.
fn divisor() -> impl Strategy<Value = (Vec<Vec<i64>>, Vec<u32>)> {
    prop::collection::vec(prop::collection::vec(-2i64..=2, 3), 1..=4)
        .prop_filter("nonzero forms", |fs| fs.iter().all(|f| f.iter().any(|&c| c != 0)))
        .prop_flat_map(|fs| {
            let k = fs.len();
            (Just(fs), prop::collection::vec(1u32..=2, k))
        })
}

fn product(forms: &[Vec<i64>], exps: &[u32]) -> Poly {
    forms.iter().zip(exps).fold(p("1"), |acc, (f, &e)| &acc * &linear_form(f).pow(e))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(10))]

    #[test]
    fn derivations_are_logarithmic_and_reduction_invariant((forms, exps) in divisor()) {
        let f = product(&forms, &exps);
        let der = log_derivations(&f).unwrap();
        for g in der.generators() {
            prop_assert!(is_log_derivation(&f, g).unwrap());
        }
        let red = f.squarefree_part().unwrap();
        prop_assert!(module_equal(&der, &log_derivations(&red).unwrap()).unwrap());
        let scaled = f.scale(&(-7).into());
        prop_assert!(module_equal(&der, &log_derivations(&scaled).unwrap()).unwrap());
        let euler: Vec<Poly> = (0..3).map(|i| Poly::var(f.vars().clone(), i)).collect();
        prop_assert!(membership(&euler, &der).unwrap());
    }

    #[test]
    fn form_generators_pass_the_wedge_test((forms, exps) in divisor()) {
        let f = product(&forms, &exps);
        for k in 0..=3 {
            for g in log_k_forms(&f, k).unwrap().module.generators() {
                prop_assert!(is_log_form_numerator(&f, k, g).unwrap());
            }
            prop_assert!(verify_twist_identity(&f, k).unwrap());
        }
    }

    #[test]
    fn appendix_theorems_hold((forms, exps) in divisor()) {
        let f = product(&forms, &exps);
        prop_assert!(contraction_check(&f).unwrap());
        prop_assert!(pairing_check(&f).unwrap().passed());
        prop_assert!(top_duality_check(&f).unwrap());
        let a = is_free_saito(&f).unwrap();
        let b = is_free_saito(&f.squarefree_part().unwrap()).unwrap();
        prop_assert_eq!(a.free, b.free);
        if let Some(det) = a.determinant.filter(|_| a.free) {
            prop_assert!(det.is_unit_multiple_of(&a.f_red));
        }
    }

    #[test]
    fn arrangement_annihilators_divide((forms, _exps) in divisor()) {
        let factors: Vec<Poly> = forms.iter().map(|f| linear_form(f)).collect();
        prop_assert!(annihilator_generators(&factors).is_ok());
    }
}

#[test]
fn rank_two_arrangements_are_free() {
    let v2 = ["x", "y"];
    for s in ["x*y", "x*y*(x+y)", "x*y*(x+y)*(x-y)", "x*y*(x+y)*(x+2*y)*(3*x-y)", "x^2*y*(x+y)^3"] {
        let f = Poly::parse_with_vars(s, &v2).unwrap();
        let r = is_free_saito(&f).unwrap();
        assert!(r.free, "{s}");
        assert!(r.determinant.unwrap().is_unit_multiple_of(&f.squarefree_part().unwrap()));
    }
}

#[test]
fn non_free_generic_plane_arrangement() {
    // four generic planes in three space: not free, Der needs more than three generators
    let r = is_free_saito(&p("x*y*z*(x+y+z)")).unwrap();
    assert!(!r.free);
    assert!(r.generators.len() > 3);
}
