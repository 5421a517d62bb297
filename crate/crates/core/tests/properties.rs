use bottforge::oracle::filtration_euler_sum;
use bottforge::weylwalk::{apply_word_dot_reversed, make_dominant_dot_with};
use bottforge::*;
use proptest::prelude::*;

const TYPES: &[&str] = &["A1", "A2", "A3", "B2", "B3", "C3", "D4", "G2", "F4"];

fn system() -> impl Strategy<Value = RootSystem> {
    prop::sample::select(TYPES).prop_map(|t| RootSystem::new(t.parse().unwrap()))
}

fn system_and_weight(radius: i64) -> impl Strategy<Value = (RootSystem, Weight)> {
    system().prop_flat_map(move |rs| {
        let n = rs.rank();
        (
            Just(rs),
            prop::collection::vec(-radius..=radius, n).prop_map(Weight::new),
        )
    })
}

fn query() -> impl Strategy<Value = (RootSystem, usize, u32, Weight)> {
    system_and_weight(8).prop_flat_map(|(rs, lam)| {
        let n = rs.rank();
        (Just(rs), 0..n, 0u32..8, Just(lam))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(400))]

    #[test]
    fn euler_identity_holds((rs, alpha, r, lam) in query()) {
        let h = cohomology(&rs, alpha, r, &lam).unwrap();
        prop_assert_eq!(h.euler_characteristic(), filtration_euler_sum(&rs, alpha, r, &lam));
        for (i, module) in h.iter() {
            prop_assert!(module.is_nonnegative());
            prop_assert!(i <= rs.num_positive_roots() + 1);
        }
    }

    #[test]
    fn rank1_formula_agrees((rs, lam) in system_and_weight(8), alpha in 0usize..4) {
        let alpha = alpha % rs.rank();
        prop_assert_eq!(cohomology_rank1(&rs, alpha, &lam).unwrap(), cohomology(&rs, alpha, 1, &lam).unwrap());
    }

    #[test]
    fn walk_is_pivot_independent_and_invertible((rs, lam) in system_and_weight(10)) {
        let a = make_dominant_dot_with(&rs, &lam, Pivot::SmallestIndex);
        let b = make_dominant_dot_with(&rs, &lam, Pivot::LargestIndex);
        match (a, b) {
            (DotNormalForm::Singular, DotNormalForm::Singular) => {}
            (
                DotNormalForm::Regular { length: l1, dominant: d1, word },
                DotNormalForm::Regular { length: l2, dominant: d2, .. },
            ) => {
                prop_assert_eq!(l1, l2);
                prop_assert_eq!(&d1, &d2);
                prop_assert_eq!(apply_word_dot_reversed(&rs, &word, &d1), lam);
            }
            _ => prop_assert!(false, "pivot rules disagree on singularity"),
        }
    }

    #[test]
    fn dot_reflection_flips_euler_sign((rs, lam) in system_and_weight(10), i in 0usize..4) {
        let i = i % rs.rank();
        let image = dot_reflect_simple(&rs, i, &lam).unwrap();
        prop_assert_eq!(dot_reflect_simple(&rs, i, &image).unwrap(), lam.clone());
        prop_assert_eq!(euler_characteristic(&rs, &image), euler_characteristic(&rs, &lam).negate());
    }

    #[test]
    fn serre_duality_holds((rs, lam) in system_and_weight(10)) {
        prop_assert!(serre_duality_check(&rs, &lam));
    }

    #[test]
    fn virtual_modules_form_a_group((rs, a) in system_and_weight(3), b in prop::collection::vec(0i64..4, 4), n in -3i64..3) {
        let a = Weight::new(a.coords().iter().map(|c| c.abs()).collect());
        let b = Weight::new(b[..rs.rank()].to_vec());
        let u = VirtualModule::irreducible(&rs, a).unwrap();
        let v = VirtualModule::irreducible(&rs, b).unwrap().scale(n);
        let uv = u.add(&v).unwrap();
        prop_assert_eq!(uv.clone(), v.add(&u).unwrap());
        prop_assert!(uv.add(&uv.negate()).unwrap().is_empty());
        prop_assert_eq!(
            uv.dimension(&rs).unwrap(),
            u.dimension(&rs).unwrap() + v.dimension(&rs).unwrap()
        );
    }

    #[test]
    fn demazure_json_round_trips((rs, alpha, r, lam) in query()) {
        let doc = report::demazure_report(&rs, alpha, r, &lam).unwrap();
        let text = serde_json::to_string(&doc).unwrap();
        let back: report::DemazureJson = serde_json::from_str(&text).unwrap();
        prop_assert_eq!(serde_json::to_string(&back).unwrap(), text);
    }
}
