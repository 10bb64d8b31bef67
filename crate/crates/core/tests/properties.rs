use proptest::prelude::*;
use std::collections::BTreeMap;

use weylrigid::charring::{peel_decompose, product, recombine};
use weylrigid::weylchar::{freudenthal_char, CharacterTable};
use weylrigid::{RootSystem, Series, Weight};

fn system() -> impl Strategy<Value = RootSystem> {
    prop_oneof![
        Just((Series::A, 2)),
        Just((Series::A, 3)),
        Just((Series::B, 2)),
        Just((Series::B, 3)),
        Just((Series::C, 3)),
        Just((Series::D, 4)),
    ]
    .prop_map(|(s, r)| RootSystem::new(s, r).unwrap())
}

fn with_weight(max: i64) -> impl Strategy<Value = (RootSystem, Weight)> {
    system().prop_flat_map(move |rs| {
        let n = rs.rank();
        (Just(rs), prop::collection::vec(-max..=max, n).prop_map(Weight::new))
    })
}

fn with_dominant_pair(max: i64) -> impl Strategy<Value = (RootSystem, Weight, Weight)> {
    system().prop_flat_map(move |rs| {
        let n = rs.rank();
        let w = prop::collection::vec(0..=max, n).prop_map(Weight::new);
        (Just(rs), w.clone(), w)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn orbit_is_closed_and_has_one_dominant((rs, w) in with_weight(3)) {
        let d = rs.dominant_rep(&w);
        let orbit = rs.weyl_orbit(&d).unwrap();
        prop_assert!(orbit.contains(&w));
        prop_assert_eq!(orbit.iter().filter(|x| x.is_dominant()).count(), 1);
        for x in &orbit {
            for i in 1..=rs.rank() {
                prop_assert!(orbit.binary_search(&rs.reflect(x, i)).is_ok());
            }
            prop_assert_eq!(&rs.dominant_rep(x), &d);
        }
    }

    #[test]
    fn root_coordinates_round_trip((rs, w) in with_weight(4)) {
        let beta = rs.to_root_coords(&w);
        prop_assert_eq!(rs.from_root_coords(&beta), Some(w.clone()));
        let twice = &w + &w;
        let b2 = rs.to_root_coords(&twice);
        for (a, b) in beta.coeffs().iter().zip(b2.coeffs()) {
            prop_assert_eq!(*a * 2, *b);
        }
    }

    #[test]
    fn reflections_preserve_the_form((rs, w) in with_weight(3), i in 1usize..4) {
        let i = 1 + (i - 1) % rs.rank();
        let r = rs.reflect(&w, i);
        prop_assert_eq!(rs.inner_product(&r, &r).unwrap(), rs.inner_product(&w, &w).unwrap());
        prop_assert_eq!(rs.reflect(&r, i), w);
    }

    #[test]
    fn order_is_rho_monotone((rs, a, b) in with_dominant_pair(3)) {
        if rs.order_less(&a, &b) {
            prop_assert!(rs.height(&a) < rs.height(&b));
            prop_assert!(!rs.order_less(&b, &a));
        }
        if rs.dominance_leq(&a, &b) && a != b {
            prop_assert!(rs.height(&a) < rs.height(&b));
        }
    }

    #[test]
    fn product_commutes_and_peels((rs, a, b) in with_dominant_pair(1)) {
        let fa = freudenthal_char(&rs, &a).unwrap();
        let fb = freudenthal_char(&rs, &b).unwrap();
        let ab = product(&rs, &fa, &fb).unwrap();
        prop_assert_eq!(&ab, &product(&rs, &fb, &fa).unwrap());
        let mut table = CharacterTable::new();
        table.ensure_saturated(&rs, &(&a + &b)).unwrap();
        let coeffs = peel_decompose(&rs, &ab, &table).unwrap();
        prop_assert!(coeffs.values().all(|&c| c >= 0));
        prop_assert_eq!(coeffs.get(&(&a + &b)).copied(), Some(1));
        prop_assert_eq!(recombine(&coeffs, &table).unwrap(), ab);
    }
}

#[test]
fn product_is_associative() {
    let rs = RootSystem::new(Series::B, 2).unwrap();
    let ws: Vec<Weight> = [[1, 0], [0, 1], [1, 1]].iter().map(|v| Weight::new(v.to_vec())).collect();
    let rows: BTreeMap<&Weight, _> = ws.iter().map(|w| (w, freudenthal_char(&rs, w).unwrap())).collect();
    for a in &ws {
        for b in &ws {
            for c in &ws {
                let left = product(&rs, &product(&rs, &rows[a], &rows[b]).unwrap(), &rows[c]).unwrap();
                let right = product(&rs, &rows[a], &product(&rs, &rows[b], &rows[c]).unwrap()).unwrap();
                assert_eq!(left, right);
            }
        }
    }
}
