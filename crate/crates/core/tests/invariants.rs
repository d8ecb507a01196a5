use linkconc_core::bounds::{combinatorial_lower_bound, negative_link_value, positive_link_value};
use linkconc_core::braid::BraidWord;
use linkconc_core::seifert::{oriented_resolution, s_minus, s_plus, seifert_genus};
use linkconc_core::Diagram;
use proptest::prelude::*;

/// Braid words that use every generator, so the closure is a connected diagram.
fn braid() -> impl Strategy<Value = BraidWord> {
    (2usize..=4).prop_flat_map(|n| {
        let g = n as i32 - 1;
        (
            prop::collection::vec(any::<bool>(), g as usize),
            prop::collection::vec((1..=g, any::<bool>()), 0..8),
        )
            .prop_map(move |(signs, rest)| {
                let mut letters: Vec<i32> =
                    signs.iter().enumerate().map(|(i, &s)| if s { i as i32 + 1 } else { -(i as i32) - 1 }).collect();
                letters.extend(rest.into_iter().map(|(l, s)| if s { l } else { -l }));
                BraidWord::new(n, letters).unwrap()
            })
    })
}

fn positive_braid() -> impl Strategy<Value = BraidWord> {
    braid().prop_map(|w| BraidWord::new(w.strands, w.letters.iter().map(|l| l.abs()).collect()).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn pd_and_json_round_trip(w in braid()) {
        let d = w.closure();
        let pd = Diagram::parse(&d.to_pd_string()).unwrap();
        prop_assert_eq!(pd.to_pd_string(), d.to_pd_string());
        prop_assert_eq!(pd.writhe(), d.writhe());
        let js = Diagram::parse(&d.to_json()).unwrap();
        prop_assert_eq!(js.linking_matrix(), d.linking_matrix());
        prop_assert_eq!(js.writhe(), d.writhe());
    }

    #[test]
    fn mirror_negates_signs(w in braid()) {
        let d = w.closure();
        let m = d.mirror();
        prop_assert_eq!(m.writhe(), -d.writhe());
        prop_assert_eq!((m.n_plus(), m.n_minus()), (d.n_minus(), d.n_plus()));
        let (lk, mk) = (d.linking_matrix(), m.linking_matrix());
        for i in 0..lk.size() {
            for j in 0..lk.size() {
                prop_assert_eq!(mk.get(i, j), -lk.get(i, j));
            }
        }
        prop_assert_eq!(m.mirror().to_pd_string(), d.normalized().to_pd_string());
        prop_assert_eq!((s_plus(&m), s_minus(&m)), (s_minus(&d), s_plus(&d)));
    }

    #[test]
    fn writhe_splits_into_self_and_linking(w in braid()) {
        let d = w.closure();
        let lk = d.linking_matrix();
        let own: i64 = (0..d.component_count()).map(|i| d.component_writhe(i).unwrap()).sum();
        let mut cross = 0;
        for i in 0..lk.size() {
            for j in 0..lk.size() {
                prop_assert_eq!(lk.get(i, j), lk.get(j, i));
                if i < j {
                    cross += lk.get(i, j);
                }
            }
        }
        prop_assert_eq!(d.writhe(), own + 2 * cross);
    }

    #[test]
    fn braid_closure_shape(w in braid()) {
        let d = w.closure();
        prop_assert_eq!(d.crossing_count(), w.letters.len());
        prop_assert_eq!(d.component_count(), w.component_count());
        prop_assert_eq!(oriented_resolution(&d).count(), w.strands);
        prop_assert_eq!(d.split_components(), 1);
        let g = seifert_genus(&d).unwrap();
        prop_assert!(g.is_integer());
        prop_assert_eq!(
            2 * g.to_integer(),
            w.letters.len() as i64 - w.strands as i64 - d.component_count() as i64 + 2
        );
    }

    #[test]
    fn reversing_twice_is_identity(w in braid(), pick in 0usize..4) {
        let d = w.closure();
        let i = pick % d.component_count();
        let r = d.reverse(i).unwrap();
        let (lk, rk) = (d.linking_matrix(), r.linking_matrix());
        for j in (0..lk.size()).filter(|&j| j != i) {
            prop_assert_eq!(rk.get(i, j), -lk.get(i, j));
        }
        prop_assert_eq!(r.reverse(i).unwrap().to_pd_string(), d.normalized().to_pd_string());
        prop_assert_eq!(r.component_writhe(i).unwrap(), d.component_writhe(i).unwrap());
    }

    #[test]
    fn removing_a_component(w in braid(), pick in 0usize..4) {
        let d = w.closure();
        let i = pick % d.component_count();
        let r = d.remove_component(i).unwrap();
        prop_assert_eq!(r.component_count(), d.component_count() - 1);
        let own = d.component_writhe(i).unwrap();
        let lk: i64 = (0..d.component_count()).filter(|&j| j != i).map(|j| d.linking_matrix().get(i, j)).sum();
        prop_assert_eq!(r.writhe(), d.writhe() - own - 2 * lk);
    }

    #[test]
    fn positive_braids_meet_the_bound(w in positive_braid()) {
        let d = w.closure();
        let exact = positive_link_value(&d).unwrap().value;
        prop_assert_eq!(combinatorial_lower_bound(&d).value, exact);
        prop_assert_eq!(s_plus(&d), 1);
        let neg = negative_link_value(&d.mirror()).unwrap().value;
        prop_assert_eq!(neg, num_rational::Rational64::from_integer(d.component_count() as i64 - 1) - exact);
    }
}
