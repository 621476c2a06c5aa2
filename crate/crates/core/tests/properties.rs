use std::cmp::Ordering;

use proptest::prelude::*;

use nilcone::chains::{chain_type, OneFlag};
use nilcone::class::rational;
use nilcone::polytope::fourier_motzkin::{integer_points, Halfspace};
use nilcone::{
    enumerate_canonical_regions, euler_form, is_semistable_inequalities, is_semistable_regions, slope, twist, ClassH,
    GenusContext, JordanType, Slope,
};

fn ctx(g: i64) -> GenusContext {
    GenusContext::new(g).unwrap()
}

fn sheaf_class() -> impl Strategy<Value = ClassH> {
    prop_oneof![
        (1i64..6, -20i64..20).prop_map(|(rank, degree)| ClassH { rank, degree }),
        (1i64..8).prop_map(|degree| ClassH { rank: 0, degree }),
    ]
}

fn jordan_type() -> impl Strategy<Value = JordanType> {
    (2i64..5, 1usize..6)
        .prop_flat_map(|(g, s)| (Just(g), prop::collection::vec((0i64..4, 0i64..8, -12i64..12), s)))
        .prop_map(|(g, cols)| {
            let s = cols.len();
            let mut r = Vec::with_capacity(s);
            let mut d = Vec::with_capacity(s);
            for (i, (rk, torsion, deg)) in cols.into_iter().enumerate() {
                let rk = if i + 1 == s && rk == 0 { 1 } else { rk };
                r.push(rk);
                d.push(if rk == 0 { torsion } else { deg });
            }
            JordanType::new(ctx(g), r, d).unwrap()
        })
}

fn permutation(s: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((1..=s).collect::<Vec<_>>()).prop_shuffle()
}

proptest! {
    #[test]
    fn slope_trichotomy(a in sheaf_class(), b in sheaf_class()) {
        let (sa, sb) = (slope(a).unwrap(), slope(b).unwrap());
        let by_cross = match (a.rank, b.rank) {
            (0, 0) => Ordering::Equal,
            (0, _) => Ordering::Greater,
            (_, 0) => Ordering::Less,
            _ => (a.degree * b.rank).cmp(&(b.degree * a.rank)),
        };
        prop_assert_eq!(sa.cmp(&sb), by_cross);
    }

    #[test]
    fn euler_form_skew_part(g in 2i64..6, a in sheaf_class(), b in sheaf_class()) {
        let c = ctx(g);
        let sym = euler_form(c, a, b) + euler_form(c, b, a);
        prop_assert_eq!(sym, 2 * (1 - g) * a.rank * b.rank);
    }

    #[test]
    fn twist_is_additive(a in sheaf_class(), p in -10i64..10, q in -10i64..10) {
        prop_assert_eq!(twist(twist(a, p), q), twist(a, p + q));
        if a.rank > 0 {
            prop_assert_eq!(slope(twist(a, p)).unwrap(), Slope::Finite(rational(a.degree + p * a.rank, a.rank)));
        }
    }

    #[test]
    fn region_class_matches_box_sum(jt in jordan_type()) {
        for region in enumerate_canonical_regions(jt.s()) {
            prop_assert_eq!(jt.region_class(&region), region.to_box_set().class(&jt));
        }
    }

    #[test]
    fn bar_is_an_involution(s in 1usize..8) {
        let total = s * (s + 1) / 2;
        for region in enumerate_canonical_regions(s) {
            let bar = region.bar();
            prop_assert_eq!(bar.bar(), region.clone());
            prop_assert_eq!(region.box_count() + bar.box_count(), total);
            prop_assert_eq!(region.is_nontrivial(), bar.is_nontrivial());
        }
    }

    #[test]
    fn the_two_semistability_tests_agree(jt in jordan_type()) {
        let a = is_semistable_regions(&jt).unwrap();
        let b = is_semistable_inequalities(&jt).unwrap();
        prop_assert_eq!(a.semistable, b.semistable, "{}", jt);
    }

    #[test]
    fn strips_conserve_the_total_class((jt, sigma) in jordan_type().prop_flat_map(|jt| {
        let s = jt.s();
        (Just(jt), permutation(s))
    })) {
        let flag = OneFlag::new(sigma).unwrap();
        let ct = chain_type(&jt, &flag).unwrap();
        prop_assert_eq!(ct.higgs_class(jt.ctx()), jt.total_class());
    }

    #[test]
    fn lattice_points_match_a_box_scan(
        rows in prop::collection::vec((prop::collection::vec(-3i64..=3, 3), -6i64..=6), 0..5)
    ) {
        const W: i64 = 4;
        let mut hs: Vec<Halfspace> = rows
            .iter()
            .map(|(a, b)| Halfspace::new(a.iter().map(|&x| rational(x, 1)).collect(), rational(*b, 1)))
            .collect();
        for v in 0..3 {
            let mut e = vec![rational(0, 1); 3];
            e[v] = rational(1, 1);
            hs.push(Halfspace::new(e.clone(), rational(W, 1)));
            e[v] = rational(-1, 1);
            hs.push(Halfspace::new(e, rational(W, 1)));
        }
        let got: Vec<Vec<i64>> = integer_points(&hs, 3)
            .unwrap()
            .into_iter()
            .map(|p| p.iter().map(|x| i64::try_from(x.clone()).unwrap()).collect())
            .collect();
        let mut want = Vec::new();
        for x in -W..=W {
            for y in -W..=W {
                for z in -W..=W {
                    if rows.iter().all(|(a, b)| a[0] * x + a[1] * y + a[2] * z <= *b) {
                        want.push(vec![x, y, z]);
                    }
                }
            }
        }
        prop_assert_eq!(got, want);
    }
}
