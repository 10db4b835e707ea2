use proptest::prelude::*;
use qudit_hierarchy::arith::{Qudit, ScaledMatrix};
use qudit_hierarchy::hierarchy::LevelTable;
use qudit_hierarchy::pauli::*;

fn point(d: u32) -> impl Strategy<Value = PhasePoint> {
    (0..d, 0..d).prop_map(|(p, q)| PhasePoint { p, q })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn weyl_commutation(a in point(5), b in point(5)) {
        let q = Qudit::new(5, 1).unwrap();
        let (wa, wb) = (weyl(&q, a), weyl(&q, b));
        let phase = q.omega(symplectic_product(a, b, 5).value() as i64);
        prop_assert!((&wa * &wb).same_value(&(&wb * &wa).scale_entries(&phase)));
    }

    #[test]
    fn weyl_adjoint_is_negation(a in point(7)) {
        let q = Qudit::new(7, 1).unwrap();
        prop_assert!(weyl(&q, a).adjoint().same_value(&weyl(&q, a.neg(7))));
        prop_assert!((&weyl(&q, a) * &weyl(&q, a.neg(7))).same_value(&ScaledMatrix::identity(&q, 7)));
    }

    #[test]
    fn weyl_is_its_own_expansion(a in point(3)) {
        let q = Qudit::new(3, 1).unwrap();
        let f = pauli_decompose(&weyl(&q, a)).unwrap();
        prop_assert_eq!(f.support(), vec![a]);
        prop_assert!(f.get(a).is_one());
        prop_assert_eq!(pauli_up_to_phase(&weyl(&q, a).mul_root(7)), Some(a));
    }

    #[test]
    fn parseval_and_round_trip(i in 0u64..1944) {
        let table = LevelTable::new(3, 3).unwrap();
        let (_, g) = table.entry(i);
        let f = pauli_decompose(&g).unwrap();
        prop_assert!(f.norm_squared().is_one());
        prop_assert!(f.to_matrix(table.qudit()).same_value(&g));
    }

    #[test]
    fn convolution_matches_product(i in 0u64..1944, j in 0u64..1944) {
        let table = LevelTable::new(3, 3).unwrap();
        let q = table.qudit();
        let (_, u) = table.entry(i);
        let (_, v) = table.entry(j);
        let conv = convolve(q, &pauli_decompose(&u).unwrap(), &pauli_decompose(&v).unwrap()).unwrap();
        prop_assert_eq!(conv, pauli_decompose(&(&u * &v)).unwrap());
    }

    #[test]
    fn lines_contain_their_points(a in point(7), b in point(7)) {
        prop_assume!(a != b);
        let l = line_through(&[a, b], 7).line().unwrap();
        prop_assert!(l.points(7).iter().all(|&x| l.contains(x, 7)));
        prop_assert_eq!(l.points(7).len(), 7);
    }
}

#[test]
fn figure_combination_support() {
    let q = Qudit::new(5, 1).unwrap();
    let (z, x) = (clock(&q), shift(&q));
    let three = qudit_hierarchy::arith::Cyclotomic::from_integer(q.field(), 3);
    let minus = qudit_hierarchy::arith::Cyclotomic::from_integer(q.field(), -1);
    let m = x
        .pow(2)
        .add_bare(&(&z.pow(2) * &x).scale_entries(&three))
        .unwrap()
        .add_bare(&(&z.pow(3) * &x.pow(3)).scale_entries(&minus))
        .unwrap();
    let sup = pauli_decompose(&m).unwrap().support();
    let want: Vec<PhasePoint> = [(0, 2), (2, 1), (3, 3)].iter().map(|&(p, q)| PhasePoint { p, q }).collect();
    assert_eq!(sup, want);
    let art = render_ascii(5, &sup);
    assert_eq!(art.matches('#').count(), 3);
    let svg = render_svg(5, &sup);
    assert!(svg.starts_with("<svg") && svg.trim_end().ends_with("</svg>"));
}
