use proptest::prelude::*;
use qudit_hierarchy::arith::Qudit;
use qudit_hierarchy::diagonal::*;

fn poly(d: u32, m: u32) -> impl Strategy<Value = RankKPolynomial> {
    let n = (d as u64).pow(m);
    proptest::collection::vec(0..n, (d - 1) as usize).prop_map(move |c| RankKPolynomial::new(d, m, c).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn addition_is_gate_product(a in poly(5, 2), b in poly(5, 2)) {
        let q = Qudit::new(5, 2).unwrap();
        let ga = build_diagonal(&q, &a).unwrap().matrix;
        let gb = build_diagonal(&q, &b).unwrap().matrix;
        let gab = build_diagonal(&q, &a.add(&b)).unwrap().matrix;
        prop_assert!((&ga * &gb).same_value(&gab));
        prop_assert!(build_diagonal(&q, &a.neg()).unwrap().matrix.same_value(&ga.adjoint()));
    }

    #[test]
    fn values_read_back(a in poly(3, 3)) {
        let q = Qudit::new(3, 3).unwrap();
        let g = build_diagonal(&q, &a).unwrap().matrix;
        let vals: Vec<_> = (0..3).map(|z| g.get(z, z).clone()).collect();
        prop_assert_eq!(from_values(&q, &vals).unwrap(), a.reduced());
    }

    #[test]
    fn conjugation_solver_inverts(a in poly(5, 2), c in 1i64..5) {
        let q = Qudit::new(5, 2).unwrap();
        let dm = build_diagonal(&q, &a).unwrap().matrix;
        let x = shift_power(&q, c);
        let dprime = &(&(&dm * &x) * &dm.adjoint()) * &x.adjoint();
        prop_assert!(solve_conjugation_diagonal(&dprime, c).unwrap().same_value(&dm));
    }

    #[test]
    fn coset_split_recombines(a in poly(3, 2)) {
        let (rep, delta) = coset_split(&a, 4).unwrap();
        prop_assert_eq!(rep.add(&delta), a.reduced());
        prop_assert!(delta.in_level(2));
        prop_assert!(coset_reps(3, 4).contains(&rep));
    }
}

#[test]
fn level_sizes() {
    for (d, k) in [(3u32, 1u32), (3, 2), (3, 3), (3, 4), (5, 2), (5, 3), (2, 3)] {
        assert_eq!(enumerate_rk(d, k).len(), (d as usize).pow(k));
        assert_eq!(coset_reps(d.max(2), k.max(2)).len(), (d as usize).pow(k.max(2) - 2));
    }
}
