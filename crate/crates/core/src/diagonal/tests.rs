use super::*;
use crate::pauli::clock;

#[test]
fn level_decompose_examples() {
    assert_eq!(level_decompose(3, 1), (1, 1));
    assert_eq!(level_decompose(3, 3), (2, 1));
    assert_eq!(level_decompose(5, 9), (3, 1));
}

#[test]
fn build_examples() {
    let q = Qudit::new(3, 2).unwrap();
    let id = build_diagonal(&q, &RankKPolynomial::zero(3)).unwrap();
    assert!(id.matrix.same_value(&ScaledMatrix::identity(&q, 3)));
    let z = build_diagonal(&q, &RankKPolynomial::new(3, 1, vec![1, 0]).unwrap()).unwrap();
    assert!(z.matrix.same_value(&clock(&q)));
    let e = build_diagonal(&q, &RankKPolynomial::new(3, 1, vec![0, 1]).unwrap()).unwrap();
    let want = ScaledMatrix::diagonal(&q, vec![q.one(), q.omega(1), q.omega(4)]);
    assert!(e.matrix.same_value(&want));
}

#[test]
fn invalid_polynomials_rejected() {
    assert!(RankKPolynomial::new(3, 1, vec![3, 0]).is_err());
    assert!(RankKPolynomial::new(3, 1, vec![1]).is_err());
    assert!(RankKPolynomial::new(3, 0, vec![0, 0]).is_err());
    let q = Qudit::new(3, 1).unwrap();
    let t = RankKPolynomial::new(3, 2, vec![1, 0]).unwrap();
    assert!(matches!(build_diagonal(&q, &t), Err(Error::PrecisionExceeded { .. })));
}

#[test]
fn level_examples() {
    let p = |m, c: Vec<u64>| RankKPolynomial::new(3, m, c).unwrap();
    assert_eq!(diagonal_level(&p(1, vec![1, 0])), 1);
    assert_eq!(diagonal_level(&p(1, vec![0, 1])), 2);
    assert_eq!(diagonal_level(&p(2, vec![1, 0])), 3);
    assert_eq!(diagonal_level(&p(2, vec![3, 3])), 2);
    assert_eq!(diagonal_level(&p(2, vec![0, 0])), 1);
    assert_eq!(diagonal_level(&RankKPolynomial::new(5, 1, vec![0, 0, 1, 0]).unwrap()), 3);
    // qubit: T = diag(1, ω_8) sits at level 3
    assert_eq!(diagonal_level(&RankKPolynomial::new(2, 3, vec![1]).unwrap()), 3);
}

#[test]
fn rk_sizes_and_levels() {
    for (d, kmax) in [(2u32, 5u32), (3, 5), (5, 4), (7, 3)] {
        for k in 1..=kmax {
            let all = enumerate_rk(d, k);
            assert_eq!(all.len() as u64, (d as u64).pow(k), "d={d} k={k}");
            assert!(all.iter().all(|p| p.level() <= k));
            let exact = all.iter().filter(|p| p.level() == k).count() as u64;
            let below = if k == 1 { 0 } else { (d as u64).pow(k - 1) };
            assert_eq!(exact, (d as u64).pow(k) - below);
        }
    }
}

#[test]
fn coset_rep_counts() {
    assert_eq!(coset_reps(3, 2), vec![RankKPolynomial { d: 3, m: 1, coeffs: vec![0, 0] }]);
    assert_eq!(coset_reps(3, 3).len(), 3);
    assert_eq!(coset_reps(3, 4).len(), 9);
    assert_eq!(coset_reps(5, 3).len(), 5);
    assert_eq!(coset_reps(2, 2).len(), 1);
    assert_eq!(coset_reps(2, 4).len(), 4);
}

#[test]
fn coset_reps_are_inequivalent() {
    for (d, k) in [(3u32, 3u32), (3, 4), (5, 3), (2, 4)] {
        let reps = coset_reps(d, k);
        for (i, a) in reps.iter().enumerate() {
            assert!(reps[0].is_zero());
            for b in &reps[i + 1..] {
                assert!(a.add(&b.neg()).level() > 2, "d={d} k={k} {a:?} {b:?}");
            }
        }
    }
}

#[test]
fn coset_split_recombines() {
    for (d, k) in [(3u32, 3u32), (3, 4), (5, 3), (2, 4)] {
        let reps = coset_reps(d, k);
        for phi in enumerate_rk(d, k) {
            let (rep, delta) = coset_split(&phi, k).unwrap();
            assert!(reps.contains(&rep));
            assert!(delta.level() <= 2);
            assert_eq!(rep.add(&delta), phi.reduced());
        }
    }
}

#[test]
fn conjugation_solver_examples() {
    let q = Qudit::new(3, 2).unwrap();
    let id = ScaledMatrix::identity(&q, 3);
    assert!(solve_conjugation_diagonal(&id, 1).unwrap().same_value(&id));
    let z = clock(&q);
    let dm = solve_conjugation_diagonal(&z, 1).unwrap();
    let x = shift_power(&q, 1);
    let lhs = &(&(&dm * &x) * &dm.adjoint()) * &x.adjoint();
    assert!(lhs.same_value(&z));
    assert!(dm.get(0, 0).is_one());
    assert_eq!(solve_conjugation_diagonal(&z, 3), Err(Error::ZeroShift));
    let t = ScaledMatrix::diagonal(&q, vec![q.one(), q.one(), q.omega(1)]);
    assert_eq!(solve_conjugation_diagonal(&t, 1), Err(Error::DeterminantNotOne));
}

#[test]
fn conjugation_solver_at_d5() {
    let q = Qudit::new(5, 2).unwrap();
    // E² has φ = 2z², det = ω^{2·30} = 1
    let e2 = build_diagonal(&q, &RankKPolynomial::new(5, 1, vec![0, 2, 0, 0]).unwrap()).unwrap();
    for c in 1..5 {
        let dm = solve_conjugation_diagonal(&e2.matrix, c).unwrap();
        let x = shift_power(&q, c);
        let lhs = &(&(&dm * &x) * &dm.adjoint()) * &x.adjoint();
        assert!(lhs.same_value(&e2.matrix), "c={c}");
        let poly = from_values(&q, &(0..5).map(|i| dm.get(i, i).clone()).collect::<Vec<_>>()).unwrap();
        assert_eq!(poly.level(), 3);
    }
}

#[test]
fn values_round_trip() {
    for (d, k) in [(3u32, 4u32), (5, 3), (2, 4)] {
        let (m, _) = level_decompose(d, k);
        let q = Qudit::new(d, m).unwrap();
        for phi in enumerate_rk(d, k) {
            let g = build_diagonal(&q, &phi).unwrap();
            let vals: Vec<_> = (0..d as usize).map(|i| g.matrix.get(i, i).clone()).collect();
            assert_eq!(from_values(&q, &vals).unwrap(), phi.reduced());
        }
    }
}
