use super::*;
use crate::clifford::{clifford_from_matrix, e_gate, hadamard};
use crate::diagonal::{build_diagonal, RankKPolynomial};
use crate::hierarchy::{semi_clifford_decompose, LevelTable};
use crate::pauli::clock;

fn decompose(g: &ScaledMatrix) -> SemiCliffordDecomposition {
    semi_clifford_decompose(g).unwrap()
}

#[test]
fn magic_state_examples() {
    let q = Qudit::new(3, 2).unwrap();
    let id = build_diagonal(&q, &RankKPolynomial::zero(3)).unwrap();
    let plus = prepare_magic(&q, &id).unwrap();
    assert_eq!(plus.half_log_scale(), 1);
    assert!(plus.amps().iter().all(|a| a.is_one()));
    let z = build_diagonal(&q, &RankKPolynomial::new(3, 1, vec![1, 0]).unwrap()).unwrap();
    let m = prepare_magic(&q, &z).unwrap();
    for (k, a) in m.amps().iter().enumerate() {
        assert_eq!(*a, q.omega(k as i64));
    }
    let t = build_diagonal(&q, &RankKPolynomial::new(3, 2, vec![1, 0]).unwrap()).unwrap();
    let m = prepare_magic(&q, &t).unwrap();
    for (k, a) in m.amps().iter().enumerate() {
        assert_eq!(*a, q.root(q.omega_m_exp(2, k as i64).unwrap()));
    }
    assert!(m.norm_squared().is_one());
}

#[test]
fn exponent_map_is_identity() {
    for d in [2u32, 3, 5] {
        let q = Qudit::new(d, 1).unwrap();
        assert_eq!(ExponentMap::calibrate(&q).unwrap(), ExponentMap::standard(d));
    }
}

#[test]
fn protocol_examples() {
    let q = Qudit::new(3, 2).unwrap();
    let id = ScaledMatrix::identity(&q, 3);
    let z = clock(&q);
    let t = build_diagonal(&q, &RankKPolynomial::new(3, 2, vec![1, 0]).unwrap()).unwrap().matrix;
    let g = &(&hadamard(&q) * &t) * &e_gate(&q);
    for gate in [&id, &z, &g] {
        let parts = decompose(gate);
        for j in 0..3 {
            let psi = StateVector::basis(&q, j);
            let branches = run_protocol(gate, &parts, &psi, None).unwrap();
            assert_eq!(branches.len(), 3);
            assert!(branches.iter().all(|b| b.matched && b.uniform_probability));
        }
    }
}

#[test]
fn wrong_parts_are_rejected() {
    let q = Qudit::new(3, 2).unwrap();
    let parts = decompose(&hadamard(&q));
    let psi = StateVector::basis(&q, 0);
    assert!(run_protocol(&clock(&q), &parts, &psi, None).is_err());
}

#[test]
fn forced_outcome_runs_one_branch() {
    let q = Qudit::new(3, 2).unwrap();
    let g = e_gate(&q);
    let parts = decompose(&g);
    let psi = StateVector::column(&hadamard(&q), 1).unwrap();
    let b = run_protocol(&g, &parts, &psi, Some(2)).unwrap();
    assert_eq!(b.len(), 1);
    assert_eq!(b[0].outcome, 2);
    assert!(b[0].matched);
}

#[test]
fn correction_is_one_level_down() {
    let table = LevelTable::new(3, 3).unwrap();
    let oracle = crate::hierarchy::MembershipOracle::default();
    for i in (0..table.len()).step_by(97) {
        let (_, g) = table.entry(i);
        let parts = decompose(&g);
        let corr = correction_gate(&parts);
        assert!(oracle.is_member(&corr, 2).unwrap(), "index {i}");
    }
    let _ = clifford_from_matrix(&hadamard(table.qudit())).unwrap();
}
