use super::*;
use crate::arith::{Qudit, ScaledMatrix};
use crate::diagonal::RankKPolynomial;
use crate::exec::Execution;
use crate::pauli::{clock, shift, weyl};

fn sm(rows: [[i64; 2]; 2], d: u32) -> SymplecticMatrix {
    SymplecticMatrix::new(rows[0][0], rows[0][1], rows[1][0], rows[1][1], d).unwrap()
}

#[test]
fn group_order() {
    for d in [2u32, 3, 5, 7] {
        assert_eq!(SymplecticMatrix::all(d).len() as u32, d * (d * d - 1));
    }
    assert_eq!(SymplecticMatrix::new(1, 1, 1, 1, 3), Err(Error::BadDeterminant(0)));
}

#[test]
fn factor_examples() {
    assert_eq!(sp_factor(&SymplecticMatrix::identity(3)), SpFactor::Upper { e: 0, f: 1 });
    assert_eq!(sp_factor(&SymplecticMatrix::j(3)), SpFactor::Lower { g: 0, e: 0, f: 1 });
    assert_eq!(sp_factor(&sm([[2, 1], [1, 1]], 3)), SpFactor::Lower { g: 2, e: 1, f: 2 });
    for d in [2u32, 3, 5, 7] {
        for s in SymplecticMatrix::all(d) {
            assert_eq!(sp_factor(&s).recompose(d), s);
        }
    }
}

#[test]
fn mu_examples() {
    let q = Qudit::new(3, 1).unwrap();
    assert!(mu(&q, &SymplecticMatrix::identity(3)).unwrap().same_value(&ScaledMatrix::identity(&q, 3)));
    assert!(mu(&q, &SymplecticMatrix::j(3)).unwrap().same_value(&hadamard(&q)));
    let b1 = mu(&q, &sm([[1, 1], [0, 1]], 3)).unwrap();
    let want = ScaledMatrix::diagonal(&q, vec![q.one(), q.omega(2), q.omega(2)]);
    assert!(b1.same_value(&want));
}

#[test]
fn mu_is_projective_homomorphism() {
    for d in [2u32, 3, 5] {
        let q = Qudit::new(d, 1).unwrap();
        let all = SymplecticMatrix::all(d);
        let step = (all.len() / 12).max(1);
        for a in all.iter().step_by(step) {
            for b in all.iter().step_by(step + 1) {
                let lhs = &mu(&q, a).unwrap() * &mu(&q, b).unwrap();
                if d == 2 {
                    // qubit images agree only modulo a Pauli factor
                    assert_eq!(clifford_from_matrix(&lhs).unwrap().affine.s, a.mul(b));
                } else {
                    assert!(lhs.same_phase_class(&mu(&q, &a.mul(b)).unwrap()), "d={d} {a:?} {b:?}");
                }
            }
        }
    }
}

#[test]
fn conjugation_is_exact_for_odd_d() {
    for d in [3u32, 5] {
        let q = Qudit::new(d, 1).unwrap();
        for s in SymplecticMatrix::all(d) {
            let c = mu(&q, &s).unwrap();
            for x in crate::pauli::PhasePoint::all(d) {
                let img = ScaledMatrix::conjugate_by(&c, &weyl(&q, x)).unwrap();
                assert!(img.same_value(&weyl(&q, s.apply(x))), "d={d} S={s:?} x={x:?}");
            }
        }
    }
}

#[test]
fn from_matrix_examples() {
    let q = Qudit::new(3, 1).unwrap();
    let z = clifford_from_matrix(&clock(&q)).unwrap();
    assert_eq!(z.affine.s, SymplecticMatrix::identity(3));
    assert_eq!(z.affine.v, crate::pauli::PhasePoint { p: 1, q: 0 });
    let h = clifford_from_matrix(&hadamard(&q)).unwrap();
    assert_eq!(h.affine, AffineSymplectic::new(SymplecticMatrix::j(3), crate::pauli::PhasePoint::origin()));
    let eh = clifford_from_matrix(&(&e_gate(&q) * &hadamard(&q))).unwrap();
    assert_eq!(eh.affine.s, sm([[-2, 1], [-1, 0]], 3));
    assert_eq!(m_symplectic(3, Some(1)), eh.affine.s);
    let t = ScaledMatrix::diagonal(&q, vec![q.one(), q.one(), q.root(1)]);
    assert!(matches!(clifford_from_matrix(&t), Err(Error::NotClifford)));
}

#[test]
fn affine_round_trip() {
    for d in [2u32, 3, 5] {
        let q = Qudit::new(d, 1).unwrap();
        for aff in AffineSymplectic::all(d).into_iter().step_by(if d == 5 { 7 } else { 1 }) {
            let c = CliffordGate::from_affine(&q, aff).unwrap();
            assert_eq!(clifford_from_matrix(&c.matrix).unwrap().affine, aff);
        }
    }
}

#[test]
fn affine_composition_matches_matrices() {
    let q = Qudit::new(3, 1).unwrap();
    let all = AffineSymplectic::all(3);
    for a in all.iter().step_by(17) {
        for b in all.iter().step_by(23) {
            let prod = &CliffordGate::from_affine(&q, *a).unwrap().matrix
                * &CliffordGate::from_affine(&q, *b).unwrap().matrix;
            assert_eq!(clifford_from_matrix(&prod).unwrap().affine, a.compose(b));
            assert_eq!(prod.phase_key(), CliffordGate::from_affine(&q, a.compose(b)).unwrap().matrix.phase_key());
            assert_eq!(a.compose(&a.inverse()), AffineSymplectic::identity(3));
        }
    }
}

#[test]
fn mdp_examples() {
    let q = Qudit::new(3, 1).unwrap();
    let id = CliffordGate::from_affine(&q, AffineSymplectic::identity(3)).unwrap();
    let f = mdp_normal_form(&id).unwrap();
    assert_eq!(f, MDPForm { m: None, d: RankKPolynomial::zero(3), p: (1, 0) });
    let x = clifford_from_matrix(&shift(&q)).unwrap();
    assert_eq!(mdp_normal_form(&x).unwrap(), MDPForm { m: None, d: RankKPolynomial::zero(3), p: (1, 1) });
    let h = clifford_from_matrix(&hadamard(&q)).unwrap();
    assert_eq!(mdp_normal_form(&h).unwrap(), MDPForm { m: Some(0), d: RankKPolynomial::zero(3), p: (1, 0) });
}

#[test]
fn mdp_is_a_bijection() {
    for d in [2u32, 3, 5] {
        let q = Qudit::new(d, if d == 2 { 2 } else { 1 }).unwrap();
        let mut forms = std::collections::BTreeSet::new();
        let all = AffineSymplectic::all(d);
        for aff in &all {
            let c = CliffordGate::from_affine(&q, *aff).unwrap();
            let f = mdp_normal_form(&c).unwrap();
            assert!(f.to_matrix(&q).unwrap().same_phase_class(&c.matrix));
            assert_eq!(f.m.is_none(), aff.s.s21 == 0);
            forms.insert(f);
        }
        assert_eq!(forms.len(), all.len());
        assert_eq!(forms.len() as u32, d * d * d * (d * d - 1));
    }
}

#[test]
fn reverse_form_examples() {
    let q = Qudit::new(3, 1).unwrap();
    let id = CliffordGate::from_affine(&q, AffineSymplectic::identity(3)).unwrap();
    let r = reverse_form(&id).unwrap();
    assert_eq!(r, ReverseForm { d: RankKPolynomial::zero(3), p: (1, 0), m_inverse: None });
    let h = clifford_from_matrix(&hadamard(&q)).unwrap();
    let r = reverse_form(&h).unwrap();
    // H = P_{-1}·H†: the parity permutation ahead of the inverted 𝓜 part
    assert_eq!(r, ReverseForm { d: RankKPolynomial::zero(3), p: (2, 0), m_inverse: Some(0) });
    for aff in AffineSymplectic::all(3).into_iter().step_by(5) {
        let c = CliffordGate::from_affine(&q, aff).unwrap();
        assert!(reverse_form(&c).unwrap().to_matrix(&q).unwrap().same_phase_class(&c.matrix));
    }
}

#[test]
fn conjugacy_examples() {
    let q = Qudit::new(3, 1).unwrap();
    let w = clifford_conjugate_test(&shift(&q), &clock(&q), Execution::default()).unwrap().unwrap();
    // some C with C Z C† ∝ X: S sends (1,0) to (0,1)
    assert_eq!(w.s.apply(crate::pauli::PhasePoint { p: 1, q: 0 }), crate::pauli::PhasePoint { p: 0, q: 1 });
    let e = e_gate(&q);
    let same = clifford_conjugate_test(&e, &e, Execution::Sequential).unwrap().unwrap();
    assert_eq!(same, AffineSymplectic::identity(3));
    let z = clock(&q);
    for c in 0..3 {
        let target = ScaledMatrix::conjugate_by(&z.pow(c), &e).unwrap().scale_entries(&q.omega(c as i64));
        let w = clifford_conjugate_test(&target, &e, Execution::Parallel).unwrap().unwrap();
        let cm = CliffordGate::from_affine(&q, w).unwrap().matrix;
        assert!(ScaledMatrix::conjugate_by(&cm, &e).unwrap().same_phase_class(&target));
    }
    let t = ScaledMatrix::diagonal(&q, vec![q.one(), q.one(), q.omega(1)]);
    assert_eq!(clifford_conjugate_test(&t, &e, Execution::default()).unwrap(), None);
}
