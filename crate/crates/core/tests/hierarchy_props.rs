use proptest::prelude::*;
use qudit_hierarchy::arith::Qudit;
use qudit_hierarchy::clifford::{AffineSymplectic, CliffordGate};
use qudit_hierarchy::diagonal::{build_diagonal, enumerate_rk};
use qudit_hierarchy::hierarchy::*;
use qudit_hierarchy::pauli::{line_through, pauli_decompose, shift, LineFit};

fn affine3() -> impl Strategy<Value = AffineSymplectic> {
    let all = AffineSymplectic::all(3);
    (0..all.len()).prop_map(move |i| all[i])
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn cliffords_preserve_levels(i in 0u64..1944, a in affine3(), b in affine3()) {
        let table = LevelTable::new(3, 3).unwrap();
        let q = table.qudit();
        let (_, g) = table.entry(i);
        let ca = CliffordGate::from_affine(q, a).unwrap().matrix;
        let cb = CliffordGate::from_affine(q, b).unwrap().matrix;
        prop_assert!(level_membership(&(&(&ca * &g) * &cb), 3).unwrap());
    }

    #[test]
    fn levels_nest(i in 0u64..216) {
        let lower = LevelTable::new(3, 2).unwrap();
        let upper = LevelTable::new(3, 3).unwrap();
        // keys depend on the field, so rebuild in the upper context
        let g = lower.certificate(i).gate(upper.qudit()).unwrap();
        let key = g.phase_key();
        let e = enumerate_level(3, 3, DEFAULT_BUDGET, false, Default::default()).unwrap();
        prop_assert!(e.certificates.binary_search_by(|c| c.key.cmp(&key)).is_ok());
        prop_assert!(level_membership(&g, 3).unwrap());
    }

    #[test]
    fn pair_supports_lie_on_parallel_lines(i in 0u64..7128) {
        let table = LevelTable::new(3, 4).unwrap();
        let (cert, g) = table.entry(i);
        let pair = conjugate_pair_of(&g).unwrap();
        let fu = line_through(&pauli_decompose(&pair.u).unwrap().support(), 3);
        let fv = line_through(&pauli_decompose(&pair.v).unwrap().support(), 3);
        match (fu, fv) {
            (LineFit::Underdetermined(_), LineFit::Underdetermined(_)) => prop_assert!(cert.form != FormKind::Mdc),
            (LineFit::Line(a), LineFit::Line(b)) => prop_assert!(a.is_parallel(&b)),
            (LineFit::Line(_), LineFit::Underdetermined(_)) | (LineFit::Underdetermined(_), LineFit::Line(_)) => {}
            other => prop_assert!(false, "supports not on lines: {:?}", other),
        }
    }

    #[test]
    fn reconstruct_round_trips(i in 0u64..7128) {
        let table = LevelTable::new(3, 4).unwrap();
        let (_, g) = table.entry(i);
        let pair = conjugate_pair_of(&g).unwrap();
        let back = reconstruct(&pair).unwrap();
        prop_assert!(back.same_phase_class(&g));
        let again = conjugate_pair_of(&back).unwrap();
        prop_assert!(again.u.same_value(&pair.u) && again.v.same_value(&pair.v));
    }

    #[test]
    fn normal_forms_rebuild(i in 0u64..7128) {
        let table = LevelTable::new(3, 4).unwrap();
        let (cert, g) = table.entry(i);
        let nf = mdc_normal_form(&g, 4).unwrap();
        prop_assert_eq!(nf.is_clifford(), cert.form == FormKind::Clifford);
        prop_assert!(nf.to_matrix(table.qudit()).unwrap().same_phase_class(&g));
    }
}

/// `G = D·X^q` exactly when the support of `G` sits on the line `q = q_0`.
#[test]
fn diagonal_times_shift_iff_horizontal_support() {
    let q = Qudit::new(3, 2).unwrap();
    let x = shift(&q);
    for phi in enumerate_rk(3, 4) {
        let d = build_diagonal(&q, &phi).unwrap().matrix;
        for q0 in 0..3u32 {
            let g = &d * &x.pow(q0 as u64);
            let sup = pauli_decompose(&g).unwrap().support();
            assert!(sup.iter().all(|pt| pt.q == q0));
        }
    }
    let table = LevelTable::new(3, 3).unwrap();
    for i in (0..table.len()).step_by(11) {
        let (_, g) = table.entry(i);
        let sup = pauli_decompose(&g).unwrap().support();
        let horizontal = sup.iter().all(|pt| pt.q == sup[0].q);
        let monomial_shift = g.monomial_pattern().map_or(false, |img| {
            let q0 = img[0];
            (0..3).all(|j| img[j] == (j + q0) % 3)
        });
        assert_eq!(horizontal, monomial_shift, "index {i}");
    }
}

#[test]
fn level_tables_match_formula() {
    for (d, k) in [(2u32, 3u32), (3, 1), (3, 2), (3, 3), (5, 2)] {
        let t = LevelTable::new(d, k).unwrap();
        assert_eq!(dashu_int::UBig::from(t.len()), count_level(d, k));
    }
}
