use proptest::prelude::*;
use qudit_hierarchy::hierarchy::{semi_clifford_decompose, LevelTable};
use qudit_hierarchy::random::{random_state, rng};
use qudit_hierarchy::teleport::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn every_branch_teleports(i in 0u64..7128, seed in any::<u64>()) {
        let table = LevelTable::new(3, 4).unwrap();
        let (_, g) = table.entry(i);
        let parts = semi_clifford_decompose(&g).unwrap();
        let psi = random_state(table.qudit(), &mut rng(seed)).unwrap();
        prop_assert!(psi.norm_squared().is_one());
        let branches = run_protocol(&g, &parts, &psi, None).unwrap();
        prop_assert_eq!(branches.len(), 3);
        for b in &branches {
            prop_assert!(b.matched && b.uniform_probability);
            prop_assert_eq!(b.correction_power, b.outcome);
        }
    }
}

#[test]
fn branch_json_shape() {
    let table = LevelTable::new(3, 3).unwrap();
    let (_, g) = table.entry(500);
    let parts = semi_clifford_decompose(&g).unwrap();
    let psi = StateVector::basis(table.qudit(), 1);
    let b = &run_protocol(&g, &parts, &psi, Some(1)).unwrap()[0];
    let v: serde_json::Value = serde_json::to_value(b).unwrap();
    assert_eq!(v, serde_json::json!({"outcome": 1, "correction_power": 1, "matched": true}));
}
