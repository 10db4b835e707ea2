use qudit_hierarchy::exec::Execution;
use qudit_hierarchy::verify::*;

#[test]
fn suite_is_green_and_deterministic() {
    let a = run_suite(3, 7, Execution::default());
    assert!(a.iter().all(|r| r.passed || r.informational), "{a:#?}");
    let b = run_suite(3, 7, Execution::Sequential);
    assert_eq!(serde_json::to_string(&a).unwrap(), serde_json::to_string(&b).unwrap());
}

#[test]
fn qubit_suite_is_green() {
    let r = run_suite(2, 1, Execution::default());
    assert!(r.iter().all(|r| r.passed || r.informational), "{r:#?}");
    assert!(r.iter().any(|r| r.informational));
}
