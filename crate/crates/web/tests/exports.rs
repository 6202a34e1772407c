use jwverma_web::{classical_projector, projector_block, run_checks};
use serde_json::Value;

fn parse(s: String) -> Value {
    serde_json::from_str(&s).unwrap()
}

#[test]
fn degree_one_block_has_unit_trace() {
    let v = parse(projector_block("mu1,mu2", 1, ""));
    assert_eq!(v["idempotent"], true);
    let block = &v["blocks"][0];
    assert_eq!(
        block["basis"],
        serde_json::json!(["v0 (x) v1", "v1 (x) v0"])
    );
    assert_eq!(block["trace"], "1");
    assert_eq!(v["legend"][1], "t2 = q^mu2");
}

#[test]
fn specialized_block() {
    let v = parse(projector_block("a,b,c", 2, "a=-1,c=-2"));
    assert_eq!(v["idempotent"], true);
    assert_eq!(v["blocks"][0]["rows"].as_array().unwrap().len(), 6);
    assert_eq!(v["blocks"][0]["trace"], "1");
}

#[test]
fn bad_input_reports_errors() {
    for s in [
        projector_block("mu1", 1, ""),
        projector_block("a,a", 1, ""),
        projector_block("a,b", 99, ""),
        projector_block("a,b", 1, "c=1"),
        projector_block("a,b", 1, "a=x"),
        classical_projector(0),
        classical_projector(9),
        run_checks("a", 2),
    ] {
        assert!(parse(s)["error"].is_string());
    }
    // [a + b - 1] vanishes at degree 2.
    let v = parse(projector_block("a,b", 2, "a=2,b=-1"));
    assert!(v["error"].as_str().unwrap().contains("pole"));
}

#[test]
fn classical_projector_blocks() {
    let v = parse(classical_projector(3));
    assert_eq!(v["idempotent"], true);
    assert_eq!(v["blocks"].as_array().unwrap().len(), 4);
    assert_eq!(v["provenance"][0], "P_3 = P_2 + [2]/[3] P_2 e_2 P_2");
}

#[test]
fn checks_all_pass() {
    let v = parse(run_checks("x,y,z", 3));
    let lines = v.as_array().unwrap();
    assert_eq!(lines.len(), 6);
    for l in lines {
        assert_eq!(l["passed"], true, "{l}");
    }
}
