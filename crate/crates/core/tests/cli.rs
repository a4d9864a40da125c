mod common;

use std::process::{Command, Output};

use common::*;
use serde_json::Value;

fn oa_kit(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_oa-kit")).args(args).output().expect("binary runs")
}

fn path(rel: &str) -> String {
    fixture(rel).display().to_string()
}

fn report(out: &Output) -> Value {
    let v: Value = serde_json::from_slice(&out.stdout)
        .unwrap_or_else(|e| panic!("stdout is not JSON ({e}): {}", String::from_utf8_lossy(&out.stdout)));
    assert_eq!(v["schema"], "oa-kit/1");
    v
}

#[test]
fn validate_worked_example() {
    let out = oa_kit(&["validate", &path("turtle/worked-example.ttl")]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let v = report(&out);
    assert_eq!(v["command"], "validate");
    assert_eq!(v["status"], "ok");
    assert_eq!(v["errors"], 0);
    assert_eq!(v["annotations"], 1);
}

#[test]
fn validate_reports_errors_with_exit_2() {
    let out = oa_kit(&["validate", &path("validator/position-order.ttl")]);
    assert_eq!(out.status.code(), Some(2));
    let v = report(&out);
    assert_eq!(v["status"], "errors");
    assert_eq!(v["findings"][0]["code"], "position-order");
    assert_eq!(v["findings"][0]["annotation"], "<urn:x:a>");
}

#[test]
fn warnings_alone_exit_0() {
    let out = oa_kit(&["validate", &path("validator/unknown-motivation.ttl")]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(report(&out)["warnings"], 1);
}

#[test]
fn custom_motivation_registry() {
    let dir = tempfile::tempdir().unwrap();
    let registry = dir.path().join("motivations.txt");
    let anns = annotations_of("validator/unknown-motivation.ttl");
    std::fs::write(&registry, format!("{}\n", anns[0].motivations[0])).unwrap();
    let out = oa_kit(&["validate", &path("validator/unknown-motivation.ttl"), "--motivations", &registry.display().to_string()]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(report(&out)["warnings"], 0);
}

#[test]
fn parse_errors_exit_4() {
    let out = oa_kit(&["validate", &path("malformed/missing-dot.ttl")]);
    assert_eq!(out.status.code(), Some(4));
    assert!(out.stdout.is_empty());
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 5, column 1"));
    assert_eq!(oa_kit(&["tags", "/no/such/file.ttl"]).status.code(), Some(4));
}

#[test]
fn usage_errors_exit_1() {
    assert_eq!(oa_kit(&[]).status.code(), Some(1));
    assert_eq!(oa_kit(&["validate"]).status.code(), Some(1));
    assert_eq!(oa_kit(&["fragment", "split", "a#b", "--conforms-to", "x:y", "--media-type", "image/png"]).status.code(), Some(1));
    let help = oa_kit(&["--help"]);
    assert_eq!(help.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&help.stdout).contains("anchor"));
}

#[test]
fn fragment_join_and_split() {
    let out = oa_kit(&["fragment", "join", "target1", "xywh=1,1,5,5"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(out.stdout, b"target1#xywh=1,1,5,5\n");
    let out = oa_kit(&["fragment", "split", "target1#xywh=1,1,5,5"]);
    assert_eq!(out.stdout, b"target1\nxywh=1,1,5,5\n");
    let out = oa_kit(&["fragment", "split", "doc.txt#char=0,4", "--media-type", "text/plain"]);
    assert_eq!(String::from_utf8_lossy(&out.stdout), "doc.txt\nchar=0,4\nhttp://tools.ietf.org/rfc/rfc5147\n");
    assert_eq!(oa_kit(&["fragment", "join", "a#b", "c"]).status.code(), Some(2));
    assert_eq!(oa_kit(&["fragment", "join", "target1", "#c"]).status.code(), Some(2));
}

#[test]
fn ambiguous_anchor_exits_3() {
    let binding = format!("urn:x:d={}", path("anchor/doc.txt"));
    let out = oa_kit(&["anchor", &path("anchor/ambiguous.ttl"), "--doc", &binding]);
    assert_eq!(out.status.code(), Some(3));
    let v = report(&out);
    assert_eq!(v["failures"], 1);
    let f = &v["findings"][0];
    assert_eq!(f["outcome"], "failed");
    assert_eq!(f["error"], "ambiguous-match");
    assert_eq!(f["offsets"], serde_json::json!([0, 47]));
}

#[test]
fn unique_anchor_exits_0() {
    let binding = format!("urn:x:d={}", path("anchor/doc.txt"));
    let out = oa_kit(&["anchor", &path("anchor/unique.ttl"), "--doc", &binding]);
    assert_eq!(out.status.code(), Some(0));
    let v = report(&out);
    assert_eq!(v["anchored"], 2);
    assert_eq!(v["findings"][0]["start"], 47);
    assert_eq!(v["findings"][0]["text"], "Open annotation");
    assert_eq!(v["findings"][1]["text"], "annotation");
}

#[test]
fn missing_document_is_an_anchoring_failure() {
    let out = oa_kit(&["anchor", &path("anchor/unique.ttl")]);
    assert_eq!(out.status.code(), Some(3));
    assert_eq!(report(&out)["findings"][0]["error"], "no-document");
}

#[test]
fn expand_modes() {
    let file = path("turtle/multiplicity.ttl");
    let v = report(&oa_kit(&["expand", &file]));
    assert_eq!(v["mode"], "default");
    let first = &v["annotations"][0]["interpretations"];
    assert_eq!(first.as_array().unwrap().len(), 1);
    assert_eq!(first[0]["bodies"], serde_json::json!(["<http://ex.org/body1>"]));
    assert_eq!(first[0]["target_set"], "<http://ex.org/comp1>");
    let v = report(&oa_kit(&["expand", &file, "--all-alternatives"]));
    assert_eq!(v["annotations"][0]["interpretations"].as_array().unwrap().len(), 2);
    assert_eq!(v["annotations"][1]["interpretations"][0]["targets"].as_array().unwrap().len(), 3);
}

#[test]
fn tags_are_counted() {
    let out = oa_kit(&["tags", &path("turtle/tagging.ttl")]);
    assert_eq!(out.status.code(), Some(0));
    let v = report(&out);
    assert_eq!(v["annotations"], 2);
    assert_eq!(v["textual"], serde_json::json!({ "physics": 1 }));
    assert_eq!(v["semantic"], serde_json::json!({ "<http://dbpedia.org/resource/Particle_physics>": 1 }));
    assert_eq!(v["other_bodies"], 0);
}

#[test]
fn convert_annotea_to_file() {
    let dir = tempfile::tempdir().unwrap();
    let target = dir.path().join("out.ttl");
    let out = oa_kit(&["convert", "annotea", &path("annotea/all-properties.ttl"), "-o", &target.display().to_string()]);
    assert_eq!(out.status.code(), Some(0));
    let v = report(&out);
    assert_eq!(v["annotations"], 1);
    assert_eq!(v["notes"][0]["kind"], "context-needs-review");
    let written = std::fs::read_to_string(&target).unwrap();
    let check = oa_kit(&["validate", &target.display().to_string()]);
    assert_eq!(check.status.code(), Some(0), "{written}");

    let inline = report(&oa_kit(&["convert", "annotea", &path("annotea/all-properties.ttl")]));
    assert_eq!(inline["turtle"].as_str().unwrap(), written);
}

#[test]
fn output_is_deterministic() {
    let runs: Vec<Vec<u8>> = (0..3)
        .map(|_| oa_kit(&["convert", "annotea", &path("annotea/external-body.ttl")]).stdout)
        .collect();
    assert!(runs.windows(2).all(|w| w[0] == w[1]));
    let a = oa_kit(&["validate", &path("turtle/worked-example.ttl")]).stdout;
    let b = oa_kit(&["validate", &path("turtle/worked-example.ttl")]).stdout;
    assert_eq!(a, b);
}
