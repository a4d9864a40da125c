mod common;

use common::*;
use oa_kit::model::{validate, validate_with, Iri, MotivationRegistry, Motivation, Severity};
use oa_kit::vocab::oa;

const WARNINGS: [&str; 2] = ["unstyled-class", "unknown-motivation"];

#[test]
fn each_fixture_triggers_exactly_its_code() {
    let fixtures = fixtures_in("validator", "ttl");
    assert_eq!(fixtures.len(), 15);
    for path in fixtures {
        let code = path.file_stem().unwrap().to_string_lossy().into_owned();
        let header = std::fs::read_to_string(&path).unwrap();
        assert!(header.starts_with(&format!("# Triggers exactly one finding: {code}")), "{code}: header");
        let anns = annotations_of(&format!("validator/{code}.ttl"));
        let report = validate(&anns[0]);
        assert_eq!(report.codes(), vec![code.as_str()], "{code}: {:?}", report.entries);
        let severity = report.entries[0].severity;
        let want = if WARNINGS.contains(&code.as_str()) { Severity::Warning } else { Severity::Error };
        assert_eq!(severity, want, "{code}");
        assert_eq!(report.is_valid(), want == Severity::Warning, "{code}");
    }
}

#[test]
fn clean_fixtures_have_no_errors() {
    for path in fixtures_in("turtle", "ttl") {
        let rel = format!("turtle/{}", path.file_name().unwrap().to_string_lossy());
        for a in annotations_of(&rel) {
            let report = validate(&a);
            assert_eq!(report.error_count(), 0, "{rel}: {:?}", report.entries);
        }
    }
}

#[test]
fn worked_example_is_clean() {
    let report = validate(&annotations_of("turtle/worked-example.ttl")[0]);
    assert!(report.is_valid());
    assert_eq!(report.error_count(), 0);
}

#[test]
fn custom_registry_changes_warnings() {
    let a = &annotations_of("validator/unknown-motivation.ttl")[0];
    let motivation = a.motivations[0].clone();
    let registry = MotivationRegistry::new(vec![
        Motivation::new(Iri::new(oa::EDITING).unwrap()),
        Motivation::new(motivation),
    ]);
    assert!(validate_with(a, &registry).entries.is_empty());
}

#[test]
fn findings_carry_paths_and_serialize() {
    let a = &annotations_of("validator/position-order.ttl")[0];
    let report = validate(a);
    let f = &report.entries[0];
    assert!(f.path.starts_with("annotation.targets[0]"), "{}", f.path);
    let json = serde_json::to_value(f).unwrap();
    assert_eq!(json["severity"], "error");
    assert_eq!(json["code"], "position-order");
}
