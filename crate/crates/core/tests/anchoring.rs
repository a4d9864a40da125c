mod common;

use proptest::prelude::*;

use common::*;
use oa_kit::anchor::{
    anchor_annotation, make_text_position, make_text_quote, parse_media_fragment, resolve_text_position,
    resolve_text_quote, AnchorError, AnchorOutcome, DocumentSet, MediaFragment, TextDocument,
};
use oa_kit::model::{Iri, NodeId};
use oa_kit::specifiers::TextQuoteSelector;

fn quote_id() -> NodeId {
    NodeId::blank("q").unwrap()
}

fn span_in(len: usize, a: usize, b: usize) -> (usize, usize) {
    let start = a % len;
    (start, start + 1 + b % (len - start).min(30))
}

fn docs_strategy() -> impl Strategy<Value = String> {
    prop_oneof![
        "[ab ]{1,200}",
        ("[ab🦀é ]{1,4}", 1..60usize).prop_map(|(u, n)| u.repeat(n)),
        "[a-z \n]{1,300}",
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(600))]

    #[test]
    fn quote_resolution_matches_the_scan_oracle(text in docs_strategy(), a in any::<usize>(), b in any::<usize>(), ctx in 0..40usize) {
        let d = doc(&text);
        let (start, end) = span_in(d.len(), a, b);
        let sel = make_text_quote(quote_id(), &d, start, end, ctx).unwrap();
        let prefix = sel.prefix.clone().unwrap_or_default();
        let suffix = sel.suffix.clone().unwrap_or_default();
        let chars: Vec<char> = text.chars().collect();
        let hits = context_occurrences(&chars, &prefix, &sel.exact, &suffix);
        prop_assert!(hits >= 1);
        match resolve_text_quote(&d, &sel) {
            Ok(r) => {
                prop_assert_eq!(hits, 1);
                prop_assert_eq!((r.start, r.end), (start, end));
                prop_assert_eq!(r.text, sel.exact);
            }
            Err(AnchorError::AmbiguousMatch { offsets, .. }) => {
                prop_assert!(hits > 1);
                prop_assert!(offsets.contains(&start));
                prop_assert_eq!(offsets.len(), hits);
            }
            Err(e) => prop_assert!(false, "{}", e),
        }
    }

    #[test]
    fn position_round_trip(text in "[a-zé🦀\n ]{1,100}", a in any::<usize>(), b in any::<usize>()) {
        let d = doc(&text);
        let (start, end) = span_in(d.len(), a, b);
        let sel = make_text_position(quote_id(), &d, start, end).unwrap();
        let r = resolve_text_position(&d, &sel).unwrap();
        let expected: String = text.chars().skip(start).take(end - start).collect();
        prop_assert_eq!(r.text, expected);
    }

    #[test]
    fn quotes_not_in_the_document_are_not_found(text in "[ab]{0,50}", needle in "[cd]{1,5}") {
        let sel = TextQuoteSelector { id: quote_id(), exact: needle.clone(), prefix: None, suffix: None };
        prop_assert_eq!(resolve_text_quote(&doc(&text), &sel), Err(AnchorError::NotFound { exact: needle }));
    }
}

#[test]
fn offsets_are_code_points() {
    let d = doc("🦀 crab and 🦀 crab");
    let sel = TextQuoteSelector { id: quote_id(), exact: "crab".into(), prefix: None, suffix: Some(" and".into()) };
    let r = resolve_text_quote(&d, &sel).unwrap();
    assert_eq!((r.start, r.end), (2, 6));
}

#[test]
fn context_breaks_ties_and_partial_context_counts() {
    let d = doc("x one y / z one y / x one w");
    let quote = |prefix: Option<&str>, suffix: Option<&str>| TextQuoteSelector {
        id: quote_id(),
        exact: "one".into(),
        prefix: prefix.map(Into::into),
        suffix: suffix.map(Into::into),
    };
    assert_eq!(resolve_text_quote(&d, &quote(Some("x "), Some(" y"))).unwrap().start, 2);
    assert_eq!(
        resolve_text_quote(&d, &quote(Some("x "), None)),
        Err(AnchorError::AmbiguousMatch { exact: "one".into(), offsets: vec![2, 22] })
    );
    // Matching one side beats matching neither.
    assert_eq!(resolve_text_quote(&d, &quote(Some("z "), Some(" q"))).unwrap().start, 12);
}

#[test]
fn position_errors() {
    let d = doc("abc");
    let pos = |start, end| oa_kit::specifiers::TextPositionSelector { id: quote_id(), start, end };
    assert_eq!(resolve_text_position(&d, &pos(2, 4)), Err(AnchorError::OutOfRange { start: 2, end: 4, len: 3 }));
    assert_eq!(resolve_text_position(&d, &pos(2, 1)), Err(AnchorError::InvertedSpan { start: 2, end: 1 }));
    assert_eq!(resolve_text_position(&d, &pos(3, 3)).unwrap().text, "");
}

#[test]
fn fixture_documents() {
    let text = read_fixture("anchor/doc.txt");
    let mut docs = DocumentSet::new();
    docs.insert(TextDocument::new(Iri::new("urn:x:d").unwrap(), &text));

    let ambiguous = &annotations_of("anchor/ambiguous.ttl")[0];
    let found = anchor_annotation(ambiguous, &docs);
    assert_eq!(found.len(), 1);
    assert_eq!(
        found[0].outcome,
        AnchorOutcome::Failed(AnchorError::AmbiguousMatch { exact: "Open annotation".into(), offsets: vec![0, 47] })
    );

    let unique = &annotations_of("anchor/unique.ttl")[0];
    let found = anchor_annotation(unique, &docs);
    assert!(found.iter().all(|f| !f.failed()), "{found:?}");
    let spans: Vec<(usize, usize)> = found
        .iter()
        .filter_map(|f| match &f.outcome {
            AnchorOutcome::Span(r) => Some((r.start, r.end)),
            _ => None,
        })
        .collect();
    assert!(spans.contains(&(47, 62)), "{spans:?}");
    assert!(spans.contains(&(5, 15)), "{spans:?}");
}

#[test]
fn media_fragments() {
    let cases = [
        ("xywh=1,1,5,5", MediaFragment::SpatialPx { x: 1, y: 1, w: 5, h: 5 }),
        ("xywh=percent:0,0,100,50", MediaFragment::SpatialPercent { x: 0.0, y: 0.0, w: 100.0, h: 50.0 }),
        ("t=,20", MediaFragment::Time { start: 0.0, end: Some(20.0) }),
        ("t=npt:01:00,01:30.5", MediaFragment::Time { start: 60.0, end: Some(90.5) }),
    ];
    for (value, want) in cases {
        assert_eq!(parse_media_fragment(value), Ok(want), "{value}");
    }
    assert_eq!(parse_media_fragment("id=chapter1"), Err(AnchorError::UnsupportedDimension { dimension: "id".into() }));
    assert!(matches!(parse_media_fragment("xywh=1,1,5"), Err(AnchorError::MalformedFragment { .. })));
}
