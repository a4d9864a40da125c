mod common;

use proptest::prelude::*;

use common::*;
use oa_kit::model::{validate, Annotation, EmbeddedText, ExternalResource, Iri, NodeId, ResourceRef, StyleRef};
use oa_kit::multiplicity::{Construct, ConstructKind};
use oa_kit::rdf::{annotation_roots, isomorphic, lift, lower, lower_all, parse_turtle, serialize_turtle};
use oa_kit::specifiers::{
    Fragment, FragmentSelector, Selector, SpecificResource, State, TextPositionSelector, TextQuoteSelector, TimeState,
};
use oa_kit::vocab::{dctypes, oa, MEDIA_FRAGMENTS_SPEC};

#[test]
fn fixtures_survive_lift_and_lower() {
    for path in fixtures_in("turtle", "ttl") {
        let name = path.file_name().unwrap().to_string_lossy().into_owned();
        let graph = parse_turtle(&std::fs::read_to_string(&path).unwrap()).unwrap();
        let roots = annotation_roots(&graph);
        if roots.is_empty() {
            continue;
        }
        let anns: Vec<Annotation> = roots.iter().map(|r| lift(&graph, r).unwrap()).collect();
        let lowered = lower_all(&anns);
        assert!(isomorphic(&graph, &lowered), "{name}: lowering the lifted model changes the graph");
    }
}

#[test]
fn worked_example_details() {
    let a = &annotations_of("turtle/worked-example.ttl")[0];
    assert_eq!(a.id.to_string(), "<http://openannotation.org/eg/anno1>");
    assert_eq!(a.styled_by, Some(StyleRef::ExternalCss(Iri::new("http://openannotation.org/eg/style1.css").unwrap())));
    let ResourceRef::Construct(comp) = &a.targets[0] else { panic!("composite target") };
    let selectors: Vec<&Selector> = comp
        .items
        .iter()
        .map(|i| match i {
            ResourceRef::Specific(sr) => sr.selector.as_ref().unwrap(),
            other => panic!("{other:?}"),
        })
        .collect();
    assert!(matches!(selectors[0], Selector::TextQuote(q) if q.exact == "The effort will start by working"));
    assert!(matches!(selectors[1], Selector::TextPosition(p) if (p.start, p.end) == (488, 525)));
    // The source's own description is not part of the typed model.
    assert!(a.extensions.iter().any(|t| t.subject.to_string() == "<http://w3.org/community/openannotation/>"));
}

#[test]
fn serialized_turtle_is_deterministic() {
    let anns = annotations_of("turtle/worked-example.ttl");
    let first = serialize_turtle(&lower_all(&anns));
    let again = serialize_turtle(&lower_all(&annotations_of("turtle/worked-example.ttl")));
    assert_eq!(first, again);
    let reparsed = parse_turtle(&first).unwrap();
    let roots = annotation_roots(&reparsed);
    assert_eq!(lift(&reparsed, &roots[0]).unwrap(), anns[0]);
}

// ---- generated annotations ------------------------------------------------

#[derive(Debug, Clone)]
enum SelectorSpec {
    Fragment(String, bool),
    Position(usize, usize),
    Quote(String, Option<String>, Option<String>),
}

#[derive(Debug, Clone)]
enum LeafSpec {
    External(Option<String>),
    Text(String, bool),
    Specific { selector: Option<SelectorSpec>, when: Option<String>, class: Option<String> },
}

#[derive(Debug, Clone)]
enum SlotSpec {
    Leaf(LeafSpec),
    Construct(ConstructKind, Vec<LeafSpec>),
}

fn text() -> impl Strategy<Value = String> {
    "[a-zA-Z0-9 \"\\\\\n\té🦀]{1,20}"
}

fn selector_spec() -> impl Strategy<Value = SelectorSpec> {
    prop_oneof![
        ("(xywh|t|char)=[0-9,]{1,8}", any::<bool>()).prop_map(|(v, c)| SelectorSpec::Fragment(v, c)),
        (0..1000usize, 0..50usize).prop_map(|(s, n)| SelectorSpec::Position(s, s + n)),
        (text(), proptest::option::of(text()), proptest::option::of(text()))
            .prop_map(|(e, p, s)| SelectorSpec::Quote(e, p, s)),
    ]
}

fn leaf_spec() -> impl Strategy<Value = LeafSpec> {
    prop_oneof![
        proptest::option::of("(text/plain|image/png|text/html)").prop_map(LeafSpec::External),
        (text(), any::<bool>()).prop_map(|(t, f)| LeafSpec::Text(t, f)),
        (
            proptest::option::of(selector_spec()),
            proptest::option::of("20[0-9]{2}-0[1-9]-1[0-9]T1[0-9]:00:00Z"),
            proptest::option::of("[a-z][a-z0-9-]{0,6}"),
        )
            .prop_map(|(selector, when, class)| LeafSpec::Specific { selector, when, class }),
    ]
}

fn slot_spec() -> impl Strategy<Value = SlotSpec> {
    prop_oneof![
        3 => leaf_spec().prop_map(SlotSpec::Leaf),
        1 => (
            prop_oneof![Just(ConstructKind::Choice), Just(ConstructKind::Composite), Just(ConstructKind::List)],
            proptest::collection::vec(leaf_spec(), 1..4),
        )
            .prop_map(|(k, items)| SlotSpec::Construct(k, items)),
    ]
}

struct Builder {
    n: usize,
}

impl Builder {
    fn id(&mut self, blank: bool) -> NodeId {
        self.n += 1;
        if blank {
            NodeId::blank(format!("n{}", self.n)).unwrap()
        } else {
            NodeId::iri(format!("http://ex.org/n{}", self.n)).unwrap()
        }
    }

    fn iri(&mut self) -> Iri {
        self.n += 1;
        Iri::new(format!("http://ex.org/r{}", self.n)).unwrap()
    }

    fn selector(&mut self, spec: &SelectorSpec) -> Selector {
        let id = self.id(true);
        match spec.clone() {
            SelectorSpec::Fragment(value, conforms) => {
                let mut fragment = Fragment::new(value);
                if conforms {
                    fragment = fragment.conforming_to(Iri::new(MEDIA_FRAGMENTS_SPEC).unwrap());
                }
                FragmentSelector { id, fragment }.into()
            }
            SelectorSpec::Position(start, end) => TextPositionSelector { id, start, end }.into(),
            SelectorSpec::Quote(exact, prefix, suffix) => TextQuoteSelector { id, exact, prefix, suffix }.into(),
        }
    }

    fn leaf(&mut self, spec: &LeafSpec) -> ResourceRef {
        match spec {
            LeafSpec::External(format) => {
                let mut r = ExternalResource::new(self.iri());
                if let Some(f) = format {
                    r = r.with_format(f.clone()).with_class(Iri::new(dctypes::TEXT).unwrap());
                }
                r.into()
            }
            LeafSpec::Text(chars, with_format) => {
                let mut t = EmbeddedText::new(self.id(true), chars.clone());
                if *with_format {
                    t = t.with_format("text/plain");
                }
                t.into()
            }
            LeafSpec::Specific { selector, when, class } => {
                let mut sr = SpecificResource::new(self.id(self.n.is_multiple_of(2)), self.iri());
                if let Some(s) = selector {
                    sr = sr.with_selector(self.selector(s));
                }
                if let Some(w) = when {
                    sr = sr.with_state(State::Time(TimeState {
                        id: self.id(true),
                        when: Some(w.clone()),
                        cached_copies: vec![self.iri()],
                    }));
                }
                if let Some(c) = class {
                    sr = sr.with_style_class(c.clone());
                }
                sr.into()
            }
        }
    }

    fn slot(&mut self, spec: &SlotSpec) -> ResourceRef {
        match spec {
            SlotSpec::Leaf(l) => self.leaf(l),
            SlotSpec::Construct(kind, items) => {
                let id = self.id(self.n.is_multiple_of(3));
                let items = items.iter().map(|i| self.leaf(i)).collect();
                Construct::new(id, *kind, items).into()
            }
        }
    }
}

fn annotation() -> impl Strategy<Value = Annotation> {
    (
        proptest::sample::subsequence(vec!["http://www.w3.org/ns/oa#commenting", oa::TAGGING, oa::EDITING, "http://www.w3.org/ns/oa#describing"], 0..3),
        proptest::collection::vec(slot_spec(), 0..3),
        proptest::collection::vec(slot_spec(), 1..3),
        any::<bool>(),
        proptest::option::of("20[0-9]{2}-0[1-9]-2[0-9]T0[0-9]:30:00Z"),
        proptest::option::of(text()),
    )
        .prop_map(|(motivations, bodies, targets, by, at, css)| {
            let mut b = Builder { n: 0 };
            let mut a = Annotation::new(b.id(false));
            a.motivations = motivations.into_iter().map(|m| Iri::new(m).unwrap()).collect();
            a.bodies = bodies.iter().map(|s| b.slot(s)).collect();
            a.targets = targets.iter().map(|s| b.slot(s)).collect();
            if by {
                a.annotated_by = Some(b.iri());
            }
            a.annotated_at = at;
            a.styled_by = css.map(|chars| StyleRef::EmbeddedCss { id: b.id(true), chars });
            a
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn lift_inverts_lower(a in annotation()) {
        let graph = lower(&a);
        let roots = annotation_roots(&graph);
        prop_assert_eq!(roots.len(), 1);
        prop_assert_eq!(lift(&graph, &roots[0]).unwrap(), a);
    }

    #[test]
    fn turtle_round_trip_preserves_the_model(a in annotation()) {
        let text = serialize_turtle(&lower(&a));
        let graph = parse_turtle(&text).unwrap();
        prop_assert!(isomorphic(&graph, &lower(&a)), "{}", text);
        let roots = annotation_roots(&graph);
        let lifted = lift(&graph, &roots[0]).unwrap();
        // Blank labels may change through Turtle; the graphs must not.
        prop_assert!(isomorphic(&lower(&lifted), &lower(&a)));
    }

    #[test]
    fn generated_annotations_have_no_structural_errors(a in annotation()) {
        let report = validate(&a);
        let structural: Vec<_> = report
            .codes()
            .into_iter()
            .filter(|c| matches!(*c, "conflicting-node" | "missing-target" | "empty-construct"))
            .collect();
        prop_assert!(structural.is_empty(), "{:?}", structural);
    }
}
