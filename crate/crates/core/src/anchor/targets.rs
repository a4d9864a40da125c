use std::collections::BTreeMap;

use serde::Serialize;

use super::{
    parse_media_fragment, resolve_text_position, resolve_text_quote, AnchorError, AnchorMethod, AnchorResult,
    MediaFragment, TextDocument,
};
use crate::model::{Annotation, Iri, ResourceRef};
use crate::multiplicity::ConstructKind;
use crate::specifiers::{Selector, TextPositionSelector};
use crate::vocab::{MEDIA_FRAGMENTS_SPEC, RFC5147_SPEC};

/// Local documents keyed by the source IRI they stand in for.
#[derive(Debug, Clone, Default)]
pub struct DocumentSet {
    docs: BTreeMap<String, TextDocument>,
}

impl DocumentSet {
    pub fn new() -> Self {
        Self::default()
    }

    /// Replaces any document already bound to the same IRI.
    pub fn insert(&mut self, doc: TextDocument) {
        self.docs.insert(doc.id().as_str().to_owned(), doc);
    }

    pub fn get(&self, source: &Iri) -> Option<&TextDocument> {
        self.docs.get(source.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "outcome", rename_all = "lowercase")]
pub enum AnchorOutcome {
    Span(AnchorResult),
    Region(MediaFragment),
    /// The selector kind has no anchoring here (SVG, unknown classes).
    Skipped { reason: String },
    Failed(AnchorError),
}

/// One selector of one annotation, and what it resolved to.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Anchored {
    pub path: String,
    pub source: String,
    pub selector: String,
    #[serde(flatten)]
    pub outcome: AnchorOutcome,
}

impl Anchored {
    pub fn failed(&self) -> bool {
        matches!(self.outcome, AnchorOutcome::Failed(_))
    }
}

/// Anchors every selector reachable from the annotation's bodies and
/// targets, in document order. All branches of a resource Choice are
/// tried; a selector Choice resolves to its first item that anchors.
pub fn anchor_annotation(annotation: &Annotation, docs: &DocumentSet) -> Vec<Anchored> {
    let mut out = Vec::new();
    for (i, body) in annotation.bodies.iter().enumerate() {
        walk_resource(body, &format!("annotation.bodies[{i}]"), docs, &mut out);
    }
    for (i, target) in annotation.targets.iter().enumerate() {
        walk_resource(target, &format!("annotation.targets[{i}]"), docs, &mut out);
    }
    out
}

fn walk_resource(r: &ResourceRef, path: &str, docs: &DocumentSet, out: &mut Vec<Anchored>) {
    match r {
        ResourceRef::Specific(sr) => {
            if let Some(selector) = &sr.selector {
                walk_selector(&sr.source, selector, &format!("{path}.selector"), docs, out);
            }
        }
        ResourceRef::Construct(c) => {
            for (i, item) in c.items.iter().enumerate() {
                walk_resource(item, &format!("{path}.items[{i}]"), docs, out);
            }
        }
        ResourceRef::External(_) | ResourceRef::EmbeddedText(_) => {}
    }
}

fn walk_selector(source: &Iri, selector: &Selector, path: &str, docs: &DocumentSet, out: &mut Vec<Anchored>) {
    let record = |path: &str, selector: &Selector, outcome| Anchored {
        path: path.to_owned(),
        source: source.to_string(),
        selector: selector.id().to_string(),
        outcome,
    };
    match selector {
        Selector::Construct(c) if c.kind == ConstructKind::Choice => {
            let mut first_failure = None;
            for (i, item) in c.items.iter().enumerate() {
                match anchor_leaf(source, item, docs) {
                    AnchorOutcome::Failed(e) => {
                        first_failure.get_or_insert((i, item, e));
                    }
                    AnchorOutcome::Skipped { .. } => {}
                    outcome => {
                        out.push(record(&format!("{path}.items[{i}]"), item, outcome));
                        return;
                    }
                }
            }
            let outcome = match first_failure {
                Some((i, item, e)) => record(&format!("{path}.items[{i}]"), item, AnchorOutcome::Failed(e)),
                None => record(path, selector, AnchorOutcome::Skipped { reason: "no branch can be anchored".into() }),
            };
            out.push(outcome);
        }
        Selector::Construct(c) => {
            for (i, item) in c.items.iter().enumerate() {
                walk_selector(source, item, &format!("{path}.items[{i}]"), docs, out);
            }
        }
        leaf => out.push(record(path, leaf, anchor_leaf(source, leaf, docs))),
    }
}

fn anchor_leaf(source: &Iri, selector: &Selector, docs: &DocumentSet) -> AnchorOutcome {
    let doc = || docs.get(source).ok_or_else(|| AnchorError::NoDocument { document: source.to_string() });
    let outcome = match selector {
        Selector::TextPosition(p) => doc().and_then(|d| resolve_text_position(d, p)).map(AnchorOutcome::Span),
        Selector::TextQuote(q) => doc().and_then(|d| resolve_text_quote(d, q)).map(AnchorOutcome::Span),
        Selector::Fragment(f) => {
            let value = &f.fragment.value;
            match f.fragment.conforms_to.as_ref().map(Iri::as_str) {
                Some(RFC5147_SPEC) => {
                    doc().and_then(|d| text_fragment(d, value, selector)).map(AnchorOutcome::Span)
                }
                Some(MEDIA_FRAGMENTS_SPEC) => parse_media_fragment(value).map(AnchorOutcome::Region),
                None if value.starts_with("xywh=") || value.starts_with("t=") => {
                    parse_media_fragment(value).map(AnchorOutcome::Region)
                }
                _ => Ok(AnchorOutcome::Skipped { reason: format!("fragment {value:?} has no known syntax") }),
            }
        }
        Selector::Svg(_) => Ok(AnchorOutcome::Skipped { reason: "SVG geometry is not evaluated".into() }),
        Selector::Opaque(_) => Ok(AnchorOutcome::Skipped { reason: "unknown selector class".into() }),
        Selector::Construct(_) => Ok(AnchorOutcome::Skipped { reason: "nested selector construct".into() }),
    };
    outcome.unwrap_or_else(AnchorOutcome::Failed)
}

/// Plain-text fragments of the form `char=start,end` (code points).
fn text_fragment(doc: &TextDocument, value: &str, selector: &Selector) -> Result<AnchorResult, AnchorError> {
    let malformed = || AnchorError::MalformedFragment { value: value.to_owned(), reason: "expected char=start,end".into() };
    let (start, end) = value
        .strip_prefix("char=")
        .and_then(|span| span.split_once(','))
        .ok_or_else(malformed)?;
    let start: usize = start.parse().map_err(|_| malformed())?;
    let end: usize = end.parse().map_err(|_| malformed())?;
    let pos = TextPositionSelector { id: selector.id().clone(), start, end };
    let mut result = resolve_text_position(doc, &pos)?;
    result.method = AnchorMethod::Position;
    Ok(result)
}
