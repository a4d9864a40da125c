//! Conversion of legacy Annotea graphs.
//!
//! | Annotea      | Open Annotation                                  |
//! |--------------|--------------------------------------------------|
//! | a:annotates  | oa:hasTarget                                     |
//! | a:author     | oa:annotatedBy (IRIs only; literals are reported) |
//! | a:body       | oa:hasBody, embedded text or external resource   |
//! | a:context    | reported for review as a Specific Resource       |
//! | a:created    | oa:annotatedAt, unless a:modified is present     |
//! | a:modified   | oa:annotatedAt                                   |
//! | a:related    | oa:hasBody, external resource                    |
//!
//! Nothing is dropped silently: every triple that is not mapped ends up in
//! the [`ConversionReport`].

use std::collections::{BTreeMap, HashSet};

use serde::Serialize;
use thiserror::Error;

use crate::model::{Annotation, EmbeddedText, ExternalResource, NodeId, NodeMinter};
use crate::rdf::{Graph, Term, Triple};
use crate::vocab::{annotea, rdf};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AnnoteaError {
    #[error("no subject carries a:annotates")]
    NoAnnotations,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum NoteKind {
    /// a:context has no general mapping; a person should build the
    /// Specific Resource it describes.
    ContextNeedsReview,
    /// An a:created value lost to a:modified (or to a later value).
    DroppedTimestamp,
    /// a:modified is earlier than the a:created it replaced.
    ModifiedBeforeCreated,
    /// a:author given as a name rather than an IRI.
    LiteralAuthor,
    /// a:related given as a literal; only resources can be bodies.
    LiteralRelated,
    /// A triple that has no counterpart in the model.
    Unmapped,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConversionNote {
    pub kind: NoteKind,
    /// The Annotea record concerned, if any.
    pub annotation: Option<String>,
    /// The triple, N-Triples form.
    pub triple: String,
    pub message: String,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct ConversionReport {
    /// How many triples used each Annotea property, by local name.
    pub properties: BTreeMap<&'static str, usize>,
    pub notes: Vec<ConversionNote>,
}

impl ConversionReport {
    pub fn notes_of(&self, kind: NoteKind) -> impl Iterator<Item = &ConversionNote> {
        self.notes.iter().filter(move |n| n.kind == kind)
    }
}

const PROPERTIES: [(&str, &str); 7] = [
    (annotea::ANNOTATES, "annotates"),
    (annotea::AUTHOR, "author"),
    (annotea::BODY, "body"),
    (annotea::CONTEXT, "context"),
    (annotea::CREATED, "created"),
    (annotea::MODIFIED, "modified"),
    (annotea::RELATED, "related"),
];

/// Converts every subject carrying `a:annotates`, in graph order.
pub fn convert_annotea(graph: &Graph) -> Result<(Vec<Annotation>, ConversionReport), AnnoteaError> {
    let mut records: Vec<&NodeId> = Vec::new();
    for t in graph.iter() {
        if t.predicate.as_str() == annotea::ANNOTATES && !records.contains(&&t.subject) {
            records.push(&t.subject);
        }
    }
    if records.is_empty() {
        return Err(AnnoteaError::NoAnnotations);
    }

    let mut report = ConversionReport::default();
    for t in graph.iter() {
        if let Some((_, name)) = PROPERTIES.iter().find(|(p, _)| *p == t.predicate.as_str()) {
            *report.properties.entry(name).or_default() += 1;
        }
    }

    let mut minter = NodeMinter::avoiding(graph.blank_labels());
    let mut consumed: HashSet<&Triple> = HashSet::new();
    let mut annotations = Vec::with_capacity(records.len());
    for record in &records {
        let about: Vec<&Triple> = graph.triples_about(record).collect();
        let mut conv = RecordConverter { record, report: &mut report, consumed: &mut consumed, minter: &mut minter };
        annotations.push(conv.convert(&about));
    }

    for t in graph.iter().filter(|t| !consumed.contains(t)) {
        let owner = records.iter().find(|r| ***r == t.subject).map(|r| r.to_string());
        report.notes.push(ConversionNote {
            kind: NoteKind::Unmapped,
            annotation: owner,
            triple: t.to_string(),
            message: "no Open Annotation counterpart".into(),
        });
    }
    Ok((annotations, report))
}

struct RecordConverter<'a, 'g> {
    record: &'a NodeId,
    report: &'a mut ConversionReport,
    consumed: &'a mut HashSet<&'g Triple>,
    minter: &'a mut NodeMinter,
}

impl<'g> RecordConverter<'_, 'g> {
    fn note(&mut self, kind: NoteKind, triple: &Triple, message: impl Into<String>) {
        self.report.notes.push(ConversionNote {
            kind,
            annotation: Some(self.record.to_string()),
            triple: triple.to_string(),
            message: message.into(),
        });
    }

    fn convert(&mut self, about: &[&'g Triple]) -> Annotation {
        let mut annotation = Annotation::new(self.record.clone());
        let mut created: Vec<&'g Triple> = Vec::new();
        let mut modified: Vec<&'g Triple> = Vec::new();
        for &t in about {
            let mapped = match t.predicate.as_str() {
                rdf::TYPE => t.object.as_iri().is_some_and(|c| c.as_str() == annotea::ANNOTATION),
                annotea::ANNOTATES => match &t.object {
                    Term::Iri(target) => {
                        annotation.targets.push(ExternalResource::new(target.clone()).into());
                        true
                    }
                    _ => false,
                },
                annotea::AUTHOR => match &t.object {
                    Term::Iri(author) if annotation.annotated_by.is_none() => {
                        annotation.annotated_by = Some(author.clone());
                        true
                    }
                    Term::Literal(name) => {
                        let message = format!("author {:?} is a name, not an IRI; kept out of oa:annotatedBy", name.lexical());
                        self.note(NoteKind::LiteralAuthor, t, message);
                        true
                    }
                    _ => false,
                },
                annotea::BODY => match &t.object {
                    Term::Literal(text) => {
                        let id = self.minter.mint(&crate::model::MintStrategy::Blank);
                        annotation.bodies.push(EmbeddedText::new(id, text.lexical()).into());
                        true
                    }
                    Term::Iri(body) => {
                        annotation.bodies.push(ExternalResource::new(body.clone()).into());
                        true
                    }
                    Term::Blank(_) => false,
                },
                annotea::RELATED => match &t.object {
                    Term::Iri(related) => {
                        annotation.bodies.push(ExternalResource::new(related.clone()).into());
                        true
                    }
                    Term::Literal(_) => {
                        self.note(NoteKind::LiteralRelated, t, "a:related must name a resource to become a body");
                        true
                    }
                    Term::Blank(_) => false,
                },
                annotea::CONTEXT => {
                    self.note(
                        NoteKind::ContextNeedsReview,
                        t,
                        "a:context has no general mapping; describe the segment as a Specific Resource by hand",
                    );
                    true
                }
                annotea::CREATED if t.object.as_literal().is_some() => {
                    created.push(t);
                    true
                }
                annotea::MODIFIED if t.object.as_literal().is_some() => {
                    modified.push(t);
                    true
                }
                _ => false,
            };
            if mapped {
                self.consumed.insert(t);
            }
        }
        annotation.annotated_at = self.pick_timestamp(&created, &modified);
        annotation
    }

    /// a:modified wins over a:created; among several values of the same
    /// property the latest wins. Losers are reported.
    fn pick_timestamp(&mut self, created: &[&Triple], modified: &[&Triple]) -> Option<String> {
        let lexical = |t: &Triple| t.object.as_literal().map(|l| l.lexical().to_owned()).unwrap_or_default();
        fn latest<'t>(ts: &[&'t Triple]) -> Option<&'t Triple> {
            ts.iter().copied().max_by_key(|t| t.object.as_literal().map(|l| l.lexical()))
        }
        let winner = latest(modified).or_else(|| latest(created))?;
        let value = lexical(winner);
        for &t in created.iter().chain(modified) {
            if std::ptr::eq(t, winner) {
                continue;
            }
            let dropped = lexical(t);
            self.note(NoteKind::DroppedTimestamp, t, format!("{dropped:?} dropped in favour of {value:?}"));
            if t.predicate.as_str() == annotea::CREATED && winner.predicate.as_str() == annotea::MODIFIED && dropped > value {
                self.note(NoteKind::ModifiedBeforeCreated, winner, format!("modified {value:?} precedes created {dropped:?}"));
            }
        }
        Some(value)
    }
}
