//! Typed annotation model: identifiers, annotations, bodies and targets.
//!
//! Everything here is a plain immutable value. Nodes that are shared in the
//! graph (for example one `oa:TimeState` used by two specific resources) are
//! represented by equal values carrying the same [`NodeId`].

mod classify;
mod mint;
mod motivation;
mod validate;

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::multiplicity::Construct;
use crate::rdf::Triple;
use crate::specifiers::SpecificResource;

pub use classify::{classify_body, BodyRole};
pub use mint::{mint_node_id, MintStrategy, NodeMinter, SkolemBase};
pub use motivation::{Motivation, MotivationRegistry};
pub use validate::{
    is_timestamp, validate, validate_selector, validate_with, Finding, Severity, ValidationReport,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ModelError {
    #[error("invalid IRI {0:?}: expected an absolute IRI with a scheme")]
    InvalidIri(String),
    #[error("invalid blank node label {0:?}")]
    InvalidBlankLabel(String),
    #[error("classification applies to leaf bodies only, got a {0}")]
    UnsupportedRole(&'static str),
    #[error("motivation hierarchy has a cycle through {0}")]
    CycleDetected(Iri),
    #[error("skolem base {0} must end with \"/\"")]
    InvalidSkolemBase(String),
    #[error("line {line}: {message}")]
    RegistrySyntax { line: usize, message: String },
}

/// An absolute IRI. Stored verbatim, never normalized.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Iri(String);

impl Iri {
    pub fn new(value: impl Into<String>) -> Result<Self, ModelError> {
        let value = value.into();
        if is_absolute_iri(&value) {
            Ok(Iri(value))
        } else {
            Err(ModelError::InvalidIri(value))
        }
    }

    /// For compile-time vocabulary constants.
    pub(crate) fn known(value: &str) -> Self {
        debug_assert!(is_absolute_iri(value), "{value}");
        Iri(value.to_owned())
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }

    pub fn into_string(self) -> String {
        self.0
    }

    /// The part after the first `#`, if any.
    pub fn fragment(&self) -> Option<&str> {
        self.0.split_once('#').map(|(_, f)| f)
    }
}

fn is_absolute_iri(value: &str) -> bool {
    let Some((scheme, _)) = value.split_once(':') else {
        return false;
    };
    let mut chars = scheme.chars();
    let scheme_ok = chars.next().is_some_and(|c| c.is_ascii_alphabetic())
        && chars.all(|c| c.is_ascii_alphanumeric() || matches!(c, '+' | '-' | '.'));
    scheme_ok
        && !value
            .chars()
            .any(|c| c.is_whitespace() || c.is_control() || matches!(c, '<' | '>' | '"' | '{' | '}' | '|' | '\\' | '^' | '`'))
}

impl fmt::Display for Iri {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl FromStr for Iri {
    type Err = ModelError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Iri::new(s)
    }
}

impl AsRef<str> for Iri {
    fn as_ref(&self) -> &str {
        &self.0
    }
}

impl PartialEq<str> for Iri {
    fn eq(&self, other: &str) -> bool {
        self.0 == other
    }
}

impl PartialEq<&str> for Iri {
    fn eq(&self, other: &&str) -> bool {
        self.0 == *other
    }
}

impl Serialize for Iri {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.0)
    }
}

/// Label of an RDF blank node, without the `_:` marker.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BlankNode(String);

impl BlankNode {
    pub fn new(label: impl Into<String>) -> Result<Self, ModelError> {
        let label = label.into();
        if is_blank_label(&label) {
            Ok(BlankNode(label))
        } else {
            Err(ModelError::InvalidBlankLabel(label))
        }
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

pub(crate) fn is_blank_label(label: &str) -> bool {
    let mut chars = label.chars();
    chars
        .next()
        .is_some_and(|c| c.is_alphanumeric() || c == '_')
        && label
            .chars()
            .all(|c| c.is_alphanumeric() || matches!(c, '_' | '-' | '.'))
        && !label.ends_with('.')
}

impl fmt::Display for BlankNode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "_:{}", self.0)
    }
}

/// Identity of a graph node: an IRI or a blank node.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum NodeId {
    Iri(Iri),
    Blank(BlankNode),
}

impl NodeId {
    pub fn iri(value: impl Into<String>) -> Result<Self, ModelError> {
        Iri::new(value).map(NodeId::Iri)
    }

    pub fn blank(label: impl Into<String>) -> Result<Self, ModelError> {
        BlankNode::new(label).map(NodeId::Blank)
    }

    pub fn as_iri(&self) -> Option<&Iri> {
        match self {
            NodeId::Iri(iri) => Some(iri),
            NodeId::Blank(_) => None,
        }
    }

    pub fn is_blank(&self) -> bool {
        matches!(self, NodeId::Blank(_))
    }
}

impl fmt::Display for NodeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NodeId::Iri(iri) => write!(f, "<{iri}>"),
            NodeId::Blank(b) => b.fmt(f),
        }
    }
}

impl From<Iri> for NodeId {
    fn from(iri: Iri) -> Self {
        NodeId::Iri(iri)
    }
}

impl From<BlankNode> for NodeId {
    fn from(b: BlankNode) -> Self {
        NodeId::Blank(b)
    }
}

impl Serialize for NodeId {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// The root record: bodies related to targets, with provenance and styling.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Annotation {
    pub id: NodeId,
    pub motivations: Vec<Iri>,
    /// May be empty for highlight-only annotations.
    pub bodies: Vec<ResourceRef>,
    pub targets: Vec<ResourceRef>,
    pub annotated_by: Option<Iri>,
    /// ISO-8601 shaped, kept as written.
    pub annotated_at: Option<String>,
    pub styled_by: Option<StyleRef>,
    /// Triples reachable from the annotation that the typed model does not
    /// interpret. Lowering writes them back unchanged.
    pub extensions: Vec<Triple>,
}

impl Annotation {
    pub fn new(id: NodeId) -> Self {
        Annotation {
            id,
            motivations: Vec::new(),
            bodies: Vec::new(),
            targets: Vec::new(),
            annotated_by: None,
            annotated_at: None,
            styled_by: None,
            extensions: Vec::new(),
        }
    }

    pub fn with_motivation(mut self, iri: Iri) -> Self {
        self.motivations.push(iri);
        self
    }

    pub fn with_body(mut self, body: impl Into<ResourceRef>) -> Self {
        self.bodies.push(body.into());
        self
    }

    pub fn with_target(mut self, target: impl Into<ResourceRef>) -> Self {
        self.targets.push(target.into());
        self
    }

    pub fn with_style(mut self, style: StyleRef) -> Self {
        self.styled_by = Some(style);
        self
    }
}

/// Anything that can fill a body or target slot.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ResourceRef {
    External(ExternalResource),
    EmbeddedText(EmbeddedText),
    Specific(Box<SpecificResource>),
    Construct(Construct<ResourceRef>),
}

impl ResourceRef {
    pub fn id(&self) -> NodeId {
        match self {
            ResourceRef::External(r) => NodeId::Iri(r.id.clone()),
            ResourceRef::EmbeddedText(t) => t.id.clone(),
            ResourceRef::Specific(s) => s.id.clone(),
            ResourceRef::Construct(c) => c.id.clone(),
        }
    }

    pub(crate) fn kind_name(&self) -> &'static str {
        match self {
            ResourceRef::External(_) => "external resource",
            ResourceRef::EmbeddedText(_) => "embedded text",
            ResourceRef::Specific(_) => "specific resource",
            ResourceRef::Construct(_) => "multiplicity construct",
        }
    }
}

impl From<ExternalResource> for ResourceRef {
    fn from(r: ExternalResource) -> Self {
        ResourceRef::External(r)
    }
}

impl From<EmbeddedText> for ResourceRef {
    fn from(t: EmbeddedText) -> Self {
        ResourceRef::EmbeddedText(t)
    }
}

impl From<SpecificResource> for ResourceRef {
    fn from(s: SpecificResource) -> Self {
        ResourceRef::Specific(Box::new(s))
    }
}

impl From<Construct<ResourceRef>> for ResourceRef {
    fn from(c: Construct<ResourceRef>) -> Self {
        ResourceRef::Construct(c)
    }
}

/// A resource referenced by IRI, never dereferenced here.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExternalResource {
    pub id: Iri,
    /// e.g. `dctypes:Image` or `oa:Tag`.
    pub classes: BTreeSet<Iri>,
    /// Media type carried by `dc:format`.
    pub format: Option<String>,
}

impl ExternalResource {
    pub fn new(id: Iri) -> Self {
        ExternalResource { id, classes: BTreeSet::new(), format: None }
    }

    pub fn with_class(mut self, class: Iri) -> Self {
        self.classes.insert(class);
        self
    }

    pub fn with_format(mut self, format: impl Into<String>) -> Self {
        self.format = Some(format.into());
        self
    }
}

/// Text carried inside the graph with `cnt:chars`.
///
/// The `cnt:ContentAsText` class is implied and never stored in `classes`.
/// `dctypes:Text` is likewise implied whenever `format` is a `text/*` media
/// type, and is written on lowering.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EmbeddedText {
    pub id: NodeId,
    pub chars: String,
    pub format: Option<String>,
    pub classes: BTreeSet<Iri>,
}

impl EmbeddedText {
    pub fn new(id: NodeId, chars: impl Into<String>) -> Self {
        EmbeddedText { id, chars: chars.into(), format: None, classes: BTreeSet::new() }
    }

    pub fn with_format(mut self, format: impl Into<String>) -> Self {
        self.format = Some(format.into());
        self.normalize_classes();
        self
    }

    pub fn with_class(mut self, class: Iri) -> Self {
        self.classes.insert(class);
        self.normalize_classes();
        self
    }

    pub fn has_textual_format(&self) -> bool {
        self.format.as_deref().is_some_and(is_textual_format)
    }

    /// Drops classes that are implied by the content and format.
    pub fn normalize_classes(&mut self) {
        self.classes.retain(|c| c.as_str() != crate::vocab::cnt::CONTENT_AS_TEXT);
        if self.has_textual_format() {
            self.classes.retain(|c| c.as_str() != crate::vocab::dctypes::TEXT);
        }
    }
}

pub(crate) fn is_textual_format(format: &str) -> bool {
    format.trim().to_ascii_lowercase().starts_with("text/")
}

/// Stylesheet attached with `oa:styledBy`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum StyleRef {
    ExternalCss(Iri),
    EmbeddedCss { id: NodeId, chars: String },
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn iri_requires_scheme() {
        assert!(Iri::new("http://example.org/x").is_ok());
        assert!(Iri::new("urn:uuid:F6C32FCA-4ED8-4B19-9716-60379E4638AE").is_ok());
        assert!(Iri::new("").is_err());
        assert!(Iri::new("target1").is_err());
        assert!(Iri::new(":x").is_err());
        assert!(Iri::new("1a:x").is_err());
        assert!(Iri::new("http://ex.org/a b").is_err());
    }

    #[test]
    fn iri_fragment_is_after_first_hash() {
        let iri = Iri::new("http://ex.org/a#b#c").unwrap();
        assert_eq!(iri.fragment(), Some("b#c"));
    }

    #[test]
    fn blank_labels() {
        assert!(BlankNode::new("b1").is_ok());
        assert!(BlankNode::new("genid-3").is_ok());
        assert!(BlankNode::new("").is_err());
        assert!(BlankNode::new("a b").is_err());
        assert!(BlankNode::new("x.").is_err());
        assert_eq!(NodeId::blank("b2").unwrap().to_string(), "_:b2");
    }

    #[test]
    fn embedded_text_drops_implied_classes() {
        let t = EmbeddedText::new(NodeId::blank("b1").unwrap(), "hi")
            .with_class(Iri::known(crate::vocab::dctypes::TEXT))
            .with_format("text/plain");
        assert!(t.classes.is_empty());
        let t = EmbeddedText::new(NodeId::blank("b1").unwrap(), "hi")
            .with_class(Iri::known(crate::vocab::dctypes::TEXT));
        assert_eq!(t.classes.len(), 1);
    }
}
