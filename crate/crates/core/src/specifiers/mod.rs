//! Specific resources and their specifiers: selectors, states and styles.

mod conforms;
pub(crate) mod css;
mod fragment;

use thiserror::Error;

use crate::model::{Iri, NodeId};
use crate::multiplicity::Construct;
use crate::rdf::Term;

pub use crate::model::validate_selector;
pub use conforms::ConformsToTable;
pub use css::{parse_stylesheet, select_style_declarations, CssRule};
pub use fragment::{decompose_fragment_uri, reconstruct_fragment_uri, Fragment};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SpecifierError {
    #[error("source {0:?} already has a fragment component")]
    SourceHasFragment(String),
    #[error("fragment value is empty")]
    EmptyFragmentValue,
    #[error("fragment value {0:?} must not start with \"#\"")]
    LeadingHash(String),
    #[error("{0:?} has no fragment component")]
    NoFragment(String),
    #[error("no rule for class {0:?}")]
    NotFound(String),
    #[error("CSS syntax error at line {line}, column {column}: {message}")]
    CssSyntax { line: usize, column: usize, message: String },
    #[error("line {line}: {message}")]
    TableSyntax { line: usize, message: String },
}

/// A segment, state or styling of a source resource.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpecificResource {
    pub id: NodeId,
    /// The full resource. Never carries a fragment.
    pub source: Iri,
    pub selector: Option<Selector>,
    pub state: Option<State>,
    /// CSS class token, without the leading `.`.
    pub style_class: Option<String>,
    /// Carried and round-tripped, never interpreted.
    pub scope: Option<Iri>,
}

impl SpecificResource {
    pub fn new(id: NodeId, source: Iri) -> Self {
        SpecificResource { id, source, selector: None, state: None, style_class: None, scope: None }
    }

    pub fn with_selector(mut self, selector: impl Into<Selector>) -> Self {
        self.selector = Some(selector.into());
        self
    }

    pub fn with_state(mut self, state: impl Into<State>) -> Self {
        self.state = Some(state.into());
        self
    }

    pub fn with_style_class(mut self, class: impl Into<String>) -> Self {
        self.style_class = Some(class.into());
        self
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Selector {
    Fragment(FragmentSelector),
    TextPosition(TextPositionSelector),
    TextQuote(TextQuoteSelector),
    Svg(SvgSelector),
    Construct(Construct<Selector>),
    /// A selector class this crate does not model, kept verbatim.
    Opaque(OpaqueNode),
}

impl Selector {
    pub fn id(&self) -> &NodeId {
        match self {
            Selector::Fragment(s) => &s.id,
            Selector::TextPosition(s) => &s.id,
            Selector::TextQuote(s) => &s.id,
            Selector::Svg(s) => &s.id,
            Selector::Construct(c) => &c.id,
            Selector::Opaque(o) => &o.id,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FragmentSelector {
    pub id: NodeId,
    pub fragment: Fragment,
}

/// Code-point offsets, 0-based, end exclusive.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TextPositionSelector {
    pub id: NodeId,
    pub start: usize,
    pub end: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TextQuoteSelector {
    pub id: NodeId,
    pub exact: String,
    pub prefix: Option<String>,
    pub suffix: Option<String>,
}

/// SVG region. With `chars` the document is embedded; without, the selector
/// IRI names the SVG document. Geometry is never evaluated.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SvgSelector {
    pub id: NodeId,
    pub chars: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum State {
    Time(TimeState),
    HttpRequest(HttpRequestState),
    Opaque(OpaqueNode),
}

impl State {
    pub fn id(&self) -> &NodeId {
        match self {
            State::Time(s) => &s.id,
            State::HttpRequest(s) => &s.id,
            State::Opaque(o) => &o.id,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TimeState {
    pub id: NodeId,
    pub when: Option<String>,
    /// Archived copies, linked with `oa:cachedSource`.
    pub cached_copies: Vec<Iri>,
}

/// Request headers, written as one CRLF-separated `Name: value` block on
/// `rdf:value`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HttpRequestState {
    pub id: NodeId,
    pub headers: Vec<(String, String)>,
}

impl HttpRequestState {
    pub fn header_block(&self) -> String {
        self.headers
            .iter()
            .map(|(name, value)| format!("{name}: {value}"))
            .collect::<Vec<_>>()
            .join("\r\n")
    }

    pub fn parse_header_block(id: NodeId, block: &str) -> Self {
        let headers = block
            .split("\r\n")
            .filter(|line| !line.is_empty())
            .map(|line| match line.split_once(':') {
                Some((name, value)) => (name.to_owned(), value.trim_start().to_owned()),
                None => (line.to_owned(), String::new()),
            })
            .collect();
        HttpRequestState { id, headers }
    }
}

/// A node of unmodelled type: its outgoing properties, in graph order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OpaqueNode {
    pub id: NodeId,
    pub properties: Vec<(Iri, Term)>,
}

macro_rules! into_selector {
    ($($ty:ty => $variant:ident),*) => {
        $(impl From<$ty> for Selector {
            fn from(s: $ty) -> Self {
                Selector::$variant(s)
            }
        })*
    };
}

into_selector!(
    FragmentSelector => Fragment,
    TextPositionSelector => TextPosition,
    TextQuoteSelector => TextQuote,
    SvgSelector => Svg,
    Construct<Selector> => Construct,
    OpaqueNode => Opaque
);

impl From<TimeState> for State {
    fn from(s: TimeState) -> Self {
        State::Time(s)
    }
}

impl From<HttpRequestState> for State {
    fn from(s: HttpRequestState) -> Self {
        State::HttpRequest(s)
    }
}
