//! Resolving selectors against local documents.
//!
//! Text offsets count Unicode code points (not bytes, not UTF-16 units),
//! 0-based and end-exclusive. Quote matching is exact; when prefix and
//! suffix cannot single out one occurrence the match is refused rather
//! than guessed.

mod media;
mod targets;

use serde::Serialize;
use thiserror::Error;

use crate::model::{Iri, NodeId};
use crate::specifiers::{TextPositionSelector, TextQuoteSelector};

pub use media::{parse_media_fragment, MediaFragment};
pub use targets::{anchor_annotation, Anchored, AnchorOutcome, DocumentSet};

#[derive(Debug, Clone, PartialEq, Eq, Error, Serialize)]
#[serde(tag = "error", rename_all = "kebab-case")]
pub enum AnchorError {
    #[error("span {start}..{end} is outside a document of {len} code points")]
    OutOfRange { start: usize, end: usize, len: usize },
    #[error("start {start} is after end {end}")]
    InvertedSpan { start: usize, end: usize },
    #[error("quoted text is empty")]
    EmptyQuote,
    #[error("quote {exact:?} does not occur in the document")]
    NotFound { exact: String },
    #[error("quote {exact:?} matches equally well at offsets {offsets:?}")]
    AmbiguousMatch { exact: String, offsets: Vec<usize> },
    #[error("unsupported media fragment dimension {dimension:?}")]
    UnsupportedDimension { dimension: String },
    #[error("malformed media fragment {value:?}: {reason}")]
    MalformedFragment { value: String, reason: String },
    #[error("no local document bound to {document}")]
    NoDocument { document: String },
    #[error("selector cannot be anchored: {reason}")]
    Unsupported { reason: String },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum AnchorMethod {
    Position,
    Quote,
}

/// A resolved character span: `text` is `content[start..end)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AnchorResult {
    pub start: usize,
    pub end: usize,
    pub text: String,
    pub method: AnchorMethod,
}

/// A loaded source document. Content never changes after loading.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TextDocument {
    id: Iri,
    chars: Vec<char>,
}

impl TextDocument {
    pub fn new(id: Iri, content: &str) -> Self {
        TextDocument { id, chars: content.chars().collect() }
    }

    pub fn id(&self) -> &Iri {
        &self.id
    }

    /// Length in code points.
    pub fn len(&self) -> usize {
        self.chars.len()
    }

    pub fn is_empty(&self) -> bool {
        self.chars.is_empty()
    }

    pub fn content(&self) -> String {
        self.chars.iter().collect()
    }

    pub fn slice(&self, start: usize, end: usize) -> Result<String, AnchorError> {
        self.check_span(start, end)?;
        Ok(self.chars[start..end].iter().collect())
    }

    fn check_span(&self, start: usize, end: usize) -> Result<(), AnchorError> {
        if start > end {
            return Err(AnchorError::InvertedSpan { start, end });
        }
        if end > self.len() {
            return Err(AnchorError::OutOfRange { start, end, len: self.len() });
        }
        Ok(())
    }

    fn occurrences(&self, needle: &[char]) -> Vec<usize> {
        if needle.is_empty() || needle.len() > self.len() {
            return Vec::new();
        }
        self.chars
            .windows(needle.len())
            .enumerate()
            .filter(|(_, w)| *w == needle)
            .map(|(i, _)| i)
            .collect()
    }
}

pub fn resolve_text_position(doc: &TextDocument, sel: &TextPositionSelector) -> Result<AnchorResult, AnchorError> {
    let text = doc.slice(sel.start, sel.end)?;
    Ok(AnchorResult { start: sel.start, end: sel.end, text, method: AnchorMethod::Position })
}

/// Finds every occurrence of `exact`, scores one point each for a matching
/// prefix and suffix, and accepts the best occurrence only if it is unique.
pub fn resolve_text_quote(doc: &TextDocument, sel: &TextQuoteSelector) -> Result<AnchorResult, AnchorError> {
    let exact: Vec<char> = sel.exact.chars().collect();
    if exact.is_empty() {
        return Err(AnchorError::EmptyQuote);
    }
    let prefix: Option<Vec<char>> = sel.prefix.as_ref().map(|p| p.chars().collect());
    let suffix: Option<Vec<char>> = sel.suffix.as_ref().map(|s| s.chars().collect());
    let score = |start: usize| {
        let end = start + exact.len();
        let before = prefix
            .as_ref()
            .is_some_and(|p| start >= p.len() && doc.chars[start - p.len()..start] == p[..]);
        let after = suffix
            .as_ref()
            .is_some_and(|s| end + s.len() <= doc.len() && doc.chars[end..end + s.len()] == s[..]);
        usize::from(before) + usize::from(after)
    };

    let found = doc.occurrences(&exact);
    let Some(best) = found.iter().map(|&s| score(s)).max() else {
        return Err(AnchorError::NotFound { exact: sel.exact.clone() });
    };
    let winners: Vec<usize> = found.into_iter().filter(|&s| score(s) == best).collect();
    match winners.as_slice() {
        [start] => Ok(AnchorResult {
            start: *start,
            end: start + exact.len(),
            text: sel.exact.clone(),
            method: AnchorMethod::Quote,
        }),
        _ => Err(AnchorError::AmbiguousMatch { exact: sel.exact.clone(), offsets: winners }),
    }
}

/// Quotes `[start, end)` with up to `context_len` code points either side.
/// Context clipped to nothing is left out.
pub fn make_text_quote(
    id: NodeId,
    doc: &TextDocument,
    start: usize,
    end: usize,
    context_len: usize,
) -> Result<TextQuoteSelector, AnchorError> {
    let exact = doc.slice(start, end)?;
    let prefix = doc.slice(start.saturating_sub(context_len), start)?;
    let suffix = doc.slice(end, end.saturating_add(context_len).min(doc.len()))?;
    let non_empty = |s: String| (!s.is_empty()).then_some(s);
    Ok(TextQuoteSelector { id, exact, prefix: non_empty(prefix), suffix: non_empty(suffix) })
}

pub fn make_text_position(
    id: NodeId,
    doc: &TextDocument,
    start: usize,
    end: usize,
) -> Result<TextPositionSelector, AnchorError> {
    doc.check_span(start, end)?;
    Ok(TextPositionSelector { id, start, end })
}
