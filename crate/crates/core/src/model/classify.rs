use serde::Serialize;

use super::{ModelError, ResourceRef};
use crate::vocab::oa;

/// Role a leaf body plays in an annotation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum BodyRole {
    Comment,
    /// Embedded text labelled `oa:Tag`.
    TextualTag,
    /// An IRI used as a label. Consumers must not dereference it for display.
    SemanticTag,
}

pub fn classify_body(body: &ResourceRef) -> Result<BodyRole, ModelError> {
    let is_tag = |classes: &std::collections::BTreeSet<super::Iri>| {
        classes.iter().any(|c| c.as_str() == oa::TAG)
    };
    match body {
        ResourceRef::EmbeddedText(t) if is_tag(&t.classes) => Ok(BodyRole::TextualTag),
        ResourceRef::External(r) if is_tag(&r.classes) => Ok(BodyRole::SemanticTag),
        ResourceRef::EmbeddedText(_) | ResourceRef::External(_) => Ok(BodyRole::Comment),
        other => Err(ModelError::UnsupportedRole(other.kind_name())),
    }
}
