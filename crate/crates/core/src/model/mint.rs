use std::collections::HashSet;

use super::{BlankNode, Iri, ModelError, NodeId};

/// Base IRI for skolem identifiers. Always ends with `/`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SkolemBase(Iri);

impl SkolemBase {
    pub fn new(base: Iri) -> Result<Self, ModelError> {
        if base.as_str().ends_with('/') {
            Ok(SkolemBase(base))
        } else {
            Err(ModelError::InvalidSkolemBase(base.into_string()))
        }
    }

    pub fn as_iri(&self) -> &Iri {
        &self.0
    }

    pub(crate) fn join(&self, token: &str) -> Iri {
        Iri::known(&format!("{}{token}", self.0))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MintStrategy {
    Blank,
    UuidUrn,
    Skolem(SkolemBase),
}

/// Hands out fresh node identifiers for one document.
#[derive(Debug, Default)]
pub struct NodeMinter {
    used: HashSet<String>,
    next: usize,
}

impl NodeMinter {
    pub fn new() -> Self {
        Self::default()
    }

    /// A minter that never reissues any of `labels`.
    pub fn avoiding<'a>(labels: impl IntoIterator<Item = &'a str>) -> Self {
        NodeMinter { used: labels.into_iter().map(str::to_owned).collect(), next: 0 }
    }

    pub fn mint(&mut self, strategy: &MintStrategy) -> NodeId {
        match strategy {
            MintStrategy::Blank => NodeId::Blank(self.fresh_blank("b")),
            MintStrategy::UuidUrn => NodeId::Iri(uuid_urn()),
            MintStrategy::Skolem(base) => {
                NodeId::Iri(base.join(&uuid::Uuid::new_v4().simple().to_string()))
            }
        }
    }

    pub fn fresh_blank(&mut self, stem: &str) -> BlankNode {
        loop {
            self.next += 1;
            let label = format!("{stem}{}", self.next);
            if self.used.insert(label.clone()) {
                return BlankNode(label);
            }
        }
    }
}

/// One-off identifier. Blank labels from separate calls are only unique
/// within a [`NodeMinter`]; use one per document.
pub fn mint_node_id(strategy: &MintStrategy) -> NodeId {
    NodeMinter::new().mint(strategy)
}

fn uuid_urn() -> Iri {
    Iri::known(&format!("urn:uuid:{}", uuid::Uuid::new_v4().hyphenated()))
}
