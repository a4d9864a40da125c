use std::collections::{BTreeMap, BTreeSet, HashSet};
use std::fmt;

use indexmap::IndexSet;
use thiserror::Error;

use crate::model::{BlankNode, Iri, NodeId};
use crate::vocab::xsd;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LiteralError {
    #[error("invalid language tag {0:?}")]
    InvalidLanguageTag(String),
}

/// An RDF literal. A datatype and a language tag never occur together.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Literal {
    lexical: String,
    datatype: Option<Iri>,
    lang: Option<String>,
}

impl Literal {
    pub fn plain(lexical: impl Into<String>) -> Self {
        Literal { lexical: lexical.into(), datatype: None, lang: None }
    }

    pub fn typed(lexical: impl Into<String>, datatype: Iri) -> Self {
        Literal { lexical: lexical.into(), datatype: Some(datatype), lang: None }
    }

    pub fn lang_tagged(lexical: impl Into<String>, lang: impl Into<String>) -> Result<Self, LiteralError> {
        let lang = lang.into();
        let valid = !lang.is_empty()
            && lang.split('-').enumerate().all(|(i, part)| {
                !part.is_empty()
                    && part.len() <= 8
                    && part.chars().all(|c| if i == 0 { c.is_ascii_alphabetic() } else { c.is_ascii_alphanumeric() })
            });
        if !valid {
            return Err(LiteralError::InvalidLanguageTag(lang));
        }
        Ok(Literal { lexical: lexical.into(), datatype: None, lang: Some(lang) })
    }

    pub fn integer(value: impl fmt::Display) -> Self {
        Literal::typed(value.to_string(), Iri::known(xsd::INTEGER))
    }

    pub fn lexical(&self) -> &str {
        &self.lexical
    }

    pub fn datatype(&self) -> Option<&Iri> {
        self.datatype.as_ref()
    }

    pub fn lang(&self) -> Option<&str> {
        self.lang.as_deref()
    }

    /// Integer value of an `xsd:integer` or untyped all-digit literal.
    pub fn as_integer(&self) -> Option<i128> {
        let typed_ok = match &self.datatype {
            None => self.lang.is_none(),
            Some(dt) => dt.as_str() == xsd::INTEGER,
        };
        if typed_ok { self.lexical.parse().ok() } else { None }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Term {
    Iri(Iri),
    Blank(BlankNode),
    Literal(Literal),
}

impl Term {
    pub fn as_node(&self) -> Option<NodeId> {
        match self {
            Term::Iri(iri) => Some(NodeId::Iri(iri.clone())),
            Term::Blank(b) => Some(NodeId::Blank(b.clone())),
            Term::Literal(_) => None,
        }
    }

    pub fn as_iri(&self) -> Option<&Iri> {
        match self {
            Term::Iri(iri) => Some(iri),
            _ => None,
        }
    }

    pub fn as_literal(&self) -> Option<&Literal> {
        match self {
            Term::Literal(lit) => Some(lit),
            _ => None,
        }
    }

    pub fn is_blank(&self) -> bool {
        matches!(self, Term::Blank(_))
    }
}

impl From<NodeId> for Term {
    fn from(node: NodeId) -> Self {
        match node {
            NodeId::Iri(iri) => Term::Iri(iri),
            NodeId::Blank(b) => Term::Blank(b),
        }
    }
}

impl From<Iri> for Term {
    fn from(iri: Iri) -> Self {
        Term::Iri(iri)
    }
}

impl From<Literal> for Term {
    fn from(lit: Literal) -> Self {
        Term::Literal(lit)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Triple {
    pub subject: NodeId,
    pub predicate: Iri,
    pub object: Term,
}

impl Triple {
    pub fn new(subject: NodeId, predicate: Iri, object: impl Into<Term>) -> Self {
        Triple { subject, predicate, object: object.into() }
    }

    pub fn has_blank(&self) -> bool {
        self.subject.is_blank() || self.object.is_blank()
    }
}

/// N-Triples form.
impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Term::Iri(i) => write!(f, "<{i}>"),
            Term::Blank(b) => write!(f, "{b}"),
            Term::Literal(l) => {
                f.write_str("\"")?;
                for c in l.lexical().chars() {
                    match c {
                        '"' => f.write_str("\\\"")?,
                        '\\' => f.write_str("\\\\")?,
                        '\n' => f.write_str("\\n")?,
                        '\r' => f.write_str("\\r")?,
                        '\t' => f.write_str("\\t")?,
                        c => write!(f, "{c}")?,
                    }
                }
                f.write_str("\"")?;
                if let Some(dt) = l.datatype() {
                    write!(f, "^^<{dt}>")?;
                } else if let Some(lang) = l.lang() {
                    write!(f, "@{lang}")?;
                }
                Ok(())
            }
        }
    }
}

/// One N-Triples statement, without the line break.
impl fmt::Display for Triple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} <{}> {} .", self.subject, self.predicate, self.object)
    }
}

/// A set of triples. Iteration follows insertion order, which is what
/// carries item order for `oa:item` and multi-valued properties; equality
/// ignores order and prefixes.
#[derive(Debug, Clone, Default)]
pub struct Graph {
    triples: IndexSet<Triple>,
    prefixes: BTreeMap<String, Iri>,
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.triples.len() == other.triples.len() && self.triples.iter().all(|t| other.triples.contains(t))
    }
}

impl Eq for Graph {}

impl Graph {
    pub fn new() -> Self {
        Self::default()
    }

    /// Returns false when the triple was already present.
    pub fn insert(&mut self, triple: Triple) -> bool {
        self.triples.insert(triple)
    }

    pub fn len(&self) -> usize {
        self.triples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.triples.is_empty()
    }

    pub fn contains(&self, triple: &Triple) -> bool {
        self.triples.contains(triple)
    }

    pub fn iter(&self) -> impl Iterator<Item = &Triple> {
        self.triples.iter()
    }

    pub fn triples_about<'a>(&'a self, subject: &'a NodeId) -> impl Iterator<Item = &'a Triple> + 'a {
        self.triples.iter().filter(move |t| &t.subject == subject)
    }

    pub fn objects<'a>(&'a self, subject: &'a NodeId, predicate: &'a str) -> impl Iterator<Item = &'a Term> + 'a {
        self.triples_about(subject)
            .filter(move |t| t.predicate.as_str() == predicate)
            .map(|t| &t.object)
    }

    pub fn has_type(&self, subject: &NodeId, class: &str) -> bool {
        self.objects(subject, crate::vocab::rdf::TYPE)
            .any(|o| o.as_iri().is_some_and(|i| i.as_str() == class))
    }

    pub fn prefixes(&self) -> &BTreeMap<String, Iri> {
        &self.prefixes
    }

    pub fn set_prefix(&mut self, prefix: impl Into<String>, namespace: Iri) {
        self.prefixes.insert(prefix.into(), namespace);
    }

    /// Every blank node label used in subject or object position.
    pub fn blank_labels(&self) -> BTreeSet<&str> {
        let mut labels = BTreeSet::new();
        for t in &self.triples {
            if let NodeId::Blank(b) = &t.subject {
                labels.insert(b.as_str());
            }
            if let Term::Blank(b) = &t.object {
                labels.insert(b.as_str());
            }
        }
        labels
    }

    pub(crate) fn iris(&self) -> HashSet<&str> {
        let mut out = HashSet::new();
        for t in &self.triples {
            if let NodeId::Iri(i) = &t.subject {
                out.insert(i.as_str());
            }
            out.insert(t.predicate.as_str());
            if let Term::Iri(i) = &t.object {
                out.insert(i.as_str());
            }
        }
        out
    }
}

impl FromIterator<Triple> for Graph {
    fn from_iter<I: IntoIterator<Item = Triple>>(iter: I) -> Self {
        Graph { triples: iter.into_iter().collect(), prefixes: BTreeMap::new() }
    }
}

impl Extend<Triple> for Graph {
    fn extend<I: IntoIterator<Item = Triple>>(&mut self, iter: I) {
        self.triples.extend(iter);
    }
}

impl<'a> IntoIterator for &'a Graph {
    type Item = &'a Triple;
    type IntoIter = indexmap::set::Iter<'a, Triple>;
    fn into_iter(self) -> Self::IntoIter {
        self.triples.iter()
    }
}
