use std::collections::{BTreeSet, HashMap, HashSet, VecDeque};

use thiserror::Error;

use crate::model::{Annotation, EmbeddedText, ExternalResource, Iri, NodeId, ResourceRef, StyleRef};
use crate::multiplicity::{Construct, ConstructKind};
use crate::rdf::{Graph, Literal, Term, Triple};
use crate::specifiers::{
    Fragment, FragmentSelector, HttpRequestState, OpaqueNode, Selector, SpecificResource, State,
    SvgSelector, TextPositionSelector, TextQuoteSelector, TimeState,
};
use crate::vocab::{cnt, dc, dcterms, dctypes, oa, rdf, xsd};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LiftError {
    #[error("{0} is not typed oa:Annotation")]
    NotAnAnnotation(NodeId),
    #[error("malformed structure at {path}: {message}")]
    MalformedStructure { path: String, message: String },
}

/// Subjects typed `oa:Annotation`, in graph order.
pub fn annotation_roots(graph: &Graph) -> Vec<NodeId> {
    let mut seen = HashSet::new();
    graph
        .iter()
        .filter(|t| t.predicate.as_str() == rdf::TYPE && t.object.as_iri().is_some_and(|o| o.as_str() == oa::ANNOTATION))
        .filter(|t| seen.insert(t.subject.clone()))
        .map(|t| t.subject.clone())
        .collect()
}

/// Reads the annotation rooted at `root` into the typed model.
///
/// Triples reachable from the root that the model does not interpret end up
/// in [`Annotation::extensions`]; selectors and states of unknown classes
/// become [`OpaqueNode`]s. Either way they are written back by `lower`.
pub fn lift(graph: &Graph, root: &NodeId) -> Result<Annotation, LiftError> {
    if !graph.has_type(root, oa::ANNOTATION) {
        return Err(LiftError::NotAnAnnotation(root.clone()));
    }
    let mut lifter = Lifter::new(graph);
    let mut annotation = lifter.annotation(root)?;
    annotation.extensions = lifter.leftovers(root);
    Ok(annotation)
}

struct Lifter<'g> {
    graph: &'g Graph,
    triples: Vec<&'g Triple>,
    by_subject: HashMap<&'g NodeId, Vec<usize>>,
    consumed: HashSet<usize>,
    active: Vec<NodeId>,
}

fn malformed(path: &str, message: impl Into<String>) -> LiftError {
    LiftError::MalformedStructure { path: path.to_owned(), message: message.into() }
}

fn is_plain(lit: &Literal) -> bool {
    lit.lang().is_none()
        && lit.datatype().is_none_or(|dt| dt.as_str() == xsd::STRING)
}

impl<'g> Lifter<'g> {
    fn new(graph: &'g Graph) -> Self {
        let triples: Vec<&Triple> = graph.iter().collect();
        let mut by_subject: HashMap<&NodeId, Vec<usize>> = HashMap::new();
        for (i, t) in triples.iter().enumerate() {
            by_subject.entry(&t.subject).or_default().push(i);
        }
        Lifter { graph, triples, by_subject, consumed: HashSet::new(), active: Vec::new() }
    }

    fn props(&self, node: &NodeId, predicate: &str) -> Vec<(usize, &'g Term)> {
        self.by_subject
            .get(node)
            .into_iter()
            .flatten()
            .filter(|&&i| self.triples[i].predicate.as_str() == predicate)
            .map(|&i| (i, &self.triples[i].object))
            .collect()
    }

    fn has(&self, node: &NodeId, predicate: &str) -> bool {
        !self.props(node, predicate).is_empty()
    }

    fn take_all(&mut self, node: &NodeId, predicate: &str) -> Vec<&'g Term> {
        let found = self.props(node, predicate);
        self.consumed.extend(found.iter().map(|(i, _)| *i));
        found.into_iter().map(|(_, t)| t).collect()
    }

    fn take_one(&mut self, node: &NodeId, predicate: &str, path: &str) -> Result<Option<&'g Term>, LiftError> {
        let found = self.take_all(node, predicate);
        match found.as_slice() {
            [] => Ok(None),
            [one] => Ok(Some(*one)),
            _ => Err(malformed(path, format!("more than one <{predicate}>"))),
        }
    }

    fn take_string(&mut self, node: &NodeId, predicate: &str, path: &str) -> Result<Option<String>, LiftError> {
        match self.take_one(node, predicate, path)? {
            None => Ok(None),
            Some(Term::Literal(lit)) if is_plain(lit) => Ok(Some(lit.lexical().to_owned())),
            Some(_) => Err(malformed(path, format!("<{predicate}> must be a plain string literal"))),
        }
    }

    fn take_iri(&mut self, node: &NodeId, predicate: &str, path: &str) -> Result<Option<Iri>, LiftError> {
        match self.take_one(node, predicate, path)? {
            None => Ok(None),
            Some(Term::Iri(iri)) => Ok(Some(iri.clone())),
            Some(_) => Err(malformed(path, format!("<{predicate}> must be an IRI"))),
        }
    }

    fn take_iris(&mut self, node: &NodeId, predicate: &str, path: &str) -> Result<Vec<Iri>, LiftError> {
        self.take_all(node, predicate)
            .into_iter()
            .map(|t| t.as_iri().cloned().ok_or_else(|| malformed(path, format!("<{predicate}> must be an IRI"))))
            .collect()
    }

    fn types(&self, node: &NodeId) -> Vec<(usize, &'g Iri)> {
        self.props(node, rdf::TYPE)
            .into_iter()
            .filter_map(|(i, t)| t.as_iri().map(|iri| (i, iri)))
            .collect()
    }

    fn has_type(&self, node: &NodeId, class: &str) -> bool {
        self.types(node).iter().any(|(_, t)| t.as_str() == class)
    }

    fn consume_type(&mut self, node: &NodeId, class: &str) {
        for (i, t) in self.types(node) {
            if t.as_str() == class {
                self.consumed.insert(i);
            }
        }
    }

    fn enter(&mut self, node: &NodeId, path: &str) -> Result<(), LiftError> {
        if self.active.contains(node) {
            return Err(malformed(path, format!("{node} contains itself")));
        }
        self.active.push(node.clone());
        Ok(())
    }

    fn leave(&mut self) {
        self.active.pop();
    }

    fn node_of(term: &Term, path: &str) -> Result<NodeId, LiftError> {
        term.as_node().ok_or_else(|| malformed(path, "literal where a resource is expected"))
    }

    fn annotation(&mut self, root: &NodeId) -> Result<Annotation, LiftError> {
        let path = "annotation";
        self.consume_type(root, oa::ANNOTATION);
        let mut annotation = Annotation::new(root.clone());
        annotation.motivations = self.take_iris(root, oa::IS_MOTIVATED_BY, path)?;
        annotation.annotated_by = self.take_iri(root, oa::ANNOTATED_BY, path)?;
        annotation.annotated_at = self.take_string(root, oa::ANNOTATED_AT, path)?;
        if let Some(style) = self.take_one(root, oa::STYLED_BY, path)? {
            annotation.styled_by = Some(self.style(style, "annotation.styledBy")?);
        }
        for (i, body) in self.take_all(root, oa::HAS_BODY).into_iter().enumerate() {
            let p = format!("annotation.bodies[{i}]");
            annotation.bodies.push(self.resource(&Self::node_of(body, &p)?, &p)?);
        }
        for (i, target) in self.take_all(root, oa::HAS_TARGET).into_iter().enumerate() {
            let p = format!("annotation.targets[{i}]");
            annotation.targets.push(self.resource(&Self::node_of(target, &p)?, &p)?);
        }
        Ok(annotation)
    }

    fn style(&mut self, term: &Term, path: &str) -> Result<StyleRef, LiftError> {
        let node = Self::node_of(term, path)?;
        if self.has(&node, cnt::CHARS) {
            self.consume_type(&node, cnt::CONTENT_AS_TEXT);
            let css_format = self
                .props(&node, dc::FORMAT)
                .into_iter()
                .filter(|(_, t)| t.as_literal().is_some_and(|l| is_plain(l) && l.lexical() == "text/css"))
                .map(|(i, _)| i)
                .collect::<Vec<_>>();
            self.consumed.extend(css_format);
            let chars = self.take_string(&node, cnt::CHARS, path)?.expect("checked above");
            return Ok(StyleRef::EmbeddedCss { id: node, chars });
        }
        match node {
            NodeId::Iri(iri) => Ok(StyleRef::ExternalCss(iri)),
            NodeId::Blank(_) => Err(malformed(path, "stylesheet is neither an IRI nor embedded content")),
        }
    }

    fn resource(&mut self, node: &NodeId, path: &str) -> Result<ResourceRef, LiftError> {
        self.enter(node, path)?;
        let result = self.resource_inner(node, path);
        self.leave();
        result
    }

    fn resource_inner(&mut self, node: &NodeId, path: &str) -> Result<ResourceRef, LiftError> {
        if self.has_type(node, oa::SPECIFIC_RESOURCE) || self.has(node, oa::HAS_SOURCE) {
            return Ok(ResourceRef::Specific(Box::new(self.specific(node, path)?)));
        }
        if let Some(kind) = self.construct_kind(node, path)? {
            return Ok(ResourceRef::Construct(self.construct(node, kind, path, Self::resource)?));
        }
        if self.has(node, cnt::CHARS) || self.has_type(node, cnt::CONTENT_AS_TEXT) {
            return Ok(ResourceRef::EmbeddedText(self.embedded(node, path)?));
        }
        match node {
            NodeId::Iri(iri) => {
                let classes: BTreeSet<Iri> = self.take_iris(node, rdf::TYPE, path)?.into_iter().collect();
                let format = self.take_string(node, dc::FORMAT, path)?;
                Ok(ResourceRef::External(ExternalResource { id: iri.clone(), classes, format }))
            }
            NodeId::Blank(_) => Err(malformed(path, format!("blank node {node} has no content"))),
        }
    }

    fn embedded(&mut self, node: &NodeId, path: &str) -> Result<EmbeddedText, LiftError> {
        let chars = self
            .take_string(node, cnt::CHARS, path)?
            .ok_or_else(|| malformed(path, "embedded text without cnt:chars"))?;
        let format = self.take_string(node, dc::FORMAT, path)?;
        let mut text = EmbeddedText::new(node.clone(), chars);
        text.format = format;
        self.consume_type(node, cnt::CONTENT_AS_TEXT);
        if text.has_textual_format() {
            self.consume_type(node, dctypes::TEXT);
        }
        for (i, class) in self.types(node) {
            if !self.consumed.contains(&i) {
                self.consumed.insert(i);
                text.classes.insert(class.clone());
            }
        }
        Ok(text)
    }

    fn construct_kind(&self, node: &NodeId, path: &str) -> Result<Option<ConstructKind>, LiftError> {
        let kinds: Vec<ConstructKind> = [ConstructKind::Choice, ConstructKind::Composite, ConstructKind::List]
            .into_iter()
            .filter(|k| self.has_type(node, k.class_iri()))
            .collect();
        match kinds.as_slice() {
            [] => Ok(None),
            [k] => Ok(Some(*k)),
            _ => Err(malformed(path, "node has more than one multiplicity class")),
        }
    }

    fn construct<T>(
        &mut self,
        node: &NodeId,
        kind: ConstructKind,
        path: &str,
        lift_item: fn(&mut Self, &NodeId, &str) -> Result<T, LiftError>,
    ) -> Result<Construct<T>, LiftError> {
        self.consume_type(node, kind.class_iri());
        let mut item_nodes: Vec<NodeId> = self
            .take_all(node, oa::ITEM)
            .into_iter()
            .map(|t| Self::node_of(t, path))
            .collect::<Result<_, _>>()?;
        if kind == ConstructKind::List {
            self.consume_type(node, rdf::LIST);
            if self.has(node, rdf::FIRST) {
                let chain = self.list_chain(node, path)?;
                if !item_nodes.is_empty() {
                    let mut a = item_nodes.clone();
                    let mut b = chain.clone();
                    a.sort();
                    b.sort();
                    if a != b {
                        return Err(malformed(path, "oa:item values disagree with the rdf:List members"));
                    }
                }
                item_nodes = chain;
            }
        }
        let mut items = Vec::with_capacity(item_nodes.len());
        for (i, item) in item_nodes.iter().enumerate() {
            items.push(lift_item(self, item, &format!("{path}.items[{i}]"))?);
        }
        Ok(Construct::new(node.clone(), kind, items))
    }

    fn list_chain(&mut self, head: &NodeId, path: &str) -> Result<Vec<NodeId>, LiftError> {
        let mut out = Vec::new();
        let mut cell = head.clone();
        let mut seen = HashSet::new();
        loop {
            if !seen.insert(cell.clone()) {
                return Err(malformed(path, "rdf:List is cyclic"));
            }
            let first = self
                .take_one(&cell, rdf::FIRST, path)?
                .ok_or_else(|| malformed(path, "rdf:List cell without rdf:first"))?;
            out.push(Self::node_of(first, path)?);
            let rest = self
                .take_one(&cell, rdf::REST, path)?
                .ok_or_else(|| malformed(path, "rdf:List cell without rdf:rest"))?;
            let rest = Self::node_of(rest, path)?;
            if rest.as_iri().is_some_and(|i| i.as_str() == rdf::NIL) {
                return Ok(out);
            }
            cell = rest;
        }
    }

    fn specific(&mut self, node: &NodeId, path: &str) -> Result<SpecificResource, LiftError> {
        self.consume_type(node, oa::SPECIFIC_RESOURCE);
        let source = self
            .take_iri(node, oa::HAS_SOURCE, path)?
            .ok_or_else(|| malformed(path, "specific resource without oa:hasSource"))?;
        let mut sr = SpecificResource::new(node.clone(), source);
        if let Some(sel) = self.take_one(node, oa::HAS_SELECTOR, path)? {
            let p = format!("{path}.selector");
            sr.selector = Some(self.selector(&Self::node_of(sel, &p)?, &p)?);
        }
        if let Some(state) = self.take_one(node, oa::HAS_STATE, path)? {
            let p = format!("{path}.state");
            sr.state = Some(self.state(&Self::node_of(state, &p)?, &p)?);
        }
        sr.style_class = self.take_string(node, oa::STYLE_CLASS, path)?;
        sr.scope = self.take_iri(node, oa::HAS_SCOPE, path)?;
        Ok(sr)
    }

    fn selector(&mut self, node: &NodeId, path: &str) -> Result<Selector, LiftError> {
        self.enter(node, path)?;
        let result = self.selector_inner(node, path);
        self.leave();
        result
    }

    fn selector_inner(&mut self, node: &NodeId, path: &str) -> Result<Selector, LiftError> {
        let id = node.clone();
        if let Some(kind) = self.construct_kind(node, path)? {
            return Ok(Selector::Construct(self.construct(node, kind, path, Self::selector)?));
        }
        if self.has_type(node, oa::FRAGMENT_SELECTOR) {
            self.consume_type(node, oa::FRAGMENT_SELECTOR);
            let value = self
                .take_string(node, rdf::VALUE, path)?
                .ok_or_else(|| malformed(path, "fragment selector without rdf:value"))?;
            let conforms_to = self.take_iri(node, dcterms::CONFORMS_TO, path)?;
            return Ok(Selector::Fragment(FragmentSelector { id, fragment: Fragment { value, conforms_to } }));
        }
        if self.has_type(node, oa::TEXT_POSITION_SELECTOR) {
            self.consume_type(node, oa::TEXT_POSITION_SELECTOR);
            let start = self.take_offset(node, oa::START, path)?;
            let end = self.take_offset(node, oa::END, path)?;
            return Ok(Selector::TextPosition(TextPositionSelector { id, start, end }));
        }
        if self.has_type(node, oa::TEXT_QUOTE_SELECTOR) {
            self.consume_type(node, oa::TEXT_QUOTE_SELECTOR);
            let exact = self
                .take_string(node, oa::EXACT, path)?
                .ok_or_else(|| malformed(path, "text quote selector without oa:exact"))?;
            let prefix = self.take_string(node, oa::PREFIX, path)?;
            let suffix = self.take_string(node, oa::SUFFIX, path)?;
            return Ok(Selector::TextQuote(TextQuoteSelector { id, exact, prefix, suffix }));
        }
        if self.has_type(node, oa::SVG_SELECTOR) {
            self.consume_type(node, oa::SVG_SELECTOR);
            let chars = self.take_string(node, cnt::CHARS, path)?;
            if chars.is_some() {
                self.consume_type(node, cnt::CONTENT_AS_TEXT);
            }
            return Ok(Selector::Svg(SvgSelector { id, chars }));
        }
        Ok(Selector::Opaque(self.opaque(node)))
    }

    fn take_offset(&mut self, node: &NodeId, predicate: &str, path: &str) -> Result<usize, LiftError> {
        let term = self
            .take_one(node, predicate, path)?
            .ok_or_else(|| malformed(path, format!("missing <{predicate}>")))?;
        term.as_literal()
            .filter(|l| l.datatype().is_some_and(|dt| dt.as_str() == xsd::INTEGER))
            .and_then(|l| l.lexical().parse::<usize>().ok())
            .ok_or_else(|| malformed(path, format!("<{predicate}> must be a non-negative xsd:integer")))
    }

    fn state(&mut self, node: &NodeId, path: &str) -> Result<State, LiftError> {
        let id = node.clone();
        if self.has_type(node, oa::TIME_STATE) {
            self.consume_type(node, oa::TIME_STATE);
            let when = self.take_string(node, oa::WHEN, path)?;
            let cached_copies = self.take_iris(node, oa::CACHED_SOURCE, path)?;
            return Ok(State::Time(TimeState { id, when, cached_copies }));
        }
        if self.has_type(node, oa::HTTP_REQUEST_STATE) {
            self.consume_type(node, oa::HTTP_REQUEST_STATE);
            let block = self.take_string(node, rdf::VALUE, path)?.unwrap_or_default();
            return Ok(State::HttpRequest(HttpRequestState::parse_header_block(id, &block)));
        }
        Ok(State::Opaque(self.opaque(node)))
    }

    fn opaque(&mut self, node: &NodeId) -> OpaqueNode {
        let indices = self.by_subject.get(node).cloned().unwrap_or_default();
        self.consumed.extend(indices.iter().copied());
        OpaqueNode {
            id: node.clone(),
            properties: indices
                .into_iter()
                .map(|i| (self.triples[i].predicate.clone(), self.triples[i].object.clone()))
                .collect(),
        }
    }

    /// Unconsumed triples whose subject is reachable from `root`, without
    /// entering other annotations.
    fn leftovers(&self, root: &NodeId) -> Vec<Triple> {
        let mut reachable: HashSet<&NodeId> = HashSet::new();
        let mut queue: VecDeque<NodeId> = VecDeque::from([root.clone()]);
        let mut owned: Vec<NodeId> = Vec::new();
        while let Some(node) = queue.pop_front() {
            if owned.contains(&node) {
                continue;
            }
            if &node != root && self.graph.has_type(&node, oa::ANNOTATION) {
                continue;
            }
            for &i in self.by_subject.get(&node).into_iter().flatten() {
                if let Some(next) = self.triples[i].object.as_node() {
                    queue.push_back(next);
                }
            }
            owned.push(node);
        }
        reachable.extend(owned.iter());
        self.triples
            .iter()
            .enumerate()
            .filter(|(i, t)| !self.consumed.contains(i) && reachable.contains(&t.subject))
            .map(|(_, t)| (*t).clone())
            .collect()
    }
}
