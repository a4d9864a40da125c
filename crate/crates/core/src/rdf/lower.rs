use crate::model::{
    Annotation, BlankNode, EmbeddedText, ExternalResource, Iri, NodeId, NodeMinter, ResourceRef, StyleRef,
};
use crate::multiplicity::{Construct, ConstructKind};
use crate::rdf::{Graph, Literal, Term, Triple};
use crate::specifiers::{OpaqueNode, Selector, SpecificResource, State};
use crate::vocab::{cnt, dc, dcterms, dctypes, oa, rdf};

/// Writes an annotation as triples. Shared nodes (equal values with the
/// same id) produce the same triples once.
pub fn lower(annotation: &Annotation) -> Graph {
    lower_all(std::slice::from_ref(annotation))
}

pub fn lower_all(annotations: &[Annotation]) -> Graph {
    let mut lowerer = Lowerer::default();
    for annotation in annotations {
        lowerer.annotation(annotation);
    }
    lowerer.finish()
}

#[derive(Default)]
struct Lowerer {
    triples: Vec<Triple>,
    /// List nodes and their items; chains are written last so that their
    /// cell labels cannot collide with labels used anywhere else.
    lists: Vec<(NodeId, Vec<Term>)>,
}

fn iri(value: &str) -> Iri {
    Iri::known(value)
}

impl Lowerer {
    fn add(&mut self, subject: &NodeId, predicate: &str, object: impl Into<Term>) {
        self.triples.push(Triple::new(subject.clone(), iri(predicate), object));
    }

    fn add_type(&mut self, subject: &NodeId, class: &str) {
        self.add(subject, rdf::TYPE, iri(class));
    }

    fn annotation(&mut self, a: &Annotation) {
        let id = &a.id;
        self.add_type(id, oa::ANNOTATION);
        for m in &a.motivations {
            self.add(id, oa::IS_MOTIVATED_BY, m.clone());
        }
        if let Some(style) = &a.styled_by {
            let node = self.style(style);
            self.add(id, oa::STYLED_BY, node);
        }
        for body in &a.bodies {
            let node = self.resource(body);
            self.add(id, oa::HAS_BODY, node);
        }
        for target in &a.targets {
            let node = self.resource(target);
            self.add(id, oa::HAS_TARGET, node);
        }
        if let Some(by) = &a.annotated_by {
            self.add(id, oa::ANNOTATED_BY, by.clone());
        }
        if let Some(at) = &a.annotated_at {
            self.add(id, oa::ANNOTATED_AT, Literal::plain(at.clone()));
        }
        self.triples.extend(a.extensions.iter().cloned());
    }

    fn style(&mut self, style: &StyleRef) -> NodeId {
        match style {
            StyleRef::ExternalCss(iri) => NodeId::Iri(iri.clone()),
            StyleRef::EmbeddedCss { id, chars } => {
                self.add_type(id, cnt::CONTENT_AS_TEXT);
                self.add(id, dc::FORMAT, Literal::plain("text/css"));
                self.add(id, cnt::CHARS, Literal::plain(chars.clone()));
                id.clone()
            }
        }
    }

    fn resource(&mut self, r: &ResourceRef) -> NodeId {
        match r {
            ResourceRef::External(e) => self.external(e),
            ResourceRef::EmbeddedText(t) => self.embedded(t),
            ResourceRef::Specific(s) => self.specific(s),
            ResourceRef::Construct(c) => self.construct(c, Self::resource),
        }
    }

    fn external(&mut self, e: &ExternalResource) -> NodeId {
        let id = NodeId::Iri(e.id.clone());
        for class in &e.classes {
            self.add(&id, rdf::TYPE, class.clone());
        }
        if let Some(format) = &e.format {
            self.add(&id, dc::FORMAT, Literal::plain(format.clone()));
        }
        id
    }

    fn embedded(&mut self, t: &EmbeddedText) -> NodeId {
        let id = &t.id;
        if t.has_textual_format() {
            self.add_type(id, dctypes::TEXT);
        }
        self.add_type(id, cnt::CONTENT_AS_TEXT);
        for class in &t.classes {
            self.add(id, rdf::TYPE, class.clone());
        }
        if let Some(format) = &t.format {
            self.add(id, dc::FORMAT, Literal::plain(format.clone()));
        }
        self.add(id, cnt::CHARS, Literal::plain(t.chars.clone()));
        id.clone()
    }

    fn specific(&mut self, s: &SpecificResource) -> NodeId {
        let id = &s.id;
        self.add_type(id, oa::SPECIFIC_RESOURCE);
        self.add(id, oa::HAS_SOURCE, s.source.clone());
        if let Some(state) = &s.state {
            let node = self.state(state);
            self.add(id, oa::HAS_STATE, node);
        }
        if let Some(selector) = &s.selector {
            let node = self.selector(selector);
            self.add(id, oa::HAS_SELECTOR, node);
        }
        if let Some(class) = &s.style_class {
            self.add(id, oa::STYLE_CLASS, Literal::plain(class.clone()));
        }
        if let Some(scope) = &s.scope {
            self.add(id, oa::HAS_SCOPE, scope.clone());
        }
        id.clone()
    }

    fn construct<T>(&mut self, c: &Construct<T>, item: fn(&mut Self, &T) -> NodeId) -> NodeId {
        let id = &c.id;
        self.add_type(id, c.kind.class_iri());
        let mut items = Vec::with_capacity(c.items.len());
        for i in &c.items {
            let node = item(self, i);
            self.add(id, oa::ITEM, node.clone());
            items.push(Term::from(node));
        }
        if c.kind == ConstructKind::List {
            self.add_type(id, rdf::LIST);
            self.lists.push((id.clone(), items));
        }
        id.clone()
    }

    fn selector(&mut self, s: &Selector) -> NodeId {
        match s {
            Selector::Fragment(f) => {
                self.add_type(&f.id, oa::FRAGMENT_SELECTOR);
                self.add(&f.id, rdf::VALUE, Literal::plain(f.fragment.value.clone()));
                if let Some(spec) = &f.fragment.conforms_to {
                    self.add(&f.id, dcterms::CONFORMS_TO, spec.clone());
                }
                f.id.clone()
            }
            Selector::TextPosition(p) => {
                self.add_type(&p.id, oa::TEXT_POSITION_SELECTOR);
                self.add(&p.id, oa::START, Literal::integer(p.start));
                self.add(&p.id, oa::END, Literal::integer(p.end));
                p.id.clone()
            }
            Selector::TextQuote(q) => {
                self.add_type(&q.id, oa::TEXT_QUOTE_SELECTOR);
                self.add(&q.id, oa::EXACT, Literal::plain(q.exact.clone()));
                if let Some(prefix) = &q.prefix {
                    self.add(&q.id, oa::PREFIX, Literal::plain(prefix.clone()));
                }
                if let Some(suffix) = &q.suffix {
                    self.add(&q.id, oa::SUFFIX, Literal::plain(suffix.clone()));
                }
                q.id.clone()
            }
            Selector::Svg(svg) => {
                self.add_type(&svg.id, oa::SVG_SELECTOR);
                if let Some(chars) = &svg.chars {
                    self.add_type(&svg.id, cnt::CONTENT_AS_TEXT);
                    self.add(&svg.id, cnt::CHARS, Literal::plain(chars.clone()));
                }
                svg.id.clone()
            }
            Selector::Construct(c) => self.construct(c, Self::selector),
            Selector::Opaque(o) => self.opaque(o),
        }
    }

    fn state(&mut self, s: &State) -> NodeId {
        match s {
            State::Time(t) => {
                self.add_type(&t.id, oa::TIME_STATE);
                if let Some(when) = &t.when {
                    self.add(&t.id, oa::WHEN, Literal::plain(when.clone()));
                }
                for copy in &t.cached_copies {
                    self.add(&t.id, oa::CACHED_SOURCE, copy.clone());
                }
                t.id.clone()
            }
            State::HttpRequest(h) => {
                self.add_type(&h.id, oa::HTTP_REQUEST_STATE);
                self.add(&h.id, rdf::VALUE, Literal::plain(h.header_block()));
                h.id.clone()
            }
            State::Opaque(o) => self.opaque(o),
        }
    }

    fn opaque(&mut self, o: &OpaqueNode) -> NodeId {
        for (p, obj) in &o.properties {
            self.triples.push(Triple::new(o.id.clone(), p.clone(), obj.clone()));
        }
        o.id.clone()
    }

    fn finish(self) -> Graph {
        let mut graph: Graph = self.triples.into_iter().collect();
        let taken: Vec<String> = graph.blank_labels().into_iter().map(str::to_owned).collect();
        let mut minter = NodeMinter::avoiding(taken.iter().map(String::as_str));
        let mut written = std::collections::HashSet::new();
        for (list, items) in self.lists {
            if !written.insert(list.clone()) {
                continue;
            }
            let mut cell = list;
            let count = items.len();
            for (i, item) in items.into_iter().enumerate() {
                graph.insert(Triple::new(cell.clone(), iri(rdf::FIRST), item));
                let rest: NodeId = if i + 1 == count {
                    NodeId::Iri(iri(rdf::NIL))
                } else {
                    NodeId::Blank(fresh_cell(&mut minter))
                };
                graph.insert(Triple::new(cell, iri(rdf::REST), Term::from(rest.clone())));
                cell = rest;
            }
        }
        graph
    }
}

fn fresh_cell(minter: &mut NodeMinter) -> BlankNode {
    minter.fresh_blank("cell")
}
