use std::collections::HashMap;
use std::sync::OnceLock;

use regex::Regex;
use serde::Serialize;

use crate::model::{
    Annotation, Iri, ModelError, MotivationRegistry, NodeId, ResourceRef, StyleRef,
};
use crate::multiplicity::Construct;
use crate::specifiers::{css, Selector, SpecificResource, State};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Severity {
    Error,
    Warning,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Finding {
    pub severity: Severity,
    pub code: &'static str,
    /// Dotted path from the annotation (or selector) root.
    pub path: String,
    pub message: String,
}

/// Findings in document order; findings on the same node are ordered by code.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub entries: Vec<Finding>,
}

impl ValidationReport {
    pub fn errors(&self) -> impl Iterator<Item = &Finding> {
        self.entries.iter().filter(|f| f.severity == Severity::Error)
    }

    pub fn warnings(&self) -> impl Iterator<Item = &Finding> {
        self.entries.iter().filter(|f| f.severity == Severity::Warning)
    }

    pub fn error_count(&self) -> usize {
        self.errors().count()
    }

    pub fn warning_count(&self) -> usize {
        self.warnings().count()
    }

    pub fn is_valid(&self) -> bool {
        self.error_count() == 0
    }

    pub fn codes(&self) -> Vec<&'static str> {
        self.entries.iter().map(|f| f.code).collect()
    }
}

/// ISO-8601 shape check: a calendar date, optionally followed by a time of
/// day with optional fraction and zone. No normalization is attempted.
pub fn is_timestamp(value: &str) -> bool {
    static RE: OnceLock<Regex> = OnceLock::new();
    let re = RE.get_or_init(|| {
        Regex::new(
            r"^(\d{4})-(\d{2})-(\d{2})(?:T(\d{2}):(\d{2})(?::(\d{2})(?:\.\d+)?)?(?:Z|[+-](\d{2}):(\d{2}))?)?$",
        )
        .expect("static regex")
    });
    let Some(caps) = re.captures(value) else {
        return false;
    };
    let num = |i: usize| caps.get(i).map(|m| m.as_str().parse::<u32>().expect("digits"));
    let in_range = |i: usize, lo: u32, hi: u32| num(i).is_none_or(|n| (lo..=hi).contains(&n));
    in_range(2, 1, 12)
        && in_range(3, 1, 31)
        && in_range(4, 0, 23)
        && in_range(5, 0, 59)
        && in_range(6, 0, 60)
        && in_range(7, 0, 23)
        && in_range(8, 0, 59)
}

/// Validates against the bundled motivation registry.
pub fn validate(annotation: &Annotation) -> ValidationReport {
    validate_with(annotation, &MotivationRegistry::default())
}

pub fn validate_with(annotation: &Annotation, registry: &MotivationRegistry) -> ValidationReport {
    let mut v = Validator::new(annotation.styled_by.is_some());
    v.annotation(annotation, registry);
    v.finish()
}

/// Checks one selector (and any nested selectors) on its own.
pub fn validate_selector(selector: &Selector) -> ValidationReport {
    let mut v = Validator::new(true);
    v.selector(selector, "selector");
    v.finish()
}

struct Validator {
    styled: bool,
    seq: usize,
    found: Vec<(usize, Finding)>,
    /// Every node seen so far, with a rendering of the value it denotes.
    nodes: HashMap<NodeId, String>,
}

impl Validator {
    fn new(styled: bool) -> Self {
        Validator { styled, seq: 0, found: Vec::new(), nodes: HashMap::new() }
    }

    fn finish(mut self) -> ValidationReport {
        self.found.sort_by(|(a, fa), (b, fb)| a.cmp(b).then(fa.code.cmp(fb.code)));
        ValidationReport { entries: self.found.into_iter().map(|(_, f)| f).collect() }
    }

    fn visit(&mut self) {
        self.seq += 1;
    }

    fn push(&mut self, severity: Severity, code: &'static str, path: &str, message: impl Into<String>) {
        self.found.push((self.seq, Finding { severity, code, path: path.to_owned(), message: message.into() }));
    }

    fn error(&mut self, code: &'static str, path: &str, message: impl Into<String>) {
        self.push(Severity::Error, code, path, message);
    }

    /// A node id may appear more than once only if every occurrence denotes
    /// the same value; otherwise the graph form cannot represent it.
    /// Returns false for repeat visits so shared values are checked once.
    fn first_sighting(&mut self, id: &NodeId, rendering: String, path: &str) -> bool {
        match self.nodes.get(id) {
            None => {
                self.nodes.insert(id.clone(), rendering);
                true
            }
            Some(seen) if *seen == rendering => false,
            Some(_) => {
                self.error("conflicting-node", path, format!("{id} is used for two different values"));
                false
            }
        }
    }

    fn annotation(&mut self, a: &Annotation, registry: &MotivationRegistry) {
        self.visit();
        self.nodes.insert(a.id.clone(), "annotation".to_owned());
        if a.targets.is_empty() {
            self.error("missing-target", "annotation.targets", "an annotation needs at least one target");
        }
        if let Some(at) = &a.annotated_at {
            if !is_timestamp(at) {
                self.error("timestamp-format", "annotation.annotatedAt", format!("{at:?} is not an ISO-8601 timestamp"));
            }
        }
        for (i, m) in a.motivations.iter().enumerate() {
            self.motivation(m, registry, &format!("annotation.motivations[{i}]"));
        }
        if let Some(style) = &a.styled_by {
            self.style(style);
        }
        for (i, body) in a.bodies.iter().enumerate() {
            self.resource(body, &format!("annotation.bodies[{i}]"));
        }
        for (i, target) in a.targets.iter().enumerate() {
            self.resource(target, &format!("annotation.targets[{i}]"));
        }
    }

    fn motivation(&mut self, iri: &Iri, registry: &MotivationRegistry, path: &str) {
        match registry.resolve(iri) {
            Err(ModelError::CycleDetected(at)) => {
                self.error("motivation-cycle", path, format!("broader chain of {iri} loops through {at}"));
            }
            Err(e) => self.error("motivation-cycle", path, e.to_string()),
            Ok(m) if !registry.contains(iri) && m.broader.is_empty() => {
                self.push(Severity::Warning, "unknown-motivation", path, format!("{iri} is not a registered motivation"));
            }
            Ok(_) => {}
        }
    }

    fn style(&mut self, style: &StyleRef) {
        let path = "annotation.styledBy";
        self.visit();
        if let StyleRef::EmbeddedCss { id, chars } = style {
            if !self.first_sighting(id, format!("{style:?}"), path) {
                return;
            }
            if let Err(e) = css::parse_stylesheet(chars) {
                self.error("css-syntax", path, e.to_string());
            }
        }
    }

    fn resource(&mut self, r: &ResourceRef, path: &str) {
        self.visit();
        if !self.first_sighting(&r.id(), format!("{r:?}"), path) {
            return;
        }
        match r {
            ResourceRef::External(_) | ResourceRef::EmbeddedText(_) => {}
            ResourceRef::Specific(sr) => self.specific(sr, path),
            ResourceRef::Construct(c) => {
                self.construct(c, path);
                for (i, item) in c.items.iter().enumerate() {
                    self.resource(item, &format!("{path}.items[{i}]"));
                }
            }
        }
    }

    fn construct<T>(&mut self, c: &Construct<T>, path: &str) {
        if c.items.is_empty() {
            self.error("empty-construct", path, format!("{:?} {} has no items", c.kind, c.id));
        }
    }

    fn specific(&mut self, sr: &SpecificResource, path: &str) {
        if sr.source.as_str().contains('#') {
            self.error("source-fragment", &format!("{path}.source"), format!("source {} has a fragment", sr.source));
        }
        if let Some(class) = &sr.style_class {
            let p = format!("{path}.styleClass");
            if !css::is_class_token(class) {
                self.error("style-class-token", &p, format!("{class:?} is not a CSS class name"));
            }
            if !self.styled {
                self.push(Severity::Warning, "unstyled-class", &p, "styleClass without a stylesheet on the annotation");
            }
        }
        if let Some(selector) = &sr.selector {
            self.selector(selector, &format!("{path}.selector"));
        }
        if let Some(state) = &sr.state {
            self.state(state, &format!("{path}.state"));
        }
    }

    fn selector(&mut self, s: &Selector, path: &str) {
        self.visit();
        if !self.first_sighting(s.id(), format!("{s:?}"), path) {
            return;
        }
        match s {
            Selector::Fragment(f) => {
                let value = &f.fragment.value;
                if value.is_empty() {
                    self.error("empty-fragment", path, "fragment value is empty");
                } else if value.starts_with('#') {
                    self.error("fragment-hash", path, format!("fragment value {value:?} starts with \"#\""));
                }
            }
            Selector::TextPosition(p) => {
                if p.start > p.end {
                    self.error("position-order", path, format!("start {} is after end {}", p.start, p.end));
                }
            }
            Selector::TextQuote(q) => {
                if q.exact.is_empty() {
                    self.error("empty-exact", path, "quoted text is empty");
                }
            }
            Selector::Svg(_) | Selector::Opaque(_) => {}
            Selector::Construct(c) => {
                self.construct(c, path);
                for (i, item) in c.items.iter().enumerate() {
                    self.selector(item, &format!("{path}.items[{i}]"));
                }
            }
        }
    }

    fn state(&mut self, s: &State, path: &str) {
        self.visit();
        if !self.first_sighting(s.id(), format!("{s:?}"), path) {
            return;
        }
        match s {
            State::Time(t) => {
                if t.when.is_none() && t.cached_copies.is_empty() {
                    self.error("empty-time-state", path, "time state has neither a time nor a cached copy");
                }
                if let Some(when) = &t.when {
                    if !is_timestamp(when) {
                        self.error("timestamp-format", path, format!("{when:?} is not an ISO-8601 timestamp"));
                    }
                }
            }
            State::HttpRequest(h) => {
                let mut seen: Vec<String> = Vec::new();
                for (name, value) in &h.headers {
                    let lower = name.to_ascii_lowercase();
                    if seen.contains(&lower) {
                        self.error("duplicate-header", path, format!("header {name:?} appears twice"));
                    }
                    seen.push(lower);
                    let bad_name = name.is_empty() || name.chars().any(|c| c == ':' || c.is_whitespace() || c.is_control());
                    let bad_value = value.starts_with([' ', '\t']) || value.contains(['\r', '\n']);
                    if bad_name || bad_value {
                        self.error("header-syntax", path, format!("header {name:?} cannot be written as a header line"));
                    }
                }
            }
            State::Opaque(_) => {}
        }
    }
}
