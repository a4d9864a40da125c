use std::collections::BTreeSet;
use std::fmt::Write;

use indexmap::IndexMap;

use crate::model::{Iri, NodeId};
use crate::rdf::{Graph, Literal, Term};
use crate::vocab::{oa, rdf, xsd, NAMESPACES};

/// Writes `graph` as Turtle. Subjects come IRIs first, then blank nodes,
/// each group in lexicographic order; `rdf:type` leads each subject and
/// other predicates follow in IRI order. Only namespaces that are used get
/// a prefix line.
///
/// Properties that follow a local convention rather than the published
/// vocabulary get a `#` comment above their subject.
pub fn serialize_turtle(graph: &Graph) -> String {
    let mut subjects: IndexMap<&NodeId, IndexMap<&Iri, Vec<&Term>>> = IndexMap::new();
    for t in graph {
        subjects
            .entry(&t.subject)
            .or_default()
            .entry(&t.predicate)
            .or_default()
            .push(&t.object);
    }
    subjects.sort_by(|a, _, b, _| subject_key(a).cmp(&subject_key(b)));

    let mut used = BTreeSet::new();
    let mut body = String::new();
    for (subject, predicates) in &mut subjects {
        predicates.sort_by(|a, _, b, _| {
            (a.as_str() != rdf::TYPE, a.as_str()).cmp(&(b.as_str() != rdf::TYPE, b.as_str()))
        });
        for note in convention_notes(predicates) {
            let _ = writeln!(body, "# {note}");
        }
        let subject_text = node(subject, &mut used);
        let _ = write!(body, "{subject_text}");
        let multi = predicates.len() > 1;
        for (i, (predicate, objects)) in predicates.iter().enumerate() {
            let predicate_text = if predicate.as_str() == rdf::TYPE {
                "a".to_owned()
            } else {
                iri(predicate, &mut used)
            };
            let objects: Vec<String> = objects.iter().map(|o| term(o, &mut used)).collect();
            if i == 0 {
                let _ = write!(body, " {predicate_text} {}", objects.join(", "));
            } else {
                let _ = write!(body, " ;\n    {predicate_text} {}", objects.join(", "));
            }
        }
        body.push_str(" .\n");
        if multi {
            body.push('\n');
        }
    }

    let mut out = String::new();
    for (prefix, ns) in NAMESPACES {
        if used.contains(prefix) {
            let _ = writeln!(out, "@prefix {prefix}: <{ns}> .");
        }
    }
    if !out.is_empty() && !body.is_empty() {
        out.push('\n');
    }
    out.push_str(body.trim_end_matches('\n'));
    if !body.is_empty() {
        out.push('\n');
    }
    out
}

fn convention_notes(predicates: &IndexMap<&Iri, Vec<&Term>>) -> Vec<&'static str> {
    let has = |p: &str| predicates.keys().any(|k| k.as_str() == p);
    let typed = |class: &str| {
        predicates
            .iter()
            .any(|(k, objects)| k.as_str() == rdf::TYPE && objects.iter().any(|o| o.as_iri().is_some_and(|i| i.as_str() == class)))
    };
    let mut notes = Vec::new();
    if has(oa::CACHED_SOURCE) {
        notes.push("local convention: oa:cachedSource links to an archived copy of the source");
    }
    if typed(oa::HTTP_REQUEST_STATE) && has(rdf::VALUE) {
        notes.push("local convention: rdf:value holds the request headers, one CRLF-separated block");
    }
    notes
}

fn subject_key(node: &NodeId) -> (bool, &str) {
    match node {
        NodeId::Iri(i) => (false, i.as_str()),
        NodeId::Blank(b) => (true, b.as_str()),
    }
}

fn node(node: &NodeId, used: &mut BTreeSet<&'static str>) -> String {
    match node {
        NodeId::Iri(i) => iri(i, used),
        NodeId::Blank(b) => b.to_string(),
    }
}

fn term(term: &Term, used: &mut BTreeSet<&'static str>) -> String {
    match term {
        Term::Iri(i) => iri(i, used),
        Term::Blank(b) => b.to_string(),
        Term::Literal(l) => literal(l, used),
    }
}

fn iri(value: &Iri, used: &mut BTreeSet<&'static str>) -> String {
    for (prefix, ns) in NAMESPACES {
        if let Some(local) = value.as_str().strip_prefix(ns) {
            if is_safe_local(local) {
                used.insert(prefix);
                return format!("{prefix}:{local}");
            }
        }
    }
    format!("<{value}>")
}

fn is_safe_local(local: &str) -> bool {
    let mut chars = local.chars();
    chars.next().is_some_and(|c| c.is_alphanumeric() || c == '_')
        && local.chars().all(|c| c.is_alphanumeric() || matches!(c, '_' | '-' | '.'))
        && !local.ends_with('.')
}

fn literal(lit: &Literal, used: &mut BTreeSet<&'static str>) -> String {
    let lexical = lit.lexical();
    match (lit.datatype().map(Iri::as_str), lit.lang()) {
        (Some(xsd::INTEGER), _) if is_integer(lexical) => lexical.to_owned(),
        (Some(xsd::DECIMAL), _) if is_decimal(lexical) => lexical.to_owned(),
        (Some(dt), _) if dt == format!("{}boolean", crate::vocab::XSD) && matches!(lexical, "true" | "false") => {
            lexical.to_owned()
        }
        (Some(_), _) => format!("{}^^{}", quote(lexical), typed_iri(lit, used)),
        (None, Some(lang)) => format!("{}@{lang}", quote(lexical)),
        (None, None) => quote(lexical),
    }
}

fn typed_iri(lit: &Literal, used: &mut BTreeSet<&'static str>) -> String {
    let dt = lit.datatype().expect("typed literal");
    if let Some(local) = dt.as_str().strip_prefix(crate::vocab::XSD) {
        if is_safe_local(local) {
            return format!("<{}{local}>", crate::vocab::XSD);
        }
    }
    iri(dt, used)
}

fn is_integer(s: &str) -> bool {
    let digits = s.strip_prefix(['+', '-']).unwrap_or(s);
    !digits.is_empty() && digits.chars().all(|c| c.is_ascii_digit())
}

fn is_decimal(s: &str) -> bool {
    let body = s.strip_prefix(['+', '-']).unwrap_or(s);
    match body.split_once('.') {
        Some((int, frac)) => {
            int.chars().all(|c| c.is_ascii_digit())
                && !frac.is_empty()
                && frac.chars().all(|c| c.is_ascii_digit())
        }
        None => false,
    }
}

pub(crate) fn quote(value: &str) -> String {
    let mut out = String::with_capacity(value.len() + 2);
    out.push('"');
    for c in value.chars() {
        match c {
            '"' => out.push_str("\\\""),
            '\\' => out.push_str("\\\\"),
            '\n' => out.push_str("\\n"),
            '\r' => out.push_str("\\r"),
            '\t' => out.push_str("\\t"),
            c if c.is_control() => {
                let _ = write!(out, "\\u{:04X}", c as u32);
            }
            c => out.push(c),
        }
    }
    out.push('"');
    out
}
