use std::collections::HashMap;

use crate::model::{NodeId, SkolemBase};
use crate::rdf::{Graph, Term, Triple};

/// Replaces every blank node with `base` + a counter. Labels are numbered in
/// lexicographic order, skipping IRIs the graph already uses, so the result
/// depends only on the graph.
pub fn skolemize(graph: &Graph, base: &SkolemBase) -> Graph {
    let taken = graph.iris();
    let mut names = HashMap::new();
    let mut counter = 0usize;
    for label in graph.blank_labels() {
        let iri = loop {
            let candidate = base.join(&format!("b{counter}"));
            counter += 1;
            if !taken.contains(candidate.as_str()) {
                break candidate;
            }
        };
        names.insert(label.to_owned(), iri);
    }
    let mut out: Graph = graph
        .iter()
        .map(|t| {
            let subject = match &t.subject {
                NodeId::Blank(b) => NodeId::Iri(names[b.as_str()].clone()),
                iri => iri.clone(),
            };
            let object = match &t.object {
                Term::Blank(b) => Term::Iri(names[b.as_str()].clone()),
                other => other.clone(),
            };
            Triple { subject, predicate: t.predicate.clone(), object }
        })
        .collect();
    for (prefix, ns) in graph.prefixes() {
        out.set_prefix(prefix.clone(), ns.clone());
    }
    out
}
