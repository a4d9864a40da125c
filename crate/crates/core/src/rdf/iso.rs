use std::collections::hash_map::DefaultHasher;
use std::collections::{BTreeMap, HashMap, HashSet};
use std::hash::{Hash, Hasher};

use crate::model::{BlankNode, NodeId};
use crate::rdf::{Graph, Term, Triple};

/// True iff some bijection between the blank nodes of `a` and `b` maps
/// the triples of `a` exactly onto the triples of `b`.
///
/// Blank nodes are first partitioned by iterated neighbourhood hashing;
/// the remaining choices inside each partition are searched exhaustively,
/// so the answer is exact.
pub fn isomorphic(a: &Graph, b: &Graph) -> bool {
    if a.len() != b.len() {
        return false;
    }
    let (ground_a, blank_a): (Vec<&Triple>, Vec<&Triple>) = a.iter().partition(|t| !t.has_blank());
    let (ground_b, blank_b): (Vec<&Triple>, Vec<&Triple>) = b.iter().partition(|t| !t.has_blank());
    if ground_a.len() != ground_b.len() || !ground_a.iter().all(|t| b.contains(t)) {
        return false;
    }
    let nodes_a = blank_nodes(&blank_a);
    let nodes_b = blank_nodes(&blank_b);
    if nodes_a.len() != nodes_b.len() {
        return false;
    }
    let colors_a = refine(&blank_a, &nodes_a);
    let colors_b = refine(&blank_b, &nodes_b);
    let mut hist_a: BTreeMap<u64, usize> = BTreeMap::new();
    let mut hist_b: BTreeMap<u64, usize> = BTreeMap::new();
    for c in colors_a.values() {
        *hist_a.entry(*c).or_default() += 1;
    }
    for c in colors_b.values() {
        *hist_b.entry(*c).or_default() += 1;
    }
    if hist_a != hist_b {
        return false;
    }

    let target: HashSet<&Triple> = blank_b.iter().copied().collect();
    let mut order: Vec<&BlankNode> = nodes_a.iter().copied().collect();
    order.sort_by_key(|n| (hist_a[&colors_a[n]], colors_a[n], n.as_str()));
    let mut by_color: HashMap<u64, Vec<&BlankNode>> = HashMap::new();
    for n in &nodes_b {
        by_color.entry(colors_b[n]).or_default().push(n);
    }
    let mut touching: HashMap<&BlankNode, Vec<&Triple>> = HashMap::new();
    for t in &blank_a {
        for n in blank_parts(t) {
            touching.entry(n).or_default().push(t);
        }
    }
    let mut search = Search {
        order,
        colors_a: &colors_a,
        by_color: &by_color,
        touching: &touching,
        target: &target,
        mapping: HashMap::new(),
        used: HashSet::new(),
    };
    search.extend(0)
}

fn blank_parts(t: &Triple) -> impl Iterator<Item = &BlankNode> {
    let s = match &t.subject {
        NodeId::Blank(b) => Some(b),
        NodeId::Iri(_) => None,
    };
    let o = match &t.object {
        Term::Blank(b) => Some(b),
        _ => None,
    };
    s.into_iter().chain(o)
}

fn blank_nodes<'a>(triples: &[&'a Triple]) -> HashSet<&'a BlankNode> {
    triples.iter().flat_map(|t| blank_parts(t)).collect()
}

fn hash_of(value: impl Hash) -> u64 {
    let mut h = DefaultHasher::new();
    value.hash(&mut h);
    h.finish()
}

/// Colour refinement. Ground neighbours contribute their value; blank
/// neighbours contribute their current colour.
fn refine<'a>(triples: &[&'a Triple], nodes: &HashSet<&'a BlankNode>) -> HashMap<&'a BlankNode, u64> {
    let mut colors: HashMap<&BlankNode, u64> = nodes.iter().map(|n| (*n, 0)).collect();
    let mut classes = 1;
    for _ in 0..=nodes.len() {
        let mut signatures: HashMap<&BlankNode, Vec<u64>> = HashMap::new();
        for t in triples {
            let subject_sig = match &t.subject {
                NodeId::Blank(b) => hash_of(("b", colors[b])),
                NodeId::Iri(i) => hash_of(("i", i)),
            };
            let object_sig = match &t.object {
                Term::Blank(b) => hash_of(("b", colors[b])),
                other => hash_of(("t", other)),
            };
            if let NodeId::Blank(b) = &t.subject {
                signatures.entry(b).or_default().push(hash_of(("out", &t.predicate, object_sig)));
            }
            if let Term::Blank(b) = &t.object {
                signatures.entry(b).or_default().push(hash_of(("in", &t.predicate, subject_sig)));
            }
        }
        let next: HashMap<&BlankNode, u64> = colors
            .iter()
            .map(|(n, c)| {
                let mut sig = signatures.remove(n).unwrap_or_default();
                sig.sort_unstable();
                (*n, hash_of((c, sig)))
            })
            .collect();
        let next_classes = next.values().collect::<HashSet<_>>().len();
        colors = next;
        if next_classes == classes {
            break;
        }
        classes = next_classes;
    }
    colors
}

struct Search<'a, 'g> {
    order: Vec<&'g BlankNode>,
    colors_a: &'a HashMap<&'g BlankNode, u64>,
    by_color: &'a HashMap<u64, Vec<&'g BlankNode>>,
    touching: &'a HashMap<&'g BlankNode, Vec<&'g Triple>>,
    target: &'a HashSet<&'g Triple>,
    mapping: HashMap<&'g BlankNode, &'g BlankNode>,
    used: HashSet<&'g BlankNode>,
}

impl<'g> Search<'_, 'g> {
    fn extend(&mut self, depth: usize) -> bool {
        let Some(&node) = self.order.get(depth) else {
            return true;
        };
        let candidates = self.by_color.get(&self.colors_a[node]).cloned().unwrap_or_default();
        for candidate in candidates {
            if self.used.contains(candidate) {
                continue;
            }
            self.mapping.insert(node, candidate);
            self.used.insert(candidate);
            if self.consistent(node) && self.extend(depth + 1) {
                return true;
            }
            self.mapping.remove(node);
            self.used.remove(candidate);
        }
        false
    }

    /// Every triple touching `node` whose blanks are all mapped must map
    /// onto a triple of the other graph.
    fn consistent(&self, node: &BlankNode) -> bool {
        self.touching.get(node).into_iter().flatten().all(|t| {
            let subject = match &t.subject {
                NodeId::Blank(b) => match self.mapping.get(b) {
                    Some(m) => NodeId::Blank((*m).clone()),
                    None => return true,
                },
                iri => iri.clone(),
            };
            let object = match &t.object {
                Term::Blank(b) => match self.mapping.get(b) {
                    Some(m) => Term::Blank((*m).clone()),
                    None => return true,
                },
                other => other.clone(),
            };
            self.target.contains(&Triple { subject, predicate: t.predicate.clone(), object })
        })
    }
}
