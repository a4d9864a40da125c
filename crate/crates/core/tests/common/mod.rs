//! Fixture access and brute-force oracles shared by the integration tests.
#![allow(dead_code)]

use std::path::{Path, PathBuf};

use oa_kit::anchor::TextDocument;
use oa_kit::model::{Annotation, ExternalResource, Iri, NodeId, ResourceRef};
use oa_kit::multiplicity::{Construct, ConstructKind};
use oa_kit::rdf::{annotation_roots, lift, parse_turtle, Graph};

pub fn fixture(rel: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(rel)
}

pub fn read_fixture(rel: &str) -> String {
    std::fs::read_to_string(fixture(rel)).unwrap_or_else(|e| panic!("{rel}: {e}"))
}

/// Files in a fixture directory with the given extension, sorted.
pub fn fixtures_in(dir: &str, ext: &str) -> Vec<PathBuf> {
    let mut out: Vec<PathBuf> = std::fs::read_dir(fixture(dir))
        .unwrap()
        .map(|e| e.unwrap().path())
        .filter(|p| p.extension().is_some_and(|e| e == ext))
        .collect();
    out.sort();
    out
}

pub fn graph_of(rel: &str) -> Graph {
    parse_turtle(&read_fixture(rel)).unwrap_or_else(|e| panic!("{rel}: {e}"))
}

pub fn annotations_of(rel: &str) -> Vec<Annotation> {
    let g = graph_of(rel);
    annotation_roots(&g).iter().map(|r| lift(&g, r).unwrap_or_else(|e| panic!("{rel}: {e}"))).collect()
}

/// Reads the `# error-at: LINE:COLUMN` header of a malformed fixture.
pub fn expected_error_position(text: &str) -> Option<(usize, usize)> {
    let (line, column) = text.lines().next()?.strip_prefix("# error-at: ")?.split_once(':')?;
    Some((line.trim().parse().ok()?, column.trim().parse().ok()?))
}

pub fn doc(text: &str) -> TextDocument {
    TextDocument::new(Iri::new("urn:x:doc").unwrap(), text)
}

/// Every start offset at which `needle` occurs, by direct comparison.
pub fn scan(haystack: &[char], needle: &[char]) -> Vec<usize> {
    let mut out = Vec::new();
    if needle.is_empty() || needle.len() > haystack.len() {
        return out;
    }
    for start in 0..=haystack.len() - needle.len() {
        if (0..needle.len()).all(|i| haystack[start + i] == needle[i]) {
            out.push(start);
        }
    }
    out
}

/// Number of places where `prefix + exact + suffix` occurs with `exact`
/// starting at some offset.
pub fn context_occurrences(doc: &[char], prefix: &str, exact: &str, suffix: &str) -> usize {
    let whole: Vec<char> = prefix.chars().chain(exact.chars()).chain(suffix.chars()).collect();
    scan(doc, &whole).len()
}

// ---- multiplicity -------------------------------------------------------

pub fn leaf(n: usize) -> ResourceRef {
    ExternalResource::new(Iri::new(format!("http://ex.org/leaf{n}")).unwrap()).into()
}

/// Every construct of height at most `height` (a leaf has height 1) with
/// one to `max_items` items, over all three kinds. Leaves and constructs
/// get distinct ids.
pub fn all_constructs(height: usize, max_items: usize) -> Vec<ResourceRef> {
    let mut counter = 0usize;
    skeletons(height, max_items)
        .iter()
        .filter(|s| matches!(s, Skeleton::Node(..)))
        .map(|s| instantiate(s, &mut counter))
        .collect()
}

#[derive(Clone)]
enum Skeleton {
    Leaf,
    Node(ConstructKind, Vec<Skeleton>),
}

fn skeletons(height: usize, max_items: usize) -> Vec<Skeleton> {
    let mut out = vec![Skeleton::Leaf];
    if height <= 1 {
        return out;
    }
    let children = skeletons(height - 1, max_items);
    for kind in [ConstructKind::Choice, ConstructKind::Composite, ConstructKind::List] {
        let mut seqs: Vec<Vec<Skeleton>> = vec![Vec::new()];
        for _ in 0..max_items {
            seqs = seqs
                .iter()
                .flat_map(|s| {
                    children.iter().map(move |c| {
                        let mut n = s.clone();
                        n.push(c.clone());
                        n
                    })
                })
                .collect();
            for s in &seqs {
                out.push(Skeleton::Node(kind, s.clone()));
            }
        }
    }
    out
}

fn instantiate(s: &Skeleton, counter: &mut usize) -> ResourceRef {
    *counter += 1;
    let n = *counter;
    match s {
        Skeleton::Leaf => leaf(n),
        Skeleton::Node(kind, items) => {
            let id = NodeId::blank(format!("c{n}")).unwrap();
            ResourceRef::Construct(Construct::new(id, *kind, items.iter().map(|i| instantiate(i, counter)).collect()))
        }
    }
}

/// The Choice nodes of a slot in pre-order, with their branch counts.
fn choices(r: &ResourceRef, out: &mut Vec<(NodeId, usize)>) {
    if let ResourceRef::Construct(c) = r {
        if c.kind == ConstructKind::Choice {
            out.push((c.id.clone(), c.items.len()));
        }
        for item in &c.items {
            choices(item, out);
        }
    }
}

fn pick<'a>(assignment: &[(NodeId, usize)], c: &'a Construct<ResourceRef>) -> &'a ResourceRef {
    let (_, branch) = assignment.iter().find(|(id, _)| *id == c.id).expect("every choice is assigned");
    &c.items[*branch]
}

fn leaves_under(r: &ResourceRef, assignment: &[(NodeId, usize)], out: &mut Vec<String>) {
    match r {
        ResourceRef::Construct(c) if c.kind == ConstructKind::Choice => leaves_under(pick(assignment, c), assignment, out),
        ResourceRef::Construct(c) => c.items.iter().for_each(|i| leaves_under(i, assignment, out)),
        leaf => out.push(leaf.id().to_string()),
    }
}

fn set_id(r: &ResourceRef, assignment: &[(NodeId, usize)]) -> Option<String> {
    match r {
        ResourceRef::Construct(c) if c.kind == ConstructKind::Choice => set_id(pick(assignment, c), assignment),
        ResourceRef::Construct(c) => Some(c.id.to_string()),
        _ => None,
    }
}

/// All readings of one slot, found by trying every combination of branch
/// choices (including choices made irrelevant by an enclosing choice) and
/// keeping each distinct reading once, in odometer order with the first
/// Choice in pre-order as the most significant digit.
pub fn brute_force_readings(slot: &ResourceRef, all_alternatives: bool) -> Vec<(Vec<String>, Option<String>)> {
    let mut cs = Vec::new();
    choices(slot, &mut cs);
    let mut digits = vec![0usize; cs.len()];
    let mut out: Vec<(Vec<String>, Option<String>)> = Vec::new();
    loop {
        let assignment: Vec<(NodeId, usize)> = cs.iter().zip(&digits).map(|((id, _), d)| (id.clone(), *d)).collect();
        let mut leaves = Vec::new();
        leaves_under(slot, &assignment, &mut leaves);
        let reading = (leaves, set_id(slot, &assignment));
        if !out.contains(&reading) {
            out.push(reading);
        }
        if !all_alternatives {
            return out;
        }
        // Advance the odometer, least significant digit last.
        let mut i = cs.len();
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            digits[i] += 1;
            if digits[i] < cs[i].1 {
                break;
            }
            digits[i] = 0;
        }
    }
}

/// Readings of a whole annotation: body slots × body readings × target
/// readings, target slots flattened first.
pub fn brute_force_expand(a: &Annotation, all_alternatives: bool) -> Vec<(Vec<String>, Vec<String>, Option<String>)> {
    let targets: Vec<(Vec<String>, Option<String>)> =
        a.targets.iter().flat_map(|t| brute_force_readings(t, all_alternatives)).collect();
    let mut out = Vec::new();
    if a.bodies.is_empty() {
        for (t, id) in &targets {
            out.push((Vec::new(), t.clone(), id.clone()));
        }
        return out;
    }
    for body in &a.bodies {
        for (b, _) in brute_force_readings(body, all_alternatives) {
            for (t, id) in &targets {
                out.push((b.clone(), t.clone(), id.clone()));
            }
        }
    }
    out
}
