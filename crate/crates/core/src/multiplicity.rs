//! Choice, Composite and List, and what multiple bodies and targets mean.
//!
//! Every body slot is related to every target slot. Inside a slot a
//! Composite or List contributes all of its leaves (a List in order), and a
//! Choice contributes one of its items: the first one by default, or each
//! in turn when all alternatives are requested.

use thiserror::Error;

use crate::model::{Annotation, NodeId, ResourceRef};
use crate::specifiers::Selector;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MultiplicityError {
    #[error("multiplicity construct {0} has no items")]
    EmptyConstruct(NodeId),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ConstructKind {
    /// Use exactly one item.
    Choice,
    /// Use all items, in any order.
    Composite,
    /// Use all items, in the given order.
    List,
}

impl ConstructKind {
    pub fn class_iri(self) -> &'static str {
        use crate::vocab::oa;
        match self {
            ConstructKind::Choice => oa::CHOICE,
            ConstructKind::Composite => oa::COMPOSITE,
            ConstructKind::List => oa::LIST,
        }
    }
}

/// A multiplicity construct over bodies/targets (`T = ResourceRef`) or
/// over selectors (`T = Selector`). Item order is always preserved.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Construct<T> {
    pub id: NodeId,
    pub kind: ConstructKind,
    pub items: Vec<T>,
}

impl<T> Construct<T> {
    pub fn new(id: NodeId, kind: ConstructKind, items: Vec<T>) -> Self {
        Construct { id, kind, items }
    }
}

/// Values that may themselves be a construct of the same kind of value.
pub trait Nested: Sized {
    fn as_construct(&self) -> Option<&Construct<Self>>;
}

impl Nested for ResourceRef {
    fn as_construct(&self) -> Option<&Construct<Self>> {
        match self {
            ResourceRef::Construct(c) => Some(c),
            _ => None,
        }
    }
}

impl Nested for Selector {
    fn as_construct(&self) -> Option<&Construct<Self>> {
        match self {
            Selector::Construct(c) => Some(c),
            _ => None,
        }
    }
}

/// Depth-first leaves; a Choice contributes only its default (first) item.
pub fn flatten_leaves<T: Nested>(construct: &Construct<T>) -> Result<Vec<&T>, MultiplicityError> {
    let mut out = Vec::new();
    collect_default_leaves(construct, &mut out)?;
    Ok(out)
}

fn collect_default_leaves<'a, T: Nested>(
    construct: &'a Construct<T>,
    out: &mut Vec<&'a T>,
) -> Result<(), MultiplicityError> {
    if construct.items.is_empty() {
        return Err(MultiplicityError::EmptyConstruct(construct.id.clone()));
    }
    let items = match construct.kind {
        ConstructKind::Choice => &construct.items[..1],
        ConstructKind::Composite | ConstructKind::List => &construct.items[..],
    };
    for item in items {
        match item.as_construct() {
            Some(inner) => collect_default_leaves(inner, out)?,
            None => out.push(item),
        }
    }
    Ok(())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ExpandMode {
    /// Each Choice resolves to its first item.
    #[default]
    Default,
    /// One interpretation per Choice branch, in item order.
    AllAlternatives,
}

/// One concrete reading: these bodies are about this set of targets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Interpretation {
    pub body_set: Vec<ResourceRef>,
    pub target_set: Vec<ResourceRef>,
    /// Identity of the Composite or List that supplied the target set.
    pub target_set_id: Option<NodeId>,
}

pub fn expand(annotation: &Annotation, mode: ExpandMode) -> Result<Vec<Interpretation>, MultiplicityError> {
    for slot in annotation.bodies.iter().chain(&annotation.targets) {
        if let Some(c) = slot.as_construct() {
            check_non_empty(c)?;
        }
    }
    let target_alts: Vec<Alternative<'_>> = annotation
        .targets
        .iter()
        .map(|t| alternatives(t, mode))
        .collect::<Vec<_>>()
        .into_iter()
        .flatten()
        .collect();
    let mut out = Vec::new();
    if annotation.bodies.is_empty() {
        for (targets, set_id) in &target_alts {
            out.push(Interpretation {
                body_set: Vec::new(),
                target_set: targets.iter().map(|t| (*t).clone()).collect(),
                target_set_id: set_id.clone(),
            });
        }
        return Ok(out);
    }
    for body in &annotation.bodies {
        for (bodies, _) in alternatives(body, mode) {
            for (targets, set_id) in &target_alts {
                out.push(Interpretation {
                    body_set: bodies.iter().map(|b| (*b).clone()).collect(),
                    target_set: targets.iter().map(|t| (*t).clone()).collect(),
                    target_set_id: set_id.clone(),
                });
            }
        }
    }
    Ok(out)
}

fn check_non_empty<T: Nested>(construct: &Construct<T>) -> Result<(), MultiplicityError> {
    if construct.items.is_empty() {
        return Err(MultiplicityError::EmptyConstruct(construct.id.clone()));
    }
    construct
        .items
        .iter()
        .filter_map(Nested::as_construct)
        .try_for_each(check_non_empty)
}

type Alternative<'a> = (Vec<&'a ResourceRef>, Option<NodeId>);

/// All ways one slot can be read. Assumes no empty constructs.
fn alternatives(slot: &ResourceRef, mode: ExpandMode) -> Vec<Alternative<'_>> {
    let Some(construct) = slot.as_construct() else {
        return vec![(vec![slot], None)];
    };
    match construct.kind {
        ConstructKind::Choice => match mode {
            ExpandMode::Default => alternatives(&construct.items[0], mode),
            ExpandMode::AllAlternatives => construct
                .items
                .iter()
                .flat_map(|item| alternatives(item, mode))
                .collect(),
        },
        ConstructKind::Composite | ConstructKind::List => {
            let mut acc: Vec<Vec<&ResourceRef>> = vec![Vec::new()];
            for item in &construct.items {
                let item_alts = alternatives(item, mode);
                acc = acc
                    .iter()
                    .flat_map(|prefix| {
                        item_alts.iter().map(move |(leaves, _)| {
                            let mut next = prefix.clone();
                            next.extend(leaves.iter().copied());
                            next
                        })
                    })
                    .collect();
            }
            acc.into_iter().map(|leaves| (leaves, Some(construct.id.clone()))).collect()
        }
    }
}
