//! Open Annotation data model toolkit.
//!
//! - [`model`]: annotations, bodies, targets, motivations, tag roles and
//!   validation.
//! - [`specifiers`]: specific resources, selectors, states, styles and
//!   fragment URIs.
//! - [`multiplicity`]: Choice, Composite and List, and expansion into
//!   concrete body/target interpretations.
//! - [`rdf`]: graphs, the Turtle subset codec, lift/lower between graphs
//!   and the typed model, skolemization and isomorphism.
//! - [`anchor`]: resolving selectors against local documents.
//! - [`annotea`]: conversion of legacy Annotea graphs.
//! - [`cli`]: the `oa-kit` command line.

pub mod anchor;
pub mod annotea;
pub mod cli;
pub mod model;
pub mod multiplicity;
pub mod rdf;
pub mod specifiers;
pub mod vocab;

mod util;
