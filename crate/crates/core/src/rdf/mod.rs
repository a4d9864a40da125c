//! RDF graphs, the Turtle subset codec, and the mapping between graphs and
//! typed annotations.

mod graph;
mod iso;
mod lift;
mod lower;
pub mod ntriples;
mod skolem;
mod turtle;

pub use graph::{Graph, Literal, LiteralError, Term, Triple};
pub use iso::isomorphic;
pub use lift::{annotation_roots, lift, LiftError};
pub use lower::{lower, lower_all};
pub use skolem::skolemize;
pub use turtle::{parse_turtle, serialize_turtle, SyntaxError};
