//! Parse Turtle, lift it to the typed model, lower it back and compare.
//!
//! Usage: `cargo run --example turtle_roundtrip [FILE.ttl]`

use oa_kit::rdf::{annotation_roots, isomorphic, lift, lower_all, ntriples, parse_turtle, serialize_turtle};

const DEFAULT: &str = concat!(env!("CARGO_MANIFEST_DIR"), "/fixtures/turtle/worked-example.ttl");

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let path = std::env::args().nth(1).unwrap_or_else(|| DEFAULT.to_owned());
    let graph = parse_turtle(&std::fs::read_to_string(&path)?)?;
    let annotations = annotation_roots(&graph)
        .iter()
        .map(|root| lift(&graph, root))
        .collect::<Result<Vec<_>, _>>()?;
    for a in &annotations {
        println!("{}: {} bodies, {} targets, {} extension triples", a.id, a.bodies.len(), a.targets.len(), a.extensions.len());
    }

    let lowered = lower_all(&annotations);
    let text = serialize_turtle(&lowered);
    let reparsed = parse_turtle(&text)?;
    println!("{} triples in, {} out, isomorphic: {}", graph.len(), reparsed.len(), isomorphic(&graph, &reparsed));
    println!("--- Turtle ---\n{text}--- N-Triples ---\n{}", ntriples::write(&reparsed));
    Ok(())
}
