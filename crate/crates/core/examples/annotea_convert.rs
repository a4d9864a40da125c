//! Convert a legacy Annotea record and show what needed attention.

use oa_kit::annotea::convert_annotea;
use oa_kit::rdf::{lower_all, parse_turtle, serialize_turtle};

const RECORD: &str = include_str!("../fixtures/annotea/all-properties.ttl");

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let (annotations, report) = convert_annotea(&parse_turtle(RECORD)?)?;
    for (property, count) in &report.properties {
        println!("a:{property:<10} {count}");
    }
    for note in &report.notes {
        println!("{:?}: {}", note.kind, note.message);
    }
    print!("{}", serialize_turtle(&lower_all(&annotations)));
    Ok(())
}
