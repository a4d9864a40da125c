//! Build a comment annotation in code, validate it and print it as Turtle.

use oa_kit::model::{validate, Annotation, EmbeddedText, ExternalResource, Iri, MintStrategy, NodeId, NodeMinter};
use oa_kit::rdf::{lower, serialize_turtle};
use oa_kit::vocab::oa;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut minter = NodeMinter::new();
    let annotation = Annotation::new(NodeId::iri("http://ex.org/anno/1")?)
        .with_motivation(Iri::new(oa::EDITING)?)
        .with_body(EmbeddedText::new(minter.mint(&MintStrategy::Blank), "Typo in the second paragraph.").with_format("text/plain"))
        .with_target(ExternalResource::new(Iri::new("http://ex.org/page.html")?));

    let report = validate(&annotation);
    println!("valid: {} ({} warnings)", report.is_valid(), report.warning_count());
    print!("{}", serialize_turtle(&lower(&annotation)));

    // Dropping the target breaks the model's one hard requirement.
    let mut broken = annotation.clone();
    broken.targets.clear();
    for finding in validate(&broken).errors() {
        println!("{} at {}: {}", finding.code, finding.path, finding.message);
    }
    Ok(())
}
