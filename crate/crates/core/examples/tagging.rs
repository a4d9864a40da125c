//! Textual and semantic tags, and how bodies are classified.

use oa_kit::model::{classify_body, Annotation, EmbeddedText, ExternalResource, Iri, NodeId};
use oa_kit::multiplicity::{Construct, ConstructKind};
use oa_kit::vocab::oa;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let tag = Iri::new(oa::TAG)?;
    let image = ExternalResource::new(Iri::new("http://ex.org/images/bubble-chamber.jpg")?);
    let annotation = Annotation::new(NodeId::iri("http://ex.org/anno/tags")?)
        .with_motivation(Iri::new(oa::TAGGING)?)
        .with_body(EmbeddedText::new(NodeId::blank("t1")?, "physics").with_class(tag.clone()))
        .with_body(ExternalResource::new(Iri::new("http://dbpedia.org/resource/Particle_physics")?).with_class(tag))
        .with_body(EmbeddedText::new(NodeId::blank("c1")?, "Nice picture!"))
        .with_target(image);

    for body in &annotation.bodies {
        println!("{:<50} {:?}", body.id().to_string(), classify_body(body)?);
    }

    // Roles belong to leaves; a construct has to be taken apart first.
    let choice = Construct::new(NodeId::blank("ch")?, ConstructKind::Choice, annotation.bodies.clone());
    println!("construct: {}", classify_body(&choice.into()).unwrap_err());
    Ok(())
}
