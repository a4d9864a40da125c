//! Expanding Choice, Composite and List into concrete readings.

use oa_kit::model::{Annotation, ExternalResource, Iri, NodeId, ResourceRef};
use oa_kit::multiplicity::{expand, Construct, ConstructKind, ExpandMode};

fn res(name: &str) -> ResourceRef {
    ExternalResource::new(Iri::new(format!("http://ex.org/{name}")).unwrap()).into()
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let annotation = Annotation::new(NodeId::iri("http://ex.org/anno")?)
        .with_body(Construct::new(NodeId::iri("http://ex.org/choice1")?, ConstructKind::Choice, vec![res("body1"), res("body2")]))
        .with_target(Construct::new(NodeId::iri("http://ex.org/comp1")?, ConstructKind::Composite, vec![res("target1"), res("target2")]));

    for mode in [ExpandMode::Default, ExpandMode::AllAlternatives] {
        println!("{mode:?}:");
        for i in expand(&annotation, mode)? {
            let names = |rs: &[ResourceRef]| rs.iter().map(|r| r.id().to_string()).collect::<Vec<_>>().join(" ");
            let set = i.target_set_id.map(|n| n.to_string()).unwrap_or_default();
            println!("  [{}] about [{}] as {set}", names(&i.body_set), names(&i.target_set));
        }
    }

    let plain = Annotation::new(NodeId::iri("http://ex.org/anno2")?)
        .with_body(res("b1"))
        .with_body(res("b2"))
        .with_target(res("t1"))
        .with_target(res("t2"));
    println!("2 bodies x 2 targets = {} readings", expand(&plain, ExpandMode::Default)?.len());
    Ok(())
}
