//! Replace blank nodes with stable IRIs before publishing a graph.

use oa_kit::model::{Iri, MintStrategy, NodeMinter, SkolemBase};
use oa_kit::rdf::{parse_turtle, serialize_turtle, skolemize};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let graph = parse_turtle(
        "@prefix oa: <http://www.w3.org/ns/oa#> .\n\
         <http://ex.org/anno> a oa:Annotation ;\n\
           oa:hasTarget [ a oa:SpecificResource ; oa:hasSource <http://ex.org/page> ;\n\
                          oa:hasSelector [ a oa:TextQuoteSelector ; oa:exact \"anything\" ] ] .",
    )?;
    let base = SkolemBase::new(Iri::new("http://ex.org/.well-known/genid/")?)?;
    let skolem = skolemize(&graph, &base);
    println!("{} blank nodes before, {} after", graph.blank_labels().len(), skolem.blank_labels().len());
    print!("{}", serialize_turtle(&skolem));

    let mut minter = NodeMinter::new();
    for strategy in [MintStrategy::Blank, MintStrategy::UuidUrn, MintStrategy::Skolem(base)] {
        println!("{strategy:?}: {}", minter.mint(&strategy));
    }
    Ok(())
}
