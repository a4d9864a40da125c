//! Specific resources with text selectors, a selector Choice and states.

use oa_kit::model::{validate, Annotation, Iri, NodeId};
use oa_kit::multiplicity::{Construct, ConstructKind};
use oa_kit::rdf::{lower, serialize_turtle};
use oa_kit::specifiers::{
    HttpRequestState, Selector, SpecificResource, TextPositionSelector, TextQuoteSelector, TimeState,
};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let quote = TextQuoteSelector {
        id: NodeId::blank("quote")?,
        exact: "annotate anything".into(),
        prefix: Some("lets anyone ".into()),
        suffix: Some(".".into()),
    };
    let position = TextPositionSelector { id: NodeId::blank("pos")?, start: 28, end: 45 };
    let either = Construct::new(
        NodeId::blank("sel")?,
        ConstructKind::Choice,
        vec![Selector::from(quote), Selector::from(position)],
    );

    let segment = SpecificResource::new(NodeId::blank("sr")?, Iri::new("http://ex.org/page.html")?)
        .with_selector(Selector::Construct(either))
        .with_state(TimeState {
            id: NodeId::blank("when")?,
            when: Some("2013-01-24T12:00:00Z".into()),
            cached_copies: vec![Iri::new("http://archive.example.org/2013/page.html")?],
        });
    let localized = SpecificResource::new(NodeId::blank("sr2")?, Iri::new("http://ex.org/page.html")?).with_state(
        HttpRequestState::parse_header_block(NodeId::blank("req")?, "Accept-Language: fr\r\nAccept: text/html"),
    );

    let annotation = Annotation::new(NodeId::iri("http://ex.org/anno/sel")?).with_target(segment).with_target(localized);
    println!("errors: {}", validate(&annotation).error_count());
    print!("{}", serialize_turtle(&lower(&annotation)));
    Ok(())
}
