//! Anchor text selectors in a local document, and make new ones.

use oa_kit::anchor::{make_text_position, make_text_quote, resolve_text_quote, TextDocument};
use oa_kit::model::{Iri, NodeId};
use oa_kit::specifiers::TextQuoteSelector;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let doc = TextDocument::new(
        Iri::new("http://ex.org/doc")?,
        "Open annotation lets anyone annotate anything. Open annotation is a model, not an application.\n",
    );

    let bare = TextQuoteSelector { id: NodeId::blank("q")?, exact: "Open annotation".into(), prefix: None, suffix: None };
    println!("no context: {}", resolve_text_quote(&doc, &bare).unwrap_err());

    // Quote the second occurrence with 32 code points of context either side.
    let made = make_text_quote(NodeId::blank("q2")?, &doc, 47, 62, 32)?;
    println!("prefix={:?} exact={:?} suffix={:?}", made.prefix, made.exact, made.suffix);
    let found = resolve_text_quote(&doc, &made)?;
    println!("resolved to {}..{} {:?}", found.start, found.end, found.text);

    let position = make_text_position(NodeId::blank("p")?, &doc, 5, 15)?;
    println!("position {}..{} = {:?}", position.start, position.end, doc.slice(position.start, position.end)?);
    println!("out of range: {}", make_text_position(NodeId::blank("p")?, &doc, 90, 200).unwrap_err());
    Ok(())
}
