//! Styling with CSS classes and extracting a class's declarations.

use oa_kit::model::{validate, Annotation, Iri, NodeId, StyleRef};
use oa_kit::specifiers::{select_style_declarations, SpecificResource};

const SHEET: &str = ".yellow { background-color: yellow; }\n.strike { text-decoration: line-through }\n";

fn main() -> Result<(), Box<dyn std::error::Error>> {
    println!("yellow: {}", select_style_declarations(SHEET, "yellow")?);
    println!("green:  {}", select_style_declarations(SHEET, "green").unwrap_err());
    println!("list:   {}", select_style_declarations(".a, .b { color: red }", "a").unwrap_err());

    let highlight = SpecificResource::new(NodeId::blank("sr")?, Iri::new("http://ex.org/page.html")?).with_style_class("strike");
    let styled = Annotation::new(NodeId::iri("http://ex.org/anno/style")?)
        .with_target(highlight)
        .with_style(StyleRef::EmbeddedCss { id: NodeId::blank("css")?, chars: SHEET.into() });
    println!("styled annotation findings: {:?}", validate(&styled).codes());

    // A styleClass with no stylesheet on the annotation is only a warning.
    let mut unstyled = styled.clone();
    unstyled.styled_by = None;
    println!("without a stylesheet: {:?}", validate(&unstyled).codes());
    Ok(())
}
