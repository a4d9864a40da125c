//! Motivation registries: broader concepts, custom entries and cycles.

use oa_kit::model::{Iri, MotivationRegistry};
use oa_kit::vocab::oa;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let bundled = MotivationRegistry::default();
    for m in bundled.entries() {
        println!("bundled: {}", m.iri);
    }

    let custom = MotivationRegistry::parse(
        "oa:editing\n\
         http://ex.org/motivation/proofreading oa:editing\n\
         http://ex.org/motivation/spelling http://ex.org/motivation/proofreading\n",
    )?;
    let spelling = custom.resolve(&Iri::new("http://ex.org/motivation/spelling")?)?;
    let broader: Vec<String> = spelling.broader.iter().map(ToString::to_string).collect();
    println!("{} is narrower than {}", spelling.iri, broader.join(", "));
    assert!(broader.iter().any(|b| b == oa::EDITING));

    let cyclic = MotivationRegistry::parse("http://ex.org/a http://ex.org/b\nhttp://ex.org/b http://ex.org/a\n")?;
    match cyclic.resolve(&Iri::new("http://ex.org/a")?) {
        Ok(_) => println!("no cycle?"),
        Err(e) => println!("rejected: {e}"),
    }
    Ok(())
}
