//! Fragment URIs: joining, splitting and the media-type lookup table.

use oa_kit::model::Iri;
use oa_kit::specifiers::{decompose_fragment_uri, reconstruct_fragment_uri, ConformsToTable, Fragment};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let joined = reconstruct_fragment_uri("target1", &Fragment::new("xywh=1,1,5,5"))?;
    println!("{joined}");

    let table = ConformsToTable::default();
    for media_type in ["image/png", "video/mp4", "text/plain", "application/pdf", "text/html"] {
        match table.lookup(media_type) {
            Some(spec) => println!("{media_type:<16} -> {spec}"),
            None => println!("{media_type:<16} -> (unknown)"),
        }
    }

    let spec: Option<Iri> = table.lookup("image/png").cloned();
    let (source, fragment) = decompose_fragment_uri(&joined, spec)?;
    println!("source={source} value={} conformsTo={:?}", fragment.value, fragment.conforms_to.map(|i| i.to_string()));

    for bad in [("http://ex.org/a#b", "c"), ("http://ex.org/a", "#c"), ("http://ex.org/a", "")] {
        println!("{bad:?}: {}", reconstruct_fragment_uri(bad.0, &Fragment::new(bad.1)).unwrap_err());
    }
    Ok(())
}
