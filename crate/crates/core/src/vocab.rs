//! Namespace IRIs and the vocabulary terms the model reads and writes.

/// Namespace prefixes known to the serializer, in header order.
pub const NAMESPACES: &[(&str, &str)] = &[
    ("oa", OA),
    ("cnt", CNT),
    ("dc", DC),
    ("dcterms", DCTERMS),
    ("dctypes", DCTYPES),
    ("rdf", RDF),
    ("a", ANNOTEA),
    ("ao", AO),
];

pub const OA: &str = "http://www.w3.org/ns/oa#";
pub const CNT: &str = "http://www.w3.org/2011/content#";
pub const DC: &str = "http://purl.org/dc/elements/1.1/";
pub const DCTERMS: &str = "http://purl.org/dc/terms/";
pub const DCTYPES: &str = "http://purl.org/dc/dcmitype/";
pub const RDF: &str = "http://www.w3.org/1999/02/22-rdf-syntax-ns#";
/// Annotea.
pub const ANNOTEA: &str = "http://www.w3.org/2000/10/annotation-ns#";
/// Annotation Ontology.
pub const AO: &str = "http://purl.org/ao/core/";
pub const XSD: &str = "http://www.w3.org/2001/XMLSchema#";

macro_rules! terms {
    ($ns:literal; $($name:ident = $local:literal),* $(,)?) => {
        $(pub const $name: &str = concat!($ns, $local);)*
    };
}

pub mod oa {
    terms! { "http://www.w3.org/ns/oa#";
        ANNOTATION = "Annotation",
        HAS_BODY = "hasBody",
        HAS_TARGET = "hasTarget",
        IS_MOTIVATED_BY = "isMotivatedBy",
        STYLED_BY = "styledBy",
        ANNOTATED_BY = "annotatedBy",
        ANNOTATED_AT = "annotatedAt",
        TAG = "Tag",
        EDITING = "editing",
        TAGGING = "tagging",
        SPECIFIC_RESOURCE = "SpecificResource",
        HAS_SOURCE = "hasSource",
        HAS_SELECTOR = "hasSelector",
        HAS_STATE = "hasState",
        HAS_SCOPE = "hasScope",
        STYLE_CLASS = "styleClass",
        FRAGMENT_SELECTOR = "FragmentSelector",
        TEXT_POSITION_SELECTOR = "TextPositionSelector",
        TEXT_QUOTE_SELECTOR = "TextQuoteSelector",
        SVG_SELECTOR = "SvgSelector",
        START = "start",
        END = "end",
        EXACT = "exact",
        PREFIX = "prefix",
        SUFFIX = "suffix",
        TIME_STATE = "TimeState",
        HTTP_REQUEST_STATE = "HttpRequestState",
        WHEN = "when",
        CACHED_SOURCE = "cachedSource",
        CHOICE = "Choice",
        COMPOSITE = "Composite",
        LIST = "List",
        ITEM = "item",
    }
}

pub mod cnt {
    terms! { "http://www.w3.org/2011/content#";
        CONTENT_AS_TEXT = "ContentAsText",
        CHARS = "chars",
    }
}

pub mod dc {
    terms! { "http://purl.org/dc/elements/1.1/";
        FORMAT = "format",
    }
}

pub mod dcterms {
    terms! { "http://purl.org/dc/terms/";
        CONFORMS_TO = "conformsTo",
    }
}

pub mod dctypes {
    terms! { "http://purl.org/dc/dcmitype/";
        TEXT = "Text",
        IMAGE = "Image",
        SOUND = "Sound",
        MOVING_IMAGE = "MovingImage",
    }
}

pub mod rdf {
    terms! { "http://www.w3.org/1999/02/22-rdf-syntax-ns#";
        TYPE = "type",
        VALUE = "value",
        FIRST = "first",
        REST = "rest",
        NIL = "nil",
        LIST = "List",
    }
}

pub mod annotea {
    terms! { "http://www.w3.org/2000/10/annotation-ns#";
        ANNOTATION = "Annotation",
        ANNOTATES = "annotates",
        AUTHOR = "author",
        BODY = "body",
        CONTEXT = "context",
        CREATED = "created",
        MODIFIED = "modified",
        RELATED = "related",
    }
}

pub mod xsd {
    terms! { "http://www.w3.org/2001/XMLSchema#";
        INTEGER = "integer",
        STRING = "string",
        DECIMAL = "decimal",
    }
}

/// Media Fragments URI 1.0.
pub const MEDIA_FRAGMENTS_SPEC: &str = "http://www.w3.org/TR/media-frags/";
/// RFC 5147 text/plain fragments.
pub const RFC5147_SPEC: &str = "http://tools.ietf.org/rfc/rfc5147";

/// Expands `prefix:local` against [`NAMESPACES`].
pub fn expand_curie(curie: &str) -> Option<String> {
    let (prefix, local) = curie.split_once(':')?;
    NAMESPACES
        .iter()
        .find(|(p, _)| *p == prefix)
        .map(|(_, ns)| format!("{ns}{local}"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn namespace_table_is_exact() {
        let table: Vec<_> = NAMESPACES.to_vec();
        assert_eq!(
            table,
            vec![
                ("oa", "http://www.w3.org/ns/oa#"),
                ("cnt", "http://www.w3.org/2011/content#"),
                ("dc", "http://purl.org/dc/elements/1.1/"),
                ("dcterms", "http://purl.org/dc/terms/"),
                ("dctypes", "http://purl.org/dc/dcmitype/"),
                ("rdf", "http://www.w3.org/1999/02/22-rdf-syntax-ns#"),
                ("a", "http://www.w3.org/2000/10/annotation-ns#"),
                ("ao", "http://purl.org/ao/core/"),
            ]
        );
    }

    #[test]
    fn terms_live_in_their_namespace() {
        assert!(oa::IS_MOTIVATED_BY.starts_with(OA));
        assert!(cnt::CHARS.starts_with(CNT));
        assert!(rdf::TYPE.starts_with(RDF));
        assert!(annotea::ANNOTATES.starts_with(ANNOTEA));
        assert_eq!(expand_curie("oa:editing").as_deref(), Some(oa::EDITING));
        assert_eq!(expand_curie("ex:editing"), None);
    }
}
