use super::SpecifierError;
use crate::model::Iri;

/// Fragment component recorded with `rdf:value`, plus the fragment syntax it
/// follows. The media type alone does not tell which one applies, so
/// `conforms_to` is only ever set explicitly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Fragment {
    pub value: String,
    pub conforms_to: Option<Iri>,
}

impl Fragment {
    pub fn new(value: impl Into<String>) -> Self {
        Fragment { value: value.into(), conforms_to: None }
    }

    pub fn conforming_to(mut self, spec: Iri) -> Self {
        self.conforms_to = Some(spec);
        self
    }

    pub(crate) fn check_value(value: &str) -> Result<(), SpecifierError> {
        if value.is_empty() {
            Err(SpecifierError::EmptyFragmentValue)
        } else if value.starts_with('#') {
            Err(SpecifierError::LeadingHash(value.to_owned()))
        } else {
            Ok(())
        }
    }
}

/// Source, then `#`, then the fragment value. Plain byte concatenation.
///
/// Works on IRI references, so relative sources such as `target1` are fine.
pub fn reconstruct_fragment_uri(source: &str, fragment: &Fragment) -> Result<String, SpecifierError> {
    if source.contains('#') {
        return Err(SpecifierError::SourceHasFragment(source.to_owned()));
    }
    Fragment::check_value(&fragment.value)?;
    let mut uri = String::with_capacity(source.len() + 1 + fragment.value.len());
    uri.push_str(source);
    uri.push('#');
    uri.push_str(&fragment.value);
    Ok(uri)
}

/// Splits at the first `#`.
pub fn decompose_fragment_uri(
    uri: &str,
    conforms_to: Option<Iri>,
) -> Result<(String, Fragment), SpecifierError> {
    let Some((source, value)) = uri.split_once('#') else {
        return Err(SpecifierError::NoFragment(uri.to_owned()));
    };
    if value.is_empty() {
        return Err(SpecifierError::NoFragment(uri.to_owned()));
    }
    Fragment::check_value(value)?;
    Ok((source.to_owned(), Fragment { value: value.to_owned(), conforms_to }))
}
