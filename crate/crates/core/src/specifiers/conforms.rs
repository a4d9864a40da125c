use super::SpecifierError;
use crate::model::Iri;

const DEFAULT_TABLE: &str = include_str!("../../data/conforms-to.txt");

/// Media type to fragment syntax lookup. Consulted only on request;
/// nothing in the model infers `dcterms:conformsTo` by itself.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConformsToTable {
    entries: Vec<(String, Iri)>,
}

impl Default for ConformsToTable {
    fn default() -> Self {
        ConformsToTable::parse(DEFAULT_TABLE).expect("bundled table parses")
    }
}

impl ConformsToTable {
    pub fn parse(text: &str) -> Result<Self, SpecifierError> {
        let mut entries = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = crate::util::strip_line_comment(raw);
            let mut tokens = line.split_whitespace();
            let Some(media_type) = tokens.next() else { continue };
            let err = |message: String| SpecifierError::TableSyntax { line: idx + 1, message };
            let spec = tokens.next().ok_or_else(|| err("missing fragment syntax IRI".into()))?;
            if let Some(extra) = tokens.next() {
                return Err(err(format!("unexpected token {extra:?}")));
            }
            if !media_type.contains('/') {
                return Err(err(format!("{media_type:?} is not a media type")));
            }
            let spec = Iri::new(spec).map_err(|e| err(e.to_string()))?;
            entries.push((media_type.to_ascii_lowercase(), spec));
        }
        Ok(ConformsToTable { entries })
    }

    /// Exact match first, then `type/*`. Parameters after `;` are ignored.
    pub fn lookup(&self, media_type: &str) -> Option<&Iri> {
        let essence = media_type.split(';').next().unwrap_or_default().trim().to_ascii_lowercase();
        let wildcard = essence.split('/').next().map(|t| format!("{t}/*"));
        self.entries
            .iter()
            .find(|(m, _)| *m == essence)
            .or_else(|| self.entries.iter().find(|(m, _)| Some(m) == wildcard.as_ref()))
            .map(|(_, spec)| spec)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::vocab::{MEDIA_FRAGMENTS_SPEC, RFC5147_SPEC};

    #[test]
    fn bundled_table() {
        let table = ConformsToTable::default();
        assert_eq!(table.lookup("text/plain").unwrap().as_str(), RFC5147_SPEC);
        assert_eq!(table.lookup("text/plain; charset=utf-8").unwrap().as_str(), RFC5147_SPEC);
        assert_eq!(table.lookup("image/png").unwrap().as_str(), MEDIA_FRAGMENTS_SPEC);
        assert_eq!(table.lookup("video/mp4").unwrap().as_str(), MEDIA_FRAGMENTS_SPEC);
        assert_eq!(table.lookup("audio/ogg").unwrap().as_str(), MEDIA_FRAGMENTS_SPEC);
        assert_eq!(table.lookup("text/html"), None);
    }

    #[test]
    fn rejects_incomplete_lines() {
        assert!(matches!(
            ConformsToTable::parse("# c\ntext/plain\n"),
            Err(SpecifierError::TableSyntax { line: 2, .. })
        ));
    }
}
